//! Graph-combinatorial face machinery: the face criterion, facets from
//! connected subgraphs, the edge graph, the simplex criterion and the vertex
//! and cycle faces.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::faceset::FaceSet;
use crate::functional::{FunctionalRecord, LinearFunctional};
use crate::limits::Limits;
use crate::multigraph::{connected_subgraphs, simple_cycles, Cycle, Multigraph, NodeId, Subgraph};
use crate::polytope::CosmologicalPolytope;

/// A facet of `P_G` together with the connected subgraph it comes from and
/// its supporting functional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub subgraph: Subgraph,
    pub vertex_set: FaceSet,
    pub functional: LinearFunctional,
}

/// JSON face record.
#[derive(Debug, Clone, Serialize)]
pub struct FaceRecord {
    pub vertices: Vec<String>,
    pub dim: i64,
    pub certificate: Option<FunctionalRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecialFace {
    Vertex { node: NodeId, face: FaceSet },
    Cycle { cycle: Cycle, face: FaceSet },
}

impl SpecialFace {
    pub fn face(&self) -> &FaceSet {
        match self {
            SpecialFace::Vertex { face, .. } | SpecialFace::Cycle { face, .. } => face,
        }
    }

    /// Dimension: `deg(v)` for a vertex face, `2d - 2` for a cycle face.
    pub fn dim(&self, g: &Multigraph) -> usize {
        match self {
            SpecialFace::Vertex { node, .. } => g.degree(*node),
            SpecialFace::Cycle { cycle, .. } => 2 * cycle.len() - 2,
        }
    }
}

/// Per-graph caches for the face criteria. Built once, then read-only.
#[derive(Debug, Clone)]
pub struct FaceEngine<'a> {
    polytope: &'a CosmologicalPolytope,
    cycles: Vec<Cycle>,
    /// For each cycle: marks `p_{e_i, v_i}` and reversed marks `p_{e_i, v_{i+1}}`.
    cycle_marks: Vec<(FaceSet, FaceSet)>,
    /// For each node `v`: `{p_e, p_{e,v} : e ∋ v}`.
    stars: Vec<FaceSet>,
    adjacency: Vec<FaceSet>,
}

impl<'a> FaceEngine<'a> {
    /// Requires a graph without isolated nodes.
    pub fn new(polytope: &'a CosmologicalPolytope, limits: &Limits) -> Result<Self> {
        let g = polytope.graph();
        g.require_no_isolated()?;
        let cycles = simple_cycles(g, limits)?;
        let cycle_marks = cycles
            .iter()
            .map(|c| {
                let mut tails = polytope.empty_set();
                let mut heads = polytope.empty_set();
                for (e, from, to) in c.steps() {
                    tails.insert(polytope.dir(e, from));
                    heads.insert(polytope.dir(e, to));
                }
                (tails, heads)
            })
            .collect();
        let stars = g
            .nodes()
            .map(|v| {
                let mut s = polytope.empty_set();
                for &e in g.incident_edges(v) {
                    s.insert(polytope.mid(e));
                    s.insert(polytope.dir(e, v));
                }
                s
            })
            .collect();
        let adjacency = build_edge_graph(polytope);
        Ok(FaceEngine {
            polytope,
            cycles,
            cycle_marks,
            stars,
            adjacency,
        })
    }

    pub fn polytope(&self) -> &'a CosmologicalPolytope {
        self.polytope
    }

    pub fn graph(&self) -> &'a Multigraph {
        self.polytope.graph()
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    fn check_set(&self, set: &FaceSet) -> Result<()> {
        if set.universe() != self.polytope.vertex_count() {
            return Err(Error::UnknownLabel(format!(
                "vertex set over {} vertices, polytope has {}",
                set.universe(),
                self.polytope.vertex_count()
            )));
        }
        Ok(())
    }

    /// The face criterion: (i) if `X` holds `p_e` and `p_{e,v}` for some edge
    /// `e` at `v`, it holds `p_{e'}` and `p_{e',v}` for every edge `e'` at
    /// `v`; (ii) for every simple cycle, holding all marks of one orientation
    /// forces all marks of the other.
    pub fn is_face(&self, set: &FaceSet) -> Result<bool> {
        self.check_set(set)?;
        Ok(self.star_condition(set) && self.cycle_condition(set))
    }

    fn star_condition(&self, set: &FaceSet) -> bool {
        let g = self.graph();
        g.nodes().all(|v| {
            let triggered = g.incident_edges(v).iter().any(|&e| {
                set.contains(self.polytope.mid(e)) && set.contains(self.polytope.dir(e, v))
            });
            !triggered || self.stars[v.index()].is_subset(set)
        })
    }

    fn cycle_condition(&self, set: &FaceSet) -> bool {
        self.cycle_marks
            .iter()
            .all(|(tails, heads)| tails.is_subset(set) == heads.is_subset(set))
    }

    /// The facet of a connected subgraph `H`: every vertex except `p_e` for
    /// `e ∈ E_H`, and `p_{e,u}` for `e ∉ E_H` with endpoint `u ∈ V_H`.
    /// Supporting functional: `Σ_{v ∈ V_H} x_v + Σ_{e ∉ E_H} |e ∩ V_H| y_e`.
    pub fn facet_from_subgraph(&self, h: &Subgraph) -> Result<Facet> {
        let g = self.graph();
        g.require_connected_with_edges()?;
        h.validate(g)?;
        if h.nodes.is_empty() {
            return Err(Error::InvalidSubgraph("empty subgraph".into()));
        }
        if !h.is_connected(g) {
            return Err(Error::InvalidSubgraph("subgraph is not connected".into()));
        }
        let p = self.polytope;
        let mut vertex_set = p.full_set();
        let mut coeffs = vec![0i64; p.ambient_dimension()];
        for &v in &h.nodes {
            coeffs[v.index()] = 1;
        }
        for e in g.edges() {
            if h.contains_edge(e) {
                vertex_set.remove(p.mid(e));
                continue;
            }
            let mut inside = 0;
            for u in g.endpoints(e) {
                if h.contains_node(u) {
                    vertex_set.remove(p.dir(e, u));
                    inside += 1;
                }
            }
            coeffs[g.node_count() + e.index()] = inside;
        }
        let functional = LinearFunctional::from_integers(&coeffs, 0);
        debug_assert!(functional.certifies(p, &vertex_set), "facet certificate");
        Ok(Facet {
            subgraph: h.clone(),
            vertex_set,
            functional,
        })
    }

    /// One facet per connected subgraph, in subgraph order.
    pub fn all_facets(&self, limits: &Limits) -> Result<Vec<Facet>> {
        self.graph().require_connected_with_edges()?;
        connected_subgraphs(self.graph(), limits)?
            .iter()
            .map(|h| self.facet_from_subgraph(h))
            .collect()
    }

    /// The facet of the whole graph.
    pub fn scattering_facet(&self) -> Result<Facet> {
        self.facet_from_subgraph(&Subgraph::full(self.graph()))
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].contains(j)
    }

    /// Neighbors of each polytope vertex in the edge graph.
    pub fn edge_graph(&self) -> &[FaceSet] {
        &self.adjacency
    }

    /// Edges of the edge graph as index pairs `i < j`.
    pub fn edge_graph_edges(&self) -> Vec<(usize, usize)> {
        let n = self.polytope.vertex_count();
        (0..n)
            .flat_map(|i| {
                (i + 1..n)
                    .filter(move |&j| self.adjacency[i].contains(j))
                    .map(move |j| (i, j))
            })
            .collect()
    }

    pub fn is_clique(&self, set: &FaceSet) -> bool {
        set.iter()
            .all(|i| set.difference(&self.adjacency[i]).to_vec() == [i])
    }

    /// True iff some simple cycle has all marks of one orientation in `set`.
    pub fn has_marked_cycle(&self, set: &FaceSet) -> bool {
        self.cycle_marks
            .iter()
            .any(|(tails, heads)| tails.is_subset(set) || heads.is_subset(set))
    }

    /// Simplex criterion: `X` spans a clique of the edge graph and holds no
    /// fully marked cycle orientation.
    pub fn is_simplex_face(&self, set: &FaceSet) -> Result<bool> {
        self.check_set(set)?;
        if set.is_empty() {
            return Err(Error::Precondition(
                "simplex test needs a nonempty set".into(),
            ));
        }
        Ok(self.is_clique(set) && !self.has_marked_cycle(set))
    }

    /// `{p_e, p_{e,v} : e ∋ v}`, a cross-polytope of dimension `deg(v)`.
    pub fn vertex_face(&self, v: NodeId) -> Result<FaceSet> {
        let g = self.graph();
        if v.index() >= g.node_count() {
            return Err(Error::UnknownNode(format!("#{}", v.index())));
        }
        if g.degree(v) == 0 {
            return Err(Error::IsolatedNode(g.node_label(v).to_string()));
        }
        Ok(self.stars[v.index()].clone())
    }

    /// Both marks of every edge of the cycle: a cyclic polytope of dimension
    /// `2d - 2` with `2d` vertices.
    pub fn cycle_face(&self, cycle: &Cycle) -> Result<FaceSet> {
        let c = Cycle::new(self.graph(), cycle.nodes().to_vec(), cycle.edges().to_vec())?;
        let mut face = self.polytope.empty_set();
        for i in self.gale_order(&c) {
            face.insert(i);
        }
        Ok(face)
    }

    /// Vertex order `(p_{e_1,v_1}, p_{e_1,v_2}, ..., p_{e_d,v_d}, p_{e_d,v_1})`
    /// under which cycle-face facets satisfy Gale's evenness condition.
    pub fn gale_order(&self, cycle: &Cycle) -> Vec<usize> {
        cycle
            .steps()
            .flat_map(|(e, from, to)| [self.polytope.dir(e, from), self.polytope.dir(e, to)])
            .collect()
    }

    /// The `d²` facets of a cycle face: remove one mark `p_{e_i,v_i}` and one
    /// reversed mark `p_{e_j,v_{j+1}}`.
    pub fn cycle_face_facets(&self, cycle: &Cycle) -> Result<Vec<FaceSet>> {
        let face = self.cycle_face(cycle)?;
        let order = self.gale_order(cycle);
        let d = cycle.len();
        let mut out = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut f = face.clone();
                f.remove(order[2 * i]);
                f.remove(order[2 * j + 1]);
                out.push(f);
            }
        }
        out.sort();
        Ok(out)
    }

    /// Vertex faces of nodes of degree at least two, then all cycle faces.
    /// Every non-simplex face contains one of these.
    pub fn minimal_nonsimplex_faces(&self) -> Vec<SpecialFace> {
        let g = self.graph();
        let mut out: Vec<SpecialFace> = g
            .nodes()
            .filter(|&v| g.degree(v) >= 2)
            .map(|v| SpecialFace::Vertex {
                node: v,
                face: self.stars[v.index()].clone(),
            })
            .collect();
        for c in &self.cycles {
            out.push(SpecialFace::Cycle {
                cycle: c.clone(),
                face: self.cycle_face(c).expect("enumerated cycles are valid"),
            });
        }
        out
    }

    pub fn face_record(
        &self,
        set: &FaceSet,
        dim: i64,
        certificate: Option<&LinearFunctional>,
    ) -> FaceRecord {
        FaceRecord {
            vertices: self.polytope.labels_of(set),
            dim,
            certificate: certificate.map(|f| f.record(self.polytope)),
        }
    }
}

/// Complete graph on the polytope vertices minus `{p_e, p_{e,v}}` for every
/// non-leaf endpoint `v` of `e`, and minus `{p_{e,v_1}, p_{e',v_2}}` for
/// every parallel pair `e, e'` between `v_1` and `v_2`.
fn build_edge_graph(p: &CosmologicalPolytope) -> Vec<FaceSet> {
    let g = p.graph();
    let n = p.vertex_count();
    let mut adj: Vec<FaceSet> = (0..n)
        .map(|i| {
            let mut s = FaceSet::full(n);
            s.remove(i);
            s
        })
        .collect();
    let mut cut = |a: usize, b: usize| {
        adj[a].remove(b);
        adj[b].remove(a);
    };
    for e in g.edges() {
        for v in g.endpoints(e) {
            if !g.is_leaf(v) {
                cut(p.mid(e), p.dir(e, v));
            }
        }
    }
    for e in g.edges() {
        for f in g.edges().filter(|f| f.index() > e.index()) {
            let [a, b] = g.endpoints(e);
            let [c, d] = g.endpoints(f);
            if (a == c && b == d) || (a == d && b == c) {
                cut(p.dir(e, a), p.dir(f, b));
                cut(p.dir(e, b), p.dir(f, a));
            }
        }
    }
    adj
}
