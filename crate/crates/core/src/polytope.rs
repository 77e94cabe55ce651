//! The labeled lattice points spanning the cosmological polytope of a graph,
//! in coordinates `x_v` (one per node, in node order) followed by `y_e` (one
//! per edge, in edge order).

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::faceset::FaceSet;
use crate::multigraph::{EdgeId, Multigraph, NodeId};

/// Which generator a polytope vertex is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexLabel {
    /// `p_e = x_v + x_w - y_e`.
    EdgeMid(EdgeId),
    /// `p_{e,v} = y_e + x_v - x_w`: edge `e` marked at its endpoint `v`.
    EdgeDir(EdgeId, NodeId),
    /// `x_v` for an isolated node `v`.
    NodePoint(NodeId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeVertex {
    pub label: VertexLabel,
    pub coords: Vec<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexRecord {
    pub label: String,
    pub coords: Vec<i64>,
}

/// The vertex set of `P_G` together with its graph.
///
/// Vertex indices are fixed: edge `i` contributes `3i` (midpoint),
/// `3i + 1` (marked at its first endpoint) and `3i + 2` (marked at its second
/// endpoint); isolated nodes follow in node order.
#[derive(Debug, Clone)]
pub struct CosmologicalPolytope {
    graph: Multigraph,
    vertices: Vec<PolytopeVertex>,
    index: HashMap<VertexLabel, usize>,
}

impl CosmologicalPolytope {
    pub fn new(graph: Multigraph) -> Self {
        let n = graph.node_count();
        let dim = n + graph.edge_count();
        let mut vertices = Vec::with_capacity(3 * graph.edge_count());
        for e in graph.edges() {
            let [a, b] = graph.endpoints(e);
            let y = n + e.index();
            let mut mid = vec![0; dim];
            mid[a.index()] = 1;
            mid[b.index()] = 1;
            mid[y] = -1;
            vertices.push(PolytopeVertex {
                label: VertexLabel::EdgeMid(e),
                coords: mid,
            });
            for (at, other) in [(a, b), (b, a)] {
                let mut dir = vec![0; dim];
                dir[at.index()] = 1;
                dir[other.index()] = -1;
                dir[y] = 1;
                vertices.push(PolytopeVertex {
                    label: VertexLabel::EdgeDir(e, at),
                    coords: dir,
                });
            }
        }
        for v in graph.isolated_nodes() {
            let mut point = vec![0; dim];
            point[v.index()] = 1;
            vertices.push(PolytopeVertex {
                label: VertexLabel::NodePoint(v),
                coords: point,
            });
        }
        let index = vertices
            .iter()
            .enumerate()
            .map(|(i, p)| (p.label, i))
            .collect();
        CosmologicalPolytope {
            graph,
            vertices,
            index,
        }
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn vertices(&self) -> &[PolytopeVertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// `|V| + |E|`.
    pub fn ambient_dimension(&self) -> usize {
        self.graph.node_count() + self.graph.edge_count()
    }

    pub fn label(&self, i: usize) -> VertexLabel {
        self.vertices[i].label
    }

    pub fn coords(&self, i: usize) -> &[i64] {
        &self.vertices[i].coords
    }

    pub fn index_of(&self, label: VertexLabel) -> Option<usize> {
        self.index.get(&label).copied()
    }

    pub fn mid(&self, e: EdgeId) -> usize {
        3 * e.index()
    }

    /// Index of `p_{e,v}`; `v` must be an endpoint of `e`.
    pub fn dir(&self, e: EdgeId, v: NodeId) -> usize {
        let [a, _] = self.graph.endpoints(e);
        if a == v {
            3 * e.index() + 1
        } else {
            3 * e.index() + 2
        }
    }

    pub fn empty_set(&self) -> FaceSet {
        FaceSet::empty(self.vertex_count())
    }

    pub fn full_set(&self) -> FaceSet {
        FaceSet::full(self.vertex_count())
    }

    /// Coordinate names: `x_<node>` then `y_<edge>`.
    pub fn coordinate_names(&self) -> Vec<String> {
        let g = &self.graph;
        g.nodes()
            .map(|v| format!("x_{}", g.node_label(v)))
            .chain(g.edges().map(|e| format!("y_{}", g.edge_label(e))))
            .collect()
    }

    /// Canonical string: `E(<edge>)`, `D(<edge>;<node>)` or `N(<node>)`.
    pub fn label_string(&self, i: usize) -> String {
        let g = &self.graph;
        match self.vertices[i].label {
            VertexLabel::EdgeMid(e) => format!("E({})", g.edge_label(e)),
            VertexLabel::EdgeDir(e, v) => format!("D({};{})", g.edge_label(e), g.node_label(v)),
            VertexLabel::NodePoint(v) => format!("N({})", g.node_label(v)),
        }
    }

    pub fn parse_label(&self, s: &str) -> Result<usize> {
        let unknown = || Error::UnknownLabel(s.to_string());
        let s = s.trim();
        let inner = |prefix: &str| {
            s.strip_prefix(prefix)
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(unknown)
        };
        let label = if s.starts_with("E(") {
            VertexLabel::EdgeMid(
                self.graph
                    .edge_by_label(inner("E(")?)
                    .map_err(|_| unknown())?,
            )
        } else if s.starts_with("D(") {
            let (e, v) = inner("D(")?.split_once(';').ok_or_else(unknown)?;
            let e = self.graph.edge_by_label(e).map_err(|_| unknown())?;
            let v = self.graph.node_by_label(v).map_err(|_| unknown())?;
            VertexLabel::EdgeDir(e, v)
        } else if s.starts_with("N(") {
            VertexLabel::NodePoint(
                self.graph
                    .node_by_label(inner("N(")?)
                    .map_err(|_| unknown())?,
            )
        } else {
            return Err(unknown());
        };
        self.index_of(label).ok_or_else(unknown)
    }

    pub fn parse_face_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<FaceSet> {
        let mut set = self.empty_set();
        for l in labels {
            set.insert(self.parse_label(l.as_ref())?);
        }
        Ok(set)
    }

    pub fn labels_of(&self, set: &FaceSet) -> Vec<String> {
        set.iter().map(|i| self.label_string(i)).collect()
    }

    /// Coordinate rows of the members of `set`, in index order.
    pub fn coordinates(&self, set: &FaceSet) -> Vec<Vec<i64>> {
        set.iter()
            .map(|i| self.vertices[i].coords.clone())
            .collect()
    }

    pub fn vertex_records(&self) -> Vec<VertexRecord> {
        (0..self.vertex_count())
            .map(|i| VertexRecord {
                label: self.label_string(i),
                coords: self.vertices[i].coords.clone(),
            })
            .collect()
    }

    /// The vertex set for a set of labels; convenience for tests and callers.
    pub fn set_of(&self, labels: &[VertexLabel]) -> Result<FaceSet> {
        let mut set = self.empty_set();
        for &l in labels {
            let i = self
                .index_of(l)
                .ok_or_else(|| Error::UnknownLabel(format!("{l:?}")))?;
            set.insert(i);
        }
        Ok(set)
    }
}

impl fmt::Display for CosmologicalPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.vertex_count() {
            writeln!(f, "{} {:?}", self.label_string(i), self.coords(i))?;
        }
        Ok(())
    }
}
