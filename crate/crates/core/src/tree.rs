//! The leaf-extension recursion for f-polynomials of trees, path closed
//! forms, tree volumes, and a structural check of the pyramid/bipyramid
//! decomposition behind the recursion.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::face::FaceEngine;
use crate::lattice::{f_polynomial, FaceLattice};
use crate::limits::Limits;
use crate::multigraph::{Multigraph, NodeId, Subgraph};
use crate::poly::FPolynomial;
use crate::polytope::CosmologicalPolytope;

/// One leaf-extension step. Given `f_G`, `f_{G∖w}` and `deg_G(w)`, returns
/// `(f_F, f_{G'})` where `G'` attaches a new leaf at `w`:
///
/// ```text
/// f_F   = (1 + 2t) f_G - t^{deg w + 1} (1 + t) f_{G∖w}
/// f_G'  = (1 + t) f_F
/// ```
pub fn leaf_extension(
    f_g: &FPolynomial,
    f_g_minus_w: &FPolynomial,
    deg_w: usize,
) -> Result<(FPolynomial, FPolynomial)> {
    let one_two = FPolynomial::from_i64(&[1, 2]);
    let tail = (&FPolynomial::point() * f_g_minus_w).shift(deg_w + 1);
    let f_f = &(&one_two * f_g) - &tail;
    f_f.check_f_vector()?;
    let f_next = &FPolynomial::point() * &f_f;
    Ok((f_f, f_next))
}

/// `f_{Π_n}` via `f_{Π_{n+2}} = (1+t)((1+2t) f_{Π_{n+1}} - t^2 (1+t) f_{Π_n})`.
/// `n = 0` gives the empty graph's `1`.
pub fn path_f_polynomial(n: usize) -> FPolynomial {
    let mut prev = FPolynomial::one();
    let mut cur = FPolynomial::point();
    if n == 0 {
        return prev;
    }
    for k in 1..n {
        // Attaching at an end of Π_k: degree 1 for k ≥ 2, degree 0 for the single node.
        let deg = usize::from(k >= 2);
        let (_, next) = leaf_extension(&cur, &prev, deg).expect("path recursion stays valid");
        prev = cur;
        cur = next;
    }
    cur
}

/// Normalized volume of `P_T` for a tree with `e ≥ 1` edges: `4^e`.
pub fn tree_volume(t: &Multigraph) -> Result<BigUint> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    Ok(BigUint::from(4u32).pow(t.edge_count() as u32))
}

/// Memoized tree recursion. Keys are canonical forest encodings, so
/// isomorphic forests share one entry. Safe to share across threads.
#[derive(Debug, Default)]
pub struct TreeRecursion {
    memo: RwLock<HashMap<String, FPolynomial>>,
}

impl TreeRecursion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().expect("memo lock").len()
    }

    /// f-polynomial of `P_F` for a forest `F` (isolated nodes allowed).
    pub fn f_polynomial(&self, forest: &Multigraph) -> Result<FPolynomial> {
        if !forest.is_forest() {
            return Err(Error::NotAForest);
        }
        Ok(self.eval(forest))
    }

    fn eval(&self, forest: &Multigraph) -> FPolynomial {
        let key = canonical_forest(forest);
        if let Some(f) = self.memo.read().expect("memo lock").get(&key) {
            return f.clone();
        }
        let value = recurse(forest, &|g| self.eval(g), first_leaf);
        self.memo
            .write()
            .expect("memo lock")
            .insert(key, value.clone());
        value
    }
}

/// Tree recursion with a fresh memo table.
pub fn tree_f_polynomial(forest: &Multigraph) -> Result<FPolynomial> {
    TreeRecursion::new().f_polynomial(forest)
}

/// Unmemoized tree recursion with a caller-chosen leaf at every step. The
/// chooser receives a tree with at least one edge and returns one of its
/// leaves.
pub fn tree_f_polynomial_with<C>(forest: &Multigraph, choose: &C) -> Result<FPolynomial>
where
    C: Fn(&Multigraph) -> NodeId,
{
    if !forest.is_forest() {
        return Err(Error::NotAForest);
    }
    fn go<C: Fn(&Multigraph) -> NodeId>(g: &Multigraph, choose: &C) -> FPolynomial {
        recurse(g, &|h| go(h, choose), choose)
    }
    Ok(go(forest, choose))
}

fn first_leaf(t: &Multigraph) -> NodeId {
    t.nodes()
        .find(|&v| t.is_leaf(v))
        .expect("a tree with an edge has a leaf")
}

fn recurse<R, C>(forest: &Multigraph, rec: &R, choose: C) -> FPolynomial
where
    R: Fn(&Multigraph) -> FPolynomial,
    C: Fn(&Multigraph) -> NodeId,
{
    let comps = forest.components();
    match comps.len() {
        0 => return FPolynomial::one(),
        1 => {}
        _ => {
            return comps
                .iter()
                .map(|c| rec(&forest.induced(c)))
                .fold(FPolynomial::one(), |acc, f| &acc * &f);
        }
    }
    if forest.node_count() == 1 {
        return FPolynomial::point();
    }
    let v = choose(forest);
    debug_assert!(forest.is_leaf(v));
    let e = forest.incident_edges(v)[0];
    let w_label = forest.node_label(forest.other_end(e, v)).to_string();
    let base = forest.without_node(v);
    let w = base.node_by_label(&w_label).expect("neighbor survives");
    let f_base = rec(&base);
    let f_rest = rec(&base.without_node(w));
    let (_, f) = leaf_extension(&f_base, &f_rest, base.degree(w)).expect("valid tree polynomials");
    f
}

/// Canonical string of a forest up to isomorphism: the sorted list of
/// canonical encodings of its trees, each rooted at its center(s).
pub fn canonical_forest(g: &Multigraph) -> String {
    let mut parts: Vec<String> = g
        .components()
        .iter()
        .map(|comp| canonical_tree(&g.induced(comp)))
        .collect();
    parts.sort();
    parts.join("")
}

fn canonical_tree(t: &Multigraph) -> String {
    let n = t.node_count();
    let neighbors: Vec<Vec<usize>> = t
        .nodes()
        .map(|v| {
            t.incident_edges(v)
                .iter()
                .map(|&e| t.other_end(e, v).index())
                .collect()
        })
        .collect();
    // Peel leaves until one or two centers remain.
    let mut degree: Vec<usize> = neighbors.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &u in &neighbors[v] {
                degree[u] -= 1;
                if degree[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    fn encode(v: usize, parent: Option<usize>, nb: &[Vec<usize>]) -> String {
        let mut kids: Vec<String> = nb[v]
            .iter()
            .filter(|&&u| Some(u) != parent)
            .map(|&u| encode(u, Some(v), nb))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    layer
        .iter()
        .map(|&c| encode(c, None, &neighbors))
        .min()
        .unwrap_or_default()
}

/// Outcome of the pyramid/bipyramid structure check for `G' = G + leaf`.
#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub pass: bool,
    /// f-polynomial of the facet `F` of the subgraph `{v}`.
    pub f_facet: FPolynomial,
    pub f_extended: FPolynomial,
    /// `(1 + 2t) f_G - t^{deg w + 1} (1 + t) f_{G∖w}`.
    pub f_facet_expected: FPolynomial,
    pub failures: Vec<String>,
    /// A face violating the pyramid structure, by vertex labels.
    pub counterexample: Option<Vec<String>>,
}

/// Attaches a new leaf `v` to `w` in `G` and checks that `P_{G'}` is a
/// pyramid with apex `p_{e,v}` over the facet `F` of the subgraph `{v}`,
/// and that `f_F` obeys the bipyramid count.
pub fn pyramid_bipyramid_structure(
    g: &Multigraph,
    w: NodeId,
    limits: &Limits,
) -> Result<StructureReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let leaf_label = (0..)
        .map(|i| {
            if i == 0 {
                "leaf".to_string()
            } else {
                format!("leaf{i}")
            }
        })
        .find(|l| g.node_by_label(l).is_err())
        .expect("some label is free");
    let (extended, v, e) = g.with_leaf(w, &leaf_label)?;
    let p = CosmologicalPolytope::new(extended);
    let engine = FaceEngine::new(&p, limits)?;
    let lattice = FaceLattice::build(&engine, limits)?;
    let facet = engine
        .facet_from_subgraph(&Subgraph::new(vec![v], vec![]))?
        .vertex_set;
    let apex = p.dir(e, v);

    let mut failures = Vec::new();
    let mut counterexample = None;
    for face in lattice.faces() {
        if !face.set.contains(apex) && !face.set.is_subset(&facet) {
            failures.push("face neither contains the apex nor lies in F".into());
            counterexample = Some(p.labels_of(&face.set));
            break;
        }
    }
    for face in lattice.faces_within(&facet) {
        let coned = face.set.with(apex);
        if lattice.dimension_of(&coned) != Some(face.dim + 1) {
            failures.push("cone over a face of F is not a face one dimension up".into());
            counterexample.get_or_insert_with(|| p.labels_of(&coned));
            break;
        }
    }

    let f_facet = lattice.face_f_polynomial(&facet);
    let f_extended = lattice.f_polynomial();
    if f_extended != &FPolynomial::point() * &f_facet {
        failures.push(format!(
            "f_G' = {f_extended} differs from (1+t) f_F = (1+t)({f_facet})"
        ));
    }
    let f_g = f_polynomial(g, limits)?;
    let f_g_minus_w = f_polynomial(&g.without_node(w), limits)?;
    let f_facet_expected = &(&FPolynomial::from_i64(&[1, 2]) * &f_g)
        - &(&FPolynomial::point() * &f_g_minus_w).shift(g.degree(w) + 1);
    if f_facet != f_facet_expected {
        failures.push(format!(
            "f_F = {f_facet} differs from the bipyramid count {f_facet_expected}"
        ));
    }
    Ok(StructureReport {
        pass: failures.is_empty(),
        f_facet,
        f_extended,
        f_facet_expected,
        failures,
        counterexample,
    })
}
