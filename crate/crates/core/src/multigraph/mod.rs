//! Loopless multigraphs and the enumerative graph queries the polytope code consumes.

mod enumerate;
mod format;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use enumerate::{connected_subgraphs, graph_stats, simple_cycles, GraphStats};
pub use format::{parse_graph, parse_graph_json, parse_graph_text, GraphFormat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(usize);

impl NodeId {
    pub fn new(index: usize) -> Self {
        NodeId(index)
    }

    pub fn index(self) -> usize {
        self.0
    }
}

impl EdgeId {
    pub fn new(index: usize) -> Self {
        EdgeId(index)
    }

    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct EdgeData {
    label: String,
    ends: [NodeId; 2],
}

/// An undirected multigraph without loops.
///
/// Nodes and edges carry unique string labels and are iterated in insertion
/// order. Parallel edges are allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Multigraph {
    nodes: Vec<String>,
    node_lookup: HashMap<String, NodeId>,
    edges: Vec<EdgeData>,
    edge_lookup: HashMap<String, EdgeId>,
    incidence: Vec<Vec<EdgeId>>,
}

impl Multigraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_node(&mut self, label: impl Into<String>) -> Result<NodeId> {
        let label = label.into();
        if self.node_lookup.contains_key(&label) {
            return Err(Error::DuplicateNode(label));
        }
        let id = NodeId(self.nodes.len());
        self.node_lookup.insert(label.clone(), id);
        self.nodes.push(label);
        self.incidence.push(Vec::new());
        Ok(id)
    }

    /// Returns the node with this label, creating it if needed.
    pub fn ensure_node(&mut self, label: &str) -> NodeId {
        match self.node_lookup.get(label) {
            Some(&id) => id,
            None => self.add_node(label).expect("label is fresh"),
        }
    }

    /// Adds an edge between `u` and `w`. Without a label, the first unused
    /// `e<k>` is chosen.
    pub fn add_edge(&mut self, u: NodeId, w: NodeId, label: Option<&str>) -> Result<EdgeId> {
        for v in [u, w] {
            if v.0 >= self.nodes.len() {
                return Err(Error::UnknownNode(format!("#{}", v.0)));
            }
        }
        let label = match label {
            Some(l) => l.to_string(),
            None => self.fresh_edge_label(),
        };
        if u == w {
            return Err(Error::LoopEdge {
                edge: label,
                node: self.nodes[u.0].clone(),
            });
        }
        if self.edge_lookup.contains_key(&label) {
            return Err(Error::DuplicateEdge(label));
        }
        let id = EdgeId(self.edges.len());
        self.edge_lookup.insert(label.clone(), id);
        self.edges.push(EdgeData {
            label,
            ends: [u, w],
        });
        self.incidence[u.0].push(id);
        self.incidence[w.0].push(id);
        Ok(id)
    }

    /// Adds an edge by node labels, creating nodes on demand.
    pub fn add_edge_by_labels(&mut self, u: &str, w: &str, label: Option<&str>) -> Result<EdgeId> {
        let u = self.ensure_node(u);
        let w = self.ensure_node(w);
        self.add_edge(u, w, label)
    }

    fn fresh_edge_label(&self) -> String {
        let mut k = self.edges.len() + 1;
        loop {
            let candidate = format!("e{k}");
            if !self.edge_lookup.contains_key(&candidate) {
                return candidate;
            }
            k += 1;
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = NodeId> + Clone {
        (0..self.nodes.len()).map(NodeId)
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = EdgeId> + Clone {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn node_label(&self, v: NodeId) -> &str {
        &self.nodes[v.0]
    }

    pub fn edge_label(&self, e: EdgeId) -> &str {
        &self.edges[e.0].label
    }

    pub fn node_by_label(&self, label: &str) -> Result<NodeId> {
        self.node_lookup
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownNode(label.to_string()))
    }

    pub fn edge_by_label(&self, label: &str) -> Result<EdgeId> {
        self.edge_lookup
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownEdge(label.to_string()))
    }

    pub fn endpoints(&self, e: EdgeId) -> [NodeId; 2] {
        self.edges[e.0].ends
    }

    pub fn other_end(&self, e: EdgeId, v: NodeId) -> NodeId {
        let [a, b] = self.edges[e.0].ends;
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    pub fn incident_edges(&self, v: NodeId) -> &[EdgeId] {
        &self.incidence[v.0]
    }

    /// Degree counted with multiplicity over parallel edges.
    pub fn degree(&self, v: NodeId) -> usize {
        self.incidence[v.0].len()
    }

    pub fn is_leaf(&self, v: NodeId) -> bool {
        self.degree(v) == 1
    }

    pub fn isolated_nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.nodes().filter(move |&v| self.degree(v) == 0)
    }

    /// Returns the first pair of parallel edges, if any.
    pub fn parallel_pair(&self) -> Option<(EdgeId, EdgeId)> {
        let mut seen: HashMap<(NodeId, NodeId), EdgeId> = HashMap::new();
        for e in self.edges() {
            let [a, b] = self.endpoints(e);
            let key = (a.min(b), a.max(b));
            if let Some(&first) = seen.get(&key) {
                return Some((first, e));
            }
            seen.insert(key, e);
        }
        None
    }

    /// Connected components as sorted node lists, ordered by smallest node.
    pub fn components(&self) -> Vec<Vec<NodeId>> {
        let mut seen = vec![false; self.node_count()];
        let mut out = Vec::new();
        for start in self.nodes() {
            if seen[start.0] {
                continue;
            }
            seen[start.0] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &e in self.incident_edges(v) {
                    let u = self.other_end(e, v);
                    if !seen[u.0] {
                        seen[u.0] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    /// Connected with at least one node.
    pub fn is_connected(&self) -> bool {
        self.node_count() > 0 && self.components().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.node_count()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.is_forest()
    }

    /// The subgraph induced on `keep`, preserving labels and relative order.
    pub fn induced(&self, keep: &[NodeId]) -> Multigraph {
        let mut mask = vec![false; self.node_count()];
        for v in keep {
            mask[v.0] = true;
        }
        let mut g = Multigraph::new();
        for v in self.nodes().filter(|v| mask[v.0]) {
            g.add_node(self.node_label(v)).expect("labels unique");
        }
        for e in self.edges() {
            let [a, b] = self.endpoints(e);
            if mask[a.0] && mask[b.0] {
                let a = g.node_by_label(self.node_label(a)).expect("present");
                let b = g.node_by_label(self.node_label(b)).expect("present");
                g.add_edge(a, b, Some(self.edge_label(e)))
                    .expect("valid edge");
            }
        }
        g
    }

    /// `G \ v`: removes the node together with its incident edges.
    pub fn without_node(&self, v: NodeId) -> Multigraph {
        let keep: Vec<NodeId> = self.nodes().filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Returns `G` plus a new leaf attached to `w`, along with the new node and edge.
    pub fn with_leaf(&self, w: NodeId, leaf_label: &str) -> Result<(Multigraph, NodeId, EdgeId)> {
        let mut g = self.clone();
        let v = g.add_node(leaf_label)?;
        let e = g.add_edge(v, w, None)?;
        Ok((g, v, e))
    }

    /// Disjoint union; labels of `other` must not clash with ours.
    pub fn disjoint_union(&self, other: &Multigraph) -> Result<Multigraph> {
        let mut g = self.clone();
        for v in other.nodes() {
            g.add_node(other.node_label(v))?;
        }
        for e in other.edges() {
            let [a, b] = other.endpoints(e);
            let a = g.node_by_label(other.node_label(a))?;
            let b = g.node_by_label(other.node_label(b))?;
            g.add_edge(a, b, Some(other.edge_label(e)))?;
        }
        Ok(g)
    }

    pub fn require_no_isolated(&self) -> Result<()> {
        match self.isolated_nodes().next() {
            Some(v) => Err(Error::IsolatedNode(self.node_label(v).to_string())),
            None => Ok(()),
        }
    }

    pub fn require_connected_with_edges(&self) -> Result<()> {
        if self.edge_count() == 0 {
            return Err(Error::NoEdges);
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(())
    }

    // Standard families. Nodes are `v1, v2, ...`, edges `e1, e2, ...`.

    fn with_nodes(n: usize) -> (Multigraph, Vec<NodeId>) {
        let mut g = Multigraph::new();
        let ids = (1..=n)
            .map(|i| g.add_node(format!("v{i}")).expect("fresh"))
            .collect();
        (g, ids)
    }

    /// Path Π_n on `n` nodes.
    pub fn path(n: usize) -> Multigraph {
        let (mut g, v) = Self::with_nodes(n);
        for i in 1..n {
            g.add_edge(v[i - 1], v[i], None).expect("valid");
        }
        g
    }

    /// Cycle C_n on `n >= 2` nodes (`n == 2` gives the banana B_2).
    pub fn cycle(n: usize) -> Multigraph {
        let (mut g, v) = Self::with_nodes(n);
        for i in 0..n {
            g.add_edge(v[i], v[(i + 1) % n], None).expect("valid");
        }
        g
    }

    /// Star K_{1,k}; the center is `v1`.
    pub fn star(k: usize) -> Multigraph {
        let (mut g, v) = Self::with_nodes(k + 1);
        for i in 1..=k {
            g.add_edge(v[0], v[i], None).expect("valid");
        }
        g
    }

    /// Banana B_k: two nodes joined by `k` parallel edges.
    pub fn banana(k: usize) -> Multigraph {
        let (mut g, v) = Self::with_nodes(2);
        for _ in 0..k {
            g.add_edge(v[0], v[1], None).expect("valid");
        }
        g
    }

    /// Complete simple graph K_n.
    pub fn complete(n: usize) -> Multigraph {
        let (mut g, v) = Self::with_nodes(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(v[i], v[j], None).expect("valid");
            }
        }
        g
    }

    /// Builds a graph from `(u, w)` label pairs.
    pub fn from_edge_list(pairs: &[(&str, &str)]) -> Result<Multigraph> {
        let mut g = Multigraph::new();
        for (u, w) in pairs {
            g.add_edge_by_labels(u, w, None)?;
        }
        Ok(g)
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let isolated: Vec<&str> = self.isolated_nodes().map(|v| self.node_label(v)).collect();
        if !isolated.is_empty() {
            writeln!(f, "nodes: {}", isolated.join(" "))?;
        }
        for e in self.edges() {
            let [a, b] = self.endpoints(e);
            writeln!(
                f,
                "{} {} {}",
                self.node_label(a),
                self.node_label(b),
                self.edge_label(e)
            )?;
        }
        Ok(())
    }
}

/// A pair `(V_H, E_H)` with every edge of `E_H` inside `V_H`. Both lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgraph {
    pub nodes: Vec<NodeId>,
    pub edges: Vec<EdgeId>,
}

impl Subgraph {
    pub fn new(mut nodes: Vec<NodeId>, mut edges: Vec<EdgeId>) -> Self {
        nodes.sort();
        nodes.dedup();
        edges.sort();
        edges.dedup();
        Subgraph { nodes, edges }
    }

    /// The whole graph as a subgraph of itself.
    pub fn full(g: &Multigraph) -> Self {
        Subgraph::new(g.nodes().collect(), g.edges().collect())
    }

    pub fn contains_node(&self, v: NodeId) -> bool {
        self.nodes.binary_search(&v).is_ok()
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Checks the subgraph invariant against `g`.
    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        for &v in &self.nodes {
            if v.index() >= g.node_count() {
                return Err(Error::InvalidSubgraph(format!(
                    "node #{} out of range",
                    v.index()
                )));
            }
        }
        for &e in &self.edges {
            if e.index() >= g.edge_count() {
                return Err(Error::InvalidSubgraph(format!(
                    "edge #{} out of range",
                    e.index()
                )));
            }
            for v in g.endpoints(e) {
                if !self.contains_node(v) {
                    return Err(Error::InvalidSubgraph(format!(
                        "edge `{}` leaves the node set",
                        g.edge_label(e)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Nonempty and connected using only its own edges.
    pub fn is_connected(&self, g: &Multigraph) -> bool {
        let Some(&start) = self.nodes.first() else {
            return false;
        };
        let mut reached = vec![start];
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            for &e in &self.edges {
                let [a, b] = g.endpoints(e);
                let next = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !reached.contains(&next) {
                    reached.push(next);
                    frontier.push(next);
                }
            }
        }
        reached.len() == self.nodes.len()
    }

    pub fn describe(&self, g: &Multigraph) -> SubgraphRecord {
        SubgraphRecord {
            nodes: self
                .nodes
                .iter()
                .map(|&v| g.node_label(v).to_string())
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|&e| g.edge_label(e).to_string())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgraphRecord {
    pub nodes: Vec<String>,
    pub edges: Vec<String>,
}

/// A simple cycle `(v_1, e_1, v_2, e_2, ..., v_d, e_d)` where `e_i` joins
/// `v_i` and `v_{i+1}` (indices mod `d`). Stored in canonical form: starts at
/// its smallest node, with the orientation whose `(nodes, edges)` sequence is
/// lexicographically smaller.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    nodes: Vec<NodeId>,
    edges: Vec<EdgeId>,
}

impl Cycle {
    /// Validates and canonicalizes a cycle given as parallel node/edge lists.
    pub fn new(g: &Multigraph, nodes: Vec<NodeId>, edges: Vec<EdgeId>) -> Result<Cycle> {
        let d = nodes.len();
        if d < 2 || edges.len() != d {
            return Err(Error::InvalidCycle(format!(
                "need d >= 2 nodes and as many edges, got {} and {}",
                d,
                edges.len()
            )));
        }
        let mut sorted_nodes = nodes.clone();
        sorted_nodes.sort();
        sorted_nodes.dedup();
        let mut sorted_edges = edges.clone();
        sorted_edges.sort();
        sorted_edges.dedup();
        if sorted_nodes.len() != d || sorted_edges.len() != d {
            return Err(Error::InvalidCycle("repeated node or edge".into()));
        }
        for i in 0..d {
            if edges[i].index() >= g.edge_count() || nodes[i].index() >= g.node_count() {
                return Err(Error::InvalidCycle("id out of range".into()));
            }
            let [a, b] = g.endpoints(edges[i]);
            let (x, y) = (nodes[i], nodes[(i + 1) % d]);
            if !((a == x && b == y) || (a == y && b == x)) {
                return Err(Error::InvalidCycle(format!(
                    "edge `{}` does not join `{}` and `{}`",
                    g.edge_label(edges[i]),
                    g.node_label(x),
                    g.node_label(y)
                )));
            }
        }
        Ok(Cycle::canonical(nodes, edges))
    }

    /// Canonical form of an already valid cycle.
    pub(crate) fn canonical(nodes: Vec<NodeId>, edges: Vec<EdgeId>) -> Cycle {
        let d = nodes.len();
        let start = (0..d).min_by_key(|&i| nodes[i]).expect("nonempty");
        let fwd = Cycle {
            nodes: (0..d).map(|k| nodes[(start + k) % d]).collect(),
            edges: (0..d).map(|k| edges[(start + k) % d]).collect(),
        };
        let rev = fwd.reversed();
        if rev < fwd {
            rev
        } else {
            fwd
        }
    }

    /// The same cycle traversed the other way, starting at the same node.
    pub fn reversed(&self) -> Cycle {
        let d = self.nodes.len();
        Cycle {
            nodes: (0..d).map(|k| self.nodes[(d - k) % d]).collect(),
            edges: (0..d).map(|k| self.edges[d - 1 - k]).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// `(e_i, v_i, v_{i+1})` triples in traversal order.
    pub fn steps(&self) -> impl Iterator<Item = (EdgeId, NodeId, NodeId)> + '_ {
        let d = self.len();
        (0..d).map(move |i| (self.edges[i], self.nodes[i], self.nodes[(i + 1) % d]))
    }
}
