use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::{Cycle, EdgeId, Multigraph, NodeId, Subgraph};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Every connected subgraph `(V_H, E_H)`, not only induced ones.
///
/// A connected subgraph with two or more nodes is determined by its edge set,
/// so the result is the single nodes followed by the connected edge sets,
/// found as connected node sets of the line graph. Order: by node count, then
/// edge count, then lexicographically.
pub fn connected_subgraphs(g: &Multigraph, limits: &Limits) -> Result<Vec<Subgraph>> {
    let cap = limits.max_subgraphs;
    let mut out: Vec<Subgraph> = g.nodes().map(|v| Subgraph::new(vec![v], vec![])).collect();
    check_cap(out.len(), cap, g)?;

    let m = g.edge_count();
    let mut adjacent = vec![FixedBitSet::with_capacity(m); m];
    let mut neighbors = vec![Vec::new(); m];
    for e in g.edges() {
        for v in g.endpoints(e) {
            for &f in g.incident_edges(v) {
                if f != e && !adjacent[e.index()].contains(f.index()) {
                    adjacent[e.index()].insert(f.index());
                    neighbors[e.index()].push(f.index());
                }
            }
        }
    }
    for list in &mut neighbors {
        list.sort_unstable();
    }

    let mut search = EdgeSetSearch {
        adjacent: &adjacent,
        neighbors: &neighbors,
        current: Vec::new(),
        found: Vec::new(),
        cap: cap.saturating_sub(out.len()),
    };
    for (root, adjacent) in neighbors.iter().enumerate() {
        search.current.push(root);
        let ext: Vec<usize> = adjacent.iter().copied().filter(|&f| f > root).collect();
        let ok = search.extend(root, ext);
        search.current.pop();
        if !ok {
            return Err(cap_error(cap, g));
        }
    }

    for edge_set in search.found {
        let edges: Vec<EdgeId> = edge_set.into_iter().map(EdgeId::new).collect();
        let mut nodes: Vec<NodeId> = edges.iter().flat_map(|&e| g.endpoints(e)).collect();
        nodes.sort();
        nodes.dedup();
        out.push(Subgraph::new(nodes, edges));
    }
    out.sort_by(|a, b| {
        (a.nodes.len(), a.edges.len(), &a.nodes, &a.edges).cmp(&(
            b.nodes.len(),
            b.edges.len(),
            &b.nodes,
            &b.edges,
        ))
    });
    Ok(out)
}

fn check_cap(count: usize, cap: usize, g: &Multigraph) -> Result<()> {
    if count > cap {
        Err(cap_error(cap, g))
    } else {
        Ok(())
    }
}

fn cap_error(cap: usize, g: &Multigraph) -> Error {
    Error::CapExceeded {
        what: "connected subgraph",
        cap,
        context: format!("{} nodes, {} edges", g.node_count(), g.edge_count()),
    }
}

/// ESU-style enumeration of connected vertex sets (here: edge sets of the
/// multigraph, adjacent when they share an endpoint). Each set is produced
/// exactly once, rooted at its smallest member.
struct EdgeSetSearch<'a> {
    adjacent: &'a [FixedBitSet],
    neighbors: &'a [Vec<usize>],
    current: Vec<usize>,
    found: Vec<Vec<usize>>,
    cap: usize,
}

impl EdgeSetSearch<'_> {
    fn extend(&mut self, root: usize, mut ext: Vec<usize>) -> bool {
        if self.found.len() >= self.cap {
            return false;
        }
        let mut set = self.current.clone();
        set.sort_unstable();
        self.found.push(set);

        while let Some(w) = ext.pop() {
            let mut next = ext.clone();
            for &u in &self.neighbors[w] {
                if u <= root {
                    continue;
                }
                let near_current = self
                    .current
                    .iter()
                    .any(|&s| s == u || self.adjacent[s].contains(u));
                if !near_current && !next.contains(&u) && u != w {
                    next.push(u);
                }
            }
            self.current.push(w);
            let ok = self.extend(root, next);
            self.current.pop();
            if !ok {
                return false;
            }
        }
        true
    }
}

/// All simple cycles (distinct nodes, distinct edges, length >= 2), each once
/// up to rotation and reflection. Parallel pairs give 2-cycles. Sorted by
/// length, then canonical sequence.
pub fn simple_cycles(g: &Multigraph, limits: &Limits) -> Result<Vec<Cycle>> {
    let cap = limits.max_cycles;
    let mut out = Vec::new();
    let mut on_path = vec![false; g.node_count()];
    for start in g.nodes() {
        let mut nodes = vec![start];
        let mut edges = Vec::new();
        on_path[start.index()] = true;
        cycles_from(
            g,
            start,
            &mut nodes,
            &mut edges,
            &mut on_path,
            &mut out,
            cap,
        )?;
        on_path[start.index()] = false;
    }
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    Ok(out)
}

fn cycles_from(
    g: &Multigraph,
    start: NodeId,
    nodes: &mut Vec<NodeId>,
    edges: &mut Vec<EdgeId>,
    on_path: &mut [bool],
    out: &mut Vec<Cycle>,
    cap: usize,
) -> Result<()> {
    let tip = *nodes.last().expect("path nonempty");
    for &e in g.incident_edges(tip) {
        if edges.last() == Some(&e) {
            continue;
        }
        let next = g.other_end(e, tip);
        if next == start && !edges.is_empty() {
            edges.push(e);
            let candidate = Cycle {
                nodes: nodes.clone(),
                edges: edges.clone(),
            };
            // Each cycle is met once per direction; keep the canonical one.
            if Cycle::canonical(nodes.clone(), edges.clone()) == candidate {
                if out.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: "cycle",
                        cap,
                        context: format!("{} nodes, {} edges", g.node_count(), g.edge_count()),
                    });
                }
                out.push(candidate);
            }
            edges.pop();
        } else if next > start && !on_path[next.index()] {
            on_path[next.index()] = true;
            nodes.push(next);
            edges.push(e);
            cycles_from(g, start, nodes, edges, on_path, out, cap)?;
            edges.pop();
            nodes.pop();
            on_path[next.index()] = false;
        }
    }
    Ok(())
}

/// Statistics used by the closed-form face counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub edges: usize,
    pub leaves: usize,
    pub degree_two: usize,
    /// Cycle length -> number of simple cycles of that length.
    pub cycles_by_length: BTreeMap<usize, usize>,
}

impl GraphStats {
    pub fn cycles_of_length(&self, d: usize) -> usize {
        self.cycles_by_length.get(&d).copied().unwrap_or(0)
    }
}

pub fn graph_stats(g: &Multigraph, limits: &Limits) -> Result<GraphStats> {
    let mut cycles_by_length = BTreeMap::new();
    for c in simple_cycles(g, limits)? {
        *cycles_by_length.entry(c.len()).or_insert(0) += 1;
    }
    Ok(GraphStats {
        edges: g.edge_count(),
        leaves: g.nodes().filter(|&v| g.degree(v) == 1).count(),
        degree_two: g.nodes().filter(|&v| g.degree(v) == 2).count(),
        cycles_by_length,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Exhaustive oracle: every (node subset, edge subset) pair that is a
    /// connected subgraph.
    fn brute_force_subgraphs(g: &Multigraph) -> Vec<Subgraph> {
        let (n, m) = (g.node_count(), g.edge_count());
        let mut out = Vec::new();
        for vmask in 1u32..(1 << n) {
            for emask in 0u32..(1 << m) {
                let nodes: Vec<NodeId> = (0..n)
                    .filter(|i| vmask >> i & 1 == 1)
                    .map(NodeId::new)
                    .collect();
                let edges: Vec<EdgeId> = (0..m)
                    .filter(|i| emask >> i & 1 == 1)
                    .map(EdgeId::new)
                    .collect();
                let h = Subgraph::new(nodes, edges);
                if h.validate(g).is_ok() && h.is_connected(g) {
                    out.push(h);
                }
            }
        }
        out.sort();
        out
    }

    /// Oracle for cycles: for every node subset and every cyclic arrangement
    /// of it, count the edge choices closing it up.
    fn brute_force_cycle_count(g: &Multigraph) -> usize {
        let n = g.node_count();
        let mut total = 0;
        for mask in 1u32..(1 << n) {
            let nodes: Vec<NodeId> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(NodeId::new)
                .collect();
            let d = nodes.len();
            if d < 2 {
                continue;
            }
            let between = |a: NodeId, b: NodeId| {
                g.edges()
                    .filter(|&e| {
                        let [x, y] = g.endpoints(e);
                        (x == a && y == b) || (x == b && y == a)
                    })
                    .count()
            };
            if d == 2 {
                let k = between(nodes[0], nodes[1]);
                total += k * k.saturating_sub(1) / 2;
                continue;
            }
            // Arrangements with nodes[0] first; each undirected cycle appears twice.
            let mut rest: Vec<NodeId> = nodes[1..].to_vec();
            let mut count = 0;
            permute(&mut rest, 0, &mut |perm| {
                let mut ways = between(nodes[0], perm[0]);
                for w in perm.windows(2) {
                    ways *= between(w[0], w[1]);
                }
                ways *= between(*perm.last().unwrap(), nodes[0]);
                count += ways;
            });
            total += count / 2;
        }
        total
    }

    fn permute(items: &mut Vec<NodeId>, k: usize, visit: &mut dyn FnMut(&[NodeId])) {
        if k == items.len() {
            visit(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, visit);
            items.swap(k, i);
        }
    }

    fn sorted(mut v: Vec<Subgraph>) -> Vec<Subgraph> {
        v.sort();
        v
    }

    #[test]
    fn banana_has_five_connected_subgraphs() {
        let g = Multigraph::banana(2);
        let subs = connected_subgraphs(&g, &Limits::default()).unwrap();
        assert_eq!(subs.len(), 5);
        assert_eq!(sorted(subs), brute_force_subgraphs(&g));
    }

    #[test]
    fn small_counts() {
        let limits = Limits::default();
        assert_eq!(
            connected_subgraphs(&Multigraph::path(3), &limits)
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            connected_subgraphs(&Multigraph::path(1), &limits)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            connected_subgraphs(&Multigraph::cycle(3), &limits)
                .unwrap()
                .len(),
            10
        );
        assert!(connected_subgraphs(&Multigraph::new(), &limits)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn subgraph_cap_is_an_error() {
        let limits = Limits {
            max_subgraphs: 4,
            ..Limits::default()
        };
        let err = connected_subgraphs(&Multigraph::banana(2), &limits).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn cycles_of_small_graphs() {
        let limits = Limits::default();
        let b2 = simple_cycles(&Multigraph::banana(2), &limits).unwrap();
        assert_eq!(b2.len(), 1);
        assert_eq!(b2[0].len(), 2);
        assert_eq!(
            simple_cycles(&Multigraph::cycle(3), &limits).unwrap().len(),
            1
        );
        assert!(simple_cycles(&Multigraph::star(4), &limits)
            .unwrap()
            .is_empty());
        assert_eq!(
            simple_cycles(&Multigraph::complete(4), &limits)
                .unwrap()
                .len(),
            7
        );
        assert_eq!(brute_force_cycle_count(&Multigraph::complete(4)), 7);
        assert_eq!(
            simple_cycles(&Multigraph::banana(4), &limits)
                .unwrap()
                .len(),
            6
        );
    }

    #[test]
    fn reversal_is_valid_but_not_listed() {
        let g = Multigraph::complete(4);
        let cycles = simple_cycles(&g, &Limits::default()).unwrap();
        for c in &cycles {
            let r = c.reversed();
            assert!(Cycle::new(&g, r.nodes().to_vec(), r.edges().to_vec()).is_ok());
            assert!(!cycles.contains(&r));
        }
    }

    #[test]
    fn cycle_cap_is_an_error() {
        let limits = Limits {
            max_cycles: 3,
            ..Limits::default()
        };
        assert!(matches!(
            simple_cycles(&Multigraph::complete(4), &limits),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn stats_examples() {
        let limits = Limits::default();
        let b2 = graph_stats(&Multigraph::banana(2), &limits).unwrap();
        assert_eq!(
            (b2.edges, b2.leaves, b2.degree_two, b2.cycles_of_length(2)),
            (2, 0, 2, 1)
        );
        let p3 = graph_stats(&Multigraph::path(3), &limits).unwrap();
        assert_eq!((p3.edges, p3.leaves, p3.degree_two), (2, 2, 1));
        assert!(p3.cycles_by_length.is_empty());
        let c3 = graph_stats(&Multigraph::cycle(3), &limits).unwrap();
        assert_eq!(
            (c3.edges, c3.leaves, c3.degree_two, c3.cycles_of_length(3)),
            (3, 0, 3, 1)
        );
    }

    fn arb_multigraph() -> impl Strategy<Value = Multigraph> {
        (2usize..5)
            .prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..6)))
            .prop_map(|(n, pairs)| {
                let mut g = Multigraph::new();
                let ids: Vec<NodeId> = (0..n)
                    .map(|i| g.add_node(format!("n{i}")).unwrap())
                    .collect();
                for (a, b) in pairs {
                    if a != b {
                        g.add_edge(ids[a], ids[b], None).unwrap();
                    }
                }
                g
            })
    }

    proptest! {
        #[test]
        fn handshake_lemma(g in arb_multigraph()) {
            let total: usize = g.nodes().map(|v| g.degree(v)).sum();
            prop_assert_eq!(total, 2 * g.edge_count());
        }

        #[test]
        fn subgraphs_match_exhaustive_oracle(g in arb_multigraph()) {
            let subs = connected_subgraphs(&g, &Limits::default()).unwrap();
            for h in &subs {
                prop_assert!(h.validate(&g).is_ok());
                prop_assert!(h.is_connected(&g));
            }
            prop_assert_eq!(sorted(subs), brute_force_subgraphs(&g));
        }

        #[test]
        fn cycles_match_brute_force(g in arb_multigraph()) {
            let cycles = simple_cycles(&g, &Limits::default()).unwrap();
            prop_assert_eq!(cycles.len(), brute_force_cycle_count(&g));
            let mut dedup = cycles.clone();
            dedup.dedup();
            prop_assert_eq!(dedup.len(), cycles.len());
        }
    }
}
