//! Named small graphs used by tests, benchmarks and the CLI.

use crate::multigraph::Multigraph;

/// Looks up a graph by name: `P<n>` (path on n nodes), `C<n>` (cycle),
/// `K1,<k>` (star), `B<k>` (banana), `K<n>` (complete), plus `B2+pendant`,
/// `C3+pendant`, `C3+2pendants` and `B2-B2` (two bananas sharing a node).
pub fn by_name(name: &str) -> Option<Multigraph> {
    let num = |s: &str| s.parse::<usize>().ok();
    match name {
        "B2+pendant" => Some(banana_with_pendant()),
        "C3+pendant" => Some(cycle_with_pendants(3, 1)),
        "C3+2pendants" => Some(cycle_with_pendants(3, 2)),
        "B2-B2" => Some(banana_chain()),
        _ => {
            if let Some(k) = name.strip_prefix("K1,") {
                num(k).filter(|&k| k >= 1).map(Multigraph::star)
            } else if let Some(n) = name.strip_prefix('P') {
                num(n).filter(|&n| n >= 1).map(Multigraph::path)
            } else if let Some(n) = name.strip_prefix('C') {
                num(n).filter(|&n| n >= 2).map(Multigraph::cycle)
            } else if let Some(k) = name.strip_prefix('B') {
                num(k).filter(|&k| k >= 1).map(Multigraph::banana)
            } else if let Some(n) = name.strip_prefix('K') {
                num(n).filter(|&n| n >= 1).map(Multigraph::complete)
            } else {
                None
            }
        }
    }
}

/// B_2 on `v1, v2` plus the pendant edge `v2 v3`.
pub fn banana_with_pendant() -> Multigraph {
    let mut g = Multigraph::banana(2);
    g.add_edge_by_labels("v2", "v3", None).expect("valid");
    g
}

/// C_n with pendant edges at the first `pendants` cycle nodes.
pub fn cycle_with_pendants(n: usize, pendants: usize) -> Multigraph {
    let mut g = Multigraph::cycle(n);
    for i in 1..=pendants {
        g.add_edge_by_labels(&format!("v{i}"), &format!("u{i}"), None)
            .expect("valid");
    }
    g
}

/// Two bananas B_2 glued at `v2`: `v1 = v2 = v3`.
pub fn banana_chain() -> Multigraph {
    Multigraph::from_edge_list(&[("v1", "v2"), ("v1", "v2"), ("v2", "v3"), ("v2", "v3")])
        .expect("valid")
}

/// Every connected loopless multigraph with one to three edges, up to
/// isomorphism.
pub fn connected_up_to_three_edges() -> Vec<(&'static str, Multigraph)> {
    vec![
        ("P2", Multigraph::path(2)),
        ("P3", Multigraph::path(3)),
        ("B2", Multigraph::banana(2)),
        ("P4", Multigraph::path(4)),
        ("K1,3", Multigraph::star(3)),
        ("C3", Multigraph::cycle(3)),
        ("B3", Multigraph::banana(3)),
        ("B2+pendant", banana_with_pendant()),
    ]
}

/// The four-edge graphs used for sampled differential checks.
pub fn four_edge_samples() -> Vec<(&'static str, Multigraph)> {
    vec![
        ("C4", Multigraph::cycle(4)),
        ("C3+pendant", cycle_with_pendants(3, 1)),
        ("P5", Multigraph::path(5)),
        ("K1,4", Multigraph::star(4)),
        ("B2-B2", banana_chain()),
    ]
}
