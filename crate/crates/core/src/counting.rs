//! Closed-form face counts and the simplex-face enumeration that checks them.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::face::FaceEngine;
use crate::faceset::FaceSet;
use crate::limits::Limits;
use crate::multigraph::{graph_stats, simple_cycles, Multigraph};

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if k < 0 || n < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn int(x: usize) -> BigInt {
    BigInt::from(x)
}

fn to_unsigned(x: BigInt) -> BigUint {
    x.to_biguint().expect("closed-form counts are nonnegative")
}

/// Number of edges of `P_G`: `C(3e, 2) - 2e + l - 2Δ₂`, where `l` counts
/// leaves and `Δ₂` counts 2-cycles (pairs of parallel edges).
pub fn count_edges(g: &Multigraph, limits: &Limits) -> Result<BigUint> {
    g.require_no_isolated()?;
    let s = graph_stats(g, limits)?;
    let e = s.edges as i64;
    let total = BigInt::from(binomial(3 * e, 2)) - int(2 * s.edges) + int(s.leaves)
        - int(2 * s.cycles_of_length(2));
    Ok(to_unsigned(total))
}

/// Number of proper 2-faces of `P_G` for a simple graph:
/// `27 C(e,3) + 3(e + l)(e - 1) + v₂ - 2Δ₃`, with `v₂` the nodes of
/// degree two and `Δ₃` the triangles.
pub fn count_2faces_simple(g: &Multigraph, limits: &Limits) -> Result<BigUint> {
    g.require_no_isolated()?;
    if let Some((a, b)) = g.parallel_pair() {
        return Err(Error::NotSimple(
            g.edge_label(a).to_string(),
            g.edge_label(b).to_string(),
        ));
    }
    let s = graph_stats(g, limits)?;
    let e = s.edges as i64;
    let total = BigInt::from(binomial(e, 3)) * 27
        + BigInt::from(3 * (e + s.leaves as i64) * (e - 1))
        + int(s.degree_two)
        - int(2 * s.cycles_of_length(3));
    Ok(to_unsigned(total))
}

/// Number of 2-faces of `P_{B_k}`.
pub fn banana_2faces(k: usize) -> BigUint {
    match k {
        0 => BigUint::zero(),
        1 => BigUint::one(),
        2 => BigUint::from(5u32),
        _ => binomial(k as i64, 3) * 15u32 + binomial(k as i64, 2) * 3u32,
    }
}

/// Number of simplex faces of `P_{C_n}` with `k` vertices:
///
/// ```text
/// -2 C(n, k - n) + Σ_{i=0}^{⌊k/2⌋} C(n, i) C(n - i, k - 2i) 3^{k - 2i}  (+1 if k = 2n)
/// ```
///
/// The subtracted term removes the sets containing all marks of one
/// orientation. At `k = 2n` the only such set holds both orientations and
/// was subtracted twice, hence the correction.
pub fn cycle_simplex_count(n: usize, k: usize) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::Precondition(format!("cycle length {n} < 3")));
    }
    if k == 0 || k > 2 * n {
        return Err(Error::Precondition(format!(
            "k = {k} outside 1..={}",
            2 * n
        )));
    }
    let (n, k) = (n as i64, k as i64);
    let mut sum = BigInt::zero();
    for i in 0..=k / 2 {
        let term = binomial(n, i)
            * binomial(n - i, k - 2 * i)
            * BigUint::from(3u32).pow((k - 2 * i) as u32);
        sum += BigInt::from(term);
    }
    sum -= BigInt::from(binomial(n, k - n)) * 2;
    if k == 2 * n {
        sum += 1;
    }
    Ok(to_unsigned(sum))
}

/// Number of nonempty simplex faces of `P_{C_n}`: `5^n - 2^{n+1}`.
pub fn cycle_simplex_total(n: usize) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::Precondition(format!("cycle length {n} < 3")));
    }
    Ok(BigUint::from(5u32).pow(n as u32) - BigUint::from(2u32).pow(n as u32 + 1))
}

/// Number of nonempty simplex faces of `P_G` for a connected graph with
/// exactly one cycle, of length `d ≥ 3`:
/// `6^l · 5^{e-l-d} · (5^d - 2^{d+1} + 1) - 1`.
pub fn unicyclic_simplex_total(g: &Multigraph, limits: &Limits) -> Result<BigUint> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let cycles = simple_cycles(g, limits)?;
    if cycles.len() != 1 {
        return Err(Error::Precondition(format!(
            "graph has {} cycles, expected exactly one",
            cycles.len()
        )));
    }
    let d = cycles[0].len();
    if d <= 2 {
        return Err(Error::Precondition("the cycle has length 2".into()));
    }
    let e = g.edge_count();
    let l = g.nodes().filter(|&v| g.degree(v) == 1).count();
    let five = BigUint::from(5u32);
    let inner = five.pow(d as u32) + 1u32 - BigUint::from(2u32).pow(d as u32 + 1);
    Ok(BigUint::from(6u32).pow(l as u32) * five.pow((e - l - d) as u32) * inner - 1u32)
}

/// Simplex-face counts by number of vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SimplexCounts {
    pub by_size: BTreeMap<usize, u64>,
}

impl SimplexCounts {
    pub fn get(&self, k: usize) -> u64 {
        self.by_size.get(&k).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.by_size.values().sum()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,count\n");
        for (k, c) in &self.by_size {
            out.push_str(&format!("{k},{c}\n"));
        }
        out
    }
}

/// Counts the vertex sets of size `1..=k_max` that span a clique of the edge
/// graph and hold no fully marked cycle orientation. Cliques are grown in
/// increasing index order; a marked cycle in a set persists in all its
/// supersets, so such branches are pruned.
pub fn simplex_enumerate(
    engine: &FaceEngine<'_>,
    k_max: usize,
    limits: &Limits,
) -> Result<SimplexCounts> {
    let n = engine.polytope().vertex_count();
    let cap = limits.max_faces as u64;
    let per_root: Vec<Option<Vec<u64>>> = (0..n)
        .into_par_iter()
        .map(|root| {
            let mut counts = vec![0u64; k_max + 1];
            let set = FaceSet::from_indices(n, [root]);
            let mut budget = cap;
            grow(engine, set, root, k_max, &mut counts, &mut budget).then_some(counts)
        })
        .collect();
    let mut by_size = BTreeMap::new();
    let mut total = 0u64;
    for counts in per_root {
        let Some(counts) = counts else {
            return Err(cap_error(cap));
        };
        for (k, c) in counts.into_iter().enumerate().filter(|&(_, c)| c > 0) {
            *by_size.entry(k).or_insert(0) += c;
            total += c;
        }
    }
    if total > cap {
        return Err(cap_error(cap));
    }
    Ok(SimplexCounts { by_size })
}

fn cap_error(cap: u64) -> Error {
    Error::CapExceeded {
        what: "face",
        cap: cap as usize,
        context: "simplex enumeration".into(),
    }
}

fn grow(
    engine: &FaceEngine<'_>,
    set: FaceSet,
    last: usize,
    k_max: usize,
    counts: &mut [u64],
    budget: &mut u64,
) -> bool {
    if set.len() > k_max || engine.has_marked_cycle(&set) {
        return true;
    }
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    counts[set.len()] += 1;
    let n = set.universe();
    for next in last + 1..n {
        if set.iter().all(|i| engine.are_adjacent(i, next))
            && !grow(engine, set.with(next), next, k_max, counts, budget)
        {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::polytope::CosmologicalPolytope;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    fn simplices(g: Multigraph) -> SimplexCounts {
        let p = CosmologicalPolytope::new(g);
        let limits = Limits::default();
        let engine = FaceEngine::new(&p, &limits).unwrap();
        simplex_enumerate(&engine, p.vertex_count(), &limits).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(9, 2), big(36));
        assert_eq!(binomial(3, 4), big(0));
        assert_eq!(binomial(3, -1), big(0));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(
            binomial(60, 30),
            "118264581564861424".parse::<BigUint>().unwrap()
        );
    }

    #[test]
    fn theorem_counts() {
        let l = Limits::default();
        assert_eq!(count_edges(&Multigraph::banana(2), &l).unwrap(), big(9));
        assert_eq!(count_edges(&Multigraph::path(2), &l).unwrap(), big(3));
        assert_eq!(count_edges(&Multigraph::cycle(3), &l).unwrap(), big(30));
        assert_eq!(
            count_2faces_simple(&Multigraph::path(3), &l).unwrap(),
            big(13)
        );
        assert_eq!(
            count_2faces_simple(&Multigraph::cycle(3), &l).unwrap(),
            big(46)
        );
        assert_eq!(
            count_2faces_simple(&Multigraph::path(2), &l).unwrap(),
            big(0)
        );
        assert!(matches!(
            count_2faces_simple(&Multigraph::banana(2), &l),
            Err(Error::NotSimple(..))
        ));
        let mut iso = Multigraph::path(2);
        iso.add_node("z").unwrap();
        assert!(matches!(count_edges(&iso, &l), Err(Error::IsolatedNode(_))));
    }

    #[test]
    fn banana_counts() {
        assert_eq!(banana_2faces(1), big(1));
        assert_eq!(banana_2faces(2), big(5));
        assert_eq!(banana_2faces(3), big(24));
        assert_eq!(banana_2faces(4), big(78));
    }

    #[test]
    fn cycle_counts() {
        assert_eq!(cycle_simplex_count(3, 1).unwrap(), big(9));
        assert_eq!(cycle_simplex_count(4, 2).unwrap(), big(58));
        assert_eq!(cycle_simplex_count(3, 6).unwrap(), big(0));
        assert!(cycle_simplex_count(3, 7).is_err());
        assert!(cycle_simplex_count(3, 0).is_err());
        assert_eq!(cycle_simplex_total(3).unwrap(), big(109));
        assert_eq!(cycle_simplex_total(4).unwrap(), big(593));
        for n in 3..=6 {
            let sum: BigUint = (1..=2 * n)
                .map(|k| cycle_simplex_count(n, k).unwrap())
                .sum();
            assert_eq!(sum, cycle_simplex_total(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn cycle_counts_match_enumeration() {
        for n in 3..=5 {
            let counts = simplices(Multigraph::cycle(n));
            for k in 1..=2 * n {
                assert_eq!(
                    big(counts.get(k)),
                    cycle_simplex_count(n, k).unwrap(),
                    "n={n} k={k}"
                );
            }
            assert_eq!(big(counts.total()), cycle_simplex_total(n).unwrap());
        }
    }

    #[test]
    fn unicyclic_counts() {
        let l = Limits::default();
        let one = catalog::cycle_with_pendants(3, 1);
        assert_eq!(unicyclic_simplex_total(&one, &l).unwrap(), big(659));
        assert_eq!(big(simplices(one).total()), big(659));
        let two = catalog::cycle_with_pendants(3, 2);
        assert_eq!(unicyclic_simplex_total(&two, &l).unwrap(), big(3959));
        assert_eq!(big(simplices(two).total()), big(3959));
        assert_eq!(
            unicyclic_simplex_total(&Multigraph::cycle(4), &l).unwrap(),
            big(593)
        );
        assert!(unicyclic_simplex_total(&Multigraph::path(3), &l).is_err());
        assert!(unicyclic_simplex_total(&Multigraph::banana(2), &l).is_err());
        assert!(unicyclic_simplex_total(&Multigraph::complete(4), &l).is_err());
    }

    #[test]
    fn small_simplex_enumerations() {
        assert_eq!(simplices(Multigraph::path(2)).total(), 7);
        let b2 = simplices(Multigraph::banana(2));
        assert_eq!((b2.get(1), b2.get(2), b2.get(3), b2.total()), (6, 9, 2, 17));
        assert_eq!(b2.to_csv(), "k,count\n1,6\n2,9\n3,2\n");
    }
}
