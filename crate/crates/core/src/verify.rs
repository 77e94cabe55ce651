//! Differential testing of the graph face criterion against the LP oracle.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::face::FaceEngine;
use crate::faceset::FaceSet;
use crate::limits::Limits;
use crate::oracle::{lp_is_face, LpVerdict};
use crate::polytope::CosmologicalPolytope;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// All `2^n` vertex subsets; bounded by `Limits::max_oracle_vertices`.
    Exhaustive,
    /// Uniform random subsets (each vertex kept with probability 1/2).
    Sampled { samples: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub vertices: Vec<String>,
    pub criterion: bool,
    pub oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checked: u64,
    pub mismatches: u64,
    /// The first disagreement, shrunk until no single vertex can be
    /// dropped without the two sides agreeing.
    pub counterexample: Option<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

/// `Some((criterion, oracle))` when the two disagree, or when the oracle's
/// certificate fails to verify.
fn disagreement(engine: &FaceEngine<'_>, set: &FaceSet) -> Option<(bool, bool)> {
    let criterion = engine
        .is_face(set)
        .expect("set over the polytope's vertices");
    let oracle = match lp_is_face(engine.polytope(), set) {
        LpVerdict::Face(cert) => {
            if !cert.certifies(engine.polytope(), set) {
                return Some((criterion, false));
            }
            true
        }
        LpVerdict::NotFace => false,
    };
    (criterion != oracle).then_some((criterion, oracle))
}

fn minimize(engine: &FaceEngine<'_>, mut set: FaceSet) -> FaceSet {
    'shrink: loop {
        for i in set.to_vec() {
            let mut smaller = set.clone();
            smaller.remove(i);
            if disagreement(engine, &smaller).is_some() {
                set = smaller;
                continue 'shrink;
            }
        }
        return set;
    }
}

pub fn sample_subsets(n: usize, samples: usize, seed: u64) -> Vec<FaceSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| FaceSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5))))
        .collect()
}

pub fn verify(
    polytope: &CosmologicalPolytope,
    limits: &Limits,
    mode: VerifyMode,
) -> Result<VerifyReport> {
    let engine = FaceEngine::new(polytope, limits)?;
    let n = polytope.vertex_count();
    let subsets: Vec<FaceSet> = match mode {
        VerifyMode::Exhaustive => {
            if n > limits.max_oracle_vertices || n >= 63 {
                return Err(Error::CapExceeded {
                    what: "oracle vertex",
                    cap: limits.max_oracle_vertices,
                    context: format!("exhaustive check of a polytope with {n} vertices"),
                });
            }
            (0u64..1 << n).map(|m| FaceSet::from_mask(n, m)).collect()
        }
        VerifyMode::Sampled { samples, seed } => sample_subsets(n, samples, seed),
    };
    let bad: Vec<usize> = subsets
        .par_iter()
        .enumerate()
        .filter_map(|(i, s)| disagreement(&engine, s).map(|_| i))
        .collect();
    let counterexample = bad.first().map(|&i| {
        let set = minimize(&engine, subsets[i].clone());
        let (criterion, oracle) =
            disagreement(&engine, &set).expect("minimized set still disagrees");
        Mismatch {
            vertices: polytope.labels_of(&set),
            criterion,
            oracle,
        }
    });
    Ok(VerifyReport {
        checked: subsets.len() as u64,
        mismatches: bad.len() as u64,
        counterexample,
    })
}
