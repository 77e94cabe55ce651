//! Face decisions straight from the definition: a vertex subset is a face iff
//! some affine functional is constant on it and strictly smaller on every
//! other vertex. Decided by exact linear programming.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::lp::{LinearProgram, LpOutcome, Relation};
use crate::error::{Error, Result};
use crate::faceset::FaceSet;
use crate::functional::LinearFunctional;
use crate::limits::Limits;
use crate::polytope::CosmologicalPolytope;

#[derive(Debug, Clone, PartialEq)]
pub enum LpVerdict {
    /// A face, with a certificate (zero on the set, positive elsewhere).
    Face(LinearFunctional),
    NotFace,
}

impl LpVerdict {
    pub fn is_face(&self) -> bool {
        matches!(self, LpVerdict::Face(_))
    }
}

/// Exact LP face test.
///
/// With `x0` the first member of `X` and `phi = phi+ - phi-`, it searches for
/// `phi` with `phi·(x - x0) = 0` on `X` and `phi·(x0 - y) >= 1` off `X`,
/// minimizing `|phi|_1`. Any solution gives the certificate
/// `z -> phi·(x0 - z)`.
pub fn lp_is_face(polytope: &CosmologicalPolytope, set: &FaceSet) -> LpVerdict {
    let dim = polytope.ambient_dimension();
    if set.is_empty() {
        // Constant 1: positive on everything.
        let mut f = LinearFunctional::zero(dim);
        f.offset = -BigRational::from_integer(BigInt::from(1));
        return LpVerdict::Face(f);
    }
    if set.is_full() {
        return LpVerdict::Face(LinearFunctional::zero(dim));
    }
    let x0 = set.first().expect("nonempty");
    let mut lp = separation_lp(polytope, set, x0, |_| 1);
    lp.set_objective(vec![-1; 2 * dim]);
    match lp.solve() {
        LpOutcome::Optimal { x, .. } => {
            let phi: Vec<BigRational> = (0..dim).map(|k| &x[k] - &x[dim + k]).collect();
            let base = polytope.coords(x0);
            let offset = -phi
                .iter()
                .zip(base)
                .map(|(p, &b)| p * BigInt::from(b))
                .fold(BigRational::zero(), |a, b| a + b);
            let coeffs = phi.into_iter().map(|p| -p).collect();
            LpVerdict::Face(LinearFunctional { coeffs, offset })
        }
        LpOutcome::Infeasible => LpVerdict::NotFace,
        LpOutcome::Unbounded => unreachable!("objective is bounded above by zero"),
    }
}

/// Rows for `phi` constant on `set`, and `phi·(x0 - y) >= margin(y)` for `y`
/// outside it. Variables are `phi+` then `phi-`.
fn separation_lp(
    polytope: &CosmologicalPolytope,
    set: &FaceSet,
    x0: usize,
    margin: impl Fn(usize) -> i64,
) -> LinearProgram {
    let dim = polytope.ambient_dimension();
    let base = polytope.coords(x0);
    let row = |point: &[i64], sign: i64| -> Vec<i64> {
        let d: Vec<i64> = point
            .iter()
            .zip(base)
            .map(|(p, b)| sign * (p - b))
            .collect();
        d.iter().copied().chain(d.iter().map(|v| -v)).collect()
    };
    let mut lp = LinearProgram::new(2 * dim);
    for i in set.iter().filter(|&i| i != x0) {
        lp.add_row(row(polytope.coords(i), 1), Relation::Eq, 0);
    }
    for y in (0..polytope.vertex_count()).filter(|&y| !set.contains(y)) {
        lp.add_row(row(polytope.coords(y), -1), Relation::Ge, margin(y));
    }
    lp
}

/// The smallest face containing `set` (its vertex set). A vertex `y` belongs
/// to it iff no functional that is maximal on `set` is strictly smaller at `y`.
/// `set` is a face iff this returns `set` itself; the extra vertices are the
/// witness for a non-face.
pub fn lp_face_hull(polytope: &CosmologicalPolytope, set: &FaceSet) -> FaceSet {
    let Some(x0) = set.first() else {
        return set.clone();
    };
    let mut hull = set.clone();
    for y in (0..polytope.vertex_count()).filter(|&y| !set.contains(y)) {
        let lp = separation_lp(polytope, set, x0, |z| i64::from(z == y));
        if lp.solve() == LpOutcome::Infeasible {
            hull.insert(y);
        }
    }
    hull
}

/// Every vertex subset that the LP certifies as a face, in index order of
/// their bitmasks' sorted forms.
pub fn brute_force_faces(polytope: &CosmologicalPolytope, limits: &Limits) -> Result<Vec<FaceSet>> {
    let n = polytope.vertex_count();
    if n > limits.max_oracle_vertices || n >= 63 {
        return Err(Error::CapExceeded {
            what: "oracle vertex",
            cap: limits.max_oracle_vertices,
            context: format!("polytope has {n} vertices"),
        });
    }
    let mut faces: Vec<FaceSet> = (0u64..1 << n)
        .into_par_iter()
        .filter_map(|mask| {
            let set = FaceSet::from_mask(n, mask);
            lp_is_face(polytope, &set).is_face().then_some(set)
        })
        .collect();
    faces.sort();
    Ok(faces)
}
