use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::faceset::FaceSet;
use crate::oracle::scalar::rational_string;
use crate::polytope::CosmologicalPolytope;

/// An affine functional `z -> <coeffs, z> - offset` on the ambient space.
///
/// As a face certificate it vanishes on the face and is strictly positive on
/// every other polytope vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFunctional {
    pub coeffs: Vec<BigRational>,
    pub offset: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FunctionalRecord {
    /// Nonzero coefficients keyed by coordinate name, as `p/q` strings.
    pub coeffs: BTreeMap<String, String>,
    pub offset: String,
}

impl LinearFunctional {
    pub fn zero(dim: usize) -> Self {
        LinearFunctional {
            coeffs: vec![BigRational::zero(); dim],
            offset: BigRational::zero(),
        }
    }

    pub fn from_integers(coeffs: &[i64], offset: i64) -> Self {
        LinearFunctional {
            coeffs: coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
            offset: BigRational::from_integer(BigInt::from(offset)),
        }
    }

    pub fn evaluate(&self, point: &[i64]) -> BigRational {
        let mut acc = -self.offset.clone();
        for (c, &x) in self.coeffs.iter().zip(point) {
            if x != 0 && !c.is_zero() {
                acc += c * BigInt::from(x);
            }
        }
        acc
    }

    /// True iff this vanishes exactly on `face` and is positive elsewhere.
    pub fn certifies(&self, polytope: &CosmologicalPolytope, face: &FaceSet) -> bool {
        (0..polytope.vertex_count()).all(|i| {
            let v = self.evaluate(polytope.coords(i));
            if face.contains(i) {
                v.is_zero()
            } else {
                v.is_positive()
            }
        })
    }

    pub fn record(&self, polytope: &CosmologicalPolytope) -> FunctionalRecord {
        let names = polytope.coordinate_names();
        FunctionalRecord {
            coeffs: names
                .into_iter()
                .zip(&self.coeffs)
                .filter(|(_, c)| !c.is_zero())
                .map(|(n, c)| (n, rational_string(c)))
                .collect(),
            offset: rational_string(&self.offset),
        }
    }
}
