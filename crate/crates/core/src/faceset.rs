use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

/// A set of polytope vertices, stored as a bitset over vertex indices.
///
/// Ordering is lexicographic on the sorted index list, so `{0, 5} < {1}`.
#[derive(Clone, PartialEq, Eq)]
pub struct FaceSet {
    bits: FixedBitSet,
}

impl FaceSet {
    pub fn empty(universe: usize) -> Self {
        FaceSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        FaceSet { bits }
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Builds the subset of `0..universe` selected by the low bits of `mask`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        Self::from_indices(universe, (0..universe).filter(|i| mask >> i & 1 == 1))
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, i: usize) {
        self.bits.insert(i);
    }

    pub fn remove(&mut self, i: usize) {
        self.bits.set(i, false);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn is_subset(&self, other: &FaceSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn intersection(&self, other: &FaceSet) -> FaceSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        FaceSet { bits }
    }

    pub fn union(&self, other: &FaceSet) -> FaceSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        FaceSet { bits }
    }

    pub fn difference(&self, other: &FaceSet) -> FaceSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        FaceSet { bits }
    }

    pub fn complement(&self) -> FaceSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        FaceSet { bits }
    }

    pub fn with(&self, i: usize) -> FaceSet {
        let mut s = self.clone();
        s.insert(i);
        s
    }
}

impl Hash for FaceSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.as_slice().hash(state);
    }
}

impl Ord for FaceSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for FaceSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a = FaceSet::from_indices(6, [0, 2, 4]);
        let b = FaceSet::from_indices(6, [2, 3]);
        assert_eq!(a.intersection(&b).to_vec(), vec![2]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 2, 3, 4]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 4]);
        assert_eq!(a.complement().to_vec(), vec![1, 3, 5]);
        assert!(FaceSet::empty(6).is_subset(&a));
        assert!(FaceSet::full(6).is_full());
        assert_eq!(FaceSet::from_mask(4, 0b1010).to_vec(), vec![1, 3]);
    }

    #[test]
    fn ordering_is_lexicographic_on_indices() {
        let a = FaceSet::from_indices(8, [0, 5]);
        let b = FaceSet::from_indices(8, [1]);
        let c = FaceSet::from_indices(8, [0]);
        assert!(a < b);
        assert!(c < a);
        assert!(FaceSet::empty(8) < c);
    }
}
