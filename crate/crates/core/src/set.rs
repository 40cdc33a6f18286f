use std::fmt;

use fixedbitset::FixedBitSet;

use crate::inference::Judgment;

/// A subset of a finite judgment universe, stored as a fixed-width bit vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct JudgmentSet {
    bits: FixedBitSet,
}

impl JudgmentSet {
    pub fn empty(universe_size: usize) -> Self {
        JudgmentSet {
            bits: FixedBitSet::with_capacity(universe_size),
        }
    }

    pub fn full(universe_size: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe_size);
        bits.insert_range(..);
        JudgmentSet { bits }
    }

    pub fn from_ids<I: IntoIterator<Item = Judgment>>(universe_size: usize, ids: I) -> Self {
        let mut set = Self::empty(universe_size);
        for j in ids {
            set.insert(j);
        }
        set
    }

    /// Builds the set whose members are the bits of `mask`, for universes of at most 64 judgments.
    pub fn from_mask(universe_size: usize, mask: u64) -> Self {
        assert!(
            universe_size <= 64,
            "mask construction limited to 64 judgments"
        );
        Self::from_ids(
            universe_size,
            (0..universe_size).filter(|&i| mask >> i & 1 == 1),
        )
    }

    pub fn universe_size(&self) -> usize {
        self.bits.len()
    }

    /// Panics if `j` lies outside the universe.
    pub fn insert(&mut self, j: Judgment) {
        self.bits.insert(j);
    }

    pub fn remove(&mut self, j: Judgment) {
        self.bits.set(j, false);
    }

    pub fn contains(&self, j: Judgment) -> bool {
        self.bits.contains(j)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_subset(&self, other: &JudgmentSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union(&self, other: &JudgmentSet) -> JudgmentSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        JudgmentSet { bits }
    }

    pub fn intersection(&self, other: &JudgmentSet) -> JudgmentSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        JudgmentSet { bits }
    }

    pub fn difference(&self, other: &JudgmentSet) -> JudgmentSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        JudgmentSet { bits }
    }

    /// Members in ascending id order.
    pub fn iter(&self) -> impl Iterator<Item = Judgment> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<Judgment> {
        self.iter().collect()
    }
}

impl fmt::Debug for JudgmentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
