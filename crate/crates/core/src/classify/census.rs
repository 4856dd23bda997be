//! Exhaustive enumeration of `[n, 2]` codes by multiplicity vector.
//!
//! The candidate space is split into shards keyed by `(m0, mp[0])`. Each
//! shard feeds a [`CensusAccumulator`]; accumulators merge by canonical form,
//! and every field of a class is a function of its canonical form, so the
//! merged result does not depend on how shards were distributed or ordered.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{EquivClass, MultVector, PointGroup};
use crate::family::dmax;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CensusFilter {
    /// Every two-dimensional code.
    All,
    /// Hermitian LCD codes.
    Lcd,
    /// Hermitian LCD codes meeting the distance bound `dmax(n)`.
    OptimalLcd,
}

/// All candidates with `m0` zero columns and `mp[0] = first`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shard {
    pub n: usize,
    pub m0: u32,
    pub first: u32,
}

impl Shard {
    /// Visits the shard's candidates in lexicographic order of `mp`.
    pub fn for_each_candidate(&self, mut f: impl FnMut(MultVector)) {
        let rest = self.n as u32 - self.m0 - self.first;
        for p1 in 0..=rest {
            for p2 in 0..=rest - p1 {
                for p3 in 0..=rest - p1 - p2 {
                    let p4 = rest - p1 - p2 - p3;
                    f(MultVector { m0: self.m0, mp: [self.first, p1, p2, p3, p4] });
                }
            }
        }
    }
}

/// Shards covering every multiplicity vector of length `n`, in
/// lexicographic order. Without `include_zero_columns` only `m0 = 0`.
pub fn shards(n: usize, include_zero_columns: bool) -> Vec<Shard> {
    let max_m0 = if include_zero_columns { n as u32 } else { 0 };
    let mut out = Vec::new();
    for m0 in 0..=max_m0 {
        for first in 0..=(n as u32 - m0) {
            out.push(Shard { n, m0, first });
        }
    }
    out
}

/// Collects classes keyed by canonical form.
#[derive(Debug, Clone)]
pub struct CensusAccumulator {
    n: usize,
    filter: CensusFilter,
    target_d: usize,
    classes: BTreeMap<MultVector, EquivClass>,
}

impl CensusAccumulator {
    pub fn new(n: usize, filter: CensusFilter) -> Result<CensusAccumulator, Error> {
        let target_d = dmax(n)?;
        Ok(CensusAccumulator { n, filter, target_d, classes: BTreeMap::new() })
    }

    pub fn accepts(&self, mv: &MultVector) -> bool {
        if !mv.spans_plane() || mv.length() != self.n {
            return false;
        }
        match self.filter {
            CensusFilter::All => true,
            CensusFilter::Lcd => mv.is_hermitian_lcd(),
            CensusFilter::OptimalLcd => mv.min_weight() == self.target_d && mv.is_hermitian_lcd(),
        }
    }

    pub fn visit(&mut self, mv: MultVector, group: &PointGroup) {
        if !self.accepts(&mv) {
            return;
        }
        let canon = mv.canonical(group);
        self.classes.entry(canon).or_insert_with(|| EquivClass::from_canonical(canon));
    }

    pub fn visit_shard(&mut self, shard: &Shard, group: &PointGroup) {
        shard.for_each_candidate(|mv| self.visit(mv, group));
    }

    /// Order-independent: inserting an existing canonical form is a no-op.
    pub fn merge(&mut self, other: CensusAccumulator) {
        for (k, v) in other.classes {
            self.classes.entry(k).or_insert(v);
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Classes sorted by canonical form.
    pub fn into_classes(self) -> Vec<EquivClass> {
        self.classes.into_values().collect()
    }
}

/// Runs one shard into a fresh accumulator.
pub fn census_shard(
    shard: &Shard,
    filter: CensusFilter,
    group: &PointGroup,
) -> Result<CensusAccumulator, Error> {
    let mut acc = CensusAccumulator::new(shard.n, filter)?;
    acc.visit_shard(shard, group);
    Ok(acc)
}

/// Every equivalence class of `[n, 2]` codes passing `filter`, sorted by
/// canonical form. Zero columns are only considered when requested.
pub fn census(
    n: usize,
    filter: CensusFilter,
    include_zero_columns: bool,
) -> Result<Vec<EquivClass>, Error> {
    let group = PointGroup::new();
    let mut acc = CensusAccumulator::new(n, filter)?;
    for shard in shards(n, include_zero_columns) {
        acc.visit_shard(&shard, &group);
    }
    Ok(acc.into_classes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::WeightEnumerator;

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn shards_cover_all_candidates() {
        for n in 2..9 {
            let mut count = 0;
            let mut last = None;
            for s in shards(n, false) {
                s.for_each_candidate(|mv| {
                    assert_eq!(mv.length(), n);
                    assert!(last < Some(mv));
                    last = Some(mv);
                    count += 1;
                });
            }
            assert_eq!(count, binomial(n + 4, 4));
            let mut with_zero = 0;
            for s in shards(n, true) {
                s.for_each_candidate(|_| with_zero += 1);
            }
            assert_eq!(with_zero, binomial(n + 5, 5));
        }
    }

    #[test]
    fn census_small_lengths() {
        let classes = census(7, CensusFilter::OptimalLcd, false).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(
            classes[0].weight_enumerator,
            WeightEnumerator::from_terms(7, [(0, 1), (5, 6), (6, 9)])
        );
        assert_eq!(census(10, CensusFilter::OptimalLcd, false).unwrap().len(), 2);
        assert_eq!(census(1, CensusFilter::All, false), Err(Error::LengthTooSmall { n: 1 }));
    }

    #[test]
    fn census_all_two_columns() {
        // [2, 2] codes: only the full space, up to equivalence
        let classes = census(2, CensusFilter::All, false).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].canon, MultVector { m0: 0, mp: [0, 0, 0, 1, 1] });
    }

    #[test]
    fn merge_is_order_independent() {
        let group = PointGroup::new();
        let all = shards(12, true);
        let mut forward = CensusAccumulator::new(12, CensusFilter::Lcd).unwrap();
        for s in &all {
            forward.merge(census_shard(s, CensusFilter::Lcd, &group).unwrap());
        }
        let mut backward = CensusAccumulator::new(12, CensusFilter::Lcd).unwrap();
        for s in all.iter().rev() {
            backward.merge(census_shard(s, CensusFilter::Lcd, &group).unwrap());
        }
        assert_eq!(forward.into_classes(), backward.into_classes());
    }
}
