//! Finite unions of intervals and points on the extended rational line.
//!
//! Every boolean operation works the same way: collect the finite endpoints of
//! all operands, split the line into the endpoints themselves and the open gaps
//! between them, evaluate the operation once per piece, and rebuild maximal runs.
//! Maximal runs are what makes the result canonical.

use std::collections::BTreeSet;

use num_traits::{One, Signed};

use super::ext::{ExtRational, Rational};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: ExtRational,
    pub hi: ExtRational,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    /// Validated interval. `lo == hi` is accepted only as a closed degenerate
    /// interval `[a,a]`; infinite ends must be open.
    pub fn new(lo: ExtRational, hi: ExtRational, lo_closed: bool, hi_closed: bool) -> Result<Self, Error> {
        if (lo_closed && !lo.is_finite()) || (hi_closed && !hi.is_finite()) {
            return Err(Error::Validation("an infinite endpoint cannot be closed".into()));
        }
        if lo == ExtRational::PosInf || hi == ExtRational::NegInf {
            return Err(Error::Validation(format!("interval bounds out of order: {lo} .. {hi}")));
        }
        if lo > hi {
            return Err(Error::Validation(format!("interval bounds out of order: {lo} > {hi}")));
        }
        if lo == hi && !(lo_closed && hi_closed) {
            return Err(Error::Validation(format!("empty interval at {lo}")));
        }
        Ok(Interval { lo, hi, lo_closed, hi_closed })
    }

    pub fn full() -> Self {
        Interval { lo: ExtRational::NegInf, hi: ExtRational::PosInf, lo_closed: false, hi_closed: false }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = match &self.lo {
            ExtRational::NegInf => true,
            ExtRational::Finite(lo) => lo < x || (self.lo_closed && lo == x),
            ExtRational::PosInf => false,
        };
        let below = match &self.hi {
            ExtRational::PosInf => true,
            ExtRational::Finite(hi) => x < hi || (self.hi_closed && hi == x),
            ExtRational::NegInf => false,
        };
        above && below
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn to_simple(&self) -> SimpleSet {
        if self.is_degenerate() {
            let p = self.lo.finite().expect("degenerate intervals are finite").clone();
            SimpleSet { components: vec![Component::Point(p)] }
        } else {
            SimpleSet { components: vec![Component::Interval(self.clone())] }
        }
    }

    /// Image under `x -> slope * x + offset` with `slope != 0`.
    pub(crate) fn affine(&self, slope: &Rational, offset: &Rational) -> Interval {
        let lo = self.lo.affine(slope, offset);
        let hi = self.hi.affine(slope, offset);
        if slope.is_negative() {
            Interval { lo: hi, hi: lo, lo_closed: self.hi_closed, hi_closed: self.lo_closed }
        } else {
            Interval { lo, hi, lo_closed: self.lo_closed, hi_closed: self.hi_closed }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Component {
    Interval(Interval),
    Point(Rational),
}

impl Component {
    pub fn contains(&self, x: &Rational) -> bool {
        match self {
            Component::Interval(iv) => iv.contains(x),
            Component::Point(p) => p == x,
        }
    }

    fn push_endpoints(&self, out: &mut BTreeSet<Rational>) {
        match self {
            Component::Interval(iv) => {
                if let ExtRational::Finite(q) = &iv.lo {
                    out.insert(q.clone());
                }
                if let ExtRational::Finite(q) = &iv.hi {
                    out.insert(q.clone());
                }
            }
            Component::Point(p) => {
                out.insert(p.clone());
            }
        }
    }
}

/// Sorted, pairwise disjoint, maximally merged components.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SimpleSet {
    components: Vec<Component>,
}

/// The pieces of the line cut at a sorted list of rationals: open gaps and the
/// cut points themselves, in left-to-right order.
pub(crate) struct Partition {
    cuts: Vec<Rational>,
}

impl Partition {
    pub(crate) fn new(cuts: BTreeSet<Rational>) -> Self {
        Partition { cuts: cuts.into_iter().collect() }
    }

    pub(crate) fn cuts(&self) -> &[Rational] {
        &self.cuts
    }

    pub(crate) fn gap_count(&self) -> usize {
        self.cuts.len() + 1
    }

    /// A rational strictly inside gap `i`.
    pub(crate) fn gap_sample(&self, i: usize) -> Rational {
        let n = self.cuts.len();
        match (i.checked_sub(1).map(|j| &self.cuts[j]), self.cuts.get(i)) {
            (None, None) => Rational::from_integer(0.into()),
            (None, Some(hi)) => hi - Rational::one(),
            (Some(lo), None) => {
                debug_assert_eq!(i, n);
                lo + Rational::one()
            }
            (Some(lo), Some(hi)) => (lo + hi) / Rational::from_integer(2.into()),
        }
    }

    /// Rebuilds the canonical set from per-piece membership.
    pub(crate) fn build(&self, gaps: &[bool], cuts: &[bool]) -> SimpleSet {
        debug_assert_eq!(gaps.len(), self.gap_count());
        debug_assert_eq!(cuts.len(), self.cuts.len());
        // piece 2i is gap i, piece 2i+1 is cut i
        let total = 2 * self.cuts.len() + 1;
        let member = |k: usize| if k.is_multiple_of(2) { gaps[k / 2] } else { cuts[k / 2] };
        let mut components = Vec::new();
        let mut k = 0;
        while k < total {
            if !member(k) {
                k += 1;
                continue;
            }
            let start = k;
            while k + 1 < total && member(k + 1) {
                k += 1;
            }
            let end = k;
            k += 1;
            if start == end && start % 2 == 1 {
                components.push(Component::Point(self.cuts[start / 2].clone()));
                continue;
            }
            let (lo, lo_closed) = if start % 2 == 1 {
                (ExtRational::Finite(self.cuts[start / 2].clone()), true)
            } else if start == 0 {
                (ExtRational::NegInf, false)
            } else {
                (ExtRational::Finite(self.cuts[start / 2 - 1].clone()), false)
            };
            let (hi, hi_closed) = if end % 2 == 1 {
                (ExtRational::Finite(self.cuts[end / 2].clone()), true)
            } else if end == total - 1 {
                (ExtRational::PosInf, false)
            } else {
                (ExtRational::Finite(self.cuts[end / 2].clone()), false)
            };
            components.push(Component::Interval(Interval { lo, hi, lo_closed, hi_closed }));
        }
        SimpleSet { components }
    }
}

impl SimpleSet {
    pub fn empty() -> Self {
        SimpleSet { components: Vec::new() }
    }

    pub fn full() -> Self {
        SimpleSet { components: vec![Component::Interval(Interval::full())] }
    }

    pub fn from_interval(iv: Interval) -> Self {
        iv.to_simple()
    }

    pub fn from_points<I: IntoIterator<Item = Rational>>(points: I) -> Self {
        let set: BTreeSet<Rational> = points.into_iter().collect();
        SimpleSet { components: set.into_iter().map(Component::Point).collect() }
    }

    /// Canonical union of arbitrary (possibly overlapping) components.
    pub fn from_components<I: IntoIterator<Item = Component>>(parts: I) -> Self {
        let parts: Vec<SimpleSet> = parts.into_iter().map(|c| SimpleSet { components: vec![c] }).collect();
        let refs: Vec<&SimpleSet> = parts.iter().collect();
        SimpleSet::combine(&refs, |bits| bits.iter().any(|&b| b))
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.components.len() == 1 && self.components[0] == Component::Interval(Interval::full())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        // components are sorted; a linear scan is fine at the sizes we handle
        self.components.iter().any(|c| c.contains(x))
    }

    pub fn contains_left_tail(&self) -> bool {
        matches!(self.components.first(), Some(Component::Interval(iv)) if iv.lo == ExtRational::NegInf)
    }

    pub fn contains_right_tail(&self) -> bool {
        matches!(self.components.last(), Some(Component::Interval(iv)) if iv.hi == ExtRational::PosInf)
    }

    pub fn endpoints(&self) -> BTreeSet<Rational> {
        let mut out = BTreeSet::new();
        for c in &self.components {
            c.push_endpoints(&mut out);
        }
        out
    }

    pub(crate) fn partition_of(sets: &[&SimpleSet]) -> Partition {
        let mut cuts = BTreeSet::new();
        for s in sets {
            for c in &s.components {
                c.push_endpoints(&mut cuts);
            }
        }
        Partition::new(cuts)
    }

    /// Pointwise combination: `x` is in the result iff `f` of the memberships is true.
    pub fn combine(sets: &[&SimpleSet], f: impl Fn(&[bool]) -> bool) -> SimpleSet {
        let part = SimpleSet::partition_of(sets);
        let mut bits = vec![false; sets.len()];
        let mut gaps = Vec::with_capacity(part.gap_count());
        for i in 0..part.gap_count() {
            let x = part.gap_sample(i);
            for (b, s) in bits.iter_mut().zip(sets) {
                *b = s.contains(&x);
            }
            gaps.push(f(&bits));
        }
        let mut cuts = Vec::with_capacity(part.cuts().len());
        for x in part.cuts() {
            for (b, s) in bits.iter_mut().zip(sets) {
                *b = s.contains(x);
            }
            cuts.push(f(&bits));
        }
        part.build(&gaps, &cuts)
    }

    pub fn union(&self, other: &SimpleSet) -> SimpleSet {
        SimpleSet::combine(&[self, other], |b| b[0] || b[1])
    }

    pub fn intersect(&self, other: &SimpleSet) -> SimpleSet {
        SimpleSet::combine(&[self, other], |b| b[0] && b[1])
    }

    pub fn difference(&self, other: &SimpleSet) -> SimpleSet {
        SimpleSet::combine(&[self, other], |b| b[0] && !b[1])
    }

    pub fn complement(&self) -> SimpleSet {
        SimpleSet::combine(&[self], |b| !b[0])
    }

    pub fn is_subset(&self, other: &SimpleSet) -> bool {
        self.difference(other).is_empty()
    }

    /// Per-piece rebuild where each cut decides from its own membership and the
    /// membership of the two gaps around it.
    fn rebuild_cuts(&self, rule: impl Fn(bool, bool, bool) -> bool) -> SimpleSet {
        let part = SimpleSet::partition_of(&[self]);
        let gaps: Vec<bool> = (0..part.gap_count()).map(|i| self.contains(&part.gap_sample(i))).collect();
        let cuts: Vec<bool> =
            part.cuts().iter().enumerate().map(|(i, x)| rule(gaps[i], self.contains(x), gaps[i + 1])).collect();
        part.build(&gaps, &cuts)
    }

    /// Euclidean closure: closes every interval end; isolated points stay.
    pub fn closure(&self) -> SimpleSet {
        self.rebuild_cuts(|l, c, r| l || c || r)
    }

    /// Euclidean interior: drops points and closed ends.
    pub fn interior(&self) -> SimpleSet {
        self.rebuild_cuts(|l, c, r| l && c && r)
    }

    /// Normal form for an irrational trace: membership at rational cuts is
    /// irrelevant, so a cut is kept exactly when both neighbouring gaps are in.
    /// The result consists of open intervals separated by gaps of positive length.
    pub(crate) fn open_hull(&self) -> SimpleSet {
        self.rebuild_cuts(|l, _, r| l && r)
    }

    /// Image under `x -> slope * x + offset` with `slope != 0`.
    pub(crate) fn affine(&self, slope: &Rational, offset: &Rational) -> SimpleSet {
        let mut comps: Vec<Component> = self
            .components
            .iter()
            .map(|c| match c {
                Component::Interval(iv) => Component::Interval(iv.affine(slope, offset)),
                Component::Point(p) => Component::Point(p * slope + offset),
            })
            .collect();
        if slope.is_negative() {
            comps.reverse();
        }
        SimpleSet { components: comps }
    }

    /// Infimum of the set and whether it is attained.
    pub fn infimum(&self) -> Option<(ExtRational, bool)> {
        self.components.first().map(|c| match c {
            Component::Interval(iv) => (iv.lo.clone(), iv.lo_closed),
            Component::Point(p) => (ExtRational::Finite(p.clone()), true),
        })
    }

    pub fn supremum(&self) -> Option<(ExtRational, bool)> {
        self.components.last().map(|c| match c {
            Component::Interval(iv) => (iv.hi.clone(), iv.hi_closed),
            Component::Point(p) => (ExtRational::Finite(p.clone()), true),
        })
    }

    /// Whether any component is a non-degenerate interval.
    pub fn has_intervals(&self) -> bool {
        self.components.iter().any(|c| matches!(c, Component::Interval(_)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realset::ext::{int, rat};

    fn iv(lo: i64, hi: i64, lc: bool, hc: bool) -> SimpleSet {
        Interval::new(int(lo).into(), int(hi).into(), lc, hc).unwrap().to_simple()
    }

    #[test]
    fn adjacent_components_merge() {
        let s = iv(0, 1, false, false).union(&SimpleSet::from_points([int(1)])).union(&iv(1, 2, false, false));
        assert_eq!(s, iv(0, 2, false, false));
    }

    #[test]
    fn separated_by_missing_point_stays_split() {
        let s = iv(2, 5, false, false).union(&iv(5, 9, false, false));
        assert_eq!(s.components().len(), 2);
    }

    #[test]
    fn intersection_of_closed_rays_is_point() {
        let left = SimpleSet::from_interval(Interval::new(ExtRational::NegInf, int(2).into(), false, true).unwrap());
        let right = SimpleSet::from_interval(Interval::new(int(2).into(), ExtRational::PosInf, true, false).unwrap());
        assert_eq!(left.intersect(&right), SimpleSet::from_points([int(2)]));
    }

    #[test]
    fn rejects_malformed() {
        assert!(Interval::new(int(2).into(), int(1).into(), false, false).is_err());
        assert!(Interval::new(int(1).into(), int(1).into(), false, true).is_err());
        assert!(Interval::new(ExtRational::NegInf, int(1).into(), true, false).is_err());
    }

    #[test]
    fn closure_and_interior() {
        let s = iv(0, 1, false, true).union(&SimpleSet::from_points([int(3)]));
        assert_eq!(s.closure(), iv(0, 1, true, true).union(&SimpleSet::from_points([int(3)])));
        assert_eq!(s.interior(), iv(0, 1, false, false));
    }

    #[test]
    fn open_hull_bridges_rational_cuts() {
        let s = iv(0, 1, false, false).union(&iv(1, 2, false, true)).union(&SimpleSet::from_points([int(5)]));
        assert_eq!(s.open_hull(), iv(0, 2, false, false));
    }

    #[test]
    fn affine_reverses_for_negative_slope() {
        let s = iv(0, 1, true, false);
        let t = s.affine(&int(-2), &int(1));
        assert_eq!(t, Interval::new(int(-1).into(), int(1).into(), false, true).unwrap().to_simple());
        assert!(t.contains(&rat(1, 2)));
    }

    #[test]
    fn complement_involution() {
        let s = iv(0, 1, false, true).union(&SimpleSet::from_points([int(3), int(-2)]));
        assert_eq!(s.complement().complement(), s);
    }
}
