//! Closed discrete sets of rationals: eventually periodic in both directions.
//!
//! A set is stored as a periodic pattern used for negative numbers, a periodic
//! pattern used for non-negative numbers, and the finite set of exceptions
//! where membership differs from that base. Fixing the pivot at `0` makes the
//! exception set, and hence the whole triple, unique.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::ext::{ExtRational, Rational};
use super::periodic::Periodic;
use super::simple::{Interval, SimpleSet};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DiscreteSet {
    below: Periodic,
    above: Periodic,
    exceptions: BTreeSet<Rational>,
}

impl DiscreteSet {
    pub fn empty() -> Self {
        DiscreteSet::default()
    }

    pub fn from_points<I: IntoIterator<Item = Rational>>(points: I) -> Self {
        DiscreteSet { below: Periodic::empty(), above: Periodic::empty(), exceptions: points.into_iter().collect() }
    }

    pub fn from_periodic(p: Periodic) -> Self {
        DiscreteSet { below: p.clone(), above: p, exceptions: BTreeSet::new() }
    }

    /// `{ anchor + k·step }`, optionally restricted to `window`.
    pub fn progression(anchor: &Rational, step: &Rational, window: Option<&SimpleSet>) -> Self {
        let full = DiscreteSet::from_periodic(Periodic::progression(anchor, step));
        match window {
            None => full,
            Some(w) => full.restrict(w),
        }
    }

    pub fn below(&self) -> &Periodic {
        &self.below
    }

    pub fn above(&self) -> &Periodic {
        &self.above
    }

    pub fn exceptions(&self) -> &BTreeSet<Rational> {
        &self.exceptions
    }

    fn base(&self, x: &Rational) -> bool {
        if x.is_negative() {
            self.below.contains(x)
        } else {
            self.above.contains(x)
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.base(x) ^ self.exceptions.contains(x)
    }

    pub fn is_empty(&self) -> bool {
        self.below.is_empty() && self.above.is_empty() && self.exceptions.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.below.is_empty() && self.above.is_empty()
    }

    /// Members of a finite set, ascending; `None` when infinite.
    pub fn finite_members(&self) -> Option<Vec<Rational>> {
        self.is_finite().then(|| self.exceptions.iter().cloned().collect())
    }

    /// Members in the closed window `[lo, hi]`.
    pub fn members_in(&self, lo: &Rational, hi: &Rational) -> Vec<Rational> {
        let mut out: BTreeSet<Rational> = BTreeSet::new();
        let zero = Rational::zero();
        if lo < &zero {
            let top = if hi < &zero { hi.clone() } else { zero.clone() };
            out.extend(self.below.members_in(lo, &top).into_iter().filter(|x| x.is_negative()));
        }
        if hi >= &zero {
            let bottom = if lo > &zero { lo.clone() } else { zero };
            out.extend(self.above.members_in(&bottom, hi));
        }
        for e in self.exceptions.range(lo.clone()..=hi.clone()) {
            if out.contains(e) {
                out.remove(e);
            } else {
                out.insert(e.clone());
            }
        }
        out.into_iter().collect()
    }

    /// Pointwise combination of discrete sets and interval masks.
    ///
    /// `f(sets, masks)` must be false whenever every set bit is false, so the
    /// result stays inside the union of `sets`.
    pub fn combine(sets: &[&DiscreteSet], masks: &[&SimpleSet], f: impl Fn(&[bool], &[bool]) -> bool) -> DiscreteSet {
        let left: Vec<bool> = masks.iter().map(|m| m.contains_left_tail()).collect();
        let right: Vec<bool> = masks.iter().map(|m| m.contains_right_tail()).collect();
        let belows: Vec<&Periodic> = sets.iter().map(|s| &s.below).collect();
        let aboves: Vec<&Periodic> = sets.iter().map(|s| &s.above).collect();
        let below = Periodic::combine(&belows, |d| f(d, &left));
        let above = Periodic::combine(&aboves, |d| f(d, &right));

        // outside [lo, hi] every mask sits at its tail value and every set
        // agrees with its pattern, so only the window needs inspection
        let zero = Rational::zero();
        let mut lo = zero.clone();
        let mut hi = zero;
        let mut note = |x: &Rational| {
            if x < &lo {
                lo = x.clone();
            }
            if x > &hi {
                hi = x.clone();
            }
        };
        for m in masks {
            m.endpoints().iter().for_each(&mut note);
        }
        for s in sets {
            s.exceptions.iter().for_each(&mut note);
        }
        let mut candidates: BTreeSet<Rational> = BTreeSet::new();
        for s in sets {
            candidates.extend(s.exceptions.iter().cloned());
            candidates.extend(s.below.members_in(&lo, &hi).into_iter().filter(|x| x.is_negative()));
            candidates.extend(s.above.members_in(&Rational::zero(), &hi));
        }
        let mut result = DiscreteSet { below, above, exceptions: BTreeSet::new() };
        let mut dbits = vec![false; sets.len()];
        let mut mbits = vec![false; masks.len()];
        let mut exceptions = BTreeSet::new();
        for x in candidates {
            for (b, s) in dbits.iter_mut().zip(sets) {
                *b = s.contains(&x);
            }
            for (b, m) in mbits.iter_mut().zip(masks) {
                *b = m.contains(&x);
            }
            if f(&dbits, &mbits) != result.base(&x) {
                exceptions.insert(x);
            }
        }
        result.exceptions = exceptions;
        result
    }

    pub fn union(&self, other: &DiscreteSet) -> DiscreteSet {
        DiscreteSet::combine(&[self, other], &[], |d, _| d[0] || d[1])
    }

    pub fn intersect(&self, other: &DiscreteSet) -> DiscreteSet {
        DiscreteSet::combine(&[self, other], &[], |d, _| d[0] && d[1])
    }

    pub fn difference(&self, other: &DiscreteSet) -> DiscreteSet {
        DiscreteSet::combine(&[self, other], &[], |d, _| d[0] && !d[1])
    }

    pub fn symmetric_difference(&self, other: &DiscreteSet) -> DiscreteSet {
        DiscreteSet::combine(&[self, other], &[], |d, _| d[0] ^ d[1])
    }

    /// `self ∩ mask`.
    pub fn restrict(&self, mask: &SimpleSet) -> DiscreteSet {
        DiscreteSet::combine(&[self], &[mask], |d, m| d[0] && m[0])
    }

    /// `self ∖ mask`.
    pub fn restrict_outside(&self, mask: &SimpleSet) -> DiscreteSet {
        DiscreteSet::combine(&[self], &[mask], |d, m| d[0] && !m[0])
    }

    /// Smallest member, or `None` if empty or unbounded below.
    pub fn min(&self) -> Option<Rational> {
        if !self.below.is_empty() {
            return None;
        }
        // below the pivot only exceptions can be members
        if let Some(x) = self.exceptions.iter().find(|x| x.is_negative()) {
            return Some(x.clone());
        }
        let mut from = Rational::zero();
        loop {
            let next_pattern = self.above.next_at_or_after(&from);
            let next_added = self.exceptions.range(from.clone()..).find(|x| !self.above.contains(x)).cloned();
            let cand = match (next_pattern, next_added) {
                (None, a) => return a,
                (Some(p), Some(a)) if a < p => return Some(a),
                (Some(p), _) => p,
            };
            if !self.exceptions.contains(&cand) {
                return Some(cand);
            }
            from = cand + Rational::new(1.into(), (self.above.scale() as i64 * 2).into());
        }
    }

    /// Largest member, or `None` if empty or unbounded above.
    pub fn max(&self) -> Option<Rational> {
        self.negated().min().map(|x| -x)
    }

    pub fn negated(&self) -> DiscreteSet {
        self.affine(&Rational::from_integer((-1).into()), &Rational::zero())
    }

    /// Image under `x -> slope * x + offset`, `slope != 0`.
    pub fn affine(&self, slope: &Rational, offset: &Rational) -> DiscreteSet {
        let at = ExtRational::Finite(offset.clone());
        let ray = |lo: ExtRational, hi: ExtRational, lo_closed, hi_closed| {
            SimpleSet::from_interval(Interval { lo, hi, lo_closed, hi_closed })
        };
        // images of (-inf, 0) and [0, inf)
        let (neg_image, nonneg_image) = if slope.is_positive() {
            (ray(ExtRational::NegInf, at.clone(), false, false), ray(at, ExtRational::PosInf, true, false))
        } else {
            (ray(at.clone(), ExtRational::PosInf, false, false), ray(ExtRational::NegInf, at, false, true))
        };
        let below = DiscreteSet::from_periodic(self.below.affine(slope, offset)).restrict(&neg_image);
        let above = DiscreteSet::from_periodic(self.above.affine(slope, offset)).restrict(&nonneg_image);
        let flips = DiscreteSet::from_points(self.exceptions.iter().map(|x| x * slope + offset));
        below.union(&above).symmetric_difference(&flips)
    }
}
