//! Representable subsets of ℝ.
//!
//! A set `S` is described by its two traces. The trace on ℚ is an interval set
//! `J` corrected on a closed discrete set of rationals (`q_plus` added,
//! `q_minus` removed); the trace on the irrationals is an open interval set `V`.
//!
//! Canonical form: `J` has no isolated points and no punctures, and an endpoint
//! of `J` is closed exactly when it belongs to `S`. `V` consists of open
//! intervals with gaps of positive length. Under these rules the four parts are
//! determined by the set, so equality is structural.

pub mod discrete;
pub mod ext;
pub mod periodic;
mod render;
pub mod simple;

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::Serialize;

pub use discrete::DiscreteSet;
pub use periodic::Periodic;

use ext::{int, ExtRational, Rational};
use simple::{Interval, SimpleSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CardinalityClass {
    Finite(usize),
    CountablyInfinite,
    Uncountable,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RealSet {
    q_intervals: SimpleSet,
    q_plus: DiscreteSet,
    q_minus: DiscreteSet,
    i_intervals: SimpleSet,
}

impl RealSet {
    /// Normalises an arbitrary description: rational trace `(J ∩ ℚ) Δ flips`,
    /// irrational trace `V ∩ 𝕀`.
    pub fn from_parts(j: &SimpleSet, flips: &DiscreteSet, v: &SimpleSet) -> RealSet {
        let part = SimpleSet::partition_of(&[j]);
        let gaps: Vec<bool> = (0..part.gap_count()).map(|i| j.contains(&part.gap_sample(i))).collect();
        let mut changed = Vec::new();
        let cuts: Vec<bool> = part
            .cuts()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let raw = j.contains(c);
                let wanted = match (gaps[i], gaps[i + 1]) {
                    (true, true) => true,
                    (false, false) => false,
                    _ => raw ^ flips.contains(c),
                };
                if wanted != raw {
                    changed.push(c.clone());
                }
                wanted
            })
            .collect();
        let q_intervals = part.build(&gaps, &cuts);
        let flips = flips.symmetric_difference(&DiscreteSet::from_points(changed));
        RealSet {
            q_plus: flips.restrict_outside(&q_intervals),
            q_minus: flips.restrict(&q_intervals),
            q_intervals,
            i_intervals: v.open_hull(),
        }
    }

    pub fn empty() -> RealSet {
        RealSet {
            q_intervals: SimpleSet::empty(),
            q_plus: DiscreteSet::empty(),
            q_minus: DiscreteSet::empty(),
            i_intervals: SimpleSet::empty(),
        }
    }

    pub fn reals() -> RealSet {
        RealSet::embed(&SimpleSet::full())
    }

    pub fn rationals() -> RealSet {
        RealSet::q_trace(&SimpleSet::full())
    }

    pub fn irrationals() -> RealSet {
        RealSet::i_trace(&SimpleSet::full())
    }

    pub fn integers() -> RealSet {
        RealSet::discrete(DiscreteSet::progression(&int(0), &int(1), None))
    }

    /// Positive integers.
    pub fn naturals() -> RealSet {
        let ray = Interval::new(int(1).into(), ExtRational::PosInf, true, false).expect("valid ray");
        RealSet::discrete(DiscreteSet::progression(&int(1), &int(1), Some(&ray.to_simple())))
    }

    /// `U` itself, on both traces.
    pub fn embed(u: &SimpleSet) -> RealSet {
        RealSet::from_parts(u, &DiscreteSet::empty(), u)
    }

    /// `U ∩ ℚ`.
    pub fn q_trace(u: &SimpleSet) -> RealSet {
        RealSet::from_parts(u, &DiscreteSet::empty(), &SimpleSet::empty())
    }

    /// `U ∩ 𝕀`.
    pub fn i_trace(u: &SimpleSet) -> RealSet {
        RealSet::from_parts(&SimpleSet::empty(), &DiscreteSet::empty(), u)
    }

    pub fn interval(iv: Interval) -> RealSet {
        RealSet::embed(&iv.to_simple())
    }

    pub fn point(p: Rational) -> RealSet {
        RealSet::points([p])
    }

    pub fn points<I: IntoIterator<Item = Rational>>(points: I) -> RealSet {
        RealSet::discrete(DiscreteSet::from_points(points))
    }

    /// `{ anchor + k·step : k ∈ ℤ }`, optionally cut to `window`.
    pub fn progression(
        anchor: &Rational,
        step: &Rational,
        window: Option<&SimpleSet>,
    ) -> Result<RealSet, crate::Error> {
        if !step.is_positive() {
            return Err(crate::Error::Validation(format!("progression step must be positive, got {step}")));
        }
        Ok(RealSet::discrete(DiscreteSet::progression(anchor, step, window)))
    }

    pub fn discrete(d: DiscreteSet) -> RealSet {
        RealSet::from_parts(&SimpleSet::empty(), &d, &SimpleSet::empty())
    }

    pub fn q_intervals(&self) -> &SimpleSet {
        &self.q_intervals
    }

    pub fn q_plus(&self) -> &DiscreteSet {
        &self.q_plus
    }

    pub fn q_minus(&self) -> &DiscreteSet {
        &self.q_minus
    }

    pub fn i_intervals(&self) -> &SimpleSet {
        &self.i_intervals
    }

    fn flips(&self) -> DiscreteSet {
        self.q_plus.union(&self.q_minus)
    }

    /// Pointwise boolean combination; `f` sees one membership bit per operand.
    pub fn combine(sets: &[&RealSet], f: impl Fn(&[bool]) -> bool) -> RealSet {
        let js: Vec<&SimpleSet> = sets.iter().map(|s| &s.q_intervals).collect();
        let vs: Vec<&SimpleSet> = sets.iter().map(|s| &s.i_intervals).collect();
        let flips: Vec<DiscreteSet> = sets.iter().map(|s| s.flips()).collect();
        let flip_refs: Vec<&DiscreteSet> = flips.iter().collect();
        let j = SimpleSet::combine(&js, &f);
        let v = SimpleSet::combine(&vs, &f);
        // a flip survives where toggling the operands' interval bits changes f
        let d = DiscreteSet::combine(&flip_refs, &js, |d, m| {
            let actual: Vec<bool> = d.iter().zip(m).map(|(a, b)| a ^ b).collect();
            f(&actual) != f(m)
        });
        RealSet::from_parts(&j, &d, &v)
    }

    pub fn union(&self, other: &RealSet) -> RealSet {
        RealSet::combine(&[self, other], |b| b[0] || b[1])
    }

    pub fn intersect(&self, other: &RealSet) -> RealSet {
        RealSet::combine(&[self, other], |b| b[0] && b[1])
    }

    pub fn difference(&self, other: &RealSet) -> RealSet {
        RealSet::combine(&[self, other], |b| b[0] && !b[1])
    }

    pub fn symmetric_difference(&self, other: &RealSet) -> RealSet {
        RealSet::combine(&[self, other], |b| b[0] ^ b[1])
    }

    /// `ℝ ∖ self`.
    pub fn complement(&self) -> RealSet {
        RealSet {
            q_intervals: self.q_intervals.complement(),
            q_plus: self.q_minus.clone(),
            q_minus: self.q_plus.clone(),
            i_intervals: self.i_intervals.complement().open_hull(),
        }
    }

    pub fn is_subset(&self, other: &RealSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn is_disjoint(&self, other: &RealSet) -> bool {
        self.intersect(other).is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.q_intervals.is_empty() && self.q_plus.is_empty() && self.i_intervals.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.q_intervals.is_full() && self.q_minus.is_empty() && self.i_intervals.is_full()
    }

    pub fn contains_rational(&self, q: &Rational) -> bool {
        (self.q_intervals.contains(q) && !self.q_minus.contains(q)) || self.q_plus.contains(q)
    }

    pub fn cardinality(&self) -> CardinalityClass {
        if !self.i_intervals.is_empty() {
            CardinalityClass::Uncountable
        } else if self.q_intervals.is_empty() && self.q_plus.is_finite() {
            CardinalityClass::Finite(self.q_plus.exceptions().len())
        } else {
            CardinalityClass::CountablyInfinite
        }
    }

    pub fn is_countable(&self) -> bool {
        self.i_intervals.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.cardinality(), CardinalityClass::Finite(_))
    }

    /// Members of a finite set, ascending.
    pub fn finite_members(&self) -> Option<Vec<Rational>> {
        if self.is_finite() {
            self.q_plus.finite_members()
        } else {
            None
        }
    }

    /// The unique member of a singleton.
    pub fn singleton(&self) -> Option<Rational> {
        match self.finite_members() {
            Some(v) if v.len() == 1 => v.into_iter().next(),
            _ => None,
        }
    }

    /// Image under `x -> slope * x + offset`, `slope != 0`.
    pub fn affine(&self, slope: &Rational, offset: &Rational) -> RealSet {
        assert!(!slope.is_zero(), "affine image needs a nonzero slope");
        RealSet::from_parts(
            &self.q_intervals.affine(slope, offset),
            &self.flips().affine(slope, offset),
            &self.i_intervals.affine(slope, offset),
        )
    }

    /// Infimum and whether it is attained; `None` for the empty set.
    pub fn infimum(&self) -> Option<(ExtRational, bool)> {
        let mut cands: Vec<(ExtRational, bool)> = Vec::new();
        if let Some(c) = self.q_intervals.infimum() {
            cands.push(c);
        }
        if let Some((lo, _)) = self.i_intervals.infimum() {
            cands.push((lo, false));
        }
        if !self.q_plus.below().is_empty() {
            cands.push((ExtRational::NegInf, false));
        } else if let Some(m) = self.q_plus.min() {
            cands.push((ExtRational::Finite(m), true));
        }
        let lo = cands.iter().map(|c| c.0.clone()).min()?;
        let attained = cands.iter().any(|c| c.0 == lo && c.1);
        Some((lo, attained))
    }

    /// Supremum and whether it is attained; `None` for the empty set.
    pub fn supremum(&self) -> Option<(ExtRational, bool)> {
        let neg = self.affine(&int(-1), &Rational::zero());
        neg.infimum().map(|(x, a)| {
            let x = match x {
                ExtRational::NegInf => ExtRational::PosInf,
                ExtRational::PosInf => ExtRational::NegInf,
                ExtRational::Finite(q) => ExtRational::Finite(-q),
            };
            (x, a)
        })
    }

    /// Every rational at which the set's description changes: endpoints of
    /// both interval parts and the finite exceptions of the discrete parts.
    pub fn breakpoints(&self) -> BTreeSet<Rational> {
        let mut out = self.q_intervals.endpoints();
        out.extend(self.i_intervals.endpoints());
        out.extend(self.q_plus.exceptions().iter().cloned());
        out.extend(self.q_minus.exceptions().iter().cloned());
        out
    }
}
