//! Five topologies on subsets of ℝ with exact interior, closure and derived set.
//!
//! Each driver gives closed forms in terms of the [`RealSet`] normal form. The
//! checked entry points at the bottom of the file reject arguments that leave
//! the driver's universe.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::ideal_ops::Topology;
use crate::realset::ext::{int, ExtRational, Rational};
use crate::realset::simple::Interval;
use crate::realset::RealSet;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TopologyKind {
    Usual,
    ParticularPoint(Rational),
    ExcludedSet(RealSet),
    Cocountable,
    /// On `[-1,1]`, generated by `[-1,b)` for `b>0` and `(a,1]` for `a<0`.
    OverlappingInterval,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TopologySpec {
    kind: TopologyKind,
    universe: RealSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassifyResult {
    pub is_open: bool,
    pub is_closed: bool,
}

fn closed_unit() -> RealSet {
    RealSet::interval(Interval::new(int(-1).into(), int(1).into(), true, true).expect("valid interval"))
}

fn ray(lo: ExtRational, hi: ExtRational, lo_closed: bool, hi_closed: bool) -> RealSet {
    RealSet::interval(Interval::new(lo, hi, lo_closed, hi_closed).expect("valid ray"))
}

impl TopologySpec {
    pub fn usual() -> Self {
        TopologySpec { kind: TopologyKind::Usual, universe: RealSet::reals() }
    }

    pub fn particular_point(p: Rational) -> Self {
        TopologySpec { kind: TopologyKind::ParticularPoint(p), universe: RealSet::reals() }
    }

    pub fn excluded_set(e: RealSet) -> Result<Self, Error> {
        if e.is_full() {
            return Err(Error::Validation("the excluded set must be a proper subset of ℝ".into()));
        }
        Ok(TopologySpec { kind: TopologyKind::ExcludedSet(e), universe: RealSet::reals() })
    }

    pub fn cocountable() -> Self {
        TopologySpec { kind: TopologyKind::Cocountable, universe: RealSet::reals() }
    }

    pub fn overlapping_interval() -> Self {
        TopologySpec { kind: TopologyKind::OverlappingInterval, universe: closed_unit() }
    }

    pub fn kind(&self) -> &TopologyKind {
        &self.kind
    }

    pub fn universe_set(&self) -> &RealSet {
        &self.universe
    }

    /// `X ∖ s`.
    pub fn complement(&self, s: &RealSet) -> RealSet {
        self.universe.difference(s)
    }

    pub fn check(&self, s: &RealSet) -> Result<(), Error> {
        if s.is_subset(&self.universe) {
            Ok(())
        } else {
            Err(Error::Domain(format!("{s} is not contained in the universe {} of `{self}`", self.universe)))
        }
    }

    /// Maximal interval around 0 contained in `s`, for the overlapping-interval driver.
    fn overlap_interior(&self, s: &RealSet) -> RealSet {
        let zero = Rational::zero();
        if !s.contains_rational(&zero) {
            return RealSet::empty();
        }
        let u = usual_interior(s);
        if !u.contains_rational(&zero) {
            return RealSet::empty();
        }
        // u ⊆ (-1,1) is open, so its complement is closed and both bounds are attained
        let outside = u.complement();
        let left = outside.intersect(&ray(ExtRational::NegInf, zero.clone().into(), false, true));
        let right = outside.intersect(&ray(zero.into(), ExtRational::PosInf, true, false));
        let (alpha, _) = left.supremum().expect("complement reaches -1");
        let (beta, _) = right.infimum().expect("complement reaches 1");
        let lo_closed = alpha == ExtRational::Finite(int(-1)) && s.contains_rational(&int(-1));
        let hi_closed = beta == ExtRational::Finite(int(1)) && s.contains_rational(&int(1));
        ray(alpha, beta, lo_closed, hi_closed)
    }

    fn overlap_derived(&self, s: &RealSet) -> RealSet {
        let cl = self.closure(s);
        let zero = Rational::zero();
        let mut candidates = vec![zero.clone()];
        let pos = s.intersect(&ray(zero.clone().into(), int(1).into(), false, true));
        if let Some((ExtRational::Finite(m), true)) = pos.infimum() {
            candidates.push(m);
        }
        let neg = s.intersect(&ray(int(-1).into(), zero.into(), true, false));
        if let Some((ExtRational::Finite(m), true)) = neg.supremum() {
            candidates.push(m);
        }
        let isolated: Vec<Rational> = candidates
            .into_iter()
            .filter(|c| s.contains_rational(c))
            .filter(|c| {
                let rest = s.difference(&RealSet::point(c.clone()));
                !self.closure(&rest).contains_rational(c)
            })
            .collect();
        cl.difference(&RealSet::points(isolated))
    }
}

fn usual_interior(s: &RealSet) -> RealSet {
    let w = s.q_intervals().interior().intersect(s.i_intervals());
    RealSet::from_parts(&w, &s.q_minus().restrict(&w), &w)
}

fn usual_closure(s: &RealSet) -> RealSet {
    let hull = s.q_intervals().closure().union(&s.i_intervals().closure());
    RealSet::embed(&hull).union(&RealSet::discrete(s.q_plus().clone()))
}

fn usual_derived(s: &RealSet) -> RealSet {
    RealSet::embed(&s.q_intervals().closure().union(&s.i_intervals().closure()))
}

impl Topology for TopologySpec {
    type Set = RealSet;

    fn universe(&self) -> RealSet {
        self.universe.clone()
    }

    fn interior(&self, s: &RealSet) -> RealSet {
        match &self.kind {
            TopologyKind::Usual => usual_interior(s),
            TopologyKind::ParticularPoint(p) => {
                if s.contains_rational(p) {
                    s.clone()
                } else {
                    RealSet::empty()
                }
            }
            TopologyKind::ExcludedSet(e) => {
                if s.is_full() {
                    s.clone()
                } else {
                    s.difference(e)
                }
            }
            TopologyKind::Cocountable => {
                if s.complement().is_countable() {
                    s.clone()
                } else {
                    RealSet::empty()
                }
            }
            TopologyKind::OverlappingInterval => self.overlap_interior(s),
        }
    }

    fn closure(&self, s: &RealSet) -> RealSet {
        match &self.kind {
            TopologyKind::Usual => usual_closure(s),
            TopologyKind::ParticularPoint(p) => {
                if s.contains_rational(p) {
                    RealSet::reals()
                } else {
                    s.clone()
                }
            }
            TopologyKind::ExcludedSet(e) => {
                if s.is_empty() {
                    RealSet::empty()
                } else {
                    s.union(e)
                }
            }
            TopologyKind::Cocountable => {
                if s.is_countable() {
                    s.clone()
                } else {
                    RealSet::reals()
                }
            }
            TopologyKind::OverlappingInterval => self.complement(&self.overlap_interior(&self.complement(s))),
        }
    }

    fn derived(&self, s: &RealSet) -> RealSet {
        match &self.kind {
            TopologyKind::Usual => usual_derived(s),
            TopologyKind::ParticularPoint(p) => {
                if s.contains_rational(p) {
                    RealSet::reals().difference(&RealSet::point(p.clone()))
                } else {
                    RealSet::empty()
                }
            }
            // only X is a neighbourhood of a point of E; points off E are isolated
            TopologyKind::ExcludedSet(e) => match (s.is_empty(), s.singleton()) {
                (true, _) => RealSet::empty(),
                (false, Some(x)) => e.difference(&RealSet::point(x)),
                (false, None) => e.clone(),
            },
            TopologyKind::Cocountable => {
                if s.is_countable() {
                    RealSet::empty()
                } else {
                    RealSet::reals()
                }
            }
            TopologyKind::OverlappingInterval => self.overlap_derived(s),
        }
    }
}

impl fmt::Display for TopologySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            TopologyKind::Usual => f.write_str("usual"),
            TopologyKind::ParticularPoint(p) => write!(f, "particular:{}", crate::fmt_rational(p)),
            TopologyKind::ExcludedSet(e) => write!(f, "excluded:{e}"),
            TopologyKind::Cocountable => f.write_str("cocountable"),
            TopologyKind::OverlappingInterval => f.write_str("overlap"),
        }
    }
}

pub fn interior(t: &TopologySpec, s: &RealSet) -> Result<RealSet, Error> {
    t.check(s)?;
    Ok(t.interior(s))
}

pub fn closure(t: &TopologySpec, s: &RealSet) -> Result<RealSet, Error> {
    t.check(s)?;
    Ok(t.closure(s))
}

pub fn frontier(t: &TopologySpec, s: &RealSet) -> Result<RealSet, Error> {
    t.check(s)?;
    Ok(t.frontier(s))
}

pub fn derived_set(t: &TopologySpec, s: &RealSet) -> Result<RealSet, Error> {
    t.check(s)?;
    Ok(t.derived(s))
}

pub fn classify(t: &TopologySpec, s: &RealSet) -> Result<ClassifyResult, Error> {
    t.check(s)?;
    Ok(ClassifyResult { is_open: t.is_open(s), is_closed: t.is_closed(s) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realset::ext::rat;

    fn iv(lo: Rational, hi: Rational, lc: bool, hc: bool) -> RealSet {
        RealSet::interval(Interval::new(lo.into(), hi.into(), lc, hc).unwrap())
    }

    #[test]
    fn usual_basics() {
        let t = TopologySpec::usual();
        let s = iv(int(0), int(1), true, true);
        assert_eq!(t.interior(&s), iv(int(0), int(1), false, false));
        assert_eq!(t.closure(&iv(int(1), int(2), false, false)), iv(int(1), int(2), true, true));
        assert!(t.derived(&RealSet::integers()).is_empty());
        let a = iv(int(2), int(5), false, false).union(&iv(int(5), int(9), false, false));
        assert_eq!(t.frontier(&a), RealSet::points([int(2), int(5), int(9)]));
        assert_eq!(t.interior(&t.closure(&a)), iv(int(2), int(9), false, false));
        assert_eq!(t.closure(&RealSet::rationals()), RealSet::reals());
        assert!(t.interior(&RealSet::rationals()).is_empty());
    }

    #[test]
    fn excluded_irrationals() {
        let t = TopologySpec::excluded_set(RealSet::irrationals()).unwrap();
        let h = RealSet::points([int(1), int(2), int(3)]);
        assert_eq!(t.interior(&h.union(&RealSet::irrationals())), h);
        assert_eq!(t.closure(&RealSet::rationals()), RealSet::reals());
        assert_eq!(t.frontier(&RealSet::rationals()), RealSet::irrationals());
        assert!(t.is_open(&RealSet::rationals()));
        assert!(!t.is_closed(&RealSet::rationals()));
    }

    #[test]
    fn particular_and_cocountable() {
        let t = TopologySpec::particular_point(int(1));
        assert_eq!(t.closure(&RealSet::naturals()), RealSet::reals());
        let half = TopologySpec::particular_point(rat(1, 2));
        assert!(half.derived(&RealSet::point(rat(1, 2)).complement()).is_empty());
        let c = TopologySpec::cocountable();
        let rz = RealSet::integers().complement();
        assert_eq!(c.interior(&rz), rz);
        assert_eq!(c.frontier(&rz), RealSet::integers());
        assert!(c.is_closed(&RealSet::integers()));
        assert!(!c.is_open(&RealSet::integers()));
    }

    #[test]
    fn overlapping_interval() {
        let t = TopologySpec::overlapping_interval();
        let a = iv(int(-1), rat(1, 2), true, false);
        assert_eq!(t.interior(&a), a);
        assert_eq!(t.closure(&a), t.universe());
        let b = iv(rat(-1, 2), int(1), false, true);
        assert_eq!(t.frontier(&a), iv(rat(1, 2), int(1), true, true));
        assert_eq!(t.frontier(&b), iv(int(-1), rat(-1, 2), true, true));
        // a set missing 0 has empty interior
        assert!(t.interior(&iv(rat(1, 4), int(1), false, true)).is_empty());
        assert_eq!(t.closure(&RealSet::point(rat(1, 2))), iv(rat(1, 2), int(1), true, true));
        assert!(t.check(&RealSet::point(int(2))).is_err());
    }

    #[test]
    fn overlapping_derived() {
        let t = TopologySpec::overlapping_interval();
        let p = RealSet::point(rat(1, 2));
        // 1/2 is isolated in {1/2}; the rest of its closure are limit points
        assert_eq!(t.derived(&p), iv(rat(1, 2), int(1), false, true));
        let z = RealSet::point(int(0));
        assert_eq!(t.derived(&z), t.closure(&z).difference(&z));
    }
}
