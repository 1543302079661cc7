//! Operators relative to an ideal of small sets.
//!
//! A set is I-open when it is open and `cl(A) ∖ A` is small, I-closed when it
//! is closed and `A ∖ int(A)` is small. Everything here is written once against
//! the [`Topology`] and [`IdealTopology`] traits; a space only supplies its
//! interior, derived set, smallness test, and the ideal interior and ideal
//! derived set. Finite spaces in [`crate::finite_oracle`] implement the same
//! traits, so the generic formulas are checked against brute force there.

use serde::Serialize;

use crate::realset::RealSet;
use crate::topologies::{TopologyKind, TopologySpec};
use crate::Error;

/// Minimal boolean-algebra surface the generic formulas need.
pub trait SetAlgebra: Clone + PartialEq {
    fn union(&self, other: &Self) -> Self;
    fn intersect(&self, other: &Self) -> Self;
    fn difference(&self, other: &Self) -> Self;
    fn is_empty(&self) -> bool;

    fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }
}

impl SetAlgebra for RealSet {
    fn union(&self, other: &Self) -> Self {
        RealSet::union(self, other)
    }
    fn intersect(&self, other: &Self) -> Self {
        RealSet::intersect(self, other)
    }
    fn difference(&self, other: &Self) -> Self {
        RealSet::difference(self, other)
    }
    fn is_empty(&self) -> bool {
        RealSet::is_empty(self)
    }
}

/// Bitmask subsets of a finite universe.
impl SetAlgebra for u32 {
    fn union(&self, other: &Self) -> Self {
        self | other
    }
    fn intersect(&self, other: &Self) -> Self {
        self & other
    }
    fn difference(&self, other: &Self) -> Self {
        self & !other
    }
    fn is_empty(&self) -> bool {
        *self == 0
    }
}

pub trait Topology {
    type Set: SetAlgebra;

    fn universe(&self) -> Self::Set;
    fn interior(&self, s: &Self::Set) -> Self::Set;
    fn derived(&self, s: &Self::Set) -> Self::Set;

    fn complement(&self, s: &Self::Set) -> Self::Set {
        self.universe().difference(s)
    }

    fn closure(&self, s: &Self::Set) -> Self::Set {
        self.complement(&self.interior(&self.complement(s)))
    }

    fn frontier(&self, s: &Self::Set) -> Self::Set {
        self.closure(s).difference(&self.interior(s))
    }

    fn exterior(&self, s: &Self::Set) -> Self::Set {
        self.interior(&self.complement(s))
    }

    fn border(&self, s: &Self::Set) -> Self::Set {
        s.difference(&self.interior(s))
    }

    fn is_open(&self, s: &Self::Set) -> bool {
        self.interior(s) == *s
    }

    fn is_closed(&self, s: &Self::Set) -> bool {
        self.closure(s) == *s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IdealClassifyResult {
    pub is_ideal_open: bool,
    pub is_ideal_closed: bool,
}

pub trait IdealTopology: Topology {
    fn is_small(&self, s: &Self::Set) -> bool;
    /// Union of all I-open subsets of `s`.
    fn ideal_interior(&self, s: &Self::Set) -> Self::Set;
    /// Points every I-open neighbourhood of which meets `s` away from the point.
    fn ideal_derived(&self, s: &Self::Set) -> Self::Set;

    fn is_ideal_open(&self, s: &Self::Set) -> bool {
        self.is_open(s) && self.is_small(&self.closure(s).difference(s))
    }

    fn is_ideal_closed(&self, s: &Self::Set) -> bool {
        self.is_closed(s) && self.is_small(&s.difference(&self.interior(s)))
    }

    fn ideal_classify(&self, s: &Self::Set) -> IdealClassifyResult {
        IdealClassifyResult { is_ideal_open: self.is_ideal_open(s), is_ideal_closed: self.is_ideal_closed(s) }
    }

    fn ideal_closure(&self, s: &Self::Set) -> Self::Set {
        self.complement(&self.ideal_interior(&self.complement(s)))
    }

    fn ideal_border(&self, s: &Self::Set) -> Self::Set {
        s.difference(&self.ideal_interior(s))
    }

    fn ideal_frontier(&self, s: &Self::Set) -> Self::Set {
        self.ideal_closure(s).difference(&self.ideal_interior(s))
    }

    fn ideal_exterior(&self, s: &Self::Set) -> Self::Set {
        self.ideal_interior(&self.complement(s))
    }

    /// `(int^I, Ext^I, Fr^I)`, a partition of the universe.
    fn decomposition(&self, s: &Self::Set) -> (Self::Set, Self::Set, Self::Set) {
        (self.ideal_interior(s), self.ideal_exterior(s), self.ideal_frontier(s))
    }

    /// Whether the union returned by `ideal_interior` is itself I-open.
    fn union_is_ideal_open(&self, s: &Self::Set) -> bool {
        self.is_ideal_open(&self.ideal_interior(s))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum IdealKind {
    Finite,
    Countable,
}

impl IdealKind {
    pub fn is_small(self, s: &RealSet) -> bool {
        match self {
            IdealKind::Finite => s.is_finite(),
            IdealKind::Countable => s.is_countable(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            IdealKind::Finite => "finite",
            IdealKind::Countable => "countable",
        }
    }
}

impl std::str::FromStr for IdealKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "finite" | "F" => Ok(IdealKind::Finite),
            "countable" | "C" => Ok(IdealKind::Countable),
            other => Err(Error::Validation(format!("unknown ideal `{other}` (expected finite or countable)"))),
        }
    }
}

/// A topology on ℝ paired with one of the two ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealIdealSpace {
    pub topology: TopologySpec,
    pub ideal: IdealKind,
}

impl RealIdealSpace {
    pub fn new(topology: TopologySpec, ideal: IdealKind) -> Self {
        RealIdealSpace { topology, ideal }
    }

    fn overlap_family(&self) -> [RealSet; 4] {
        use crate::realset::ext::{int, ExtRational};
        use crate::realset::simple::Interval;
        let mk = |lc, hc| {
            RealSet::interval(
                Interval::new(ExtRational::Finite(int(-1)), ExtRational::Finite(int(1)), lc, hc).expect("valid"),
            )
        };
        [mk(false, false), mk(true, false), mk(false, true), mk(true, true)]
    }
}

impl Topology for RealIdealSpace {
    type Set = RealSet;

    fn universe(&self) -> RealSet {
        self.topology.universe()
    }
    fn interior(&self, s: &RealSet) -> RealSet {
        self.topology.interior(s)
    }
    fn closure(&self, s: &RealSet) -> RealSet {
        self.topology.closure(s)
    }
    fn derived(&self, s: &RealSet) -> RealSet {
        self.topology.derived(s)
    }
}

impl IdealTopology for RealIdealSpace {
    fn is_small(&self, s: &RealSet) -> bool {
        self.ideal.is_small(s)
    }

    fn ideal_interior(&self, s: &RealSet) -> RealSet {
        let x = self.universe();
        match self.topology.kind() {
            // open intervals are I-open under both ideals and form a base
            TopologyKind::Usual => self.topology.interior(s),
            // a nonempty open set has closure X, so it is I-open iff its complement is small
            TopologyKind::ParticularPoint(p) => {
                if s.contains_rational(p) && self.is_small(&x.difference(s)) {
                    s.clone()
                } else {
                    RealSet::empty()
                }
            }
            // a nonempty open A ≠ X has cl(A) ∖ A = E
            TopologyKind::ExcludedSet(e) => {
                if self.is_small(e) {
                    self.topology.interior(s)
                } else if s.is_full() {
                    s.clone()
                } else {
                    RealSet::empty()
                }
            }
            TopologyKind::Cocountable => {
                if self.is_small(&x.difference(s)) {
                    s.clone()
                } else {
                    RealSet::empty()
                }
            }
            // I-open family: ∅, (-1,1), [-1,1), (-1,1], X
            TopologyKind::OverlappingInterval => self
                .overlap_family()
                .into_iter()
                .filter(|m| m.is_subset(s))
                .fold(RealSet::empty(), |acc, m| acc.union(&m)),
        }
    }

    fn ideal_derived(&self, s: &RealSet) -> RealSet {
        let x = self.universe();
        match self.topology.kind() {
            TopologyKind::Usual => self.topology.derived(s),
            TopologyKind::ParticularPoint(p) => {
                if !self.is_small(s) {
                    x
                } else if s.contains_rational(p) {
                    x.difference(&RealSet::point(p.clone()))
                } else {
                    RealSet::empty()
                }
            }
            TopologyKind::ExcludedSet(e) => {
                if self.is_small(e) {
                    self.topology.derived(s)
                } else {
                    // X is the only I-open neighbourhood of every point
                    match (s.is_empty(), s.singleton()) {
                        (true, _) => RealSet::empty(),
                        (false, Some(pt)) => x.difference(&RealSet::point(pt)),
                        (false, None) => x,
                    }
                }
            }
            TopologyKind::Cocountable => {
                if self.is_small(s) {
                    RealSet::empty()
                } else {
                    x
                }
            }
            // every point's smallest I-open neighbourhood contains (-1,1)
            TopologyKind::OverlappingInterval => {
                let inner = s.intersect(&self.overlap_family()[0]);
                match (inner.is_empty(), inner.singleton()) {
                    (true, _) => RealSet::empty(),
                    (false, Some(w)) => x.difference(&RealSet::point(w)),
                    (false, None) => x,
                }
            }
        }
    }
}

fn space(t: &TopologySpec, i: IdealKind, s: &RealSet) -> Result<RealIdealSpace, Error> {
    t.check(s)?;
    Ok(RealIdealSpace::new(t.clone(), i))
}

pub fn ideal_classify(t: &TopologySpec, i: IdealKind, s: &RealSet) -> Result<IdealClassifyResult, Error> {
    Ok(space(t, i, s)?.ideal_classify(s))
}

pub fn ideal_interior(t: &TopologySpec, i: IdealKind, s: &RealSet) -> Result<RealSet, Error> {
    Ok(space(t, i, s)?.ideal_interior(s))
}

pub fn ideal_closure(t: &TopologySpec, i: IdealKind, s: &RealSet) -> Result<RealSet, Error> {
    Ok(space(t, i, s)?.ideal_closure(s))
}

pub fn ideal_derived(t: &TopologySpec, i: IdealKind, s: &RealSet) -> Result<RealSet, Error> {
    Ok(space(t, i, s)?.ideal_derived(s))
}

pub fn ideal_border(t: &TopologySpec, i: IdealKind, s: &RealSet) -> Result<RealSet, Error> {
    Ok(space(t, i, s)?.ideal_border(s))
}

pub fn ideal_frontier(t: &TopologySpec, i: IdealKind, s: &RealSet) -> Result<RealSet, Error> {
    Ok(space(t, i, s)?.ideal_frontier(s))
}

pub fn ideal_exterior(t: &TopologySpec, i: IdealKind, s: &RealSet) -> Result<RealSet, Error> {
    Ok(space(t, i, s)?.ideal_exterior(s))
}

pub fn decomposition(t: &TopologySpec, i: IdealKind, s: &RealSet) -> Result<(RealSet, RealSet, RealSet), Error> {
    Ok(space(t, i, s)?.decomposition(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realset::ext::{int, rat, ExtRational};
    use crate::realset::simple::Interval;

    fn iv(lo: ExtRational, hi: ExtRational, lc: bool, hc: bool) -> RealSet {
        RealSet::interval(Interval::new(lo, hi, lc, hc).unwrap())
    }

    fn usual(i: IdealKind) -> RealIdealSpace {
        RealIdealSpace::new(TopologySpec::usual(), i)
    }

    #[test]
    fn separating_classifications() {
        let rz = RealSet::integers().complement();
        assert!(usual(IdealKind::Countable).is_ideal_open(&rz));
        assert!(!usual(IdealKind::Finite).is_ideal_open(&rz));
        assert!(!usual(IdealKind::Finite).is_ideal_closed(&RealSet::integers()));
        let ex = RealIdealSpace::new(TopologySpec::excluded_set(RealSet::irrationals()).unwrap(), IdealKind::Countable);
        assert!(!ex.is_ideal_open(&RealSet::rationals()));
        assert!(ex.ideal_interior(&RealSet::rationals()).is_empty());
        assert_eq!(ex.ideal_closure(&RealSet::irrationals()), RealSet::reals());
        assert_eq!(ex.ideal_derived(&RealSet::point(int(5))), RealSet::point(int(5)).complement());
    }

    #[test]
    fn usual_operators_on_half_open() {
        let sp = usual(IdealKind::Countable);
        let k = iv(int(1).into(), int(2).into(), false, true);
        assert_eq!(sp.ideal_border(&k), RealSet::point(int(2)));
        assert_eq!(sp.ideal_frontier(&k), RealSet::points([int(1), int(2)]));
        assert_eq!(sp.ideal_exterior(&RealSet::point(int(2))), RealSet::point(int(2)).complement());
        let le2 = iv(ExtRational::NegInf, int(2).into(), false, true);
        assert_eq!(sp.ideal_exterior(&le2), iv(int(2).into(), ExtRational::PosInf, false, false));
    }

    #[test]
    fn particular_point_derived() {
        let sp = RealIdealSpace::new(TopologySpec::particular_point(rat(1, 2)), IdealKind::Countable);
        let s = RealSet::point(rat(1, 2)).complement();
        assert_eq!(sp.ideal_derived(&s), RealSet::reals());
        assert!(sp.derived(&s).is_empty());
    }

    #[test]
    fn overlap_family() {
        let sp = RealIdealSpace::new(TopologySpec::overlapping_interval(), IdealKind::Countable);
        let a = iv(int(-1).into(), rat(1, 2).into(), true, false);
        assert!(!sp.is_ideal_open(&a));
        let b = iv(int(-1).into(), int(1).into(), true, false);
        assert!(sp.is_ideal_open(&b));
        assert!(sp.ideal_interior(&a).is_empty());
    }
}
