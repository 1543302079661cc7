//! Maps between real topologies and finite open covers.
//!
//! Continuity over all open sets of a real topology is out of reach for
//! arbitrary maps, so there are two kinds of answer: exact decisions for
//! identity maps, derived from each driver's I-open sets, and checks against a
//! user-supplied family of open sets, which can refute but never prove.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::finite_oracle::{map_property, BfTable, FiniteIdeal, FiniteSpace, MapProperty};
use crate::ideal_ops::{IdealKind, IdealTopology, RealIdealSpace, Topology};
use crate::realset::ext::{fmt_rational, int, parse_rational, rat, ExtRational, Rational};
use crate::realset::simple::Interval;
use crate::realset::RealSet;
use crate::topologies::{TopologyKind, TopologySpec};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub domain: Interval,
    pub slope: Rational,
    pub offset: Rational,
}

/// `x ↦ slope·x + offset` on each piece. Rational coefficients keep rationals
/// and (for nonzero slope) irrationals in place, so images and preimages of
/// representable sets stay representable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewiseAffineMap {
    pieces: Vec<Piece>,
}

impl PiecewiseAffineMap {
    pub fn new(pieces: Vec<Piece>) -> Result<Self, Error> {
        if pieces.is_empty() {
            return Err(Error::Validation("a map needs at least one piece".into()));
        }
        for (k, a) in pieces.iter().enumerate() {
            for b in &pieces[k + 1..] {
                if !RealSet::interval(a.domain.clone()).is_disjoint(&RealSet::interval(b.domain.clone())) {
                    return Err(Error::Validation("piece domains overlap".into()));
                }
            }
        }
        Ok(PiecewiseAffineMap { pieces })
    }

    pub fn affine(slope: Rational, offset: Rational) -> Self {
        PiecewiseAffineMap { pieces: vec![Piece { domain: Interval::full(), slope, offset }] }
    }

    pub fn identity() -> Self {
        Self::affine(Rational::one(), Rational::zero())
    }

    pub fn constant(c: Rational) -> Self {
        Self::affine(Rational::zero(), c)
    }

    /// `low` on `(-∞, at)` and `high` on `[at, ∞)`.
    pub fn step(at: Rational, low: Rational, high: Rational) -> Self {
        let left = Interval::new(ExtRational::NegInf, at.clone().into(), false, false).expect("ray");
        let right = Interval::new(at.into(), ExtRational::PosInf, true, false).expect("ray");
        PiecewiseAffineMap {
            pieces: vec![
                Piece { domain: left, slope: Rational::zero(), offset: low },
                Piece { domain: right, slope: Rational::zero(), offset: high },
            ],
        }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn domain(&self) -> RealSet {
        self.pieces.iter().fold(RealSet::empty(), |acc, p| acc.union(&RealSet::interval(p.domain.clone())))
    }

    pub fn is_identity(&self) -> bool {
        self.pieces.len() == 1
            && self.pieces[0].domain == Interval::full()
            && self.pieces[0].slope.is_one()
            && self.pieces[0].offset.is_zero()
    }
}

impl fmt::Display for PiecewiseAffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pieces
            .iter()
            .map(|p| {
                format!(
                    "{} on {}",
                    if p.slope.is_zero() {
                        fmt_rational(&p.offset)
                    } else {
                        format!("{}x+{}", fmt_rational(&p.slope), fmt_rational(&p.offset))
                    },
                    RealSet::interval(p.domain.clone())
                )
            })
            .collect();
        f.write_str(&parts.join("; "))
    }
}

/// `id`, `const:c`, `affine:a:b` (x ↦ ax+b) or `step:t:u:v` (u before t, v from t on).
impl FromStr for PiecewiseAffineMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |k: usize| -> Result<Rational, Error> {
            let text = parts.get(k).ok_or_else(|| Error::Validation(format!("map `{s}` is missing a parameter")))?;
            parse_rational(text)
        };
        let map = match (parts[0], parts.len()) {
            ("id", 1) => Self::identity(),
            ("const", 2) => Self::constant(num(1)?),
            ("affine", 3) => Self::affine(num(1)?, num(2)?),
            ("step", 4) => Self::step(num(1)?, num(2)?, num(3)?),
            _ => return Err(Error::Validation(format!("unknown map `{s}`"))),
        };
        Ok(map)
    }
}

/// Exact preimage. Constant pieces contribute all of their domain or nothing.
pub fn preimage(h: &PiecewiseAffineMap, s: &RealSet) -> RealSet {
    h.pieces.iter().fold(RealSet::empty(), |acc, p| {
        let dom = RealSet::interval(p.domain.clone());
        let part = if p.slope.is_zero() {
            if s.contains_rational(&p.offset) {
                dom
            } else {
                RealSet::empty()
            }
        } else {
            let inv = p.slope.recip();
            s.affine(&inv, &(-&p.offset * &inv)).intersect(&dom)
        };
        acc.union(&part)
    })
}

/// Exact forward image. Constant pieces contribute one point.
pub fn image_of_set(h: &PiecewiseAffineMap, s: &RealSet) -> RealSet {
    h.pieces.iter().fold(RealSet::empty(), |acc, p| {
        let part = s.intersect(&RealSet::interval(p.domain.clone()));
        let img = if part.is_empty() {
            RealSet::empty()
        } else if p.slope.is_zero() {
            RealSet::point(p.offset.clone())
        } else {
            part.affine(&p.slope, &p.offset)
        };
        acc.union(&img)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ContinuityStatus {
    Continuous,
    IdealContinuous,
    NotContinuous,
    NotIdealContinuous,
    PassedOnFamily,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuityWitness {
    pub open_set: RealSet,
    pub preimage: RealSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuityVerdict {
    pub status: ContinuityStatus,
    pub witness: Option<ContinuityWitness>,
}

/// Checks every member of `family` in order and reports the first failure.
/// A preimage that is not even open gives `NotContinuous`.
pub fn continuity_verdict(
    h: &PiecewiseAffineMap,
    dom: &TopologySpec,
    cod: &TopologySpec,
    ideal: IdealKind,
    family: &[RealSet],
) -> Result<ContinuityVerdict, Error> {
    for u in family {
        cod.check(u)?;
        if !cod.is_open(u) {
            return Err(Error::Validation(format!("family member {u} is not open in {cod}")));
        }
    }
    let space = RealIdealSpace::new(dom.clone(), ideal);
    for u in family {
        let pre = preimage(h, u).intersect(dom.universe_set());
        let status = if !dom.is_open(&pre) {
            ContinuityStatus::NotContinuous
        } else if !space.is_ideal_open(&pre) {
            ContinuityStatus::NotIdealContinuous
        } else {
            continue;
        };
        return Ok(ContinuityVerdict {
            status,
            witness: Some(ContinuityWitness { open_set: u.clone(), preimage: pre }),
        });
    }
    Ok(ContinuityVerdict { status: ContinuityStatus::PassedOnFamily, witness: None })
}

fn refuted(u: RealSet) -> ContinuityVerdict {
    ContinuityVerdict {
        status: ContinuityStatus::NotIdealContinuous,
        witness: Some(ContinuityWitness { open_set: u.clone(), preimage: u }),
    }
}

/// Decision for the identity on `t`: I-continuous iff every open set is I-open.
///
/// In the usual topology with the countable ideal the answer is negative (an
/// open set whose complement is a fat Cantor set has uncountable frontier)
/// but no such set is representable, so no witness is attached.
pub fn builtin_identity_verdict(t: &TopologySpec, ideal: IdealKind) -> ContinuityVerdict {
    let half = rat(1, 2);
    match (t.kind(), ideal) {
        (TopologyKind::Usual, IdealKind::Finite) => refuted(RealSet::integers().complement()),
        (TopologyKind::Usual, IdealKind::Countable) => {
            ContinuityVerdict { status: ContinuityStatus::NotIdealContinuous, witness: None }
        }
        (TopologyKind::ParticularPoint(p), _) => refuted(RealSet::point(p.clone())),
        (TopologyKind::ExcludedSet(e), _) => {
            if ideal.is_small(e) {
                ContinuityVerdict { status: ContinuityStatus::IdealContinuous, witness: None }
            } else {
                refuted(e.complement())
            }
        }
        (TopologyKind::Cocountable, IdealKind::Countable) => {
            ContinuityVerdict { status: ContinuityStatus::IdealContinuous, witness: None }
        }
        (TopologyKind::Cocountable, IdealKind::Finite) => refuted(RealSet::integers().complement()),
        (TopologyKind::OverlappingInterval, _) => {
            refuted(RealSet::interval(Interval::new(int(-1).into(), half.into(), true, false).expect("valid interval")))
        }
    }
}

/// A finite family of open subsets of a topology's universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    space: TopologySpec,
    members: Vec<RealSet>,
}

impl Cover {
    pub fn new(space: TopologySpec, members: Vec<RealSet>) -> Result<Self, Error> {
        for m in &members {
            space.check(m)?;
            if !space.is_open(m) {
                return Err(Error::Validation(format!("cover member {m} is not open in {space}")));
            }
        }
        Ok(Cover { space, members })
    }

    pub fn space(&self) -> &TopologySpec {
        &self.space
    }

    pub fn members(&self) -> &[RealSet] {
        &self.members
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverAnalysis {
    pub is_cover: bool,
    /// Indices of the I-open members.
    pub ideal_open_members: Vec<usize>,
    /// For a finite cover the I-open members cover iff some finite subcover
    /// of I-open sets exists.
    pub has_ideal_open_finite_subcover: bool,
    /// Frontier `cl(U)∖U` of each member, in order.
    pub frontiers: Vec<RealSet>,
}

pub fn analyze_cover(c: &Cover, ideal: IdealKind) -> CoverAnalysis {
    let space = RealIdealSpace::new(c.space.clone(), ideal);
    let universe = c.space.universe_set();
    let union = |idx: &mut dyn Iterator<Item = &RealSet>| idx.fold(RealSet::empty(), |acc, m| acc.union(m));
    let ideal_open_members: Vec<usize> = (0..c.members.len()).filter(|&k| space.is_ideal_open(&c.members[k])).collect();
    let good = union(&mut ideal_open_members.iter().map(|&k| &c.members[k]));
    CoverAnalysis {
        is_cover: union(&mut c.members.iter()) == *universe,
        has_ideal_open_finite_subcover: good == *universe,
        frontiers: c.members.iter().map(|m| c.space.frontier(m)).collect(),
        ideal_open_members,
    }
}

/// Decides a map property between finite spaces. The domain and codomain
/// carry their own ideals.
pub fn finite_map_check(
    sp1: &FiniteSpace,
    sp2: &FiniteSpace,
    id1: &FiniteIdeal,
    id2: &FiniteIdeal,
    f: &[usize],
    property: MapProperty,
) -> Result<bool, Error> {
    if f.len() != sp1.n() {
        return Err(Error::Validation(format!("map has {} values for {} points", f.len(), sp1.n())));
    }
    if let Some(bad) = f.iter().find(|&&y| y >= sp2.n()) {
        return Err(Error::Validation(format!("map value {bad} outside the codomain")));
    }
    if id1.n() != sp1.n() || id2.n() != sp2.n() {
        return Err(Error::Validation("ideal and space sizes differ".into()));
    }
    Ok(map_property(f, &BfTable::build(sp1, id1), &BfTable::build(sp2, id2), property))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realset::ext::rat;

    fn iv(lo: Rational, hi: Rational, lc: bool, hc: bool) -> RealSet {
        RealSet::interval(Interval::new(lo.into(), hi.into(), lc, hc).unwrap())
    }

    #[test]
    fn preimages_and_images() {
        let dbl = PiecewiseAffineMap::affine(int(2), int(0));
        assert_eq!(preimage(&dbl, &iv(int(0), int(2), false, false)), iv(int(0), int(1), false, false));
        assert_eq!(image_of_set(&dbl, &iv(int(0), int(1), false, false)), iv(int(0), int(2), false, false));
        let c = PiecewiseAffineMap::constant(int(3));
        assert_eq!(preimage(&c, &RealSet::point(int(3))), RealSet::reals());
        assert_eq!(preimage(&c, &RealSet::point(int(4))), RealSet::empty());
        assert_eq!(image_of_set(&PiecewiseAffineMap::constant(int(0)), &RealSet::rationals()), RealSet::point(int(0)));
        let id = PiecewiseAffineMap::identity();
        assert_eq!(preimage(&id, &RealSet::rationals()), RealSet::rationals());
    }

    #[test]
    fn step_map_is_not_continuous() {
        let h = PiecewiseAffineMap::step(int(0), int(0), int(1));
        let u = iv(rat(3, 4), int(2), false, false);
        let v = continuity_verdict(
            &h,
            &TopologySpec::usual(),
            &TopologySpec::usual(),
            IdealKind::Countable,
            std::slice::from_ref(&u),
        )
        .unwrap();
        assert_eq!(v.status, ContinuityStatus::NotContinuous);
        let w = v.witness.unwrap();
        assert_eq!(w.open_set, u);
        assert_eq!(
            w.preimage,
            RealSet::interval(Interval::new(int(0).into(), ExtRational::PosInf, true, false).unwrap())
        );
    }

    #[test]
    fn non_open_family_rejected() {
        let h = PiecewiseAffineMap::identity();
        let t = TopologySpec::usual();
        assert!(continuity_verdict(&h, &t, &t, IdealKind::Countable, &[RealSet::rationals()]).is_err());
    }

    #[test]
    fn map_parsing() {
        assert!("id".parse::<PiecewiseAffineMap>().unwrap().is_identity());
        assert_eq!("affine:2:0".parse::<PiecewiseAffineMap>().unwrap(), PiecewiseAffineMap::affine(int(2), int(0)));
        assert!("step:0:0".parse::<PiecewiseAffineMap>().is_err());
    }
}
