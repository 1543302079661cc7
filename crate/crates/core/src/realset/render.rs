//! Text form of a [`RealSet`] in the constructor grammar read by the CLI.
//!
//! The output is deterministic and parses back to an equal set.

use std::fmt;

use super::ext::{fmt_rational, ExtRational};
use super::periodic::Periodic;
use super::simple::{Component, Interval, SimpleSet};
use super::{DiscreteSet, RealSet};

fn end(x: &ExtRational) -> String {
    match x {
        ExtRational::NegInf => "-inf".into(),
        ExtRational::PosInf => "inf".into(),
        ExtRational::Finite(q) => fmt_rational(q),
    }
}

pub(crate) fn interval(iv: &Interval) -> String {
    let flag = |closed: bool| if closed { "c" } else { "o" };
    format!("interval({},{},{},{})", end(&iv.lo), end(&iv.hi), flag(iv.lo_closed), flag(iv.hi_closed))
}

fn wrap(op: &str, mut terms: Vec<String>) -> String {
    match terms.len() {
        0 => "empty".into(),
        1 => terms.pop().unwrap(),
        _ => format!("{op}({})", terms.join(", ")),
    }
}

fn simple_terms(u: &SimpleSet) -> Vec<String> {
    if u.is_full() {
        return vec!["R".into()];
    }
    let mut out = Vec::new();
    let mut pts = Vec::new();
    for c in u.components() {
        match c {
            Component::Interval(iv) => out.push(interval(iv)),
            Component::Point(p) => pts.push(fmt_rational(p)),
        }
    }
    if !pts.is_empty() {
        out.push(format!("points({})", pts.join(",")));
    }
    out
}

fn points(pts: &[&super::ext::Rational]) -> String {
    let v: Vec<String> = pts.iter().map(|p| fmt_rational(p)).collect();
    format!("points({})", v.join(","))
}

fn pattern(p: &Periodic) -> String {
    let terms =
        p.progressions().iter().map(|(a, d)| format!("prog({},{})", fmt_rational(a), fmt_rational(d))).collect();
    wrap("union", terms)
}

fn discrete(d: &DiscreteSet) -> String {
    if Some(d) == Some(RealSet::integers().q_plus()) {
        return "Z".into();
    }
    if Some(d) == Some(RealSet::naturals().q_plus()) {
        return "N".into();
    }
    let mut base = Vec::new();
    if d.below() == d.above() {
        if !d.above().is_empty() {
            base.push(pattern(d.above()));
        }
    } else {
        if !d.below().is_empty() {
            base.push(format!("inter({}, interval(-inf,0,o,o))", pattern(d.below())));
        }
        if !d.above().is_empty() {
            base.push(format!("inter({}, interval(0,inf,c,o))", pattern(d.above())));
        }
    }
    let (removed, added): (Vec<_>, Vec<_>) = d.exceptions().iter().partition(|x| !d.contains(x));
    if !added.is_empty() {
        base.push(points(&added));
    }
    let body = wrap("union", base);
    if removed.is_empty() {
        body
    } else {
        format!("setminus({body}, {})", points(&removed))
    }
}

pub(crate) fn render(s: &RealSet) -> String {
    for (name, named) in [
        ("empty", RealSet::empty()),
        ("R", RealSet::reals()),
        ("Q", RealSet::rationals()),
        ("I", RealSet::irrationals()),
    ] {
        if *s == named {
            return name.into();
        }
    }
    let j = &s.q_intervals;
    let v = &s.i_intervals;
    let both = j.intersect(&v.closure());
    let q_only = j.difference(&v.closure());
    let i_only = v.difference(j);
    let mut terms = simple_terms(&both);
    if !q_only.is_empty() {
        terms.push(if q_only.is_full() {
            "Q".into()
        } else {
            format!("qtrace({})", wrap("union", simple_terms(&q_only)))
        });
    }
    if !i_only.is_empty() {
        terms.push(if i_only.is_full() {
            "I".into()
        } else {
            format!("itrace({})", wrap("union", simple_terms(&i_only)))
        });
    }
    let mut out = wrap("union", terms);
    if !s.q_minus.is_empty() {
        out = format!("setminus({out}, {})", discrete(&s.q_minus));
    }
    if !s.q_plus.is_empty() {
        out = if s.q_intervals.is_empty() && s.i_intervals.is_empty() {
            discrete(&s.q_plus)
        } else {
            format!("union({out}, {})", discrete(&s.q_plus))
        };
    }
    out
}

impl fmt::Display for RealSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}
