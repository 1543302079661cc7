//! Differential test of the set kernel against a pointwise germ evaluator.
//!
//! The oracle never builds a normal form. For a rational `q` it computes five
//! flags straight from the expression tree: membership of generic rationals
//! and of irrationals just left of `q`, of `q` itself, and just right of `q`.
//! Every atom has locally constant such flags, so they compose through the
//! boolean operators pointwise.

use ctopo_core::{int, rat, ExtRational, Interval, Rational, RealSet, Topology, TopologySpec};
use proptest::prelude::*;

#[derive(Clone, Debug)]
enum Expr {
    Interval(Option<i64>, Option<i64>, bool, bool),
    Points(Vec<i64>),
    Prog(i64, usize),
    Q,
    I,
    Union(Box<Expr>, Box<Expr>),
    Inter(Box<Expr>, Box<Expr>),
    Diff(Box<Expr>, Box<Expr>),
    Compl(Box<Expr>),
}

const STEPS: [(i64, i64); 4] = [(1, 2), (1, 1), (2, 1), (3, 1)];

fn half(k: i64) -> Rational {
    rat(k, 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Germ {
    rl: bool,
    il: bool,
    at: bool,
    rr: bool,
    ir: bool,
}

impl Germ {
    fn zip(self, o: Germ, f: impl Fn(bool, bool) -> bool) -> Germ {
        Germ {
            rl: f(self.rl, o.rl),
            il: f(self.il, o.il),
            at: f(self.at, o.at),
            rr: f(self.rr, o.rr),
            ir: f(self.ir, o.ir),
        }
    }
}

fn germ(e: &Expr, q: &Rational) -> Germ {
    let none = Germ { rl: false, il: false, at: false, rr: false, ir: false };
    match e {
        Expr::Interval(lo, hi, lc, hc) => {
            let above_lo = |strict: bool| match lo {
                None => true,
                Some(l) => {
                    let l = half(*l);
                    if strict {
                        &l < q
                    } else {
                        &l <= q
                    }
                }
            };
            let below_hi = |strict: bool| match hi {
                None => true,
                Some(h) => {
                    let h = half(*h);
                    if strict {
                        q < &h
                    } else {
                        q <= &h
                    }
                }
            };
            let left = above_lo(true) && below_hi(false);
            let right = above_lo(false) && below_hi(true);
            let at = (above_lo(true) || (*lc && lo.map(half).as_ref() == Some(q)))
                && (below_hi(true) || (*hc && hi.map(half).as_ref() == Some(q)));
            Germ { rl: left, il: left, at, rr: right, ir: right }
        }
        Expr::Points(ps) => Germ { at: ps.iter().any(|p| &half(*p) == q), ..none },
        Expr::Prog(a, s) => {
            let (n, d) = STEPS[*s];
            let k = (q - half(*a)) / rat(n, d);
            Germ { at: k.is_integer(), ..none }
        }
        Expr::Q => Germ { rl: true, il: false, at: true, rr: true, ir: false },
        Expr::I => Germ { rl: false, il: true, at: false, rr: false, ir: true },
        Expr::Union(a, b) => germ(a, q).zip(germ(b, q), |x, y| x || y),
        Expr::Inter(a, b) => germ(a, q).zip(germ(b, q), |x, y| x && y),
        Expr::Diff(a, b) => germ(a, q).zip(germ(b, q), |x, y| x && !y),
        Expr::Compl(a) => germ(a, q).zip(germ(a, q), |x, _| !x),
    }
}

fn build(e: &Expr) -> RealSet {
    match e {
        Expr::Interval(lo, hi, lc, hc) => {
            let l = lo.map(|v| ExtRational::Finite(half(v))).unwrap_or(ExtRational::NegInf);
            let h = hi.map(|v| ExtRational::Finite(half(v))).unwrap_or(ExtRational::PosInf);
            RealSet::interval(Interval::new(l, h, *lc && lo.is_some(), *hc && hi.is_some()).unwrap())
        }
        Expr::Points(ps) => RealSet::points(ps.iter().map(|p| half(*p))),
        Expr::Prog(a, s) => {
            let (n, d) = STEPS[*s];
            RealSet::progression(&half(*a), &rat(n, d), None).unwrap()
        }
        Expr::Q => RealSet::rationals(),
        Expr::I => RealSet::irrationals(),
        Expr::Union(a, b) => build(a).union(&build(b)),
        Expr::Inter(a, b) => build(a).intersect(&build(b)),
        Expr::Diff(a, b) => build(a).difference(&build(b)),
        Expr::Compl(a) => build(a).complement(),
    }
}

fn probe(s: &RealSet, q: &Rational) -> Germ {
    let eps = rat(1, 1_000_003);
    let l = q - &eps;
    let r = q + &eps;
    Germ {
        rl: s.contains_rational(&l),
        il: s.i_intervals().contains(&l),
        at: s.contains_rational(q),
        rr: s.contains_rational(&r),
        ir: s.i_intervals().contains(&r),
    }
}

fn samples() -> Vec<Rational> {
    (-28..=28).map(|k| rat(k, 4)).collect()
}

fn interval_strategy() -> impl Strategy<Value = Expr> {
    (proptest::option::weighted(0.85, -10i64..=10), 0i64..=10, any::<bool>(), any::<bool>(), any::<bool>()).prop_map(
        |(lo, len, inf_hi, lc, hc)| {
            let hi = if inf_hi && len > 7 { None } else { Some(lo.unwrap_or(-10) + len) };
            let (lc, hc) = if lo.is_some() && hi == lo { (true, true) } else { (lc, hc) };
            Expr::Interval(lo, hi, lc, hc)
        },
    )
}

fn expr_strategy() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        4 => interval_strategy(),
        2 => proptest::collection::vec(-12i64..=12, 1..4).prop_map(Expr::Points),
        2 => (-4i64..=4, 0usize..4).prop_map(|(a, s)| Expr::Prog(a, s)),
        1 => Just(Expr::Q),
        1 => Just(Expr::I),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Union(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Inter(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Diff(Box::new(a), Box::new(b))),
            inner.prop_map(|a| Expr::Compl(Box::new(a))),
        ]
    })
}

fn usual_int(g: Germ) -> Germ {
    let l = g.rl && g.il;
    let r = g.rr && g.ir;
    Germ { rl: l, il: l, at: g.at && l && r, rr: r, ir: r }
}

fn usual_cl(g: Germ) -> Germ {
    let l = g.rl || g.il;
    let r = g.rr || g.ir;
    Germ { rl: l, il: l, at: g.at || l || r, rr: r, ir: r }
}

fn usual_derived(g: Germ) -> Germ {
    let l = g.rl || g.il;
    let r = g.rr || g.ir;
    Germ { rl: l, il: l, at: l || r, rr: r, ir: r }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn kernel_matches_germs(e in expr_strategy()) {
        let s = build(&e);
        for q in samples() {
            prop_assert_eq!(probe(&s, &q), germ(&e, &q), "at {} for {:?} = {}", q, e, s);
        }
    }

    #[test]
    fn usual_operators_match_germs(e in expr_strategy()) {
        let s = build(&e);
        let t = TopologySpec::usual();
        let (i, c, d) = (t.interior(&s), t.closure(&s), t.derived(&s));
        for q in samples() {
            let g = germ(&e, &q);
            prop_assert_eq!(probe(&i, &q), usual_int(g), "int at {} of {}", q, s);
            prop_assert_eq!(probe(&c, &q), usual_cl(g), "cl at {} of {}", q, s);
            prop_assert_eq!(probe(&d, &q), usual_derived(g), "D at {} of {}", q, s);
        }
    }

    #[test]
    fn normal_form_is_a_fixpoint(e in expr_strategy()) {
        let s = build(&e);
        let flips = s.q_plus().union(s.q_minus());
        prop_assert_eq!(RealSet::from_parts(s.q_intervals(), &flips, s.i_intervals()), s.clone());
        // the same set reached through a different expression has the same form
        prop_assert_eq!(s.complement().complement(), s.clone());
        prop_assert_eq!(s.union(&RealSet::empty()), s.clone());
    }
}

#[test]
fn example_sets_by_germ() {
    let h = RealSet::points([int(1), int(2), int(3)]);
    assert_eq!(probe(&h, &int(2)), Germ { rl: false, il: false, at: true, rr: false, ir: false });
    let rz = RealSet::integers().complement();
    assert_eq!(probe(&rz, &int(0)), Germ { rl: true, il: true, at: false, rr: true, ir: true });
}
