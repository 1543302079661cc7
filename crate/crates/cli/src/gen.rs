//! Seeded random expressions for the round-trip and purity checks.

use ctopo_core::{int, rat, IdealKind, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::parser::{Bound, Const, Context, Expr, IdealOp, SetFn, Suffix, TopOp, TopoSel};

pub struct ExprGen {
    rng: ChaCha8Rng,
}

const CONSTS: [Const; 6] =
    [Const::Reals, Const::Rationals, Const::Irrationals, Const::Integers, Const::Naturals, Const::Empty];
const TOP_OPS: [TopOp; 6] = [TopOp::Int, TopOp::Cl, TopOp::Fr, TopOp::D, TopOp::Bd, TopOp::Ext];
const IDEAL_OPS: [IdealOp; 6] = [IdealOp::Int, IdealOp::Cl, IdealOp::D, IdealOp::Bd, IdealOp::Fr, IdealOp::Ext];

impl ExprGen {
    pub fn new(seed: u64) -> Self {
        ExprGen { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    fn grid(&mut self) -> Rational {
        rat(self.rng.random_range(-8..=8), 2)
    }

    fn pick<T: Clone>(&mut self, xs: &[T]) -> T {
        xs[self.rng.random_range(0..xs.len())].clone()
    }

    fn atom(&mut self) -> Expr {
        match self.rng.random_range(0..5) {
            0 => Expr::Const(self.pick(&CONSTS)),
            1 | 2 => {
                let (a, b) = (self.grid(), self.grid());
                let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                let lo = if self.rng.random_bool(0.15) { Bound::NegInf } else { Bound::Finite(lo) };
                let hi = if self.rng.random_bool(0.15) { Bound::PosInf } else { Bound::Finite(hi) };
                let degenerate = lo == hi;
                let lo_closed = degenerate || matches!(lo, Bound::Finite(_)) && self.rng.random_bool(0.5);
                let hi_closed = degenerate || matches!(hi, Bound::Finite(_)) && self.rng.random_bool(0.5);
                Expr::Interval { lo, hi, lo_closed, hi_closed }
            }
            3 => Expr::Points((0..self.rng.random_range(1..=3)).map(|_| self.grid()).collect()),
            _ => {
                let step = self.pick(&[rat(1, 2), int(1), int(3)]);
                Expr::Prog(self.grid(), step)
            }
        }
    }

    fn topology(&mut self) -> TopoSel {
        match self.rng.random_range(0..4) {
            0 => TopoSel::Usual,
            1 => TopoSel::Particular(self.grid()),
            2 => TopoSel::Excluded(Box::new(Expr::Const(self.pick(&[Const::Irrationals, Const::Integers])))),
            _ => TopoSel::Cocountable,
        }
    }

    /// A set-valued expression of nesting depth at most `depth`.
    pub fn set(&mut self, depth: u32) -> Expr {
        if depth == 0 || self.rng.random_bool(0.25) {
            return self.atom();
        }
        match self.rng.random_range(0..8) {
            0 | 1 => {
                let op = self.pick(&[SetFn::Union, SetFn::Inter]);
                let n = self.rng.random_range(2..=3);
                Expr::Set(op, (0..n).map(|_| self.set(depth - 1)).collect())
            }
            2 => Expr::Set(SetFn::Setminus, vec![self.set(depth - 1), self.set(depth - 1)]),
            3 => {
                let op = self.pick(&[SetFn::Compl, SetFn::Qtrace, SetFn::Itrace]);
                Expr::Set(op, vec![self.set(depth - 1)])
            }
            4 | 5 => {
                let ctx = Context { topology: Some(self.topology()), ideal: None };
                Expr::Top(self.pick(&TOP_OPS), ctx, Box::new(self.set(depth - 1)))
            }
            _ => {
                let suffix = self.pick(&[Suffix::C, Suffix::F, Suffix::I]);
                let ideal = match suffix {
                    Suffix::I => Some(self.pick(&[IdealKind::Finite, IdealKind::Countable])),
                    s if self.rng.random_bool(0.3) => s.default_ideal(),
                    _ => None,
                };
                let ctx = Context { topology: Some(self.topology()), ideal };
                Expr::Ideal(self.pick(&IDEAL_OPS), suffix, ctx, Box::new(self.set(depth - 1)))
            }
        }
    }

    /// Any expression: mostly sets, sometimes a flag or a cardinality.
    pub fn expr(&mut self, depth: u32) -> Expr {
        match self.rng.random_range(0..10) {
            0 => Expr::Card(Box::new(self.set(depth))),
            1 => Expr::Subset(Box::new(self.set(depth)), Box::new(self.set(depth))),
            2 => Expr::Eq(Box::new(self.set(depth)), Box::new(self.set(depth))),
            3 => {
                let ctx = Context { topology: Some(self.topology()), ideal: None };
                Expr::Top(self.pick(&[TopOp::IsOpen, TopOp::IsClosed]), ctx, Box::new(self.set(depth)))
            }
            4 => {
                let ctx = Context { topology: Some(self.topology()), ideal: None };
                let op = self.pick(&[IdealOp::IsOpen, IdealOp::IsClosed]);
                Expr::Ideal(op, self.pick(&[Suffix::C, Suffix::F]), ctx, Box::new(self.set(depth)))
            }
            _ => self.set(depth),
        }
    }
}
