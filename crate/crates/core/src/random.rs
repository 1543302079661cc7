//! Seeded generators of random sets, used by the property suites.
//!
//! Endpoints are drawn from a coarse rational grid so that random operands
//! share breakpoints often; that is where normalisation bugs live.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::realset::ext::{int, rat, ExtRational, Rational};
use crate::realset::simple::Interval;
use crate::realset::RealSet;
use crate::topologies::TopologySpec;

/// Default seed when `CTOPO_SEED` is unset.
pub const DEFAULT_SEED: u64 = 0x5eed_c0de;

/// Reads `CTOPO_SEED`, falling back to [`DEFAULT_SEED`].
pub fn seed_from_env() -> u64 {
    std::env::var("CTOPO_SEED").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SEED)
}

pub struct Gen {
    rng: ChaCha8Rng,
    /// Grid denominator.
    denom: i64,
    /// Grid numerators range over `-span..=span`.
    span: i64,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen { rng: ChaCha8Rng::seed_from_u64(seed), denom: 2, span: 8 }
    }

    /// Generator whose finite endpoints lie in `[-1,1]` on a grid of eighths.
    pub fn unit(seed: u64) -> Self {
        Gen { rng: ChaCha8Rng::seed_from_u64(seed), denom: 8, span: 8 }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn grid_point(&mut self) -> Rational {
        let k = self.rng.random_range(-self.span..=self.span);
        rat(k, self.denom)
    }

    fn end(&mut self, infinite: ExtRational) -> ExtRational {
        if self.rng.random_bool(0.15) {
            infinite
        } else {
            self.grid_point().into()
        }
    }

    pub fn interval(&mut self) -> Interval {
        loop {
            let lo = self.end(ExtRational::NegInf);
            let hi = self.end(ExtRational::PosInf);
            if lo > hi {
                continue;
            }
            let lc = lo.is_finite() && self.rng.random_bool(0.5);
            let hc = hi.is_finite() && self.rng.random_bool(0.5);
            if let Ok(iv) = Interval::new(lo, hi, lc, hc) {
                return iv;
            }
        }
    }

    fn progression(&mut self) -> RealSet {
        let steps = [rat(1, 2), int(1), int(2), int(3)];
        let step = steps[self.rng.random_range(0..steps.len())].clone();
        let anchor = self.grid_point();
        let window = if self.rng.random_bool(0.4) { Some(RealSet::interval(self.interval())) } else { None };
        let p = RealSet::progression(&anchor, &step, None).expect("positive step");
        match window {
            Some(w) => p.intersect(&w),
            None => p,
        }
    }

    pub fn atom(&mut self) -> RealSet {
        match self.rng.random_range(0..10) {
            0..=2 => RealSet::interval(self.interval()),
            3 => {
                let n = self.rng.random_range(1..=3);
                RealSet::points((0..n).map(|_| self.grid_point()))
            }
            4 => self.progression(),
            5 => RealSet::rationals().intersect(&RealSet::interval(self.interval())),
            6 => RealSet::irrationals().intersect(&RealSet::interval(self.interval())),
            7 => [RealSet::rationals(), RealSet::irrationals(), RealSet::integers(), RealSet::naturals()]
                [self.rng.random_range(0..4)]
            .clone(),
            8 => RealSet::empty(),
            _ => RealSet::reals(),
        }
    }

    /// Random boolean combination of up to `depth` levels of atoms.
    pub fn realset(&mut self, depth: u32) -> RealSet {
        if depth == 0 || self.rng.random_bool(0.3) {
            return self.atom();
        }
        let a = self.realset(depth - 1);
        match self.rng.random_range(0..4) {
            0 => a.union(&self.realset(depth - 1)),
            1 => a.intersect(&self.realset(depth - 1)),
            2 => a.difference(&self.realset(depth - 1)),
            _ => a.complement(),
        }
    }

    /// Random set inside `t`'s universe.
    pub fn realset_in(&mut self, t: &TopologySpec, depth: u32) -> RealSet {
        self.realset(depth).intersect(t.universe_set())
    }

    /// One of the five drivers with a random parameter.
    pub fn topology(&mut self) -> TopologySpec {
        match self.rng.random_range(0..6) {
            0 => TopologySpec::usual(),
            1 => TopologySpec::particular_point(self.grid_point()),
            2 => TopologySpec::excluded_set(RealSet::irrationals()).expect("proper subset"),
            3 => loop {
                let e = self.realset(1);
                if let Ok(t) = TopologySpec::excluded_set(e) {
                    break t;
                }
            },
            4 => TopologySpec::cocountable(),
            _ => TopologySpec::overlapping_interval(),
        }
    }
}
