//! Finite unions of rational arithmetic progressions `a + d·ℤ`.
//!
//! Any finite family of rational progressions lives on a common lattice
//! `(1/scale)·ℤ` and repeats with a common period `modulus/scale`, so the union
//! is `{ n/scale : n mod modulus ∈ residues }`. Normalisation picks the least
//! period and then the coarsest lattice, which makes the triple unique.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::ext::Rational;

/// Lattices beyond this many residues per period are refused.
const MAX_MODULUS: u64 = 1 << 22;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Periodic {
    scale: u64,
    modulus: u64,
    residues: Vec<u64>,
}

fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

fn lcm(a: u64, b: u64) -> u64 {
    let l = (a / gcd(a, b)).checked_mul(b);
    match l {
        Some(l) if l <= MAX_MODULUS * MAX_MODULUS => l,
        _ => panic!("progression lattice too fine: lcm({a}, {b}) overflows"),
    }
}

fn to_u64(n: &BigInt) -> u64 {
    n.to_u64().unwrap_or_else(|| panic!("progression parameter {n} out of range"))
}

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            out.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

impl Default for Periodic {
    fn default() -> Self {
        Periodic::empty()
    }
}

impl Periodic {
    pub fn empty() -> Self {
        Periodic { scale: 1, modulus: 1, residues: Vec::new() }
    }

    /// `{ anchor + k·step : k ∈ ℤ }`, `step > 0`.
    pub fn progression(anchor: &Rational, step: &Rational) -> Self {
        assert!(step.is_positive(), "progression step must be positive");
        let scale = lcm(to_u64(anchor.denom()), to_u64(step.denom()));
        let big_scale = BigInt::from(scale);
        let modulus_big = step.numer() * (&big_scale / step.denom());
        let modulus = to_u64(&modulus_big);
        assert!(modulus <= MAX_MODULUS, "progression lattice too fine");
        let n = anchor.numer() * (&big_scale / anchor.denom());
        let r = to_u64(&n.mod_floor(&modulus_big));
        Periodic { scale, modulus, residues: vec![r] }.normalized()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn scale(&self) -> u64 {
        self.scale
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    /// Real period `modulus/scale`.
    pub fn period(&self) -> Rational {
        Rational::new(BigInt::from(self.modulus), BigInt::from(self.scale))
    }

    pub fn contains(&self, x: &Rational) -> bool {
        if self.residues.is_empty() {
            return false;
        }
        let scaled = x.numer() * BigInt::from(self.scale);
        let (n, rem) = scaled.div_rem(x.denom());
        if !rem.is_zero() {
            return false;
        }
        let r = to_u64(&n.mod_floor(&BigInt::from(self.modulus)));
        self.residues.binary_search(&r).is_ok()
    }

    /// One `(anchor, step)` pair per residue, anchors in `[0, period)`.
    pub fn progressions(&self) -> Vec<(Rational, Rational)> {
        let step = self.period();
        self.residues
            .iter()
            .map(|&r| (Rational::new(BigInt::from(r), BigInt::from(self.scale)), step.clone()))
            .collect()
    }

    /// Members in the closed window `[lo, hi]`, ascending.
    pub fn members_in(&self, lo: &Rational, hi: &Rational) -> Vec<Rational> {
        if self.residues.is_empty() || lo > hi {
            return Vec::new();
        }
        let scale = BigInt::from(self.scale);
        let modulus = BigInt::from(self.modulus);
        let n_lo = (lo * Rational::from_integer(scale.clone())).ceil().to_integer();
        let n_hi = (hi * Rational::from_integer(scale.clone())).floor().to_integer();
        let mut out = Vec::new();
        for &r in &self.residues {
            let r = BigInt::from(r);
            // first n >= n_lo with n ≡ r (mod modulus)
            let mut n = &n_lo + (&r - &n_lo).mod_floor(&modulus);
            while n <= n_hi {
                out.push(Rational::new(n.clone(), scale.clone()));
                n += &modulus;
            }
        }
        out.sort();
        out
    }

    /// Smallest member `>= x`.
    pub fn next_at_or_after(&self, x: &Rational) -> Option<Rational> {
        if self.residues.is_empty() {
            return None;
        }
        let hi = x + self.period();
        self.members_in(x, &hi).into_iter().next()
    }

    /// Largest member `<= x`.
    pub fn prev_at_or_before(&self, x: &Rational) -> Option<Rational> {
        if self.residues.is_empty() {
            return None;
        }
        let lo = x - self.period();
        self.members_in(&lo, x).into_iter().last()
    }

    /// Residue bitmap of `self` on a finer common lattice `(scale, modulus)`.
    fn expand(&self, scale: u64, modulus: u64) -> Vec<bool> {
        let mut bits = vec![false; modulus as usize];
        if self.residues.is_empty() {
            return bits;
        }
        let s = scale / self.scale;
        let own = self.modulus * s;
        debug_assert_eq!(modulus % own, 0);
        for &r in &self.residues {
            let mut k = r * s;
            while k < modulus {
                bits[k as usize] = true;
                k += own;
            }
        }
        bits
    }

    /// Pointwise combination; `f(all false)` must be false.
    pub fn combine(parts: &[&Periodic], f: impl Fn(&[bool]) -> bool) -> Periodic {
        debug_assert!(!f(&vec![false; parts.len()]), "combination must vanish off the operands");
        let live: Vec<&&Periodic> = parts.iter().filter(|p| !p.is_empty()).collect();
        if live.is_empty() {
            return Periodic::empty();
        }
        let scale = live.iter().fold(1, |acc, p| lcm(acc, p.scale));
        let modulus = live.iter().fold(1, |acc, p| lcm(acc, p.modulus * (scale / p.scale)));
        assert!(modulus <= MAX_MODULUS, "progression lattice too fine");
        let maps: Vec<Vec<bool>> = parts.iter().map(|p| p.expand(scale, modulus)).collect();
        let mut bits = vec![false; parts.len()];
        let mut residues = Vec::new();
        for k in 0..modulus as usize {
            for (b, m) in bits.iter_mut().zip(&maps) {
                *b = m[k];
            }
            if f(&bits) {
                residues.push(k as u64);
            }
        }
        Periodic { scale, modulus, residues }.normalized()
    }

    pub fn union(&self, other: &Periodic) -> Periodic {
        Periodic::combine(&[self, other], |b| b[0] || b[1])
    }

    pub fn intersect(&self, other: &Periodic) -> Periodic {
        Periodic::combine(&[self, other], |b| b[0] && b[1])
    }

    /// Image under `x -> slope * x + offset`, `slope != 0`.
    pub fn affine(&self, slope: &Rational, offset: &Rational) -> Periodic {
        let mut acc = Periodic::empty();
        for (anchor, step) in self.progressions() {
            let p = Periodic::progression(&(anchor * slope + offset), &(step * slope.abs()));
            acc = acc.union(&p);
        }
        acc
    }

    fn normalized(mut self) -> Periodic {
        if self.residues.is_empty() {
            return Periodic::empty();
        }
        self.residues.sort_unstable();
        self.residues.dedup();
        // least period: shrink by prime factors while the pattern repeats
        'outer: loop {
            for p in prime_factors(self.modulus) {
                let m = self.modulus / p;
                let repeats =
                    self.residues.iter().all(|&r| self.residues.binary_search(&((r + m) % self.modulus)).is_ok());
                if repeats {
                    self.residues.retain(|&r| r < m);
                    self.modulus = m;
                    continue 'outer;
                }
            }
            break;
        }
        // coarsest lattice
        let g = self.residues.iter().fold(gcd(self.scale, self.modulus), |acc, &r| gcd(acc, r));
        if g > 1 {
            self.scale /= g;
            self.modulus /= g;
            for r in &mut self.residues {
                *r /= g;
            }
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realset::ext::{int, rat};

    #[test]
    fn integers_are_canonical() {
        let z = Periodic::progression(&int(0), &int(1));
        assert_eq!((z.scale(), z.modulus(), z.residues()), (1, 1, &[0u64][..]));
        let z2 = Periodic::progression(&int(7), &int(1));
        assert_eq!(z, z2);
        let z3 = Periodic::progression(&int(0), &int(2)).union(&Periodic::progression(&int(1), &int(2)));
        assert_eq!(z, z3);
    }

    #[test]
    fn half_integers_merge_to_finer_lattice() {
        let a = Periodic::progression(&int(0), &int(1));
        let b = Periodic::progression(&rat(1, 2), &int(1));
        assert_eq!(a.union(&b), Periodic::progression(&int(0), &rat(1, 2)));
    }

    #[test]
    fn crt_intersection() {
        // 2ℤ ∩ (1 + 3ℤ) = 4 + 6ℤ
        let a = Periodic::progression(&int(0), &int(2));
        let b = Periodic::progression(&int(1), &int(3));
        assert_eq!(a.intersect(&b), Periodic::progression(&int(4), &int(6)));
        // 2ℤ ∩ (1 + 2ℤ) = ∅
        let c = Periodic::progression(&int(1), &int(2));
        assert!(a.intersect(&c).is_empty());
    }

    #[test]
    fn rational_steps() {
        let p = Periodic::progression(&rat(1, 3), &rat(2, 3));
        assert!(p.contains(&rat(1, 3)));
        assert!(p.contains(&rat(-1, 3)));
        assert!(p.contains(&int(1)));
        assert!(!p.contains(&rat(2, 3)));
        assert!(!p.contains(&rat(1, 6)));
    }

    #[test]
    fn window_enumeration() {
        let p = Periodic::progression(&int(1), &int(3));
        assert_eq!(p.members_in(&int(-5), &int(7)), vec![int(-5), int(-2), int(1), int(4), int(7)]);
        assert_eq!(p.next_at_or_after(&int(2)), Some(int(4)));
        assert_eq!(p.prev_at_or_before(&int(0)), Some(int(-2)));
    }

    #[test]
    fn affine_image() {
        let z = Periodic::progression(&int(0), &int(1));
        let img = z.affine(&int(-2), &int(1));
        assert_eq!(img, Periodic::progression(&int(1), &int(2)));
        let img = z.affine(&rat(1, 2), &rat(1, 4));
        assert!(img.contains(&rat(3, 4)));
        assert!(!img.contains(&rat(1, 2)));
    }
}
