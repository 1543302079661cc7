//! Maps between finite spaces: ideal continuity, ideal open/closed maps,
//! homeomorphisms and ideal compactness, all by enumeration.

use serde::Serialize;

use super::brute::BfTable;
use super::space::{bit, full, Subset};

/// A total map `{0..n1-1} → {0..n2-1}`.
pub type PointMap = Vec<usize>;

pub fn preimage(f: &[usize], u: Subset) -> Subset {
    f.iter().enumerate().filter(|(_, &y)| u & bit(y) != 0).fold(0, |a, (x, _)| a | bit(x))
}

pub fn image(f: &[usize], a: Subset) -> Subset {
    f.iter().enumerate().filter(|(x, _)| a & bit(*x) != 0).fold(0, |acc, (_, &y)| acc | bit(y))
}

pub fn is_onto(f: &[usize], n2: usize) -> bool {
    image(f, full(f.len())) == full(n2)
}

pub fn is_bijection(f: &[usize], n2: usize) -> bool {
    f.len() == n2 && is_onto(f, n2)
}

/// Inverse of a bijection.
pub fn inverse(f: &[usize]) -> PointMap {
    let mut g = vec![0; f.len()];
    for (x, &y) in f.iter().enumerate() {
        g[y] = x;
    }
    g
}

/// Every map from `n1` points to `n2` points, in lexicographic order.
pub fn all_maps(n1: usize, n2: usize) -> impl Iterator<Item = PointMap> {
    let total = n2.pow(n1 as u32);
    (0..total).map(move |mut k| {
        let mut f = vec![0; n1];
        for slot in f.iter_mut().rev() {
            *slot = k % n2;
            k /= n2;
        }
        f
    })
}

fn opens(t: &BfTable) -> impl Iterator<Item = Subset> + '_ {
    (0..=t.x).filter(|&s| t.is_open(s))
}

pub fn is_continuous(f: &[usize], dom: &BfTable, cod: &BfTable) -> bool {
    opens(cod).all(|u| dom.is_open(preimage(f, u)))
}

pub fn is_ideal_continuous(f: &[usize], dom: &BfTable, cod: &BfTable) -> bool {
    opens(cod).all(|u| dom.is_iopen(preimage(f, u)))
}

pub fn is_ideal_open_map(f: &[usize], dom: &BfTable, cod: &BfTable) -> bool {
    opens(dom).all(|u| cod.is_iopen(image(f, u)))
}

pub fn is_ideal_closed_map(f: &[usize], dom: &BfTable, cod: &BfTable) -> bool {
    (0..=dom.x).filter(|&s| dom.is_closed(s)).all(|v| cod.is_iclosed(image(f, v)))
}

pub fn is_homeomorphism(f: &[usize], dom: &BfTable, cod: &BfTable) -> bool {
    is_bijection(f, cod.n) && is_continuous(f, dom, cod) && is_continuous(&inverse(f), cod, dom)
}

pub fn is_ideal_homeomorphism(f: &[usize], dom: &BfTable, cod: &BfTable) -> bool {
    is_bijection(f, cod.n) && is_ideal_continuous(f, dom, cod) && is_ideal_continuous(&inverse(f), cod, dom)
}

/// Every open cover has a finite subcover of I-open sets. Checked over every
/// subfamily of the open sets; on a finite space each cover is finite, so a
/// good subcover exists iff the I-open members already cover.
pub fn is_ideal_compact(t: &BfTable) -> bool {
    let fam: Vec<Subset> = opens(t).collect();
    (0u64..(1u64 << fam.len())).all(|pick| {
        let chosen = fam.iter().enumerate().filter(|(k, _)| pick & (1 << k) != 0);
        let union = chosen.clone().fold(0, |a, (_, &u)| a | u);
        let good = chosen.filter(|(_, &u)| t.is_iopen(u)).fold(0, |a, (_, &u)| a | u);
        union != t.x || good == t.x
    })
}

/// Compactness proper. Always true on a finite space; kept as its own
/// predicate so the theorems read as stated.
pub fn is_compact(t: &BfTable) -> bool {
    let fam: Vec<Subset> = opens(t).collect();
    fam.iter().fold(0, |a, &u| a | u) == t.x
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MapProperty {
    IdealContinuous,
    IdealOpenMap,
    IdealClosedMap,
    IdealHomeomorphism,
    /// Instance of the image theorem: if `f` is I-continuous, I-open and onto
    /// and the domain is I-compact, then the codomain is I-compact.
    PreservesIdealCompact,
}

impl std::str::FromStr for MapProperty {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, crate::Error> {
        Ok(match s {
            "IdealContinuous" | "icont" => MapProperty::IdealContinuous,
            "IdealOpenMap" | "iopen-map" => MapProperty::IdealOpenMap,
            "IdealClosedMap" | "iclosed-map" => MapProperty::IdealClosedMap,
            "IdealHomeomorphism" | "ihomeo" => MapProperty::IdealHomeomorphism,
            "PreservesIdealCompact" | "icompact-image" => MapProperty::PreservesIdealCompact,
            other => return Err(crate::Error::Validation(format!("unknown map property {other}"))),
        })
    }
}

pub fn map_property(f: &[usize], dom: &BfTable, cod: &BfTable, property: MapProperty) -> bool {
    match property {
        MapProperty::IdealContinuous => is_ideal_continuous(f, dom, cod),
        MapProperty::IdealOpenMap => is_ideal_open_map(f, dom, cod),
        MapProperty::IdealClosedMap => is_ideal_closed_map(f, dom, cod),
        MapProperty::IdealHomeomorphism => is_ideal_homeomorphism(f, dom, cod),
        MapProperty::PreservesIdealCompact => {
            let hyp = is_ideal_continuous(f, dom, cod)
                && is_ideal_open_map(f, dom, cod)
                && is_onto(f, cod.n)
                && is_ideal_compact(dom);
            !hyp || is_ideal_compact(cod)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_oracle::space::{FiniteIdeal, FiniteSpace};

    #[test]
    fn maps_enumerate_in_order() {
        let maps: Vec<PointMap> = all_maps(2, 2).collect();
        assert_eq!(maps, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn sierpinski_identity() {
        let sp = FiniteSpace::new(2, &[0, 2, 3]).unwrap();
        let t = BfTable::build(&sp, &FiniteIdeal::principal(2, 0).unwrap());
        assert!(!is_ideal_continuous(&[0, 1], &t, &t));
        assert!(is_continuous(&[0, 1], &t, &t));
        let full_ideal = BfTable::build(&sp, &FiniteIdeal::principal(2, 3).unwrap());
        assert!(is_ideal_continuous(&[0, 1], &full_ideal, &full_ideal));
    }
}
