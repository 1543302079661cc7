use serde::{Deserialize, Serialize};

use crate::ideal_ops::{IdealTopology, Topology};
use crate::Error;

pub const MAX_N: usize = 5;

/// Subsets of `{0..n-1}` as bitmasks.
pub type Subset = u32;

pub fn full(n: usize) -> Subset {
    (1u32 << n) - 1
}

pub fn bit(x: usize) -> Subset {
    1u32 << x
}

pub fn members(s: Subset) -> Vec<usize> {
    (0..32).filter(|&x| s & bit(x) != 0).collect()
}

pub fn from_members(xs: &[usize]) -> Subset {
    xs.iter().fold(0, |acc, &x| acc | bit(x))
}

fn check_n(n: usize) -> Result<(), Error> {
    if (1..=MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("universe size {n} outside 1..={MAX_N}")))
    }
}

/// A topology on `n` labelled points, stored by its open sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    n: usize,
    opens: Vec<Subset>,
    /// Bit `s` is set iff subset `s` is open.
    family: u64,
    /// Smallest open set containing each point.
    nbhd: Vec<Subset>,
}

impl FiniteSpace {
    pub fn new(n: usize, opens: &[Subset]) -> Result<Self, Error> {
        check_n(n)?;
        let x = full(n);
        let mut family = 0u64;
        for &o in opens {
            if o & !x != 0 {
                return Err(Error::Validation(format!("open set {:?} leaves the universe", members(o))));
            }
            family |= 1 << o;
        }
        if family & 1 == 0 || family & (1 << x) == 0 {
            return Err(Error::Validation("a topology must contain ∅ and X".into()));
        }
        let list: Vec<Subset> = (0..=x).filter(|&s| family & (1 << s) != 0).collect();
        for &a in &list {
            for &b in &list {
                if family & (1 << (a | b)) == 0 || family & (1 << (a & b)) == 0 {
                    return Err(Error::Validation(format!(
                        "family is not closed under union and intersection at {:?}, {:?}",
                        members(a),
                        members(b)
                    )));
                }
            }
        }
        Ok(Self::from_family(n, family))
    }

    fn from_family(n: usize, family: u64) -> Self {
        let x = full(n);
        let opens: Vec<Subset> = (0..=x).filter(|&s| family & (1 << s) != 0).collect();
        let nbhd = (0..n).map(|p| opens.iter().filter(|&&o| o & bit(p) != 0).fold(x, |acc, &o| acc & o)).collect();
        FiniteSpace { n, opens, family, nbhd }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> Subset {
        full(self.n)
    }

    pub fn opens(&self) -> &[Subset] {
        &self.opens
    }

    pub fn family(&self) -> u64 {
        self.family
    }

    pub fn is_open_set(&self, s: Subset) -> bool {
        self.family & (1 << s) != 0
    }

    pub fn is_closed_set(&self, s: Subset) -> bool {
        self.is_open_set(self.full() & !s)
    }

    pub fn nbhd(&self, x: usize) -> Subset {
        self.nbhd[x]
    }

    pub fn check_subset(&self, s: Subset) -> Result<(), Error> {
        if s & !self.full() == 0 {
            Ok(())
        } else {
            Err(Error::Domain(format!("{:?} is not a subset of a {}-point space", members(s), self.n)))
        }
    }

    pub fn opens_as_lists(&self) -> Vec<Vec<usize>> {
        self.opens.iter().map(|&o| members(o)).collect()
    }
}

/// Every topology on `n` labelled points, ordered by family bitmask.
///
/// Finite topologies correspond to preorders (`x ≤ y` iff every open set
/// containing `x` contains `y`); the open sets are the up-sets.
pub fn enumerate_topologies(n: usize) -> Result<Vec<FiniteSpace>, Error> {
    check_n(n)?;
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    let mut families = Vec::new();
    for rel in 0u32..(1u32 << pairs.len()) {
        let mut up: Vec<Subset> = (0..n).map(bit).collect();
        for (k, &(a, b)) in pairs.iter().enumerate() {
            if rel & (1 << k) != 0 {
                up[a] |= bit(b);
            }
        }
        let transitive = (0..n).all(|a| members(up[a]).iter().all(|&b| up[b] & !up[a] == 0));
        if !transitive {
            continue;
        }
        let mut family = 0u64;
        for s in 0..=full(n) {
            if members(s).iter().all(|&a| up[a] & !s == 0) {
                family |= 1 << s;
            }
        }
        families.push(family);
    }
    families.sort_unstable();
    Ok(families.into_iter().map(|f| FiniteSpace::from_family(n, f)).collect())
}

/// An ideal on a finite universe. Every such ideal is `P(E)` for the union `E`
/// of its members, so it is stored by that generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FiniteIdeal {
    n: usize,
    generator: Subset,
}

impl FiniteIdeal {
    pub fn principal(n: usize, generator: Subset) -> Result<Self, Error> {
        check_n(n)?;
        if generator & !full(n) != 0 {
            return Err(Error::Validation("ideal generator leaves the universe".into()));
        }
        Ok(FiniteIdeal { n, generator })
    }

    /// Validates an explicit family against the ideal axioms.
    pub fn from_members(n: usize, members_list: &[Subset]) -> Result<Self, Error> {
        check_n(n)?;
        let mut family = 0u64;
        for &m in members_list {
            if m & !full(n) != 0 {
                return Err(Error::Validation("ideal member leaves the universe".into()));
            }
            family |= 1 << m;
        }
        if family & 1 == 0 {
            return Err(Error::Validation("an ideal must contain ∅".into()));
        }
        for s in 0..=full(n) {
            if family & (1 << s) == 0 {
                continue;
            }
            for t in 0..=full(n) {
                let sub = t & s == t;
                if sub && family & (1 << t) == 0 {
                    return Err(Error::Validation(format!("ideal is not downward closed below {:?}", members(s))));
                }
                if family & (1 << t) != 0 && family & (1 << (s | t)) == 0 {
                    return Err(Error::Validation("ideal is not closed under unions".into()));
                }
            }
        }
        let generator = members_list.iter().fold(0, |acc, &m| acc | m);
        Ok(FiniteIdeal { n, generator })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generator(&self) -> Subset {
        self.generator
    }

    pub fn contains(&self, s: Subset) -> bool {
        s & !self.generator == 0
    }

    pub fn is_subideal_of(&self, other: &FiniteIdeal) -> bool {
        self.generator & !other.generator == 0
    }

    pub fn members(&self) -> Vec<Subset> {
        (0..=self.generator).filter(|&s| s & !self.generator == 0).collect()
    }

    pub fn members_as_lists(&self) -> Vec<Vec<usize>> {
        self.members().into_iter().map(members).collect()
    }
}

/// Every ideal on `n` points, ordered by generator.
pub fn enumerate_ideals(n: usize) -> Result<Vec<FiniteIdeal>, Error> {
    check_n(n)?;
    Ok((0..=full(n)).map(|g| FiniteIdeal { n, generator: g }).collect())
}

/// A space with an ideal. Implements the generic operator formulas of
/// [`crate::ideal_ops`] from minimal neighbourhoods.
#[derive(Clone, Debug)]
pub struct FiniteIdealSpace {
    space: FiniteSpace,
    ideal: FiniteIdeal,
    ideal_opens: Vec<Subset>,
    /// Smallest I-open set containing each point. I-open sets are closed
    /// under finite intersections, so it exists.
    ideal_nbhd: Vec<Subset>,
}

impl FiniteIdealSpace {
    pub fn new(space: FiniteSpace, ideal: FiniteIdeal) -> Result<Self, Error> {
        if space.n != ideal.n {
            return Err(Error::Validation(format!("space has {} points, ideal {}", space.n, ideal.n)));
        }
        let mut sp = FiniteIdealSpace { space, ideal, ideal_opens: Vec::new(), ideal_nbhd: Vec::new() };
        sp.ideal_opens = sp.space.opens.iter().copied().filter(|&o| sp.is_ideal_open(&o)).collect();
        let x = sp.space.full();
        sp.ideal_nbhd = (0..sp.space.n)
            .map(|p| sp.ideal_opens.iter().filter(|&&o| o & bit(p) != 0).fold(x, |acc, &o| acc & o))
            .collect();
        Ok(sp)
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn ideal(&self) -> &FiniteIdeal {
        &self.ideal
    }

    pub fn ideal_opens(&self) -> &[Subset] {
        &self.ideal_opens
    }

    /// Every open cover has a finite subcover of I-open sets. A cover fails
    /// exactly when some point is covered only by non-I-open members, and the
    /// largest such cover for a point `p` is every open set that is not I-open
    /// or misses `p`.
    pub fn is_ideal_compact(&self) -> bool {
        let x = self.space.full();
        (0..self.space.n).all(|p| {
            let covered = self
                .space
                .opens
                .iter()
                .filter(|&&o| !self.ideal_opens.contains(&o) || o & bit(p) == 0)
                .fold(0, |acc, &o| acc | o);
            covered != x
        })
    }
}

impl Topology for FiniteIdealSpace {
    type Set = Subset;

    fn universe(&self) -> Subset {
        self.space.full()
    }

    fn interior(&self, s: &Subset) -> Subset {
        (0..self.space.n).filter(|&p| self.space.nbhd[p] & !s == 0).fold(0, |acc, p| acc | bit(p))
    }

    fn derived(&self, s: &Subset) -> Subset {
        (0..self.space.n).filter(|&p| self.space.nbhd[p] & s & !bit(p) != 0).fold(0, |acc, p| acc | bit(p))
    }
}

impl IdealTopology for FiniteIdealSpace {
    fn is_small(&self, s: &Subset) -> bool {
        self.ideal.contains(*s)
    }

    fn ideal_interior(&self, s: &Subset) -> Subset {
        (0..self.space.n).filter(|&p| self.ideal_nbhd[p] & !s == 0).fold(0, |acc, p| acc | bit(p))
    }

    fn ideal_derived(&self, s: &Subset) -> Subset {
        (0..self.space.n).filter(|&p| self.ideal_nbhd[p] & s & !bit(p) != 0).fold(0, |acc, p| acc | bit(p))
    }
}

/// JSON form: `{"n":3,"opens":[[],[0],[0,1,2]],"ideal":[[],[2]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteModelJson {
    pub n: usize,
    pub opens: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<Vec<usize>>>,
}

fn lists_to_masks(n: usize, lists: &[Vec<usize>]) -> Result<Vec<Subset>, Error> {
    lists
        .iter()
        .map(|l| {
            if let Some(bad) = l.iter().find(|&&x| x >= n) {
                Err(Error::Validation(format!("point {bad} outside 0..{n}")))
            } else {
                Ok(from_members(l))
            }
        })
        .collect()
}

impl FiniteModelJson {
    pub fn from_model(space: &FiniteSpace, ideal: Option<&FiniteIdeal>) -> Self {
        FiniteModelJson { n: space.n, opens: space.opens_as_lists(), ideal: ideal.map(|i| i.members_as_lists()) }
    }

    /// Validated space and ideal; a missing ideal means `{∅}`.
    pub fn to_model(&self) -> Result<(FiniteSpace, FiniteIdeal), Error> {
        let space = FiniteSpace::new(self.n, &lists_to_masks(self.n, &self.opens)?)?;
        let ideal = match &self.ideal {
            Some(lists) => FiniteIdeal::from_members(self.n, &lists_to_masks(self.n, lists)?)?,
            None => FiniteIdeal::principal(self.n, 0)?,
        };
        Ok((space, ideal))
    }

    pub fn parse(text: &str) -> Result<(FiniteSpace, FiniteIdeal), Error> {
        let model: FiniteModelJson =
            serde_json::from_str(text).map_err(|e| Error::Validation(format!("bad finite model JSON: {e}")))?;
        model.to_model()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| enumerate_topologies(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 4, 29, 355]);
        assert_eq!(enumerate_ideals(2).unwrap().len(), 4);
        assert!(enumerate_topologies(6).is_err());
    }

    #[test]
    fn rejects_non_topology() {
        assert!(FiniteSpace::new(2, &[0, 1, 2]).is_err());
        assert!(FiniteSpace::new(2, &[0, 1, 2, 3]).is_ok());
        assert!(FiniteIdeal::from_members(2, &[0, 1, 2]).is_err());
        assert!(FiniteIdeal::from_members(2, &[1]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"n":3,"opens":[[],[0],[0,1,2]],"ideal":[[],[2]]}"#;
        let (sp, id) = FiniteModelJson::parse(text).unwrap();
        assert_eq!(sp.opens(), &[0, 1, 7]);
        assert_eq!(id.generator(), 4);
        let back = serde_json::to_string(&FiniteModelJson::from_model(&sp, Some(&id))).unwrap();
        assert_eq!(back, text);
    }

    #[test]
    fn sierpinski_ideal_interior() {
        let sp = FiniteSpace::new(2, &[0, 1, 3]).unwrap();
        let fis = FiniteIdealSpace::new(sp, FiniteIdeal::principal(2, 0).unwrap()).unwrap();
        assert_eq!(fis.interior(&1), 1);
        assert_eq!(fis.ideal_interior(&1), 0);
        assert!(fis.is_ideal_compact());
    }
}
