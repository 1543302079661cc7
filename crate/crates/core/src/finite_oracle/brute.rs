//! Operators evaluated straight from their defining equations by enumerating
//! every subset of the universe. Nothing here uses neighbourhoods or duality.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::space::{full, FiniteIdeal, FiniteSpace, Subset};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Operator {
    Int,
    Cl,
    D,
    Fr,
    Bd,
    Ext,
    IntI,
    ClI,
    DI,
    BdI,
    FrI,
    ExtI,
    IsOpen,
    IsClosed,
    IsIopen,
    IsIclosed,
}

impl Operator {
    pub const ALL: [Operator; 16] = [
        Operator::Int,
        Operator::Cl,
        Operator::D,
        Operator::Fr,
        Operator::Bd,
        Operator::Ext,
        Operator::IntI,
        Operator::ClI,
        Operator::DI,
        Operator::BdI,
        Operator::FrI,
        Operator::ExtI,
        Operator::IsOpen,
        Operator::IsClosed,
        Operator::IsIopen,
        Operator::IsIclosed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Operator::Int => "int",
            Operator::Cl => "cl",
            Operator::D => "D",
            Operator::Fr => "fr",
            Operator::Bd => "bd",
            Operator::Ext => "ext",
            Operator::IntI => "intI",
            Operator::ClI => "clI",
            Operator::DI => "DI",
            Operator::BdI => "BdI",
            Operator::FrI => "FrI",
            Operator::ExtI => "ExtI",
            Operator::IsOpen => "isOpen",
            Operator::IsClosed => "isClosed",
            Operator::IsIopen => "isIopen",
            Operator::IsIclosed => "isIclosed",
        }
    }

    pub fn is_flag(self) -> bool {
        matches!(self, Operator::IsOpen | Operator::IsClosed | Operator::IsIopen | Operator::IsIclosed)
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Operator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Operator::ALL.into_iter().find(|op| op.name() == s).ok_or_else(|| Error::UnknownOperator(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum BfValue {
    Set(Subset),
    Flag(bool),
}

/// Every operator tabulated over every subset of one (space, ideal) pair.
#[derive(Clone, Debug)]
pub struct BfTable {
    pub n: usize,
    pub x: Subset,
    pub int: Vec<Subset>,
    pub cl: Vec<Subset>,
    pub d: Vec<Subset>,
    pub int_i: Vec<Subset>,
    pub cl_i: Vec<Subset>,
    pub d_i: Vec<Subset>,
    pub open: Vec<bool>,
    pub closed: Vec<bool>,
    pub iopen: Vec<bool>,
    pub iclosed: Vec<bool>,
    /// Small sets, indexed by subset.
    pub small: Vec<bool>,
}

fn subsets(x: Subset) -> impl Iterator<Item = Subset> + Clone {
    0..=x
}

impl BfTable {
    pub fn build(space: &FiniteSpace, ideal: &FiniteIdeal) -> Self {
        let n = space.n();
        let x = full(n);
        let all = || subsets(x);
        let open: Vec<bool> = all().map(|s| space.is_open_set(s)).collect();
        let closed: Vec<bool> = all().map(|s| open[(x & !s) as usize]).collect();
        // interior: union of open subsets; closure: intersection of closed supersets
        let int: Vec<Subset> =
            all().map(|s| all().filter(|&u| open[u as usize] && u & !s == 0).fold(0, |a, u| a | u)).collect();
        let cl: Vec<Subset> =
            all().map(|s| all().filter(|&f| closed[f as usize] && s & !f == 0).fold(x, |a, f| a & f)).collect();
        let small: Vec<bool> = all().map(|s| ideal.contains(s)).collect();
        let iopen: Vec<bool> = all().map(|a| open[a as usize] && small[(cl[a as usize] & !a) as usize]).collect();
        let iclosed: Vec<bool> = all().map(|a| closed[a as usize] && small[(a & !int[a as usize]) as usize]).collect();
        let int_i: Vec<Subset> =
            all().map(|s| all().filter(|&u| iopen[u as usize] && u & !s == 0).fold(0, |a, u| a | u)).collect();
        let cl_i: Vec<Subset> =
            all().map(|s| all().filter(|&f| iclosed[f as usize] && s & !f == 0).fold(x, |a, f| a & f)).collect();
        let limit = |s: Subset, fam: &[bool]| -> Subset {
            (0..n)
                .filter(|&p| all().filter(|&u| fam[u as usize] && u & (1 << p) != 0).all(|u| u & s & !(1 << p) != 0))
                .fold(0, |a, p| a | (1 << p))
        };
        let d: Vec<Subset> = all().map(|s| limit(s, &open)).collect();
        let d_i: Vec<Subset> = all().map(|s| limit(s, &iopen)).collect();
        BfTable { n, x, int, cl, d, int_i, cl_i, d_i, open, closed, iopen, iclosed, small }
    }

    pub fn int(&self, s: Subset) -> Subset {
        self.int[s as usize]
    }
    pub fn cl(&self, s: Subset) -> Subset {
        self.cl[s as usize]
    }
    pub fn d(&self, s: Subset) -> Subset {
        self.d[s as usize]
    }
    pub fn fr(&self, s: Subset) -> Subset {
        self.cl(s) & !self.int(s)
    }
    pub fn bd(&self, s: Subset) -> Subset {
        s & !self.int(s)
    }
    pub fn ext(&self, s: Subset) -> Subset {
        self.int(self.x & !s)
    }
    pub fn int_i(&self, s: Subset) -> Subset {
        self.int_i[s as usize]
    }
    pub fn cl_i(&self, s: Subset) -> Subset {
        self.cl_i[s as usize]
    }
    pub fn d_i(&self, s: Subset) -> Subset {
        self.d_i[s as usize]
    }
    pub fn bd_i(&self, s: Subset) -> Subset {
        s & !self.int_i(s)
    }
    pub fn fr_i(&self, s: Subset) -> Subset {
        self.cl_i(s) & !self.int_i(s)
    }
    pub fn ext_i(&self, s: Subset) -> Subset {
        self.int_i(self.x & !s)
    }
    pub fn is_open(&self, s: Subset) -> bool {
        self.open[s as usize]
    }
    pub fn is_closed(&self, s: Subset) -> bool {
        self.closed[s as usize]
    }
    pub fn is_iopen(&self, s: Subset) -> bool {
        self.iopen[s as usize]
    }
    pub fn is_iclosed(&self, s: Subset) -> bool {
        self.iclosed[s as usize]
    }
    pub fn compl(&self, s: Subset) -> Subset {
        self.x & !s
    }

    pub fn eval(&self, op: Operator, s: Subset) -> BfValue {
        use BfValue::*;
        match op {
            Operator::Int => Set(self.int(s)),
            Operator::Cl => Set(self.cl(s)),
            Operator::D => Set(self.d(s)),
            Operator::Fr => Set(self.fr(s)),
            Operator::Bd => Set(self.bd(s)),
            Operator::Ext => Set(self.ext(s)),
            Operator::IntI => Set(self.int_i(s)),
            Operator::ClI => Set(self.cl_i(s)),
            Operator::DI => Set(self.d_i(s)),
            Operator::BdI => Set(self.bd_i(s)),
            Operator::FrI => Set(self.fr_i(s)),
            Operator::ExtI => Set(self.ext_i(s)),
            Operator::IsOpen => Flag(self.is_open(s)),
            Operator::IsClosed => Flag(self.is_closed(s)),
            Operator::IsIopen => Flag(self.is_iopen(s)),
            Operator::IsIclosed => Flag(self.is_iclosed(s)),
        }
    }
}

/// Evaluates one operator by enumeration. `op` is an operator name such as
/// `"intI"`; every operator takes exactly one subset argument.
pub fn bf_operator(space: &FiniteSpace, ideal: &FiniteIdeal, op: &str, args: &[Subset]) -> Result<BfValue, Error> {
    let op: Operator = op.parse()?;
    if space.n() != ideal.n() {
        return Err(Error::Validation("space and ideal live on different universes".into()));
    }
    let [s] = args else {
        return Err(Error::Validation(format!("{op} takes one argument, got {}", args.len())));
    };
    space.check_subset(*s)?;
    Ok(BfTable::build(space, ideal).eval(op, *s))
}
