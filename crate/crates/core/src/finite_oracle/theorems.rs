//! Exhaustive checking of statements over every finite model up to a size.
//!
//! A statement is a check that returns `None` on an instance where it holds
//! and `Some((lhs, rhs))` describing the failure otherwise. Theorems must
//! never fail; claims are statements that fail in general and the search
//! reports the first failing instance.

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use super::brute::BfTable;
use super::functions::{
    all_maps, inverse, is_bijection, is_compact, is_continuous, is_homeomorphism, is_ideal_compact,
    is_ideal_continuous, is_ideal_homeomorphism, is_ideal_open_map, is_onto,
};
use super::space::{enumerate_ideals, enumerate_topologies, members, FiniteIdeal, FiniteSpace, Subset};
use crate::Error;

pub const MAX_SET_N: usize = 4;
pub const MAX_MAP_N: usize = 3;
const KEEP: usize = 10;

type Fail = Option<(String, String)>;

pub fn fmt_set(s: Subset) -> String {
    let inner: Vec<String> = members(s).iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn sub(a: Subset, b: Subset) -> Fail {
    (a & !b != 0).then(|| (fmt_set(a), fmt_set(b)))
}

fn eq(a: Subset, b: Subset) -> Fail {
    (a != b).then(|| (fmt_set(a), fmt_set(b)))
}

fn imp(p: bool, q: bool) -> Fail {
    (p && !q).then(|| ("premise holds".to_string(), "conclusion fails".to_string()))
}

fn iff(p: bool, q: bool) -> Fail {
    (p != q).then(|| (p.to_string(), q.to_string()))
}

fn all(fails: impl IntoIterator<Item = Fail>) -> Fail {
    fails.into_iter().flatten().next()
}

/// A model with its operator table and cached compactness flags.
pub struct Model {
    pub space: FiniteSpace,
    pub ideal: FiniteIdeal,
    pub table: BfTable,
    /// Only computed for spaces small enough for map-level statements.
    pub icompact: Option<bool>,
}

impl Model {
    fn icompact(&self) -> bool {
        self.icompact.expect("compactness is cached for n <= 3")
    }
}

/// Tables for every (topology, ideal) on `n` points: `[space][generator]`.
fn models(n: usize) -> &'static [Vec<Model>] {
    static CACHE: [OnceLock<Vec<Vec<Model>>>; 5] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    CACHE[n - 1].get_or_init(|| {
        let spaces = enumerate_topologies(n).expect("n checked by caller");
        let ideals = enumerate_ideals(n).expect("n checked by caller");
        spaces
            .into_par_iter()
            .map(|space| {
                ideals
                    .iter()
                    .map(|ideal| {
                        let table = BfTable::build(&space, ideal);
                        let icompact = (n <= MAX_MAP_N).then(|| is_ideal_compact(&table));
                        Model { space: space.clone(), ideal: *ideal, table, icompact }
                    })
                    .collect()
            })
            .collect()
    })
}

pub struct MapInstance<'a> {
    pub f: &'a [usize],
    pub x: &'a Model,
    /// Same space as `x` with a larger ideal (or `x` itself).
    pub xj: &'a Model,
    pub y: &'a Model,
    pub yj: &'a Model,
}

#[derive(Clone, Copy)]
pub enum Kind {
    Set1(fn(&BfTable, Subset) -> Fail),
    Set2(fn(&BfTable, Subset, Subset) -> Fail),
    /// Two ideals `I ⊆ J` on the same space.
    SetRefine(fn(&BfTable, &BfTable, Subset) -> Fail),
    Space {
        refine: bool,
        check: fn(&Model, &Model) -> Fail,
    },
    Map {
        refine_x: bool,
        refine_y: bool,
        check: fn(&MapInstance) -> Fail,
    },
}

impl Kind {
    pub fn is_map_level(&self) -> bool {
        matches!(self, Kind::Space { .. } | Kind::Map { .. })
    }
}

#[derive(Clone, Copy)]
pub struct Statement {
    pub id: &'static str,
    pub text: &'static str,
    pub kind: Kind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ModelDesc {
    pub n: usize,
    pub opens: Vec<Vec<usize>>,
    pub ideal: Vec<Vec<usize>>,
}

impl ModelDesc {
    fn of(m: &Model) -> Self {
        ModelDesc { n: m.space.n(), opens: m.space.opens_as_lists(), ideal: m.ideal.members_as_lists() }
    }
}

/// One concrete instance: a space with one or two ideals, optionally a
/// second space and a map, and the subsets involved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Instance {
    pub space: ModelDesc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub finer_ideal: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub codomain: Option<ModelDesc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub codomain_finer_ideal: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<usize>>,
    pub sets: Vec<Vec<usize>>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TheoremReport {
    pub theorem_id: String,
    pub statement: String,
    pub max_n: usize,
    pub instances_checked: u64,
    pub counterexamples: Vec<Instance>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Witness {
    pub claim_id: String,
    pub statement: String,
    pub instance: Instance,
}

fn base(m: &Model, sets: Vec<Subset>, (lhs, rhs): (String, String)) -> Instance {
    Instance {
        space: ModelDesc::of(m),
        finer_ideal: None,
        codomain: None,
        codomain_finer_ideal: None,
        map: None,
        sets: sets.into_iter().map(members).collect(),
        lhs,
        rhs,
    }
}

/// Pairs of ideal generators `(i, j)`; with `refine`, all `i ⊆ j`, else `i == j`.
fn ideal_pairs(n: usize, refine: bool) -> impl Iterator<Item = (usize, usize)> {
    let top = 1usize << n;
    (0..top)
        .flat_map(move |i| (0..top).filter(move |&j| if refine { i & !j == 0 } else { i == j }).map(move |j| (i, j)))
}

/// Walks every instance of `kind` whose first space is `models(n)[xi]`, in
/// lexicographic order. `sink` returns `false` to stop. Returns the count.
fn walk(kind: Kind, n: usize, xi: usize, max_n: usize, sink: &mut dyn FnMut(Instance) -> bool) -> u64 {
    let row = &models(n)[xi];
    let full = row[0].table.x;
    let mut count = 0u64;
    match kind {
        Kind::Set1(f) => {
            for m in row {
                for k in 0..=full {
                    count += 1;
                    if let Some(fail) = f(&m.table, k) {
                        if !sink(base(m, vec![k], fail)) {
                            return count;
                        }
                    }
                }
            }
        }
        Kind::Set2(f) => {
            for m in row {
                for k in 0..=full {
                    for h in 0..=full {
                        count += 1;
                        if let Some(fail) = f(&m.table, k, h) {
                            if !sink(base(m, vec![k, h], fail)) {
                                return count;
                            }
                        }
                    }
                }
            }
        }
        Kind::SetRefine(f) => {
            for (i, j) in ideal_pairs(n, true) {
                for k in 0..=full {
                    count += 1;
                    if let Some(fail) = f(&row[i].table, &row[j].table, k) {
                        let mut inst = base(&row[i], vec![k], fail);
                        inst.finer_ideal = Some(row[j].ideal.members_as_lists());
                        if !sink(inst) {
                            return count;
                        }
                    }
                }
            }
        }
        Kind::Space { refine, check } => {
            for (i, j) in ideal_pairs(n, refine) {
                count += 1;
                if let Some(fail) = check(&row[i], &row[j]) {
                    let mut inst = base(&row[i], vec![], fail);
                    if refine {
                        inst.finer_ideal = Some(row[j].ideal.members_as_lists());
                    }
                    if !sink(inst) {
                        return count;
                    }
                }
            }
        }
        Kind::Map { refine_x, refine_y, check } => {
            for (i, j) in ideal_pairs(n, refine_x) {
                for n2 in 1..=max_n {
                    for yrow in models(n2) {
                        for (i2, j2) in ideal_pairs(n2, refine_y) {
                            for f in all_maps(n, n2) {
                                count += 1;
                                let inst = MapInstance { f: &f, x: &row[i], xj: &row[j], y: &yrow[i2], yj: &yrow[j2] };
                                if let Some(fail) = check(&inst) {
                                    let mut out = base(&row[i], vec![], fail);
                                    out.finer_ideal = refine_x.then(|| row[j].ideal.members_as_lists());
                                    out.codomain = Some(ModelDesc::of(&yrow[i2]));
                                    out.codomain_finer_ideal = refine_y.then(|| yrow[j2].ideal.members_as_lists());
                                    out.map = Some(f.clone());
                                    if !sink(out) {
                                        return count;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    count
}

fn effective_max(kind: Kind, max_n: usize) -> Result<usize, Error> {
    if max_n == 0 || max_n > MAX_SET_N {
        return Err(Error::OutOfRange(format!("max n {max_n} outside 1..={MAX_SET_N}")));
    }
    Ok(if kind.is_map_level() { max_n.min(MAX_MAP_N) } else { max_n })
}

pub fn theorem(id: &str) -> Result<&'static Statement, Error> {
    THEOREMS.iter().find(|s| s.id == id).ok_or_else(|| Error::UnknownTheorem(id.to_string()))
}

pub fn claim(id: &str) -> Result<&'static Claim, Error> {
    CLAIMS.iter().find(|c| c.statement.id == id).ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

/// Checks one registered theorem on every instance up to `max_n` points.
/// Map-level theorems stop at three points.
pub fn check_theorem(id: &str, max_n: usize) -> Result<TheoremReport, Error> {
    let st = theorem(id)?;
    let top = effective_max(st.kind, max_n)?;
    let mut instances = 0u64;
    let mut counterexamples = Vec::new();
    for n in 1..=top {
        let parts: Vec<(u64, Vec<Instance>)> = (0..models(n).len())
            .into_par_iter()
            .map(|xi| {
                let mut found = Vec::new();
                let c = walk(st.kind, n, xi, top, &mut |inst| {
                    if found.len() < KEEP {
                        found.push(inst);
                    }
                    true
                });
                (c, found)
            })
            .collect();
        for (c, found) in parts {
            instances += c;
            counterexamples.extend(found);
        }
    }
    counterexamples.truncate(KEEP);
    Ok(TheoremReport {
        theorem_id: st.id.to_string(),
        statement: st.text.to_string(),
        max_n: top,
        instances_checked: instances,
        passed: counterexamples.is_empty(),
        counterexamples,
    })
}

pub fn check_all(max_n: usize) -> Result<Vec<TheoremReport>, Error> {
    THEOREMS.iter().map(|t| check_theorem(t.id, max_n)).collect()
}

/// First instance, in lexicographic order, on which the claim fails.
pub fn search_counterexample(id: &str, max_n: usize) -> Result<Option<Witness>, Error> {
    let c = claim(id)?;
    let top = effective_max(c.statement.kind, max_n)?;
    for n in 1..=top {
        for xi in 0..models(n).len() {
            let mut hit = None;
            walk(c.statement.kind, n, xi, top, &mut |inst| {
                hit = Some(inst);
                false
            });
            if let Some(instance) = hit {
                return Ok(Some(Witness {
                    claim_id: c.statement.id.to_string(),
                    statement: c.statement.text.to_string(),
                    instance,
                }));
            }
        }
    }
    Ok(None)
}

macro_rules! set1 {
    ($id:expr, $text:expr, |$t:ident, $k:ident| $body:expr) => {
        Statement { id: $id, text: $text, kind: Kind::Set1(|$t, $k| $body) }
    };
}

macro_rules! set2 {
    ($id:expr, $text:expr, |$t:ident, $k:ident, $h:ident| $body:expr) => {
        Statement { id: $id, text: $text, kind: Kind::Set2(|$t, $k, $h| $body) }
    };
}

fn map_hyp(m: &MapInstance, x: &Model, y: &Model) -> bool {
    is_ideal_continuous(m.f, &x.table, &y.table)
        && is_ideal_open_map(m.f, &x.table, &y.table)
        && is_onto(m.f, y.table.n)
}

/// On a finite space every cover is finite, so the Lindelöf and countably
/// compact variants coincide with compactness.
fn ideal_lindelof(m: &Model) -> bool {
    m.icompact()
}

pub static THEOREMS: &[Statement] = &[
    set1!("thm-implications", "I-open ⇒ open and I-closed ⇒ closed", |t, k| all([
        imp(t.is_iopen(k), t.is_open(k)),
        imp(t.is_iclosed(k), t.is_closed(k)),
    ])),
    Statement {
        id: "thm-refine-open",
        text: "for I ⊆ J, I-open ⇒ J-open",
        kind: Kind::SetRefine(|i, j, k| imp(i.is_iopen(k), j.is_iopen(k))),
    },
    Statement {
        id: "thm-refine-closed",
        text: "for I ⊆ J, I-closed ⇒ J-closed",
        kind: Kind::SetRefine(|i, j, k| imp(i.is_iclosed(k), j.is_iclosed(k))),
    },
    set1!("thm-complement", "K is I-open iff X∖K is I-closed", |t, k| all([
        iff(t.is_iopen(k), t.is_iclosed(t.compl(k))),
        iff(t.is_iclosed(k), t.is_iopen(t.compl(k))),
    ])),
    set2!("thm-union", "the union of two I-open sets is I-open", |t, k, h| imp(
        t.is_iopen(k) && t.is_iopen(h),
        t.is_iopen(k | h)
    )),
    set2!("cor-intersection", "the intersection of two I-closed sets is I-closed", |t, k, h| imp(
        t.is_iclosed(k) && t.is_iclosed(h),
        t.is_iclosed(k & h)
    )),
    set1!("thm-int-cl-chain", "intI(K) ⊆ int(K) ⊆ K ⊆ cl(K) ⊆ clI(K)", |t, k| all([
        sub(t.int_i(k), t.int(k)),
        sub(t.int(k), k),
        sub(k, t.cl(k)),
        sub(t.cl(k), t.cl_i(k)),
    ])),
    set1!("thm-d-i", "D(K) ⊆ DI(K)", |t, k| sub(t.d(k), t.d_i(k))),
    set2!("thm-d-ii", "K ⊆ H ⇒ DI(K) ⊆ DI(H)", |t, k, h| if k & !h == 0 { sub(t.d_i(k), t.d_i(h)) } else { None }),
    set2!("thm-d-iii", "DI(K) ∪ DI(H) = DI(K∪H) and DI(K∩H) ⊆ DI(K) ∩ DI(H)", |t, k, h| all([
        eq(t.d_i(k) | t.d_i(h), t.d_i(k | h)),
        sub(t.d_i(k & h), t.d_i(k) & t.d_i(h)),
    ])),
    set1!("thm-int-i", "intI(X) = X", |t, _k| eq(t.int_i(t.x), t.x)),
    set1!("thm-int-ii", "intI(K) ⊆ K", |t, k| sub(t.int_i(k), k)),
    set2!("thm-int-iii", "K ⊆ H ⇒ intI(K) ⊆ intI(H)", |t, k, h| if k & !h == 0 {
        sub(t.int_i(k), t.int_i(h))
    } else {
        None
    }),
    set1!("thm-int-iv", "intI(intI(K)) = intI(K)", |t, k| eq(t.int_i(t.int_i(k)), t.int_i(k))),
    set2!("thm-int-v", "intI(K∩H) = intI(K) ∩ intI(H)", |t, k, h| eq(t.int_i(k & h), t.int_i(k) & t.int_i(h))),
    set2!("thm-int-vi", "intI(K) ∪ intI(H) ⊆ intI(K∪H)", |t, k, h| sub(t.int_i(k) | t.int_i(h), t.int_i(k | h))),
    set1!("thm-cl-i", "clI(∅) = ∅", |t, _k| eq(t.cl_i(0), 0)),
    set1!("thm-cl-ii", "K ⊆ clI(K)", |t, k| sub(k, t.cl_i(k))),
    set2!("thm-cl-iii", "K ⊆ H ⇒ clI(K) ⊆ clI(H)", |t, k, h| if k & !h == 0 { sub(t.cl_i(k), t.cl_i(h)) } else { None }),
    set2!("thm-cl-iv", "clI(K∪H) = clI(K) ∪ clI(H)", |t, k, h| eq(t.cl_i(k | h), t.cl_i(k) | t.cl_i(h))),
    set1!("thm-cl-v", "clI(clI(K)) = clI(K)", |t, k| eq(t.cl_i(t.cl_i(k)), t.cl_i(k))),
    set1!("thm-int-cl-duality", "intI(K) = X∖clI(X∖K) and clI(K) = X∖intI(X∖K)", |t, k| all([
        eq(t.int_i(k), t.compl(t.cl_i(t.compl(k)))),
        eq(t.cl_i(k), t.compl(t.int_i(t.compl(k)))),
    ])),
    set1!("thm-bd-i", "Bd(K) ⊆ BdI(K)", |t, k| sub(t.bd(k), t.bd_i(k))),
    set1!("thm-bd-ii", "K = intI(K) ∪ BdI(K)", |t, k| eq(k, t.int_i(k) | t.bd_i(k))),
    set1!("thm-bd-iii", "intI(K) ∩ BdI(K) = ∅", |t, k| eq(t.int_i(k) & t.bd_i(k), 0)),
    set1!("thm-bd-iv", "K is I-open iff BdI(K) = ∅", |t, k| iff(t.is_iopen(k), t.bd_i(k) == 0)),
    set1!("thm-bd-v", "intI(BdI(K)) = ∅", |t, k| eq(t.int_i(t.bd_i(k)), 0)),
    set1!("thm-bd-vi", "BdI(BdI(K)) = BdI(K)", |t, k| eq(t.bd_i(t.bd_i(k)), t.bd_i(k))),
    set1!("thm-bd-vii", "BdI(K) = K ∩ clI(X∖K)", |t, k| eq(t.bd_i(k), k & t.cl_i(t.compl(k)))),
    set1!("thm-fr-i", "Fr(K) ⊆ FrI(K)", |t, k| sub(t.fr(k), t.fr_i(k))),
    set1!("thm-fr-ii", "clI(K) = intI(K) ∪ FrI(K)", |t, k| eq(t.cl_i(k), t.int_i(k) | t.fr_i(k))),
    set1!("thm-fr-iii", "intI(K) ∩ FrI(K) = ∅", |t, k| eq(t.int_i(k) & t.fr_i(k), 0)),
    set1!("thm-fr-iv", "BdI(K) ⊆ FrI(K)", |t, k| sub(t.bd_i(k), t.fr_i(k))),
    set1!("thm-fr-v", "FrI(K) = clI(K) ∩ clI(X∖K)", |t, k| eq(t.fr_i(k), t.cl_i(k) & t.cl_i(t.compl(k)))),
    set1!("thm-fr-vi", "FrI(K) = FrI(X∖K)", |t, k| eq(t.fr_i(k), t.fr_i(t.compl(k)))),
    set1!("thm-fr-viii", "intI(K) = K∖FrI(K)", |t, k| eq(t.int_i(k), k & !t.fr_i(k))),
    set1!("thm-ext-i", "ExtI(K) ⊆ Ext(K)", |t, k| sub(t.ext_i(k), t.ext(k))),
    set1!("thm-ext-ii", "ExtI(K) is open", |t, k| imp(true, t.is_open(t.ext_i(k)))),
    set1!("thm-ext-iii", "ExtI(K) = X∖clI(K)", |t, k| eq(t.ext_i(k), t.compl(t.cl_i(k)))),
    set1!("thm-ext-iv", "ExtI(ExtI(K)) = intI(clI(K))", |t, k| eq(t.ext_i(t.ext_i(k)), t.int_i(t.cl_i(k)))),
    set2!("thm-ext-v", "K ⊆ H ⇒ ExtI(H) ⊆ ExtI(K)", |t, k, h| if k & !h == 0 { sub(t.ext_i(h), t.ext_i(k)) } else { None }),
    set1!("thm-ext-vi", "ExtI(X∖ExtI(K)) = ExtI(K)", |t, k| eq(t.ext_i(t.compl(t.ext_i(k))), t.ext_i(k))),
    set1!("thm-ext-vii", "intI(K) ⊆ ExtI(ExtI(K))", |t, k| sub(t.int_i(k), t.ext_i(t.ext_i(k)))),
    set2!("thm-ext-viii", "ExtI(K∪H) ⊆ ExtI(K) ∪ ExtI(H)", |t, k, h| sub(t.ext_i(k | h), t.ext_i(k) | t.ext_i(h))),
    set2!("thm-ext-ix", "ExtI(K) ∩ ExtI(H) ⊆ ExtI(K∩H)", |t, k, h| sub(t.ext_i(k) & t.ext_i(h), t.ext_i(k & h))),
    set1!("thm-ext-x", "X = intI(K) ∪ ExtI(K) ∪ FrI(K)", |t, k| eq(t.int_i(k) | t.ext_i(k) | t.fr_i(k), t.x)),
    Statement {
        id: "thm-compact",
        text: "I-compact ⇒ compact (and the Lindelöf, countably compact variants)",
        kind: Kind::Space { refine: false, check: |m, _| imp(m.icompact(), is_compact(&m.table)) },
    },
    Statement {
        id: "thm-refine-compact",
        text: "for I ⊆ J, I-compact ⇒ J-compact",
        kind: Kind::Space { refine: true, check: |i, j| imp(i.icompact(), j.icompact()) },
    },
    Statement {
        id: "thm-cont",
        text: "an I-continuous map is continuous",
        kind: Kind::Map {
            refine_x: false,
            refine_y: false,
            check: |m| imp(is_ideal_continuous(m.f, &m.x.table, &m.y.table), is_continuous(m.f, &m.x.table, &m.y.table)),
        },
    },
    Statement {
        id: "thm-refine-cont",
        text: "for I ⊆ J on the domain, I-continuous ⇒ J-continuous",
        kind: Kind::Map {
            refine_x: true,
            refine_y: false,
            check: |m| {
                imp(is_ideal_continuous(m.f, &m.x.table, &m.y.table), is_ideal_continuous(m.f, &m.xj.table, &m.y.table))
            },
        },
    },
    Statement {
        id: "thm-compact-image",
        text: "an I-continuous, I-open, onto image of an I-compact space is I-compact",
        kind: Kind::Map { refine_x: false, refine_y: false, check: |m| imp(map_hyp(m, m.x, m.y) && m.x.icompact(), m.y.icompact()) },
    },
    Statement {
        id: "thm-lindelof-image",
        text: "an I-continuous, I-open, onto image of an I-Lindelöf (I-countably compact) space is I-Lindelöf (I-countably compact)",
        kind: Kind::Map {
            refine_x: false,
            refine_y: false,
            check: |m| imp(map_hyp(m, m.x, m.y) && ideal_lindelof(m.x), ideal_lindelof(m.y)),
        },
    },
    Statement {
        id: "thm-cont-compact-image",
        text: "an I-continuous onto image of an I-compact (I-Lindelöf) space is compact (Lindelöf)",
        kind: Kind::Map {
            refine_x: false,
            refine_y: false,
            check: |m| {
                imp(
                    is_ideal_continuous(m.f, &m.x.table, &m.y.table) && m.x.icompact(),
                    is_compact(&m.y.table),
                )
            },
        },
    },
    Statement {
        id: "thm-refine-compact-image",
        text: "for I ⊆ J on the codomain, an I-continuous, I-open, onto image of an I-compact (I-Lindelöf) space is J-compact (J-Lindelöf)",
        kind: Kind::Map {
            refine_x: false,
            refine_y: true,
            check: |m| imp(map_hyp(m, m.x, m.y) && m.x.icompact(), m.yj.icompact() && ideal_lindelof(m.yj)),
        },
    },
    Statement {
        id: "thm-homeomorphism",
        text: "h is an I-homeomorphism iff its inverse is, and every I-homeomorphism is a homeomorphism",
        kind: Kind::Map {
            refine_x: false,
            refine_y: false,
            check: |m| {
                if !is_bijection(m.f, m.y.table.n) {
                    return None;
                }
                let fwd = is_ideal_homeomorphism(m.f, &m.x.table, &m.y.table);
                all([
                    iff(fwd, is_ideal_homeomorphism(&inverse(m.f), &m.y.table, &m.x.table)),
                    imp(fwd, is_homeomorphism(m.f, &m.x.table, &m.y.table)),
                ])
            },
        },
    },
];

pub struct Claim {
    pub statement: Statement,
    /// Whether a finite witness is expected to exist.
    pub refutable: bool,
}

macro_rules! claim {
    ($st:expr) => {
        Claim { statement: $st, refutable: true }
    };
}

pub static CLAIMS: &[Claim] = &[
    claim!(set1!("open-implies-iopen", "open ⇒ I-open", |t, k| imp(t.is_open(k), t.is_iopen(k)))),
    claim!(set1!("closed-implies-iclosed", "closed ⇒ I-closed", |t, k| imp(t.is_closed(k), t.is_iclosed(k)))),
    claim!(Statement {
        id: "coarse-open-implies-fine-open",
        text: "for I ⊆ J, J-open ⇒ I-open",
        kind: Kind::SetRefine(|i, j, k| imp(j.is_iopen(k), i.is_iopen(k))),
    }),
    claim!(Statement {
        id: "coarse-closed-implies-fine-closed",
        text: "for I ⊆ J, J-closed ⇒ I-closed",
        kind: Kind::SetRefine(|i, j, k| imp(j.is_iclosed(k), i.is_iclosed(k))),
    }),
    claim!(set1!("int-sub-intI", "int(K) ⊆ intI(K)", |t, k| sub(t.int(k), t.int_i(k)))),
    claim!(set1!("clI-sub-cl", "clI(K) ⊆ cl(K)", |t, k| sub(t.cl_i(k), t.cl(k)))),
    claim!(set1!("DI-sub-D", "DI(K) ⊆ D(K)", |t, k| sub(t.d_i(k), t.d(k)))),
    claim!(set2!("DI-meet-sub", "DI(K) ∩ DI(H) ⊆ DI(K∩H)", |t, k, h| sub(t.d_i(k) & t.d_i(h), t.d_i(k & h)))),
    claim!(set2!("intI-union-sub", "intI(K∪H) ⊆ intI(K) ∪ intI(H)", |t, k, h| sub(
        t.int_i(k | h),
        t.int_i(k) | t.int_i(h)
    ))),
    claim!(set1!("BdI-sub-Bd", "BdI(K) ⊆ Bd(K)", |t, k| sub(t.bd_i(k), t.bd(k)))),
    claim!(set1!("FrI-sub-Fr", "FrI(K) ⊆ Fr(K)", |t, k| sub(t.fr_i(k), t.fr(k)))),
    claim!(set1!("FrI-sub-BdI", "FrI(K) ⊆ BdI(K)", |t, k| sub(t.fr_i(k), t.bd_i(k)))),
    claim!(set1!("Ext-sub-ExtI", "Ext(K) ⊆ ExtI(K)", |t, k| sub(t.ext(k), t.ext_i(k)))),
    claim!(set2!("ExtI-union-sup", "ExtI(K) ∪ ExtI(H) ⊆ ExtI(K∪H)", |t, k, h| sub(
        t.ext_i(k) | t.ext_i(h),
        t.ext_i(k | h)
    ))),
    claim!(set2!("ExtI-meet-sub", "ExtI(K∩H) ⊆ ExtI(K) ∩ ExtI(H)", |t, k, h| sub(
        t.ext_i(k & h),
        t.ext_i(k) & t.ext_i(h)
    ))),
    claim!(set1!("iopen-implies-open-domain", "I-open ⇒ int(cl(K)) = K", |t, k| imp(
        t.is_iopen(k),
        t.int(t.cl(k)) == k
    ))),
    claim!(set1!("iclosed-implies-closed-domain", "I-closed ⇒ cl(int(K)) = K", |t, k| imp(
        t.is_iclosed(k),
        t.cl(t.int(k)) == k
    ))),
    claim!(set1!("open-domain-implies-iopen", "int(cl(K)) = K ⇒ I-open", |t, k| imp(
        t.int(t.cl(k)) == k,
        t.is_iopen(k)
    ))),
    claim!(set1!("closed-domain-implies-iclosed", "cl(int(K)) = K ⇒ I-closed", |t, k| imp(
        t.cl(t.int(k)) == k,
        t.is_iclosed(k)
    ))),
    claim!(Statement {
        id: "cont-implies-icont",
        text: "continuous ⇒ I-continuous",
        kind: Kind::Map {
            refine_x: false,
            refine_y: false,
            check: |m| imp(
                is_continuous(m.f, &m.x.table, &m.y.table),
                is_ideal_continuous(m.f, &m.x.table, &m.y.table)
            ),
        },
    }),
    claim!(Statement {
        id: "coarse-cont-implies-fine-cont",
        text: "for I ⊆ J on the domain, J-continuous ⇒ I-continuous",
        kind: Kind::Map {
            refine_x: true,
            refine_y: false,
            check: |m| {
                imp(is_ideal_continuous(m.f, &m.xj.table, &m.y.table), is_ideal_continuous(m.f, &m.x.table, &m.y.table))
            },
        },
    }),
    claim!(Statement {
        id: "compact-implies-icompact",
        text: "compact ⇒ I-compact",
        kind: Kind::Space { refine: false, check: |m, _| imp(is_compact(&m.table), m.icompact()) },
    }),
    claim!(Statement {
        id: "coarse-compact-implies-fine-compact",
        text: "for I ⊆ J, J-compact ⇒ I-compact",
        kind: Kind::Space { refine: true, check: |i, j| imp(j.icompact(), i.icompact()) },
    }),
    Claim {
        statement: set1!("iopen-implies-open", "I-open ⇒ open", |t, k| imp(t.is_iopen(k), t.is_open(k))),
        refutable: false,
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = THEOREMS.iter().map(|t| t.id).chain(CLAIMS.iter().map(|c| c.statement.id)).collect();
        let total = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), total);
    }

    #[test]
    fn unknown_ids() {
        assert_eq!(check_theorem("thm-nope", 2).unwrap_err(), Error::UnknownTheorem("thm-nope".into()));
        assert!(search_counterexample("nope", 2).is_err());
        assert!(check_theorem("thm-union", 5).is_err());
    }

    #[test]
    fn int_claim_witness_is_sierpinski() {
        let w = search_counterexample("int-sub-intI", 3).unwrap().unwrap();
        assert_eq!(w.instance.space.n, 2);
        assert_eq!(w.instance.space.opens, vec![vec![], vec![0], vec![0, 1]]);
        assert_eq!(w.instance.space.ideal, vec![Vec::<usize>::new()]);
        assert_eq!(w.instance.sets, vec![vec![0]]);
    }

    #[test]
    fn no_witness_for_definitional_claim() {
        assert_eq!(search_counterexample("iopen-implies-open", 3).unwrap(), None);
    }

    #[test]
    fn counts_are_stable() {
        let a = check_theorem("thm-int-cl-duality", 3).unwrap();
        let b = check_theorem("thm-int-cl-duality", 3).unwrap();
        assert!(a.passed);
        assert_eq!(a, b);
        // (1·2 + 4·4 + 29·8) ideals × subsets
        assert_eq!(a.instances_checked, 2 * 2 + 4 * 4 * 4 + 29 * 8 * 8);
    }
}
