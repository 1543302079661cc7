use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};

use ctopo_core::ideal_ops as ideal;
use ctopo_core::topologies as topo;
use ctopo_core::{CardinalityClass, ExtRational, IdealKind, Interval, RealSet, Topology, TopologySpec};
use serde_json::json;

use crate::parser::{parse_expression, Bound, Const, Context, Expr, IdealOp, ParseError, SetFn, TopOp, TopoSel};

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Value {
    Set(RealSet),
    Flag(bool),
    Card(CardinalityClass),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Set(s) => write!(f, "{s}"),
            Value::Flag(b) => write!(f, "{b}"),
            Value::Card(CardinalityClass::Finite(n)) => write!(f, "finite({n})"),
            Value::Card(CardinalityClass::CountablyInfinite) => f.write_str("countably-infinite"),
            Value::Card(CardinalityClass::Uncountable) => f.write_str("uncountable"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    Parse(ParseError),
    Eval(ctopo_core::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "syntax error at {e}"),
            CliError::Eval(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<ctopo_core::Error> for CliError {
    fn from(e: ctopo_core::Error) -> Self {
        CliError::Eval(e)
    }
}

type EResult<T> = Result<T, CliError>;

fn fail<T>(e: ctopo_core::Error) -> EResult<T> {
    Err(CliError::Eval(e))
}

/// Fallbacks for operators written without a full context clause.
#[derive(Clone, Debug, Default)]
pub struct Defaults {
    pub topology: Option<TopoSel>,
    pub ideal: Option<IdealKind>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalResult {
    pub value: Value,
    pub rendered: String,
    /// Intermediate values, innermost first, when tracing is on.
    pub trace: Vec<(String, String)>,
}

impl EvalResult {
    pub fn to_json(&self, src: &str) -> serde_json::Value {
        let (kind, value) = match &self.value {
            Value::Set(_) => ("set", json!(self.rendered)),
            Value::Flag(b) => ("flag", json!(b)),
            Value::Card(c) => ("cardinality", serde_json::to_value(c).unwrap_or(json!(null))),
        };
        let mut out = json!({ "expr": src, "kind": kind, "value": value, "rendered": self.rendered });
        if !self.trace.is_empty() {
            out["trace"] = self.trace.iter().map(|(e, v)| json!({ "expr": e, "value": v })).collect();
        }
        out
    }
}

struct Evaluator<'a> {
    defaults: &'a Defaults,
    trace: Option<Vec<(String, String)>>,
}

fn bound(b: &Bound) -> ExtRational {
    match b {
        Bound::NegInf => ExtRational::NegInf,
        Bound::PosInf => ExtRational::PosInf,
        Bound::Finite(q) => q.clone().into(),
    }
}

impl Evaluator<'_> {
    fn set(&mut self, e: &Expr) -> EResult<RealSet> {
        match self.eval(e)? {
            Value::Set(s) => Ok(s),
            other => fail(ctopo_core::Error::Validation(format!("`{e}` is {other}, not a set"))),
        }
    }

    fn topology(&mut self, ctx: &Context, op: &str) -> EResult<TopologySpec> {
        let sel = ctx.topology.as_ref().or(self.defaults.topology.as_ref()).ok_or_else(|| {
            CliError::Eval(ctopo_core::Error::Validation(format!(
                "`{op}` needs a topology: write {op}[usual](...) or pass --topology"
            )))
        })?;
        let sel = sel.clone();
        self.resolve(&sel)
    }

    fn resolve(&mut self, sel: &TopoSel) -> EResult<TopologySpec> {
        Ok(match sel {
            TopoSel::Usual => TopologySpec::usual(),
            TopoSel::Particular(p) => TopologySpec::particular_point(p.clone()),
            TopoSel::Excluded(e) => {
                let e = self.set(e)?;
                TopologySpec::excluded_set(e)?
            }
            TopoSel::Cocountable => TopologySpec::cocountable(),
            TopoSel::Overlap => TopologySpec::overlapping_interval(),
        })
    }

    fn eval(&mut self, e: &Expr) -> EResult<Value> {
        let v = self.eval_inner(e)?;
        if let Some(t) = &mut self.trace {
            t.push((e.to_string(), v.to_string()));
        }
        Ok(v)
    }

    fn eval_inner(&mut self, e: &Expr) -> EResult<Value> {
        let set = |s: RealSet| Ok(Value::Set(s));
        match e {
            Expr::Const(c) => set(match c {
                Const::Reals => RealSet::reals(),
                Const::Rationals => RealSet::rationals(),
                Const::Irrationals => RealSet::irrationals(),
                Const::Integers => RealSet::integers(),
                Const::Naturals => RealSet::naturals(),
                Const::Empty => RealSet::empty(),
            }),
            Expr::Interval { lo, hi, lo_closed, hi_closed } => {
                let iv = Interval::new(bound(lo), bound(hi), *lo_closed, *hi_closed)?;
                set(RealSet::interval(iv))
            }
            Expr::Points(ps) => set(RealSet::points(ps.iter().cloned())),
            Expr::Prog(a, d) => set(RealSet::progression(a, d, None)?),
            Expr::Set(op, args) => {
                let mut vals = Vec::with_capacity(args.len());
                for a in args {
                    vals.push(self.set(a)?);
                }
                set(match op {
                    SetFn::Union => vals.iter().fold(RealSet::empty(), |acc, s| acc.union(s)),
                    SetFn::Inter => vals.iter().fold(RealSet::reals(), |acc, s| acc.intersect(s)),
                    SetFn::Setminus => vals[0].difference(&vals[1]),
                    SetFn::Compl => vals[0].complement(),
                    SetFn::Qtrace => vals[0].intersect(&RealSet::rationals()),
                    SetFn::Itrace => vals[0].intersect(&RealSet::irrationals()),
                })
            }
            Expr::Top(op, ctx, arg) => {
                let t = self.topology(ctx, &e.to_string())?;
                let s = self.set(arg)?;
                Ok(match op {
                    TopOp::Int => Value::Set(topo::interior(&t, &s)?),
                    TopOp::Cl => Value::Set(topo::closure(&t, &s)?),
                    TopOp::Fr => Value::Set(topo::frontier(&t, &s)?),
                    TopOp::D => Value::Set(topo::derived_set(&t, &s)?),
                    TopOp::Bd => {
                        t.check(&s)?;
                        Value::Set(t.border(&s))
                    }
                    TopOp::Ext => {
                        t.check(&s)?;
                        Value::Set(t.exterior(&s))
                    }
                    TopOp::IsOpen => Value::Flag(topo::classify(&t, &s)?.is_open),
                    TopOp::IsClosed => Value::Flag(topo::classify(&t, &s)?.is_closed),
                })
            }
            Expr::Ideal(op, suffix, ctx, arg) => {
                let t = self.topology(ctx, &e.to_string())?;
                let chosen = ctx.ideal.or(suffix.default_ideal()).or(self.defaults.ideal);
                let i = match (chosen, suffix.default_ideal(), ctx.ideal) {
                    (_, Some(implied), Some(given)) if implied != given => {
                        return fail(ctopo_core::Error::Validation(format!(
                            "`{e}` names the {} ideal but the operator implies {}",
                            given.name(),
                            implied.name()
                        )))
                    }
                    (Some(i), _, _) => i,
                    (None, _, _) => {
                        return fail(ctopo_core::Error::Validation(format!(
                            "`{e}` needs an ideal: add `; countable` or `; finite` to the context or pass --ideal"
                        )))
                    }
                };
                let s = self.set(arg)?;
                Ok(match op {
                    IdealOp::Int => Value::Set(ideal::ideal_interior(&t, i, &s)?),
                    IdealOp::Cl => Value::Set(ideal::ideal_closure(&t, i, &s)?),
                    IdealOp::D => Value::Set(ideal::ideal_derived(&t, i, &s)?),
                    IdealOp::Bd => Value::Set(ideal::ideal_border(&t, i, &s)?),
                    IdealOp::Fr => Value::Set(ideal::ideal_frontier(&t, i, &s)?),
                    IdealOp::Ext => Value::Set(ideal::ideal_exterior(&t, i, &s)?),
                    IdealOp::IsOpen => Value::Flag(ideal::ideal_classify(&t, i, &s)?.is_ideal_open),
                    IdealOp::IsClosed => Value::Flag(ideal::ideal_classify(&t, i, &s)?.is_ideal_closed),
                })
            }
            Expr::Card(a) => Ok(Value::Card(self.set(a)?.cardinality())),
            Expr::Subset(a, b) => {
                let (a, b) = (self.set(a)?, self.set(b)?);
                Ok(Value::Flag(a.is_subset(&b)))
            }
            Expr::Eq(a, b) => {
                let (a, b) = (self.set(a)?, self.set(b)?);
                Ok(Value::Flag(a == b))
            }
        }
    }
}

/// Evaluates an expression. Progression lattices finer than the kernel
/// supports abort deep inside set operations; they surface here as an
/// out-of-range error instead of a panic.
pub fn evaluate_with(e: &Expr, defaults: &Defaults, trace: bool) -> EResult<EvalResult> {
    let run = || {
        let mut ev = Evaluator { defaults, trace: trace.then(Vec::new) };
        let value = ev.eval(e)?;
        Ok(EvalResult { rendered: value.to_string(), value, trace: ev.trace.unwrap_or_default() })
    };
    catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|payload| {
        let msg = payload
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "evaluation aborted".into());
        fail(ctopo_core::Error::OutOfRange(msg))
    })
}

/// Turns a topology selector into a concrete driver.
pub fn resolve_topology(sel: &TopoSel) -> EResult<TopologySpec> {
    let defaults = Defaults::default();
    Evaluator { defaults: &defaults, trace: None }.resolve(sel)
}

pub fn evaluate(e: &Expr) -> EResult<EvalResult> {
    evaluate_with(e, &Defaults::default(), false)
}

/// Parses and evaluates.
pub fn eval_str(src: &str) -> EResult<EvalResult> {
    evaluate(&parse_expression(src)?)
}

/// Parses and evaluates, insisting on a set.
pub fn eval_set(src: &str) -> EResult<RealSet> {
    match eval_str(src)?.value {
        Value::Set(s) => Ok(s),
        other => fail(ctopo_core::Error::Validation(format!("`{src}` is {other}, not a set"))),
    }
}
