//! Batch runners behind `ctopo suite`.

use std::str::FromStr;

use ctopo_core::finite_oracle::{check_all, search_counterexample, CLAIMS};
use ctopo_core::maps_covers::{analyze_cover, builtin_identity_verdict, ContinuityStatus, Cover};
use ctopo_core::{Error, IdealKind, RealSet, TopologySpec};
use serde_json::{json, Value as Json};

use crate::eval::{eval_set, eval_str, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    PaperExamples,
    Theorems,
    Counterexamples,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "paper-examples" => Ok(Suite::PaperExamples),
            "theorems" => Ok(Suite::Theorems),
            "counterexamples" => Ok(Suite::Counterexamples),
            _ => Err(format!("unknown suite `{s}` (expected paper-examples, theorems or counterexamples)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CaseResult {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub cases: Vec<CaseResult>,
    pub json: Json,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| !c.passed).count()
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let tag = if c.passed { "ok  " } else { "FAIL" };
            out.push_str(&format!("{tag} {} {}\n", c.id, c.detail));
        }
        out.push_str(&format!("{}: {} cases, {} failed\n", self.suite, self.cases.len(), self.failures()));
        out
    }
}

/// Expression fixtures: the expression and what it must evaluate to. The
/// expected side is itself an expression unless it is `true` or `false`.
pub const CLASSIFICATION_FIXTURES: &[(&str, &str, &str)] = &[
    ("c-open-not-f-open/1", "isCopen[usual](setminus(R, Z))", "true"),
    ("c-open-not-f-open/2", "isFopen[usual](setminus(R, Z))", "false"),
    ("c-closed-not-f-closed/1", "isCclosed[usual](Z)", "true"),
    ("c-closed-not-f-closed/2", "isFclosed[usual](Z)", "false"),
    ("particular-point/open", "isOpen[particular:1](N)", "true"),
    ("particular-point/not-c-open", "isCopen[particular:1](N)", "false"),
    ("excluded/q-open", "isOpen[excluded:I](Q)", "true"),
    ("excluded/q-not-c-open", "isCopen[excluded:I](Q)", "false"),
    ("excluded/i-closed", "isClosed[excluded:I](I)", "true"),
    ("excluded/i-not-c-closed", "isCclosed[excluded:I](I)", "false"),
    ("open-domain/h", "eq(int[excluded:I](cl[excluded:I](points(1,2,3))), points(1,2,3))", "true"),
    ("open-domain/h-not-c-open", "isCopen[excluded:I](points(1,2,3))", "false"),
    ("closed-domain/k", "eq(cl[excluded:I](int[excluded:I](compl(points(1,2,3)))), compl(points(1,2,3)))", "true"),
    ("closed-domain/k-not-c-closed", "isCclosed[excluded:I](compl(points(1,2,3)))", "false"),
    ("split-interval/c-open", "isCopen[usual](union(interval(2,5,o,o), interval(5,9,o,o)))", "true"),
    ("split-interval/int-cl", "int[usual](cl[usual](union(interval(2,5,o,o), interval(5,9,o,o))))", "interval(2,9,o,o)"),
    ("split-interval/not-open-domain", "eq(int[usual](cl[usual](union(interval(2,5,o,o), interval(5,9,o,o)))), union(interval(2,5,o,o), interval(5,9,o,o)))", "false"),
    ("split-interval/complement-c-closed", "isCclosed[usual](compl(union(interval(2,5,o,o), interval(5,9,o,o))))", "true"),
];

pub const OPERATOR_FIXTURES: &[(&str, &str, &str)] = &[
    ("excluded/cl-q-minus-q", "setminus(cl[excluded:I](Q), Q)", "I"),
    ("int-c/q-union-i", "intC[usual](union(Q, I))", "R"),
    ("cl-c/excluded", "clC[excluded:I](I)", "R"),
    ("d-c/of-meet", "DC[usual](inter(interval(1,2,o,o), interval(2,3,o,o)))", "empty"),
    ("d-c/meet-of", "inter(DC[usual](interval(1,2,o,o)), DC[usual](interval(2,3,o,o)))", "points(2)"),
    ("d/particular", "D[particular:1/2](compl(points(1/2)))", "empty"),
    ("d-c/particular", "DC[particular:1/2](compl(points(1/2)))", "R"),
    ("bd-c/half-open", "BdC[usual](interval(1,2,o,c))", "points(2)"),
    ("fr-c/half-open", "FrC[usual; countable](interval(1,2,o,c))", "points(1,2)"),
    ("ext-c/point", "ExtC[usual](points(2))", "compl(points(2))"),
    ("ext-c/union", "ExtC[usual](union(interval(-inf,2,o,o), interval(0,inf,o,o)))", "empty"),
    ("ext-c/left", "ExtC[usual](interval(-inf,2,o,o))", "interval(2,inf,o,o)"),
    ("ext-c/right", "ExtC[usual](interval(0,inf,o,o))", "interval(-inf,0,o,o)"),
    ("ext-c/meet", "inter(ExtC[usual](interval(-inf,2,o,c)), ExtC[usual](interval(2,inf,c,o)))", "empty"),
    ("ext-c/of-meet", "ExtC[usual](inter(interval(-inf,2,o,c), interval(2,inf,c,o)))", "compl(points(2))"),
    ("c-open/r-minus-z", "isCopen[usual; countable](setminus(R,Z))", "true"),
];

fn expression_case(id: &str, src: &str, expected: &str) -> CaseResult {
    let got = eval_str(src);
    let (passed, detail) = match (&got, expected) {
        (Ok(r), "true" | "false") => (r.value == Value::Flag(expected == "true"), r.rendered.clone()),
        (Ok(r), _) => match eval_set(expected) {
            Ok(want) => (r.value == Value::Set(want), r.rendered.clone()),
            Err(e) => (false, format!("bad expectation: {e}")),
        },
        (Err(e), _) => (false, e.to_string()),
    };
    let detail = if passed { format!("= {detail}") } else { format!("got {detail}, expected {expected}") };
    CaseResult { id: id.to_string(), passed, detail }
}

fn excluded_i() -> TopologySpec {
    TopologySpec::excluded_set(RealSet::irrationals()).expect("irrationals are a valid excluded set")
}

fn verdict_case(
    id: &str,
    t: TopologySpec,
    i: IdealKind,
    status: ContinuityStatus,
    witness: Option<&str>,
) -> CaseResult {
    let v = builtin_identity_verdict(&t, i);
    let want = witness.map(|w| eval_set(w).expect("fixture witness parses"));
    let got = v.witness.as_ref().map(|w| w.open_set.clone());
    let passed = v.status == status && (want.is_none() || got == want);
    let shown = got.map(|s| format!(" witness {s}")).unwrap_or_default();
    CaseResult { id: id.into(), passed, detail: format!("{:?}{shown}", v.status) }
}

fn cover_case() -> CaseResult {
    let members = ["interval(-1,0.5,c,o)", "interval(-0.5,1,o,c)"].map(|s| eval_set(s).expect("fixture parses"));
    let frontiers = ["interval(0.5,1,c,c)", "interval(-1,-0.5,c,c)"].map(|s| eval_set(s).expect("fixture parses"));
    let c = match Cover::new(TopologySpec::overlapping_interval(), members.to_vec()) {
        Ok(c) => c,
        Err(e) => return CaseResult { id: "overlap-cover".into(), passed: false, detail: e.to_string() },
    };
    let r = analyze_cover(&c, IdealKind::Countable);
    let passed =
        r.is_cover && r.ideal_open_members.is_empty() && !r.has_ideal_open_finite_subcover && r.frontiers == frontiers;
    let fr: Vec<String> = r.frontiers.iter().map(|s| s.to_string()).collect();
    CaseResult {
        id: "overlap-cover".into(),
        passed,
        detail: format!(
            "isCover={} idealOpenMembers={:?} subcover={} frontiers=[{}]",
            r.is_cover,
            r.ideal_open_members,
            r.has_ideal_open_finite_subcover,
            fr.join("; ")
        ),
    }
}

pub fn worked_examples() -> SuiteReport {
    let mut cases: Vec<CaseResult> = CLASSIFICATION_FIXTURES
        .iter()
        .chain(OPERATOR_FIXTURES)
        .map(|(id, src, want)| expression_case(id, src, want))
        .collect();
    cases.push(verdict_case(
        "identity/excluded-countable",
        excluded_i(),
        IdealKind::Countable,
        ContinuityStatus::NotIdealContinuous,
        Some("Q"),
    ));
    cases.push(verdict_case(
        "identity/cocountable-countable",
        TopologySpec::cocountable(),
        IdealKind::Countable,
        ContinuityStatus::IdealContinuous,
        None,
    ));
    cases.push(verdict_case(
        "identity/cocountable-finite",
        TopologySpec::cocountable(),
        IdealKind::Finite,
        ContinuityStatus::NotIdealContinuous,
        Some("setminus(R, Z)"),
    ));
    cases.push(cover_case());
    let json = json!({
        "suite": "paper-examples",
        "cases": cases.iter().map(|c| json!({ "id": c.id, "passed": c.passed, "detail": c.detail })).collect::<Vec<_>>(),
    });
    finish("paper-examples", cases, json)
}

pub fn theorems(max_n: usize) -> Result<SuiteReport, Error> {
    let reports = check_all(max_n)?;
    let cases = reports
        .iter()
        .map(|r| CaseResult {
            id: r.theorem_id.clone(),
            passed: r.passed,
            detail: format!("{} instances, {} counterexamples", r.instances_checked, r.counterexamples.len()),
        })
        .collect();
    let json = json!({ "suite": "theorems", "maxN": max_n, "reports": reports });
    Ok(finish("theorems", cases, json))
}

/// Every refutable claim must have a witness; the control claims must not.
pub fn counterexamples(max_n: usize) -> Result<SuiteReport, Error> {
    let mut cases = Vec::new();
    let mut witnesses = Vec::new();
    for c in CLAIMS {
        let w = search_counterexample(c.statement.id, max_n)?;
        let passed = w.is_some() == c.refutable;
        let detail = match &w {
            Some(w) => format!("witness on n={} sets {:?}", w.instance.space.n, w.instance.sets),
            None => "no witness".to_string(),
        };
        cases.push(CaseResult { id: c.statement.id.to_string(), passed, detail });
        witnesses.push(json!({ "claimId": c.statement.id, "refutable": c.refutable, "witness": w }));
    }
    let json = json!({ "suite": "counterexamples", "maxN": max_n, "claims": witnesses });
    Ok(finish("counterexamples", cases, json))
}

fn finish(suite: &'static str, cases: Vec<CaseResult>, mut json: Json) -> SuiteReport {
    let failures = cases.iter().filter(|c| !c.passed).count();
    json["total"] = json!(cases.len());
    json["failures"] = json!(failures);
    json["passed"] = json!(failures == 0);
    SuiteReport { suite, cases, json }
}

pub fn run(suite: Suite, max_n: usize) -> Result<SuiteReport, Error> {
    match suite {
        Suite::PaperExamples => Ok(worked_examples()),
        Suite::Theorems => theorems(max_n),
        Suite::Counterexamples => counterexamples(max_n),
    }
}
