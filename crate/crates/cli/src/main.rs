use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ctopo_cli::eval::{eval_set, evaluate_with, resolve_topology, Defaults};
use ctopo_cli::parser::{parse_expression, parse_topology, split_list};
use ctopo_cli::suites::{self, Suite};
use ctopo_core::finite_oracle::{
    bf_operator, check_all, check_theorem, claim, from_members, search_counterexample, BfValue, FiniteModelJson,
    CLAIMS, MAX_SET_N,
};
use ctopo_core::maps_covers::{
    analyze_cover, builtin_identity_verdict, continuity_verdict, ContinuityStatus, Cover, PiecewiseAffineMap,
};
use ctopo_core::{IdealKind, RealSet, TopologySpec};
use serde_json::json;

#[derive(Parser)]
#[command(name = "ctopo", version, about = "Exact ideal-relative topology on the real line and on finite spaces")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate an expression such as `FrC[usual](interval(1,2,o,c))`.
    Eval {
        #[arg(long)]
        expr: String,
        /// Topology used by operators without a context clause.
        #[arg(long)]
        topology: Option<String>,
        /// Ideal used by `I`-operators without one in their clause.
        #[arg(long)]
        ideal: Option<IdealKind>,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decide ideal continuity of a map, either for the identity from a
    /// built-in table or against an explicit family of open sets.
    Cont {
        /// `id`, `const:c`, `affine:a:b` or `step:t:u:v`.
        #[arg(long, default_value = "id")]
        map: String,
        #[arg(long)]
        topology: String,
        /// Codomain topology; defaults to the domain.
        #[arg(long)]
        codomain: Option<String>,
        #[arg(long)]
        ideal: IdealKind,
        /// Open sets of the codomain, separated by `;`.
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Analyse an open cover: which members are I-open and whether they cover.
    Cover {
        #[arg(long)]
        topology: String,
        #[arg(long)]
        ideal: IdealKind,
        /// Members separated by `;`.
        #[arg(long)]
        sets: String,
        #[arg(long)]
        json: bool,
    },
    /// Check theorems exhaustively or search for counterexamples on finite spaces.
    Oracle {
        #[arg(long, conflicts_with = "claim", required_unless_present = "claim")]
        theorem: Option<String>,
        #[arg(long)]
        claim: Option<String>,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Apply one operator to a subset of a finite model, by enumeration.
    Finite {
        /// `{"n":3,"opens":[[],[0],[0,1,2]],"ideal":[[],[2]]}`
        #[arg(long)]
        model: String,
        #[arg(long)]
        op: String,
        /// Point labels, e.g. `0,2`; empty for the empty set.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        set: String,
        #[arg(long)]
        json: bool,
    },
    /// Run a named batch: paper-examples, theorems or counterexamples.
    Suite {
        name: String,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
}

/// Usage-level failure: bad input, unknown names, out-of-range sizes.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Run = Result<bool, Usage>;

fn topology(src: &str) -> Result<TopologySpec, Usage> {
    let sel = parse_topology(src).map_err(|e| Usage(format!("topology: syntax error at {e}")))?;
    Ok(resolve_topology(&sel)?)
}

fn set_list(src: &str) -> Result<Vec<RealSet>, Usage> {
    split_list(src).iter().map(|s| eval_set(s).map_err(Usage::from)).collect()
}

fn emit(json: bool, value: serde_json::Value, text: String) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value).expect("json values serialise"));
    } else {
        print!("{text}");
    }
}

fn eval(expr: &str, topology: Option<&str>, ideal: Option<IdealKind>, trace: bool, json: bool) -> Run {
    let defaults = Defaults {
        topology: topology.map(parse_topology).transpose().map_err(|e| Usage(format!("topology: {e}")))?,
        ideal,
    };
    let e = parse_expression(expr).map_err(|e| Usage(format!("syntax error at {e}")))?;
    let r = evaluate_with(&e, &defaults, trace)?;
    let mut text = String::new();
    for (sub, v) in &r.trace {
        text.push_str(&format!("  {sub} = {v}\n"));
    }
    text.push_str(&format!("{}\n", r.rendered));
    emit(json, r.to_json(expr), text);
    Ok(true)
}

fn cont(map: &str, dom: &str, cod: Option<&str>, ideal: IdealKind, family: Option<&str>, json: bool) -> Run {
    let h: PiecewiseAffineMap = map.parse()?;
    let dom = topology(dom)?;
    let cod = cod.map(topology).transpose()?.unwrap_or_else(|| dom.clone());
    let verdict = match family {
        None if h.is_identity() && dom == cod => builtin_identity_verdict(&dom, ideal),
        None => return Err(Usage("--family is required unless the map is the identity on one topology".into())),
        Some(f) => continuity_verdict(&h, &dom, &cod, ideal, &set_list(f)?)?,
    };
    let status = format!("{:?}", verdict.status);
    let mut text = format!("{h} from {dom} to {cod} with the {} ideal: {status}\n", ideal.name());
    let mut out = json!({ "map": h.to_string(), "domain": dom.to_string(), "codomain": cod.to_string(),
        "ideal": ideal.name(), "status": status });
    if let Some(w) = &verdict.witness {
        text.push_str(&format!("  open set  {}\n  preimage  {}\n", w.open_set, w.preimage));
        out["witness"] = json!({ "openSet": w.open_set.to_string(), "preimage": w.preimage.to_string() });
    }
    emit(json, out, text);
    Ok(!matches!(verdict.status, ContinuityStatus::NotContinuous | ContinuityStatus::NotIdealContinuous))
}

fn cover(t: &str, ideal: IdealKind, sets: &str, json: bool) -> Run {
    let t = topology(t)?;
    let c = Cover::new(t, set_list(sets)?)?;
    let r = analyze_cover(&c, ideal);
    let frontiers: Vec<String> = r.frontiers.iter().map(|s| s.to_string()).collect();
    let mut text = format!(
        "is cover: {}\nideal-open members: {:?}\nideal-open finite subcover: {}\n",
        r.is_cover, r.ideal_open_members, r.has_ideal_open_finite_subcover
    );
    for (k, f) in frontiers.iter().enumerate() {
        text.push_str(&format!("  frontier of member {k}: {f}\n"));
    }
    let out = json!({ "isCover": r.is_cover, "idealOpenMembers": r.ideal_open_members,
        "hasIdealOpenFiniteSubcover": r.has_ideal_open_finite_subcover, "frontiers": frontiers });
    emit(json, out, text);
    Ok(r.is_cover && r.has_ideal_open_finite_subcover)
}

fn oracle(theorem: Option<&str>, claim_id: Option<&str>, max_n: usize, json: bool) -> Run {
    if max_n == 0 || max_n > MAX_SET_N {
        return Err(Usage(format!("--max-n must be between 1 and {MAX_SET_N}")));
    }
    if let Some(id) = theorem {
        let reports = if id == "all" { check_all(max_n)? } else { vec![check_theorem(id, max_n)?] };
        let mut text = String::new();
        for r in &reports {
            let tag = if r.passed { "pass" } else { "FAIL" };
            text.push_str(&format!(
                "{tag} {} ({} instances, {} counterexamples)\n",
                r.theorem_id,
                r.instances_checked,
                r.counterexamples.len()
            ));
            for c in r.counterexamples.iter().take(3) {
                text.push_str(&format!("  {}\n", serde_json::to_string(c).expect("serialisable")));
            }
        }
        emit(json, json!(reports), text);
        return Ok(reports.iter().all(|r| r.passed));
    }
    let id = claim_id.expect("clap requires one of --theorem or --claim");
    let claims: Vec<_> = if id == "all" { CLAIMS.iter().collect() } else { vec![claim(id)?] };
    let mut ok = true;
    let mut text = String::new();
    let mut out = Vec::new();
    for c in claims {
        let w = search_counterexample(c.statement.id, max_n)?;
        ok &= w.is_some() == c.refutable;
        match &w {
            Some(w) => text.push_str(&format!(
                "witness {}: {}\n  {}\n",
                c.statement.id,
                c.statement.text,
                serde_json::to_string(&w.instance).expect("serialisable")
            )),
            None => text.push_str(&format!("no witness {} up to n={max_n}\n", c.statement.id)),
        }
        out.push(json!({ "claimId": c.statement.id, "refutable": c.refutable, "witness": w }));
    }
    emit(json, json!(out), text);
    Ok(ok)
}

fn finite(model: &str, op: &str, set: &str, json: bool) -> Run {
    let (space, ideal) = FiniteModelJson::parse(model)?;
    let labels = set
        .trim_matches(|c| c == '{' || c == '}' || c == '[' || c == ']')
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| Usage(format!("bad point label `{s}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(&x) = labels.iter().find(|&&x| x >= space.n()) {
        return Err(Usage(format!("point {x} is outside a space of {} points", space.n())));
    }
    let v = bf_operator(&space, &ideal, op, &[from_members(&labels)])?;
    let text = match v {
        BfValue::Set(s) => format!("{}\n", ctopo_core::finite_oracle::fmt_set(s)),
        BfValue::Flag(b) => format!("{b}\n"),
    };
    emit(json, json!({ "op": op, "value": v }), text);
    Ok(true)
}

fn suite(name: &str, max_n: usize, json: bool) -> Run {
    let s: Suite = name.parse().map_err(Usage)?;
    if s != Suite::PaperExamples && (max_n == 0 || max_n > MAX_SET_N) {
        return Err(Usage(format!("--max-n must be between 1 and {MAX_SET_N}")));
    }
    let r = suites::run(s, max_n)?;
    emit(json, r.json.clone(), r.summary());
    Ok(r.passed())
}

fn main() -> ExitCode {
    // Panics are caught and reported as errors; keep the default hook quiet.
    std::panic::set_hook(Box::new(|_| {}));
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Eval { expr, topology, ideal, trace, json } => eval(expr, topology.as_deref(), *ideal, *trace, *json),
        Cmd::Cont { map, topology, codomain, ideal, family, json } => {
            cont(map, topology, codomain.as_deref(), *ideal, family.as_deref(), *json)
        }
        Cmd::Cover { topology, ideal, sets, json } => cover(topology, *ideal, sets, *json),
        Cmd::Oracle { theorem, claim, max_n, json } => oracle(theorem.as_deref(), claim.as_deref(), *max_n, *json),
        Cmd::Finite { model, op, set, json } => finite(model, op, set, *json),
        Cmd::Suite { name, max_n, json } => suite(name, *max_n, *json),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
