//! `asp`: counts, formula evaluation, verification sweeps and table output.

use std::collections::BTreeMap;
use std::process::ExitCode;

use asp_core::algebra::factorization_string;
use asp_core::bijections::{self, enumerate_tuples, gt_to_magog, to_gt, KissingTuple, PathTuple};
use asp_core::enumerate::{
    asp_genpoly, count_asts, enumerate_asms, enumerate_asts, gog_count, magog_genpoly,
};
use asp_core::formulas::{ct_oracle, detsum_genpoly, pfaffian_genpoly};
use asp_core::verify::{self, VerificationReport};
use asp_core::{Error, WeightPolynomial};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "asp", version, about = "Alternating sign pentagons, Magog and Gog pentagons")]
struct Cli {
    /// Worker threads for grid sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count objects of one kind, or evaluate a generating function.
    Count(CountArgs),
    /// Reproduce the ASP count table for one order.
    Table(TableArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Check a conjecture over its parameter grid.
    Conjecture(VerifyArgs),
    /// Follow one path tuple through kissing paths, a GT pattern and a Magog pentagon.
    BijectionTrace(TraceArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Object {
    Ast,
    Asp,
    Magog,
    Gog,
    Asm,
    Tuples,
}

impl Object {
    fn name(self) -> &'static str {
        match self {
            Object::Ast => "ast",
            Object::Asp => "asp",
            Object::Magog => "magog",
            Object::Gog => "gog",
            Object::Asm => "asm",
            Object::Tuples => "tuples",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Detsum,
    Pfaffian,
    Ct,
}

#[derive(Args)]
struct Output {
    /// Print only the count.
    #[arg(long, conflicts_with_all = ["json", "csv"])]
    plain: bool,
    /// JSON output (the default for most commands).
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// CSV output.
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct CountArgs {
    object: Object,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    lambda: Option<usize>,
    #[arg(long, default_value_t = 0)]
    m: usize,
    #[arg(long, value_enum, default_value_t = Method::Brute)]
    method: Method,
    /// Emit the generating polynomial in `rho - 1`.
    #[arg(long)]
    by_rho: bool,
    /// Emit the generating polynomial in `tau - 1`.
    #[arg(long)]
    by_tau: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    n: usize,
    /// Recount every cell by enumeration (orders up to 6).
    #[arg(long)]
    cross_check: bool,
    /// Allow orders outside 4..=7.
    #[arg(long)]
    force: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct VerifyArgs {
    target: String,
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct TraceArgs {
    /// Order; without it the order-10 example is traced.
    #[arg(long, requires_all = ["l", "r"])]
    n: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// Position of the tuple in enumeration order.
    #[arg(long, default_value_t = 0)]
    index: usize,
    #[command(flatten)]
    out: Output,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ParamRange(_) | Error::NTooLarge(_) | Error::Parse(_) => Failure::Usage(e.to_string()),
            other => Failure::Check(other.to_string()),
        }
    }
}

type CliResult = Result<ExitCode, Failure>;

fn need(v: Option<usize>, flag: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{flag} is required")))
}

fn poly_json(p: &WeightPolynomial) -> Value {
    json!(p.to_decimal_strings())
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs == 0 {
        eprintln!("error: --jobs must be at least 1");
        return ExitCode::from(2);
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build_global()
        .expect("thread pool is built once");
    let res = match cli.command {
        Command::Count(a) => count(a),
        Command::Table(a) => table(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Conjecture(a) => conjecture(a),
        Command::BijectionTrace(a) => trace(a),
    };
    match res {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn count(a: CountArgs) -> CliResult {
    let obj = a.object;
    if a.by_rho && !matches!(obj, Object::Ast | Object::Asp | Object::Tuples) {
        return Err(Failure::Usage(format!("--by-rho does not apply to {}", obj.name())));
    }
    if a.by_tau && obj != Object::Magog {
        return Err(Failure::Usage(format!("--by-tau does not apply to {}", obj.name())));
    }
    let method_ok = match a.method {
        Method::Brute => true,
        Method::Detsum | Method::Ct => matches!(obj, Object::Asp | Object::Tuples),
        Method::Pfaffian => matches!(obj, Object::Asp | Object::Magog),
    };
    if !method_ok {
        return Err(Failure::Usage(format!("this method does not apply to {}", obj.name())));
    }
    let mut params = Map::new();
    let mut put = |name: &str, v: usize| {
        params.insert(name.to_string(), json!(v));
    };
    let n = need(a.n, "n")?;
    let (poly, total) = match obj {
        Object::Ast => {
            put("n", n);
            if a.by_rho {
                let mut coeffs = vec![0i64; n.max(1)];
                for t in enumerate_asts(n) {
                    coeffs[t.rho() - 1] += 1;
                }
                let p = WeightPolynomial::from_i64s(&coeffs);
                let c = p.eval_one();
                (Some(p), c)
            } else {
                (None, count_asts(n).into())
            }
        }
        Object::Asm => {
            put("n", n);
            (None, enumerate_asms(n).len().into())
        }
        Object::Asp | Object::Tuples => {
            let (l, r) = (need(a.l, "l")?, need(a.r, "r")?);
            put("n", n);
            put("l", l);
            put("r", r);
            let p = match (obj, a.method) {
                (Object::Asp, Method::Brute) => asp_genpoly(n, l, r)?,
                (Object::Tuples, Method::Brute) => bijections::tuples_genpoly(n, l, r)?,
                (_, Method::Detsum) => detsum_genpoly(n, l, r)?,
                (_, Method::Ct) => ct_oracle(n, l, r)?,
                (_, _) => pfaffian_genpoly(n, l, r)?
                    .shift_down(1)
                    .expect("the Pfaffian side has no constant term"),
            };
            let c = p.eval_one();
            (a.by_rho.then_some(p), c)
        }
        Object::Magog => {
            let (k, lambda) = (need(a.k, "k")?, need(a.lambda, "lambda")?);
            put("m", a.m);
            put("n", n);
            put("k", k);
            put("lambda", lambda);
            let p = if a.method == Method::Pfaffian {
                let shape = asp_core::objects::MagogShape::new(a.m, n, k, lambda)?;
                let (n, l, r) = bijections::params_of_shape(shape)?;
                pfaffian_genpoly(n, l, r)?.shift_down(1).expect("the Pfaffian side has no constant term")
            } else {
                magog_genpoly(a.m, n, k, lambda)?
            };
            let c = p.eval_one();
            (a.by_tau.then_some(p), c)
        }
        Object::Gog => {
            let (k, l) = (need(a.k, "k")?, need(a.l, "l")?);
            put("m", a.m);
            put("n", n);
            put("k", k);
            put("l", l);
            (None, gog_count(a.m, n, k, l)?)
        }
    };
    if a.out.plain {
        println!("{total}");
        return Ok(ExitCode::SUCCESS);
    }
    if a.out.csv {
        let keys: Vec<&String> = params.keys().collect();
        let header: Vec<&str> = keys.iter().map(|k| k.as_str()).collect();
        println!("object,{},count,factorization", header.join(","));
        let vals: Vec<String> = params.values().map(Value::to_string).collect();
        println!("{},{},{},{}", obj.name(), vals.join(","), total, factorization_string(&total, "*"));
        return Ok(ExitCode::SUCCESS);
    }
    let mut out = Map::new();
    out.insert("object".into(), json!(obj.name()));
    out.insert("params".into(), Value::Object(params));
    if let Some(p) = &poly {
        out.insert("genpoly".into(), poly_json(p));
    }
    out.insert("count".into(), json!(total.to_string()));
    out.insert("factorization".into(), json!(factorization_string(&total, "*")));
    print_json(&Value::Object(out));
    Ok(ExitCode::SUCCESS)
}

fn table(a: TableArgs) -> CliResult {
    let n = a.n;
    if !(4..=7).contains(&n) && !a.force {
        return Err(Failure::Usage(format!("table orders are 4..=7 (got {n}); pass --force for others")));
    }
    let (t, summary) = verify::table_report(n, a.cross_check)?;
    let machine = |s: &str| s.replace('·', "*");
    if a.out.json {
        let cells: Vec<Value> = t
            .cells
            .iter()
            .map(|c| {
                let mut m = json!({
                    "n": c.n, "l": c.l, "r": c.r,
                    "count": c.computed.to_string(),
                    "factorization": factorization_string(&c.computed, "*"),
                    "erratum": c.erratum,
                });
                if let Some(e) = c.expected {
                    m["expected"] = json!(machine(e));
                }
                if let Some(b) = &c.brute {
                    m["brute"] = json!(b.to_string());
                }
                m
            })
            .collect();
        print_json(&json!({ "n": n, "cells": cells, "summary": summary }));
    } else if a.out.csv {
        println!("n,r,l,count,factorization,expected,erratum,brute");
        for c in &t.cells {
            println!(
                "{},{},{},{},{},{},{},{}",
                c.n,
                c.r,
                c.l,
                c.computed,
                factorization_string(&c.computed, "*"),
                c.expected.map(machine).unwrap_or_default(),
                c.erratum,
                c.brute.as_ref().map(ToString::to_string).unwrap_or_default()
            );
        }
    } else {
        let width = t.cells.iter().map(|c| c.factorization.chars().count()).max().unwrap_or(1).max(4);
        let mut header = format!("{:>6}", "r\\l");
        for l in 0..=n - 2 {
            header.push_str(&format!("  {:>width$}", l));
        }
        println!("{header}");
        for r in n - 1..=2 * n - 3 {
            let mut line = format!("{r:>6}");
            for l in 0..=n - 2 {
                let c = t.get(l, r).expect("every grid cell is computed");
                let pad = width - c.factorization.chars().count();
                line.push_str(&format!("  {}{}", " ".repeat(pad), c.factorization));
            }
            println!("{line}");
        }
        for c in t.errata() {
            println!(
                "ERRATUM n={} r={} l={}: computed {} = {}, printed {}",
                c.n,
                c.r,
                c.l,
                c.computed,
                c.factorization,
                c.expected.unwrap_or("-")
            );
        }
        for c in t.cells.iter().filter(|c| !c.cross_check_ok()) {
            println!(
                "MISMATCH n={} r={} l={}: formula {}, enumeration {}",
                c.n,
                c.r,
                c.l,
                c.computed,
                c.brute.as_ref().map(ToString::to_string).unwrap_or_default()
            );
        }
    }
    Ok(if summary.failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn render_report(rep: &VerificationReport, plain: bool) {
    if !plain {
        print_json(&serde_json::to_value(rep).expect("reports serialize"));
        return;
    }
    for c in &rep.cells {
        let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let values: Vec<String> = c
            .values
            .iter()
            .map(|(k, v)| format!("{k}={}", v.to_string().replace('"', "")))
            .collect();
        let status = match (c.agree, rep.conjecture) {
            (true, _) => "PASS",
            (false, false) => "FAIL",
            (false, true) => "DIFFER",
        };
        let note = c.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default();
        println!("{status} {} {}{note}", params.join(" "), values.join(" "));
    }
    let s = &rep.summary;
    println!("{}: checked {}, passed {}, failed {}", rep.target, s.checked, s.passed, s.failed);
}

fn verify_cmd(a: VerifyArgs) -> CliResult {
    let rep = verify::run(&a.target, a.max_n)?;
    render_report(&rep, a.out.plain);
    Ok(if rep.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn conjecture(a: VerifyArgs) -> CliResult {
    if a.target != "behrend" {
        return Err(Failure::Usage(format!("unknown conjecture {:?}; expected behrend", a.target)));
    }
    let rep = verify::behrend(a.max_n)?;
    render_report(&rep, a.out.plain);
    Ok(ExitCode::SUCCESS)
}

fn trace(a: TraceArgs) -> CliResult {
    let (tuple, l, r): (PathTuple, usize, usize) = match a.n {
        None => (bijections::example::example_tuple(), bijections::example::L, bijections::example::R),
        Some(n) => {
            let (l, r) = (need(a.l, "l")?, need(a.r, "r")?);
            let all = enumerate_tuples(n, l, r)?;
            let count = all.len();
            let t = all.into_iter().nth(a.index).ok_or_else(|| {
                Failure::Usage(format!("--index {} out of range ({count} tuples)", a.index))
            })?;
            (t, l, r)
        }
    };
    let n = tuple.params().0;
    let kissing = KissingTuple::shift(&tuple);
    let gt = to_gt(&tuple);
    let magog = gt_to_magog(&gt, l, r)?;
    let s = magog.shape();
    if a.out.plain {
        println!("tuple n={n} l={l} r={r} weight={}", tuple.weight());
        for (j, p) in (1..).zip(tuple.paths()) {
            println!("  S{j} {:?} -> E{} {}", p.start, p.end().0, p.letters());
        }
        println!("kissing");
        for (j, p) in (1..).zip(kissing.paths()) {
            println!("  P{j} {:?} -> {:?}", p.start, p.end());
        }
        print!("{}", gt.to_text());
        print!("{}", magog.to_text());
        println!("tau {}", magog.tau());
        return Ok(ExitCode::SUCCESS);
    }
    let paths: Vec<Value> = tuple
        .paths()
        .iter()
        .map(|p| json!({ "start": [p.start.0, p.start.1], "end": [p.end().0, p.end().1], "steps": p.letters() }))
        .collect();
    let shifted: Vec<Value> = kissing
        .paths()
        .iter()
        .map(|p| json!({ "start": [p.start.0, p.start.1], "end": [p.end().0, p.end().1], "steps": p.letters() }))
        .collect();
    let mut params = BTreeMap::new();
    params.insert("n", n);
    params.insert("l", l);
    params.insert("r", r);
    print_json(&json!({
        "params": params,
        "tuple": { "paths": paths, "ends": tuple.ends(), "weight": tuple.weight() },
        "kissing": shifted,
        "gt": gt.rows(),
        "magog": { "shape": [s.m, s.n, s.k, s.lambda], "rows": magog.rows(), "tau": magog.tau() },
    }));
    Ok(ExitCode::SUCCESS)
}
