//! Command-line surface. `run` takes the argument list and a standard-input handle and
//! returns the exit code with the text written to stdout and stderr, so it can be
//! driven from tests without a process.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::annquot::{annihilator, classify_annihilator_path, tilting_over_quotient_check};
use crate::endo::{end_presentation, gldim_endo, verify_bounds, BoundCheck};
use crate::error::{Error, Result};
use crate::homological::{gd_conditions, gldim, monomial_gldim, pd, pd_of_sum, simple_pds, PdResult, DEFAULT_CUTOFF};
use crate::linalg::Q;
use crate::presentations::{classify_relations, recognize_class, serialize_presentation, BoundQuiver, Quiver, RelationClass, DEFAULT_LMAX};
use crate::representations::{is_indecomposable, Representation};
use crate::session::{parse_session_with, serialize_rep, NamedModule, Session};
use crate::suite::example_suite;
use crate::tau::{ar_translate, is_tau_tilting, search_tau_tilting_sb};

/// Version of the structured report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "quiverlab", version, about = "Exact computations with bound quiver algebras and their modules")]
pub struct Cli {
    /// Syzygy steps before a projective dimension is reported as a lower bound.
    #[arg(long, global = true, default_value_t = DEFAULT_CUTOFF)]
    pub cutoff: usize,
    /// Longest path considered when building the normal form.
    #[arg(long, global = true, default_value_t = DEFAULT_LMAX)]
    pub lmax: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// Canonical JSON with sorted keys.
    Structured,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Session file, or `-` for standard input.
    pub file: String,
}

#[derive(Args, Debug, Clone)]
pub struct ModuleInput {
    /// Session file, or `-` for standard input.
    pub file: String,
    /// Module to use; defaults to `T`, else the last module defined.
    #[arg(long)]
    pub module: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse a session and summarize it.
    Check(Input),
    /// Algebra class, relations and module summaries.
    Info(Input),
    /// Projective dimension of a module and its summands.
    Pd(ModuleInput),
    /// Global dimension and the projective dimensions of the simples.
    Gldim(Input),
    /// AR translate of each summand.
    Tau(ModuleInput),
    /// Decide whether a module is tau-tilting.
    Tautilt(ModuleInput),
    /// Annihilator generators and how each is explained by the relations.
    Ann(ModuleInput),
    /// Presentation of A/ann T and the tilting check over it.
    Quotient(ModuleInput),
    /// Presentation and global dimension of the endomorphism algebra.
    Endo(ModuleInput),
    /// Global dimension inequalities relating A, End(T) and A/ann T.
    Bounds(ModuleInput),
    /// Enumerate tau-tilting modules of a special biserial algebra.
    Search {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
    },
    /// Run the built-in example cases against their expected values.
    #[command(name = "paper-suite")]
    ExampleSuite {
        /// Case id such as EX1 or EX3(4); repeatable. All cases when absent.
        #[arg(long = "case")]
        cases: Vec<String>,
    },
}

/// Exit code with captured output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A finished command: structured payload, text rendering and whether it refutes something.
struct Report {
    value: Value,
    text: String,
    refuted: bool,
    warnings: Vec<String>,
}

impl Report {
    fn ok(value: Value, text: String) -> Report {
        Report { value, text, refuted: false, warnings: Vec::new() }
    }
}

pub fn run<I, S>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: rendered, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: rendered }
            };
        }
    };
    let name = command_name(&cli.command);
    match execute(&cli, stdin) {
        Ok(report) => {
            let stdout = match cli.format {
                Format::Text => report.text,
                Format::Structured => {
                    let doc = json!({ "schema_version": SCHEMA_VERSION, "command": name, "result": report.value });
                    let mut s = serde_json::to_string_pretty(&doc).expect("reports serialize");
                    s.push('\n');
                    s
                }
            };
            let stderr = report.warnings.iter().map(|w| format!("warning: {w}\n")).collect();
            Outcome { code: if report.refuted { 1 } else { 0 }, stdout, stderr }
        }
        Err(e) => {
            let code = match e {
                Error::Inconsistency(_) => 1,
                _ => 2,
            };
            Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check(_) => "check",
        Command::Info(_) => "info",
        Command::Pd(_) => "pd",
        Command::Gldim(_) => "gldim",
        Command::Tau(_) => "tau",
        Command::Tautilt(_) => "tautilt",
        Command::Ann(_) => "ann",
        Command::Quotient(_) => "quotient",
        Command::Endo(_) => "endo",
        Command::Bounds(_) => "bounds",
        Command::Search { .. } => "search",
        Command::ExampleSuite { .. } => "paper-suite",
    }
}

fn load(file: &str, lmax: usize, stdin: &mut dyn Read) -> Result<Session> {
    let text = if file == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| Error::Precondition(format!("cannot read standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(file).map_err(|e| Error::Precondition(format!("cannot read `{file}`: {e}")))?
    };
    parse_session_with(&text, lmax)
}

fn pick<'s>(s: &'s Session, name: &Option<String>) -> Result<&'s NamedModule> {
    match name {
        Some(n) => s.module(n),
        None => s.default_module().ok_or_else(|| Error::Precondition("the session defines no module".into())),
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Report> {
    let (cutoff, lmax) = (cli.cutoff, cli.lmax);
    match &cli.command {
        Command::Check(i) => cmd_check(&load(&i.file, lmax, stdin)?),
        Command::Info(i) => cmd_info(&load(&i.file, lmax, stdin)?),
        Command::Gldim(i) => cmd_gldim(&load(&i.file, lmax, stdin)?, cutoff),
        Command::Search { input, limit } => cmd_search(&load(&input.file, lmax, stdin)?, *limit),
        Command::ExampleSuite { cases } => cmd_suite(cases, cutoff),
        Command::Pd(m)
        | Command::Tau(m)
        | Command::Tautilt(m)
        | Command::Ann(m)
        | Command::Quotient(m)
        | Command::Endo(m)
        | Command::Bounds(m) => {
            let s = load(&m.file, lmax, stdin)?;
            let module = pick(&s, &m.module)?;
            match &cli.command {
                Command::Pd(_) => cmd_pd(module, cutoff),
                Command::Tau(_) => cmd_tau(module),
                Command::Tautilt(_) => cmd_tautilt(module),
                Command::Ann(_) => cmd_ann(module),
                Command::Quotient(_) => cmd_quotient(module, cutoff),
                Command::Endo(_) => cmd_endo(module, cutoff),
                _ => cmd_bounds(module, cutoff),
            }
        }
    }
}

fn q_json(x: &Q) -> Value {
    Value::String(format!("{}/{}", x.numer(), x.denom()))
}

fn rep_json(m: &Representation) -> Value {
    let q = m.algebra().quiver();
    let mut dims = Map::new();
    for v in 0..q.vertex_count() {
        if m.dim_at(v) > 0 {
            dims.insert(q.vertex_name(v).to_string(), json!(m.dim_at(v)));
        }
    }
    let mut maps = Map::new();
    for (ai, ar) in q.arrows().iter().enumerate() {
        let mat = m.map(ai);
        if mat.is_zero() {
            continue;
        }
        let rows: Vec<Value> =
            (0..mat.rows()).map(|r| Value::Array((0..mat.cols()).map(|c| q_json(&mat[(r, c)])).collect())).collect();
        maps.insert(ar.name.clone(), Value::Array(rows));
    }
    json!({ "dims": dims, "maps": maps, "total_dim": m.total_dim() })
}

fn pd_json(r: &PdResult, q: &Quiver) -> Value {
    match r {
        PdResult::ExactFinite(d) => json!({ "kind": "exact", "value": d }),
        PdResult::AtLeast(d) => json!({ "kind": "at_least", "value": d }),
        PdResult::Infinite(c) => json!({ "kind": "infinite", "certificate": c.describe(q) }),
    }
}

fn dims_text(m: &Representation) -> String {
    let d: Vec<String> = m.dims().iter().map(|x| x.to_string()).collect();
    format!("({})", d.join(","))
}

fn algebra_json(a: &BoundQuiver) -> Value {
    let q = a.quiver();
    let arrows: Vec<Value> = q
        .arrows()
        .iter()
        .map(|ar| json!({ "name": ar.name, "source": q.vertex_name(ar.source), "target": q.vertex_name(ar.target) }))
        .collect();
    let relations: Vec<String> = a.relations().iter().map(|r| r.display(q)).collect();
    json!({ "vertices": q.vertices(), "arrows": arrows, "relations": relations, "dim": a.dim() })
}

fn cmd_check(s: &Session) -> Result<Report> {
    let a = &s.algebra;
    let q = a.quiver();
    let modules: Vec<Value> = s
        .modules
        .iter()
        .map(|m| json!({ "name": m.name, "definition": m.definition, "summands": m.summands.len(), "dims": m.sum().dims() }))
        .collect();
    let mut text = format!("ok: {} vertices, {} arrows, {} relations, dim {}\n", q.vertex_count(), q.arrow_count(), a.relations().len(), a.dim());
    for m in &s.modules {
        writeln!(text, "module {}: {} summand(s), dimension vector {}", m.name, m.summands.len(), dims_text(&m.sum())).unwrap();
    }
    Ok(Report::ok(json!({ "algebra": algebra_json(a), "modules": modules }), text))
}

fn class_name(c: RelationClass) -> &'static str {
    match c {
        RelationClass::ZeroRelation => "zero-relation",
        RelationClass::Minimal => "minimal",
        RelationClass::NonMinimal => "non-minimal",
    }
}

fn cmd_info(s: &Session) -> Result<Report> {
    let a = &s.algebra;
    let q = a.quiver();
    let rec = recognize_class(a);
    let mut text = format!("dim {}, nilpotency index {}\n", a.dim(), a.nilpotency());
    writeln!(text, "monomial: {}, special biserial: {}", rec.is_monomial, rec.is_special_biserial).unwrap();
    for v in &rec.violations {
        writeln!(text, "  {v}").unwrap();
    }
    let rels = classify_relations(a);
    let mut rel_values = Vec::new();
    for r in &rels {
        writeln!(text, "relation {} ({})", r.generator.display(q), class_name(r.class)).unwrap();
        rel_values.push(json!({ "generator": r.generator.display(q), "class": class_name(r.class) }));
    }
    let gd = if rec.is_special_biserial {
        let g = gd_conditions(a)?;
        writeln!(text, "GD1 {}, GD2 {}, GD3 {}", g.gd1, g.gd2, g.gd3).unwrap();
        for w in g.gd1_witnesses.iter().chain(&g.gd2_witnesses).chain(&g.gd3_witnesses) {
            writeln!(text, "  {w}").unwrap();
        }
        json!({ "gd1": g.gd1, "gd2": g.gd2, "gd3": g.gd3,
                "witnesses": g.gd1_witnesses.iter().chain(&g.gd2_witnesses).chain(&g.gd3_witnesses).collect::<Vec<_>>() })
    } else {
        Value::Null
    };
    let mut modules = Vec::new();
    for m in &s.modules {
        let mut summands = Vec::new();
        for t in &m.summands {
            let ind = is_indecomposable(t)?;
            writeln!(text, "module {}: summand {} indecomposable {}", m.name, dims_text(t), ind).unwrap();
            summands.push(json!({ "dims": t.dims(), "indecomposable": ind }));
        }
        modules.push(json!({ "name": m.name, "summands": summands }));
    }
    let value = json!({
        "algebra": algebra_json(a),
        "nilpotency": a.nilpotency(),
        "monomial": rec.is_monomial,
        "special_biserial": rec.is_special_biserial,
        "violations": rec.violations,
        "relations": rel_values,
        "gd_conditions": gd,
        "modules": modules,
    });
    Ok(Report::ok(value, text))
}

fn cmd_pd(m: &NamedModule, cutoff: usize) -> Result<Report> {
    let q = m.summands[0].algebra().quiver().clone();
    let mut text = String::new();
    let mut parts = Vec::new();
    for t in &m.summands {
        let r = pd(t, cutoff);
        writeln!(text, "pd {} = {}", dims_text(t), r.describe(&q)).unwrap();
        parts.push(json!({ "dims": t.dims(), "pd": pd_json(&r, &q) }));
    }
    let total = pd_of_sum(&m.summands, cutoff);
    writeln!(text, "pd {} = {}", m.name, total.describe(&q)).unwrap();
    Ok(Report::ok(json!({ "module": m.name, "pd": pd_json(&total, &q), "summands": parts }), text))
}

fn cmd_gldim(s: &Session, cutoff: usize) -> Result<Report> {
    let a = &s.algebra;
    let q = a.quiver();
    let (method, g) = if recognize_class(a).is_monomial {
        ("overlap automaton", monomial_gldim(a)?)
    } else {
        ("syzygies", gldim(a, cutoff))
    };
    let simples = simple_pds(a, cutoff);
    let mut text = format!("gldim = {} ({method})\n", g.describe(q));
    let mut per = Map::new();
    for (v, r) in simples.iter().enumerate() {
        writeln!(text, "pd S({}) = {}", q.vertex_name(v), r.describe(q)).unwrap();
        per.insert(q.vertex_name(v).to_string(), pd_json(r, q));
    }
    Ok(Report::ok(json!({ "gldim": pd_json(&g, q), "method": method, "simples": per }), text))
}

fn cmd_tau(m: &NamedModule) -> Result<Report> {
    let mut text = String::new();
    let mut parts = Vec::new();
    for t in &m.summands {
        let tau = ar_translate(t);
        writeln!(text, "tau {} = {}", dims_text(t), if tau.is_zero() { "0".to_string() } else { serialize_rep(&tau) }).unwrap();
        parts.push(json!({ "module": rep_json(t), "tau": rep_json(&tau) }));
    }
    Ok(Report::ok(json!({ "module": m.name, "summands": parts }), text))
}

fn cmd_tautilt(m: &NamedModule) -> Result<Report> {
    let r = is_tau_tilting(&m.summands)?;
    let mut text = format!(
        "{}: {} is {}tau-tilting ({} of {} summands)\n",
        if r.verdict { "yes" } else { "no" },
        m.name,
        if r.verdict { "" } else { "not " },
        r.count,
        r.required
    );
    for f in &r.failures {
        writeln!(text, "  {f}").unwrap();
    }
    let value = json!({
        "module": m.name,
        "tau_tilting": r.verdict,
        "rigid": r.rigid,
        "sincere": r.sincere,
        "pairwise_non_isomorphic": r.pairwise_non_iso,
        "each_indecomposable": r.each_indecomposable,
        "summands": r.count,
        "required": r.required,
        "failures": r.failures,
    });
    Ok(Report { value, text, refuted: !r.verdict, warnings: Vec::new() })
}

fn cmd_ann(m: &NamedModule) -> Result<Report> {
    let t = m.sum();
    let a = t.algebra().clone();
    let q = a.quiver();
    let ann = annihilator(&t);
    let mut text = format!("dim ann {} = {}\n", m.name, ann.dim());
    let mut gens = Vec::new();
    match ann.path_generators() {
        Some(ps) => {
            for p in ps {
                let verdict = match classify_annihilator_path(&ann, p) {
                    Ok(c) => c.verdict.describe(q, p),
                    Err(e) => format!("unclassified: {e}"),
                };
                writeln!(text, "{}: {verdict}", p.display(q)).unwrap();
                gens.push(json!({ "path": p.display(q), "classification": verdict }));
            }
        }
        None => text.push_str("not generated by paths\n"),
    }
    let value = json!({ "module": m.name, "dim": ann.dim(), "path_generated": ann.path_generators().is_some(), "generators": gens });
    Ok(Report::ok(value, text))
}

fn cmd_quotient(m: &NamedModule, cutoff: usize) -> Result<Report> {
    let r = tilting_over_quotient_check(&m.summands, cutoff)?;
    let qp = &r.presentation;
    let qq = qp.quotient.quiver();
    let mut text = serialize_presentation(&qp.quotient);
    writeln!(text, "# dropped arrows: {}", qp.arrows_dropped.join(" ")).unwrap();
    writeln!(text, "pd over A/ann T = {}, Ext^1 = {}, summands {} of {}", r.pd_over_quotient.describe(qq), r.ext1, r.summand_count, r.quotient_rank)
        .unwrap();
    let a_q = m.summands[0].algebra().quiver();
    writeln!(
        text,
        "pd_A(A/ann T) = {}, pd_A T = {}, sandwich {}",
        r.pd_of_quotient.describe(a_q),
        r.pd_over_algebra.describe(a_q),
        r.sandwich.map_or("undetermined".to_string(), |b| b.to_string())
    )
    .unwrap();
    writeln!(text, "tilting over A/ann T: {}", r.tilting).unwrap();
    let value = json!({
        "module": m.name,
        "presentation": serialize_presentation(&qp.quotient),
        "dropped_arrows": qp.arrows_dropped,
        "quotient": algebra_json(&qp.quotient),
        "pd_over_quotient": pd_json(&r.pd_over_quotient, qq),
        "ext1": r.ext1,
        "pd_of_quotient": pd_json(&r.pd_of_quotient, a_q),
        "pd_over_algebra": pd_json(&r.pd_over_algebra, a_q),
        "sandwich": r.sandwich,
        "tilting": r.tilting,
    });
    Ok(Report { value, text, refuted: !r.tilting || r.sandwich == Some(false), warnings: Vec::new() })
}

fn summand_names(m: &NamedModule) -> Vec<String> {
    (1..=m.summands.len()).map(|i| format!("t{i}")).collect()
}

fn cmd_endo(m: &NamedModule, cutoff: usize) -> Result<Report> {
    let e = end_presentation(&m.summands, &summand_names(m))?;
    let g = gldim_endo(&e, cutoff)?;
    let bq = e.algebra.quiver();
    let mut text = serialize_presentation(&e.algebra);
    writeln!(text, "# dim {}, radical filtration {:?}", e.dim(), e.radical_filtration).unwrap();
    writeln!(text, "# gldim = {}", g.describe(bq)).unwrap();
    let value = json!({
        "module": m.name,
        "presentation": serialize_presentation(&e.algebra),
        "algebra": algebra_json(&e.algebra),
        "dim": e.dim(),
        "radical_filtration": e.radical_filtration,
        "gldim": pd_json(&g, bq),
    });
    Ok(Report::ok(value, text))
}

fn check_json(c: &BoundCheck) -> Value {
    json!({ "verdict": c.label(), "detail": c.detail() })
}

fn cmd_bounds(m: &NamedModule, cutoff: usize) -> Result<Report> {
    let e = end_presentation(&m.summands, &summand_names(m))?;
    let r = verify_bounds(&m.summands, &e, cutoff)?;
    let q = m.summands[0].algebra().quiver();
    let bq = e.algebra.quiver();
    let mut text = format!("gldim A = {}, gldim B = {}, gldim A/ann T = {}\n", r.gldim_a, r.gldim_b, r.gldim_quotient);
    writeln!(text, "pd_A(A/ann T) = {}, pd_A T = {}", r.pd_quotient, r.pd_t).unwrap();
    let checks = [("quotient_bound", &r.quotient_bound), ("monomial_finiteness", &r.monomial_finiteness), ("special_biserial_bound", &r.special_biserial_bound), ("sandwich", &r.sandwich)];
    for (name, c) in checks {
        writeln!(text, "{name}: {} ({})", c.label(), c.detail()).unwrap();
    }
    if r.quotient_bound_tight {
        text.push_str("quotient_bound is tight\n");
    }
    let refuted = checks.iter().any(|(_, c)| matches!(c, BoundCheck::Fails(_)));
    let value = json!({
        "module": m.name,
        "gldim_a": pd_json(&r.gldim_a, q),
        "gldim_b": pd_json(&r.gldim_b, bq),
        "gldim_quotient": pd_json(&r.gldim_quotient, q),
        "pd_quotient": pd_json(&r.pd_quotient, q),
        "pd_t": pd_json(&r.pd_t, q),
        "quotient_bound": check_json(&r.quotient_bound),
        "quotient_bound_tight": r.quotient_bound_tight,
        "monomial_finiteness": check_json(&r.monomial_finiteness),
        "special_biserial_bound": check_json(&r.special_biserial_bound),
        "sandwich": check_json(&r.sandwich),
    });
    Ok(Report { value, text, refuted, warnings: Vec::new() })
}

fn cmd_search(s: &Session, limit: usize) -> Result<Report> {
    let found = search_tau_tilting_sb(&s.algebra, limit)?;
    let mut text = format!("{} tau-tilting module(s)", found.len());
    text.push_str(if found.len() == limit { " (limit reached)\n" } else { "\n" });
    for t in &found {
        writeln!(text, "{}", t.labels.join(" + ")).unwrap();
    }
    let sets: Vec<&Vec<String>> = found.iter().map(|t| &t.labels).collect();
    Ok(Report::ok(json!({ "count": found.len(), "limit": limit, "limit_reached": found.len() == limit, "modules": sets }), text))
}

fn cmd_suite(cases: &[String], cutoff: usize) -> Result<Report> {
    let filter = if cases.is_empty() { None } else { Some(cases) };
    let r = example_suite(filter, cutoff)?;
    let width = r.rows.iter().map(|x| x.case.len() + x.check.len()).max().unwrap_or(0) + 2;
    let mut text = String::new();
    for row in &r.rows {
        let label = format!("{}  {}", row.case, row.check);
        write!(text, "{} {label:width$} expected {}, got {}", if row.pass { "PASS" } else { "FAIL" }, row.expected, row.actual).unwrap();
        if let Some(d) = &row.deviation {
            write!(text, " [recorded deviation: {d}]").unwrap();
        }
        text.push('\n');
    }
    let failed = r.failures().count();
    writeln!(text, "{} checks, {} failed", r.rows.len(), failed).unwrap();
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|x| json!({ "case": x.case, "check": x.check, "expected": x.expected, "actual": x.actual, "pass": x.pass, "deviation": x.deviation }))
        .collect();
    let warnings = r.unknown.iter().map(|id| format!("unknown case `{id}`")).collect();
    Ok(Report { value: json!({ "rows": rows, "failed": failed, "unknown": r.unknown }), text, refuted: failed > 0, warnings })
}
