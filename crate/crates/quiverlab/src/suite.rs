//! Runs the catalog cases against their expected values and collects a pass/fail table.

use std::collections::BTreeSet;
use std::fmt::Display;
use std::sync::Arc;

use crate::annquot::{annihilator, classify_annihilator_path, quotient_presentation, Ideal, Witness};
use crate::catalog::{default_ids, ex4_stated_endo, session_text};
use crate::endo::{end_presentation, verify_bounds, BoundsReport, EndoPresentation};
use crate::error::{Error, Result};
use crate::homological::{gldim, pd, Certificate, PdResult};
use crate::presentations::{is_isomorphic_presentation, monic, parse_element, parse_presentation, recognize_class, BoundQuiver};
use crate::representations::{hom_space, is_isomorphic, simple, string_module, Representation, StringWord};
use crate::session::{parse_session, Session};
use crate::tau::{ar_translate, is_tau_tilting};

/// Checks whose expected value disagrees with a direct computation. They still count as
/// failures; the note says what was computed instead.
const KNOWN_DEVIATIONS: &[(&str, &str, &str)] = &[
    ("EX4", "End(T) matches the stated quiver", "the stated quiver has one more basis path than End(T), and two of its arms attach at other vertices"),
    ("EX4", "gldim B", "the extracted End(T) has an extra relation and global dimension n + 1"),
    ("EX6", "ann T generators", "mu acts as zero on every summand, so ann T also contains mu"),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteRow {
    pub case: String,
    pub check: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    pub deviation: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub rows: Vec<SuiteRow>,
    /// Requested ids that name no case.
    pub unknown: Vec<String>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SuiteRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    /// Failures not covered by a recorded deviation.
    pub fn unexplained_failures(&self) -> impl Iterator<Item = &SuiteRow> {
        self.failures().filter(|r| r.deviation.is_none())
    }
}

fn family(case: &str) -> &str {
    case.split('(').next().unwrap_or(case)
}

struct Rows {
    case: String,
    rows: Vec<SuiteRow>,
}

impl Rows {
    fn push(&mut self, check: &str, expected: impl Display, actual: impl Display) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let pass = expected == actual;
        self.record(check, expected, actual, pass);
    }

    fn record(&mut self, check: &str, expected: String, actual: String, pass: bool) {
        let deviation = if pass {
            None
        } else {
            KNOWN_DEVIATIONS
                .iter()
                .find(|(f, c, _)| *f == family(&self.case) && *c == check)
                .map(|(_, _, note)| note.to_string())
        };
        self.rows.push(SuiteRow { case: self.case.clone(), check: check.to_string(), expected, actual, pass, deviation });
    }
}

fn path_set(j: &Ideal) -> String {
    let q = j.algebra().quiver();
    match j.path_generators() {
        Some(ps) => {
            let set: BTreeSet<String> = ps.iter().map(|p| p.display(q)).collect();
            format!("{{{}}}", set.into_iter().collect::<Vec<_>>().join(", "))
        }
        None => "not path-generated".into(),
    }
}

fn expected_set(paths: &[&str]) -> String {
    let set: BTreeSet<&str> = paths.iter().copied().collect();
    format!("{{{}}}", set.into_iter().collect::<Vec<_>>().join(", "))
}

fn infinite_label(r: &PdResult) -> String {
    match r {
        PdResult::Infinite(_) => "infinite".into(),
        other => other.to_string(),
    }
}

struct Context {
    session: Session,
    summands: Vec<Representation>,
    ann: Ideal,
    endo: EndoPresentation,
    bounds: BoundsReport,
    tau_tilting: bool,
}

impl Context {
    fn new(id: &str, cutoff: usize) -> Result<Context> {
        let text = session_text(id).ok_or_else(|| Error::Precondition(format!("unknown case `{id}`")))?;
        let session = parse_session(&text)?;
        let t = session.default_module().ok_or_else(|| Error::Precondition("session defines no module".into()))?;
        let summands = t.summands.clone();
        let ann = annihilator(&t.sum());
        let names: Vec<String> = (1..=summands.len()).map(|i| format!("t{i}")).collect();
        let endo = end_presentation(&summands, &names)?;
        let bounds = verify_bounds(&summands, &endo, cutoff)?;
        let tau_tilting = is_tau_tilting(&summands)?.verdict;
        Ok(Context { session, summands, ann, endo, bounds, tau_tilting })
    }

    fn algebra(&self) -> &Arc<BoundQuiver> {
        &self.session.algebra
    }

    fn vertex(&self, name: &str) -> Result<usize> {
        self.algebra().quiver().vertex_index(name)
    }

    fn named(&self, name: &str) -> Result<Representation> {
        Ok(self.session.module(name)?.sum())
    }

    fn string(&self, word: &str) -> Result<Representation> {
        string_module(self.algebra(), &StringWord::parse(self.algebra().quiver(), word)?)
    }

    fn quotient(&self) -> Result<Arc<BoundQuiver>> {
        Ok(quotient_presentation(self.algebra(), &self.ann)?.quotient)
    }
}

fn case_ex1(c: &Context, rows: &mut Rows) -> Result<()> {
    rows.push("gldim A", 4, &c.bounds.gldim_a);
    rows.push("ann T generators", expected_set(&["gamma"]), path_set(&c.ann));
    rows.push("pd_A(A/ann T)", 2, &c.bounds.pd_quotient);
    rows.push("T tau-tilting", true, c.tau_tilting);
    rows.push("End(T) relations", 0, c.endo.algebra.relations().len());
    rows.push("gldim B", 1, &c.bounds.gldim_b);
    rows.push("gldim A <= gldim B + pd_A(A/ann T) + 1", "holds", c.bounds.quotient_bound.label());
    rows.push("gldim bound tight (4 = 1 + 2 + 1)", true, c.bounds.quotient_bound_tight);
    Ok(())
}

fn case_ex2(c: &Context, rows: &mut Rows, cutoff: usize) -> Result<()> {
    rows.push("gldim A", 3, &c.bounds.gldim_a);
    rows.push("ann T generators", expected_set(&["beta*alpha"]), path_set(&c.ann));
    rows.push("T tau-tilting", true, c.tau_tilting);
    let quotient = c.quotient()?;
    let s1 = pd(&simple(&quotient, quotient.quiver().vertex_index("1")?), cutoff);
    let period = match &s1 {
        PdResult::Infinite(Certificate::SyzygyPeriod(i, j)) => format!("Ω^{i} ≅ Ω^{j}"),
        other => other.to_string(),
    };
    rows.push("pd_{A/ann T} S(1) certificate", "Ω^0 ≅ Ω^2", period);
    rows.push("gldim End(T)", "infinite", infinite_label(&c.bounds.gldim_b));
    Ok(())
}

fn case_ex3(c: &Context, rows: &mut Rows, n: usize) -> Result<()> {
    rows.push("gldim A", n, &c.bounds.gldim_a);
    let tau_u1 = ar_translate(&c.named("U1")?);
    rows.push("tau U1 = 2/3", true, is_isomorphic(&tau_u1, &c.string("theta")?));
    let tau_u2 = ar_translate(&c.named("U2")?);
    rows.push("tau U2 = S(2)", true, is_isomorphic(&tau_u2, &simple(c.algebra(), c.vertex("2")?)));
    rows.push("T tau-tilting", true, c.tau_tilting);
    rows.push("ann T generators", expected_set(&["beta*alpha"]), path_set(&c.ann));
    rows.push("gldim End(T)", "infinite", infinite_label(&c.bounds.gldim_b));
    Ok(())
}

fn case_ex4(c: &Context, rows: &mut Rows, n: usize) -> Result<()> {
    let rec = recognize_class(c.algebra());
    rows.push("monomial", true, rec.is_monomial);
    rows.push("special biserial", false, rec.is_special_biserial);
    rows.push("gldim A", 2, &c.bounds.gldim_a);
    rows.push("|T|", 2 * n, c.summands.len());
    rows.push("T tau-tilting", true, c.tau_tilting);
    for j in 2..n {
        let hom = hom_space(&c.named(&format!("Ta{j}"))?, &c.named(&format!("Ta{}", j - 1))?).dim();
        rows.push(&format!("dim Hom(T_a{j}, T_a{})", j - 1), 1, hom);
        if j >= 3 {
            let hom = hom_space(&c.named(&format!("Ta{j}"))?, &c.named(&format!("Ta{}", j - 2))?).dim();
            rows.push(&format!("dim Hom(T_a{j}, T_a{})", j - 2), 0, hom);
        }
    }
    let a = c.algebra();
    let p = |v: &str| -> Result<Representation> { Ok(crate::representations::projective(a, c.vertex(v)?)) };
    rows.push("dim Hom(P(n+1), P(n))", 1, hom_space(&p(&(n + 1).to_string())?, &p(&n.to_string())?).dim());
    let stated = parse_presentation(&ex4_stated_endo(n))?;
    rows.push("End(T) matches the stated quiver", true, is_isomorphic_presentation(&c.endo.algebra, &stated));
    rows.push("gldim B", n, &c.bounds.gldim_b);
    rows.push("monomial gldim 2 gives gldim B finite", "holds", c.bounds.monomial_finiteness.label());
    Ok(())
}

fn case_ex5(c: &Context, rows: &mut Rows) -> Result<()> {
    rows.push("ann T generators", expected_set(&["delta", "gamma*lambda", "epsilon*mu"]), path_set(&c.ann));
    rows.push("T tau-tilting", true, c.tau_tilting);
    let q = c.algebra().quiver();
    for (path, expected) in [
        ("gamma*lambda", "case II via alpha*gamma*lambda - beta*delta"),
        ("epsilon*mu", "case I via lambda*epsilon*mu"),
        ("delta", "not applicable"),
    ] {
        let labels: Vec<&str> = path.split('*').collect();
        let rho = q.path_from_labels(&labels)?;
        let actual = if c.ann.contains_path(&rho) {
            let verdict = classify_annihilator_path(&c.ann, &rho)?.verdict;
            match (&verdict, expected.strip_prefix("case II via ")) {
                // relations are compared up to a scalar, not by their printed term order
                (Witness::MinimalRelation { relation, .. }, Some(text))
                    if monic(relation) == monic(&parse_element(q, text, 0)?) =>
                {
                    expected.to_string()
                }
                _ => verdict.describe(q, &rho),
            }
        } else {
            format!("{path} not in ann T")
        };
        rows.push(&format!("classification of {path}"), expected, actual);
    }
    Ok(())
}

fn case_ex6(c: &Context, rows: &mut Rows, cutoff: usize) -> Result<()> {
    rows.push("gldim A", 2, &c.bounds.gldim_a);
    rows.push("special biserial", true, recognize_class(c.algebra()).is_special_biserial);
    rows.push("T tau-tilting", true, c.tau_tilting);
    rows.push("ann T generators", expected_set(&["gamma*lambda"]), path_set(&c.ann));
    let quotient = c.quotient()?;
    rows.push("pd_{A/ann T} S(7)", 4, pd(&simple(&quotient, quotient.quiver().vertex_index("7")?), cutoff));
    rows.push("gldim A/ann T", 4, gldim(&quotient, cutoff));
    let within = matches!(c.bounds.gldim_b.exact(), Some(d) if d <= 5);
    rows.record("gldim B <= 5", "<= 5".into(), c.bounds.gldim_b.to_string(), within);
    rows.push("special biserial gldim 2 gives gldim A/ann T <= 4, gldim B <= 5", "holds", c.bounds.special_biserial_bound.label());
    Ok(())
}

/// All rows for one case id such as `EX3(4)`.
pub fn run_case(id: &str, cutoff: usize) -> Result<Vec<SuiteRow>> {
    let c = Context::new(id, cutoff)?;
    let case = id.trim().to_ascii_uppercase();
    let mut rows = Rows { case: case.clone(), rows: Vec::new() };
    let n = case.split_once('(').and_then(|(_, r)| r.trim_end_matches(')').parse::<usize>().ok());
    match (family(&case), n) {
        ("EX1", _) => case_ex1(&c, &mut rows)?,
        ("EX2", _) => case_ex2(&c, &mut rows, cutoff)?,
        ("EX3", Some(n)) => case_ex3(&c, &mut rows, n)?,
        ("EX4", Some(n)) => case_ex4(&c, &mut rows, n)?,
        ("EX5", _) => case_ex5(&c, &mut rows)?,
        ("EX6", _) => case_ex6(&c, &mut rows, cutoff)?,
        _ => return Err(Error::Precondition(format!("unknown case `{id}`"))),
    }
    rows.push("sandwich pd_A(A/ann T) <= pd_A T <= pd_A(A/ann T) + 1", "holds", c.bounds.sandwich.label());
    Ok(rows.rows)
}

/// Runs the requested cases (all of them for `None`); cases run on separate threads
/// and rows come back in request order.
pub fn example_suite(filter: Option<&[String]>, cutoff: usize) -> Result<SuiteReport> {
    let ids: Vec<String> = match filter {
        Some(ids) => ids.to_vec(),
        None => default_ids(),
    };
    let mut report = SuiteReport::default();
    let (known, unknown): (Vec<String>, Vec<String>) = ids.into_iter().partition(|id| session_text(id).is_some());
    report.unknown = unknown;
    let results: Vec<Result<Vec<SuiteRow>>> = std::thread::scope(|s| {
        let handles: Vec<_> = known.iter().map(|id| s.spawn(move || run_case(id, cutoff))).collect();
        handles.into_iter().map(|h| h.join().expect("suite case panicked")).collect()
    });
    for r in results {
        report.rows.extend(r?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_are_exactly_the_recorded_deviations() {
        let r = example_suite(None, 12).unwrap();
        assert!(r.unknown.is_empty());
        assert_eq!(r.unexplained_failures().count(), 0);
        for (case, check, _) in KNOWN_DEVIATIONS {
            assert!(r.rows.iter().any(|row| row.case.starts_with(case) && row.check == *check && !row.pass), "{case}: {check}");
        }
    }

    #[test]
    fn unknown_cases_are_collected() {
        let r = example_suite(Some(&["EX1".to_string(), "EX42".to_string()]), 12).unwrap();
        assert_eq!(r.unknown, ["EX42"]);
        assert!(r.all_pass());
    }
}
