//! Acceptance run: one PASS/FAIL line per criterion. Criteria that fail only on
//! checks with a recorded deviation (see `suite::KNOWN_DEVIATIONS`) are printed as
//! FAIL but do not fail the target; anything else does.

use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quiverlab::annquot::{
    annihilator, classify_annihilator_path, cover_descends, nilpotent_bound, pd_under_tor_vanishing,
    quotient_presentation, reduce_by_ideal, tilting_over_quotient_check, Witness,
};
use quiverlab::catalog::{default_ids, session_text};
use quiverlab::homological::{
    confirm_chain_cycle, gd_conditions, gldim, monomial_pd_exact, pd, Certificate, CycleConfirmation, PdResult,
};
use quiverlab::presentations::{recognize_class, BoundQuiver};
use quiverlab::random::{random_module, random_monomial, random_path_ideal, random_special_biserial, random_string_module};
use quiverlab::representations::{simple, Representation};
use quiverlab::session::parse_session;
use quiverlab::suite::{run_case, SuiteRow};
use quiverlab::tau::{search_tau_tilting_sb, tau_hom_check, Prepared};

struct Outcome {
    pass: bool,
    /// Failed, but every failing check has a recorded deviation.
    explained: bool,
    detail: String,
}

fn suite_criterion(ids: &[String]) -> Outcome {
    let mut rows: Vec<SuiteRow> = Vec::new();
    for id in ids {
        match run_case(id, 12) {
            Ok(r) => rows.extend(r),
            Err(e) => return Outcome { pass: false, explained: false, detail: format!("{id}: {e}") },
        }
    }
    let failed: Vec<&SuiteRow> = rows.iter().filter(|r| !r.pass).collect();
    let detail = if failed.is_empty() {
        format!("{} checks", rows.len())
    } else {
        let list: Vec<String> = failed
            .iter()
            .map(|r| format!("{} {}: expected {}, got {}", r.case, r.check, r.expected, r.actual))
            .collect();
        format!("{} of {} checks failed: {}", failed.len(), rows.len(), list.join("; "))
    };
    Outcome { pass: failed.is_empty(), explained: failed.iter().all(|r| r.deviation.is_some()), detail }
}

fn timed<F: FnOnce() -> Outcome>(label: &'static str, f: F) -> impl FnOnce() -> Outcome {
    move || {
        let t = Instant::now();
        let o = f();
        if std::env::var_os("ACCEPTANCE_TIMING").is_some() {
            eprintln!("{label}: {:.1}s", t.elapsed().as_secs_f64());
        }
        o
    }
}

fn verdict(pass: bool, detail: String) -> Outcome {
    Outcome { pass, explained: false, detail }
}

fn catalog_algebras() -> Vec<(String, Arc<BoundQuiver>, Vec<Representation>)> {
    default_ids()
        .into_iter()
        .map(|id| {
            let s = parse_session(&session_text(&id).unwrap()).unwrap();
            let t = s.default_module().unwrap().summands.clone();
            (id, s.algebra.clone(), t)
        })
        .collect()
}

fn air_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let algebras = catalog_algebras();
    let (mut pairs, mut disagreements, mut nonzero) = (0, 0, 0);
    for (_, a, t) in &algebras {
        let sb = recognize_class(a).is_special_biserial;
        let mut pool: Vec<Representation> = t.clone();
        for _ in 0..8 {
            pool.push(random_module(&mut rng, a));
            if sb {
                if let Some(m) = random_string_module(&mut rng, a) {
                    pool.push(m);
                }
            }
        }
        for _ in 0..20 {
            let m = &pool[rng.gen_range(0..pool.len())];
            let y = &pool[rng.gen_range(0..pool.len())];
            let c = tau_hom_check(y, &Prepared::new(m));
            pairs += 1;
            if c.via_translate != c.via_presentation {
                disagreements += 1;
            }
            if !c.via_translate {
                nonzero += 1;
            }
        }
    }
    verdict(
        pairs >= 200 && disagreements == 0,
        format!("{pairs} pairs over {} algebras, {nonzero} with Hom(Y, tau M) != 0, {disagreements} disagreements", algebras.len()),
    )
}

fn monomial_automaton() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut compared, mut disagreements, mut cycles, mut unconfirmed) = (0, 0, 0, 0);
    let algebras = 60;
    for _ in 0..algebras {
        let a = random_monomial(&mut rng, 8, 10);
        for v in 0..a.vertex_count() {
            let oracle = pd(&simple(&a, v), 12);
            let exact = match monomial_pd_exact(&a, v) {
                Ok(r) => r,
                Err(_) => {
                    disagreements += 1;
                    continue;
                }
            };
            match (&oracle, &exact) {
                (PdResult::AtLeast(_), _) => {}
                (PdResult::ExactFinite(x), PdResult::ExactFinite(y)) if x == y => compared += 1,
                (PdResult::Infinite(_), PdResult::Infinite(_)) => compared += 1,
                _ => {
                    compared += 1;
                    disagreements += 1;
                }
            }
            if let PdResult::Infinite(Certificate::ChainCycle(cycle)) = &exact {
                cycles += 1;
                let period = matches!(confirm_chain_cycle(&a, cycle), Some(CycleConfirmation::Period(..)))
                    || matches!(oracle, PdResult::Infinite(Certificate::SyzygyPeriod(..)));
                if !period {
                    unconfirmed += 1;
                }
            }
        }
    }
    verdict(
        disagreements == 0 && unconfirmed == 0,
        format!("{algebras} algebras, {compared} conclusive simples compared, {disagreements} disagreements, {cycles} chain cycles, {unconfirmed} without a syzygy period"),
    )
}

fn gd_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let (mut counterexamples, mut at_most_two) = (0, 0);
    let algebras = 60;
    for _ in 0..algebras {
        let a = random_special_biserial(&mut rng, 6);
        let conditions = gd_conditions(&a).map(|r| r.all_hold()).unwrap_or(false);
        let small = matches!(gldim(&a, 8), PdResult::ExactFinite(d) if d <= 2);
        at_most_two += usize::from(small);
        if conditions != small {
            counterexamples += 1;
        }
    }
    verdict(counterexamples == 0, format!("{algebras} algebras ({at_most_two} with gldim <= 2), {counterexamples} counterexamples"))
}

/// Every τ-tilting module used by the last two criteria: the catalog modules and the
/// results of searches over special biserial algebras.
fn tau_tilting_modules() -> Vec<(String, Vec<Representation>)> {
    let mut out = Vec::new();
    for (id, a, t) in catalog_algebras() {
        out.push((id.clone(), t));
        if recognize_class(&a).is_special_biserial {
            if let Ok(found) = search_tau_tilting_sb(&a, 15) {
                out.extend(found.into_iter().map(|s| (format!("{id} search"), s.summands)));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for i in 0..12 {
        let a = random_special_biserial(&mut rng, 5);
        if let Ok(found) = search_tau_tilting_sb(&a, 4) {
            out.extend(found.into_iter().map(|s| (format!("random SB #{i}"), s.summands)));
        }
    }
    out
}

fn annihilator_paths(modules: &[(String, Vec<Representation>)]) -> Outcome {
    let (mut checked, mut generators, mut bad) = (0, 0, Vec::new());
    for (label, t) in modules {
        let a = t[0].algebra();
        let rec = recognize_class(a);
        if !(rec.is_special_biserial || rec.is_monomial) {
            continue;
        }
        checked += 1;
        let ann = annihilator(&Representation::direct_sum(t).unwrap());
        let Some(paths) = ann.path_generators() else {
            bad.push(format!("{label}: ann T not path-generated"));
            continue;
        };
        for p in paths.iter().filter(|p| p.len() >= 2) {
            generators += 1;
            match classify_annihilator_path(&ann, p) {
                Ok(c) if !matches!(c.verdict, Witness::NotApplicable(_)) => {}
                Ok(_) => bad.push(format!("{label}: {} not applicable", p.display(a.quiver()))),
                Err(e) => bad.push(format!("{label}: {e}")),
            }
        }
    }
    let detail = format!("{checked} modules, {generators} generators of length >= 2 classified, {} problems {:?}", bad.len(), bad);
    verdict(bad.is_empty(), detail)
}

fn change_of_rings() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let (mut covers, mut pds, mut bounds) = (0, 0, 0);
    let mut failures = Vec::new();
    let mut attempts = 0;
    while (covers < 30 || pds < 30 || bounds < 30) && attempts < 400 {
        attempts += 1;
        let a = if attempts % 2 == 0 { random_monomial(&mut rng, 6, 6) } else { random_special_biserial(&mut rng, 5) };
        let Some(j) = random_path_ideal(&mut rng, &a, 2) else { continue };
        let Ok(qp) = quotient_presentation(&a, &j) else { continue };
        let m = random_module(&mut rng, &a);
        let reduced = reduce_by_ideal(&m, &j).0;
        if !reduced.is_zero() {
            match cover_descends(&reduced, &j, &qp) {
                Ok(true) => covers += 1,
                Ok(false) => failures.push("projective cover does not descend".to_string()),
                Err(e) => failures.push(e.to_string()),
            }
        }
        match pd_under_tor_vanishing(&m, &j, &qp, 12) {
            Ok(Some((d, over))) => {
                if over.exact() == Some(d) {
                    pds += 1;
                } else if over.is_conclusive() {
                    failures.push(format!("pd_A M = {d} but pd over A/J is {over}"));
                }
            }
            Ok(None) => {}
            Err(e) => failures.push(e.to_string()),
        }
        let b = nilpotent_bound(&j, &qp, 12);
        match b.holds {
            Some(true) => bounds += 1,
            Some(false) => failures.push(format!("gldim A = {} > {} + {}", b.gldim_a, b.gldim_quotient, b.pd_quotient)),
            None => {}
        }
    }
    verdict(
        failures.is_empty() && covers >= 30 && pds >= 30 && bounds >= 30,
        format!("cover descent {covers}, pd under Tor vanishing {pds}, gldim bound {bounds} instances; failures {failures:?}"),
    )
}

fn tilting_over_quotient(modules: &[(String, Vec<Representation>)]) -> Outcome {
    let mut bad = Vec::new();
    for (label, t) in modules {
        match tilting_over_quotient_check(t, 12) {
            Ok(r) => {
                let pd_ok = matches!(r.pd_over_quotient.exact(), Some(d) if d <= 1);
                if !(pd_ok && r.ext1 == 0 && r.sandwich == Some(true)) {
                    bad.push(format!("{label}: pd {} ext1 {} sandwich {:?} ({} vs {})", r.pd_over_quotient, r.ext1, r.sandwich, r.pd_of_quotient, r.pd_over_algebra));
                }
            }
            Err(e) => bad.push(format!("{label}: {e}")),
        }
    }
    verdict(bad.is_empty(), format!("{} tau-tilting modules, {} problems {:?}", modules.len(), bad.len(), bad))
}

fn ids(prefix: &str, range: std::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|n| format!("{prefix}({n})")).collect()
}

fn main() {
    let start = Instant::now();
    let names = [
        "seven-vertex example reproduction",
        "four-vertex example reproduction",
        "A_n family, n = 3..6",
        "monomial family, n = 4..7",
        "non-special-biserial annihilator and classifications",
        "special biserial gldim 2 example",
        "AIR criterion agrees with the translate",
        "overlap automaton agrees with syzygies",
        "GD1-GD3 iff gldim <= 2",
        "annihilators are path-generated and classified",
        "change of rings",
        "tilting over A/ann T",
    ];
    let outcomes: Vec<Outcome> = std::thread::scope(|s| {
        let modules = s.spawn(|| {
            let t = Instant::now();
            let m = tau_tilting_modules();
            if std::env::var_os("ACCEPTANCE_TIMING").is_some() {
                eprintln!("tau-tilting modules ({}): {:.1}s", m.len(), t.elapsed().as_secs_f64());
            }
            m
        });
        let jobs: Vec<std::thread::ScopedJoinHandle<Outcome>> = vec![
            s.spawn(|| suite_criterion(&["EX1".into()])),
            s.spawn(|| suite_criterion(&["EX2".into()])),
            s.spawn(timed("ex3", || suite_criterion(&ids("EX3", 3..=6)))),
            s.spawn(timed("ex4", || suite_criterion(&ids("EX4", 4..=7)))),
            s.spawn(|| suite_criterion(&["EX5".into()])),
            s.spawn(|| suite_criterion(&["EX6".into()])),
            s.spawn(timed("air", air_equivalence)),
            s.spawn(timed("automaton", monomial_automaton)),
            s.spawn(timed("gd", gd_equivalence)),
        ];
        let cor = s.spawn(timed("change of rings", change_of_rings));
        let modules = modules.join().unwrap();
        let mut out: Vec<Outcome> = jobs.into_iter().map(|h| h.join().unwrap()).collect();
        out.push(timed("annihilators", || annihilator_paths(&modules))());
        out.push(cor.join().unwrap());
        out.push(timed("tilting", || tilting_over_quotient(&modules))());
        out
    });
    let mut unexplained = 0;
    for (i, (name, o)) in names.iter().zip(&outcomes).enumerate() {
        let tag = match (o.pass, o.explained) {
            (true, _) => "PASS",
            (false, true) => "FAIL (recorded deviation)",
            (false, false) => "FAIL",
        };
        println!("criterion {:2} {tag}: {name} ({})", i + 1, o.detail);
        if !o.pass && !o.explained {
            unexplained += 1;
        }
    }
    let elapsed = start.elapsed();
    println!("total {:.1}s", elapsed.as_secs_f64());
    if unexplained > 0 || elapsed.as_secs() >= 60 {
        std::process::exit(1);
    }
}
