use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::presentations::{recognize_class, zero_relations, BoundQuiver, Path, Quiver};

/// How "the start of a binomial relation lies in another binomial relation" is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StartPointReading {
    /// The start vertex is any vertex visited by one of the other relation's paths.
    AnyVertex,
    /// The start vertex is an interior vertex of one of the other relation's paths.
    InteriorVertex,
}

/// The reading the checker uses by default (chosen by agreement with `gldim <= 2` on
/// randomized special biserial algebras).
pub const DEFAULT_READING: StartPointReading = StartPointReading::InteriorVertex;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GdReport {
    pub gd1: bool,
    pub gd2: bool,
    pub gd3: bool,
    pub gd1_witnesses: Vec<String>,
    pub gd2_witnesses: Vec<String>,
    pub gd3_witnesses: Vec<String>,
}

impl GdReport {
    pub fn all_hold(&self) -> bool {
        self.gd1 && self.gd2 && self.gd3
    }
}

fn pair_text(q: &Quiver, (p, r): &(Path, Path)) -> String {
    format!("({}, {})", p.display(q), r.display(q))
}

pub fn gd_conditions(a: &BoundQuiver) -> Result<GdReport> {
    gd_conditions_with(a, DEFAULT_READING)
}

pub fn gd_conditions_with(a: &BoundQuiver, reading: StartPointReading) -> Result<GdReport> {
    let rec = recognize_class(a);
    if !rec.is_special_biserial {
        return Err(Error::Precondition(format!("algebra is not special biserial: {}", rec.violations.join("; "))));
    }
    let q = a.quiver();
    let pairs = rec.binomial_pairs;
    let mut report = GdReport::default();

    for (i, b) in pairs.iter().enumerate() {
        let start = b.0.source();
        for (j, other) in pairs.iter().enumerate() {
            if i == j {
                continue;
            }
            let hit = [&other.0, &other.1].iter().any(|p| {
                let vs = p.vertices(q);
                match reading {
                    StartPointReading::AnyVertex => vs.contains(&start),
                    StartPointReading::InteriorVertex => vs[1..vs.len() - 1].contains(&start),
                }
            });
            if hit {
                report.gd1_witnesses.push(format!(
                    "start of {} lies in {}",
                    pair_text(q, b),
                    pair_text(q, other)
                ));
            }
        }
    }

    let zeros = zero_relations(a);
    let zero_set: HashSet<Vec<usize>> = zeros.iter().map(|p| p.arrows().to_vec()).collect();
    let binomial_paths: Vec<&Path> = pairs.iter().flat_map(|(p, r)| [p, r]).collect();
    for z1 in &zeros {
        for z2 in &zeros {
            let (x, y) = (z1.arrows(), z2.arrows());
            for k in 1..x.len().min(y.len()) {
                if x[x.len() - k..] != y[..k] {
                    continue;
                }
                let p2 = z1.subpath(q, x.len() - k, x.len());
                if binomial_paths.iter().any(|b| p2.contains(q, b)) {
                    continue;
                }
                let mut w: Vec<usize> = x.to_vec();
                w.extend_from_slice(&y[k..]);
                let expected = [(0, x.len()), (x.len() - k, w.len())];
                let mut contained = Vec::new();
                for s in 0..w.len() {
                    for e in s + 1..=w.len() {
                        if zero_set.contains(&w[s..e]) {
                            contained.push((s, e));
                        }
                    }
                }
                if contained.len() == 2 && expected.iter().all(|iv| contained.contains(iv)) {
                    let path = Path::from_arrows(q, w).expect("overlapping paths compose");
                    report.gd2_witnesses.push(format!(
                        "{} with zero-relations {} and {}",
                        path.display(q),
                        z1.display(q),
                        z2.display(q)
                    ));
                }
            }
        }
    }

    let nonzero = a.nonzero_paths();
    for b in &pairs {
        let (big_p, big_q) = b;
        let (lp, lq) = (big_p.len(), big_q.len());
        let alpha_p = big_p.subpath(q, 0, lp - 1);
        let gamma_q = big_q.subpath(q, 0, lq - 1);
        let p_beta = big_p.subpath(q, 1, lp);
        let q_delta = big_q.subpath(q, 1, lq);
        for u in nonzero.iter().filter(|u| u.target() == big_p.source()) {
            let left = u.concat(&alpha_p).expect("composable");
            let right = u.concat(&gamma_q).expect("composable");
            if a.is_zero_path(&left) && a.is_zero_path(&right) {
                report.gd3_witnesses.push(format!("u = {} kills both sides of {}", u.display(q), pair_text(q, b)));
            }
        }
        for v in nonzero.iter().filter(|v| v.source() == big_p.target()) {
            let left = p_beta.concat(v).expect("composable");
            let right = q_delta.concat(v).expect("composable");
            if a.is_zero_path(&left) && a.is_zero_path(&right) {
                report.gd3_witnesses.push(format!("v = {} kills both sides of {}", v.display(q), pair_text(q, b)));
            }
        }
    }
    report.gd1 = report.gd1_witnesses.is_empty();
    report.gd2 = report.gd2_witnesses.is_empty();
    report.gd3 = report.gd3_witnesses.is_empty();
    Ok(report)
}
