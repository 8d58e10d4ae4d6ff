use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::presentations::{is_minimal_relation, Element, Path, Quiver};

use super::ideal::Ideal;

/// How a minimal path `ρ` of `ann T` is explained by the relations of `A`.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// `γρ` lies in `I`.
    ZeroRelation { gamma: Path },
    /// `γρ` is a term of the minimal relation `relation`.
    MinimalRelation { gamma: Path, relation: Element },
    /// `ρ` is shorter than two arrows or a proper subpath already lies in the ideal.
    NotApplicable(String),
}

impl Witness {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::ZeroRelation { .. } => "case I",
            Witness::MinimalRelation { .. } => "case II",
            Witness::NotApplicable(_) => "not applicable",
        }
    }

    /// `case I via γρ`, `case II via <relation>`, or `not applicable`.
    pub fn describe(&self, q: &Quiver, rho: &Path) -> String {
        match self {
            Witness::ZeroRelation { gamma } => {
                format!("case I via {}", gamma.concat(rho).map_or_else(|| "?".into(), |p| p.display(q)))
            }
            Witness::MinimalRelation { relation, .. } => format!("case II via {}", relation.display(q)),
            Witness::NotApplicable(_) => "not applicable".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub verdict: Witness,
    /// Every witness found, in the search order (the verdict is the first).
    pub matches: Vec<Witness>,
}

/// Searches the nonzero paths `γ` ending at `s(ρ)`, shortest first: first for `γρ ∈ I`,
/// then for a minimal relation having `γρ` as a term. For the latter the relation
/// generators are tried before the relation `γρ - nf(γρ)` given by the normal form.
pub fn classify_annihilator_path(ann: &Ideal, rho: &Path) -> Result<Classification> {
    let a = ann.algebra();
    let q = a.quiver();
    if a.is_zero_path(rho) {
        return Err(Error::Precondition(format!("{} is zero in A", rho.display(q))));
    }
    if !ann.contains_path(rho) {
        return Err(Error::Precondition(format!("{} is not in the ideal", rho.display(q))));
    }
    let n = rho.len();
    if n < 2 {
        let w = Witness::NotApplicable(format!("{} has length {n}", rho.display(q)));
        return Ok(Classification { verdict: w.clone(), matches: vec![w] });
    }
    let proper = (0..=n).flat_map(|s| (s..=n).map(move |e| (s, e))).filter(|(s, e)| e - s < n);
    for (s, e) in proper {
        let sub = rho.subpath(q, s, e);
        if ann.contains_path(&sub) {
            let w = Witness::NotApplicable(format!("proper subpath {} lies in the ideal", sub.display(q)));
            return Ok(Classification { verdict: w.clone(), matches: vec![w] });
        }
    }
    let mut zero = Vec::new();
    let mut minimal = Vec::new();
    for gamma in a.nonzero_paths() {
        if gamma.is_trivial() || gamma.target() != rho.source() {
            continue;
        }
        let g_rho = gamma.concat(rho).expect("composable");
        if a.is_zero_path(&g_rho) {
            zero.push(Witness::ZeroRelation { gamma });
            continue;
        }
        let before = minimal.len();
        for r in a.relations() {
            if r.term_count() >= 2 && !r.coefficient(&g_rho).is_zero() {
                minimal.push(Witness::MinimalRelation { gamma: gamma.clone(), relation: r.clone() });
            }
        }
        let nf = a.to_element(&a.reduce_path(&g_rho));
        let single = Element::from_path(g_rho);
        if minimal.len() == before && nf != single {
            let rel = single.add(&nf.scale(&-Q::one()));
            if is_minimal_relation(a, &rel) {
                minimal.push(Witness::MinimalRelation { gamma, relation: rel });
            }
        }
    }
    let mut matches = zero;
    matches.extend(minimal);
    let Some(verdict) = matches.first().cloned() else {
        return Err(Error::Inconsistency(format!(
            "no path γ explains {} by a zero-relation or a minimal relation",
            rho.display(q)
        )));
    };
    Ok(Classification { verdict, matches })
}
