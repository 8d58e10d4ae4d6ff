use crate::error::{Error, Result};
use crate::homological::{minimal_presentation, pd, pd_of_sum, PdResult};
use crate::representations::Representation;
use crate::tau::{is_tau_tilting, presentation_hom_matrix};

use super::annihilator::annihilator;
use super::ideal::Ideal;
use super::quotient::{quotient_module, quotient_presentation, restrict_to_quotient, QuotientPresentation};

/// `T` seen over `A/ann T`, where it should be a classical tilting module.
#[derive(Clone, Debug)]
pub struct QuotientTiltingReport {
    pub ann: Ideal,
    pub presentation: QuotientPresentation,
    pub restricted: Vec<Representation>,
    /// `pd_{A/ann T} T`.
    pub pd_over_quotient: PdResult,
    /// `dim Ext^1_{A/ann T}(T, T)`.
    pub ext1: usize,
    pub summand_count: usize,
    pub quotient_rank: usize,
    /// `pd_A(A/ann T)`.
    pub pd_of_quotient: PdResult,
    /// `pd_A T`.
    pub pd_over_algebra: PdResult,
    /// `pd_A(A/ann T) <= pd_A T <= pd_A(A/ann T) + 1`; infinite dimensions compare as equal, `None` if undecided.
    pub sandwich: Option<bool>,
    pub tilting: bool,
}

/// `dim Ext^1(X, Y)` as the cokernel of `Hom(P0, Y) -> Hom(P1, Y)` for a minimal
/// presentation of `X`.
pub fn ext1_dim(x: &Representation, y: &Representation) -> usize {
    let p = minimal_presentation(x);
    let m = presentation_hom_matrix(y, &p.map);
    m.rows() - m.rank()
}

/// `q <= t <= q + 1` where infinite dimensions compare as equal; `None` when a lower
/// bound leaves the answer open.
fn sandwich_holds(q: &PdResult, t: &PdResult) -> Option<bool> {
    use PdResult::*;
    match (q, t) {
        (ExactFinite(q), ExactFinite(t)) => Some(q <= t && *t <= q + 1),
        (Infinite(_), Infinite(_)) => Some(true),
        (ExactFinite(_), Infinite(_)) | (Infinite(_), ExactFinite(_)) => Some(false),
        (ExactFinite(q), AtLeast(t)) if *t > q + 1 => Some(false),
        (AtLeast(q), ExactFinite(t)) if q > t => Some(false),
        _ => None,
    }
}

pub fn tilting_over_quotient_check(summands: &[Representation], cutoff: usize) -> Result<QuotientTiltingReport> {
    let report = is_tau_tilting(summands)?;
    if !report.verdict {
        return Err(Error::Precondition(format!("not τ-tilting: {}", report.failures.join("; "))));
    }
    let a = summands[0].algebra();
    let t = Representation::direct_sum(summands)?;
    let ann = annihilator(&t);
    let presentation = quotient_presentation(a, &ann)?;
    let restricted: Vec<Representation> =
        summands.iter().map(|m| restrict_to_quotient(m, &presentation)).collect::<Result<_>>()?;
    let rt = Representation::direct_sum(&restricted)?;
    let pd_over_quotient = pd(&rt, cutoff);
    let ext1 = ext1_dim(&rt, &rt);
    let pd_of_quotient = pd_of_sum(&quotient_module(a, &ann), cutoff);
    let pd_over_algebra = pd_of_sum(summands, cutoff);
    let sandwich = sandwich_holds(&pd_of_quotient, &pd_over_algebra);
    let quotient_rank = presentation.quotient.vertex_count();
    let tilting = matches!(pd_over_quotient, PdResult::ExactFinite(d) if d <= 1)
        && ext1 == 0
        && summands.len() == quotient_rank;
    Ok(QuotientTiltingReport {
        ann,
        presentation,
        restricted,
        pd_over_quotient,
        ext1,
        summand_count: summands.len(),
        quotient_rank,
        pd_of_quotient,
        pd_over_algebra,
        sandwich,
        tilting,
    })
}
