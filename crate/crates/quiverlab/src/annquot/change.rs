//! Change of rings along `A -> A/J` for a nilpotent ideal `J`.

use crate::error::Result;
use crate::homological::{global_dimension, pd, pd_of_sum, projective_cover, projective_sum, tor_quotient_dims, PdResult};
use crate::representations::{is_isomorphic, Representation};

use super::ideal::Ideal;
use super::quotient::{quotient_module, reduce_by_ideal, restrict_to_quotient, QuotientPresentation};

/// For `M` with `MJ = 0`: the `A`-projective cover `P -> M` reduces to the
/// `A/J`-projective cover `P/PJ -> M`.
pub fn cover_descends(m: &Representation, j: &Ideal, qp: &QuotientPresentation) -> Result<bool> {
    let over_quotient = restrict_to_quotient(m, qp)?;
    let cover = projective_cover(m);
    let mut upstairs = cover.vertices.clone();
    let mut downstairs = projective_cover(&over_quotient).vertices;
    upstairs.sort_unstable();
    downstairs.sort_unstable();
    if upstairs != downstairs {
        return Ok(false);
    }
    let reduced = restrict_to_quotient(&reduce_by_ideal(&cover.module, j).0, qp)?;
    Ok(is_isomorphic(&reduced, &projective_sum(&qp.quotient, &cover.vertices)))
}

/// `pd_A M` and `pd_{A/J}(M/MJ)` when `pd_A M` is exact and `Tor_i^A(M, A/J)` vanishes
/// for `i >= 1`; `None` when either condition fails.
pub fn pd_under_tor_vanishing(
    m: &Representation,
    j: &Ideal,
    qp: &QuotientPresentation,
    cutoff: usize,
) -> Result<Option<(usize, PdResult)>> {
    let Some(d) = pd(m, cutoff).exact() else { return Ok(None) };
    for i in 1..=d {
        if tor_quotient_dims(m, j, i)? != 0 {
            return Ok(None);
        }
    }
    let reduced = restrict_to_quotient(&reduce_by_ideal(m, j).0, qp)?;
    Ok(Some((d, pd(&reduced, cutoff))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentBound {
    pub gldim_a: PdResult,
    pub gldim_quotient: PdResult,
    pub pd_quotient: PdResult,
    /// `gldim A <= gldim(A/J) + pd_A(A/J)`, or `None` when a dimension is not conclusive.
    pub holds: Option<bool>,
}

pub fn nilpotent_bound(j: &Ideal, qp: &QuotientPresentation, cutoff: usize) -> NilpotentBound {
    let a = j.algebra();
    let gldim_a = global_dimension(a, cutoff);
    let gldim_quotient = global_dimension(&qp.quotient, cutoff);
    let pd_quotient = pd_of_sum(&quotient_module(a, j), cutoff);
    let holds = match (&gldim_a, &gldim_quotient, &pd_quotient) {
        (PdResult::AtLeast(_), _, _) | (_, PdResult::AtLeast(_), _) | (_, _, PdResult::AtLeast(_)) => None,
        (_, PdResult::Infinite(_), _) | (_, _, PdResult::Infinite(_)) => Some(true),
        (PdResult::Infinite(_), _, _) => Some(false),
        (PdResult::ExactFinite(g), PdResult::ExactFinite(h), PdResult::ExactFinite(p)) => Some(*g <= h + p),
    };
    NilpotentBound { gldim_a, gldim_quotient, pd_quotient, holds }
}
