use std::fmt;
use std::sync::Arc;

use crate::presentations::{BoundQuiver, Path, Quiver};
use crate::representations::{is_isomorphic, simple, Representation};

use super::resolution::syzygy;

pub const DEFAULT_CUTOFF: usize = 12;

/// Syzygies larger than this many dimensions stop the iteration with `AtLeast`.
const SYZYGY_SIZE_LIMIT: usize = 160;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainState {
    pub relation: Path,
    pub cut: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// A reachable cycle of the overlap automaton.
    ChainCycle(Vec<ChainState>),
    /// `Ω^i ≅ Ω^j` with `i < j`, both nonzero.
    SyzygyPeriod(usize, usize),
    /// Infinite global dimension of `End(T)` read off from `A / ann T`.
    ViaQuotient(Box<Certificate>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PdResult {
    ExactFinite(usize),
    Infinite(Certificate),
    AtLeast(usize),
}

impl PdResult {
    pub fn exact(&self) -> Option<usize> {
        match self {
            PdResult::ExactFinite(d) => Some(*d),
            _ => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, PdResult::Infinite(_))
    }

    pub fn is_conclusive(&self) -> bool {
        !matches!(self, PdResult::AtLeast(_))
    }

    /// Combination used for suprema: infinite wins, then lower bounds, then exact values.
    pub fn sup(self, other: PdResult) -> PdResult {
        use PdResult::*;
        match (self, other) {
            (Infinite(c), _) | (_, Infinite(c)) => Infinite(c),
            (AtLeast(a), AtLeast(b)) => AtLeast(a.max(b)),
            (AtLeast(a), ExactFinite(b)) | (ExactFinite(b), AtLeast(a)) => AtLeast(a.max(b)),
            (ExactFinite(a), ExactFinite(b)) => ExactFinite(a.max(b)),
        }
    }

    pub fn describe(&self, q: &Quiver) -> String {
        match self {
            PdResult::ExactFinite(d) => format!("{d}"),
            PdResult::AtLeast(d) => format!(">= {d} (inconclusive)"),
            PdResult::Infinite(c) => format!("infinite ({})", c.describe(q)),
        }
    }
}

impl Certificate {
    pub fn describe(&self, q: &Quiver) -> String {
        match self {
            Certificate::SyzygyPeriod(i, j) => format!("syzygy period: Ω^{i} ≅ Ω^{j}"),
            Certificate::ChainCycle(states) => {
                let s: Vec<String> =
                    states.iter().map(|st| format!("({}, {})", st.relation.display(q), st.cut)).collect();
                format!("overlap cycle {}", s.join(" -> "))
            }
            Certificate::ViaQuotient(c) => format!("via A/ann T: {}", c.describe(q)),
        }
    }
}

impl fmt::Display for PdResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PdResult::ExactFinite(d) => write!(f, "{d}"),
            PdResult::AtLeast(d) => write!(f, ">= {d}"),
            PdResult::Infinite(_) => write!(f, "infinite"),
        }
    }
}

/// Projective dimension by iterated minimal syzygies. `ExactFinite(d)` once
/// `Ω^{d+1} = 0`; `Infinite` when two nonzero syzygies are isomorphic; otherwise
/// `AtLeast(d)` where `Ω^d` is known to be nonzero.
pub fn pd(m: &Representation, cutoff: usize) -> PdResult {
    let cutoff = cutoff.max(1);
    if m.is_zero() {
        return PdResult::ExactFinite(0);
    }
    let mut seen: Vec<Representation> = vec![m.clone()];
    for d in 0..cutoff {
        let next = syzygy(&seen[d]);
        if next.is_zero() {
            return PdResult::ExactFinite(d);
        }
        if let Some(i) = seen.iter().position(|s| s.dims() == next.dims() && is_isomorphic(s, &next)) {
            return PdResult::Infinite(Certificate::SyzygyPeriod(i, d + 1));
        }
        if next.total_dim() > SYZYGY_SIZE_LIMIT {
            return PdResult::AtLeast(d + 1);
        }
        seen.push(next);
    }
    PdResult::AtLeast(cutoff)
}

/// Per-vertex projective dimensions of the simples.
pub fn simple_pds(a: &Arc<BoundQuiver>, cutoff: usize) -> Vec<PdResult> {
    (0..a.vertex_count()).map(|v| pd(&simple(a, v), cutoff)).collect()
}

pub fn gldim(a: &Arc<BoundQuiver>, cutoff: usize) -> PdResult {
    simple_pds(a, cutoff).into_iter().fold(PdResult::ExactFinite(0), PdResult::sup)
}

/// Projective dimension of a direct sum: the supremum over the summands.
pub fn pd_of_sum(parts: &[Representation], cutoff: usize) -> PdResult {
    parts.iter().map(|m| pd(m, cutoff)).fold(PdResult::ExactFinite(0), PdResult::sup)
}
