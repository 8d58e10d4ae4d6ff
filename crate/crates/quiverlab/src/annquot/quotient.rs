use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::presentations::{BoundQuiver, Element, Path, Quiver};
use crate::representations::{Morphism, Representation};

use super::annihilator::extract_path_generators;
use super::ideal::Ideal;

/// `A/J` as a bound quiver algebra: the arrows lying in `J` are removed and the
/// relations are the images of those of `A` together with the path generators of `J`.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    pub quotient: Arc<BoundQuiver>,
    pub arrows_dropped: Vec<String>,
    pub induced_generators: Vec<Element>,
}

fn translate(old: &Quiver, new: &Quiver, p: &Path) -> Option<Path> {
    if p.is_trivial() {
        return Some(Path::trivial(p.source()));
    }
    let arrows: Option<Vec<usize>> =
        p.arrows().iter().map(|&x| new.arrow_index(&old.arrow(x).name).ok()).collect();
    Path::from_arrows(new, arrows?).ok()
}

pub fn quotient_presentation(a: &Arc<BoundQuiver>, j: &Ideal) -> Result<QuotientPresentation> {
    if !Arc::ptr_eq(a, j.algebra()) {
        return Err(Error::Precondition("ideal belongs to another algebra".into()));
    }
    if !j.is_nilpotent() {
        return Err(Error::Precondition("ideal is not nilpotent".into()));
    }
    let gens = match j.path_generators() {
        Some(g) => g.to_vec(),
        None => extract_path_generators(j)
            .ok_or_else(|| Error::Precondition("ideal is not generated by paths".into()))?,
    };
    let q = a.quiver();
    let dropped: Vec<usize> = (0..q.arrow_count()).filter(|&x| j.contains_path(&Path::arrow(q, x))).collect();
    let kept: Vec<(String, usize, usize)> = q
        .arrows()
        .iter()
        .enumerate()
        .filter(|(i, _)| !dropped.contains(i))
        .map(|(_, ar)| (ar.name.clone(), ar.source, ar.target))
        .collect();
    let nq = Quiver::new(q.vertices().to_vec(), kept)?;
    let mut rels = Vec::new();
    for g in a.relations() {
        let image = Element::from_terms(
            g.terms().filter_map(|(p, c)| translate(q, &nq, p).map(|np| (c.clone(), np))),
        );
        if !image.is_zero() {
            rels.push(image);
        }
    }
    for p in &gens {
        if p.len() >= 2 {
            if let Some(np) = translate(q, &nq, p) {
                rels.push(Element::from_path(np));
            }
        }
    }
    let quotient = BoundQuiver::new(nq, rels, a.lmax())?;
    if quotient.dim() + j.dim() != a.dim() {
        return Err(Error::Inconsistency(format!(
            "quotient presentation has dimension {} but dim A - dim J = {}",
            quotient.dim(),
            a.dim() - j.dim()
        )));
    }
    let induced_generators = quotient.relations().to_vec();
    Ok(QuotientPresentation {
        quotient: Arc::new(quotient),
        arrows_dropped: dropped.iter().map(|&x| q.arrow(x).name.clone()).collect(),
        induced_generators,
    })
}

/// Per-vertex column bases of `M J`, the span of the images of the elements of `J`.
pub fn module_times_ideal(m: &Representation, j: &Ideal) -> Vec<Matrix> {
    let a = m.algebra();
    let n = a.vertex_count();
    let mut cols: Vec<Vec<Matrix>> = vec![Vec::new(); n];
    for x in j.basis() {
        let p = a.basis_path(x[0].0);
        let (s, t) = (p.source(), p.target());
        if m.dim_at(s) > 0 && m.dim_at(t) > 0 {
            cols[t].push(m.block_action(s, t, x));
        }
    }
    (0..n)
        .map(|w| {
            if cols[w].is_empty() {
                Matrix::zeros(m.dim_at(w), 0)
            } else {
                let refs: Vec<&Matrix> = cols[w].iter().collect();
                Matrix::hstack(&refs).column_space()
            }
        })
        .collect()
}

/// `M/MJ` as an `A`-module with its projection from `M`.
pub fn reduce_by_ideal(m: &Representation, j: &Ideal) -> (Representation, Morphism) {
    m.quotient(&module_times_ideal(m, j)).expect("M J is a submodule")
}

/// The same vertex spaces and arrow maps seen over `A/J`; the dropped arrows must act
/// by zero.
pub fn restrict_to_quotient(m: &Representation, qp: &QuotientPresentation) -> Result<Representation> {
    let old = m.algebra().quiver();
    let b = &qp.quotient;
    let nq = b.quiver();
    for name in &qp.arrows_dropped {
        if !m.map(old.arrow_index(name)?).is_zero() {
            return Err(Error::Precondition(format!("arrow `{name}` of the ideal acts nontrivially")));
        }
    }
    let maps: Vec<Matrix> =
        nq.arrows().iter().map(|ar| Ok(m.map(old.arrow_index(&ar.name)?).clone())).collect::<Result<_>>()?;
    Representation::new(b.clone(), m.dims().to_vec(), maps)
}

/// `A/J` as a right `A`-module: `⊕_v P(v) / P(v) J`.
pub fn quotient_module(a: &Arc<BoundQuiver>, j: &Ideal) -> Vec<Representation> {
    (0..a.vertex_count())
        .map(|v| reduce_by_ideal(&crate::representations::projective(a, v), j).0)
        .collect()
}
