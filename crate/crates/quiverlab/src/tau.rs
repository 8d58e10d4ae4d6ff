//! The Nakayama functor on presentations, the translate `τ`, τ-rigidity and the search
//! for τ-tilting modules over special biserial algebras.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::homological::{minimal_presentation, ElementMatrix, MinimalPresentation};
use crate::linalg::Matrix;
use crate::presentations::{classify_relations, recognize_class, BoundQuiver, Path};
use crate::representations::{
    hom_space, injective, is_indecomposable, is_isomorphic, projective, string_module, Letter, Representation,
    StringWord,
};

/// Caps on the string enumeration; exceeding either means the algebra has bands or
/// is not a string algebra.
const STRING_COUNT_LIMIT: usize = 20_000;

fn injective_sum(a: &Arc<BoundQuiver>, vertices: &[usize]) -> Representation {
    if vertices.is_empty() {
        return Representation::zero(a.clone());
    }
    let parts: Vec<Representation> = vertices.iter().map(|&v| injective(a, v)).collect();
    Representation::direct_sum(&parts).expect("same algebra")
}

/// `ν(p): ⊕ I(u_l) -> ⊕ I(v_k)` for `p: ⊕ P(u_l) -> ⊕ P(v_k)`. At vertex `w` the block
/// `(k, l)` is the transpose of right multiplication by `x_{kl}` from `e_w A e_{v_k}`
/// to `e_w A e_{u_l}`.
pub fn nakayama_blocks(a: &BoundQuiver, p: &ElementMatrix) -> Vec<Matrix> {
    (0..a.vertex_count())
        .map(|w| {
            let row_sizes: Vec<usize> = p.rows.iter().map(|&v| a.block(w, v).len()).collect();
            let col_sizes: Vec<usize> = p.cols.iter().map(|&u| a.block(w, u).len()).collect();
            let mut m = Matrix::zeros(row_sizes.iter().sum(), col_sizes.iter().sum());
            let mut r0 = 0;
            for (k, &v) in p.rows.iter().enumerate() {
                let mut c0 = 0;
                for (l, &u) in p.cols.iter().enumerate() {
                    let x = p.entry(k, l);
                    if !x.is_empty() {
                        for (i, &b) in a.block(w, v).iter().enumerate() {
                            for (j, c) in a.mul(&vec![(b, num_traits::One::one())], x) {
                                debug_assert_eq!(a.basis_path(j).target(), u);
                                m[(r0 + i, c0 + a.position_in_block(j))] = c;
                            }
                        }
                    }
                    c0 += col_sizes[l];
                }
                r0 += row_sizes[k];
            }
            m
        })
        .collect()
}

/// `τM = ker(ν P1 -> ν P0)` from a minimal presentation of `M`.
pub fn ar_translate_from(pres: &MinimalPresentation, a: &Arc<BoundQuiver>) -> Representation {
    if pres.p1.is_empty() {
        return Representation::zero(a.clone());
    }
    let source = injective_sum(a, &pres.p1);
    let blocks = nakayama_blocks(a, &pres.map);
    let kernel: Vec<Matrix> = blocks.iter().map(Matrix::kernel_matrix).collect();
    source.subrepresentation(&kernel).expect("kernel of a morphism is a submodule").0
}

pub fn ar_translate(m: &Representation) -> Representation {
    if m.is_zero() {
        return m.clone();
    }
    ar_translate_from(&minimal_presentation(m), m.algebra())
}

/// The matrix of `Hom(p, Y): ⊕ Y_{v_k} -> ⊕ Y_{u_l}`, identifying `Hom(P(v), Y)` with `Y_v`.
pub fn presentation_hom_matrix(y: &Representation, p: &ElementMatrix) -> Matrix {
    let rows: Vec<usize> = p.cols.iter().map(|&u| y.dim_at(u)).collect();
    let cols: Vec<usize> = p.rows.iter().map(|&v| y.dim_at(v)).collect();
    let mut m = Matrix::zeros(rows.iter().sum(), cols.iter().sum());
    let mut r0 = 0;
    for (l, &u) in p.cols.iter().enumerate() {
        let mut c0 = 0;
        for (k, &v) in p.rows.iter().enumerate() {
            let x = p.entry(k, l);
            if !x.is_empty() && rows[l] > 0 && cols[k] > 0 {
                m.set_block(r0, c0, &y.block_action(v, u, x));
            }
            c0 += cols[k];
        }
        r0 += rows[l];
    }
    m
}

/// Whether `Hom(p, Y)` is surjective for the presentation `p` (the criterion side).
pub fn presentation_hom_surjective(y: &Representation, p: &ElementMatrix) -> bool {
    let m = presentation_hom_matrix(y, p);
    m.rank() == m.rows()
}

/// A module with its minimal presentation and translate, computed once.
#[derive(Clone, Debug)]
pub struct Prepared {
    pub module: Representation,
    pub presentation: MinimalPresentation,
    pub tau: Representation,
}

impl Prepared {
    pub fn new(m: &Representation) -> Prepared {
        let presentation = minimal_presentation(m);
        let tau = ar_translate_from(&presentation, m.algebra());
        Prepared { module: m.clone(), presentation, tau }
    }
}

/// Both answers to "is `Hom(Y, τX) = 0`".
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TauHomCheck {
    pub via_translate: bool,
    pub via_presentation: bool,
}

pub fn tau_hom_check(y: &Representation, x: &Prepared) -> TauHomCheck {
    TauHomCheck {
        via_translate: hom_space(y, &x.tau).dim() == 0,
        via_presentation: presentation_hom_surjective(y, &x.presentation.map),
    }
}

/// `Hom(Y, τX) = 0`, decided twice; disagreement is an error.
pub fn tau_hom_vanishes(y: &Representation, x: &Representation) -> Result<bool> {
    if !Arc::ptr_eq(y.algebra(), x.algebra()) {
        return Err(Error::Precondition("modules over different algebras".into()));
    }
    agree(tau_hom_check(y, &Prepared::new(x)))
}

fn agree(c: TauHomCheck) -> Result<bool> {
    if c.via_translate != c.via_presentation {
        return Err(Error::Inconsistency(format!(
            "Hom(Y, τX) = 0 is {} but surjectivity of Hom(p, Y) is {}",
            c.via_translate, c.via_presentation
        )));
    }
    Ok(c.via_translate)
}

#[derive(Clone, Debug)]
pub struct TauTiltingReport {
    pub summands: Vec<Representation>,
    pub pairwise_non_iso: bool,
    pub each_indecomposable: bool,
    pub rigid: bool,
    pub sincere: bool,
    pub count: usize,
    pub required: usize,
    pub verdict: bool,
    /// Human-readable reasons for a negative verdict.
    pub failures: Vec<String>,
}

pub fn is_tau_tilting(summands: &[Representation]) -> Result<TauTiltingReport> {
    let Some(first) = summands.first() else {
        return Err(Error::Precondition("empty summand list".into()));
    };
    let a = first.algebra().clone();
    if summands.iter().any(|m| !Arc::ptr_eq(m.algebra(), &a)) {
        return Err(Error::Precondition("summands over different algebras".into()));
    }
    let mut failures = Vec::new();
    let mut each_indecomposable = true;
    for (i, m) in summands.iter().enumerate() {
        if m.is_zero() || !is_indecomposable(m)? {
            each_indecomposable = false;
            failures.push(format!("summand {} is not indecomposable", i + 1));
        }
    }
    let mut pairwise_non_iso = true;
    for i in 0..summands.len() {
        for j in i + 1..summands.len() {
            if is_isomorphic(&summands[i], &summands[j]) {
                pairwise_non_iso = false;
                failures.push(format!("summands {} and {} are isomorphic", i + 1, j + 1));
            }
        }
    }
    let prepared: Vec<Prepared> = summands.iter().map(Prepared::new).collect();
    let mut rigid = true;
    for (i, y) in summands.iter().enumerate() {
        for (j, x) in prepared.iter().enumerate() {
            if !agree(tau_hom_check(y, x))? {
                rigid = false;
                failures.push(format!("Hom(T{}, τT{}) != 0", i + 1, j + 1));
            }
        }
    }
    let sum = Representation::direct_sum(summands)?;
    let sincere = sum.is_sincere();
    let count = summands.len();
    let required = a.vertex_count();
    if count != required {
        failures.push(format!("{count} summands but the algebra has {required} simples"));
    }
    let verdict = pairwise_non_iso && each_indecomposable && rigid && count == required;
    Ok(TauTiltingReport {
        summands: summands.to_vec(),
        pairwise_non_iso,
        each_indecomposable,
        rigid,
        sincere,
        count,
        required,
        verdict,
        failures,
    })
}

/// All strings of a special biserial algebra, one per inverse pair, shortest first.
pub fn enumerate_strings(a: &BoundQuiver) -> Result<Vec<StringWord>> {
    let q = a.quiver();
    let binomial: Vec<Path> =
        classify_relations(a).into_iter().filter_map(|c| c.binomial).flat_map(|(p, r)| [p, r]).collect();
    let valid = |w: &StringWord| {
        w.is_reduced()
            && w.runs(q).iter().all(|run| !a.is_zero_path(run) && !binomial.iter().any(|b| run.contains(q, b)))
    };
    // A closed word with letters of both kinds whose square is a string: every run of a
    // power already occurs in the square, so all powers are strings.
    let repeats_forever = |w: &StringWord| {
        let letters = w.letters();
        let mixed = letters.iter().any(|l| matches!(l, Letter::Direct(_)))
            && letters.iter().any(|l| matches!(l, Letter::Inverse(_)));
        mixed
            && letters[0].start(q) == letters[letters.len() - 1].end(q)
            && StringWord::new(q, [letters, letters].concat()).is_ok_and(|sq| valid(&sq))
    };
    let mut all: Vec<StringWord> = (0..q.vertex_count()).map(StringWord::trivial).collect();
    let mut frontier: Vec<StringWord> = Vec::new();
    for v in 0..q.vertex_count() {
        for &ar in q.out_arrows(v) {
            frontier.push(StringWord::new(q, vec![Letter::Direct(ar)])?);
        }
        for &ar in q.in_arrows(v) {
            frontier.push(StringWord::new(q, vec![Letter::Inverse(ar)])?);
        }
    }
    let mut seen: HashSet<Vec<Letter>> = HashSet::new();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in frontier {
            if !valid(&w) {
                continue;
            }
            if repeats_forever(&w) {
                return Err(Error::Precondition(format!("the algebra has a band through {}", w.display(q))));
            }
            let canon = w.canonical(q);
            if seen.insert(canon.letters().to_vec()) {
                all.push(canon);
                if all.len() > STRING_COUNT_LIMIT {
                    return Err(Error::Precondition(
                        "string enumeration does not terminate (the algebra has bands or is not special biserial)"
                            .into(),
                    ));
                }
            }
            let end = w.letters().last().expect("nonempty").end(q);
            let mut ext: Vec<Letter> = q.out_arrows(end).iter().map(|&x| Letter::Direct(x)).collect();
            ext.extend(q.in_arrows(end).iter().map(|&x| Letter::Inverse(x)));
            for l in ext {
                let mut letters = w.letters().to_vec();
                letters.push(l);
                next.push(StringWord::new(q, letters)?);
            }
        }
        frontier = next;
    }
    Ok(all)
}

/// A candidate summand for the search: a string module or a projective that is not one.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub label: String,
    pub prepared: Prepared,
}

/// String modules plus the indecomposable projectives that are not string modules,
/// ordered by dimension and then label.
pub fn candidate_pool(a: &Arc<BoundQuiver>) -> Result<Vec<Candidate>> {
    let rec = recognize_class(a);
    if !rec.is_special_biserial {
        return Err(Error::Precondition(format!("algebra is not special biserial: {}", rec.violations.join("; "))));
    }
    let q = a.quiver();
    let mut pool: Vec<(String, Representation)> = Vec::new();
    for w in enumerate_strings(a)? {
        pool.push((w.display(q), string_module(a, &w)?));
    }
    for v in 0..q.vertex_count() {
        let p = projective(a, v);
        if !pool.iter().any(|(_, m)| m.dims() == p.dims() && is_isomorphic(m, &p)) {
            pool.push((format!("P({})", q.vertex_name(v)), p));
        }
    }
    pool.sort_by(|x, y| (x.1.total_dim(), &x.0).cmp(&(y.1.total_dim(), &y.0)));
    Ok(pool.into_iter().map(|(label, m)| Candidate { label, prepared: Prepared::new(&m) }).collect())
}

#[derive(Clone, Debug)]
pub struct TauTiltingSet {
    pub labels: Vec<String>,
    pub summands: Vec<Representation>,
}

/// Every τ-tilting module of a representation-finite special biserial algebra (up to
/// `limit` of them), as cliques of size `|Q_0|` in the compatibility graph of τ-rigid
/// candidates.
pub fn search_tau_tilting_sb(a: &Arc<BoundQuiver>, limit: usize) -> Result<Vec<TauTiltingSet>> {
    let pool = candidate_pool(a)?;
    let rigid: Vec<&Candidate> = pool
        .iter()
        .filter(|c| presentation_hom_surjective(&c.prepared.module, &c.prepared.presentation.map))
        .collect();
    let n = rigid.len();
    let mut compatible = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (&rigid[i].prepared, &rigid[j].prepared);
            let ok = presentation_hom_surjective(&x.module, &y.presentation.map)
                && presentation_hom_surjective(&y.module, &x.presentation.map);
            compatible[i][j] = ok;
            compatible[j][i] = ok;
        }
    }
    let target = a.vertex_count();
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_clique(&compatible, target, 0, &mut current, &mut out, limit);
    Ok(out
        .into_iter()
        .map(|idx| TauTiltingSet {
            labels: idx.iter().map(|&i| rigid[i].label.clone()).collect(),
            summands: idx.iter().map(|&i| rigid[i].prepared.module.clone()).collect(),
        })
        .collect())
}

fn extend_clique(
    adj: &[Vec<bool>],
    target: usize,
    start: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    if current.len() == target {
        out.push(current.clone());
        return;
    }
    let n = adj.len();
    for c in start..n {
        if current.len() + (n - c) < target {
            return;
        }
        if current.iter().all(|&x| adj[x][c]) {
            current.push(c);
            extend_clique(adj, target, c + 1, current, out, limit);
            current.pop();
            if out.len() >= limit {
                return;
            }
        }
    }
}
