//! `B = End(T)` as a bound quiver algebra, its global dimension, and the inequalities
//! relating `gldim A`, `gldim B` and `A / ann T`.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::annquot::{annihilator, quotient_module, quotient_presentation, tilting_over_quotient_check};
use crate::error::{Error, Result};
use crate::homological::{gldim, global_dimension, pd_of_sum, Certificate, PdResult};
use crate::linalg::{dense_to_sparse, sparse_to_dense, Echelon, Matrix, SVec, Q};
use crate::presentations::{recognize_class, BoundQuiver, Element, Path, Quiver, DEFAULT_LMAX};
use crate::representations::{hom_space, is_indecomposable, is_isomorphic, trace_gram, HomBasis, Morphism, Representation};

/// Reads coordinates of morphisms in a fixed `Hom` basis.
#[derive(Clone, Debug)]
struct Coordinates {
    rows: Vec<usize>,
    inverse: Matrix,
}

fn flatten(f: &Morphism) -> Vec<Q> {
    f.blocks.iter().flat_map(|b| (0..b.rows()).flat_map(move |r| (0..b.cols()).map(move |c| b[(r, c)].clone()))).collect()
}

impl Coordinates {
    fn new(basis: &HomBasis) -> Coordinates {
        if basis.dim() == 0 {
            return Coordinates { rows: Vec::new(), inverse: Matrix::zeros(0, 0) };
        }
        let cols: Vec<Vec<Q>> = basis.maps.iter().map(flatten).collect();
        let f = Matrix::from_columns(cols[0].len(), &cols);
        let mut t = f.transpose();
        let rows = t.rref_in_place();
        let inverse = f.select_rows(&rows).inverse().expect("selected rows are independent");
        Coordinates { rows, inverse }
    }

    fn of(&self, f: &Morphism) -> Vec<Q> {
        let flat = flatten(f);
        let picked: Vec<Q> = self.rows.iter().map(|&r| flat[r].clone()).collect();
        self.inverse.mul_vec(&picked)
    }
}

/// `End(T)` for `T = ⊕ T_i`, with `e_i B e_j = Hom(T_j, T_i)` and `xy = x ∘ y`.
#[derive(Clone, Debug)]
pub struct EndoPresentation {
    pub summands: Vec<Representation>,
    /// `hom[i][j]` is a basis of `Hom(T_j, T_i)`.
    pub hom: Vec<Vec<HomBasis>>,
    /// Dimensions of `rad^k B` for `k = 0, 1, ...` down to zero.
    pub radical_filtration: Vec<usize>,
    /// Each arrow `i -> j` of the quiver of `B` as a morphism `T_j -> T_i`.
    pub arrow_maps: Vec<Morphism>,
    pub algebra: Arc<BoundQuiver>,
    coords: Vec<Vec<Coordinates>>,
}

impl EndoPresentation {
    pub fn dim(&self) -> usize {
        self.hom.iter().flatten().map(HomBasis::dim).sum()
    }

    /// Coordinates of the product `x y` of basis elements `x ∈ e_i B e_j`, `y ∈ e_j B e_k`.
    pub fn multiply(&self, (i, j, x): (usize, usize, usize), (j2, k, y): (usize, usize, usize)) -> Vec<Q> {
        assert_eq!(j, j2, "blocks do not compose");
        let f = self.hom[j][k].maps[y].then(&self.hom[i][j].maps[x]);
        self.coords[i][k].of(&f)
    }

    /// `(xy)z = x(yz)` on every triple of basis elements.
    pub fn is_associative(&self) -> bool {
        let n = self.summands.len();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        for x in 0..self.hom[i][j].dim() {
                            for y in 0..self.hom[j][k].dim() {
                                for z in 0..self.hom[k][l].dim() {
                                    let f = &self.hom[i][j].maps[x];
                                    let h = &self.hom[k][l].maps[z];
                                    let xy = self.hom[i][k].combination(&self.multiply((i, j, x), (j, k, y)));
                                    let yz = self.hom[j][l].combination(&self.multiply((j, k, y), (k, l, z)));
                                    let left = xy.map(|m| self.coords[i][l].of(&h.then(&m)));
                                    let right = yz.map(|m| self.coords[i][l].of(&m.then(f)));
                                    let zero = vec![Q::zero(); self.hom[i][l].dim()];
                                    if left.unwrap_or_else(|| zero.clone()) != right.unwrap_or(zero) {
                                        return false;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

fn compose_coords(
    hom: &[Vec<HomBasis>],
    coords: &[Vec<Coordinates>],
    (i, j, x): (usize, usize, &[Q]),
    (k, y): (usize, &[Q]),
) -> Vec<Q> {
    let (Some(f), Some(g)) = (hom[i][j].combination(x), hom[j][k].combination(y)) else {
        return vec![Q::zero(); hom[i][k].dim()];
    };
    coords[i][k].of(&g.then(&f))
}

/// Basis (in block coordinates) of `span{x y}` for `x` in `left` and `y` in `right`.
fn product_block(
    hom: &[Vec<HomBasis>],
    coords: &[Vec<Coordinates>],
    left: &[Vec<Vec<Vec<Q>>>],
    right: &[Vec<Vec<Vec<Q>>>],
    i: usize,
    k: usize,
) -> Vec<Vec<Q>> {
    let n = hom.len();
    let mut ech = Echelon::new(hom[i][k].dim());
    for j in 0..n {
        for x in &left[i][j] {
            for y in &right[j][k] {
                ech.insert(dense_to_sparse(&compose_coords(hom, coords, (i, j, x), (k, y))));
            }
        }
    }
    ech.fully_reduce();
    ech.rows().iter().map(|r| sparse_to_dense(r, hom[i][k].dim())).collect()
}

/// Presents `End(⊕ T_i)` by a quiver with relations. Vertex `i` is `T_i` (named by
/// `names`), and an arrow `i -> j` is a radical morphism `T_j -> T_i`.
pub fn end_presentation(summands: &[Representation], names: &[String]) -> Result<EndoPresentation> {
    let n = summands.len();
    if n == 0 {
        return Err(Error::Precondition("empty summand list".into()));
    }
    if names.len() != n {
        return Err(Error::Precondition("one name per summand is required".into()));
    }
    for (i, m) in summands.iter().enumerate() {
        if m.is_zero() || !is_indecomposable(m)? {
            return Err(Error::Precondition(format!("summand {} is not indecomposable", names[i])));
        }
        for j in 0..i {
            if is_isomorphic(&summands[j], m) {
                return Err(Error::Precondition(format!("summands {} and {} are isomorphic", names[j], names[i])));
            }
        }
    }
    let hom: Vec<Vec<HomBasis>> =
        (0..n).map(|i| (0..n).map(|j| hom_space(&summands[j], &summands[i])).collect()).collect();
    let coords: Vec<Vec<Coordinates>> = hom.iter().map(|row| row.iter().map(Coordinates::new).collect()).collect();

    // rad B: everything off the diagonal, the trace-form radical on it.
    let unit = |d: usize| -> Vec<Vec<Q>> {
        (0..d)
            .map(|c| {
                let mut v = vec![Q::zero(); d];
                v[c] = Q::one();
                v
            })
            .collect()
    };
    let rad: Vec<Vec<Vec<Vec<Q>>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { trace_gram(&hom[i][i]).kernel() } else { unit(hom[i][j].dim()) })
                .collect()
        })
        .collect();
    let mut filtration = vec![hom.iter().flatten().map(HomBasis::dim).sum::<usize>()];
    let mut powers = vec![rad.clone()];
    loop {
        let last = powers.last().expect("nonempty");
        let d: usize = last.iter().flatten().map(Vec::len).sum();
        filtration.push(d);
        if d == 0 {
            break;
        }
        let next: Vec<Vec<Vec<Vec<Q>>>> =
            (0..n).map(|i| (0..n).map(|k| product_block(&hom, &coords, last, &rad, i, k)).collect()).collect();
        powers.push(next);
    }
    let nilpotency = powers.len();

    // Arrows: rad / rad^2, lifted along the canonical echelon basis of rad.
    let rad2 = powers.get(1).cloned().unwrap_or_else(|| vec![vec![Vec::new(); n]; n]);
    let mut arrows: Vec<(String, usize, usize)> = Vec::new();
    let mut arrow_coords: Vec<Vec<Q>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let dim = hom[i][j].dim();
            let mut ech = Echelon::new(dim);
            for v in &rad2[i][j] {
                ech.insert(dense_to_sparse(v));
            }
            let mut rad_ech = Echelon::new(dim);
            for v in &rad[i][j] {
                rad_ech.insert(dense_to_sparse(v));
            }
            rad_ech.fully_reduce();
            let mut count = 0;
            for r in rad_ech.rows() {
                if ech.insert(r.clone()) {
                    count += 1;
                    let name = if count == 1 { format!("f_{}_{}", names[i], names[j]) } else { format!("f_{}_{}_{count}", names[i], names[j]) };
                    arrows.push((name, i, j));
                    arrow_coords.push(sparse_to_dense(r, dim));
                }
            }
        }
    }
    let quiver = Quiver::new(names.to_vec(), arrows.clone())?;
    // Quiver::new sorts arrows by name; carry the coordinates along.
    let mut by_name: HashMap<String, Vec<Q>> = HashMap::new();
    for ((name, _, _), c) in arrows.iter().zip(arrow_coords) {
        by_name.insert(name.clone(), c);
    }
    let arrow_data: Vec<Vec<Q>> = quiver.arrows().iter().map(|ar| by_name[&ar.name].clone()).collect();

    // Paths all of whose proper prefixes act nonzero, with their images in B.
    let mut images: Vec<(Path, Vec<Q>)> = Vec::new();
    let mut frontier: Vec<(Path, Vec<Q>)> = (0..n)
        .map(|i| {
            let id = coords[i][i].of(&Morphism::identity(&summands[i]));
            (Path::trivial(i), id)
        })
        .collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (p, img) in &frontier {
            for &a in quiver.out_arrows(p.target()) {
                let ar = quiver.arrow(a);
                let np = p.then_arrow(&quiver, a).expect("composable");
                let prod = compose_coords(&hom, &coords, (p.source(), ar.source, img), (ar.target, &arrow_data[a]));
                let zero = prod.iter().all(Q::is_zero);
                images.push((np.clone(), prod.clone()));
                if !zero {
                    next.push((np, prod));
                }
            }
        }
        frontier = next;
    }
    let index: HashMap<Path, usize> = images.iter().enumerate().map(|(i, (p, _))| (p.clone(), i)).collect();

    // Kernel of kQ_B -> B per block; generators are the kernel modulo its products
    // with arrows on either side.
    let mut kernels: Vec<SVec> = Vec::new();
    for (i, row) in hom.iter().enumerate() {
        for (k, block) in row.iter().enumerate() {
            let paths: Vec<usize> =
                (0..images.len()).filter(|&t| images[t].0.source() == i && images[t].0.target() == k).collect();
            if paths.is_empty() {
                continue;
            }
            let cols: Vec<Vec<Q>> = paths.iter().map(|&t| images[t].1.clone()).collect();
            let m = Matrix::from_columns(block.dim(), &cols);
            for v in m.kernel() {
                let mut s: SVec =
                    v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(c, x)| (paths[c], x)).collect();
                s.sort_by_key(|(c, _)| *c);
                kernels.push(s);
            }
        }
    }
    let mut generated = Echelon::new(images.len());
    for kv in &kernels {
        let (s, t) = (images[kv[0].0].0.source(), images[kv[0].0].0.target());
        let mut multiples: Vec<SVec> = Vec::new();
        for &a in quiver.out_arrows(t) {
            multiples.push(shift(kv, &images, &index, |p| p.then_arrow(&quiver, a)));
        }
        for &b in quiver.in_arrows(s) {
            let arrow = Path::arrow(&quiver, b);
            multiples.push(shift(kv, &images, &index, |p| arrow.concat(p)));
        }
        for m in multiples {
            if !m.is_empty() {
                generated.insert(m);
            }
        }
    }
    let mut relations: Vec<Element> = Vec::new();
    for kv in kernels {
        if generated.insert(kv.clone()) {
            relations.push(Element::from_terms(kv.iter().map(|(t, x)| (x.clone(), images[*t].0.clone()))));
        }
    }
    let lmax = DEFAULT_LMAX.max(nilpotency + 2);
    let algebra = BoundQuiver::new(quiver, relations, lmax)?;
    let dim_b: usize = filtration[0];
    if algebra.dim() != dim_b {
        return Err(Error::Inconsistency(format!(
            "extracted presentation has dimension {} but dim End(T) = {dim_b}",
            algebra.dim()
        )));
    }
    let arrow_maps = algebra
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, ar)| hom[ar.source][ar.target].combination(&arrow_data[a]).expect("arrow blocks are nonzero"))
        .collect();
    Ok(EndoPresentation {
        summands: summands.to_vec(),
        hom,
        radical_filtration: filtration,
        arrow_maps,
        algebra: Arc::new(algebra),
        coords,
    })
}

/// `Σ c_t f(p_t)` restricted to the tracked paths; the others lie in the ideal
/// generated by a tracked zero path times a nontrivial path.
fn shift(
    v: &SVec,
    images: &[(Path, Vec<Q>)],
    index: &HashMap<Path, usize>,
    f: impl Fn(&Path) -> Option<Path>,
) -> SVec {
    let mut out: SVec = v
        .iter()
        .filter_map(|(t, x)| f(&images[*t].0).and_then(|p| index.get(&p).map(|&i| (i, x.clone()))))
        .collect();
    out.sort_by_key(|(i, _)| *i);
    out
}

/// `gldim End(T)`. When the syzygy search is inconclusive and `T` is τ-tilting,
/// infinite global dimension of `A / ann T` forces it for `End(T)` as well.
pub fn gldim_endo(endo: &EndoPresentation, cutoff: usize) -> Result<PdResult> {
    let direct = gldim(&endo.algebra, cutoff);
    if direct.is_conclusive() {
        return Ok(direct);
    }
    let quotient_side = quotient_gldim(&endo.summands, cutoff)?;
    Ok(match quotient_side {
        PdResult::Infinite(c) => PdResult::Infinite(Certificate::ViaQuotient(Box::new(c))),
        _ => direct,
    })
}

/// `gldim A / ann T`, exact for monomial quotients.
pub fn quotient_gldim(summands: &[Representation], cutoff: usize) -> Result<PdResult> {
    let t = Representation::direct_sum(summands)?;
    let a = t.algebra();
    let qp = quotient_presentation(a, &annihilator(&t))?;
    Ok(global_dimension(&qp.quotient, cutoff))
}

/// Outcome of checking one inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundCheck {
    Holds(String),
    Fails(String),
    /// Some dimension involved is only bounded below.
    Inconclusive(String),
    /// The hypotheses do not apply.
    NotApplicable(String),
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        matches!(self, BoundCheck::Holds(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            BoundCheck::Holds(_) => "holds",
            BoundCheck::Fails(_) => "fails",
            BoundCheck::Inconclusive(_) => "inconclusive",
            BoundCheck::NotApplicable(_) => "not applicable",
        }
    }

    pub fn detail(&self) -> &str {
        match self {
            BoundCheck::Holds(s) | BoundCheck::Fails(s) | BoundCheck::Inconclusive(s) | BoundCheck::NotApplicable(s) => s,
        }
    }
}

#[derive(Clone, Debug)]
pub struct BoundsReport {
    pub gldim_a: PdResult,
    pub gldim_b: PdResult,
    pub gldim_quotient: PdResult,
    pub pd_quotient: PdResult,
    pub pd_t: PdResult,
    /// `gldim A <= gldim B + pd_A(A/ann T) + 1` for `gldim A` finite.
    pub quotient_bound: BoundCheck,
    /// Whether the inequality above is an equality.
    pub quotient_bound_tight: bool,
    /// Monomial `A` with `gldim A = 2`: `gldim B` finite.
    pub monomial_finiteness: BoundCheck,
    /// Special biserial `A` with `gldim A = 2`: `gldim A/ann T <= 4` and `gldim B <= 5`.
    pub special_biserial_bound: BoundCheck,
    /// `pd_A(A/ann T) <= pd_A T <= pd_A(A/ann T) + 1`.
    pub sandwich: BoundCheck,
}

fn le(lhs: &PdResult, rhs: Option<usize>, what: &str) -> BoundCheck {
    match (lhs, rhs) {
        (PdResult::ExactFinite(x), Some(r)) if *x <= r => BoundCheck::Holds(format!("{what}: {x} <= {r}")),
        (PdResult::ExactFinite(x), Some(r)) => BoundCheck::Fails(format!("{what}: {x} > {r}")),
        (PdResult::AtLeast(x), Some(r)) if *x > r => BoundCheck::Fails(format!("{what}: at least {x} > {r}")),
        (PdResult::Infinite(_), Some(r)) => BoundCheck::Fails(format!("{what}: infinite > {r}")),
        _ => BoundCheck::Inconclusive(format!("{what}: {lhs} is not exact")),
    }
}

pub fn verify_bounds(summands: &[Representation], endo: &EndoPresentation, cutoff: usize) -> Result<BoundsReport> {
    let a = summands
        .first()
        .ok_or_else(|| Error::Precondition("empty summand list".into()))?
        .algebra()
        .clone();
    let tilt = tilting_over_quotient_check(summands, cutoff)?;
    let rec = recognize_class(&a);
    let gldim_a = global_dimension(&a, cutoff);
    let gldim_b = gldim_endo(endo, cutoff)?;
    let gldim_quotient = quotient_gldim(summands, cutoff)?;
    let pd_quotient = pd_of_sum(&quotient_module(&a, &tilt.ann), cutoff);
    let pd_t = tilt.pd_over_algebra.clone();

    let mut quotient_bound_tight = false;
    let quotient_bound = match &gldim_a {
        PdResult::Infinite(_) => BoundCheck::NotApplicable("gldim A is infinite".into()),
        PdResult::AtLeast(_) => BoundCheck::Inconclusive(format!("gldim A = {gldim_a}")),
        PdResult::ExactFinite(ga) => match (&gldim_b, pd_quotient.exact()) {
            (PdResult::Infinite(_), _) => BoundCheck::Holds(format!("{ga} <= infinity")),
            (PdResult::ExactFinite(gb), Some(pq)) => {
                let rhs = gb + pq + 1;
                quotient_bound_tight = *ga == rhs;
                let text = format!("{ga} <= {gb} + {pq} + 1 = {rhs}");
                if *ga <= rhs { BoundCheck::Holds(text) } else { BoundCheck::Fails(text) }
            }
            _ => BoundCheck::Inconclusive(format!("gldim B = {gldim_b}, pd_A(A/ann T) = {pd_quotient}")),
        },
    };
    let gldim_two = gldim_a.exact() == Some(2);
    let monomial_finiteness = if !(rec.is_monomial && gldim_two) {
        BoundCheck::NotApplicable("requires a monomial algebra of global dimension 2".into())
    } else {
        match &gldim_b {
            PdResult::ExactFinite(d) => BoundCheck::Holds(format!("gldim B = {d}")),
            PdResult::Infinite(_) => BoundCheck::Fails("gldim B is infinite".into()),
            PdResult::AtLeast(d) => BoundCheck::Inconclusive(format!("gldim B >= {d}")),
        }
    };
    let special_biserial_bound = if !(rec.is_special_biserial && gldim_two) {
        BoundCheck::NotApplicable("requires a special biserial algebra of global dimension 2".into())
    } else {
        let q = le(&gldim_quotient, Some(4), "gldim A/ann T");
        let b = le(&gldim_b, Some(5), "gldim B");
        match (&q, &b) {
            (BoundCheck::Holds(x), BoundCheck::Holds(y)) => BoundCheck::Holds(format!("{x}; {y}")),
            (BoundCheck::Fails(_), _) => q,
            (_, BoundCheck::Fails(_)) => b,
            (BoundCheck::Inconclusive(_), _) => q,
            _ => b,
        }
    };
    let text = format!("pd_A(A/ann T) = {pd_quotient}, pd_A T = {pd_t}");
    let sandwich = match tilt.sandwich {
        Some(true) => BoundCheck::Holds(text),
        Some(false) => BoundCheck::Fails(text),
        None => BoundCheck::Inconclusive(text),
    };
    Ok(BoundsReport { gldim_a, gldim_b, gldim_quotient, pd_quotient, pd_t, quotient_bound, quotient_bound_tight, monomial_finiteness, special_biserial_bound, sandwich })
}
