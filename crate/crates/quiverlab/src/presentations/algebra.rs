use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{accumulate, from_accumulator, Echelon, SVec, Q};

use super::quiver::{Element, Path, Quiver};

pub const DEFAULT_LMAX: usize = 30;

/// Upper bound on the number of enumerated paths avoiding the monomial generators.
const PATH_SPACE_LIMIT: usize = 200_000;

/// Degree-truncated saturation of an ideal inside the span of paths of length at most
/// `lmax` that avoid every monomial generator. Columns are ordered so that shorter
/// paths (and, within a length, lexicographically larger ones) are eliminated first.
pub(crate) struct Saturation {
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
    monomials: HashSet<Vec<usize>>,
    monomial_lengths: Vec<usize>,
    echelon: Echelon,
    lmax: usize,
    proper: bool,
}

impl Saturation {
    pub(crate) fn new(q: &Quiver, gens: &[Element], lmax: usize) -> Result<Saturation> {
        Saturation::build(q, gens, lmax, false)
    }

    /// Saturation of `rad I + I rad` instead of `I`. The path space then keeps the
    /// monomial generators themselves and drops only paths containing one properly.
    pub(crate) fn radical_multiple(q: &Quiver, gens: &[Element], lmax: usize) -> Result<Saturation> {
        Saturation::build(q, gens, lmax, true)
    }

    fn build(q: &Quiver, gens: &[Element], lmax: usize, proper: bool) -> Result<Saturation> {
        let mut monomials = HashSet::new();
        for g in gens {
            if let Some(p) = g.single_path() {
                monomials.insert(p.arrows().to_vec());
            }
        }
        let mut monomial_lengths: Vec<usize> = monomials.iter().map(|m| m.len()).collect();
        monomial_lengths.sort_unstable();
        monomial_lengths.dedup();

        let mut paths: Vec<Path> = (0..q.vertex_count()).map(Path::trivial).collect();
        let mut frontier = paths.clone();
        for _ in 0..lmax {
            let mut next = Vec::new();
            for p in &frontier {
                if proper && monomials.contains(p.arrows()) {
                    continue;
                }
                for &a in q.out_arrows(p.target()) {
                    let np = p.then_arrow(q, a).expect("composable");
                    let arr = np.arrows();
                    let killed = monomial_lengths.iter().any(|&l| {
                        l <= arr.len() && (!proper || l < arr.len()) && monomials.contains(&arr[arr.len() - l..])
                    });
                    if !killed {
                        next.push(np);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            paths.extend(next.iter().cloned());
            if paths.len() > PATH_SPACE_LIMIT {
                return Err(Error::NotAdmissible(format!(
                    "radical not nilpotent within bound {lmax} (path space exceeds {PATH_SPACE_LIMIT} paths)"
                )));
            }
            frontier = next;
        }
        paths.sort_by(|a, b| {
            a.len().cmp(&b.len()).then_with(|| b.arrows().cmp(a.arrows())).then_with(|| a.source().cmp(&b.source()))
        });
        let index: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

        let mut right: Vec<Vec<(usize, usize)>> = vec![Vec::new(); paths.len()];
        let mut left: Vec<Vec<(usize, usize)>> = vec![Vec::new(); paths.len()];
        for (i, p) in paths.iter().enumerate() {
            for &a in q.out_arrows(p.target()) {
                if let Some(j) = p.then_arrow(q, a).and_then(|np| index.get(&np).copied()) {
                    right[i].push((a, j));
                }
            }
            for &a in q.in_arrows(p.source()) {
                if let Some(j) = Path::arrow(q, a).concat(p).and_then(|np| index.get(&np).copied()) {
                    left[i].push((a, j));
                }
            }
        }

        let mut sat =
            Saturation { paths, index, monomials, monomial_lengths, echelon: Echelon::new(0), lmax, proper };
        let mut echelon = Echelon::new(sat.paths.len());
        let mut queue: VecDeque<SVec> = VecDeque::new();
        for g in gens.iter().filter(|g| g.single_path().is_none()) {
            let seeds = if proper {
                let mut out = Vec::new();
                for a in 0..q.arrow_count() {
                    let arrow = Element::from_path(Path::arrow(q, a));
                    out.push(g.mul(&arrow));
                    out.push(arrow.mul(g));
                }
                out
            } else {
                vec![g.clone()]
            };
            for s in seeds {
                let v = sat.vector(&s);
                if echelon.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
        let mult = |v: &SVec, a: usize, table: &Vec<Vec<(usize, usize)>>| -> SVec {
            let mut acc = BTreeMap::new();
            for (c, x) in v {
                if let Some(&(_, j)) = table[*c].iter().find(|(b, _)| *b == a) {
                    accumulate(&mut acc, &Q::one(), &vec![(j, x.clone())]);
                }
            }
            from_accumulator(acc)
        };
        while let Some(v) = queue.pop_front() {
            for a in 0..q.arrow_count() {
                for w in [mult(&v, a, &right), mult(&v, a, &left)] {
                    if !w.is_empty() && echelon.insert(w.clone()) {
                        queue.push_back(w);
                    }
                }
            }
        }
        echelon.fully_reduce();
        sat.echelon = echelon;
        Ok(sat)
    }

    fn killed_by_monomial(&self, p: &Path) -> bool {
        let arr = p.arrows();
        (0..arr.len()).any(|start| {
            self.monomial_lengths.iter().any(|&l| {
                start + l <= arr.len()
                    && (!self.proper || l < arr.len())
                    && self.monomials.contains(&arr[start..start + l])
            })
        })
    }

    /// Coordinates of `e` in the truncated path space (terms that vanish there are dropped).
    pub(crate) fn vector(&self, e: &Element) -> SVec {
        let mut acc = BTreeMap::new();
        for (p, c) in e.terms() {
            if p.len() > self.lmax || self.killed_by_monomial(p) {
                continue;
            }
            if let Some(&i) = self.index.get(p) {
                accumulate(&mut acc, c, &vec![(i, Q::one())]);
            }
        }
        from_accumulator(acc)
    }

    pub(crate) fn contains(&self, e: &Element) -> bool {
        self.echelon.contains(&self.vector(e))
    }
}

/// `A = kQ/I` with its normal-form basis.
#[derive(Clone, Debug)]
pub struct BoundQuiver {
    quiver: Quiver,
    relations: Vec<Element>,
    lmax: usize,
    basis: Vec<Path>,
    basis_index: HashMap<Path, usize>,
    blocks: Vec<Vec<Vec<usize>>>,
    right: Vec<Vec<SVec>>,
    nilpotency: usize,
}

impl PartialEq for BoundQuiver {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.relations == other.relations && self.basis == other.basis
    }
}

impl BoundQuiver {
    /// Validates the presentation, normalizes the generator set and computes the basis.
    pub fn new(quiver: Quiver, relations: Vec<Element>, lmax: usize) -> Result<BoundQuiver> {
        let relations = normalize_generators(&quiver, relations, lmax)?;
        let sat = Saturation::new(&quiver, &relations, lmax)?;

        let mut basis: Vec<Path> =
            sat.paths.iter().enumerate().filter(|(i, _)| !sat.echelon.is_pivot(*i)).map(|(_, p)| p.clone()).collect();
        basis.sort();
        if let Some(p) = basis.iter().find(|p| p.len() >= lmax) {
            return Err(Error::NotAdmissible(format!(
                "radical not nilpotent within bound {lmax} (path {} survives)",
                p.display(&quiver)
            )));
        }
        let basis_index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let n = quiver.vertex_count();
        let mut blocks = vec![vec![Vec::new(); n]; n];
        for (i, p) in basis.iter().enumerate() {
            blocks[p.source()][p.target()].push(i);
        }

        let to_basis = |v: &SVec| -> SVec {
            let mut out: SVec = v.iter().map(|(c, x)| (basis_index[&sat.paths[*c]], x.clone())).collect();
            out.sort_by_key(|(i, _)| *i);
            out
        };
        let mut right = Vec::with_capacity(basis.len());
        for b in &basis {
            let mut row = vec![Vec::new(); quiver.arrow_count()];
            for &a in quiver.out_arrows(b.target()) {
                let p = b.then_arrow(&quiver, a).expect("composable");
                let Some(&col) = sat.index.get(&p) else { continue };
                row[a] = match sat.echelon.row_for_pivot(col) {
                    None => vec![(basis_index[&p], Q::one())],
                    Some(r) => {
                        let tail: SVec = r[1..].iter().map(|(c, x)| (*c, -x.clone())).collect();
                        to_basis(&tail)
                    }
                };
            }
            right.push(row);
        }
        let nilpotency = basis.iter().map(|p| p.len()).max().unwrap_or(0) + 1;
        Ok(BoundQuiver { quiver, relations, lmax, basis, basis_index, blocks, right, nilpotency })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Element] {
        &self.relations
    }

    pub fn lmax(&self) -> usize {
        self.lmax
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_path(&self, i: usize) -> &Path {
        &self.basis[i]
    }

    pub fn basis_position(&self, p: &Path) -> Option<usize> {
        self.basis_index.get(p).copied()
    }

    /// Basis indices of the normal-form paths from `s` to `t`, in canonical order.
    pub fn block(&self, s: usize, t: usize) -> &[usize] {
        &self.blocks[s][t]
    }

    /// Position of basis element `i` inside its `(source, target)` block.
    pub fn position_in_block(&self, i: usize) -> usize {
        let p = &self.basis[i];
        self.blocks[p.source()][p.target()].iter().position(|&j| j == i).expect("indexed")
    }

    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    /// `b_i * a` for a basis element and an arrow.
    pub fn right_arrow(&self, i: usize, a: usize) -> &SVec {
        &self.right[i][a]
    }

    /// Right multiplication of a basis combination by a path.
    pub fn mul_path(&self, v: &SVec, p: &Path) -> SVec {
        let mut cur: SVec = v.iter().filter(|(i, _)| self.basis[*i].target() == p.source()).cloned().collect();
        for &a in p.arrows() {
            let mut acc = BTreeMap::new();
            for (i, x) in &cur {
                accumulate(&mut acc, x, &self.right[*i][a]);
            }
            cur = from_accumulator(acc);
            if cur.is_empty() {
                break;
            }
        }
        cur
    }

    pub fn reduce_path(&self, p: &Path) -> SVec {
        let start = vec![(self.basis_index[&Path::trivial(p.source())], Q::one())];
        self.mul_path(&start, p)
    }

    /// Normal form coordinates of an element of the path algebra.
    pub fn reduce(&self, e: &Element) -> SVec {
        let mut acc = BTreeMap::new();
        for (p, c) in e.terms() {
            accumulate(&mut acc, c, &self.reduce_path(p));
        }
        from_accumulator(acc)
    }

    /// Normal form as a path-algebra element.
    pub fn reduce_element(&self, e: &Element) -> Element {
        self.to_element(&self.reduce(e))
    }

    pub fn to_element(&self, v: &SVec) -> Element {
        Element::from_terms(v.iter().map(|(i, x)| (x.clone(), self.basis[*i].clone())))
    }

    /// Left multiplication `p * v` of a basis combination by a path.
    pub fn left_mul_path(&self, p: &Path, v: &SVec) -> SVec {
        let mut acc = BTreeMap::new();
        for (i, x) in v {
            if let Some(pb) = p.concat(&self.basis[*i]) {
                accumulate(&mut acc, x, &self.reduce_path(&pb));
            }
        }
        from_accumulator(acc)
    }

    pub fn mul(&self, a: &SVec, b: &SVec) -> SVec {
        let mut acc = BTreeMap::new();
        for (j, y) in b {
            let part = self.mul_path(a, &self.basis[*j]);
            accumulate(&mut acc, y, &part);
        }
        from_accumulator(acc)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> SVec {
        self.mul_path(&vec![(i, Q::one())], &self.basis[j])
    }

    pub fn is_zero_path(&self, p: &Path) -> bool {
        self.reduce_path(p).is_empty()
    }

    pub fn in_ideal(&self, e: &Element) -> bool {
        self.reduce(e).is_empty()
    }

    /// Every path of the path algebra that is nonzero in `A`, in canonical order.
    pub fn nonzero_paths(&self) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.vertex_count()).map(Path::trivial).collect();
        let mut frontier = out.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                for &a in self.quiver.out_arrows(p.target()) {
                    let np = p.then_arrow(&self.quiver, a).expect("composable");
                    if !self.is_zero_path(&np) {
                        next.push(np);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out.sort();
        out
    }
}

/// Paths lying in `I` but not in `rad I + I rad`: the zero-relations of `A`, in
/// canonical order.
pub fn zero_relations(a: &BoundQuiver) -> Vec<Path> {
    let q = a.quiver();
    let mut cands = Vec::new();
    for u in a.nonzero_paths() {
        for &al in q.out_arrows(u.target()) {
            let p = u.then_arrow(q, al).expect("composable");
            if a.is_zero_path(&p) && !a.is_zero_path(&p.subpath(q, 1, p.len())) {
                cands.push(p);
            }
        }
    }
    let Some(longest) = cands.iter().map(|p| p.len()).max() else {
        return Vec::new();
    };
    // rad^(n+1) lies in rad I, so truncating there loses nothing.
    let bound = longest.max(a.nilpotency() + 1);
    let sat = match Saturation::radical_multiple(q, a.relations(), bound) {
        Ok(s) => s,
        Err(_) => return cands,
    };
    let mut out: Vec<Path> = cands.into_iter().filter(|p| !sat.contains(&Element::from_path(p.clone()))).collect();
    out.sort();
    out
}

/// Drops zero terms, validates admissibility of each generator, removes terms that
/// already lie in the monomial part of the ideal and discards redundant generators.
pub(crate) fn normalize_generators(q: &Quiver, raw: Vec<Element>, lmax: usize) -> Result<Vec<Element>> {
    let mut gens: Vec<Element> = Vec::new();
    for g in raw {
        if g.is_zero() {
            continue;
        }
        if let Some((p, _)) = g.terms().find(|(p, _)| p.len() < 2) {
            return Err(Error::NotAdmissible(format!("relation of length < 2 ({})", p.display(q))));
        }
        if !g.is_parallel() {
            return Err(Error::NotAdmissible(format!("relation terms are not parallel ({})", g.display(q))));
        }
        if !gens.contains(&g) {
            gens.push(g);
        }
    }

    loop {
        let mut changed = false;
        for i in 0..gens.len() {
            let monomials: Vec<Path> = gens
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .filter_map(|(_, g)| g.single_path().cloned())
                .collect();
            let g = &gens[i];
            let reduced = g.filter(|p| !monomials.iter().any(|m| p.contains(q, m)));
            let reduced = match reduced.single_path() {
                Some(p) => Element::from_path(p.clone()),
                None => reduced,
            };
            if reduced != *g {
                gens[i] = reduced;
                changed = true;
            }
        }
        let before = gens.len();
        let mut seen = Vec::new();
        gens.retain(|g| {
            if g.is_zero() || seen.contains(g) {
                false
            } else {
                seen.push(g.clone());
                true
            }
        });
        if !changed && before == gens.len() {
            break;
        }
    }

    let mut i = 0;
    while i < gens.len() {
        let others: Vec<Element> = gens.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let redundant = match Saturation::new(q, &others, lmax) {
            Ok(sat) => sat.contains(&gens[i]),
            Err(_) => false,
        };
        if redundant {
            gens.remove(i);
        } else {
            i += 1;
        }
    }
    Ok(gens)
}

/// Scales a generator so that its first term has coefficient one.
pub fn monic(e: &Element) -> Element {
    match e.terms().next() {
        Some((_, c)) if !c.is_zero() => e.scale(&c.recip()),
        _ => e.clone(),
    }
}
