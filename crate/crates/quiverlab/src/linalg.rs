//! Exact linear algebra over the rationals: dense matrices for module maps and
//! a sparse row echelon used for large, sparse systems (ideals, Hom equations).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

/// Sparse vector: `(index, value)` pairs, sorted by index, no zero values.
pub type SVec = Vec<(usize, Q)>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `p/q` for non-integers, `p` otherwise.
pub fn q_to_string(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| q_to_string(&self[(r, c)])).collect();
            write!(f, "[{}]", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (r, c): (usize, usize)) -> &Q {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Q {
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Q>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Matrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, vals: &[i64]) -> Self {
        assert_eq!(vals.len(), rows * cols);
        Matrix { rows, cols, data: vals.iter().map(|&v| q(v)).collect() }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, cols: &[Vec<Q>]) -> Self {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn column(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Q>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn row(&self, r: usize) -> Vec<Q> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Q::zero();
                for (k, x) in v.iter().enumerate() {
                    let a = &self[(i, k)];
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Q) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn add_scaled_assign(&mut self, s: &Q, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += s * b;
            }
        }
    }

    pub fn trace(&self) -> Q {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).fold(Q::zero(), |acc, i| acc + &self[(i, i)])
    }

    /// Horizontal concatenation.
    pub fn hstack(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.first().map_or(0, |b| b.rows);
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            m.set_block(0, off, b);
            off += b.cols;
        }
        m
    }

    /// Vertical concatenation.
    pub fn vstack(blocks: &[&Matrix]) -> Matrix {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut m = Matrix::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            m.set_block(off, 0, b);
            off += b.rows;
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self[(r0 + r, c0 + c)] = b[(r, c)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = self[(r0 + r, c0 + c)].clone();
            }
        }
        m
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.rows, cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for r in 0..self.rows {
                m[(r, j)] = self[(r, c)].clone();
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), self.cols);
        for (i, &r) in rows.iter().enumerate() {
            for c in 0..self.cols {
                m[(i, c)] = self[(r, c)].clone();
            }
        }
        m
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self[(row, col)].recip();
            for c in col..self.cols {
                let v = &self[(row, c)] * &inv;
                self[(row, c)] = v;
            }
            for r in 0..self.rows {
                if r == row || self[(r, col)].is_zero() {
                    continue;
                }
                let f = self[(r, col)].clone();
                for c in col..self.cols {
                    if !self[(row, c)].is_zero() {
                        let v = &f * &self[(row, c)];
                        self[(r, c)] -= v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of `{x : self * x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let mut r = self.clone();
        let pivots = r.rref_in_place();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, free)].clone();
            }
            out.push(v);
        }
        out
    }

    /// Kernel basis as the columns of a matrix.
    pub fn kernel_matrix(&self) -> Matrix {
        Matrix::from_columns(self.cols, &self.kernel())
    }

    /// Maximal independent subset of columns, returned as a matrix (column space basis).
    pub fn column_space(&self) -> Matrix {
        let mut r = self.clone();
        let pivots = r.rref_in_place();
        self.select_columns(&pivots)
    }

    pub fn determinant(&self) -> Q {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Q::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Q::zero();
            };
            if p != col {
                for c in 0..n {
                    a.data.swap(p * n + c, col * n + c);
                }
                det = -det;
            }
            let piv = a[(col, col)].clone();
            det *= &piv;
            let inv = piv.recip();
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let f = &a[(r, col)] * &inv;
                for c in col..n {
                    if !a[(col, c)].is_zero() {
                        let v = &f * &a[(col, c)];
                        a[(r, c)] -= v;
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let mut aug = Matrix::hstack(&[self, &Matrix::identity(n)]);
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(aug.block(0, n, n, n))
    }

    /// Some `X` with `self * X = b`, if one exists.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows);
        let mut aug = Matrix::hstack(&[self, b]);
        let pivots = aug.rref_in_place();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x[(p, c)] = aug[(i, self.cols + c)].clone();
            }
        }
        Some(x)
    }

    pub fn to_sparse_column(&self, c: usize) -> SVec {
        (0..self.rows).filter(|&r| !self[(r, c)].is_zero()).map(|r| (r, self[(r, c)].clone())).collect()
    }
}

/// Extend the columns of `base` (assumed independent) to a basis of `Q^n` using
/// standard unit vectors, in index order. Returns the indices of the added unit vectors.
pub fn complement_units(base: &Matrix, n: usize) -> Vec<usize> {
    let mut ech = Echelon::new(n);
    for c in 0..base.cols() {
        ech.insert(base.to_sparse_column(c));
    }
    let mut added = Vec::new();
    for i in 0..n {
        if ech.insert(vec![(i, Q::one())]) {
            added.push(i);
        }
    }
    added
}

pub fn dense_to_sparse(v: &[Q]) -> SVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn sparse_to_dense(v: &SVec, n: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

pub fn sparse_scale(v: &SVec, s: &Q) -> SVec {
    if s.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * s)).collect()
}

/// Accumulates `s * v` into a map-based sparse accumulator.
pub fn accumulate(acc: &mut BTreeMap<usize, Q>, s: &Q, v: &SVec) {
    for (i, x) in v {
        let e = acc.entry(*i).or_insert_with(Q::zero);
        *e += s * x;
        if e.is_zero() {
            acc.remove(i);
        }
    }
}

pub fn from_accumulator(acc: BTreeMap<usize, Q>) -> SVec {
    acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

pub fn sparse_add(a: &SVec, b: &SVec) -> SVec {
    let mut acc: BTreeMap<usize, Q> = a.iter().cloned().collect();
    accumulate(&mut acc, &Q::one(), b);
    from_accumulator(acc)
}

/// Incremental row echelon basis of a subspace of `Q^ncols`, with sparse rows.
/// Rows are kept with leading coefficient one; pivots follow column order, so the
/// column order decides which coordinates get eliminated.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SVec>,
    pivot_row: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivot_row: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SVec] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivot_row.keys().copied()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivot_row.contains_key(&c)
    }

    pub fn row_for_pivot(&self, c: usize) -> Option<&SVec> {
        self.pivot_row.get(&c).map(|&r| &self.rows[r])
    }

    /// Remainder of `v` after eliminating every pivot coordinate.
    pub fn reduce(&self, v: &SVec) -> SVec {
        let mut acc: BTreeMap<usize, Q> = v.iter().filter(|(_, x)| !x.is_zero()).cloned().collect();
        let mut out = Vec::new();
        while let Some((c, x)) = acc.pop_first() {
            match self.pivot_row.get(&c) {
                Some(&r) => {
                    let neg = -x;
                    for (i, y) in self.rows[r].iter().skip(1) {
                        let e = acc.entry(*i).or_insert_with(Q::zero);
                        *e += &neg * y;
                        if e.is_zero() {
                            acc.remove(i);
                        }
                    }
                }
                None => out.push((c, x)),
            }
        }
        out
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v`; returns false when it already lies in the span.
    pub fn insert(&mut self, v: SVec) -> bool {
        let red = self.reduce(&v);
        if red.is_empty() {
            return false;
        }
        let inv = red[0].1.recip();
        let row: SVec = red.into_iter().map(|(i, x)| (i, x * &inv)).collect();
        let pivot = row[0].0;
        self.pivot_row.insert(pivot, self.rows.len());
        self.rows.push(row);
        true
    }

    /// Back-substitutes so every row is zero on all other pivot columns.
    pub fn fully_reduce(&mut self) {
        for r in 0..self.rows.len() {
            let row = &self.rows[r];
            let head = row[0].clone();
            let tail: SVec = row[1..].to_vec();
            let mut new_row = vec![head];
            new_row.extend(self.reduce(&tail));
            self.rows[r] = new_row;
        }
    }

    /// Basis of the solution space `{x : row . x = 0 for all rows}`.
    pub fn kernel(&self) -> Vec<SVec> {
        let mut red = self.clone();
        red.fully_reduce();
        let mut out = Vec::new();
        for free in (0..self.ncols).filter(|c| !red.is_pivot(*c)) {
            let mut v: BTreeMap<usize, Q> = BTreeMap::new();
            v.insert(free, Q::one());
            for (&p, &r) in &red.pivot_row {
                if let Some((_, x)) = red.rows[r].iter().find(|(i, _)| *i == free) {
                    v.insert(p, -x.clone());
                }
            }
            out.push(v.into_iter().collect());
        }
        out
    }
}

pub fn sparse_is_zero(v: &SVec) -> bool {
    v.iter().all(|(_, x)| x.is_zero())
}

pub fn q_abs_max(v: &[Q]) -> Q {
    v.iter().map(|x| x.abs()).max().unwrap_or_else(Q::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_rank_one() {
        let m = Matrix::from_i64(2, 3, &[1, 2, 3, 2, 4, 6]);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn determinant_and_inverse_agree() {
        let m = Matrix::from_i64(3, 3, &[2, 0, 1, 1, 3, 2, 1, 1, 2]);
        assert_eq!(m.determinant(), q(6));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        let singular = Matrix::from_i64(2, 2, &[1, 2, 2, 4]);
        assert!(singular.inverse().is_none());
        assert_eq!(singular.determinant(), q(0));
    }

    #[test]
    fn echelon_membership_and_kernel() {
        let mut e = Echelon::new(4);
        assert!(e.insert(vec![(0, q(1)), (2, q(1))]));
        assert!(e.insert(vec![(1, q(2)), (2, q(-2))]));
        assert!(!e.insert(vec![(0, q(1)), (1, q(1)), (2, q(0))]));
        assert!(e.contains(&vec![(0, q(2)), (1, q(3)), (2, q(-1))]));
        let k = e.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in e.rows() {
                let dot = row.iter().fold(Q::zero(), |acc, (i, x)| {
                    acc + v.iter().find(|(j, _)| j == i).map_or(Q::zero(), |(_, y)| x * y)
                });
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn solve_reports_inconsistency() {
        let a = Matrix::from_i64(2, 1, &[1, 1]);
        assert!(a.solve(&Matrix::from_i64(2, 1, &[1, 2])).is_none());
        assert_eq!(a.solve(&Matrix::from_i64(2, 1, &[3, 3])).unwrap(), Matrix::from_i64(1, 1, &[3]));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn matrix() -> impl Strategy<Value = Matrix> {
            (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
                proptest::collection::vec(-3i64..=3, r * c).prop_map(move |v| Matrix::from_i64(r, c, &v))
            })
        }

        proptest! {
            #[test]
            fn rank_nullity(m in matrix()) {
                prop_assert_eq!(m.rank() + m.kernel().len(), m.cols());
                prop_assert_eq!(m.rank(), m.transpose().rank());
                prop_assert!(m.mul(&m.kernel_matrix()).is_zero());
            }

            #[test]
            fn solve_recovers_a_right_hand_side(m in matrix(), x in proptest::collection::vec(-3i64..=3, 4)) {
                let x = Matrix::from_i64(m.cols(), 1, &x[..m.cols()]);
                let b = m.mul(&x);
                let y = m.solve(&b).expect("b is in the column space");
                prop_assert_eq!(m.mul(&y), b);
            }

            #[test]
            fn echelon_rank_matches_dense(m in matrix()) {
                let mut e = Echelon::new(m.cols());
                for r in 0..m.rows() {
                    e.insert(dense_to_sparse(&m.row(r)));
                }
                prop_assert_eq!(e.rank(), m.rank());
            }
        }
    }
}
