//! Dense row-echelon linear algebra over a [`Field`].

use crate::error::{Error, Result};
use crate::ffield::{Field, FieldElement};
use rand::Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(k: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![k.zero(); rows * cols],
        }
    }

    pub fn identity(k: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(k, n, n);
        for i in 0..n {
            m[(i, i)] = k.one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<FieldElement>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_columns(k: &Field, rows: usize, cols: Vec<Vec<FieldElement>>) -> Matrix {
        let mut m = Matrix::zeros(k, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &x) in col.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    pub fn diagonal(k: &Field, entries: &[FieldElement]) -> Matrix {
        let mut m = Matrix::zeros(k, entries.len(), entries.len());
        for (i, &x) in entries.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    /// `I + c E_{ij}` with `i != j`.
    pub fn elementary(k: &Field, n: usize, i: usize, j: usize, c: FieldElement) -> Matrix {
        assert_ne!(i, j, "elementary matrices are off-diagonal");
        let mut m = Matrix::identity(k, n);
        m[(i, j)] = c;
        m
    }

    /// Uniform entries from `k`, with no invertibility guarantee.
    pub fn random<R: Rng + ?Sized>(k: &Field, rows: usize, cols: usize, rng: &mut R) -> Matrix {
        let q = k.order();
        let mut m = Matrix::zeros(k, rows, cols);
        for x in m.data.iter_mut() {
            *x = k.from_index(rng.gen_range(0..q));
        }
        m
    }

    /// Uniform on `GL_n(k)` by rejection on the determinant.
    pub fn random_invertible<R: Rng + ?Sized>(k: &Field, n: usize, rng: &mut R) -> Matrix {
        loop {
            let m = Matrix::random(k, n, n, rng);
            if !m.det(k).is_zero() {
                return m;
            }
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)]);
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, k: &Field, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(k, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other[(l, j)];
                    if !b.is_zero() {
                        out[(i, j)] = k.add(out[(i, j)], k.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, k: &Field, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![k.zero(); self.rows];
        for (j, &x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self[(i, j)];
                if !a.is_zero() {
                    *o = k.add(*o, k.mul(a, x));
                }
            }
        }
        out
    }

    pub fn rank(&self, k: &Field) -> usize {
        let mut e = Echelon::new(self.cols);
        for i in 0..self.rows {
            e.insert(k, self.row(i).to_vec());
        }
        e.rank()
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self, k: &Field) -> FieldElement {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = k.one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return k.zero();
            };
            if piv != col {
                a.swap_rows(piv, col);
                det = k.neg(det);
            }
            let pv = a[(col, col)];
            det = k.mul(det, pv);
            let inv = k.inv(pv).expect("nonzero pivot");
            for r in col + 1..n {
                let f = k.mul(a[(r, col)], inv);
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = k.sub(a[(r, c)], k.mul(f, a[(col, c)]));
                    a[(r, c)] = v;
                }
            }
        }
        det
    }

    pub fn inverse(&self, k: &Field) -> Result<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(k, n);
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or(Error::SingularMatrix)?;
            a.swap_rows(piv, col);
            inv.swap_rows(piv, col);
            let s = k.inv(a[(col, col)])?;
            a.scale_row(k, col, s);
            inv.scale_row(k, col, s);
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[(r, col)];
                if f.is_zero() {
                    continue;
                }
                a.axpy_row(k, r, col, k.neg(f));
                inv.axpy_row(k, r, col, k.neg(f));
            }
        }
        Ok(inv)
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn nullspace(&self, k: &Field) -> Vec<Vec<FieldElement>> {
        let mut e = Echelon::new(self.cols);
        for i in 0..self.rows {
            e.insert(k, self.row(i).to_vec());
        }
        let pivots = e.pivots().to_vec();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![k.zero(); self.cols];
                x[f] = k.one();
                for (row, &pc) in e.basis().iter().zip(&pivots) {
                    x[pc] = k.neg(row[f]);
                }
                x
            })
            .collect()
    }

    /// Solve `self * x = b`; `None` when `b` is outside the column space.
    pub fn solve(&self, k: &Field, b: &[FieldElement]) -> Option<Vec<FieldElement>> {
        assert_eq!(b.len(), self.rows);
        // Row-reduce the augmented matrix.
        let mut aug = Matrix::zeros(k, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, self.cols)] = b[i];
        }
        let mut e = Echelon::new(self.cols + 1);
        for i in 0..self.rows {
            e.insert(k, aug.row(i).to_vec());
        }
        if e.pivots().contains(&self.cols) {
            return None;
        }
        let mut x = vec![k.zero(); self.cols];
        for (row, &pc) in e.basis().iter().zip(e.pivots()) {
            x[pc] = row[self.cols];
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, k: &Field, r: usize, s: FieldElement) {
        for j in 0..self.cols {
            self[(r, j)] = k.mul(self[(r, j)], s);
        }
    }

    /// row[dst] += f * row[src]
    fn axpy_row(&mut self, k: &Field, dst: usize, src: usize, f: FieldElement) {
        for j in 0..self.cols {
            let v = self[(src, j)];
            if !v.is_zero() {
                self[(dst, j)] = k.add(self[(dst, j)], k.mul(f, v));
            }
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = FieldElement;
    fn index(&self, (i, j): (usize, usize)) -> &FieldElement {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FieldElement {
        &mut self.data[i * self.cols + j]
    }
}

/// `v += f * w`
pub fn axpy(k: &Field, v: &mut [FieldElement], f: FieldElement, w: &[FieldElement]) {
    if f.is_zero() {
        return;
    }
    for (x, &y) in v.iter_mut().zip(w) {
        if !y.is_zero() {
            *x = k.add(*x, k.mul(f, y));
        }
    }
}

/// A subspace of `k^dim` kept as a reduced row-echelon basis.
///
/// Rows are sorted by pivot column; each pivot entry is one and every other
/// row is zero in that column. The reduced form is unique, so equality of
/// echelons is equality of subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    dim: usize,
    rows: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(dim: usize) -> Echelon {
        Echelon {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(k: &Field, dim: usize) -> Echelon {
        let mut e = Echelon::new(dim);
        for i in 0..dim {
            let mut v = vec![k.zero(); dim];
            v[i] = k.one();
            e.rows.push(v);
            e.pivots.push(i);
        }
        e
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vec<FieldElement>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtract the component along every pivot; the result vanishes on all
    /// pivot columns and is zero iff `v` lies in the span.
    pub fn reduce(&self, k: &Field, v: &mut [FieldElement]) {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if !c.is_zero() {
                axpy(k, v, k.neg(c), row);
            }
        }
    }

    pub fn contains(&self, k: &Field, v: &[FieldElement]) -> bool {
        let mut w = v.to_vec();
        self.reduce(k, &mut w);
        w.iter().all(FieldElement::is_zero)
    }

    /// Coordinates with respect to the echelon basis, if `v` is in the span.
    pub fn coordinates(&self, k: &Field, v: &[FieldElement]) -> Option<Vec<FieldElement>> {
        let coords: Vec<FieldElement> = self.pivots.iter().map(|&pc| v[pc]).collect();
        let mut w = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&coords) {
            axpy(k, &mut w, k.neg(c), row);
        }
        w.iter().all(FieldElement::is_zero).then_some(coords)
    }

    /// Add `v` to the span. Returns whether the rank grew.
    pub fn insert(&mut self, k: &Field, mut v: Vec<FieldElement>) -> bool {
        assert_eq!(v.len(), self.dim);
        self.reduce(k, &mut v);
        let Some(pc) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let s = k.inv(v[pc]).expect("nonzero");
        for x in v.iter_mut() {
            *x = k.mul(*x, s);
        }
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if !c.is_zero() {
                axpy(k, row, k.neg(c), &v);
            }
        }
        let at = self.pivots.partition_point(|&q| q < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, v);
        true
    }

    /// Re-express the basis in another field (used to lift prime-field data).
    pub fn map(&self, f: impl Fn(FieldElement) -> FieldElement) -> Echelon {
        Echelon {
            dim: self.dim,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&x| f(x)).collect())
                .collect(),
            pivots: self.pivots.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k5() -> Field {
        Field::prime(5).unwrap()
    }

    fn mat(k: &Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| k.from_int(x)).collect())
                .collect(),
        )
    }

    /// Leibniz expansion, used as an independent determinant.
    fn leibniz(k: &Field, a: &Matrix) -> FieldElement {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for i in 0..n {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = a.rows();
        let mut acc = k.zero();
        for p in perms(n) {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if p[i] > p[j] {
                        inversions += 1;
                    }
                }
            }
            let mut term = k.one();
            for (i, &pi) in p.iter().enumerate() {
                term = k.mul(term, a[(i, pi)]);
            }
            if inversions % 2 == 1 {
                term = k.neg(term);
            }
            acc = k.add(acc, term);
        }
        acc
    }

    #[test]
    fn det_and_inverse() {
        let k = k5();
        let a = mat(&k, &[&[1, 2, 0], &[3, 1, 4], &[0, 2, 2]]);
        assert_eq!(a.det(&k), leibniz(&k, &a));
        let inv = a.inverse(&k).unwrap();
        assert_eq!(a.mul(&k, &inv), Matrix::identity(&k, 3));
        let s = mat(&k, &[&[1, 2], &[2, 4]]);
        assert_eq!(s.det(&k), k.zero());
        assert_eq!(s.inverse(&k), Err(Error::SingularMatrix));
    }

    #[test]
    fn nullspace_and_solve() {
        let k = k5();
        let a = mat(&k, &[&[1, 2, 3], &[2, 4, 2]]);
        let ns = a.nullspace(&k);
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&k, &ns[0]).iter().all(|x| x.is_zero()));
        let b = vec![k.from_int(1), k.from_int(0)];
        let x = a.solve(&k, &b).unwrap();
        assert_eq!(a.mul_vec(&k, &x), b);
        let c = mat(&k, &[&[1, 0], &[2, 0]]);
        assert!(c.solve(&k, &[k.one(), k.one()]).is_none());
    }

    #[test]
    fn echelon_membership() {
        let k = k5();
        let mut e = Echelon::new(3);
        assert!(e.insert(&k, vec![k.from_int(0), k.from_int(2), k.from_int(1)]));
        assert!(e.insert(&k, vec![k.from_int(1), k.from_int(1), k.from_int(0)]));
        assert!(!e.insert(&k, vec![k.from_int(1), k.from_int(3), k.from_int(1)]));
        assert_eq!(e.pivots(), &[0, 1]);
        let v = vec![k.from_int(2), k.from_int(0), k.from_int(4)];
        let c = e.coordinates(&k, &v);
        assert!(c.is_some() == e.contains(&k, &v));
    }

    proptest! {
        #[test]
        fn det_matches_leibniz(entries in proptest::collection::vec(0i64..5, 16)) {
            let k = k5();
            let a = Matrix::from_rows(entries.chunks(4).map(|r| r.iter().map(|&x| k.from_int(x)).collect()).collect());
            prop_assert_eq!(a.det(&k), leibniz(&k, &a));
            prop_assert_eq!(a.det(&k).is_zero(), a.rank(&k) < 4);
        }
    }
}
