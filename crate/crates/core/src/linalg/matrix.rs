//! Dense matrices over a [`Field`] with exact Gauss-Jordan elimination.

use std::fmt;

use thiserror::Error;

use super::field::{Field, FieldElem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operands live over different fields")]
    FieldMismatch,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.spec())?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|&x| self.field.display(x)).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![FieldElem::ZERO; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_vec(field: &Field, rows: usize, cols: usize, data: Vec<FieldElem>) -> Matrix {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows x cols");
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<FieldElem>]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Matrix { field: field.clone(), rows: rows.len(), cols, data }
    }

    /// Builds a matrix from integer rows, reducing entries into the prime subfield.
    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&v| field.from_int(v))
            })
            .collect();
        Matrix { field: field.clone(), rows: rows.len(), cols, data }
    }

    /// The matrix whose columns are the given vectors.
    pub fn from_columns(field: &Field, rows: usize, columns: &[Vec<FieldElem>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &v) in c.iter().enumerate() {
                m.data[i * columns.len() + j] = v;
            }
        }
        m
    }

    /// Matrix unit `e_{ij}` (zero-based) of the given shape.
    pub fn unit(field: &Field, rows: usize, cols: usize, i: usize, j: usize) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        m.set(i, j, field.one());
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[FieldElem] {
        &self.data
    }

    pub fn into_data(self) -> Vec<FieldElem> {
        self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [FieldElem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<FieldElem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<FieldElem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column_vectors(&self) -> Vec<Vec<FieldElem>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| self.get(i, j) == if i == j { self.field.one() } else { self.field.zero() })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    /// Matrix product. Panics on a shape mismatch; use [`Matrix::checked_mul`]
    /// for user-supplied shapes.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if !a.is_zero() {
                    f.axpy(out_row, a, other.row(k));
                }
            }
        }
        out
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul(other))
    }

    pub fn mul_vec(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows).map(|i| self.field.dot(self.row(i), v)).collect()
    }

    /// Row vector times matrix: `v^T A`.
    pub fn vec_mul(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(self.rows, v.len(), "vector-matrix shape mismatch");
        let mut out = vec![FieldElem::ZERO; self.cols];
        for (i, &c) in v.iter().enumerate() {
            self.field.axpy(&mut out, c, self.row(i));
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scaled(&self, c: FieldElem) -> Matrix {
        let mut m = self.clone();
        self.field.scale(&mut m.data, c);
        m
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: FieldElem, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field.clone();
        f.axpy(&mut self.data, c, &other.data);
    }

    /// Linear combination `Σ c_i M_i` of equally shaped matrices.
    pub fn combination(field: &Field, rows: usize, cols: usize, terms: &[(FieldElem, &Matrix)]) -> Matrix {
        let mut out = Matrix::zeros(field, rows, cols);
        for (c, m) in terms {
            out.add_scaled(*c, m);
        }
        out
    }

    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        let f = &self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(f, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, f.mul(a, other.get(k, l)));
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zeros(&self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            out.row_mut(i)[..self.cols].copy_from_slice(self.row(i));
            out.row_mut(i)[self.cols..].copy_from_slice(other.row(i));
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            out.row_mut(i)[..self.cols].copy_from_slice(self.row(i));
        }
        for i in 0..other.rows {
            out.row_mut(self.rows + i)[self.cols..].copy_from_slice(other.row(i));
        }
        out
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        let mut out = Matrix::zeros(&self.field, rows.len(), cols.len());
        for (oi, i) in rows.enumerate() {
            out.row_mut(oi).copy_from_slice(&self.row(i)[cols.clone()]);
        }
        out
    }

    /// Reduced row echelon form and pivot columns. Pivots are chosen as the
    /// first nonzero entry in each column, top to bottom.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub(crate) fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        let mut pivot_row = vec![FieldElem::ZERO; cols];
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.data[i * cols + c].is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.data[r * cols + c]).expect("pivot is nonzero");
            f.scale(&mut self.data[r * cols..(r + 1) * cols], inv);
            pivot_row.copy_from_slice(&self.data[r * cols..(r + 1) * cols]);
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let a = self.data[i * cols + c];
                if !a.is_zero() {
                    f.axpy(&mut self.data[i * cols + c..(i + 1) * cols], f.neg(a), &pivot_row[c..]);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one vector per free column.
    pub fn null_space(&self) -> Vec<Vec<FieldElem>> {
        let (r, pivots) = self.rref();
        let f = &self.field;
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![FieldElem::ZERO; self.cols];
                v[free] = f.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = f.neg(r.get(i, free));
                }
                v
            })
            .collect()
    }

    /// Null-space basis as the columns of a `cols × (cols - rank)` matrix.
    pub fn kernel_basis(&self) -> Matrix {
        Matrix::from_columns(&self.field, self.cols, &self.null_space())
    }

    /// Some `x` with `self · x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[FieldElem]) -> Result<Option<Vec<FieldElem>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "right-hand side has length {} but the matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        let aug = self.hstack(&Matrix::from_columns(&self.field, self.rows, &[b.to_vec()]));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![FieldElem::ZERO; self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols);
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&Matrix::identity(&self.field, n)).rref();
        if n > 0 && (pivots.len() < n || pivots[n - 1] != n - 1) {
            return None;
        }
        Some(r.submatrix(0..n, n..2 * n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn pow(&self, mut k: u64) -> Matrix {
        let mut r = Matrix::identity(&self.field, self.rows);
        let mut b = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                r = r.mul(&b);
            }
            b = b.mul(&b);
            k >>= 1;
        }
        r
    }
}

/// A subspace of `F^n` held as a reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace { basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace { basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    pub fn span(field: &Field, ambient: usize, vectors: &[Vec<FieldElem>]) -> Subspace {
        let mut m = Matrix::from_rows(field, ambient, vectors);
        let pivots = m.rref_in_place();
        let basis = m.submatrix(0..pivots.len(), 0..ambient);
        Subspace { basis, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    /// Basis vectors as rows (reduced row echelon form).
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<FieldElem>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis; the result vanishes on pivot columns.
    pub fn reduce(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        let f = self.basis.field();
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = r[p];
            if !c.is_zero() {
                f.axpy(&mut r, f.neg(c), self.basis.row(i));
            }
        }
        r
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[FieldElem]) -> Option<Vec<FieldElem>> {
        let c: Vec<FieldElem> = self.pivots.iter().map(|&p| v[p]).collect();
        let back = self.basis.vec_mul(&c);
        (back == v).then_some(c)
    }

    /// Coordinates of a vector already known to lie in the subspace.
    pub fn coords_unchecked(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        self.pivots.iter().map(|&p| v[p]).collect()
    }

    /// Kernel of `m` with the free columns as pivots: basis vector `i` is 1
    /// at free column `i`, 0 at the other free columns.
    pub fn kernel_of(m: &Matrix) -> Subspace {
        let (r, pivots) = m.rref();
        let f = m.field();
        let mut is_pivot = vec![false; m.cols()];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..m.cols()).filter(|&c| !is_pivot[c]).collect();
        let mut basis = Matrix::zeros(f, free.len(), m.cols());
        for (k, &fc) in free.iter().enumerate() {
            let row = basis.row_mut(k);
            row[fc] = f.one();
            for (i, &p) in pivots.iter().enumerate() {
                row[p] = f.neg(r.get(i, fc));
            }
        }
        Subspace { basis, pivots: free }
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::span(self.field(), self.ambient(), &vs)
    }

    /// Adds `v` to the subspace; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[FieldElem]) -> bool {
        let f = self.field().clone();
        let mut r = self.reduce(v);
        let Some(piv) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(r[piv]).expect("nonzero");
        f.scale(&mut r, inv);
        let n = self.ambient();
        for i in 0..self.pivots.len() {
            let c = self.basis.data[i * n + piv];
            if !c.is_zero() {
                f.axpy(&mut self.basis.data[i * n..(i + 1) * n], f.neg(c), &r);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < piv);
        self.basis.data.splice(pos * n..pos * n, r);
        self.basis.rows += 1;
        self.pivots.insert(pos, piv);
        true
    }

    /// Standard basis indices complementing this subspace (the free columns).
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient()).filter(|&c| !is_pivot[c]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f2 = f(2);
        let (r, piv) = Matrix::identity(&f2, 2).rref();
        assert!(r.is_identity());
        assert_eq!(piv, vec![0, 1]);

        let (r, piv) = Matrix::zeros(&f2, 3, 3).rref();
        assert!(r.is_zero());
        assert!(piv.is_empty());

        let (r, piv) = Matrix::from_ints(&f2, &[&[1, 1], &[1, 1]]).rref();
        assert_eq!(r, Matrix::from_ints(&f2, &[&[1, 1], &[0, 0]]));
        assert_eq!(piv, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        let f2 = f(2);
        assert_eq!(Matrix::identity(&f2, 3).kernel_basis().cols(), 0);
        assert_eq!(Matrix::zeros(&f2, 2, 3).kernel_basis().cols(), 3);
        let k = Matrix::from_ints(&f2, &[&[1, 1]]).kernel_basis();
        assert_eq!(k, Matrix::from_ints(&f2, &[&[1], &[1]]));
    }

    #[test]
    fn solve_examples() {
        let f3 = f(3);
        let b = vec![f3.from_int(2), f3.from_int(1)];
        assert_eq!(Matrix::identity(&f3, 2).solve(&b).unwrap(), Some(b.clone()));
        assert_eq!(Matrix::zeros(&f3, 2, 2).solve(&b).unwrap(), None);
        let a = Matrix::from_ints(&f3, &[&[1, 1], &[0, 1]]);
        assert_eq!(a.solve(&b).unwrap(), Some(vec![f3.one(), f3.one()]));
        assert!(matches!(a.solve(&[f3.one()]), Err(LinalgError::DimensionMismatch(_))));
    }

    #[test]
    fn kronecker_examples() {
        let f2 = f(2);
        let i6 = Matrix::identity(&f2, 2).kronecker(&Matrix::identity(&f2, 3));
        assert!(i6.is_identity() && i6.rows() == 6);
        assert!(Matrix::identity(&f2, 2).kronecker(&Matrix::zeros(&f2, 2, 2)).is_zero());
        let k = Matrix::unit(&f2, 2, 2, 0, 0).kronecker(&Matrix::unit(&f2, 2, 2, 0, 1));
        assert_eq!(k, Matrix::unit(&f2, 4, 4, 0, 1));
    }

    #[test]
    fn subspace_coords_and_reduce() {
        let f3 = f(3);
        let v1 = vec![f3.from_int(1), f3.from_int(2), f3.from_int(0)];
        let v2 = vec![f3.from_int(0), f3.from_int(1), f3.from_int(1)];
        let s = Subspace::span(&f3, 3, &[v1.clone(), v2.clone()]);
        assert_eq!(s.dim(), 2);
        let mut w = v1.clone();
        f3.axpy(&mut w, f3.from_int(2), &v2);
        let c = s.coords(&w).unwrap();
        assert_eq!(s.basis().vec_mul(&c), w);
        assert!(s.coords(&[f3.one(), f3.zero(), f3.zero()]).is_none());
        assert_eq!(s.complement_indices().len(), 1);
    }

    #[test]
    fn inverse_round_trip() {
        let f5 = f(5);
        let a = Matrix::from_ints(&f5, &[&[1, 2], &[3, 4]]);
        let ai = a.inverse().unwrap();
        assert!(a.mul(&ai).is_identity());
        assert!(Matrix::from_ints(&f5, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
