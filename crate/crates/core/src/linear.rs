//! Dense exact linear algebra: row reduction, kernels, solving.

use std::fmt;

use crate::field::{FieldTag, Scalar};
use crate::Error;

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix<S> {
    field: FieldTag,
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> ExactMatrix<S> {
    pub fn zeros(field: FieldTag, rows: usize, cols: usize) -> Self {
        ExactMatrix { field, rows, cols, data: vec![S::zero(field); rows * cols] }
    }

    pub fn identity(field: FieldTag, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, S::one(field));
        }
        m
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows(field: FieldTag, cols: usize, rows: Vec<Vec<S>>) -> Result<Self, Error> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { context: "from_rows", expected: cols, found: row.len() });
            }
            data.extend(row);
        }
        Ok(ExactMatrix { field, rows: n, cols, data })
    }

    /// Builds a matrix from row-major entries.
    pub fn from_entries(field: FieldTag, rows: usize, cols: usize, data: Vec<S>) -> Result<Self, Error> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { context: "from_entries", expected: rows * cols, found: data.len() });
        }
        Ok(ExactMatrix { field, rows, cols, data })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: FieldTag, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&v| S::from_i64(field, v))
            })
            .collect();
        ExactMatrix { field, rows: rows.len(), cols, data }
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut S {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { context: "matrix product", expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.get_mut(r, c).add_mul_assign(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                context: "matrix-vector product",
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = S::zero(self.field);
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_mul_assign(a, b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                context: "matrix sum",
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        Ok(ExactMatrix { field: self.field, rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.scale(&S::one(self.field).neg()))
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn scale(&self, s: &S) -> Self {
        let data = self.data.iter().map(|a| a.mul(s)).collect();
        ExactMatrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// Reduced row-echelon form.
    pub fn rref(&self) -> Rref<S> {
        let mut reduced = self.clone();
        let pivots = S::row_reduce(&mut reduced);
        Rref { rank: pivots.len(), pivots, reduced }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the null space `{v : M v = 0}`, one vector per free column,
    /// with a 1 in that column.
    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        let Rref { pivots, reduced, .. } = self.rref();
        kernel_from_rref(self.field, self.cols, &pivots, &reduced)
    }

    /// Solves `M x = b`. Returns `Ok(None)` when the system is inconsistent.
    pub fn solve(&self, b: &[S]) -> Result<Option<Solution<S>>, Error> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                context: "solve right-hand side",
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut aug = Self::zeros(self.field, self.rows, self.cols + 1);
        for (r, br) in b.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, br.clone());
        }
        let pivots = S::row_reduce(&mut aug);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut particular = vec![S::zero(self.field); self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            particular[c] = aug.get(i, self.cols).clone();
        }
        let homogeneous = kernel_from_rref(self.field, self.cols, &pivots, &aug);
        Ok(Some(Solution { particular, homogeneous }))
    }
}

impl<S: Scalar> fmt::Debug for ExactMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn kernel_from_rref<S: Scalar>(
    field: FieldTag,
    cols: usize,
    pivots: &[usize],
    reduced: &ExactMatrix<S>,
) -> Vec<Vec<S>> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![S::zero(field); cols];
            v[free] = S::one(field);
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = reduced.get(i, free).neg();
            }
            v
        })
        .collect()
}

/// Result of [`ExactMatrix::rref`].
#[derive(Clone, Debug)]
pub struct Rref<S: Scalar> {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub reduced: ExactMatrix<S>,
}

/// Solution set of a consistent linear system: `particular + span(homogeneous)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution<S> {
    pub particular: Vec<S>,
    pub homogeneous: Vec<Vec<S>>,
}

/// Plain Gauss-Jordan elimination; returns pivot columns.
pub fn gauss_jordan<S: Scalar>(m: &mut ExactMatrix<S>) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = m.get(r, c).inv().expect("nonzero pivot");
        for j in c..cols {
            let v = m.get(r, j).mul(&inv);
            m.set(r, j, v);
        }
        let pivot_row: Vec<S> = m.row(r)[c..].to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = m.get(i, c).clone();
            if factor.is_zero() {
                continue;
            }
            let factor = factor.neg();
            for (off, pv) in pivot_row.iter().enumerate() {
                if !pv.is_zero() {
                    m.get_mut(i, c + off).add_mul_assign(&factor, pv);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A subspace of `field^dim` held as a reduced echelon basis.
///
/// Supports reduction of vectors modulo the subspace and extraction of
/// coordinates against the echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace<S> {
    field: FieldTag,
    dim: usize,
    basis: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(field: FieldTag, dim: usize) -> Self {
        Subspace { field, dim, basis: Vec::new(), pivots: Vec::new() }
    }

    /// Span of the given vectors (any number, possibly dependent).
    pub fn span(field: FieldTag, dim: usize, vectors: Vec<Vec<S>>) -> Self {
        if vectors.is_empty() {
            return Self::zero(field, dim);
        }
        let m = ExactMatrix::from_rows(field, dim, vectors).expect("vectors of ambient length");
        let Rref { pivots, reduced, .. } = m.rref();
        let basis = (0..pivots.len()).map(|i| reduced.row(i).to_vec()).collect();
        Subspace { field, dim, basis, pivots }
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Normal form of `v` modulo the subspace: zero on every pivot column.
    pub fn reduce(&self, v: &[S]) -> Vec<S> {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].neg();
            for (o, b) in out.iter_mut().zip(row) {
                if !b.is_zero() {
                    o.add_mul_assign(&factor, b);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[S]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coordinates of `v` against the echelon basis, or `None` if `v` is
    /// not in the subspace.
    pub fn coordinates(&self, v: &[S]) -> Option<Vec<S>> {
        let coords: Vec<S> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let rebuilt = self.combine(&coords);
        (rebuilt == v).then_some(coords)
    }

    pub fn combine(&self, coords: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(self.field); self.dim];
        for (c, row) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(row) {
                if !b.is_zero() {
                    o.add_mul_assign(c, b);
                }
            }
        }
        out
    }
}

/// Echelon basis of the span of `vectors`, as rows; convenience wrapper.
pub fn echelon_basis<S: Scalar>(field: FieldTag, dim: usize, vectors: Vec<Vec<S>>) -> Vec<Vec<S>> {
    Subspace::span(field, dim, vectors).basis
}

/// Row space of a matrix fed one row at a time, kept fully reduced so that
/// each new row costs one pass per nonzero pivot entry.
#[derive(Clone, Debug)]
pub struct RowEchelon<S> {
    field: FieldTag,
    cols: usize,
    rows: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> RowEchelon<S> {
    pub fn new(field: FieldTag, cols: usize) -> Self {
        RowEchelon { field, cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<S>) -> bool {
        assert_eq!(v.len(), self.cols, "row length");
        if self.rank() == self.cols {
            return false;
        }
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].neg();
            for (o, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    o.add_mul_assign(&factor, b);
                }
            }
        }
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero");
        for c in v.iter_mut() {
            *c = c.mul(&inv);
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].neg();
            for (o, b) in row.iter_mut().zip(&v) {
                if !b.is_zero() {
                    o.add_mul_assign(&factor, b);
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn merge(&mut self, other: RowEchelon<S>) {
        for row in other.rows {
            self.insert(row);
        }
    }

    /// Null space of the accumulated rows, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        let mut is_pivot = vec![None; self.cols];
        for (i, &p) in self.pivots.iter().enumerate() {
            is_pivot[p] = Some(i);
        }
        (0..self.cols)
            .filter(|&c| is_pivot[c].is_none())
            .map(|free| {
                let mut v = vec![S::zero(self.field); self.cols];
                v[free] = S::one(self.field);
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = row[free].neg();
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    const Q: FieldTag = FieldTag::Rationals;
    const F2: FieldTag = FieldTag::Prime(2);

    #[test]
    fn rref_identity_and_zero() {
        let id = ExactMatrix::<Rational>::identity(Q, 3);
        let r = id.rref();
        assert_eq!((r.rank, r.pivots.clone()), (3, vec![0, 1, 2]));
        let z = ExactMatrix::<Rational>::zeros(Q, 2, 4);
        let r = z.rref();
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_rank_one_over_rationals() {
        // [[1,2],[2,4]] -> [[1,2],[0,0]] by R2 -= 2 R1.
        let m = ExactMatrix::<Rational>::from_i64(Q, &[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.reduced, ExactMatrix::from_i64(Q, &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn kernel_examples() {
        assert!(ExactMatrix::<Rational>::identity(Q, 4).kernel_basis().is_empty());
        assert_eq!(ExactMatrix::<Rational>::zeros(Q, 1, 3).kernel_basis().len(), 3);
        // Over F_2 the only nonzero vector killed by [1 1] is (1,1).
        let m = ExactMatrix::<Fp>::from_i64(F2, &[&[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![Fp::new(1, 2), Fp::new(1, 2)]]);
    }

    #[test]
    fn solve_examples() {
        let id = ExactMatrix::<Rational>::identity(Q, 2);
        let b = vec![Rational::new(3, 1), Rational::new(-1, 2)];
        assert_eq!(id.solve(&b).unwrap().unwrap().particular, b);

        let z = ExactMatrix::<Rational>::zeros(Q, 2, 2);
        assert!(z.solve(&[Rational::new(1, 1), Rational::new(0, 1)]).unwrap().is_none());

        let m = ExactMatrix::<Rational>::from_i64(Q, &[&[1, 2], &[2, 4]]);
        let ok = m.solve(&[Rational::new(1, 1), Rational::new(2, 1)]).unwrap().unwrap();
        assert_eq!(m.mul_vec(&ok.particular).unwrap(), vec![Rational::new(1, 1), Rational::new(2, 1)]);
        assert_eq!(ok.homogeneous.len(), 1);
        assert!(m.solve(&[Rational::new(1, 1), Rational::new(1, 1)]).unwrap().is_none());
    }

    #[test]
    fn solve_rejects_wrong_length() {
        let m = ExactMatrix::<Rational>::identity(Q, 2);
        assert!(matches!(m.solve(&[Rational::new(1, 1)]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn subspace_coordinates() {
        let f = FieldTag::Prime(5);
        let v = |xs: &[i64]| xs.iter().map(|&x| Fp::new(x, 5)).collect::<Vec<_>>();
        let s = Subspace::span(f, 3, vec![v(&[1, 2, 0]), v(&[2, 4, 0]), v(&[0, 1, 1])]);
        assert_eq!(s.dim(), 2);
        let w = v(&[1, 3, 1]);
        let c = s.coordinates(&w).unwrap();
        assert_eq!(s.combine(&c), w);
        assert!(s.coordinates(&v(&[0, 0, 1])).is_none());
        assert!(s.reduce(&w).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn row_echelon_matches_batch_kernel() {
        let f = FieldTag::Prime(7);
        let m = ExactMatrix::<Fp>::from_i64(f, &[&[1, 2, 0, 3], &[2, 4, 1, 0], &[3, 6, 1, 3]]);
        let mut e = RowEchelon::new(f, 4);
        for r in m.row_vectors() {
            e.insert(r);
        }
        assert_eq!(e.rank(), m.rank());
        assert_eq!(Subspace::span(f, 4, e.kernel_basis()).basis(), Subspace::span(f, 4, m.kernel_basis()).basis());
    }
}
