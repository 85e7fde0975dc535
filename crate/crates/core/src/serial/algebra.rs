use std::fmt;

use serde::{Deserialize, Serialize};

use crate::field::{FieldTag, Scalar};
use crate::Error;

/// The truncated polynomial ring `k[x]/(x^n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SerialAlgebra {
    pub n: usize,
    pub field: FieldTag,
}

impl SerialAlgebra {
    pub fn new(n: usize, field: FieldTag) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::IndexConstraint("nilpotency degree n must be at least 1".into()));
        }
        Ok(SerialAlgebra { n, field })
    }

    /// The ring of dual numbers `k[x]/(x^2)`.
    pub fn dual_numbers(field: FieldTag) -> Self {
        SerialAlgebra { n: 2, field }
    }

    /// `c * x^power` as a coefficient vector (zero if `power >= n`).
    pub fn monomial<S: Scalar>(&self, c: S, power: usize) -> Vec<S> {
        let mut v = vec![S::zero(self.field); self.n];
        if power < self.n {
            v[power] = c;
        }
        v
    }

    pub fn mul<S: Scalar>(&self, a: &[S], b: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(self.field); self.n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate().take(self.n - i) {
                if !bj.is_zero() {
                    out[i + j].add_mul_assign(ai, bj);
                }
            }
        }
        out
    }
}

/// Matrix whose entries are elements of a [`SerialAlgebra`], stored as
/// `n` coefficients per entry (coefficient of `x^e` at offset `e`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AMatrix<S> {
    alg: SerialAlgebra,
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> AMatrix<S> {
    pub fn zeros(alg: SerialAlgebra, rows: usize, cols: usize) -> Self {
        AMatrix { alg, rows, cols, data: vec![S::zero(alg.field); rows * cols * alg.n] }
    }

    pub fn identity(alg: SerialAlgebra, size: usize) -> Self {
        Self::scalar_diagonal(alg, size, &alg.monomial(S::one(alg.field), 0))
    }

    /// `a * Id` for a ring element `a`.
    pub fn scalar_diagonal(alg: SerialAlgebra, size: usize, a: &[S]) -> Self {
        let mut m = Self::zeros(alg, size, size);
        for i in 0..size {
            m.set_entry(i, i, a);
        }
        m
    }

    /// 1x1 matrix holding `c x^power`.
    pub fn single(alg: SerialAlgebra, c: S, power: usize) -> Self {
        let mut m = Self::zeros(alg, 1, 1);
        m.set_entry(0, 0, &alg.monomial(c, power));
        m
    }

    pub fn from_flat(alg: SerialAlgebra, rows: usize, cols: usize, data: Vec<S>) -> Self {
        assert_eq!(data.len(), rows * cols * alg.n, "flat data length");
        AMatrix { alg, rows, cols, data }
    }

    pub fn algebra(&self) -> SerialAlgebra {
        self.alg
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn flat(&self) -> &[S] {
        &self.data
    }

    pub fn entry(&self, r: usize, c: usize) -> &[S] {
        let n = self.alg.n;
        let start = (r * self.cols + c) * n;
        &self.data[start..start + n]
    }

    pub fn set_entry(&mut self, r: usize, c: usize, value: &[S]) {
        let n = self.alg.n;
        let start = (r * self.cols + c) * n;
        self.data[start..start + n].clone_from_slice(value);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!("{}x{} * {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = Self::zeros(self.alg, self.rows, other.cols);
        let n = self.alg.n;
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(r, k);
                if a.iter().all(Scalar::is_zero) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.entry(k, c);
                    let start = (r * out.cols + c) * n;
                    for (i, ai) in a.iter().enumerate() {
                        if ai.is_zero() {
                            continue;
                        }
                        for (j, bj) in b.iter().enumerate().take(n - i) {
                            if !bj.is_zero() {
                                out.data[start + i + j].add_mul_assign(ai, bj);
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch(format!("{}x{} + {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        Ok(AMatrix { alg: self.alg, rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&S::one(self.alg.field).neg())
    }

    pub fn scale(&self, s: &S) -> Self {
        let data = self.data.iter().map(|a| a.mul(s)).collect();
        AMatrix { alg: self.alg, rows: self.rows, cols: self.cols, data }
    }
}

impl<S: Scalar> fmt::Debug for AMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", format_poly(self.entry(r, c)))?;
            }
        }
        write!(f, "]")
    }
}

fn format_poly<S: Scalar>(p: &[S]) -> String {
    let terms: Vec<String> = p
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| match e {
            0 => c.to_string(),
            1 => format!("{c}x"),
            _ => format!("{c}x^{e}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}
