use std::fmt;
use std::sync::Arc;

use super::algebra::{AMatrix, SerialAlgebra};
use super::chain_map::ChainMap;
use crate::field::Scalar;
use crate::Error;

/// Bounded complex of free modules over a serial algebra, homologically
/// graded: `d_i : X_i -> X_{i-1}`.
///
/// The representation is normalised: the outermost degrees have nonzero
/// rank, and the zero complex has no degrees at all.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Complex<S> {
    alg: SerialAlgebra,
    lo: i64,
    ranks: Vec<usize>,
    /// `diffs[k]` is `d_{lo+k+1}`.
    diffs: Vec<AMatrix<S>>,
}

impl<S: Scalar> Complex<S> {
    pub fn zero(alg: SerialAlgebra) -> Self {
        Complex { alg, lo: 0, ranks: Vec::new(), diffs: Vec::new() }
    }

    /// Builds a complex from free ranks in degrees `lo, lo+1, ...` and the
    /// differentials `d_{lo+1}, d_{lo+2}, ...`, checking shapes and `d∘d = 0`.
    pub fn new(alg: SerialAlgebra, lo: i64, ranks: Vec<usize>, diffs: Vec<AMatrix<S>>) -> Result<Self, Error> {
        if diffs.len() + 1 != ranks.len().max(1) {
            return Err(Error::DimensionMismatch {
                context: "complex differentials",
                expected: ranks.len().saturating_sub(1),
                found: diffs.len(),
            });
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.rows() != ranks[k] || d.cols() != ranks[k + 1] || d.algebra() != alg {
                return Err(Error::ShapeMismatch(format!(
                    "d_{} has shape {}x{}, expected {}x{}",
                    lo + k as i64 + 1,
                    d.rows(),
                    d.cols(),
                    ranks[k],
                    ranks[k + 1]
                )));
            }
        }
        for w in diffs.windows(2) {
            if !w[0].mul(&w[1])?.is_zero() {
                return Err(Error::NotAChainMap("d∘d ≠ 0".into()));
            }
        }
        Ok(Self::normalised(alg, lo, ranks, diffs))
    }

    fn normalised(alg: SerialAlgebra, mut lo: i64, mut ranks: Vec<usize>, mut diffs: Vec<AMatrix<S>>) -> Self {
        while ranks.first() == Some(&0) {
            ranks.remove(0);
            if !diffs.is_empty() {
                diffs.remove(0);
            }
            lo += 1;
        }
        while ranks.last() == Some(&0) {
            ranks.pop();
            diffs.pop();
        }
        if ranks.is_empty() {
            return Self::zero(alg);
        }
        Complex { alg, lo, ranks, diffs }
    }

    /// The complex `A_m^nn`: `A` in degrees `m..=nn`, every differential
    /// multiplication by `x`. Only defined over the dual numbers, where
    /// `x^2 = 0`.
    pub fn interval(alg: SerialAlgebra, m: i64, nn: i64) -> Result<Self, Error> {
        if m > nn {
            return Err(Error::InvalidInterval { m, n: nn });
        }
        if alg.n != 2 {
            return Err(Error::IndexConstraint(format!("interval complexes need x^2 = 0, got n = {}", alg.n)));
        }
        let len = (nn - m + 1) as usize;
        let x = AMatrix::single(alg, S::one(alg.field), 1);
        Ok(Complex { alg, lo: m, ranks: vec![1; len], diffs: vec![x; len - 1] })
    }

    /// Stalk complex `A^rank` in a single degree.
    pub fn stalk(alg: SerialAlgebra, degree: i64, rank: usize) -> Self {
        Self::normalised(alg, degree, vec![rank], Vec::new())
    }

    pub fn algebra(&self) -> SerialAlgebra {
        self.alg
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Lowest nonzero degree (meaningless for the zero complex).
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest nonzero degree (`lo - 1` for the zero complex).
    pub fn hi(&self) -> i64 {
        self.lo + self.ranks.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi()
    }

    pub fn rank(&self, i: i64) -> usize {
        if self.is_zero() || i < self.lo || i > self.hi() {
            0
        } else {
            self.ranks[(i - self.lo) as usize]
        }
    }

    /// Total dimension over the base field.
    pub fn total_dimension(&self) -> usize {
        self.ranks.iter().sum::<usize>() * self.alg.n
    }

    /// `d_i : X_i -> X_{i-1}` (a zero matrix of the right shape outside the
    /// stored range).
    pub fn diff(&self, i: i64) -> AMatrix<S> {
        if !self.is_zero() && i > self.lo && i <= self.hi() {
            self.diffs[(i - self.lo - 1) as usize].clone()
        } else {
            AMatrix::zeros(self.alg, self.rank(i - 1), self.rank(i))
        }
    }

    /// `Σ^k X`: `(Σ^k X)_i = X_{i-k}` with differential `(-1)^k d`.
    pub fn shift(&self, k: i64) -> Self {
        let diffs =
            if k.rem_euclid(2) == 1 { self.diffs.iter().map(AMatrix::neg).collect() } else { self.diffs.clone() };
        Complex { alg: self.alg, lo: self.lo + k, ranks: self.ranks.clone(), diffs }
    }

    /// Brutal truncation `ι^n X` (degrees `<= n` kept) with its canonical
    /// map `ι^n X -> X`.
    pub fn truncate(&self, n: i64) -> (Self, ChainMap<S>) {
        let keep = if self.is_zero() { 0 } else { (n - self.lo + 1).clamp(0, self.ranks.len() as i64) as usize };
        let truncated = Self::normalised(
            self.alg,
            self.lo,
            self.ranks[..keep].to_vec(),
            self.diffs[..keep.saturating_sub(1)].to_vec(),
        );
        let source = Arc::new(truncated.clone());
        let target = Arc::new(self.clone());
        let comps = truncated
            .degrees()
            .filter(|_| !truncated.is_zero())
            .map(|i| (i, AMatrix::identity(self.alg, truncated.rank(i))))
            .collect();
        let map = ChainMap::from_components(source, target, comps).expect("identity is a chain map");
        (truncated, map)
    }
}

impl<S: Scalar> fmt::Debug for Complex<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "Complex[")?;
        for i in self.degrees().rev() {
            write!(f, "A^{}@{}", self.rank(i), i)?;
            if i > self.lo {
                write!(f, " --{:?}--> ", self.diff(i))?;
            }
        }
        write!(f, "]")
    }
}
