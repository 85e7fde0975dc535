use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::algebra::{AMatrix, SerialAlgebra};
use super::complex::Complex;
use crate::field::Scalar;
use crate::Error;

/// Chain map between bounded complexes. Only nonzero components are
/// stored, so structural equality is equality of maps.
#[derive(Clone, PartialEq, Eq)]
pub struct ChainMap<S> {
    source: Arc<Complex<S>>,
    target: Arc<Complex<S>>,
    comps: BTreeMap<i64, AMatrix<S>>,
}

impl<S: Scalar> ChainMap<S> {
    /// Builds a chain map from components `f_i : X_i -> Y_i`, checking shapes
    /// and commutation with the differentials.
    pub fn from_components(
        source: Arc<Complex<S>>,
        target: Arc<Complex<S>>,
        comps: Vec<(i64, AMatrix<S>)>,
    ) -> Result<Self, Error> {
        let map = Self::from_graded(source, target, comps)?;
        map.check_commutes()?;
        Ok(map)
    }

    /// Same as [`from_components`](Self::from_components) without the
    /// commutation check; for callers that produce chain maps by
    /// construction (kernel vectors of the chain condition).
    pub(crate) fn from_graded(
        source: Arc<Complex<S>>,
        target: Arc<Complex<S>>,
        comps: Vec<(i64, AMatrix<S>)>,
    ) -> Result<Self, Error> {
        let alg = source.algebra();
        if target.algebra() != alg {
            return Err(Error::FieldMismatch);
        }
        let mut stored = BTreeMap::new();
        for (i, m) in comps {
            if m.rows() != target.rank(i) || m.cols() != source.rank(i) || m.algebra() != alg {
                return Err(Error::ShapeMismatch(format!(
                    "component in degree {i} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    target.rank(i),
                    source.rank(i)
                )));
            }
            if !m.is_zero() {
                stored.insert(i, m);
            }
        }
        Ok(ChainMap { source, target, comps: stored })
    }

    fn check_commutes(&self) -> Result<(), Error> {
        let (x, y) = (&self.source, &self.target);
        if x.is_zero() {
            return Ok(());
        }
        for i in x.lo()..=x.hi() + 1 {
            let left = self.component(i - 1).mul(&x.diff(i))?;
            let right = y.diff(i).mul(&self.component(i))?;
            if left != right {
                return Err(Error::NotAChainMap(format!("square at degree {i} does not commute")));
            }
        }
        Ok(())
    }

    pub fn zero(source: Arc<Complex<S>>, target: Arc<Complex<S>>) -> Self {
        ChainMap { source, target, comps: BTreeMap::new() }
    }

    pub fn identity(x: Arc<Complex<S>>) -> Self {
        let comps = if x.is_zero() {
            BTreeMap::new()
        } else {
            x.degrees().map(|i| (i, AMatrix::identity(x.algebra(), x.rank(i)))).collect()
        };
        ChainMap { source: x.clone(), target: x, comps }
    }

    pub fn source(&self) -> &Arc<Complex<S>> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Complex<S>> {
        &self.target
    }

    pub fn algebra(&self) -> SerialAlgebra {
        self.source.algebra()
    }

    pub fn component(&self, i: i64) -> AMatrix<S> {
        self.comps
            .get(&i)
            .cloned()
            .unwrap_or_else(|| AMatrix::zeros(self.algebra(), self.target.rank(i), self.source.rank(i)))
    }

    /// Degrees carrying a nonzero component.
    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.comps.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &Self) -> Result<Self, Error> {
        if *f.target != *self.source {
            return Err(Error::ShapeMismatch("composition of non-composable chain maps".into()));
        }
        let mut comps = Vec::new();
        for (&i, fi) in &f.comps {
            if let Some(gi) = self.comps.get(&i) {
                comps.push((i, gi.mul(fi)?));
            }
        }
        Self::from_graded(f.source.clone(), self.target.clone(), comps)
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::ShapeMismatch("sum of chain maps with different ends".into()));
        }
        let degrees: std::collections::BTreeSet<i64> = self.support().chain(other.support()).collect();
        let comps = degrees
            .into_iter()
            .map(|i| Ok((i, self.component(i).add(&other.component(i))?)))
            .collect::<Result<Vec<_>, Error>>()?;
        Self::from_graded(self.source.clone(), self.target.clone(), comps)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&S::one(self.algebra().field).neg())
    }

    pub fn scale(&self, c: &S) -> Self {
        let comps = self.comps.iter().map(|(&i, m)| (i, m.scale(c))).filter(|(_, m)| !m.is_zero()).collect();
        ChainMap { source: self.source.clone(), target: self.target.clone(), comps }
    }

    /// `Σ^k f : Σ^k X -> Σ^k Y`, with `(Σ^k f)_i = f_{i-k}` (no sign).
    pub fn shift(&self, k: i64) -> Self {
        ChainMap {
            source: Arc::new(self.source.shift(k)),
            target: Arc::new(self.target.shift(k)),
            comps: self.comps.iter().map(|(&i, m)| (i + k, m.clone())).collect(),
        }
    }

    /// Field coordinates of the components, laid out by [`BlockLayout`].
    pub fn to_vector(&self) -> Vec<S> {
        BlockLayout::new(&self.source, &self.target, 0).flatten(|i| self.component(i))
    }

    pub fn from_vector(source: Arc<Complex<S>>, target: Arc<Complex<S>>, v: &[S]) -> Result<Self, Error> {
        let layout = BlockLayout::new(&source, &target, 0);
        if v.len() != layout.len() {
            return Err(Error::DimensionMismatch {
                context: "chain map coordinates",
                expected: layout.len(),
                found: v.len(),
            });
        }
        Self::from_components(source, target, layout.unflatten(v))
    }
}

impl<S: Scalar> fmt::Debug for ChainMap<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChainMap{{")?;
        for (k, (i, m)) in self.comps.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}: {m:?}")?;
        }
        write!(f, "}}")
    }
}

/// Layout of a family of maps `X_i -> Y_{i+shift}` as one field vector:
/// blocks in ascending degree, entries row-major, `n` coefficients per entry.
#[derive(Debug, Clone)]
pub(crate) struct BlockLayout {
    alg: SerialAlgebra,
    /// `(degree i, rows, cols, offset)` for every nonzero block.
    blocks: Vec<(i64, usize, usize, usize)>,
    len: usize,
}

impl BlockLayout {
    pub(crate) fn new<S: Scalar>(x: &Complex<S>, y: &Complex<S>, shift: i64) -> Self {
        let alg = x.algebra();
        let mut blocks = Vec::new();
        let mut len = 0;
        if !x.is_zero() {
            for i in x.degrees() {
                let (rows, cols) = (y.rank(i + shift), x.rank(i));
                if rows > 0 && cols > 0 {
                    blocks.push((i, rows, cols, len));
                    len += rows * cols * alg.n;
                }
            }
        }
        BlockLayout { alg, blocks, len }
    }

    pub(crate) fn len(&self) -> usize {
        self.len
    }

    pub(crate) fn flatten<S: Scalar>(&self, comp: impl Fn(i64) -> AMatrix<S>) -> Vec<S> {
        let mut out = Vec::with_capacity(self.len);
        for &(i, _, _, _) in &self.blocks {
            out.extend_from_slice(comp(i).flat());
        }
        out
    }

    pub(crate) fn unflatten<S: Scalar>(&self, v: &[S]) -> Vec<(i64, AMatrix<S>)> {
        self.blocks
            .iter()
            .map(|&(i, rows, cols, off)| {
                let size = rows * cols * self.alg.n;
                (i, AMatrix::from_flat(self.alg, rows, cols, v[off..off + size].to_vec()))
            })
            .collect()
    }

    /// The family whose only nonzero field coordinate is a 1 at `k`.
    pub(crate) fn unit<S: Scalar>(&self, k: usize) -> Vec<(i64, AMatrix<S>)> {
        let mut v = vec![S::zero(self.alg.field); self.len];
        v[k] = S::one(self.alg.field);
        self.unflatten(&v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldTag, Fp};

    fn alg() -> SerialAlgebra {
        SerialAlgebra::dual_numbers(FieldTag::Prime(7))
    }

    fn interval(m: i64, n: i64) -> Arc<Complex<Fp>> {
        Arc::new(Complex::interval(alg(), m, n).unwrap())
    }

    #[test]
    fn identity_is_a_unit() {
        let x = interval(0, 2);
        let xid = AMatrix::single(alg(), Fp::new(1, 7), 1);
        let f = ChainMap::from_components(x.clone(), x.clone(), vec![(0, xid.clone()), (1, xid.clone()), (2, xid)])
            .unwrap();
        let id = ChainMap::identity(x);
        assert_eq!(id.compose(&f).unwrap(), f);
        assert_eq!(f.compose(&id).unwrap(), f);
        assert!(f.compose(&f).unwrap().is_zero());
    }

    #[test]
    fn rejects_non_commuting_components() {
        let one = AMatrix::identity(alg(), 1);
        let err = ChainMap::from_components(interval(0, 1), interval(0, 1), vec![(0, one)]);
        assert!(matches!(err, Err(Error::NotAChainMap(_))));
    }

    #[test]
    fn vector_round_trip() {
        let x = interval(0, 2);
        let id = ChainMap::identity(x.clone());
        let v = id.to_vector();
        assert_eq!(v.len(), 6);
        assert_eq!(ChainMap::from_vector(x.clone(), x, &v).unwrap(), id);
    }

    #[test]
    fn shift_moves_components() {
        let x = interval(0, 1);
        let s = ChainMap::identity(x.clone()).shift(1);
        assert_eq!(s.source().degrees(), 1..=2);
        assert_eq!(s, ChainMap::identity(Arc::new(x.shift(1))));
    }
}
