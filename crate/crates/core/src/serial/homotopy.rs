use std::sync::Arc;

use super::algebra::AMatrix;
use super::chain_map::{BlockLayout, ChainMap};
use super::complex::Complex;
use crate::field::Scalar;
use crate::linear::{ExactMatrix, Subspace};
use crate::Error;

/// A family `h_i : X_i -> Y_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homotopy<S: Scalar> {
    source: Arc<Complex<S>>,
    target: Arc<Complex<S>>,
    comps: Vec<(i64, AMatrix<S>)>,
}

impl<S: Scalar> Homotopy<S> {
    /// A homotopy from components `h_i : X_i -> Y_{i+1}`.
    pub fn from_components(
        source: Arc<Complex<S>>,
        target: Arc<Complex<S>>,
        comps: Vec<(i64, AMatrix<S>)>,
    ) -> Result<Self, Error> {
        for (i, m) in &comps {
            if m.rows() != target.rank(i + 1) || m.cols() != source.rank(*i) {
                return Err(Error::ShapeMismatch(format!("homotopy component in degree {i}")));
            }
        }
        Ok(Homotopy { source, target, comps })
    }

    pub fn component(&self, i: i64) -> AMatrix<S> {
        self.comps
            .iter()
            .find(|(d, _)| *d == i)
            .map(|(_, m)| m.clone())
            .unwrap_or_else(|| AMatrix::zeros(self.source.algebra(), self.target.rank(i + 1), self.source.rank(i)))
    }

    /// `d h + h d`, which is always a chain map.
    pub fn boundary(&self) -> ChainMap<S> {
        let comps = boundary_components(&self.source, &self.target, |i| self.component(i));
        ChainMap::from_graded(self.source.clone(), self.target.clone(), comps).expect("shapes match")
    }
}

fn boundary_components<S: Scalar>(
    x: &Complex<S>,
    y: &Complex<S>,
    h: impl Fn(i64) -> AMatrix<S>,
) -> Vec<(i64, AMatrix<S>)> {
    if x.is_zero() {
        return Vec::new();
    }
    x.degrees()
        .filter(|&i| y.rank(i) > 0)
        .map(|i| {
            let a = y.diff(i + 1).mul(&h(i)).expect("shapes");
            let b = h(i - 1).mul(&x.diff(i)).expect("shapes");
            (i, a.add(&b).expect("shapes"))
        })
        .collect()
}

fn lookup<S: Scalar>(comps: &[(i64, AMatrix<S>)], i: i64, rows: usize, cols: usize, x: &Complex<S>) -> AMatrix<S> {
    comps
        .iter()
        .find(|(d, _)| *d == i)
        .map(|(_, m)| m.clone())
        .unwrap_or_else(|| AMatrix::zeros(x.algebra(), rows, cols))
}

/// Matrix of the boundary operator `h ↦ d h + h d` in field coordinates
/// (columns: homotopy coordinates; rows: chain-map coordinates).
fn boundary_matrix<S: Scalar>(x: &Complex<S>, y: &Complex<S>) -> (BlockLayout, ExactMatrix<S>) {
    let field = x.algebra().field;
    let hl = BlockLayout::new(x, y, 1);
    let fl = BlockLayout::new(x, y, 0);
    let mut m = ExactMatrix::zeros(field, fl.len(), hl.len());
    for k in 0..hl.len() {
        let unit = hl.unit::<S>(k);
        let comps = boundary_components(x, y, |i| lookup(&unit, i, y.rank(i + 1), x.rank(i), x));
        let col = fl.flatten(|i| lookup(&comps, i, y.rank(i), x.rank(i), x));
        for (r, v) in col.into_iter().enumerate() {
            if !v.is_zero() {
                m.set(r, k, v);
            }
        }
    }
    (hl, m)
}

/// Matrix of `f ↦ (f_{i-1} d^X_i - d^Y_i f_i)_i` on degree-0 families.
fn chain_condition_matrix<S: Scalar>(x: &Complex<S>, y: &Complex<S>) -> ExactMatrix<S> {
    let field = x.algebra().field;
    let fl = BlockLayout::new(x, y, 0);
    let rows: Vec<(i64, usize, usize)> = if x.is_zero() {
        Vec::new()
    } else {
        (x.lo()..=x.hi() + 1)
            .filter(|&i| x.rank(i) > 0 && y.rank(i - 1) > 0)
            .map(|i| (i, y.rank(i - 1), x.rank(i)))
            .collect()
    };
    let n = x.algebra().n;
    let total: usize = rows.iter().map(|(_, r, c)| r * c * n).sum();
    let mut m = ExactMatrix::zeros(field, total, fl.len());
    for k in 0..fl.len() {
        let unit = fl.unit::<S>(k);
        let f = |i: i64| lookup(&unit, i, y.rank(i), x.rank(i), x);
        let mut r = 0;
        for &(i, _, _) in &rows {
            let v =
                f(i - 1).mul(&x.diff(i)).expect("shapes").sub(&y.diff(i).mul(&f(i)).expect("shapes")).expect("shapes");
            for c in v.flat() {
                if !c.is_zero() {
                    m.set(r, k, c.clone());
                }
                r += 1;
            }
        }
    }
    m
}

/// A witness homotopy for `f` if `f` is null-homotopic.
pub fn is_null_homotopic<S: Scalar>(f: &ChainMap<S>) -> Option<Homotopy<S>> {
    let (x, y) = (f.source(), f.target());
    let (hl, m) = boundary_matrix(x, y);
    let sol = m.solve(&f.to_vector()).expect("layout lengths agree")?;
    Some(Homotopy { source: x.clone(), target: y.clone(), comps: hl.unflatten(&sol.particular) })
}

/// `Hom(X, Y)` in the homotopy category: chain maps modulo null-homotopic
/// ones, with a deterministic echelon basis of representatives.
#[derive(Clone, Debug)]
pub struct HomSpaceK<S: Scalar> {
    source: Arc<Complex<S>>,
    target: Arc<Complex<S>>,
    boundaries: Subspace<S>,
    reps: Subspace<S>,
    basis: Vec<ChainMap<S>>,
}

impl<S: Scalar> HomSpaceK<S> {
    pub fn new(source: Arc<Complex<S>>, target: Arc<Complex<S>>) -> Self {
        let field = source.algebra().field;
        let len = BlockLayout::new(&source, &target, 0).len();
        let cycles = chain_condition_matrix(&source, &target).kernel_basis();
        let (_, bm) = boundary_matrix(&source, &target);
        let boundaries = Subspace::span(field, len, bm.transpose().row_vectors());
        let reduced = cycles.iter().map(|z| boundaries.reduce(z)).collect();
        let reps = Subspace::span(field, len, reduced);
        let basis = reps
            .basis()
            .iter()
            .map(|v| {
                let comps = BlockLayout::new(&source, &target, 0).unflatten(v);
                ChainMap::from_graded(source.clone(), target.clone(), comps).expect("cycle")
            })
            .collect();
        HomSpaceK { source, target, boundaries, reps, basis }
    }

    pub fn source(&self) -> &Arc<Complex<S>> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Complex<S>> {
        &self.target
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ChainMap<S>] {
        &self.basis
    }

    /// Coordinates of the homotopy class of `f` against [`basis`](Self::basis).
    pub fn coordinates(&self, f: &ChainMap<S>) -> Result<Vec<S>, Error> {
        if f.source() != &self.source || f.target() != &self.target {
            return Err(Error::ShapeMismatch("chain map has different ends than the Hom space".into()));
        }
        self.reps
            .coordinates(&self.boundaries.reduce(&f.to_vector()))
            .ok_or_else(|| Error::NotAChainMap("not a cycle".into()))
    }

    pub fn element(&self, coords: &[S]) -> ChainMap<S> {
        let v = self.reps.combine(coords);
        let comps = BlockLayout::new(&self.source, &self.target, 0).unflatten(&v);
        ChainMap::from_graded(self.source.clone(), self.target.clone(), comps).expect("cycle")
    }
}

/// Basis of `Hom_K(X, Y)` as chain-map representatives.
pub fn hom_basis_k<S: Scalar>(x: &Arc<Complex<S>>, y: &Arc<Complex<S>>) -> Vec<ChainMap<S>> {
    HomSpaceK::new(x.clone(), y.clone()).basis
}
