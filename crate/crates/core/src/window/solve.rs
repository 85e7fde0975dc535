use serde::{Deserialize, Serialize};

use super::{GradedCategory, HomSpace, WindowCategory};
use crate::exec;
use crate::field::{FieldTag, Scalar};
use crate::linear::{RowEchelon, Subspace};
use crate::Error;

/// A family `η_X ∈ Hom(X, Σ^t X)` given by coordinates per window object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterElement<S> {
    pub degree: i64,
    pub components: Vec<Vec<S>>,
}

impl<S: Scalar> CenterElement<S> {
    pub fn is_zero(&self) -> bool {
        self.components.iter().flatten().all(Scalar::is_zero)
    }

    /// `η_X` as coordinates in `Hom(X, Σ^t X)`.
    pub fn eval_at(&self, x: usize) -> &[S] {
        &self.components[x]
    }

    fn flatten(&self) -> Vec<S> {
        self.components.iter().flatten().cloned().collect()
    }

    pub fn scale(&self, c: &S) -> Self {
        CenterElement {
            degree: self.degree,
            components: self.components.iter().map(|v| v.iter().map(|a| a.mul(c)).collect()).collect(),
        }
    }
}

/// Echelon basis of the degree-`t` center of a window.
#[derive(Clone, Debug)]
pub struct CenterBasis<S: Scalar> {
    degree: i64,
    signed: bool,
    dims: Vec<usize>,
    offsets: Vec<usize>,
    space: Subspace<S>,
    degenerate: bool,
}

impl<S: Scalar> CenterBasis<S> {
    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn signed(&self) -> bool {
        self.signed
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn field(&self) -> FieldTag {
        self.space.field()
    }

    /// True for a window without objects, where every degree is reported as
    /// zero (no unit is invented).
    pub fn degenerate(&self) -> bool {
        self.degenerate
    }

    /// Dimension of `Hom(X, Σ^t X)` for every object.
    pub fn component_dims(&self) -> &[usize] {
        &self.dims
    }

    fn split(&self, v: &[S]) -> CenterElement<S> {
        let components = self.offsets.iter().zip(&self.dims).map(|(&o, &d)| v[o..o + d].to_vec()).collect();
        CenterElement { degree: self.degree, components }
    }

    pub fn element(&self, i: usize) -> CenterElement<S> {
        self.split(&self.space.basis()[i])
    }

    pub fn elements(&self) -> Vec<CenterElement<S>> {
        (0..self.dim()).map(|i| self.element(i)).collect()
    }

    pub fn combine(&self, coords: &[S]) -> CenterElement<S> {
        self.split(&self.space.combine(coords))
    }

    /// Coordinates of `e` against the basis, or `None` if `e` is not in the
    /// solved space.
    pub fn coordinates(&self, e: &CenterElement<S>) -> Option<Vec<S>> {
        if e.degree != self.degree || e.components.len() != self.dims.len() {
            return None;
        }
        self.space.coordinates(&e.flatten())
    }
}

/// Solves for the degree-`t` center of the window.
///
/// Naturality is imposed against every basis morphism of every ordered pair
/// of objects; with `signed`, also `η_{ΣX} = (-1)^t Σ(η_X)` wherever `ΣX`
/// lies in the window. Every basis element is re-verified afterwards.
pub fn solve_center<C: GradedCategory>(
    w: &WindowCategory<C>,
    t: i64,
    signed: bool,
) -> Result<CenterBasis<C::Scalar>, Error> {
    let field = w.field();
    let n = w.object_count();
    let cat = w.category();
    let ht = w.homs(t);
    let h0 = w.homs(0);
    let dims: Vec<usize> = (0..n).map(|x| ht.get(x, x).dim()).collect();
    let mut offsets = Vec::with_capacity(n);
    let mut total = 0;
    for &d in &dims {
        offsets.push(total);
        total += d;
    }
    if n == 0 {
        return Ok(CenterBasis { degree: t, signed, dims, offsets, space: Subspace::zero(field, 0), degenerate: true });
    }
    let eta_basis: Vec<Vec<C::Morphism>> =
        (0..n).map(|x| (0..dims[x]).map(|a| ht.get(x, x).basis_element(a, field)).collect()).collect();

    let sources: Vec<usize> = (0..n).collect();
    let chunks = exec::map(&sources, |&x| -> Result<RowEchelon<C::Scalar>, Error> {
        let mut ech = RowEchelon::new(field, total);
        for y in 0..n {
            let target = ht.get(x, y);
            let d = target.dim();
            if d == 0 || dims[x] + dims[y] == 0 {
                continue;
            }
            let h = h0.get(x, y);
            for i in 0..h.dim() {
                let f = h.basis_element(i, field);
                let sf = cat.suspend(&f, t);
                let mut rows = vec![vec![C::Scalar::zero(field); total]; d];
                for (a, e) in eta_basis[y].iter().enumerate() {
                    let c = target.coordinates(&cat.compose(e, &f)?)?;
                    for (row, v) in rows.iter_mut().zip(c) {
                        row[offsets[y] + a] = row[offsets[y] + a].add(&v);
                    }
                }
                for (a, e) in eta_basis[x].iter().enumerate() {
                    let c = target.coordinates(&cat.compose(&sf, e)?)?;
                    for (row, v) in rows.iter_mut().zip(c) {
                        row[offsets[x] + a] = row[offsets[x] + a].sub(&v);
                    }
                }
                for row in rows {
                    ech.insert(row);
                }
            }
        }
        if signed {
            if let Some(y) = cat.suspension(x) {
                let sign = if t.rem_euclid(2) == 1 { C::Scalar::one(field).neg() } else { C::Scalar::one(field) };
                let target = ht.get(y, y);
                let mut rows = vec![vec![C::Scalar::zero(field); total]; target.dim()];
                for (b, row) in rows.iter_mut().enumerate() {
                    row[offsets[y] + b] = C::Scalar::one(field);
                }
                for (a, e) in eta_basis[x].iter().enumerate() {
                    let c = target.coordinates(&cat.suspend(e, 1))?;
                    for (row, v) in rows.iter_mut().zip(c) {
                        row[offsets[x] + a] = row[offsets[x] + a].sub(&v.mul(&sign));
                    }
                }
                for row in rows {
                    ech.insert(row);
                }
            }
        }
        Ok(ech)
    });
    let mut ech = RowEchelon::new(field, total);
    for chunk in chunks {
        ech.merge(chunk?);
    }
    let space = Subspace::span(field, total, ech.kernel_basis());
    let basis = CenterBasis { degree: t, signed, dims, offsets, space, degenerate: false };
    for e in basis.elements() {
        verify_natural(w, &e, signed)?;
    }
    Ok(basis)
}

/// Checks naturality (and the sign rule when `signed`) of a family by
/// composing actual morphisms over every pair of window objects.
pub fn verify_natural<C: GradedCategory>(
    w: &WindowCategory<C>,
    e: &CenterElement<C::Scalar>,
    signed: bool,
) -> Result<(), Error> {
    let field = w.field();
    let n = w.object_count();
    let cat = w.category();
    let t = e.degree;
    let ht = w.homs(t);
    let h0 = w.homs(0);
    let eta: Vec<C::Morphism> = (0..n).map(|x| ht.get(x, x).element(&e.components[x])).collect();
    let sources: Vec<usize> = (0..n).collect();
    let failures = exec::map(&sources, |&x| -> Result<Option<String>, Error> {
        for y in 0..n {
            let h = h0.get(x, y);
            let target = ht.get(x, y);
            for i in 0..h.dim() {
                let f = h.basis_element(i, field);
                let left = target.coordinates(&cat.compose(&eta[y], &f)?)?;
                let right = target.coordinates(&cat.compose(&cat.suspend(&f, t), &eta[x])?)?;
                if left != right {
                    return Ok(Some(format!(
                        "naturality fails on a morphism {} -> {}",
                        cat.object_label(x),
                        cat.object_label(y)
                    )));
                }
            }
        }
        if signed {
            if let Some(y) = cat.suspension(x) {
                let mut s = ht.get(y, y).coordinates(&cat.suspend(&eta[x], 1))?;
                if t.rem_euclid(2) == 1 {
                    s = s.iter().map(Scalar::neg).collect();
                }
                if s != e.components[y] {
                    return Ok(Some(format!("sign rule fails at {}", cat.object_label(x))));
                }
            }
        }
        Ok(None)
    });
    for f in failures {
        if let Some(msg) = f? {
            return Err(Error::VerificationFailed(msg));
        }
    }
    Ok(())
}
