use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use super::solve::{solve_center, CenterBasis, CenterElement};
use super::{GradedCategory, HomSpace, WindowCategory};
use crate::exec;
use crate::field::Scalar;
use crate::Error;

/// Product of center families.
///
/// For `η` of degree `t` and `ζ` of degree `s` the composite natural
/// transformation has components `η_{Σ^s X} ∘ ζ_X`; for families obeying the
/// sign rule this equals `(-1)^{st} Σ^s(η_X) ∘ ζ_X`, which only needs objects
/// of the window and is what is computed.
pub fn multiply<C: GradedCategory>(
    w: &WindowCategory<C>,
    eta: &CenterElement<C::Scalar>,
    zeta: &CenterElement<C::Scalar>,
) -> Result<CenterElement<C::Scalar>, Error> {
    let (t, s) = (eta.degree, zeta.degree);
    let cat = w.category();
    let (ht, hs, hst) = (w.homs(t), w.homs(s), w.homs(s + t));
    let sign = if (s * t).rem_euclid(2) == 1 { C::Scalar::one(w.field()).neg() } else { C::Scalar::one(w.field()) };
    let objects: Vec<usize> = (0..w.object_count()).collect();
    let components = exec::map(&objects, |&x| -> Result<Vec<C::Scalar>, Error> {
        let e = cat.suspend(&ht.get(x, x).element(&eta.components[x]), s);
        let z = hs.get(x, x).element(&zeta.components[x]);
        let c = hst.get(x, x).coordinates(&cat.compose(&e, &z)?)?;
        Ok(c.iter().map(|v| v.mul(&sign)).collect())
    })
    .into_iter()
    .collect::<Result<Vec<_>, Error>>()?;
    Ok(CenterElement { degree: s + t, components })
}

/// The family of identity morphisms.
pub fn unit_element<C: GradedCategory>(w: &WindowCategory<C>) -> Result<CenterElement<C::Scalar>, Error> {
    let h0 = w.homs(0);
    let components = (0..w.object_count())
        .map(|x| h0.get(x, x).coordinates(&w.category().identity(x)))
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(CenterElement { degree: 0, components })
}

/// Whether every product of `bound` factors taken from `ideal` vanishes.
pub fn nilpotency_check<C: GradedCategory>(
    w: &WindowCategory<C>,
    ideal: &[CenterElement<C::Scalar>],
    bound: usize,
) -> Result<bool, Error> {
    if bound == 0 {
        return Ok(false);
    }
    let mut products: Vec<CenterElement<C::Scalar>> = ideal.to_vec();
    for _ in 1..bound {
        let mut next = Vec::new();
        for p in &products {
            for g in ideal {
                next.push(multiply(w, p, g)?);
            }
        }
        products = next;
    }
    Ok(products.iter().all(CenterElement::is_zero))
}

type ProductKey = (i64, usize, i64, usize);

/// Center bases over a range of degrees together with their multiplication
/// table: `table[(d1, i, d2, j)]` holds the coordinates of
/// `b_{d1,i} · b_{d2,j}` in the degree `d1 + d2` basis.
#[derive(Clone, Debug)]
pub struct CenterRing<S: Scalar> {
    signed: bool,
    bases: BTreeMap<i64, CenterBasis<S>>,
    table: BTreeMap<ProductKey, Vec<S>>,
}

impl<S: Scalar> CenterRing<S> {
    pub fn compute<C: GradedCategory<Scalar = S>>(
        w: &WindowCategory<C>,
        degrees: RangeInclusive<i64>,
        signed: bool,
    ) -> Result<Self, Error> {
        let mut bases = BTreeMap::new();
        for d in degrees.clone() {
            bases.insert(d, solve_center(w, d, signed)?);
        }
        let mut ring = CenterRing { signed, bases, table: BTreeMap::new() };
        let keys: Vec<ProductKey> = ring
            .bases
            .iter()
            .flat_map(|(&d1, b1)| {
                let ring = &ring;
                (0..b1.dim()).flat_map(move |i| {
                    ring.bases.iter().flat_map(move |(&d2, b2)| (0..b2.dim()).map(move |j| (d1, i, d2, j)))
                })
            })
            .filter(|&(d1, _, d2, _)| degrees.contains(&(d1 + d2)))
            .collect();
        for (d1, i, d2, j) in keys {
            let p = multiply(w, &ring.bases[&d1].element(i), &ring.bases[&d2].element(j))?;
            let coords = ring.bases[&(d1 + d2)]
                .coordinates(&p)
                .ok_or_else(|| Error::NotInSpan(format!("product of basis elements ({d1},{i}) and ({d2},{j})")))?;
            ring.table.insert((d1, i, d2, j), coords);
        }
        Ok(ring)
    }

    pub fn signed(&self) -> bool {
        self.signed
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.bases.keys().copied()
    }

    pub fn basis(&self, d: i64) -> Result<&CenterBasis<S>, Error> {
        self.bases.get(&d).ok_or(Error::DegreeOutOfRange(d))
    }

    pub fn dim(&self, d: i64) -> Result<usize, Error> {
        Ok(self.basis(d)?.dim())
    }

    pub fn dims(&self) -> Vec<(i64, usize)> {
        self.bases.iter().map(|(&d, b)| (d, b.dim())).collect()
    }

    pub fn table(&self) -> &BTreeMap<ProductKey, Vec<S>> {
        &self.table
    }

    /// Coordinates of `b_{d1,i} · b_{d2,j}`.
    pub fn product(&self, d1: i64, i: usize, d2: i64, j: usize) -> Result<&[S], Error> {
        for d in [d1, d2, d1 + d2] {
            self.basis(d)?;
        }
        self.table
            .get(&(d1, i, d2, j))
            .map(Vec::as_slice)
            .ok_or_else(|| Error::IndexConstraint(format!("no basis element ({d1},{i}) or ({d2},{j})")))
    }

    /// Replaces one table entry; used to build negative controls.
    pub fn set_product(&mut self, key: ProductKey, coords: Vec<S>) {
        self.table.insert(key, coords);
    }

    /// Product of arbitrary homogeneous elements given by coordinates.
    pub fn mul(&self, d1: i64, a: &[S], d2: i64, b: &[S]) -> Result<Vec<S>, Error> {
        let field = self.basis(d1)?.field();
        let dim = self.dim(d1 + d2)?;
        let mut out = vec![S::zero(field); dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai.mul(bj);
                for (o, p) in out.iter_mut().zip(self.product(d1, i, d2, j)?) {
                    o.add_mul_assign(&c, p);
                }
            }
        }
        Ok(out)
    }

    /// Table entries violating `ab = (-1)^{|a||b|} ba`.
    pub fn graded_commutativity_violations(&self) -> Vec<ProductKey> {
        self.table
            .iter()
            .filter(|(&(d1, i, d2, j), v)| {
                let Some(w) = self.table.get(&(d2, j, d1, i)) else {
                    return false;
                };
                if (d1 * d2).rem_euclid(2) == 1 {
                    v.iter().zip(w).any(|(a, b)| *a != b.neg())
                } else {
                    *v != w
                }
            })
            .map(|(&k, _)| k)
            .collect()
    }

    /// Number of table entries (ordered pairs of basis elements).
    pub fn product_count(&self) -> usize {
        self.table.len()
    }
}
