//! Finite window categories and the graded-center solver.
//!
//! A window is a finite list of objects of a graded category together with
//! bases of `Hom(X, Σ^t Y)`, composition and the action of `Σ` on
//! morphisms. The degree-`t` center is the space of families
//! `η_X ∈ Hom(X, Σ^t X)` satisfying naturality against every basis
//! morphism of the window, optionally together with the sign rule
//! `η_{ΣX} = (-1)^t Σ(η_X)`.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use crate::exec;
use crate::field::{FieldTag, Scalar};
use crate::Error;

pub mod presentation;
pub mod ring;
pub mod solve;

pub use presentation::{Generator, GeneratorWitness, Monomial, Presentation, Relation, RingReport, Verdict};
pub use ring::{multiply, nilpotency_check, unit_element, CenterRing};
pub use solve::{solve_center, verify_natural, CenterBasis, CenterElement};

/// A finite-dimensional space `Hom(X, Σ^t Y)` with a fixed basis.
pub trait HomSpace: Send + Sync {
    type Scalar: Scalar;
    type Morphism;

    fn dim(&self) -> usize;

    /// The morphism with the given coordinates.
    fn element(&self, coords: &[Self::Scalar]) -> Self::Morphism;

    /// Coordinates of `f`; errors if `f` does not belong to this space.
    fn coordinates(&self, f: &Self::Morphism) -> Result<Vec<Self::Scalar>, Error>;

    fn basis_element(&self, i: usize, field: FieldTag) -> Self::Morphism {
        let mut c = vec![Self::Scalar::zero(field); self.dim()];
        c[i] = Self::Scalar::one(field);
        self.element(&c)
    }
}

/// A graded category restricted to finitely many objects.
///
/// `suspension(x)` names the object that literally is `ΣX` when it belongs
/// to the window. Morphisms carry their ends, so composition and `Σ` need no
/// extra context.
pub trait GradedCategory: Send + Sync {
    type Scalar: Scalar;
    type Morphism: Clone + Send + Sync;
    type Hom: HomSpace<Scalar = Self::Scalar, Morphism = Self::Morphism>;

    fn field(&self) -> FieldTag;
    fn object_count(&self) -> usize;
    fn object_label(&self, x: usize) -> String;
    fn suspension(&self, x: usize) -> Option<usize>;

    /// `Hom(X, Σ^t Y)`.
    fn hom_space(&self, x: usize, y: usize, t: i64) -> Self::Hom;

    /// `g ∘ f`.
    fn compose(&self, g: &Self::Morphism, f: &Self::Morphism) -> Result<Self::Morphism, Error>;

    /// `Σ^k f`.
    fn suspend(&self, f: &Self::Morphism, k: i64) -> Self::Morphism;

    fn identity(&self, x: usize) -> Self::Morphism;
}

/// All spaces `Hom(X, Σ^t Y)` of one degree `t`, indexed by `(x, y)`.
pub struct HomTable<H> {
    n: usize,
    spaces: Vec<H>,
}

impl<H> HomTable<H> {
    pub fn get(&self, x: usize, y: usize) -> &H {
        &self.spaces[x * self.n + y]
    }
}

/// A [`GradedCategory`] with memoised Hom tables.
pub struct WindowCategory<C: GradedCategory> {
    cat: C,
    tables: Mutex<BTreeMap<i64, Arc<HomTable<C::Hom>>>>,
}

impl<C: GradedCategory> WindowCategory<C> {
    pub fn new(cat: C) -> Self {
        WindowCategory { cat, tables: Mutex::new(BTreeMap::new()) }
    }

    pub fn category(&self) -> &C {
        &self.cat
    }

    pub fn field(&self) -> FieldTag {
        self.cat.field()
    }

    pub fn object_count(&self) -> usize {
        self.cat.object_count()
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.object_count()).map(|x| self.cat.object_label(x)).collect()
    }

    /// The table of degree `t`, computed (in parallel over object pairs) on
    /// first use.
    pub fn homs(&self, t: i64) -> Arc<HomTable<C::Hom>> {
        if let Some(table) = self.tables.lock().expect("hom cache").get(&t) {
            return table.clone();
        }
        let n = self.object_count();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
        let spaces = exec::map(&pairs, |&(x, y)| self.cat.hom_space(x, y, t));
        let table = Arc::new(HomTable { n, spaces });
        self.tables.lock().expect("hom cache").entry(t).or_insert(table).clone()
    }

    /// Checks `(h∘g)∘f = h∘(g∘f)` on all basis triples `X -> Y -> Z -> W`
    /// of degree 0; returns the first failing triple.
    pub fn check_associativity(&self) -> Result<Option<(usize, usize, usize, usize)>, Error> {
        let n = self.object_count();
        let h0 = self.homs(0);
        let field = self.field();
        let basis = |x: usize, y: usize| -> Vec<C::Morphism> {
            let s = h0.get(x, y);
            (0..s.dim()).map(|i| s.basis_element(i, field)).collect()
        };
        let quads: Vec<(usize, usize, usize, usize)> = (0..n)
            .flat_map(|x| (0..n).flat_map(move |y| (0..n).flat_map(move |z| (0..n).map(move |w| (x, y, z, w)))))
            .collect();
        let results = exec::map(&quads, |&(x, y, z, w)| -> Result<bool, Error> {
            let (fs, gs, hs) = (basis(x, y), basis(y, z), basis(z, w));
            let target = h0.get(x, w);
            for f in &fs {
                for g in &gs {
                    let gf = self.cat.compose(g, f)?;
                    for h in &hs {
                        let left = self.cat.compose(&self.cat.compose(h, g)?, f)?;
                        let right = self.cat.compose(h, &gf)?;
                        if target.coordinates(&left)? != target.coordinates(&right)? {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        });
        for (q, r) in quads.into_iter().zip(results) {
            if !r? {
                return Ok(Some(q));
            }
        }
        Ok(None)
    }
}
