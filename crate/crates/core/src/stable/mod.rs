//! The stable module category of `k[x]/(x^n)`.
//!
//! Objects are `A_l = k[x]/(x^l)` for `1 <= l < n`. `Hom(A_l, A_r)` has the
//! basis `f^{l,r}_s : 1 -> x^{r-s}` for `max(1, l+r-n+1) <= s <= min(l, r)`;
//! the maps with `s <= l+r-n` factor through the projective `A_n` and vanish.
//! The suspension is the syzygy `Ω`, with `Ω(A_l) = A_{n-l}` and `Ω² = id`.

use std::marker::PhantomData;

use serde::{Deserialize, Serialize};

use crate::field::{FieldTag, Scalar};
use crate::window::{GradedCategory, HomSpace, WindowCategory};
use crate::Error;

mod center;
mod singularity;

pub use center::{
    match_stable_presentation, stable_center, stable_presentation, t_element, t_inverse_element, x_element,
    zeta_element, StableCenter,
};
pub use singularity::{singularity_map, SingularityReport};

/// Index range `s` of the basis of `Hom(A_l, A_r)` in `mod k[x]/(x^n)`.
pub fn basis_range(n: usize, l: usize, r: usize) -> std::ops::RangeInclusive<usize> {
    let lo = (l + r + 1).saturating_sub(n).max(1);
    lo..=l.min(r)
}

/// A stable morphism `A_l -> A_r` with coordinates over [`basis_range`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableMorphism<S> {
    pub n: usize,
    pub source: usize,
    pub target: usize,
    pub coords: Vec<S>,
}

impl<S: Scalar> StableMorphism<S> {
    pub fn zero(field: FieldTag, n: usize, source: usize, target: usize) -> Self {
        let d = basis_range(n, source, target).count();
        StableMorphism { n, source, target, coords: vec![S::zero(field); d] }
    }

    /// `f^{l,r}_s`, or zero when `s` is outside the stable basis range.
    pub fn basis(field: FieldTag, n: usize, l: usize, r: usize, s: usize) -> Self {
        let mut f = Self::zero(field, n, l, r);
        let range = basis_range(n, l, r);
        if range.contains(&s) {
            f.coords[s - range.start()] = S::one(field);
        }
        f
    }

    pub fn identity(field: FieldTag, n: usize, l: usize) -> Self {
        Self::basis(field, n, l, l, l)
    }

    /// `(s, coefficient)` for the nonzero coordinates.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &S)> + '_ {
        let lo = *basis_range(self.n, self.source, self.target).start();
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (lo + i, c))
    }
}

/// `g ∘ f` via `f^{r,u}_{s'} ∘ f^{l,r}_s = f^{l,u}_{s+s'-r}` (zero when
/// `s + s' <= r`), followed by the stable vanishing rule.
pub fn stable_compose<S: Scalar>(
    field: FieldTag,
    g: &StableMorphism<S>,
    f: &StableMorphism<S>,
) -> Result<StableMorphism<S>, Error> {
    if f.target != g.source || f.n != g.n {
        return Err(Error::ShapeMismatch(format!(
            "cannot compose A_{} -> A_{} after A_{} -> A_{}",
            g.source, g.target, f.source, f.target
        )));
    }
    let (n, l, r, u) = (f.n, f.source, f.target, g.target);
    let mut out = StableMorphism::<S>::zero(field, n, l, u);
    let range = basis_range(n, l, u);
    for (s, a) in f.terms() {
        for (s2, b) in g.terms() {
            if s + s2 <= r {
                continue;
            }
            let sigma = s + s2 - r;
            if range.contains(&sigma) {
                out.coords[sigma - range.start()].add_mul_assign(a, b);
            }
        }
    }
    Ok(out)
}

/// `Ω(f^{l,r}_s) = f^{n-l,n-r}_{n-r-l+s}`.
pub fn syzygy<S: Scalar>(field: FieldTag, f: &StableMorphism<S>) -> StableMorphism<S> {
    let n = f.n;
    let mut out = StableMorphism::zero(field, n, n - f.source, n - f.target);
    let range = basis_range(n, n - f.source, n - f.target);
    for (s, c) in f.terms() {
        let t = n + s - f.source - f.target;
        // Basis elements map to basis elements, so `t` is always in range.
        out.coords[t - range.start()] = c.clone();
    }
    out
}

/// `Hom(A_l, A_r)` in the stable category.
#[derive(Clone, Debug)]
pub struct StableHomSpace<S> {
    field: FieldTag,
    n: usize,
    source: usize,
    target: usize,
    _scalar: PhantomData<fn() -> S>,
}

impl<S: Scalar> StableHomSpace<S> {
    pub fn new(field: FieldTag, n: usize, source: usize, target: usize) -> Self {
        StableHomSpace { field, n, source, target, _scalar: PhantomData }
    }
}

impl<S: Scalar> HomSpace for StableHomSpace<S> {
    type Scalar = S;
    type Morphism = StableMorphism<S>;

    fn dim(&self) -> usize {
        basis_range(self.n, self.source, self.target).count()
    }

    fn element(&self, coords: &[S]) -> StableMorphism<S> {
        StableMorphism { n: self.n, source: self.source, target: self.target, coords: coords.to_vec() }
    }

    fn coordinates(&self, f: &StableMorphism<S>) -> Result<Vec<S>, Error> {
        if (f.n, f.source, f.target) != (self.n, self.source, self.target) {
            return Err(Error::ShapeMismatch(format!(
                "morphism A_{} -> A_{} is not in Hom(A_{}, A_{})",
                f.source, f.target, self.source, self.target
            )));
        }
        if f.coords.iter().any(|c| c.field() != self.field) {
            return Err(Error::FieldMismatch);
        }
        Ok(f.coords.clone())
    }
}

/// The whole stable category of `k[x]/(x^n)` as a window: finitely many
/// objects, closed under `Σ = Ω`.
#[derive(Clone, Debug)]
pub struct StableCategory<S> {
    field: FieldTag,
    n: usize,
    _scalar: PhantomData<fn() -> S>,
}

impl<S: Scalar> StableCategory<S> {
    pub fn new(field: FieldTag, n: usize) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::InvalidConfig(format!("the stable category needs n >= 2, got {n}")));
        }
        Ok(StableCategory { field, n, _scalar: PhantomData })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Object index of `A_l`.
    pub fn index(&self, l: usize) -> Option<usize> {
        (1..self.n).contains(&l).then(|| l - 1)
    }

    pub fn length(&self, x: usize) -> usize {
        x + 1
    }
}

impl<S: Scalar> GradedCategory for StableCategory<S> {
    type Scalar = S;
    type Morphism = StableMorphism<S>;
    type Hom = StableHomSpace<S>;

    fn field(&self) -> FieldTag {
        self.field
    }

    fn object_count(&self) -> usize {
        self.n - 1
    }

    fn object_label(&self, x: usize) -> String {
        format!("A_{}", x + 1)
    }

    fn suspension(&self, x: usize) -> Option<usize> {
        Some(self.n - 1 - (x + 1))
    }

    fn hom_space(&self, x: usize, y: usize, t: i64) -> StableHomSpace<S> {
        let r = if t.rem_euclid(2) == 0 { y + 1 } else { self.n - (y + 1) };
        StableHomSpace::new(self.field, self.n, x + 1, r)
    }

    fn compose(&self, g: &StableMorphism<S>, f: &StableMorphism<S>) -> Result<StableMorphism<S>, Error> {
        stable_compose(self.field, g, f)
    }

    fn suspend(&self, f: &StableMorphism<S>, k: i64) -> StableMorphism<S> {
        if k.rem_euclid(2) == 0 {
            f.clone()
        } else {
            syzygy(self.field, f)
        }
    }

    fn identity(&self, x: usize) -> StableMorphism<S> {
        StableMorphism::identity(self.field, self.n, x + 1)
    }
}

pub fn build_window_stable<S: Scalar>(field: FieldTag, n: usize) -> Result<WindowCategory<StableCategory<S>>, Error> {
    Ok(WindowCategory::new(StableCategory::new(field, n)?))
}
