//! The homotopy category of perfect complexes over the dual numbers.
//!
//! Every indecomposable is `A_m^n ≅ Σ^m A_0^{n-m}`, so a window is the set of
//! literal shifts `Σ^j A_0^r` for `0 <= r <= max_len`, `0 <= j <= max_shift`.
//! `Σ` maps `Σ^j A_0^r` to `Σ^{j+1} A_0^r` on the nose.

use std::sync::Arc;

use crate::field::{FieldTag, Scalar};
use crate::serial::{ChainMap, Complex, HomSpaceK, SerialAlgebra};
use crate::window::{GradedCategory, HomSpace, WindowCategory};
use crate::Error;

mod elements;
mod extension;

pub use elements::{degree_presentation, eta_element, ext_coordinate, match_presentation, normalized_zeta, x_lowest};
pub use extension::{ext_dims_of_simple, extend_to_truncations, lift_element, lift_elements};

impl<S: Scalar> HomSpace for HomSpaceK<S> {
    type Scalar = S;
    type Morphism = ChainMap<S>;

    fn dim(&self) -> usize {
        HomSpaceK::dim(self)
    }

    fn element(&self, coords: &[S]) -> ChainMap<S> {
        HomSpaceK::element(self, coords)
    }

    fn coordinates(&self, f: &ChainMap<S>) -> Result<Vec<S>, Error> {
        HomSpaceK::coordinates(self, f)
    }
}

/// Window of `K^b(proj k[x]/(x^2))` made of the complexes `Σ^j A_0^r`.
#[derive(Clone, Debug)]
pub struct KbProj<S: Scalar> {
    alg: SerialAlgebra,
    max_len: usize,
    max_shift: usize,
    objects: Vec<Arc<Complex<S>>>,
}

impl<S: Scalar> KbProj<S> {
    pub fn new(field: FieldTag, max_len: usize, max_shift: usize) -> Self {
        let alg = SerialAlgebra::dual_numbers(field);
        let mut objects = Vec::new();
        for j in 0..=max_shift {
            for r in 0..=max_len {
                let base = Complex::interval(alg, 0, r as i64).expect("valid interval");
                objects.push(Arc::new(base.shift(j as i64)));
            }
        }
        KbProj { alg, max_len, max_shift, objects }
    }

    pub fn algebra(&self) -> SerialAlgebra {
        self.alg
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn max_shift(&self) -> usize {
        self.max_shift
    }

    /// Index of `Σ^j A_0^r`.
    pub fn index(&self, r: usize, j: usize) -> Option<usize> {
        (r <= self.max_len && j <= self.max_shift).then(|| j * (self.max_len + 1) + r)
    }

    /// `(r, j)` with object `x = Σ^j A_0^r`.
    pub fn params(&self, x: usize) -> (usize, usize) {
        (x % (self.max_len + 1), x / (self.max_len + 1))
    }

    pub fn object(&self, x: usize) -> &Arc<Complex<S>> {
        &self.objects[x]
    }
}

impl<S: Scalar> GradedCategory for KbProj<S> {
    type Scalar = S;
    type Morphism = ChainMap<S>;
    type Hom = HomSpaceK<S>;

    fn field(&self) -> FieldTag {
        self.alg.field
    }

    fn object_count(&self) -> usize {
        self.objects.len()
    }

    fn object_label(&self, x: usize) -> String {
        let (r, j) = self.params(x);
        format!("A_{j}^{}", j + r)
    }

    fn suspension(&self, x: usize) -> Option<usize> {
        let (r, j) = self.params(x);
        self.index(r, j + 1)
    }

    fn hom_space(&self, x: usize, y: usize, t: i64) -> HomSpaceK<S> {
        HomSpaceK::new(self.objects[x].clone(), Arc::new(self.objects[y].shift(t)))
    }

    fn compose(&self, g: &ChainMap<S>, f: &ChainMap<S>) -> Result<ChainMap<S>, Error> {
        g.compose(f)
    }

    fn suspend(&self, f: &ChainMap<S>, k: i64) -> ChainMap<S> {
        f.shift(k)
    }

    fn identity(&self, x: usize) -> ChainMap<S> {
        ChainMap::identity(self.objects[x].clone())
    }
}

/// The standard square window: `Σ^j A_0^r` for `0 <= r, j <= size`.
pub fn build_window_kbproj<S: Scalar>(field: FieldTag, size: usize) -> WindowCategory<KbProj<S>> {
    WindowCategory::new(KbProj::new(field, size, size))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::serial::AMatrix;
    use crate::window::{multiply, solve_center, CenterRing};

    const F: FieldTag = FieldTag::Prime(101);

    #[test]
    fn small_windows_have_expected_hom_dimensions() {
        let w = build_window_kbproj::<Fp>(F, 1);
        let c = w.category();
        let h0 = w.homs(0);
        assert_eq!(h0.get(c.index(0, 0).unwrap(), c.index(0, 0).unwrap()).dim(), 2);
        let w3 = build_window_kbproj::<Fp>(F, 3);
        let c3 = w3.category();
        assert_eq!(w3.homs(0).get(c3.index(1, 0).unwrap(), c3.index(2, 0).unwrap()).dim(), 1);
    }

    #[test]
    fn composition_is_associative_on_a_small_window() {
        let w = build_window_kbproj::<Fp>(F, 1);
        assert_eq!(w.check_associativity().unwrap(), None);
    }

    #[test]
    fn negative_degrees_vanish() {
        for n in 0..=3 {
            let w = build_window_kbproj::<Fp>(F, n);
            for t in [-2, -1] {
                assert_eq!(solve_center(&w, t, true).unwrap().dim(), 0);
                assert_eq!(solve_center(&w, t, false).unwrap().dim(), 0);
            }
        }
    }

    #[test]
    fn degree_zero_is_identity_plus_one_eta_per_diagonal() {
        let w = build_window_kbproj::<Fp>(F, 3);
        let b = solve_center(&w, 0, true).unwrap();
        assert_eq!(b.dim(), 5);
        for r in 0..=3 {
            let eta = eta_element(&w, r).unwrap();
            assert!(b.coordinates(&eta).is_some());
            assert!(multiply(&w, &eta, &eta).unwrap().is_zero());
        }
        // Unsigned: one free coefficient per object on top of the identity.
        assert_eq!(solve_center(&w, 0, false).unwrap().dim(), 1 + w.object_count());
    }

    #[test]
    fn odd_degrees_survive_only_in_characteristic_two() {
        let w2 = build_window_kbproj::<Fp>(FieldTag::Prime(2), 3);
        let w3 = build_window_kbproj::<Fp>(FieldTag::Prime(3), 3);
        for t in 1..=2 {
            assert_eq!(solve_center(&w2, t, true).unwrap().dim(), 1);
            assert_eq!(solve_center(&w3, t, false).unwrap().dim(), (t % 2 == 0) as usize);
        }
    }

    // Hand computation behind the vanishing of odd degrees: for the map
    // `g = x: ΣA_0^1 -> A_0^1` in degree 1, `ζ_Y g - Σg ζ_X` is `a x` in degree
    // 1 and `-b x` in degree 2, which is null-homotopic exactly when `a = -b`.
    #[test]
    fn x_type_map_forces_alternating_sign_in_degree_one() {
        let w = build_window_kbproj::<Fp>(F, 1);
        let c = w.category();
        let (p, q) = (c.index(1, 0).unwrap(), c.index(1, 1).unwrap());
        let alg = c.algebra();
        let g = ChainMap::from_components(
            c.object(q).clone(),
            c.object(p).clone(),
            vec![(1, AMatrix::single(alg, Fp::one(F), 1))],
        )
        .unwrap();
        let h1 = w.homs(1);
        let zp = h1.get(p, p).basis_element(0, F);
        let zq = c.suspend(&zp, 1);
        let target = h1.get(q, p);
        let defect = |b: Fp| {
            let lhs = zp.compose(&g).unwrap();
            let rhs = g.shift(1).compose(&zq.scale(&b)).unwrap();
            target.coordinates(&lhs.sub(&rhs).unwrap()).unwrap().iter().all(Scalar::is_zero)
        };
        assert!(defect(Fp::one(F).neg()));
        assert!(!defect(Fp::one(F)));
    }

    #[test]
    fn presentation_matches_and_detects_a_corrupted_product() {
        let w = build_window_kbproj::<Fp>(F, 3);
        let mut ring = CenterRing::compute(&w, 0..=2, true).unwrap();
        assert!(ring.graded_commutativity_violations().is_empty());
        let report = match_presentation(&w, &ring).unwrap();
        assert!(report.is_match(), "{report:?}");
        let e1 = ring.basis(0).unwrap().dim();
        let mut bad = vec![Fp::zero(F); e1];
        bad[0] = Fp::one(F);
        ring.set_product((0, 1, 0, 1), bad.clone());
        ring.set_product((0, 2, 0, 2), bad);
        assert!(!match_presentation(&w, &ring).unwrap().is_match());
    }

    #[test]
    fn zeta_powers_multiply_and_kill_etas() {
        let w = build_window_kbproj::<Fp>(F, 4);
        let z2 = normalized_zeta(&w, &solve_center(&w, 2, true).unwrap()).unwrap();
        let z4 = normalized_zeta(&w, &solve_center(&w, 4, true).unwrap()).unwrap();
        assert_eq!(multiply(&w, &z2, &z2).unwrap(), z4);
        for r in 0..=4 {
            let eta = eta_element(&w, r).unwrap();
            assert!(multiply(&w, &z2, &eta).unwrap().is_zero());
            assert!(multiply(&w, &eta, &z2).unwrap().is_zero());
        }
    }

    #[test]
    fn extension_to_truncations_freezes_lower_degrees() {
        let small = build_window_kbproj::<Fp>(F, 3);
        let big = WindowCategory::new(KbProj::<Fp>::new(F, 6, 3));
        for t in 0..=2 {
            for e in solve_center(&small, t, true).unwrap().elements() {
                let lifted = lift_element(&small, &big, &e, true).unwrap();
                let reps = extend_to_truncations(&big, &lifted, 6).unwrap();
                assert_eq!(reps.len(), 7);
            }
        }
    }

    #[test]
    fn truncated_resolutions_see_one_ext_group_per_degree() {
        let alg = SerialAlgebra::dual_numbers(F);
        for m in 1..=6i64 {
            let x = Complex::<Fp>::interval(alg, 0, m).unwrap();
            let dims = ext_dims_of_simple(&x);
            assert!(dims.iter().all(|&(i, d)| d == 1 || i == m), "{dims:?}");
        }
    }
}
