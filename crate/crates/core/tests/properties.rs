use gcenter_core::kbproj::build_window_kbproj;
use gcenter_core::stable::{basis_range, stable_center, stable_compose, syzygy, StableMorphism};
use gcenter_core::window::{multiply, verify_natural, CenterElement, CenterRing};
use gcenter_core::{ExactMatrix, FieldTag, Fp, Rational, Scalar};
use proptest::prelude::*;

const F101: FieldTag = FieldTag::Prime(101);

fn matrix<S: Scalar>(field: FieldTag, rows: usize, cols: usize, data: &[i64]) -> ExactMatrix<S> {
    let entries = data.iter().take(rows * cols).map(|&v| S::from_i64(field, v)).collect();
    ExactMatrix::from_entries(field, rows, cols, entries).unwrap()
}

fn check_linear_algebra<S: Scalar>(field: FieldTag, rows: usize, cols: usize, data: &[i64], x: &[i64]) {
    let m = matrix::<S>(field, rows, cols, data);
    let kernel = m.kernel_basis();
    assert_eq!(m.rank() + kernel.len(), cols);
    for v in &kernel {
        assert!(m.mul_vec(v).unwrap().iter().all(Scalar::is_zero));
    }
    let x: Vec<S> = x.iter().take(cols).map(|&v| S::from_i64(field, v)).collect();
    let b = m.mul_vec(&x).unwrap();
    let sol = m.solve(&b).unwrap().expect("b lies in the image");
    assert_eq!(sol.homogeneous.len(), kernel.len());
    let mut y = sol.particular.clone();
    for (k, h) in sol.homogeneous.iter().enumerate() {
        let c = S::from_i64(field, k as i64 + 2);
        for (yi, hi) in y.iter_mut().zip(h) {
            yi.add_mul_assign(&c, hi);
        }
    }
    assert_eq!(m.mul_vec(&y).unwrap(), b);
}

fn random_morphism(n: usize, l: usize, r: usize, seed: &[u32]) -> StableMorphism<Fp> {
    let mut f = StableMorphism::zero(F101, n, l, r);
    for (c, &s) in f.coords.iter_mut().zip(seed.iter().cycle()) {
        *c = Fp::new(s as i64, 101);
    }
    f
}

fn random_element(ring: &CenterRing<Fp>, degree: i64, seed: &[u32]) -> CenterElement<Fp> {
    let basis = ring.basis(degree).unwrap();
    let coords: Vec<Fp> = (0..basis.dim()).map(|i| Fp::new(seed[i % seed.len()] as i64, 101)).collect();
    basis.combine(&coords)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity_and_solve_over_fp(
        rows in 1usize..7, cols in 1usize..7,
        data in prop::collection::vec(-3i64..4, 36),
        x in prop::collection::vec(-50i64..50, 6),
    ) {
        check_linear_algebra::<Fp>(F101, rows, cols, &data, &x);
        check_linear_algebra::<Fp>(FieldTag::Prime(2), rows, cols, &data, &x);
    }

    #[test]
    fn rank_nullity_and_solve_over_q(
        rows in 1usize..6, cols in 1usize..6,
        data in prop::collection::vec(-4i64..5, 25),
        x in prop::collection::vec(-9i64..10, 5),
    ) {
        check_linear_algebra::<Rational>(FieldTag::Rationals, rows, cols, &data, &x);
    }

    #[test]
    fn syzygy_is_an_involutive_functor(
        n in 2usize..8, l in 1usize..8, r in 1usize..8, u in 1usize..8,
        a in prop::collection::vec(0u32..101, 1..5),
        b in prop::collection::vec(0u32..101, 1..5),
    ) {
        prop_assume!(l < n && r < n && u < n);
        let f = random_morphism(n, l, r, &a);
        let g = random_morphism(n, r, u, &b);
        prop_assert_eq!(syzygy(F101, &syzygy(F101, &f)), f.clone());
        let gf = stable_compose(F101, &g, &f).unwrap();
        let omega = stable_compose(F101, &syzygy(F101, &g), &syzygy(F101, &f)).unwrap();
        prop_assert_eq!(syzygy(F101, &gf), omega);
        prop_assert_eq!(basis_range(n, l, r).count(), basis_range(n, n - l, n - r).count());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn stable_center_combinations_are_natural_and_graded_commutative(
        n in 2usize..7,
        d1 in -2i64..3, d2 in -2i64..3,
        a in prop::collection::vec(0u32..101, 1..4),
        b in prop::collection::vec(0u32..101, 1..4),
    ) {
        let (w, c) = stable_center::<Fp>(F101, n, -2..=3, true).unwrap();
        let x = random_element(&c.ring, d1, &a);
        let y = random_element(&c.ring, d2, &b);
        verify_natural(&w, &x, true).unwrap();
        verify_natural(&w, &y, true).unwrap();
        let xy = multiply(&w, &x, &y).unwrap();
        let yx = multiply(&w, &y, &x).unwrap();
        let sign = if (d1 * d2) % 2 == 0 { Fp::new(1, 101) } else { Fp::new(-1, 101) };
        prop_assert_eq!(xy, yx.scale(&sign));
    }

    #[test]
    fn dual_number_center_combinations_respect_the_sign_rule(
        degree in 0i64..3,
        a in prop::collection::vec(0u32..101, 1..6),
    ) {
        let w = build_window_kbproj::<Fp>(F101, 3);
        let ring = CenterRing::compute(&w, degree..=degree, true).unwrap();
        let basis = ring.basis(degree).unwrap();
        let coords: Vec<Fp> = (0..basis.dim()).map(|i| Fp::new(a[i % a.len()] as i64, 101)).collect();
        let e = basis.combine(&coords);
        verify_natural(&w, &e, true).unwrap();
        prop_assert_eq!(basis.coordinates(&e), Some(coords));
    }
}
