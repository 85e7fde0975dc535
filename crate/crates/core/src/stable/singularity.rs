use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use super::{build_window_stable, t_element};
use crate::field::{FieldTag, Scalar};
use crate::kbproj::{
    build_window_kbproj, eta_element, ext_coordinate, extend_to_truncations, lift_elements, normalized_zeta, KbProj,
};
use crate::linear::{ExactMatrix, Subspace};
use crate::window::{CenterElement, CenterRing, WindowCategory};
use crate::Error;

/// Shift bound of the larger window used to extend elements to the
/// truncated resolutions; the truncations themselves are unshifted.
const EXTENSION_SHIFT: usize = 1;

/// Image of one basis element of the perfect-complex center.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisImage<S> {
    pub degree: i64,
    pub index: usize,
    /// Class in `Ext^t(S, S)` read off the stabilized extension.
    pub ext_coefficient: S,
    /// Coordinates of the image in the stable center basis.
    pub image: Vec<S>,
}

/// The comparison map from the center of `K^b(proj k[x]/(x²))` to the
/// center of the stable category, on a finite window and degree range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityReport<S> {
    pub window: usize,
    pub depth: usize,
    pub images: Vec<BasisImage<S>>,
    pub image_dims: Vec<(i64, usize)>,
    pub kernel_dims: Vec<(i64, usize)>,
    /// `Ext` coefficient of the image of `η_r`, `r = 0..=window`.
    pub eta_images: Vec<S>,
    /// `c` with `ζ_2 ↦ c·t`, for the normalized `ζ_2`.
    pub zeta2_to_t: Option<S>,
    /// The degree-0 kernel is spanned by the `η_r` and all other degrees
    /// have zero kernel.
    pub kernel_is_eta_span: bool,
    /// The image is the full stable center in degrees `>= 0` and zero in
    /// negative degrees.
    pub image_is_nonnegative_part: bool,
    /// `π(ab) = π(a)π(b)` on every computed product of basis elements.
    pub multiplicative: bool,
}

/// Builds the comparison map for `k[x]/(x²)`: every basis element of the
/// window-`window` center is lifted to a larger window, extended along the
/// truncations of the resolution of the simple module up to `depth`, and
/// sent to its stabilized class in `Ext^t(S, S)`, which is the
/// corresponding multiple of the identity in the stable category.
pub fn singularity_map<S: Scalar>(
    field: FieldTag,
    window: usize,
    depth: usize,
    degrees: RangeInclusive<i64>,
) -> Result<SingularityReport<S>, Error> {
    if depth <= window || *degrees.end() >= window as i64 {
        return Err(Error::InvalidConfig(format!(
            "need degrees below window ({window}) and depth above it, got degrees {degrees:?}, depth {depth}"
        )));
    }
    let small = build_window_kbproj::<S>(field, window);
    let big = WindowCategory::new(KbProj::<S>::new(field, depth, EXTENSION_SHIFT));
    let stable = build_window_stable::<S>(field, 2)?;
    let kb_ring = CenterRing::compute(&small, degrees.clone(), true)?;
    let st_ring = CenterRing::compute(&stable, degrees.clone(), true)?;

    let mut images = Vec::new();
    let mut maps = Vec::new();
    let mut image_dims = Vec::new();
    let mut kernel_dims = Vec::new();
    for d in degrees.clone() {
        let basis = kb_ring.basis(d)?;
        let target = st_ring.basis(d)?;
        let lifted = lift_elements(&small, &big, &basis.elements(), true)?;
        let mut columns = Vec::new();
        for (index, e) in lifted.iter().enumerate() {
            let coefficient = stabilized_class(&big, e, depth)?;
            let value = CenterElement { degree: d, components: vec![vec![coefficient.clone()]] };
            let image = target.coordinates(&value).ok_or_else(|| {
                Error::VerificationFailed(format!("image of basis element {index} in degree {d} is not central"))
            })?;
            columns.push(image.clone());
            images.push(BasisImage { degree: d, index, ext_coefficient: coefficient, image });
        }
        // Map as a target.dim() x basis.dim() matrix.
        let rows = (0..target.dim()).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
        let m = ExactMatrix::from_rows(field, basis.dim(), rows)?;
        let rank = m.rank();
        image_dims.push((d, rank));
        kernel_dims.push((d, basis.dim() - rank));
        maps.push((d, m));
    }
    let map_of = |d: i64| &maps.iter().find(|(k, _)| *k == d).expect("degree in range").1;

    let zero_basis = kb_ring.basis(0)?;
    let eta_coords = (0..=window)
        .map(|r| {
            zero_basis
                .coordinates(&eta_element(&small, r)?)
                .ok_or_else(|| Error::NotInSpan(format!("η_{r} is not a degree-0 center element")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let eta_images = eta_coords
        .iter()
        .map(|c| Ok(map_of(0).mul_vec(c)?.into_iter().next().unwrap_or_else(|| S::zero(field))))
        .collect::<Result<Vec<_>, Error>>()?;
    let kernel = Subspace::span(field, zero_basis.dim(), map_of(0).kernel_basis());
    let etas = Subspace::span(field, zero_basis.dim(), eta_coords);
    let kernel_is_eta_span = kernel.dim() == etas.dim()
        && etas.basis().iter().all(|v| kernel.contains(v))
        && kernel_dims.iter().all(|&(d, k)| d == 0 || k == 0);

    let image_is_nonnegative_part =
        image_dims.iter().all(|&(d, r)| if d < 0 { r == 0 } else { Ok(r) == st_ring.dim(d) });

    let zeta2_to_t = if degrees.contains(&2) {
        match normalized_zeta(&small, kb_ring.basis(2)?) {
            Some(z) => {
                let zc = kb_ring.basis(2)?.coordinates(&z).ok_or_else(|| Error::NotInSpan("ζ_2".into()))?;
                let image = map_of(2).mul_vec(&zc)?;
                let t =
                    st_ring.basis(2)?.coordinates(&t_element(&stable)?).ok_or_else(|| Error::NotInSpan("t".into()))?;
                scalar_ratio(&image, &t)
            }
            None => None,
        }
    } else {
        None
    };

    let mut multiplicative = true;
    for (&(d1, i, d2, j), coords) in kb_ring.table() {
        let lhs = map_of(d1 + d2).mul_vec(coords)?;
        let a = map_of(d1).mul_vec(&unit_vector(field, kb_ring.dim(d1)?, i))?;
        let b = map_of(d2).mul_vec(&unit_vector(field, kb_ring.dim(d2)?, j))?;
        if lhs != st_ring.mul(d1, &a, d2, &b)? {
            multiplicative = false;
        }
    }

    Ok(SingularityReport {
        window,
        depth,
        images,
        image_dims,
        kernel_dims,
        eta_images,
        zeta2_to_t,
        kernel_is_eta_span,
        image_is_nonnegative_part,
        multiplicative,
    })
}

/// Degree-`t` constant coefficient of the last truncation representative.
fn stabilized_class<S: Scalar>(
    big: &WindowCategory<KbProj<S>>,
    e: &CenterElement<S>,
    depth: usize,
) -> Result<S, Error> {
    if e.degree < 0 {
        return Ok(S::zero(big.field()));
    }
    let reps = extend_to_truncations(big, e, depth)?;
    let last = reps.last().expect("at least one truncation");
    Ok(ext_coordinate(last, e.degree))
}

fn unit_vector<S: Scalar>(field: FieldTag, dim: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(field); dim];
    v[i] = S::one(field);
    v
}

/// `c` with `v = c·w`, when `w` is nonzero and `v` is a multiple of it.
fn scalar_ratio<S: Scalar>(v: &[S], w: &[S]) -> Option<S> {
    let k = w.iter().position(|a| !a.is_zero())?;
    let c = v[k].mul(&w[k].inv()?);
    v.iter().zip(w).all(|(a, b)| *a == c.mul(b)).then_some(c)
}
