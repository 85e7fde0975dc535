use super::KbProj;
use crate::field::Scalar;
use crate::linear::ExactMatrix;
use crate::serial::{generator_morphism, is_null_homotopic, ChainMap, Complex, GeneratorClass, Homotopy};
use crate::window::{solve_center, CenterElement, GradedCategory, WindowCategory};
use crate::Error;

/// Extends a center element of `small` to `big`: finds a center element of
/// `big` with the same values on every object the windows share. Free
/// parameters of the extension are set to zero.
pub fn lift_element<S: Scalar>(
    small: &WindowCategory<KbProj<S>>,
    big: &WindowCategory<KbProj<S>>,
    e: &CenterElement<S>,
    signed: bool,
) -> Result<CenterElement<S>, Error> {
    let mut out = lift_elements(small, big, std::slice::from_ref(e), signed)?;
    Ok(out.remove(0))
}

/// [`lift_element`] for several elements of one degree, solving the larger
/// window once.
pub fn lift_elements<S: Scalar>(
    small: &WindowCategory<KbProj<S>>,
    big: &WindowCategory<KbProj<S>>,
    es: &[CenterElement<S>],
    signed: bool,
) -> Result<Vec<CenterElement<S>>, Error> {
    let Some(t) = es.first().map(|e| e.degree) else { return Ok(Vec::new()) };
    if es.iter().any(|e| e.degree != t) {
        return Err(Error::InvalidConfig("lifted elements must share one degree".into()));
    }
    let field = big.field();
    let basis = solve_center(big, t, signed)?;
    let (sc, bc) = (small.category(), big.category());
    let (hs, hb) = (small.homs(t), big.homs(t));
    let elements = basis.elements();
    let shared: Vec<(usize, usize)> =
        (0..sc.object_count()).filter_map(|x| bc.index(sc.params(x).0, sc.params(x).1).map(|y| (x, y))).collect();
    let mut rows: Vec<Vec<S>> = Vec::new();
    for &(_, y) in &shared {
        for k in 0..hb.get(y, y).dim() {
            rows.push(elements.iter().map(|b| b.components[y][k].clone()).collect());
        }
    }
    let m = (!elements.is_empty()).then(|| ExactMatrix::from_rows(field, elements.len(), rows)).transpose()?;
    es.iter()
        .map(|e| {
            let mut rhs: Vec<S> = Vec::new();
            for &(x, y) in &shared {
                let value = hs.get(x, x).element(&e.components[x]);
                rhs.extend(hb.get(y, y).coordinates(&value)?);
            }
            let unreachable = || Error::NotInSpan("element does not extend to the larger window".into());
            match &m {
                None if rhs.iter().all(Scalar::is_zero) => Ok(basis.combine(&[])),
                None => Err(unreachable()),
                Some(m) => Ok(basis.combine(&m.solve(&rhs)?.ok_or_else(unreachable)?.particular)),
            }
        })
        .collect()
}

/// Representatives `ζ^0, …, ζ^depth` of `e` on the truncations
/// `A_0^m = ι^m P` of the projective resolution `P` of the simple module.
///
/// `ζ^{m+1}` is obtained from the value `ξ` of `e` at `A_0^{m+1}` by
/// subtracting `d h' + h' d`, where `h` is a homotopy for
/// `ξ∘j - Σ^t j∘ζ^m` (`j` the inclusion `A_0^m -> A_0^{m+1}`) and `h'`
/// extends `h` by zero; this freezes all components in degrees `<= m`.
pub fn extend_to_truncations<S: Scalar>(
    w: &WindowCategory<KbProj<S>>,
    e: &CenterElement<S>,
    depth: usize,
) -> Result<Vec<ChainMap<S>>, Error> {
    let c = w.category();
    let t = e.degree;
    let ht = w.homs(t);
    let value = |m: usize| -> Result<ChainMap<S>, Error> {
        let x = c.index(m, 0).ok_or_else(|| Error::ObjectNotInWindow(format!("A_0^{m}")))?;
        Ok(ht.get(x, x).element(&e.components[x]))
    };
    let alg = c.algebra();
    let mut reps = vec![value(0)?];
    for m in 0..depth {
        let prev = &reps[m];
        let xi = value(m + 1)?;
        let j = generator_morphism::<S>(alg, GeneratorClass::C, (0, m as i64), (0, m as i64 + 1))?;
        let delta = xi.compose(&j)?.sub(&j.shift(t).compose(prev)?)?;
        let h = is_null_homotopic(&delta)
            .ok_or_else(|| Error::CorrectionUnsolvable(format!("no homotopy at level {}", m + 1)))?;
        let comps = (0..=m as i64).map(|i| (i, h.component(i))).collect();
        let h_ext = Homotopy::from_components(xi.source().clone(), xi.target().clone(), comps)?;
        let next = xi.sub(&h_ext.boundary())?;
        for i in 0..=m as i64 {
            if next.component(i) != prev.component(i) {
                return Err(Error::VerificationFailed(format!("level {} changed the component in degree {i}", m + 1)));
            }
        }
        reps.push(next);
    }
    Ok(reps)
}

/// Dimensions of `H^i(Hom_A(X, S))` for `lo(X) <= i <= hi(X)`, `S = A/(x)`.
/// Applied to `A_0^m` this computes `Ext^i(S, S)` for `i < m`.
pub fn ext_dims_of_simple<S: Scalar>(x: &Complex<S>) -> Vec<(i64, usize)> {
    if x.is_zero() {
        return Vec::new();
    }
    let field = x.algebra().field;
    // δ^i : Hom(X_{i-1}, S) -> Hom(X_i, S) is the transpose of d_i mod x.
    let coboundary = |i: i64| -> ExactMatrix<S> {
        let d = x.diff(i);
        let mut m = ExactMatrix::zeros(field, d.cols(), d.rows());
        for r in 0..d.rows() {
            for c in 0..d.cols() {
                m.set(c, r, d.entry(r, c)[0].clone());
            }
        }
        m
    };
    x.degrees()
        .map(|i| {
            let out_rank = coboundary(i + 1).rank();
            let in_rank = coboundary(i).rank();
            (i, x.rank(i) - out_rank - in_rank)
        })
        .collect()
}
