use std::collections::BTreeMap;

use super::KbProj;
use crate::field::Scalar;
use crate::serial::{AMatrix, ChainMap};
use crate::window::{
    unit_element, CenterBasis, CenterElement, CenterRing, Generator, GradedCategory, Presentation, Relation,
    RingReport, Verdict, WindowCategory,
};
use crate::Error;

/// The endomorphism of `Σ^j A_0^r` that is `x` in its lowest degree `j`
/// and zero elsewhere (the nonidentity basis direction of its End).
pub fn x_lowest<S: Scalar>(c: &KbProj<S>, x: usize) -> ChainMap<S> {
    let (_, j) = c.params(x);
    let obj = c.object(x).clone();
    let xm = AMatrix::single(c.algebra(), S::one(c.algebra().field), 1);
    ChainMap::from_components(obj.clone(), obj, vec![(j as i64, xm)]).expect("x in lowest degree is a chain map")
}

/// `η_r`: `x` in lowest degree on every shift of `A_0^r`, zero on all other
/// objects.
pub fn eta_element<S: Scalar>(w: &WindowCategory<KbProj<S>>, r: usize) -> Result<CenterElement<S>, Error> {
    let c = w.category();
    let h0 = w.homs(0);
    let components = (0..c.object_count())
        .map(|x| {
            let space = h0.get(x, x);
            if c.params(x).0 == r {
                space.coordinates(&x_lowest(c, x))
            } else {
                Ok(vec![S::zero(c.field()); space.dim()])
            }
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(CenterElement { degree: 0, components })
}

/// Constant coefficient of the degree-`t` component of `f` (its image in
/// `Ext^t(S, S)` when `f` is a map of truncated resolutions).
pub fn ext_coordinate<S: Scalar>(f: &ChainMap<S>, t: i64) -> S {
    let comp = f.component(t);
    if comp.rows() == 0 || comp.cols() == 0 {
        return S::zero(f.algebra().field);
    }
    comp.entry(0, 0)[0].clone()
}

/// The one-dimensional degree-`t` center (`t >= 1`) scaled so that its value
/// at `A_0^t` has constant coefficient 1 in degree `t`; `None` when the
/// space is not one-dimensional or the normalising object is missing.
pub fn normalized_zeta<S: Scalar>(w: &WindowCategory<KbProj<S>>, basis: &CenterBasis<S>) -> Option<CenterElement<S>> {
    let t = basis.degree();
    if t < 1 || basis.dim() != 1 {
        return None;
    }
    let c = w.category();
    let x = c.index(t as usize, 0)?;
    let e = basis.element(0);
    let value = w.homs(t).get(x, x).element(&e.components[x]);
    let inv = ext_coordinate(&value, t).inv()?;
    Some(e.scale(&inv))
}

/// `T(k[ζ], ⊕_r k η_r)` with `ζ` in degree 2 (degree 1 in characteristic 2),
/// `η_r η_{r'} = ζ η_r = η_r ζ = 0`; the `η_r` range over the diagonals of
/// the window.
pub fn degree_presentation<S: Scalar>(
    w: &WindowCategory<KbProj<S>>,
    ring: &CenterRing<S>,
) -> Result<Presentation<S>, Error> {
    let c = w.category();
    let field = c.field();
    let g = if field.characteristic() == 2 { 1 } else { 2 };
    let b0 = ring.basis(0)?;
    let unit = b0.coordinates(&unit_element(w)?).ok_or_else(|| Error::NotInSpan("identity family".into()))?;
    let mut generators = Vec::new();
    for r in 0..=c.max_len() {
        let coords = b0.coordinates(&eta_element(w, r)?).ok_or_else(|| Error::NotInSpan(format!("η_{r}")))?;
        generators.push(Generator { name: format!("eta_{r}"), degree: 0, coords });
    }
    let etas: Vec<usize> = (0..generators.len()).collect();
    let mut relations = Vec::new();
    for &a in &etas {
        for &b in &etas {
            relations.push(Relation { name: format!("eta_{a}*eta_{b}"), terms: vec![(S::one(field), vec![a, b])] });
        }
    }
    let mut spanning = BTreeMap::new();
    spanning.insert(0, std::iter::once(Vec::new()).chain(etas.iter().map(|&a| vec![a])).collect::<Vec<_>>());
    if let Ok(bg) = ring.basis(g) {
        let zeta = normalized_zeta(w, bg).ok_or_else(|| Error::NotInSpan(format!("ζ in degree {g}")))?;
        let coords = bg.coordinates(&zeta).expect("basis element");
        let z = generators.len();
        generators.push(Generator { name: "zeta".into(), degree: g, coords });
        for &a in &etas {
            relations.push(Relation { name: format!("zeta*eta_{a}"), terms: vec![(S::one(field), vec![z, a])] });
            relations.push(Relation { name: format!("eta_{a}*zeta"), terms: vec![(S::one(field), vec![a, z])] });
        }
        for d in ring.degrees().filter(|&d| d > 0 && d % g == 0) {
            spanning.insert(d, vec![vec![z; (d / g) as usize]]);
        }
    }
    Ok(Presentation {
        target: format!("T(k[zeta], k^{}), deg zeta = {g}", c.max_len() + 1),
        unit,
        generators,
        relations,
        spanning,
    })
}

/// Builds [`degree_presentation`] and checks it; a missing generator is a
/// mismatch rather than an error.
pub fn match_presentation<S: Scalar>(w: &WindowCategory<KbProj<S>>, ring: &CenterRing<S>) -> Result<RingReport, Error> {
    match degree_presentation(w, ring) {
        Ok(p) => p.check(ring),
        Err(Error::NotInSpan(what)) => Ok(RingReport {
            target: "T(k[zeta], prod k)".into(),
            verdict: Verdict::Mismatch { reason: format!("{what} is not a center element of the window") },
            generators: Vec::new(),
            checked_relations: Vec::new(),
            unchecked_relations: Vec::new(),
        }),
        Err(e) => Err(e),
    }
}
