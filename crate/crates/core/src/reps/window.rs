use std::collections::BTreeMap;
use std::sync::Arc;

use super::homext::{almost_split_classes, RepHomSpace, RepMorphism};
use super::{QuiverSpec, Rep};
use crate::field::{FieldTag, Scalar};
use crate::linear::ExactMatrix;
use crate::window::{
    unit_element, CenterElement, CenterRing, Generator, GradedCategory, HomSpace, Presentation, Relation, RingReport,
    Verdict, WindowCategory,
};
use crate::Error;

/// Window of the derived category of nilpotent representations: the stalk
/// complexes `Σ^j M_s^{[l]}` for `l <= max_len` and `0 <= j <= max_shift`.
#[derive(Clone, Debug)]
pub struct RepWindow<S: Scalar> {
    quiver: QuiverSpec,
    field: FieldTag,
    max_len: usize,
    max_shift: usize,
    modules: Vec<Arc<Rep<S>>>,
}

impl<S: Scalar> RepWindow<S> {
    pub fn new(quiver: QuiverSpec, field: FieldTag, max_len: usize, max_shift: usize) -> Result<Self, Error> {
        if max_len == 0 {
            return Err(Error::InvalidConfig("the length bound must be at least 1".into()));
        }
        let modules = quiver
            .indecomposables(max_len)
            .into_iter()
            .map(|(s, l)| Rep::uniserial(quiver, field, s, l).map(Arc::new))
            .collect::<Result<_, _>>()?;
        Ok(RepWindow { quiver, field, max_len, max_shift, modules })
    }

    pub fn quiver(&self) -> QuiverSpec {
        self.quiver
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn modules(&self) -> &[Arc<Rep<S>>] {
        &self.modules
    }

    /// `(module index, shift)` of a window object.
    pub fn params(&self, x: usize) -> (usize, usize) {
        (x % self.modules.len(), x / self.modules.len())
    }

    pub fn index(&self, module: usize, shift: usize) -> Option<usize> {
        (module < self.modules.len() && shift <= self.max_shift).then(|| shift * self.modules.len() + module)
    }

    pub fn module(&self, x: usize) -> &Arc<Rep<S>> {
        &self.modules[self.params(x).0]
    }

    /// Index of `M_s^{[l]}` among the modules.
    pub fn module_index(&self, s: usize, l: usize) -> Option<usize> {
        self.modules.iter().position(|m| m.params() == Some((s, l)))
    }
}

impl<S: Scalar> GradedCategory for RepWindow<S> {
    type Scalar = S;
    type Morphism = RepMorphism<S>;
    type Hom = RepHomSpace<S>;

    fn field(&self) -> FieldTag {
        self.field
    }

    fn object_count(&self) -> usize {
        self.modules.len() * (self.max_shift + 1)
    }

    fn object_label(&self, x: usize) -> String {
        let (m, j) = self.params(x);
        match j {
            0 => self.modules[m].label(),
            1 => format!("Σ{}", self.modules[m].label()),
            _ => format!("Σ^{j}{}", self.modules[m].label()),
        }
    }

    fn suspension(&self, x: usize) -> Option<usize> {
        let (m, j) = self.params(x);
        self.index(m, j + 1)
    }

    fn hom_space(&self, x: usize, y: usize, t: i64) -> RepHomSpace<S> {
        let ((m, a), (n, b)) = (self.params(x), self.params(y));
        RepHomSpace::new(self.modules[m].clone(), self.modules[n].clone(), a as i64, b as i64 + t)
    }

    fn compose(&self, g: &RepMorphism<S>, f: &RepMorphism<S>) -> Result<RepMorphism<S>, Error> {
        g.compose(f)
    }

    fn suspend(&self, f: &RepMorphism<S>, k: i64) -> RepMorphism<S> {
        f.shift(k)
    }

    fn identity(&self, x: usize) -> RepMorphism<S> {
        let (m, j) = self.params(x);
        RepMorphism::identity(self.modules[m].clone(), j as i64)
    }
}

/// Window over `q` with lengths up to `max_len` in degrees 0 and 1.
pub fn build_window_tube<S: Scalar>(
    q: QuiverSpec,
    field: FieldTag,
    max_len: usize,
) -> Result<WindowCategory<RepWindow<S>>, Error> {
    Ok(WindowCategory::new(RepWindow::new(q, field, max_len, 1)?))
}

/// The endomorphism of `M_s^{[l]}` that walks once around the cycle:
/// `e_k -> e_{k-n}`, zero on the bottom `n` basis vectors.
fn cycle_walk<S: Scalar>(m: &Arc<Rep<S>>, n: usize, shift: i64) -> RepMorphism<S> {
    let field = m.field();
    let (s, l) = m.params().expect("uniserial");
    let q = m.quiver();
    // Local index of every basis vector e_k within its vertex space.
    let mut seen = vec![0usize; q.vertex_count()];
    let mut local = Vec::with_capacity(l);
    for k in 0..l {
        let v = (s + q.vertex_count() * (k + 1) - k) % q.vertex_count();
        local.push((v, seen[v]));
        seen[v] += 1;
    }
    let mut data: Vec<ExactMatrix<S>> = m.dims().iter().map(|&d| ExactMatrix::zeros(field, d, d)).collect();
    for k in n..l {
        let (v, c) = local[k];
        let (_, r) = local[k - n];
        data[v].set(r, c, S::one(field));
    }
    RepMorphism::module_map(m.clone(), m.clone(), shift, data)
        .expect("walking around the cycle commutes with the arrows")
}

/// `ξ`: at `M_s^{[l]}`, the composite `M_s^{[l]} -> M_{s-n}^{[l-n]} -> M_s^{[l]}`
/// of the projection and the inclusion, i.e. one walk around the cycle
/// `Z_n`; identical on every shift.
pub fn xi_element<S: Scalar>(w: &WindowCategory<RepWindow<S>>) -> Result<CenterElement<S>, Error> {
    let c = w.category();
    let QuiverSpec::Cycle(n) = c.quiver() else {
        return Err(Error::InvalidConfig("ξ is defined on cyclic quivers".into()));
    };
    let h0 = w.homs(0);
    let components = (0..c.object_count())
        .map(|x| {
            let (_, j) = c.params(x);
            h0.get(x, x).coordinates(&cycle_walk(c.module(x), n, j as i64))
        })
        .collect::<Result<_, _>>()?;
    Ok(CenterElement { degree: 0, components })
}

/// `η^l` on a window over `Z_1`: the almost split class in
/// `Ext¹(M^{[l]}, M^{[l]})` at `M^{[l]}`, its negative suspension at
/// `ΣM^{[l]}` and zero elsewhere. The class is computed against all
/// indecomposables of length at most `l + 1`.
pub fn eta_l_element<S: Scalar>(w: &WindowCategory<RepWindow<S>>, l: usize) -> Result<CenterElement<S>, Error> {
    let c = w.category();
    if c.quiver() != QuiverSpec::Cycle(1) {
        return Err(Error::InvalidConfig("η^l is defined on the one-loop quiver".into()));
    }
    let field = c.field();
    let target = c.module_index(0, l).ok_or_else(|| Error::ObjectNotInWindow(format!("M^[{l}]")))?;
    let m = c.modules()[target].clone();
    let tests = (1..=l + 1)
        .map(|k| Rep::uniserial(QuiverSpec::Cycle(1), field, 0, k).map(Arc::new))
        .collect::<Result<Vec<_>, _>>()?;
    let ar = almost_split_classes(&m, &m, &tests)?;
    if ar.dim() != 1 {
        return Err(Error::VerificationFailed(format!(
            "expected a single almost split class at M^[{l}], found {}",
            ar.dim()
        )));
    }
    let class = ar.basis()[0].clone();
    let h1 = w.homs(1);
    let components = (0..c.object_count())
        .map(|x| {
            let (k, j) = c.params(x);
            let d = h1.get(x, x).dim();
            if k != target {
                return vec![S::zero(field); d];
            }
            let sign = if j % 2 == 0 { S::one(field) } else { S::one(field).neg() };
            class.iter().map(|v| v.mul(&sign)).collect()
        })
        .collect();
    Ok(CenterElement { degree: 1, components })
}

fn ring_coordinates<S: Scalar>(ring: &CenterRing<S>, e: &CenterElement<S>, name: &str) -> Result<Vec<S>, Error> {
    ring.basis(e.degree)?
        .coordinates(e)
        .ok_or_else(|| Error::NotInSpan(format!("{name} is not a center element of the window")))
}

/// Truncated `k[[ξ]]` (cycles of length `n >= 2`, and lines, where `ξ` is
/// absent) or, for `n = 1`, the trivial extension of `k[ξ]/(ξ^L)` by
/// `⊕_l k η^l` with `ξ` acting by zero.
pub fn tube_presentation<S: Scalar>(
    w: &WindowCategory<RepWindow<S>>,
    ring: &CenterRing<S>,
) -> Result<Presentation<S>, Error> {
    let c = w.category();
    let field = c.field();
    let unit = ring_coordinates(ring, &unit_element(w)?, "the identity")?;
    let mut generators = Vec::new();
    let mut relations = Vec::new();
    let mut spanning = BTreeMap::new();
    let (target, powers) = match c.quiver() {
        QuiverSpec::Cycle(n) => {
            let xi = xi_element(w)?;
            generators.push(Generator { name: "xi".into(), degree: 0, coords: ring_coordinates(ring, &xi, "ξ")? });
            let top = (c.max_len() - 1) / n;
            relations
                .push(Relation { name: format!("xi^{}", top + 1), terms: vec![(S::one(field), vec![0; top + 1])] });
            let target = if n == 1 {
                format!("T(k[xi]/(xi^{}), k^{})", top + 1, c.max_len())
            } else {
                format!("k[xi]/(xi^{})", top + 1)
            };
            (target, top + 1)
        }
        QuiverSpec::Line(_) => ("k".to_string(), 1),
    };
    spanning.insert(0, (0..powers).map(|p| vec![0; p]).collect::<Vec<_>>());
    if c.quiver() == QuiverSpec::Cycle(1) && ring.basis(1).is_ok() {
        let first = generators.len();
        for l in 1..=c.max_len() {
            let e = eta_l_element(w, l)?;
            generators.push(Generator {
                name: format!("eta^{l}"),
                degree: 1,
                coords: ring_coordinates(ring, &e, "η^l")?,
            });
        }
        let etas: Vec<usize> = (first..generators.len()).collect();
        for &a in &etas {
            let name = &generators[a].name;
            relations.push(Relation { name: format!("xi*{name}"), terms: vec![(S::one(field), vec![0, a])] });
            relations.push(Relation { name: format!("{name}*xi"), terms: vec![(S::one(field), vec![a, 0])] });
            for &b in &etas {
                let other = &generators[b].name;
                relations.push(Relation { name: format!("{name}*{other}"), terms: vec![(S::one(field), vec![a, b])] });
            }
        }
        spanning.insert(1, etas.iter().map(|&a| vec![a]).collect());
    }
    for d in ring.degrees() {
        spanning.entry(d).or_insert_with(Vec::new);
    }
    Ok(Presentation { target, unit, generators, relations, spanning })
}

/// Builds [`tube_presentation`] and checks it; a generator that is not a
/// center element is a mismatch rather than an error.
pub fn match_tube_presentation<S: Scalar>(
    w: &WindowCategory<RepWindow<S>>,
    ring: &CenterRing<S>,
) -> Result<RingReport, Error> {
    match tube_presentation(w, ring) {
        Ok(p) => p.check(ring),
        Err(Error::NotInSpan(reason)) => Ok(RingReport {
            target: w.category().quiver().to_string(),
            verdict: Verdict::Mismatch { reason },
            generators: Vec::new(),
            checked_relations: Vec::new(),
            unchecked_relations: Vec::new(),
        }),
        Err(e) => Err(e),
    }
}
