use std::sync::Arc;

use super::Rep;
use crate::field::{FieldTag, Scalar};
use crate::linear::{ExactMatrix, Subspace};
use crate::window::HomSpace;
use crate::Error;

/// The map `δ : ⊕_i Hom(M_i, N_i) -> ⊕_{a: i -> j} Hom(M_i, N_j)`,
/// `δ(φ)_a = N_a φ_i - φ_j M_a`, whose kernel is `Hom(M, N)` and whose
/// cokernel is `Ext¹(M, N)`.
fn delta<S: Scalar>(m: &Rep<S>, n: &Rep<S>) -> ExactMatrix<S> {
    let field = m.field();
    let (dom, cod) = (hom_blocks(m, n), ext_blocks(m, n));
    let (dom_len, cod_len) = (dom.last().map_or(0, |b| b.1), cod.last().map_or(0, |b| b.1));
    let mut out = ExactMatrix::<S>::zeros(field, cod_len, dom_len);
    let arrows = m.quiver().arrows();
    for (a, &(i, j)) in arrows.iter().enumerate() {
        let base = cod[a].0;
        let (na, ma) = (n.arrow(a), m.arrow(a));
        let cols_m = m.dims()[i];
        // N_a φ_i: entry (r, c) gets Σ_k N_a[r, k] φ_i[k, c].
        for r in 0..n.dims()[j] {
            for c in 0..cols_m {
                let row = base + r * cols_m + c;
                for k in 0..n.dims()[i] {
                    let v = na.get(r, k);
                    if !v.is_zero() {
                        let col = dom[i].0 + k * cols_m + c;
                        let cur = out.get(row, col).add(v);
                        out.set(row, col, cur);
                    }
                }
                // -φ_j M_a: entry (r, c) gets -Σ_k φ_j[r, k] M_a[k, c].
                for k in 0..m.dims()[j] {
                    let v = ma.get(k, c);
                    if !v.is_zero() {
                        let col = dom[j].0 + r * m.dims()[j] + k;
                        let cur = out.get(row, col).sub(v);
                        out.set(row, col, cur);
                    }
                }
            }
        }
    }
    out
}

/// Offsets `(start, end)` of the vertex blocks of `⊕_i Hom(M_i, N_i)`.
fn hom_blocks<S: Scalar>(m: &Rep<S>, n: &Rep<S>) -> Vec<(usize, usize)> {
    blocks(m.dims().iter().zip(n.dims()).map(|(&a, &b)| a * b))
}

/// Offsets `(start, end)` of the arrow blocks of `⊕_a Hom(M_i, N_j)`.
fn ext_blocks<S: Scalar>(m: &Rep<S>, n: &Rep<S>) -> Vec<(usize, usize)> {
    blocks(m.quiver().arrows().into_iter().map(|(i, j)| m.dims()[i] * n.dims()[j]))
}

fn blocks(sizes: impl Iterator<Item = usize>) -> Vec<(usize, usize)> {
    let mut at = 0;
    sizes
        .map(|s| {
            let b = (at, at + s);
            at += s;
            b
        })
        .collect()
}

fn flatten<S: Scalar>(data: &[ExactMatrix<S>]) -> Vec<S> {
    data.iter().flat_map(|m| m.entries().iter().cloned()).collect()
}

fn unflatten<S: Scalar>(field: FieldTag, shapes: &[(usize, usize)], v: &[S]) -> Vec<ExactMatrix<S>> {
    let mut at = 0;
    shapes
        .iter()
        .map(|&(r, c)| {
            let m = ExactMatrix::from_entries(field, r, c, v[at..at + r * c].to_vec()).expect("block size");
            at += r * c;
            m
        })
        .collect()
}

fn hom_shapes<S: Scalar>(m: &Rep<S>, n: &Rep<S>) -> Vec<(usize, usize)> {
    m.dims().iter().zip(n.dims()).map(|(&a, &b)| (b, a)).collect()
}

fn ext_shapes<S: Scalar>(m: &Rep<S>, n: &Rep<S>) -> Vec<(usize, usize)> {
    m.quiver().arrows().into_iter().map(|(i, j)| (n.dims()[j], m.dims()[i])).collect()
}

/// A morphism `Σ^from M -> Σ^to N` of the derived category of a hereditary
/// category: a module map when `to = from`, an extension class (given by a
/// representative cocycle, one matrix per arrow) when `to = from + 1`, and
/// zero otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMorphism<S: Scalar> {
    pub source: Arc<Rep<S>>,
    pub target: Arc<Rep<S>>,
    pub from: i64,
    pub to: i64,
    pub data: Vec<ExactMatrix<S>>,
}

impl<S: Scalar> RepMorphism<S> {
    pub fn degree(&self) -> i64 {
        self.to - self.from
    }

    pub fn zero(source: Arc<Rep<S>>, target: Arc<Rep<S>>, from: i64, to: i64) -> Self {
        let field = source.field();
        let shapes = match to - from {
            0 => hom_shapes(&source, &target),
            1 => ext_shapes(&source, &target),
            _ => Vec::new(),
        };
        let data = shapes.into_iter().map(|(r, c)| ExactMatrix::zeros(field, r, c)).collect();
        RepMorphism { source, target, from, to, data }
    }

    pub fn identity(m: Arc<Rep<S>>, shift: i64) -> Self {
        let field = m.field();
        let data = m.dims().iter().map(|&d| ExactMatrix::identity(field, d)).collect();
        RepMorphism { source: m.clone(), target: m, from: shift, to: shift, data }
    }

    /// A module map `M -> N` in degree `shift`, checked to intertwine the arrows.
    pub fn module_map(
        source: Arc<Rep<S>>,
        target: Arc<Rep<S>>,
        shift: i64,
        maps: Vec<ExactMatrix<S>>,
    ) -> Result<Self, Error> {
        let f = RepMorphism { source, target, from: shift, to: shift, data: maps };
        if f.data.len() != f.source.dims().len()
            || f.data.iter().zip(hom_shapes(&f.source, &f.target)).any(|(m, s)| (m.rows(), m.cols()) != s)
        {
            return Err(Error::ShapeMismatch("vertex maps do not match the dimension vectors".into()));
        }
        let d = delta(&f.source, &f.target);
        if d.mul_vec(&flatten(&f.data))?.iter().any(|v| !v.is_zero()) {
            return Err(Error::NotAChainMap("vertex maps do not commute with the arrows".into()));
        }
        Ok(f)
    }

    pub fn shift(&self, k: i64) -> Self {
        RepMorphism { from: self.from + k, to: self.to + k, ..self.clone() }
    }

    pub fn scale(&self, c: &S) -> Self {
        RepMorphism { data: self.data.iter().map(|m| m.scale(c)).collect(), ..self.clone() }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if self.source != other.source || self.target != other.target || self.from != other.from || self.to != other.to
        {
            return Err(Error::ShapeMismatch("adding morphisms with different ends".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect::<Result<_, _>>()?;
        Ok(RepMorphism { data, ..self.clone() })
    }

    /// `self ∘ f` (Yoneda composition; products of two extensions vanish).
    pub fn compose(&self, f: &Self) -> Result<Self, Error> {
        if f.to != self.from || f.target != self.source {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.source.label(),
                self.target.label(),
                f.source.label(),
                f.target.label()
            )));
        }
        let (src, tgt) = (f.source.clone(), self.target.clone());
        match (f.degree(), self.degree()) {
            (0, 0) => {
                let data = self.data.iter().zip(&f.data).map(|(g, h)| g.mul(h)).collect::<Result<_, _>>()?;
                Ok(RepMorphism { source: src, target: tgt, from: f.from, to: self.to, data })
            }
            (0, 1) => Ok(pullback(self, f)),
            (1, 0) => Ok(pushforward(self, f)),
            _ => Ok(RepMorphism::zero(src, tgt, f.from, self.to)),
        }
    }
}

/// `β ∘ ψ` for a class `β ∈ Ext¹(M, N)` and a module map `ψ : X -> M`.
pub fn pullback<S: Scalar>(beta: &RepMorphism<S>, psi: &RepMorphism<S>) -> RepMorphism<S> {
    let arrows = psi.source.quiver().arrows();
    let data = arrows
        .iter()
        .enumerate()
        .map(|(a, &(i, _))| beta.data[a].mul(&psi.data[i]).expect("pullback shapes"))
        .collect();
    RepMorphism { source: psi.source.clone(), target: beta.target.clone(), from: psi.from, to: beta.to, data }
}

/// `Σφ ∘ β` for a class `β ∈ Ext¹(M, N)` and a module map `φ : N -> Y`.
pub fn pushforward<S: Scalar>(phi: &RepMorphism<S>, beta: &RepMorphism<S>) -> RepMorphism<S> {
    let arrows = beta.source.quiver().arrows();
    let data = arrows
        .iter()
        .enumerate()
        .map(|(a, &(_, j))| phi.data[j].mul(&beta.data[a]).expect("pushforward shapes"))
        .collect();
    RepMorphism { source: beta.source.clone(), target: phi.target.clone(), from: beta.from, to: phi.to, data }
}

/// The middle term `E` of the extension `0 -> N -> E -> M -> 0` with class
/// `β`: `E_i = N_i ⊕ M_i` and arrows `[[N_a, β_a], [0, M_a]]`.
pub fn middle_term<S: Scalar>(beta: &RepMorphism<S>) -> Result<Rep<S>, Error> {
    if beta.degree() != 1 {
        return Err(Error::IndexConstraint("middle terms exist for extension classes only".into()));
    }
    let (m, n) = (&beta.source, &beta.target);
    let field = m.field();
    let dims: Vec<usize> = m.dims().iter().zip(n.dims()).map(|(a, b)| a + b).collect();
    let arrows = m
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(i, j))| {
            let mut e = ExactMatrix::zeros(field, dims[j], dims[i]);
            let (nj, ni) = (n.dims()[j], n.dims()[i]);
            for r in 0..nj {
                for c in 0..ni {
                    e.set(r, c, n.arrow(a).get(r, c).clone());
                }
                for c in 0..m.dims()[i] {
                    e.set(r, ni + c, beta.data[a].get(r, c).clone());
                }
            }
            for r in 0..m.dims()[j] {
                for c in 0..m.dims()[i] {
                    e.set(nj + r, ni + c, m.arrow(a).get(r, c).clone());
                }
            }
            e
        })
        .collect();
    Rep::new(m.quiver(), field, dims, arrows)
}

#[derive(Clone, Debug)]
pub enum HomExt<S> {
    /// Module maps: an echelon basis of the kernel of `δ`.
    Hom(Subspace<S>),
    /// Extension classes: the image of `δ` and the free columns spanning a
    /// complement of it.
    Ext {
        image: Subspace<S>,
        free: Vec<usize>,
    },
    Zero,
}

/// `Hom(Σ^from M, Σ^to N)` with a fixed basis.
#[derive(Clone, Debug)]
pub struct RepHomSpace<S: Scalar> {
    source: Arc<Rep<S>>,
    target: Arc<Rep<S>>,
    from: i64,
    to: i64,
    kind: HomExt<S>,
}

impl<S: Scalar> RepHomSpace<S> {
    pub fn new(source: Arc<Rep<S>>, target: Arc<Rep<S>>, from: i64, to: i64) -> Self {
        let field = source.field();
        let kind = match to - from {
            0 => {
                let d = delta(&source, &target);
                HomExt::Hom(Subspace::span(field, d.cols(), d.kernel_basis()))
            }
            1 => {
                let d = delta(&source, &target);
                let image = Subspace::span(field, d.rows(), d.transpose().row_vectors());
                let free = (0..d.rows()).filter(|c| !image.pivots().contains(c)).collect();
                HomExt::Ext { image, free }
            }
            _ => HomExt::Zero,
        };
        RepHomSpace { source, target, from, to, kind }
    }

    pub fn kind(&self) -> &HomExt<S> {
        &self.kind
    }

    fn shapes(&self) -> Vec<(usize, usize)> {
        match self.kind {
            HomExt::Hom(_) => hom_shapes(&self.source, &self.target),
            HomExt::Ext { .. } => ext_shapes(&self.source, &self.target),
            HomExt::Zero => Vec::new(),
        }
    }

    pub fn basis(&self) -> Vec<RepMorphism<S>> {
        let field = self.source.field();
        (0..self.dim()).map(|i| self.basis_element(i, field)).collect()
    }
}

impl<S: Scalar> HomSpace for RepHomSpace<S> {
    type Scalar = S;
    type Morphism = RepMorphism<S>;

    fn dim(&self) -> usize {
        match &self.kind {
            HomExt::Hom(space) => space.dim(),
            HomExt::Ext { free, .. } => free.len(),
            HomExt::Zero => 0,
        }
    }

    fn element(&self, coords: &[S]) -> RepMorphism<S> {
        let field = self.source.field();
        let flat = match &self.kind {
            HomExt::Hom(space) => space.combine(coords),
            HomExt::Ext { image, free } => {
                let mut v = vec![S::zero(field); image.ambient_dim()];
                for (c, &col) in coords.iter().zip(free) {
                    v[col] = c.clone();
                }
                v
            }
            HomExt::Zero => Vec::new(),
        };
        RepMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            from: self.from,
            to: self.to,
            data: unflatten(field, &self.shapes(), &flat),
        }
    }

    fn coordinates(&self, f: &RepMorphism<S>) -> Result<Vec<S>, Error> {
        if f.source != self.source || f.target != self.target || f.from != self.from || f.to != self.to {
            return Err(Error::ShapeMismatch(format!(
                "morphism {} -> {} does not belong to Hom({}, Σ^{} {})",
                f.source.label(),
                f.target.label(),
                self.source.label(),
                self.to - self.from,
                self.target.label()
            )));
        }
        let v = flatten(&f.data);
        match &self.kind {
            HomExt::Hom(space) => {
                space.coordinates(&v).ok_or_else(|| Error::NotInSpan("vertex maps are not a module map".into()))
            }
            HomExt::Ext { image, free } => {
                let r = image.reduce(&v);
                Ok(free.iter().map(|&c| r[c].clone()).collect())
            }
            HomExt::Zero => Ok(Vec::new()),
        }
    }
}

/// The subspace of `Ext¹(M, N)` (as coordinates) killed by pullback along
/// every radical map `X -> M` with `X` among `tests`. For `N = τM` and
/// `tests` containing every indecomposable of length at most `len(M) + 1`
/// this is the line spanned by the almost split sequence ending in `M`.
pub fn almost_split_classes<S: Scalar>(
    m: &Arc<Rep<S>>,
    n: &Arc<Rep<S>>,
    tests: &[Arc<Rep<S>>],
) -> Result<Subspace<S>, Error> {
    let field = m.field();
    let ext = RepHomSpace::new(m.clone(), n.clone(), 0, 1);
    let classes = ext.basis();
    let mut rows: Vec<Vec<S>> = Vec::new();
    for x in tests {
        let hom = RepHomSpace::new(x.clone(), m.clone(), 0, 0);
        let mut maps = hom.basis();
        if x == m {
            maps = radical_endomorphisms(m, &maps);
        }
        let target = RepHomSpace::new(x.clone(), n.clone(), 0, 1);
        for psi in &maps {
            let images: Vec<Vec<S>> =
                classes.iter().map(|b| target.coordinates(&pullback(b, psi))).collect::<Result<_, _>>()?;
            for k in 0..target.dim() {
                rows.push(images.iter().map(|v| v[k].clone()).collect());
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..classes.len())
            .map(|i| {
                let mut v = vec![S::zero(field); classes.len()];
                v[i] = S::one(field);
                v
            })
            .collect()
    } else {
        ExactMatrix::from_rows(field, classes.len(), rows)?.kernel_basis()
    };
    Ok(Subspace::span(field, classes.len(), kernel))
}

/// Basis of the non-invertible endomorphisms of a uniserial: those whose
/// top-to-top coefficient vanishes.
fn radical_endomorphisms<S: Scalar>(m: &Rep<S>, basis: &[RepMorphism<S>]) -> Vec<RepMorphism<S>> {
    let Some((v, i)) = m.top() else { return basis.to_vec() };
    let tops: Vec<S> = basis.iter().map(|f| f.data[v].get(i, i).clone()).collect();
    let Some(p) = tops.iter().position(|c| !c.is_zero()) else { return basis.to_vec() };
    let inv = tops[p].inv().expect("nonzero");
    basis
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != p)
        .map(|(k, f)| {
            let c = tops[k].mul(&inv).neg();
            f.add(&basis[p].scale(&c)).expect("same space")
        })
        .collect()
}
