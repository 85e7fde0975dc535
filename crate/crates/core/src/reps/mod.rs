//! Nilpotent representations of the cyclic quiver `Z_n` and of linearly
//! oriented type-A quivers, with Hom, Ext¹ and window categories of stalk
//! complexes over them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::field::{FieldTag, Scalar};
use crate::linear::ExactMatrix;
use crate::Error;

mod homext;
mod window;

pub use homext::{almost_split_classes, middle_term, pullback, pushforward, HomExt, RepHomSpace, RepMorphism};
pub use window::{build_window_tube, eta_l_element, match_tube_presentation, tube_presentation, xi_element, RepWindow};

/// A quiver whose nilpotent representations form a uniserial category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuiverSpec {
    /// Vertices `0..n`, arrows `i -> i+1 mod n`.
    Cycle(usize),
    /// Vertices `0..m`, arrows `i -> i+1` for `i + 1 < m`.
    Line(usize),
}

impl QuiverSpec {
    pub fn vertex_count(self) -> usize {
        match self {
            QuiverSpec::Cycle(n) | QuiverSpec::Line(n) => n,
        }
    }

    /// Arrows as `(source, target)`.
    pub fn arrows(self) -> Vec<(usize, usize)> {
        match self {
            QuiverSpec::Cycle(n) => (0..n).map(|i| (i, (i + 1) % n)).collect(),
            QuiverSpec::Line(m) => (1..m).map(|i| (i - 1, i)).collect(),
        }
    }

    fn validate(self) -> Result<(), Error> {
        if self.vertex_count() == 0 {
            return Err(Error::InvalidConfig("a quiver needs at least one vertex".into()));
        }
        Ok(())
    }

    /// Vertex holding the `k`-th composition factor from the socle of
    /// `M_s^{[l]}`; `None` if it falls off a line quiver.
    fn vertex_below(self, s: usize, k: usize) -> Option<usize> {
        match self {
            QuiverSpec::Cycle(n) => Some((s + n * (k / n + 1) - k) % n),
            QuiverSpec::Line(_) => s.checked_sub(k),
        }
    }

    /// All indecomposables `M_s^{[l]}` with `l <= max_len`.
    pub fn indecomposables(self, max_len: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for l in 1..=max_len {
            for s in 0..self.vertex_count() {
                if self.vertex_below(s, l - 1).is_some() {
                    out.push((s, l));
                }
            }
        }
        out
    }
}

impl fmt::Display for QuiverSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuiverSpec::Cycle(n) => write!(f, "Z_{n}"),
            QuiverSpec::Line(m) => write!(f, "A_{m}"),
        }
    }
}

/// A representation: a vector space per vertex and a matrix per arrow
/// (`dim(target) x dim(source)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep<S: Scalar> {
    quiver: QuiverSpec,
    field: FieldTag,
    dims: Vec<usize>,
    arrows: Vec<ExactMatrix<S>>,
    /// `(socle, length)` for the uniserial `M_s^{[l]}`.
    params: Option<(usize, usize)>,
}

impl<S: Scalar> Rep<S> {
    pub fn new(
        quiver: QuiverSpec,
        field: FieldTag,
        dims: Vec<usize>,
        arrows: Vec<ExactMatrix<S>>,
    ) -> Result<Self, Error> {
        quiver.validate()?;
        if dims.len() != quiver.vertex_count() {
            return Err(Error::DimensionMismatch {
                context: "vertex dimensions",
                expected: quiver.vertex_count(),
                found: dims.len(),
            });
        }
        let shape = quiver.arrows();
        if arrows.len() != shape.len() {
            return Err(Error::DimensionMismatch {
                context: "arrow matrices",
                expected: shape.len(),
                found: arrows.len(),
            });
        }
        for (m, &(i, j)) in arrows.iter().zip(&shape) {
            if m.rows() != dims[j] || m.cols() != dims[i] {
                return Err(Error::ShapeMismatch(format!(
                    "arrow {i}->{j} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    dims[j],
                    dims[i]
                )));
            }
        }
        Ok(Rep { quiver, field, dims, arrows, params: None })
    }

    /// The uniserial `M_s^{[l]}` with socle `S_s` and length `l`. Its basis
    /// vectors `e_0 (socle), …, e_{l-1} (top)` sit at vertices `s, s-1, …`
    /// and every arrow sends `e_k` to `e_{k-1}`.
    pub fn uniserial(quiver: QuiverSpec, field: FieldTag, s: usize, l: usize) -> Result<Self, Error> {
        quiver.validate()?;
        if l == 0 || s >= quiver.vertex_count() || quiver.vertex_below(s, l - 1).is_none() {
            return Err(Error::IndexConstraint(format!("no indecomposable M_{s}^[{l}] over {quiver}")));
        }
        let n = quiver.vertex_count();
        let mut dims = vec![0; n];
        let mut local = Vec::with_capacity(l);
        for k in 0..l {
            let v = quiver.vertex_below(s, k).expect("checked above");
            local.push((v, dims[v]));
            dims[v] += 1;
        }
        let shape = quiver.arrows();
        let mut arrows: Vec<ExactMatrix<S>> =
            shape.iter().map(|&(i, j)| ExactMatrix::zeros(field, dims[j], dims[i])).collect();
        for k in 1..l {
            let (v, c) = local[k];
            let (w, r) = local[k - 1];
            let a =
                shape.iter().position(|&(i, j)| i == v && j == w).expect("consecutive factors are joined by an arrow");
            arrows[a].set(r, c, S::one(field));
        }
        Ok(Rep { quiver, field, dims, arrows, params: Some((s, l)) })
    }

    pub fn quiver(&self) -> QuiverSpec {
        self.quiver
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn arrow(&self, a: usize) -> &ExactMatrix<S> {
        &self.arrows[a]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn params(&self) -> Option<(usize, usize)> {
        self.params
    }

    pub fn label(&self) -> String {
        match self.params {
            Some((s, l)) => format!("M_{s}^[{l}]"),
            None => format!("rep{:?}", self.dims),
        }
    }

    /// Position `(vertex, local index)` of the top basis vector of a
    /// uniserial.
    fn top(&self) -> Option<(usize, usize)> {
        let (s, l) = self.params?;
        let v = self.quiver.vertex_below(s, l - 1)?;
        Some((v, self.dims[v] - 1))
    }

    /// Dimensions of the images of the total arrow map and its powers
    /// (all arrows at once, as an endomorphism of `⊕ M_i`).
    pub fn radical_ranks(&self) -> Vec<usize> {
        let n = self.total_dim();
        let offsets: Vec<usize> = self
            .dims
            .iter()
            .scan(0, |acc, &d| {
                let o = *acc;
                *acc += d;
                Some(o)
            })
            .collect();
        let mut x = ExactMatrix::zeros(self.field, n, n);
        for (a, &(i, j)) in self.quiver.arrows().iter().enumerate() {
            let m = &self.arrows[a];
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    let v = m.get(r, c).add(x.get(offsets[j] + r, offsets[i] + c));
                    x.set(offsets[j] + r, offsets[i] + c, v);
                }
            }
        }
        let mut out = Vec::new();
        let mut power = x.clone();
        loop {
            let r = power.rank();
            out.push(r);
            if r == 0 {
                break;
            }
            power = x.mul(&power).expect("square");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    const F: FieldTag = FieldTag::Prime(101);

    #[test]
    fn uniserials_have_the_right_dimension_vectors() {
        let m = Rep::<Fp>::uniserial(QuiverSpec::Cycle(3), F, 0, 5).unwrap();
        assert_eq!(m.dims(), &[2, 1, 2]);
        assert_eq!(m.radical_ranks(), vec![4, 3, 2, 1, 0]);
        let line = Rep::<Fp>::uniserial(QuiverSpec::Line(4), F, 2, 3).unwrap();
        assert_eq!(line.dims(), &[1, 1, 1, 0]);
        assert!(Rep::<Fp>::uniserial(QuiverSpec::Line(4), F, 1, 3).is_err());
    }

    #[test]
    fn line_indecomposables_are_the_intervals() {
        assert_eq!(QuiverSpec::Line(4).indecomposables(10).len(), 10);
        assert_eq!(QuiverSpec::Cycle(2).indecomposables(3).len(), 6);
    }
}
