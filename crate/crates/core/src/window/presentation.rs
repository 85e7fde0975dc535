use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::ring::CenterRing;
use crate::field::Scalar;
use crate::linear::Subspace;
use crate::Error;

/// Word in the generators, multiplied left to right; empty means the unit.
pub type Monomial = Vec<usize>;

#[derive(Clone, Debug)]
pub struct Generator<S> {
    pub name: String,
    pub degree: i64,
    /// Coordinates in the center basis of `degree`.
    pub coords: Vec<S>,
}

/// `Σ c_i m_i = 0` for monomials `m_i` of one common degree.
#[derive(Clone, Debug)]
pub struct Relation<S> {
    pub name: String,
    pub terms: Vec<(S, Monomial)>,
}

/// A candidate description of a window center: generators given by explicit
/// elements, relations that must vanish, and, per degree, monomials that
/// must form a basis of the computed center.
#[derive(Clone, Debug)]
pub struct Presentation<S> {
    pub target: String,
    pub unit: Vec<S>,
    pub generators: Vec<Generator<S>>,
    pub relations: Vec<Relation<S>>,
    pub spanning: BTreeMap<i64, Vec<Monomial>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Match,
    Mismatch { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorWitness {
    pub name: String,
    pub degree: i64,
    pub coords: Vec<String>,
}

/// Outcome of [`Presentation::check`]. On a match the generator
/// assignments are included; relations whose degree lies outside the
/// computed range are listed as unchecked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingReport {
    pub target: String,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub generators: Vec<GeneratorWitness>,
    pub checked_relations: Vec<String>,
    pub unchecked_relations: Vec<String>,
}

impl RingReport {
    pub fn is_match(&self) -> bool {
        self.verdict == Verdict::Match
    }
}

impl<S: Scalar> Presentation<S> {
    fn degree_of(&self, m: &Monomial) -> i64 {
        m.iter().map(|&g| self.generators[g].degree).sum()
    }

    /// Value of a monomial, or `None` if some partial product leaves the
    /// computed degree range.
    fn eval(&self, ring: &CenterRing<S>, m: &Monomial) -> Result<Option<Vec<S>>, Error> {
        let mut degree = 0;
        let mut value = self.unit.clone();
        for &g in m {
            let gen = &self.generators[g];
            if ring.basis(degree + gen.degree).is_err() {
                return Ok(None);
            }
            value = ring.mul(degree, &value, gen.degree, &gen.coords)?;
            degree += gen.degree;
        }
        Ok(Some(value))
    }

    pub fn check(&self, ring: &CenterRing<S>) -> Result<RingReport, Error> {
        let mut report = RingReport {
            target: self.target.clone(),
            verdict: Verdict::Match,
            generators: self
                .generators
                .iter()
                .map(|g| GeneratorWitness {
                    name: g.name.clone(),
                    degree: g.degree,
                    coords: g.coords.iter().map(ToString::to_string).collect(),
                })
                .collect(),
            checked_relations: Vec::new(),
            unchecked_relations: Vec::new(),
        };
        let fail = |mut r: RingReport, reason: String| {
            r.verdict = Verdict::Mismatch { reason };
            Ok(r)
        };
        if ring.dim(0).map(|d| d != self.unit.len()).unwrap_or(true) {
            return fail(report, "unit does not live in the degree-0 basis".into());
        }
        for g in &self.generators {
            match ring.dim(g.degree) {
                Ok(d) if d == g.coords.len() => {}
                _ => return fail(report, format!("generator {} has no valid coordinates", g.name)),
            }
        }
        for rel in &self.relations {
            let degrees: Vec<i64> = rel.terms.iter().map(|(_, m)| self.degree_of(m)).collect();
            if degrees.windows(2).any(|w| w[0] != w[1]) {
                return fail(report, format!("relation {} is not homogeneous", rel.name));
            }
            let mut sum: Option<Vec<S>> = None;
            let mut in_range = true;
            for (c, m) in &rel.terms {
                let Some(v) = self.eval(ring, m)? else {
                    in_range = false;
                    break;
                };
                let v: Vec<S> = v.iter().map(|a| a.mul(c)).collect();
                sum = Some(match sum {
                    None => v,
                    Some(s) => s.iter().zip(&v).map(|(a, b)| a.add(b)).collect(),
                });
            }
            if !in_range {
                report.unchecked_relations.push(rel.name.clone());
                continue;
            }
            if sum.is_some_and(|s| s.iter().any(|a| !a.is_zero())) {
                return fail(report, format!("relation {} does not hold", rel.name));
            }
            report.checked_relations.push(rel.name.clone());
        }
        for d in ring.degrees().collect::<Vec<_>>() {
            let dim = ring.dim(d)?;
            let monomials = self.spanning.get(&d).cloned().unwrap_or_default();
            let mut values = Vec::new();
            for m in &monomials {
                if self.degree_of(m) != d {
                    return fail(report, format!("spanning monomial {m:?} is not of degree {d}"));
                }
                match self.eval(ring, m)? {
                    Some(v) => values.push(v),
                    None => return fail(report, format!("spanning monomial {m:?} leaves the computed range")),
                }
            }
            let span = Subspace::span(ring.basis(d)?.field(), dim, values);
            if span.dim() != dim || monomials.len() != dim {
                return fail(
                    report,
                    format!("degree {d}: {} listed monomials span {} of {dim} dimensions", monomials.len(), span.dim()),
                );
            }
        }
        Ok(report)
    }
}
