use std::str::FromStr;

use gcenter_core::{FieldTag, Fp, Rational, Scalar};

use crate::dump::CenterDump;
use crate::CliError;

/// Basis element `index` of the degree-`degree` center, written `degree:index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ElementId {
    pub degree: i64,
    pub index: usize,
}

impl FromStr for ElementId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (d, i) = s.split_once(':').ok_or_else(|| format!("expected degree:index, got {s:?}"))?;
        Ok(ElementId {
            degree: d.trim().parse().map_err(|_| format!("bad degree {d:?}"))?,
            index: i.trim().parse().map_err(|_| format!("bad index {i:?}"))?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultResult {
    pub degree: i64,
    pub product: Vec<String>,
    /// `ab = (-1)^{|a||b|} ba`, checked against the reverse table entry.
    pub commutes: bool,
}

fn lookup(dump: &CenterDump, a: ElementId, b: ElementId) -> Result<&[String], CliError> {
    let missing = |d: i64| CliError::Usage(format!("degree {d} is not in the dump"));
    let left = dump.degree(a.degree).ok_or_else(|| missing(a.degree))?;
    dump.degree(b.degree).ok_or_else(|| missing(b.degree))?;
    dump.degree(a.degree + b.degree).ok_or_else(|| missing(a.degree + b.degree))?;
    for (id, d) in [(a, left), (b, dump.degree(b.degree).expect("checked"))] {
        if id.index >= d.dimension {
            return Err(CliError::Usage(format!("degree {} has only {} basis elements", id.degree, d.dimension)));
        }
    }
    left.mult
        .iter()
        .find(|p| p.left == a.index && p.right_degree == b.degree && p.right == b.index)
        .map(|p| p.product.as_slice())
        .ok_or_else(|| {
            CliError::Usage(format!("product {}:{} * {}:{} is not in the dump", a.degree, a.index, b.degree, b.index))
        })
}

/// Reads the product of two basis elements from a dump and checks graded
/// commutativity against the reversed product.
pub fn mult(dump: &CenterDump, a: ElementId, b: ElementId) -> Result<MultResult, CliError> {
    let field: FieldTag = dump.config.field_tag()?;
    let ab = lookup(dump, a, b)?;
    let ba = lookup(dump, b, a)?;
    let commutes = match field {
        FieldTag::Rationals => commutes::<Rational>(field, ab, ba, a.degree * b.degree)?,
        FieldTag::Prime(_) => commutes::<Fp>(field, ab, ba, a.degree * b.degree)?,
    };
    Ok(MultResult { degree: a.degree + b.degree, product: ab.to_vec(), commutes })
}

fn commutes<S: Scalar>(field: FieldTag, ab: &[String], ba: &[String], sign: i64) -> Result<bool, CliError> {
    let parse = |v: &[String]| -> Result<Vec<S>, CliError> {
        v.iter().map(|s| S::parse(field, s).map_err(CliError::from)).collect()
    };
    let (ab, ba) = (parse(ab)?, parse(ba)?);
    Ok(ab.len() == ba.len()
        && ab.iter().zip(&ba).all(|(x, y)| if sign.rem_euclid(2) == 1 { *x == y.neg() } else { x == y }))
}
