use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::algebra::{AMatrix, SerialAlgebra};
use super::chain_map::ChainMap;
use super::complex::Complex;
use crate::field::Scalar;
use crate::Error;

/// The four families of morphisms generating all maps between the
/// indecomposable perfect complexes `A_m^n` over the dual numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GeneratorClass {
    /// `π_m^{n,n'} : A_m^n -> A_m^{n'}`, `m <= n' <= n`: `x` in degree `m`.
    A,
    /// `π_{m,m'}^n : A_m^n -> A_{m'}^n`, `m <= m' <= n`: `1` in degrees `m'..=n`.
    B,
    /// `i_m^{n,n'} : A_m^n -> A_m^{n'}`, `m <= n <= n'`: `1` in degrees `m..=n`.
    C,
    /// `i_{m,m'}^n : A_m^n -> A_{m'}^n`, `m' <= m <= n`: `x` in degree `m`.
    D,
}

/// The generator of class `class` from `A_m^nn` to `A_{m2}^{nn2}`.
pub fn generator_morphism<S: Scalar>(
    alg: SerialAlgebra,
    class: GeneratorClass,
    (m, nn): (i64, i64),
    (m2, nn2): (i64, i64),
) -> Result<ChainMap<S>, Error> {
    let ok = match class {
        GeneratorClass::A => m2 == m && m <= nn2 && nn2 <= nn,
        GeneratorClass::B => nn2 == nn && m <= m2 && m2 <= nn,
        GeneratorClass::C => m2 == m && m <= nn && nn <= nn2,
        GeneratorClass::D => nn2 == nn && m2 <= m && m <= nn,
    };
    if !ok {
        return Err(Error::IndexConstraint(format!("class {class:?} does not map A_{m}^{nn} to A_{m2}^{nn2}")));
    }
    let source = Arc::new(Complex::interval(alg, m, nn)?);
    let target = Arc::new(Complex::interval(alg, m2, nn2)?);
    let one = AMatrix::identity(alg, 1);
    let x = AMatrix::single(alg, S::one(alg.field), 1);
    let comps = match class {
        GeneratorClass::A | GeneratorClass::D => vec![(m, x)],
        GeneratorClass::B => (m2..=nn).map(|i| (i, one.clone())).collect(),
        GeneratorClass::C => (m..=nn).map(|i| (i, one.clone())).collect(),
    };
    ChainMap::from_components(source, target, comps)
}

/// The isomorphism `Σ^k A_m^n -> A_{m+k}^{n+k}`; its component in degree
/// `i` is `(-1)^{k(i-m-k)}`, absorbing the sign of the shifted differential.
pub fn interval_shift_iso<S: Scalar>(alg: SerialAlgebra, m: i64, nn: i64, k: i64) -> Result<ChainMap<S>, Error> {
    let base = Complex::interval(alg, m, nn)?;
    let source = Arc::new(base.shift(k));
    let target = Arc::new(Complex::interval(alg, m + k, nn + k)?);
    let one = S::one(alg.field);
    let comps = (m + k..=nn + k)
        .map(|i| {
            let sign = if (k * (i - m - k)).rem_euclid(2) == 1 { one.neg() } else { one.clone() };
            (i, AMatrix::scalar_diagonal(alg, 1, &alg.monomial(sign, 0)))
        })
        .collect();
    ChainMap::from_components(source, target, comps)
}
