//! Exact scalar fields: prime fields `F_p` and the rationals.
//!
//! All computations in this crate are exact. A [`FieldTag`] names the
//! ambient field and is carried by every matrix so that zeros and ones can
//! be produced without a sample element at hand.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::linear::ExactMatrix;
use crate::Error;

/// Descriptor of the ambient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldTag {
    Rationals,
    Prime(u32),
}

impl FieldTag {
    pub fn characteristic(self) -> u32 {
        match self {
            FieldTag::Rationals => 0,
            FieldTag::Prime(p) => p,
        }
    }

    /// Short name used on the command line and in dumps: `q`, `f2`, `f101`, ...
    pub fn name(self) -> String {
        match self {
            FieldTag::Rationals => "q".to_string(),
            FieldTag::Prime(p) => format!("f{p}"),
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for FieldTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "q" {
            return Ok(FieldTag::Rationals);
        }
        let digits = lower.strip_prefix('f').ok_or_else(|| Error::InvalidField(s.to_string()))?;
        let p: u32 = digits.parse().map_err(|_| Error::InvalidField(s.to_string()))?;
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::InvalidField(format!("{s}: {p} is not a prime below 2^31")));
        }
        Ok(FieldTag::Prime(p))
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of an exact field.
///
/// Arithmetic is exposed through named methods taking references so that
/// big rationals are never cloned implicitly.
pub trait Scalar: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn from_i64(field: FieldTag, value: i64) -> Self;
    fn field(&self) -> FieldTag;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn parse(field: FieldTag, text: &str) -> Result<Self, Error>;

    fn zero(field: FieldTag) -> Self {
        Self::from_i64(field, 0)
    }

    fn one(field: FieldTag) -> Self {
        Self::from_i64(field, 1)
    }

    fn is_one(&self) -> bool {
        *self == Self::one(self.field())
    }

    /// `self += a * b`.
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.add(&a.mul(b));
    }

    /// Brings `m` into reduced row-echelon form in place and returns the
    /// pivot columns. Fields with a cheaper or better-behaved elimination
    /// override this.
    fn row_reduce(m: &mut ExactMatrix<Self>) -> Vec<usize> {
        crate::linear::gauss_jordan(m)
    }
}

/// Element of the prime field `F_p`, stored with its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    pub fn new(value: i64, modulus: u32) -> Self {
        let p = modulus as i64;
        Fp { value: value.rem_euclid(p) as u32, modulus }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    fn pow(self, mut e: u64) -> Self {
        let p = self.modulus as u64;
        let mut base = self.value as u64;
        let mut acc = 1u64 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp { value: acc as u32, modulus: self.modulus }
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Scalar for Fp {
    fn from_i64(field: FieldTag, value: i64) -> Self {
        match field {
            FieldTag::Prime(p) => Fp::new(value, p),
            FieldTag::Rationals => panic!("Fp requested over the rationals"),
        }
    }

    fn field(&self) -> FieldTag {
        FieldTag::Prime(self.modulus)
    }

    #[inline]
    fn is_zero(&self) -> bool {
        self.value == 0
    }

    #[inline]
    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let s = self.value as u64 + other.value as u64;
        let p = self.modulus as u64;
        Fp { value: if s >= p { (s - p) as u32 } else { s as u32 }, modulus: self.modulus }
    }

    #[inline]
    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let value = if self.value >= other.value {
            self.value - other.value
        } else {
            (self.value as u64 + self.modulus as u64 - other.value as u64) as u32
        };
        Fp { value, modulus: self.modulus }
    }

    #[inline]
    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let v = (self.value as u64 * other.value as u64) % self.modulus as u64;
        Fp { value: v as u32, modulus: self.modulus }
    }

    #[inline]
    fn neg(&self) -> Self {
        if self.value == 0 {
            *self
        } else {
            Fp { value: self.modulus - self.value, modulus: self.modulus }
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(self.modulus as u64 - 2))
        }
    }

    fn parse(field: FieldTag, text: &str) -> Result<Self, Error> {
        let v: i64 = text.trim().parse().map_err(|_| Error::Parse(format!("not an integer: {text:?}")))?;
        match field {
            FieldTag::Prime(p) => Ok(Fp::new(v, p)),
            FieldTag::Rationals => Err(Error::FieldMismatch),
        }
    }

    #[inline]
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        let v = (self.value as u64 + a.value as u64 * b.value as u64) % self.modulus as u64;
        self.value = v as u32;
    }
}

/// Arbitrary-precision rational number.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Scalar for Rational {
    fn from_i64(field: FieldTag, value: i64) -> Self {
        debug_assert_eq!(field, FieldTag::Rationals);
        Rational(BigRational::from_integer(BigInt::from(value)))
    }

    fn field(&self) -> FieldTag {
        FieldTag::Rationals
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        Rational(&self.0 + &other.0)
    }

    fn sub(&self, other: &Self) -> Self {
        Rational(&self.0 - &other.0)
    }

    fn mul(&self, other: &Self) -> Self {
        Rational(&self.0 * &other.0)
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    fn parse(field: FieldTag, text: &str) -> Result<Self, Error> {
        if field != FieldTag::Rationals {
            return Err(Error::FieldMismatch);
        }
        let text = text.trim();
        let bad = || Error::Parse(format!("not a rational: {text:?}"));
        let value = match text.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(text.parse().map_err(|_| bad())?),
        };
        Ok(Rational(value))
    }

    fn row_reduce(m: &mut ExactMatrix<Self>) -> Vec<usize> {
        bareiss_rref(m)
    }
}

/// Fraction-free reduction over the rationals.
///
/// Rows are scaled to primitive integer vectors, brought to echelon form by
/// Bareiss elimination (every intermediate entry is a minor of the input, so
/// sizes stay polynomial), and only then normalised and back-substituted.
fn bareiss_rref(m: &mut ExactMatrix<Rational>) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|r| {
            let row = m.row(r);
            let lcm = row.iter().fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.0.denom().clone()));
            row.iter().map(|x| x.0.numer() * (&lcm / x.0.denom())).collect()
        })
        .collect();

    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }

    // Back substitution in rational arithmetic on the (small) echelon form.
    let mut out: Vec<Vec<BigRational>> =
        a.into_iter().map(|row| row.into_iter().map(BigRational::from_integer).collect()).collect();
    for (i, &c) in pivots.iter().enumerate() {
        let lead = out[i][c].clone();
        for x in out[i].iter_mut() {
            *x = &*x / &lead;
        }
        let (above, rest) = out.split_at_mut(i);
        for row in above.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row[c..cols].iter_mut().zip(&rest[0][c..cols]) {
                *x -= &factor * p;
            }
        }
    }
    for (r, row) in out.into_iter().enumerate() {
        for (c, v) in row.into_iter().enumerate() {
            m.set(r, c, Rational(v));
        }
    }
    pivots
}
