//! Coefficient fields: a large prime field or the rationals.
//!
//! Scalars do not carry their field; every operation goes through the
//! [`FieldSpec`] owned by the polynomial ring.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};

/// Smallest admissible characteristic.
pub const MIN_PRIME: u64 = 32003;
/// Default characteristic.
pub const DEFAULT_PRIME: u64 = 32003;
/// Residues are multiplied in `u64`, so the modulus must stay below 2^32.
const MAX_PRIME: u64 = 1 << 32;
/// Range of the integers drawn for random rational scalars.
pub const RATIONAL_SAMPLE_BOUND: i64 = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldSpec {
    PrimeField { p: u64 },
    Rationals,
}

/// A field element. Residues lie in `[0, p)`; rationals are kept in lowest
/// terms with positive denominator (guaranteed by `BigRational`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod(u64),
    Rat(BigRational),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::PrimeField { p: DEFAULT_PRIME }
    }
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(AlgebraError::InvalidField(format!("{p} is not prime")));
        }
        if p < MIN_PRIME {
            return Err(AlgebraError::InvalidField(format!(
                "characteristic {p} is below the minimum {MIN_PRIME}"
            )));
        }
        if p >= MAX_PRIME {
            return Err(AlgebraError::InvalidField(format!("characteristic {p} is too large")));
        }
        Ok(FieldSpec::PrimeField { p })
    }

    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// Characteristic of the field (0 for the rationals).
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::PrimeField { p } => *p,
            FieldSpec::Rationals => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::PrimeField { .. } => Scalar::Mod(0),
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::PrimeField { .. } => Scalar::Mod(1),
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::PrimeField { p } => Scalar::Mod(v.rem_euclid(*p as i64) as u64),
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            FieldSpec::PrimeField { p } => {
                let r = v % BigInt::from(*p);
                let r = if r.is_negative() { r + BigInt::from(*p) } else { r };
                Scalar::Mod(r.to_u64().expect("residue fits in u64"))
            }
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(v.clone())),
        }
    }

    /// Maps a rational into this field. Fails for prime fields when the
    /// denominator is divisible by `p`.
    pub fn from_rational(&self, v: &BigRational) -> Result<Scalar> {
        match self {
            FieldSpec::PrimeField { .. } => {
                let num = self.from_bigint(v.numer());
                let den = self.from_bigint(v.denom());
                self.div(&num, &den)
            }
            FieldSpec::Rationals => Ok(Scalar::Rat(v.clone())),
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(v) => *v == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(v) => *v == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::PrimeField { p }, Scalar::Mod(x), Scalar::Mod(y)) => {
                let s = x + y;
                Scalar::Mod(if s >= *p { s - p } else { s })
            }
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => unreachable!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::PrimeField { p }, Scalar::Mod(x)) => Scalar::Mod(if *x == 0 { 0 } else { p - x }),
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            _ => unreachable!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::PrimeField { p }, Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod(x * y % p),
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => unreachable!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(match (self, a) {
            (FieldSpec::PrimeField { p }, Scalar::Mod(x)) => Scalar::Mod(pow_mod(*x, p - 2, *p)),
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(x.recip()),
            _ => unreachable!("scalar does not belong to field {self:?}"),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Uniform residue for prime fields, an integer in
    /// `[-RATIONAL_SAMPLE_BOUND, RATIONAL_SAMPLE_BOUND]` for the rationals.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self {
            FieldSpec::PrimeField { p } => Scalar::Mod(rng.gen_range(0..*p)),
            FieldSpec::Rationals => {
                self.from_i64(rng.gen_range(-RATIONAL_SAMPLE_BOUND..=RATIONAL_SAMPLE_BOUND))
            }
        }
    }

    /// Like [`FieldSpec::random`] but never zero.
    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        loop {
            let s = self.random(rng);
            if !self.is_zero(&s) {
                return s;
            }
        }
    }

    /// Integer representative, symmetric around zero for residues.
    /// `None` for non-integral rationals.
    pub fn to_integer(&self, a: &Scalar) -> Option<BigInt> {
        match (self, a) {
            (FieldSpec::PrimeField { p }, Scalar::Mod(x)) => {
                let v = if *x > p / 2 { *x as i64 - *p as i64 } else { *x as i64 };
                Some(BigInt::from(v))
            }
            (FieldSpec::Rationals, Scalar::Rat(r)) => r.is_integer().then(|| r.to_integer()),
            _ => None,
        }
    }

    /// Converts a rational scalar to its image modulo `p` (used to compare the
    /// two arithmetics).
    pub fn reduce_rational(&self, a: &Scalar) -> Result<Scalar> {
        match a {
            Scalar::Rat(r) => self.from_rational(r),
            Scalar::Mod(_) => Ok(a.clone()),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::PrimeField { p } => write!(f, "GF({p})"),
            FieldSpec::Rationals => write!(f, "QQ"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod(v) => write!(f, "{v}"),
            Scalar::Rat(r) => write!(f, "{r}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_small_and_composite_characteristic() {
        assert!(FieldSpec::prime(32003).is_ok());
        assert!(FieldSpec::prime(7).is_err());
        assert!(FieldSpec::prime(32005).is_err());
        assert!(FieldSpec::prime(65521).is_ok());
    }

    #[test]
    fn residues_stay_in_range() {
        let f = FieldSpec::default();
        assert_eq!(f.from_i64(-1), Scalar::Mod(32002));
        assert_eq!(f.add(&Scalar::Mod(32002), &Scalar::Mod(5)), Scalar::Mod(4));
        let inv = f.inv(&Scalar::Mod(2)).unwrap();
        assert_eq!(f.mul(&inv, &Scalar::Mod(2)), Scalar::Mod(1));
        assert!(f.inv(&Scalar::Mod(0)).is_err());
    }

    #[test]
    fn rationals_are_normalized() {
        let q = FieldSpec::rationals();
        let a = q.div(&q.from_i64(6), &q.from_i64(-4)).unwrap();
        match a {
            Scalar::Rat(r) => {
                assert_eq!(r.numer(), &BigInt::from(-3));
                assert_eq!(r.denom(), &BigInt::from(2));
            }
            _ => unreachable!(),
        }
    }

    proptest! {
        // Rational arithmetic commutes with reduction mod p whenever the
        // denominators are units mod p.
        #[test]
        fn rational_arithmetic_agrees_mod_p(
            a in -500i64..500, b in 1i64..300, c in -500i64..500, d in 1i64..300
        ) {
            let q = FieldSpec::rationals();
            let fp = FieldSpec::default();
            let x = q.div(&q.from_i64(a), &q.from_i64(b)).unwrap();
            let y = q.div(&q.from_i64(c), &q.from_i64(d)).unwrap();
            let red = |s: &Scalar| fp.reduce_rational(s).unwrap();
            prop_assert_eq!(red(&q.add(&x, &y)), fp.add(&red(&x), &red(&y)));
            prop_assert_eq!(red(&q.mul(&x, &y)), fp.mul(&red(&x), &red(&y)));
            prop_assert_eq!(red(&q.sub(&x, &y)), fp.sub(&red(&x), &red(&y)));
            if !q.is_zero(&y) {
                prop_assert_eq!(red(&q.div(&x, &y).unwrap()), fp.div(&red(&x), &red(&y)).unwrap());
            }
        }
    }
}
