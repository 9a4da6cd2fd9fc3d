//! Exact scalar rings: rationals and prime fields.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"3"`, `"-2/5"` style rationals.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Exact square root of a nonnegative rational, if it exists.
pub fn rational_sqrt(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Q::new(n, d))
    } else {
        None
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScalarRing {
    Rational,
    ModP(u64),
}

impl ScalarRing {
    pub fn mod_p(p: u64) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(ScalarRing::ModP(p))
    }
}

impl fmt::Display for ScalarRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarRing::Rational => write!(f, "rational"),
            ScalarRing::ModP(p) => write!(f, "Z{p}"),
        }
    }
}

/// Element of ℤ/pℤ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Zp {
    pub value: u64,
    pub modulus: u64,
}

impl Zp {
    pub fn new(v: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        let value = ((v as i128 % m + m) % m) as u64;
        Zp { value, modulus }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Zp { value: 1 % self.modulus, modulus: self.modulus };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            e >>= 1;
        }
        acc
    }

    /// Fermat inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(self.modulus - 2))
        }
    }
}

impl fmt::Display for Zp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Exact commutative ring operations needed by the algebra code.
///
/// Constants are produced relative to an existing value so that rings carrying
/// runtime data (a modulus, a variable list) need no global state.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    fn vanishes(&self) -> bool;
    /// Image of a rational under the canonical map; `None` when the
    /// denominator is not invertible.
    fn embed(&self, c: &Q) -> Option<Self>;
    fn ring(&self) -> ScalarRing;

    /// Multiply by a structure constant entry, with the common ±1 fast path.
    fn scaled(&self, c: &Q) -> Self {
        if c.is_one() {
            self.clone()
        } else if (-c).is_one() {
            self.negated()
        } else {
            self.times(&self.embed(c).expect("structure constant not representable in ring"))
        }
    }
}

impl Scalar for Q {
    fn zero_like(&self) -> Self {
        Q::zero()
    }
    fn one_like(&self) -> Self {
        Q::one()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn embed(&self, c: &Q) -> Option<Self> {
        Some(c.clone())
    }
    fn ring(&self) -> ScalarRing {
        ScalarRing::Rational
    }
}

impl Scalar for Zp {
    fn zero_like(&self) -> Self {
        Zp { value: 0, modulus: self.modulus }
    }
    fn one_like(&self) -> Self {
        Zp { value: 1, modulus: self.modulus }
    }
    fn plus(&self, o: &Self) -> Self {
        Zp { value: (self.value + o.value) % self.modulus, modulus: self.modulus }
    }
    fn minus(&self, o: &Self) -> Self {
        Zp { value: (self.value + self.modulus - o.value) % self.modulus, modulus: self.modulus }
    }
    fn times(&self, o: &Self) -> Self {
        let v = (self.value as u128 * o.value as u128) % self.modulus as u128;
        Zp { value: v as u64, modulus: self.modulus }
    }
    fn negated(&self) -> Self {
        Zp { value: (self.modulus - self.value) % self.modulus, modulus: self.modulus }
    }
    fn vanishes(&self) -> bool {
        self.value == 0
    }
    fn embed(&self, c: &Q) -> Option<Self> {
        let m = BigInt::from(self.modulus);
        let n = c.numer().mod_floor(&m).to_u64()?;
        let d = c.denom().mod_floor(&m).to_u64()?;
        let d = Zp { value: d, modulus: self.modulus }.inverse()?;
        Some(Zp { value: n, modulus: self.modulus }.times(&d))
    }
    fn ring(&self) -> ScalarRing {
        ScalarRing::ModP(self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zp_inverse_and_embedding() {
        let a = Zp::new(3, 7);
        assert_eq!(a.times(&a.inverse().unwrap()).value, 1);
        assert_eq!(a.embed(&qr(1, 2)).unwrap().value, 4);
        assert_eq!(Zp::new(-1, 257).value, 256);
    }

    #[test]
    fn rational_sqrt_detects_squares() {
        assert_eq!(rational_sqrt(&qr(9, 4)), Some(qr(3, 2)));
        assert_eq!(rational_sqrt(&q(2)), None);
        assert_eq!(rational_sqrt(&q(-4)), None);
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_q("-2/6").unwrap(), qr(-1, 3));
        assert!(parse_q("1/0").is_err());
        assert!(mod_p_rejects_two());
    }

    fn mod_p_rejects_two() -> bool {
        ScalarRing::mod_p(2).is_err() && ScalarRing::mod_p(9).is_err() && ScalarRing::mod_p(257).is_ok()
    }
}
