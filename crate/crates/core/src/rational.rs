//! Exact rational scalars and the small integer helpers shared by the
//! series and Hurwitz code.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds `p/q` from machine integers. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn from_biguint(n: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n.clone()))
}

/// `(-1)^k` as a rational.
pub fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Numerator and denominator as decimal strings.
pub fn to_pair(q: &Rational) -> [String; 2] {
    [q.numer().to_string(), q.denom().to_string()]
}

pub fn from_pair(numer: &str, denom: &str) -> Result<Rational> {
    let n: BigInt = numer
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator {numer:?}")))?;
    let d: BigInt = denom
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator {denom:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rational::new(n, d))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    match s.trim().split_once('/') {
        Some((n, d)) => from_pair(n.trim(), d.trim()),
        None => from_pair(s.trim(), "1"),
    }
}

/// Renders `p/q`, or `p` when the denominator is one.
pub fn render(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
