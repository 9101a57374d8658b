//! Truncated formal power series in one variable `u` with exact rational
//! coefficients.
//!
//! A series of order `N` stores exactly the coefficients of `u^0 ..= u^N`.
//! Binary operations require both operands to carry the same order; there
//! is no silent truncation. Division by a series of valuation `v` cancels
//! the common factor `u^v` and returns a series of order `N - v`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, factorial, from_biguint, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "SeriesJson", try_from = "SeriesJson")]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Self::monomial(c, 0, order)
    }

    /// `c * u^k`; vanishes when `k > order`.
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `u`.
    pub fn variable(order: usize) -> Self {
        Self::monomial(Rational::one(), 1, order)
    }

    /// Builds a series from `c_0 ..= c_N`. The order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument(
                "a truncated series needs at least one coefficient".into(),
            ));
        }
        Ok(Self { coeffs })
    }

    /// Taylor series of `sin(q u)`.
    pub fn sin_scaled(q: &Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        let mut power = q.clone();
        for k in (1..=order).step_by(2) {
            if k > 1 {
                power = &power * q * q;
            }
            let term = &power / from_biguint(&factorial(k));
            s.coeffs[k] = if (k - 1) / 2 % 2 == 0 { term } else { -term };
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Result<&Rational> {
        self.coeffs.get(k).ok_or(Error::CoefficientOutOfRange {
            index: k,
            order: self.order(),
        })
    }

    /// `k! * coeff(k)`: the value attached to `u^k / k!`.
    pub fn normalized_coeff(&self, k: usize) -> Result<Rational> {
        Ok(self.coeff(k)? * from_biguint(&factorial(k)))
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Drops every coefficient above `order`.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::InsufficientOrder {
                have: self.order(),
                want: order,
            });
        }
        Ok(Self {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn negate(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn pow_int(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    /// Quotient `self / other`. The factor `u^v`, `v = valuation(other)`, is
    /// cancelled exactly, so the result has order `N - v`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let v = other.valuation().ok_or(Error::DivisionByZero)?;
        if let Some(va) = self.valuation() {
            if va < v {
                return Err(Error::NonPolynomialQuotient {
                    numerator: va,
                    denominator: v,
                });
            }
        }
        let num = &self.coeffs[v..];
        let den = &other.coeffs[v..];
        let lead = &den[0];
        let mut q: Vec<Rational> = Vec::with_capacity(num.len());
        for k in 0..num.len() {
            let mut acc = num[k].clone();
            for j in 1..=k {
                if !den[j].is_zero() {
                    acc -= &den[j] * &q[k - j];
                }
            }
            q.push(acc / lead);
        }
        Ok(Self { coeffs: q })
    }

    /// Formal exponential via `k e_k = sum_{j=1..k} j a_j e_{k-j}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpConstantTerm(rational::render(&self.coeffs[0])));
        }
        let n = self.order();
        let mut e: Vec<Rational> = Vec::with_capacity(n + 1);
        e.push(Rational::one());
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc += a * &e[k - j] * Rational::from_integer(j.into());
                }
            }
            e.push(acc / Rational::from_integer(k.into()));
        }
        Ok(Self { coeffs: e })
    }

    /// Formal logarithm of a series with constant term 1, from `a' = a l'`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogConstantTerm(rational::render(&self.coeffs[0])));
        }
        let n = self.order();
        let mut l: Vec<Rational> = vec![Rational::zero(); n + 1];
        for k in 1..=n {
            let mut acc = &self.coeffs[k] * Rational::from_integer(k.into());
            for j in 1..k {
                let a = &self.coeffs[k - j];
                if !a.is_zero() && !l[j].is_zero() {
                    acc -= &l[j] * a * Rational::from_integer(j.into());
                }
            }
            l[k] = acc / Rational::from_integer(k.into());
        }
        Ok(Self { coeffs: l })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("series serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Wire form: `{"order": N, "coeffs": [["p","q"], ...]}`.
#[derive(Serialize, Deserialize)]
struct SeriesJson {
    order: usize,
    coeffs: Vec<[String; 2]>,
}

impl From<TruncatedSeries> for SeriesJson {
    fn from(s: TruncatedSeries) -> Self {
        Self {
            order: s.order(),
            coeffs: s.coeffs.iter().map(rational::to_pair).collect(),
        }
    }
}

impl TryFrom<SeriesJson> for TruncatedSeries {
    type Error = Error;

    fn try_from(j: SeriesJson) -> Result<Self> {
        if j.coeffs.len() != j.order + 1 {
            return Err(Error::Parse(format!(
                "order {} needs {} coefficients, got {}",
                j.order,
                j.order + 1,
                j.coeffs.len()
            )));
        }
        let coeffs = j
            .coeffs
            .iter()
            .map(|[n, d]| rational::from_pair(n, d))
            .collect::<Result<Vec<_>>>()?;
        TruncatedSeries::from_coeffs(coeffs)
    }
}

/// Exact text such as `u/2 - u^3/12 + u^5/240`; zero terms are omitted and
/// the zero series prints as `0`.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sep = match (first, c.is_negative()) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            first = false;
            let numer = c.numer().abs();
            let denom = c.denom();
            let term = match k {
                0 => {
                    if denom.is_one() {
                        numer.to_string()
                    } else {
                        format!("{numer}/{denom}")
                    }
                }
                _ => {
                    let var = if k == 1 { "u".to_string() } else { format!("u^{k}") };
                    let head = if numer.is_one() {
                        var
                    } else {
                        format!("{numer}*{var}")
                    };
                    if denom.is_one() {
                        head
                    } else {
                        format!("{head}/{denom}")
                    }
                }
            };
            write!(f, "{sep}{term}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn series(coeffs: &[(i64, i64)]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(coeffs.iter().map(|&(p, q)| rat(p, q)).collect()).unwrap()
    }

    #[test]
    fn add_identities() {
        let s = series(&[(1, 2), (0, 1), (-3, 7)]);
        assert_eq!(s.add(&TruncatedSeries::zero(2)).unwrap(), s);
        let sin = TruncatedSeries::sin_scaled(&int(1), 9);
        assert!(sin.add(&sin.negate()).unwrap().is_zero());
        let u = TruncatedSeries::variable(2);
        let u2 = TruncatedSeries::monomial(int(1), 2, 2);
        assert_eq!(u.add(&u2).unwrap(), series(&[(0, 1), (1, 1), (1, 1)]));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = TruncatedSeries::one(3);
        let b = TruncatedSeries::one(4);
        assert_eq!(
            a.add(&b),
            Err(Error::OrderMismatch { left: 3, right: 4 })
        );
        assert!(a.mul(&b).is_err());
        assert!(a.div(&b).is_err());
    }

    #[test]
    fn mul_examples() {
        let s = series(&[(2, 3), (1, 1), (0, 1), (5, 1)]);
        assert_eq!(s.mul(&TruncatedSeries::one(3)).unwrap(), s);
        let half = TruncatedSeries::sin_scaled(&rat(1, 2), 4);
        // sin^2(u/2) = (1 - cos u)/2
        assert_eq!(
            half.mul(&half).unwrap(),
            series(&[(0, 1), (0, 1), (1, 4), (0, 1), (-1, 48)])
        );
        let u = TruncatedSeries::variable(1);
        assert!(u.mul(&u).unwrap().is_zero());
    }

    #[test]
    fn div_examples() {
        let sin = TruncatedSeries::sin_scaled(&int(1), 7);
        let q = sin.div(&TruncatedSeries::variable(7)).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(
            q,
            series(&[(1, 1), (0, 1), (-1, 6), (0, 1), (1, 120), (0, 1), (-1, 5040)])
        );
        let s = series(&[(3, 1), (1, 2), (-1, 1)]);
        assert_eq!(s.div(&s).unwrap(), TruncatedSeries::one(2));
        let u = TruncatedSeries::variable(3);
        let u2 = TruncatedSeries::monomial(int(1), 2, 3);
        assert_eq!(
            u.div(&u2),
            Err(Error::NonPolynomialQuotient {
                numerator: 1,
                denominator: 2
            })
        );
        assert_eq!(u.div(&TruncatedSeries::zero(3)), Err(Error::DivisionByZero));
        // the zero numerator is divisible by anything
        assert!(TruncatedSeries::zero(3).div(&u2).unwrap().is_zero());
    }

    #[test]
    fn exp_log_examples() {
        assert_eq!(
            TruncatedSeries::zero(5).exp().unwrap(),
            TruncatedSeries::one(5)
        );
        assert_eq!(
            TruncatedSeries::variable(3).exp().unwrap(),
            series(&[(1, 1), (1, 1), (1, 2), (1, 6)])
        );
        assert!(TruncatedSeries::one(4).log().unwrap().is_zero());
        let one_plus_u = series(&[(1, 1), (1, 1), (0, 1), (0, 1)]);
        assert_eq!(
            one_plus_u.log().unwrap(),
            series(&[(0, 1), (1, 1), (-1, 2), (1, 3)])
        );
        assert_eq!(one_plus_u.log().unwrap().exp().unwrap(), one_plus_u);
        assert!(matches!(
            TruncatedSeries::one(2).exp(),
            Err(Error::ExpConstantTerm(_))
        ));
        assert!(matches!(
            TruncatedSeries::constant(int(2), 2).log(),
            Err(Error::LogConstantTerm(_))
        ));
    }

    #[test]
    fn sin_examples() {
        assert!(TruncatedSeries::sin_scaled(&int(0), 6).is_zero());
        assert_eq!(
            TruncatedSeries::sin_scaled(&rat(1, 2), 3),
            series(&[(0, 1), (1, 2), (0, 1), (-1, 48)])
        );
        let q = rat(3, 5);
        assert_eq!(
            TruncatedSeries::sin_scaled(&-q.clone(), 11),
            TruncatedSeries::sin_scaled(&q, 11).negate()
        );
    }

    #[test]
    fn helpers() {
        let s = series(&[(4, 1), (0, 1), (1, 1)]);
        assert_eq!(s.pow_int(0), TruncatedSeries::one(2));
        let sin = TruncatedSeries::sin_scaled(&int(1), 5);
        assert_eq!(sin.normalized_coeff(3).unwrap(), int(-1));
        let one_over = TruncatedSeries::one(3).scale(&rat(1, 7));
        assert_eq!(*one_over.constant_term(), rat(1, 7));
        assert_eq!(
            s.coeff(3),
            Err(Error::CoefficientOutOfRange { index: 3, order: 2 })
        );
        assert_eq!(sin.valuation(), Some(1));
        assert_eq!(TruncatedSeries::zero(4).valuation(), None);
        assert_eq!(sin.truncate(2).unwrap().order(), 2);
        assert!(sin.truncate(6).is_err());
    }

    #[test]
    fn render_text() {
        assert_eq!(TruncatedSeries::zero(3).to_string(), "0");
        assert_eq!(TruncatedSeries::constant(rat(1, 5), 0).to_string(), "1/5");
        let s = series(&[(0, 1), (-1, 4), (0, 1), (-1, 48)]);
        assert_eq!(s.to_string(), "-u/4 - u^3/48");
        let s = series(&[(-2, 1), (0, 1), (1, 2), (0, 1), (-3, 8), (7, 1)]);
        assert_eq!(s.to_string(), "-2 + u^2/2 - 3*u^4/8 + 7*u^5");
    }

    #[test]
    fn json_form() {
        let s = series(&[(1, 2), (0, 1), (-3, 7)]);
        let text = s.to_json();
        assert_eq!(
            text,
            r#"{"order":2,"coeffs":[["1","2"],["0","1"],["-3","7"]]}"#
        );
        assert_eq!(TruncatedSeries::from_json(&text).unwrap(), s);
        assert!(TruncatedSeries::from_json(r#"{"order":3,"coeffs":[["1","2"]]}"#).is_err());
        assert!(TruncatedSeries::from_json(r#"{"order":0,"coeffs":[["1","0"]]}"#).is_err());
    }
}
