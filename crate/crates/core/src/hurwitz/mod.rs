//! Simple Hurwitz numbers `H^g_η` and their generating functions.
//!
//! All values use the monodromy normalization: `H^g_η` is the number of
//! transitive monodromy tuples with `σ` anywhere in the class of `η`,
//! divided by `d!`. No extra `1/|Aut(η)|` factor is applied.

mod cut_join;

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, factorial, from_biguint, sign, Rational};
use crate::series::TruncatedSeries;
use crate::sym_group::{self, EnumerationBudget, Partition};

/// Where a Hurwitz number came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HurwitzSource {
    Oracle,
    #[serde(rename = "cutjoin")]
    CutJoin,
    ClosedForm,
}

impl fmt::Display for HurwitzSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HurwitzSource::Oracle => "oracle",
            HurwitzSource::CutJoin => "cutjoin",
            HurwitzSource::ClosedForm => "closed_form",
        })
    }
}

/// How to compute a Hurwitz number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HurwitzMethod {
    /// Brute-force monodromy enumeration under a word budget.
    Oracle(EnumerationBudget),
    /// Memoized cut-and-join recursion.
    CutJoin(FastPathLimits),
    /// Coefficient of the one-part closed form; `η` must be `(d)`.
    ClosedForm,
}

impl HurwitzMethod {
    pub fn oracle() -> Self {
        Self::Oracle(EnumerationBudget::default())
    }

    pub fn fast() -> Self {
        Self::CutJoin(FastPathLimits::default())
    }

    pub fn source(&self) -> HurwitzSource {
        match self {
            Self::Oracle(_) => HurwitzSource::Oracle,
            Self::CutJoin(_) => HurwitzSource::CutJoin,
            Self::ClosedForm => HurwitzSource::ClosedForm,
        }
    }
}

/// Range accepted by the cut-and-join path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FastPathLimits {
    pub max_degree: usize,
    pub max_genus: usize,
}

impl Default for FastPathLimits {
    fn default() -> Self {
        Self {
            max_degree: 8,
            max_genus: 8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzValue {
    pub g: usize,
    pub eta: Partition,
    pub r: usize,
    pub value: Rational,
    pub source: HurwitzSource,
}

impl HurwitzValue {
    pub fn degree(&self) -> usize {
        self.eta.size()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&HurwitzJson::from(self)).expect("value serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: HurwitzJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        j.try_into()
    }
}

/// `{"d":…, "eta":[…], "g":…, "r":…, "value":["p","q"], "source":…}`
#[derive(Serialize, Deserialize)]
pub struct HurwitzJson {
    pub d: usize,
    pub eta: Vec<usize>,
    pub g: usize,
    pub r: usize,
    pub value: [String; 2],
    pub source: HurwitzSource,
}

impl From<&HurwitzValue> for HurwitzJson {
    fn from(v: &HurwitzValue) -> Self {
        Self {
            d: v.degree(),
            eta: v.eta.parts().to_vec(),
            g: v.g,
            r: v.r,
            value: rational::to_pair(&v.value),
            source: v.source,
        }
    }
}

impl TryFrom<HurwitzJson> for HurwitzValue {
    type Error = Error;

    fn try_from(j: HurwitzJson) -> Result<Self> {
        let eta = Partition::new(j.eta)?;
        if eta.size() != j.d {
            return Err(Error::Parse(format!("eta {eta} is not a partition of {}", j.d)));
        }
        if branch_count(j.g, &eta) != j.r {
            return Err(Error::Parse(format!(
                "r = {} violates Riemann–Hurwitz for g = {}, eta = {eta}",
                j.r, j.g
            )));
        }
        Ok(Self {
            g: j.g,
            eta,
            r: j.r,
            value: rational::from_pair(&j.value[0], &j.value[1])?,
            source: j.source,
        })
    }
}

/// Number of simple branch points, `2g + d - 2 + ℓ(η)`.
pub fn branch_count(g: usize, eta: &Partition) -> usize {
    2 * g + eta.size() + eta.len() - 2
}

/// `H^g_η` by brute-force enumeration of monodromy tuples.
pub fn hurwitz_oracle(g: usize, eta: &Partition, budget: EnumerationBudget) -> Result<Rational> {
    let r = branch_count(g, eta);
    let count = sym_group::count_monodromy_tuples(eta, r, budget)?;
    Ok(Rational::new(count.into(), factorial(eta.size()).into()))
}

/// `H^g_η` by the cut-and-join recursion with default limits.
pub fn hurwitz_fast(g: usize, eta: &Partition) -> Result<Rational> {
    hurwitz_fast_within(g, eta, FastPathLimits::default())
}

pub fn hurwitz_fast_within(g: usize, eta: &Partition, limits: FastPathLimits) -> Result<Rational> {
    if eta.size() > limits.max_degree || g > limits.max_genus {
        return Err(Error::Capacity {
            what: format!("cut-and-join for g = {g}, eta = {eta}"),
            bound: format!("d <= {}, g <= {}", limits.max_degree, limits.max_genus),
        });
    }
    let words = cut_join::words_for_representative(eta.parts(), branch_count(g, eta));
    Ok(Rational::new(words.into(), eta.centralizer_order().into()))
}

/// `H^g_(d)` read off the one-part closed form.
pub fn hurwitz_closed(g: usize, d: usize) -> Result<Rational> {
    let r = 2 * g + d - 1;
    let series = one_part_series_closed(d, r)?;
    Ok(sign(g) * series.normalized_coeff(r)?)
}

pub fn hurwitz_number(g: usize, eta: &Partition, method: HurwitzMethod) -> Result<Rational> {
    match method {
        HurwitzMethod::Oracle(budget) => hurwitz_oracle(g, eta, budget),
        HurwitzMethod::CutJoin(limits) => hurwitz_fast_within(g, eta, limits),
        HurwitzMethod::ClosedForm => {
            if eta.len() != 1 {
                return Err(Error::InvalidArgument(format!(
                    "the closed form covers one-part profiles only, got {eta}"
                )));
            }
            hurwitz_closed(g, eta.size())
        }
    }
}

pub fn hurwitz_value(g: usize, eta: &Partition, method: HurwitzMethod) -> Result<HurwitzValue> {
    Ok(HurwitzValue {
        g,
        eta: eta.clone(),
        r: branch_count(g, eta),
        value: hurwitz_number(g, eta, method)?,
        source: method.source(),
    })
}

/// `H_η(u) = sum_g (-1)^g H^g_η u^r / r!` through `u^order`.
pub fn hurwitz_series(eta: &Partition, order: usize, method: HurwitzMethod) -> Result<TruncatedSeries> {
    if let HurwitzMethod::ClosedForm = method {
        if eta.len() != 1 {
            return Err(Error::InvalidArgument(format!(
                "the closed form covers one-part profiles only, got {eta}"
            )));
        }
        return one_part_series_closed(eta.size(), order);
    }
    let mut coeffs = vec![Rational::zero(); order + 1];
    let mut g = 0;
    loop {
        let r = branch_count(g, eta);
        if r > order {
            break;
        }
        let h = hurwitz_number(g, eta, method)?;
        coeffs[r] = sign(g) * h / from_biguint(&factorial(r));
        g += 1;
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// `(2^{d-1} / (d · d!)) sin(d u / 2)^{d-1}`.
pub fn one_part_series_closed(d: usize, order: usize) -> Result<TruncatedSeries> {
    if d == 0 {
        return Err(Error::InvalidDegree(0));
    }
    let sin = TruncatedSeries::sin_scaled(&Rational::new((d as i64).into(), 2.into()), order);
    let prefactor = Rational::new(
        num_bigint::BigInt::one() << (d - 1),
        num_bigint::BigInt::from(factorial(d)) * d,
    );
    Ok(sin.pow_int((d - 1) as u32).scale(&prefactor))
}

/// Every `g` whose branch count fits in `order`.
pub fn genera_within(eta: &Partition, order: usize) -> impl Iterator<Item = usize> + '_ {
    (0..).take_while(move |&g| branch_count(g, eta) <= order)
}
