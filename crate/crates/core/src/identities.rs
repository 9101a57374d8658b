//! Generating-function identities checked as exact residual series, and
//! the Hurwitz–Hodge integrals read off the solved master relation.
//!
//! Every check builds one residual series and passes iff it is zero
//! through its certified order. Divisions by a series of valuation `v`
//! cost `v` orders; the closed forms compensate by working at a higher
//! internal order, the Hurwitz-side checks record the loss instead.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hurwitz::{hurwitz_series, one_part_series_closed, HurwitzMethod};
use crate::rational::{self, factorial, from_biguint, sign, Rational};
use crate::series::TruncatedSeries;
use crate::sym_group::{partitions_of, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityKind {
    /// Computed `H_(d)(u)` against the one-part closed form.
    FormulaHd,
    /// Signed sum over all profiles of `H_η / prod 2 sin(η_i u / 2)` vanishes.
    FormulaHeta,
    /// Master relation with the closed-form `H_(d)`.
    FormulaCyVsMaster,
    /// Master relation with computed Hurwitz numbers.
    TheoremRel,
    /// `D(u)` solved from the master relation equals `ln(d sin(u/2) / sin(du/2))`.
    TheoremBpa,
    /// `sum_i D_i` equals `T = e^{dD} / d`.
    FormulaDlf,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 6] = [
        IdentityKind::FormulaHd,
        IdentityKind::FormulaHeta,
        IdentityKind::FormulaCyVsMaster,
        IdentityKind::TheoremRel,
        IdentityKind::TheoremBpa,
        IdentityKind::FormulaDlf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::FormulaHd => "formula_hd",
            IdentityKind::FormulaHeta => "formula_heta",
            IdentityKind::FormulaCyVsMaster => "formula_cy_vs_master",
            IdentityKind::TheoremRel => "theorem_rel",
            IdentityKind::TheoremBpa => "theorem_bpa",
            IdentityKind::FormulaDlf => "formula_dlf",
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one identity at one `(d, N)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: IdentityKind,
    #[serde(rename = "d")]
    pub degree: usize,
    pub order: usize,
    /// Highest power of `u` the residual is exact through.
    pub certified_order: usize,
    pub passed: bool,
    pub residual: TruncatedSeries,
}

impl IdentityReport {
    fn new(identity: IdentityKind, degree: usize, order: usize, residual: TruncatedSeries) -> Self {
        Self {
            identity,
            degree,
            order,
            certified_order: residual.order(),
            passed: residual.is_zero(),
            residual,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Which `H_(d)(u)` feeds the master relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MasterSource {
    Computed(HurwitzMethod),
    Closed,
}

fn check_degree(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidDegree(0));
    }
    Ok(())
}

fn half(k: usize) -> Rational {
    Rational::new(BigInt::from(k), BigInt::from(2))
}

/// `2 sin(k u / 2)`.
fn two_sin_half(k: usize, order: usize) -> TruncatedSeries {
    TruncatedSeries::sin_scaled(&half(k), order).scale(&Rational::from_integer(2.into()))
}

/// `(d!)` as a rational.
fn fact(d: usize) -> Rational {
    from_biguint(&factorial(d))
}

/// `(-1)^{d-1} d! / d^d`, the prefactor of the master relation.
fn master_prefactor(d: usize) -> Rational {
    sign(d - 1) * fact(d) / Rational::from_integer(BigInt::from(d).pow(d as u32))
}

/// Calabi–Yau cap series `(-1)^{d-1} (1/d) (2 sin(u/2))^d / (2 sin(du/2))`.
pub fn cy_series_closed(d: usize, order: usize) -> Result<TruncatedSeries> {
    check_degree(d)?;
    let inner = order + 1;
    let num = two_sin_half(1, inner).pow_int(d as u32);
    let den = two_sin_half(d, inner);
    let ratio = num.div(&den)?;
    Ok(ratio.scale(&(sign(d - 1) / Rational::from_integer(d.into()))))
}

/// `D(u) = ln(d sin(u/2) / sin(du/2))`.
pub fn dd_series_closed(d: usize, order: usize) -> Result<TruncatedSeries> {
    check_degree(d)?;
    let inner = order + 1;
    let num = TruncatedSeries::sin_scaled(&half(1), inner).scale(&Rational::from_integer(d.into()));
    let den = TruncatedSeries::sin_scaled(&half(d), inner);
    num.div(&den)?.log()
}

/// Solves the master relation for `D(u)`:
/// `D = (1/d) ln( d^d / ((-1)^{d-1} d!) · CY / H_(d) )`.
///
/// `hd` must have valuation `d - 1` and order at least `order + d - 1`,
/// since the division by it costs `d - 1` orders.
pub fn dd_series_from_master(d: usize, order: usize, hd: &TruncatedSeries) -> Result<TruncatedSeries> {
    check_degree(d)?;
    let needed = order + d - 1;
    let hd = hd.truncate(needed)?;
    if hd.valuation() != Some(d - 1) {
        return Err(Error::InvalidArgument(format!(
            "one-part Hurwitz series must have valuation {}, got {:?}",
            d - 1,
            hd.valuation()
        )));
    }
    let cy = cy_series_closed(d, needed)?.scale(&master_prefactor(d).recip());
    let ratio = cy.div(&hd)?;
    if !ratio.constant_term().is_one() {
        return Err(Error::InconsistentMaster(rational::render(ratio.constant_term())));
    }
    Ok(ratio.log()?.scale(&Rational::new(BigInt::one(), BigInt::from(d))))
}

/// `T(u) = (1/d) e^{d D(u)}`.
pub fn t_series(d: usize, order: usize) -> Result<TruncatedSeries> {
    check_degree(d)?;
    let dd = dd_series_closed(d, order)?;
    Ok(dd
        .scale(&Rational::from_integer(d.into()))
        .exp()?
        .scale(&Rational::new(BigInt::one(), BigInt::from(d))))
}

/// `D_i(u) = (d^{i-1} / i!) D(u)^i`; `D_0 = 1/d`.
pub fn di_series(d: usize, i: usize, order: usize) -> Result<TruncatedSeries> {
    check_degree(d)?;
    if i == 0 {
        return Ok(TruncatedSeries::constant(
            Rational::new(BigInt::one(), BigInt::from(d)),
            order,
        ));
    }
    let dd = dd_series_closed(d, order)?;
    let c = Rational::from_integer(BigInt::from(d).pow(i as u32 - 1)) / fact(i);
    Ok(dd.pow_int(i as u32).scale(&c))
}

/// `∫ λ_g λ_{g-i} ψ^{i-1}`, the `u^{2g}/(2g)!` coefficient of `D_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeIntegralValue {
    pub d: usize,
    pub g: usize,
    pub i: usize,
    pub value: Rational,
}

pub fn hurwitz_hodge_integral(d: usize, g: usize, i: usize) -> Result<HodgeIntegralValue> {
    check_degree(d)?;
    if i == 0 || g < i {
        return Err(Error::InvalidArgument(format!(
            "need g >= i >= 1, got g = {g}, i = {i}"
        )));
    }
    let series = di_series(d, i, 2 * g)?;
    Ok(HodgeIntegralValue {
        d,
        g,
        i,
        value: series.normalized_coeff(2 * g)?,
    })
}

/// Computed `H_(d)(u)` minus the one-part closed form.
pub fn verify_hd(d: usize, order: usize, method: HurwitzMethod) -> Result<IdentityReport> {
    let eta = Partition::full_cycle(d)?;
    let computed = hurwitz_series(&eta, order, method)?;
    let closed = one_part_series_closed(d, order)?;
    Ok(IdentityReport::new(
        IdentityKind::FormulaHd,
        d,
        order,
        computed.sub(&closed)?,
    ))
}

/// `sum_{η ⊢ d} (-1)^{ℓ(η)} H_η(u) / prod_i 2 sin(η_i u / 2)`, certified
/// through `u^{N-d}`. Only defined for `d >= 2`.
pub fn verify_heta(d: usize, order: usize, method: HurwitzMethod) -> Result<IdentityReport> {
    check_degree(d)?;
    if d < 2 {
        return Err(Error::HetaDegreeRange(d));
    }
    if order < d {
        return Err(Error::InvalidArgument(format!(
            "order {order} leaves nothing certified after dividing by u^{d}"
        )));
    }
    let certified = order - d;
    let mut residual = TruncatedSeries::zero(certified);
    for eta in partitions_of(d)? {
        let h = hurwitz_series(&eta, order, method)?;
        let mut den = TruncatedSeries::one(order);
        for &part in eta.parts() {
            den = den.mul(&two_sin_half(part, order))?;
        }
        let term = h.div(&den)?.truncate(certified)?;
        residual = residual.add(&term.scale(&sign(eta.len())))?;
    }
    Ok(IdentityReport::new(IdentityKind::FormulaHeta, d, order, residual))
}

/// `CY(u) - ((-1)^{d-1} d! / d^d) H_(d)(u) e^{d D(u)}`.
pub fn verify_master(d: usize, order: usize, source: MasterSource) -> Result<IdentityReport> {
    check_degree(d)?;
    let eta = Partition::full_cycle(d)?;
    let (kind, hd) = match source {
        MasterSource::Computed(method) => (IdentityKind::TheoremRel, hurwitz_series(&eta, order, method)?),
        MasterSource::Closed => (IdentityKind::FormulaCyVsMaster, one_part_series_closed(d, order)?),
    };
    let cy = cy_series_closed(d, order)?;
    let growth = dd_series_closed(d, order)?
        .scale(&Rational::from_integer(d.into()))
        .exp()?;
    let rhs = hd.mul(&growth)?.scale(&master_prefactor(d));
    Ok(IdentityReport::new(kind, d, order, cy.sub(&rhs)?))
}

/// `D(u)` solved from the master relation with computed Hurwitz numbers,
/// minus `ln(d sin(u/2) / sin(du/2))`, certified through `u^N`.
pub fn verify_bpa(d: usize, order: usize, method: HurwitzMethod) -> Result<IdentityReport> {
    check_degree(d)?;
    let eta = Partition::full_cycle(d)?;
    let hd = hurwitz_series(&eta, order + d - 1, method)?;
    let solved = dd_series_from_master(d, order, &hd)?;
    let closed = dd_series_closed(d, order)?;
    Ok(IdentityReport::new(
        IdentityKind::TheoremBpa,
        d,
        order,
        solved.sub(&closed)?,
    ))
}

/// `sum_{i=0}^{⌊N/2⌋} D_i(u) - T(u)`.
pub fn verify_dlf(d: usize, order: usize) -> Result<IdentityReport> {
    check_degree(d)?;
    let mut sum = TruncatedSeries::zero(order);
    for i in 0..=order / 2 {
        sum = sum.add(&di_series(d, i, order)?)?;
    }
    let t = t_series(d, order)?;
    Ok(IdentityReport::new(IdentityKind::FormulaDlf, d, order, sum.sub(&t)?))
}

/// Runs one identity; `method` selects the Hurwitz computation where one is used.
pub fn verify(kind: IdentityKind, d: usize, order: usize, method: HurwitzMethod) -> Result<IdentityReport> {
    match kind {
        IdentityKind::FormulaHd => verify_hd(d, order, method),
        IdentityKind::FormulaHeta => verify_heta(d, order, method),
        IdentityKind::FormulaCyVsMaster => verify_master(d, order, MasterSource::Closed),
        IdentityKind::TheoremRel => verify_master(d, order, MasterSource::Computed(method)),
        IdentityKind::TheoremBpa => verify_bpa(d, order, method),
        IdentityKind::FormulaDlf => verify_dlf(d, order),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use num_traits::Zero;

    fn series(coeffs: &[(i64, i64)]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(coeffs.iter().map(|&(p, q)| rat(p, q)).collect()).unwrap()
    }

    #[test]
    fn cy_examples() {
        assert_eq!(cy_series_closed(1, 6).unwrap(), TruncatedSeries::one(6));
        let cy2 = cy_series_closed(2, 3).unwrap();
        assert_eq!(cy2, series(&[(0, 1), (-1, 4), (0, 1), (-1, 48)]));
        assert_eq!(cy2.normalized_coeff(1).unwrap(), rat(-1, 4));
        for d in 1..=6 {
            assert_eq!(cy_series_closed(d, 10).unwrap().valuation(), Some(d - 1));
        }
    }

    #[test]
    fn dd_examples() {
        assert!(dd_series_closed(1, 8).unwrap().is_zero());
        assert_eq!(dd_series_closed(2, 4).unwrap().to_string(), "u^2/8 + u^4/192");
        for d in 1..=6 {
            let dd = dd_series_closed(d, 12).unwrap();
            assert!(dd.constant_term().is_zero());
            for k in (1..=12).step_by(2) {
                assert!(dd.coeff(k).unwrap().is_zero(), "d = {d}, k = {k}");
            }
        }
    }

    #[test]
    fn dd_from_master_examples() {
        let fast = HurwitzMethod::fast();
        let h1 = hurwitz_series(&Partition::full_cycle(1).unwrap(), 6, fast).unwrap();
        assert!(dd_series_from_master(1, 6, &h1).unwrap().is_zero());

        let h2 = hurwitz_series(&Partition::full_cycle(2).unwrap(), 9, fast).unwrap();
        let solved = dd_series_from_master(2, 8, &h2).unwrap();
        assert_eq!(solved, dd_series_closed(2, 8).unwrap());
        assert_eq!(
            solved.truncate(7).unwrap().to_string(),
            "u^2/8 + u^4/192 + u^6/2880"
        );
        // order 8 input only supports order 7 output
        let h2_short = hurwitz_series(&Partition::full_cycle(2).unwrap(), 8, fast).unwrap();
        assert!(dd_series_from_master(2, 8, &h2_short).is_err());
        assert_eq!(
            dd_series_from_master(2, 7, &h2_short).unwrap(),
            dd_series_closed(2, 7).unwrap()
        );

        let h3 = one_part_series_closed(3, 12).unwrap();
        assert_eq!(
            dd_series_from_master(3, 10, &h3).unwrap(),
            dd_series_closed(3, 10).unwrap()
        );
    }

    #[test]
    fn wrong_hurwitz_input_is_inconsistent() {
        let h = one_part_series_closed(3, 12).unwrap().scale(&int(2));
        assert!(matches!(
            dd_series_from_master(3, 10, &h),
            Err(Error::InconsistentMaster(_))
        ));
        let shifted = one_part_series_closed(4, 12).unwrap();
        assert!(dd_series_from_master(3, 10, &shifted).is_err());
    }

    #[test]
    fn t_examples() {
        assert_eq!(t_series(1, 6).unwrap(), TruncatedSeries::one(6));
        assert_eq!(*t_series(5, 0).unwrap().constant_term(), rat(1, 5));
        assert_eq!(t_series(2, 2).unwrap().to_string(), "1/2 + u^2/8");
    }

    #[test]
    fn di_examples() {
        assert_eq!(di_series(3, 1, 10).unwrap(), dd_series_closed(3, 10).unwrap());
        assert_eq!(di_series(2, 2, 4).unwrap().to_string(), "u^4/64");
        assert_eq!(di_series(4, 0, 3).unwrap().to_string(), "1/4");
    }

    #[test]
    fn hodge_examples() {
        assert_eq!(hurwitz_hodge_integral(2, 1, 1).unwrap().value, rat(1, 4));
        assert_eq!(hurwitz_hodge_integral(2, 2, 1).unwrap().value, rat(1, 8));
        for g in 1..=5 {
            assert!(hurwitz_hodge_integral(1, g, 1).unwrap().value.is_zero());
        }
        assert!(hurwitz_hodge_integral(2, 1, 2).is_err());
        assert!(hurwitz_hodge_integral(2, 1, 0).is_err());
    }

    #[test]
    fn heta_examples() {
        let fast = HurwitzMethod::fast();
        assert_eq!(verify_heta(1, 8, fast), Err(Error::HetaDegreeRange(1)));
        let r2 = verify_heta(2, 8, fast).unwrap();
        assert!(r2.passed);
        assert_eq!(r2.certified_order, 6);
        let r3 = verify_heta(3, 10, HurwitzMethod::oracle()).unwrap();
        assert!(r3.passed, "residual {}", r3.residual);
    }

    #[test]
    fn master_examples() {
        for n in [0, 3, 9] {
            assert!(verify_master(1, n, MasterSource::Closed).unwrap().passed);
            assert!(verify_master(1, n, MasterSource::Computed(HurwitzMethod::fast())).unwrap().passed);
        }
        let r = verify_master(2, 10, MasterSource::Closed).unwrap();
        assert!(r.passed);
        assert_eq!(r.certified_order, 10);
        assert_eq!(r.identity, IdentityKind::FormulaCyVsMaster);
        let r = verify_master(4, 12, MasterSource::Computed(HurwitzMethod::fast())).unwrap();
        assert!(r.passed);
        assert_eq!(r.identity, IdentityKind::TheoremRel);
    }

    #[test]
    fn corrupted_hurwitz_data_fails_master() {
        // flip the genus sign convention: the relation must notice
        let eta = Partition::full_cycle(3).unwrap();
        let hd = hurwitz_series(&eta, 10, HurwitzMethod::fast()).unwrap();
        let flipped = TruncatedSeries::from_coeffs(
            hd.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 4 == 0 { -c } else { c.clone() })
                .collect(),
        )
        .unwrap();
        assert_ne!(flipped, hd);
        let cy = cy_series_closed(3, 10).unwrap();
        let growth = dd_series_closed(3, 10).unwrap().scale(&int(3)).exp().unwrap();
        let rhs = flipped.mul(&growth).unwrap().scale(&master_prefactor(3));
        assert!(!cy.sub(&rhs).unwrap().is_zero());
    }

    #[test]
    fn bpa_examples() {
        let fast = HurwitzMethod::fast();
        assert!(verify_bpa(1, 12, fast).unwrap().passed);
        let r = verify_bpa(3, 12, fast).unwrap();
        assert!(r.passed);
        assert_eq!(r.certified_order, 12);
    }

    #[test]
    fn report_json_shape() {
        let r = verify_dlf(1, 2).unwrap();
        assert_eq!(
            r.to_json(),
            r#"{"identity":"formula_dlf","d":1,"order":2,"certified_order":2,"passed":true,"residual":{"order":2,"coeffs":[["0","1"],["0","1"],["0","1"]]}}"#
        );
    }
}
