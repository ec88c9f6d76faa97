//! Exact verification engine: every identity in scope runs as a
//! parameterized check returning structured [`IdentityReport`]s.
//!
//! Non-circularity: every exact check compares quantities built through two
//! independent code paths. The umbral-recurrence identity uses the
//! closed-form table; the alternating-sum identities compare direct q-bracket
//! sums against table-plus-substitution values. The p-adic checks wrap
//! convergence certificates instead of exact equalities.

use crate::euler::{
    carlitz_beta, carlitz_beta_polynomial, euler_q_closed_form_table, euler_q_polynomial,
    euler_q_recurrence,
};
use crate::padic::{
    riemann_sum_mu_minus_q, vp, Certificate, Measure, PadicEstimate, PrimeContext,
};
use crate::poly::QPoly;
use crate::qnumbers::{bracket_shift, q_bracket, Binomials};
use crate::ratfunc::QRat;
use crate::{BigRational, Error, Result};
use num_traits::One;
use serde_json::json;
use std::collections::BTreeMap;

pub const DEFAULT_EQ16_N_MAX: usize = 30;
pub const DEFAULT_ODD_N_MAX: usize = 7;
pub const DEFAULT_EVEN_N_MAX: usize = 6;
pub const DEFAULT_M_MAX: usize = 15;

/// Which identity a report instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[allow(non_camel_case_types)]
pub enum IdentityId {
    EQ9,
    EQ14,
    EQ16,
    EQ16_1,
    EQ19,
    EQ21,
    EQ6_PADIC,
    EQ12_PADIC,
    EQ13_PADIC,
}

impl IdentityId {
    pub fn as_str(&self) -> &'static str {
        match self {
            IdentityId::EQ9 => "EQ9",
            IdentityId::EQ14 => "EQ14",
            IdentityId::EQ16 => "EQ16",
            IdentityId::EQ16_1 => "EQ16_1",
            IdentityId::EQ19 => "EQ19",
            IdentityId::EQ21 => "EQ21",
            IdentityId::EQ6_PADIC => "EQ6_PADIC",
            IdentityId::EQ12_PADIC => "EQ12_PADIC",
            IdentityId::EQ13_PADIC => "EQ13_PADIC",
        }
    }
}

/// Exact checks carry both sides in canonical form; p-adic checks carry the
/// convergence certificate.
#[derive(Debug, Clone)]
pub enum ReportBody {
    Exact { lhs: QRat, rhs: QRat },
    Padic { certificate: Certificate },
}

#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub identity_id: IdentityId,
    pub params: BTreeMap<String, i64>,
    pub body: ReportBody,
    pub pass: bool,
}

impl IdentityReport {
    fn exact(identity_id: IdentityId, params: BTreeMap<String, i64>, lhs: QRat, rhs: QRat) -> Self {
        let pass = lhs == rhs;
        Self {
            identity_id,
            params,
            body: ReportBody::Exact { lhs, rhs },
            pass,
        }
    }

    fn padic(identity_id: IdentityId, params: BTreeMap<String, i64>, certificate: Certificate) -> Self {
        let pass = certificate.pass;
        Self {
            identity_id,
            params,
            body: ReportBody::Padic { certificate },
            pass,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::Map::new();
        obj.insert("identity_id".into(), json!(self.identity_id.as_str()));
        obj.insert("params".into(), json!(self.params));
        match &self.body {
            ReportBody::Exact { lhs, rhs } => {
                obj.insert("lhs".into(), serde_json::to_value(lhs.machine_form()).unwrap());
                obj.insert("rhs".into(), serde_json::to_value(rhs.machine_form()).unwrap());
            }
            ReportBody::Padic { certificate } => {
                obj.insert("certificate".into(), certificate.to_json());
            }
        }
        obj.insert("pass".into(), json!(self.pass));
        serde_json::Value::Object(obj)
    }
}

/// A batch of reports with the pass summary demanded by the suite contract.
#[derive(Debug, Clone, Default)]
pub struct SuiteOutcome {
    pub reports: Vec<IdentityReport>,
}

impl SuiteOutcome {
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }

    pub fn passed(&self) -> usize {
        self.reports.iter().filter(|r| r.pass).count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "reports": self.reports.iter().map(IdentityReport::to_json).collect::<Vec<_>>(),
            "summary": {"total": self.reports.len(), "passed": self.passed()},
        })
    }

    pub fn extend(&mut self, other: SuiteOutcome) {
        self.reports.extend(other.reports);
    }
}

fn params(pairs: &[(&str, i64)]) -> BTreeMap<String, i64> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// `[2]_q` as a polynomial.
fn two_q_poly() -> QPoly {
    QPoly::from_int_coeffs(&[1, 1])
}

/// The bracket-shift law `[n+1]_q = 1 + q [n]_q` as polynomial equality.
pub fn check_eq14(n_max: usize) -> Vec<IdentityReport> {
    (0..=n_max)
        .map(|n| {
            let (lhs, rhs) = bracket_shift(n);
            IdentityReport::exact(
                IdentityId::EQ14,
                params(&[("n", n as i64)]),
                QRat::from_poly(lhs),
                QRat::from_poly(rhs),
            )
        })
        .collect()
}

/// Umbral recurrence `q(qE+1)^n + E_{n,q} = [2]_q δ_{n,0}`, evaluated on the
/// closed-form table to stay independent of the recurrence construction.
pub fn check_eq16(n_max: usize) -> Result<Vec<IdentityReport>> {
    let table = euler_q_closed_form_table(n_max)?;
    let binom = Binomials::new(n_max);
    let mut reports = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut s = QRat::zero();
        for l in 0..=n {
            let w = QPoly::monomial(binom.get_rational(n, l), l);
            s = &s + &(table.get(l) * &QRat::from_poly(w));
        }
        let lhs = &(&s * &QRat::var()) + table.get(n);
        let rhs = if n == 0 {
            QRat::from_poly(two_q_poly())
        } else {
            QRat::zero()
        };
        reports.push(IdentityReport::exact(
            IdentityId::EQ16,
            params(&[("n", n as i64)]),
            lhs,
            rhs,
        ));
    }
    Ok(reports)
}

/// Direct alternating q-bracket sum `[2]_q Σ_{l<n} (-1)^l q^l [l]_q^m`.
fn alternating_bracket_sum(n: usize, m: usize, flip: bool) -> QRat {
    let mut s = QPoly::zero();
    for l in 0..n {
        let negative = (l % 2 == 1) != flip;
        let sign = if negative { -BigRational::one() } else { BigRational::one() };
        let term = &QPoly::monomial(sign, l) * &q_bracket(l).pow(m as u32);
        s = &s + &term;
    }
    QRat::from_poly(&two_q_poly() * &s)
}

/// `q^n E_{m,q}(n) + sign * E_{m,q}` through the umbral polynomial route.
fn integral_side(m: usize, n: usize, sign_positive: bool, table: &crate::euler::QEulerTable) -> QRat {
    let poly = euler_q_polynomial(m, table);
    let shifted = &QRat::from_poly(QPoly::monomial(BigRational::one(), n)) * &poly.substitute(n);
    if sign_positive {
        &shifted + table.get(m)
    } else {
        &shifted - table.get(m)
    }
}

/// Odd-n alternating-sum identity:
/// `[2]_q Σ_{l<n} (-1)^l q^l [l]_q^m = q^n E_{m,q}(n) + E_{m,q}`.
pub fn check_eq19(m_max: usize, n_odd_list: &[usize]) -> Result<Vec<IdentityReport>> {
    for &n in n_odd_list {
        if n == 0 || n % 2 == 0 {
            return Err(Error::BadParameter(format!(
                "n = {n} is not an odd positive integer"
            )));
        }
    }
    let table = euler_q_recurrence(m_max);
    let mut reports = Vec::new();
    for &n in n_odd_list {
        for m in 0..=m_max {
            let lhs = alternating_bracket_sum(n, m, false);
            let rhs = integral_side(m, n, true, &table);
            reports.push(IdentityReport::exact(
                IdentityId::EQ19,
                params(&[("n", n as i64), ("m", m as i64)]),
                lhs,
                rhs,
            ));
        }
    }
    Ok(reports)
}

/// Even-n alternating-sum identity:
/// `q^n E_{m,q}(n) - E_{m,q} = [2]_q Σ_{l<n} (-1)^{l-1} q^l [l]_q^m`.
pub fn check_eq21(m_max: usize, n_even_list: &[usize]) -> Result<Vec<IdentityReport>> {
    for &n in n_even_list {
        if n == 0 || n % 2 == 1 {
            return Err(Error::BadParameter(format!(
                "n = {n} is not an even positive integer"
            )));
        }
    }
    let table = euler_q_recurrence(m_max);
    let mut reports = Vec::new();
    for &n in n_even_list {
        for m in 0..=m_max {
            let lhs = integral_side(m, n, false, &table);
            let rhs = alternating_bracket_sum(n, m, true);
            reports.push(IdentityReport::exact(
                IdentityId::EQ21,
                params(&[("n", n as i64), ("m", m as i64)]),
                lhs,
                rhs,
            ));
        }
    }
    Ok(reports)
}

/// The general translation identity
/// `q^n I(f_n) + (-1)^{n-1} I(f) = [2]_q Σ_{l<n} (-1)^{n-1-l} q^l f(l)`
/// for `f = [x]_q^m`, with integrals replaced by their exact moment values.
///
/// Odd and even `n` specialize to the two alternating-sum identities, and
/// the reports are oriented so they reproduce those suites verbatim.
pub fn check_eq16_1(n_list: &[usize], m_max: usize) -> Result<Vec<IdentityReport>> {
    for &n in n_list {
        if n == 0 {
            return Err(Error::BadParameter("n must be a positive integer".into()));
        }
    }
    let table = euler_q_recurrence(m_max);
    let mut reports = Vec::new();
    for &n in n_list {
        let odd = n % 2 == 1;
        for m in 0..=m_max {
            // (-1)^{n-1-l} = (-1)^l for odd n, (-1)^{l-1} for even n
            let sum_side = alternating_bracket_sum(n, m, !odd);
            let integral = integral_side(m, n, odd, &table);
            let (lhs, rhs) = if odd { (sum_side, integral) } else { (integral, sum_side) };
            reports.push(IdentityReport::exact(
                IdentityId::EQ16_1,
                params(&[("n", n as i64), ("m", m as i64)]),
                lhs,
                rhs,
            ));
        }
    }
    Ok(reports)
}

/// Finite-level translation identity `q I(f_1) + I(f) = [2]_q f(0)`:
/// both integrals as level-N Riemann sums, certified by growing valuations.
pub fn check_eq9_padic(ctx: &PrimeContext, m_max: usize) -> Vec<IdentityReport> {
    let q = ctx.q_value().clone();
    (0..=m_max)
        .map(|m| {
            let f0 = if m == 0 { BigRational::one() } else { num_traits::Zero::zero() };
            let reference = (BigRational::one() + &q) * f0;
            let levels: Vec<PadicEstimate> = (1..=ctx.n_max())
                .map(|level| {
                    let shifted = riemann_sum_mu_minus_q(ctx, level, m, 1);
                    let plain = riemann_sum_mu_minus_q(ctx, level, m, 0);
                    let combined = &q * shifted + plain;
                    let valuation_gap = vp(&(&combined - &reference), ctx.p());
                    PadicEstimate {
                        level,
                        sum_value: combined,
                        reference: reference.clone(),
                        valuation_gap,
                    }
                })
                .collect();
            let certificate = Certificate::from_estimates(ctx, Measure::Fermionic, m, 0, levels);
            IdentityReport::padic(
                IdentityId::EQ9,
                params(&[("p", ctx.p() as i64), ("m", m as i64)]),
                certificate,
            )
        })
        .collect()
}

/// Fermionic moment certificates: `∫ [x]^m = E_{m,q}` (shift 0) and
/// `∫ [x+x0]^m = E_{m,q}(x0)` (shift > 0).
pub fn check_eq12_13_padic(
    ctx: &PrimeContext,
    m_max: usize,
    x0_max: usize,
) -> Result<Vec<IdentityReport>> {
    let table = euler_q_recurrence(m_max);
    let mut reports = Vec::new();
    for m in 0..=m_max {
        for x0 in 0..=x0_max {
            let exact = if x0 == 0 {
                table.get(m).clone()
            } else {
                euler_q_polynomial(m, &table).substitute(x0)
            };
            let target = exact.eval(ctx.q_value())?;
            let certificate =
                crate::padic::convergence_certificate(ctx, Measure::Fermionic, m, x0, &target);
            let id = if x0 == 0 { IdentityId::EQ12_PADIC } else { IdentityId::EQ13_PADIC };
            reports.push(IdentityReport::padic(
                id,
                params(&[("p", ctx.p() as i64), ("m", m as i64), ("x0", x0 as i64)]),
                certificate,
            ));
        }
    }
    Ok(reports)
}

/// Bosonic cross-check: `∫ [x+x0]^m dμ_q = β_{m,q}(x0)` as certificates.
pub fn check_eq6_padic(
    ctx: &PrimeContext,
    m_max: usize,
    x0_max: usize,
) -> Result<Vec<IdentityReport>> {
    let table = carlitz_beta(m_max);
    let mut reports = Vec::new();
    for m in 0..=m_max {
        for x0 in 0..=x0_max {
            let target = carlitz_beta_polynomial(m, &table)
                .substitute(x0)
                .eval(ctx.q_value())?;
            let certificate =
                crate::padic::convergence_certificate(ctx, Measure::Bosonic, m, x0, &target);
            reports.push(IdentityReport::padic(
                IdentityId::EQ6_PADIC,
                params(&[("p", ctx.p() as i64), ("m", m as i64), ("x0", x0 as i64)]),
                certificate,
            ));
        }
    }
    Ok(reports)
}

fn odd_up_to(n_max: usize) -> Vec<usize> {
    (1..=n_max).filter(|n| n % 2 == 1).collect()
}

fn even_up_to(n_max: usize) -> Vec<usize> {
    (2..=n_max).filter(|n| n % 2 == 0).collect()
}

pub fn suite_eq16(n_max: usize) -> Result<SuiteOutcome> {
    Ok(SuiteOutcome { reports: check_eq16(n_max)? })
}

pub fn suite_eq19(n_max: usize, m_max: usize) -> Result<SuiteOutcome> {
    Ok(SuiteOutcome { reports: check_eq19(m_max, &odd_up_to(n_max))? })
}

pub fn suite_eq21(n_max: usize, m_max: usize) -> Result<SuiteOutcome> {
    Ok(SuiteOutcome { reports: check_eq21(m_max, &even_up_to(n_max))? })
}

pub fn suite_eq16_1(n_max: usize, m_max: usize) -> Result<SuiteOutcome> {
    let n_list: Vec<usize> = (1..=n_max).collect();
    Ok(SuiteOutcome { reports: check_eq16_1(&n_list, m_max)? })
}

/// The default exhaustive exact suite.
pub fn suite_all() -> Result<SuiteOutcome> {
    let mut out = suite_eq16(DEFAULT_EQ16_N_MAX)?;
    out.extend(suite_eq19(DEFAULT_ODD_N_MAX, DEFAULT_M_MAX)?);
    out.extend(suite_eq21(DEFAULT_EVEN_N_MAX, DEFAULT_M_MAX)?);
    out.extend(suite_eq16_1(DEFAULT_ODD_N_MAX, DEFAULT_M_MAX)?);
    Ok(out)
}
