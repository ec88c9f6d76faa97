//! Floating-point oracle for the complex-domain series representations,
//! valid for `|q| < 1`.
//!
//! The m-series `E_{n,q} = [2]_q Σ_m (-1)^m q^m [m]_q^n` only converges for
//! `|q| < 1` and cannot live in ℚ(q); it is computed here in double-precision
//! complex arithmetic with an explicit tail bound derived from
//! `|[m]_q| <= 1/(1 - |q|)`. The comparison side stays exact as long as
//! possible: `q` is carried as a Gaussian rational and canonical ℚ(q) values
//! are evaluated exactly before the single final rounding to `f64`.

use crate::euler::QEulerTable;
use crate::ratfunc::QRat;
use crate::{BigRational, Error, Result};
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::json;

/// Truncation and tolerance for the m-series at a fixed complex `q`.
///
/// `q` is stored as an exact Gaussian rational so the oracle comparisons can
/// evaluate ℚ(q) values without intermediate rounding; `|q| < 1` strictly.
#[derive(Debug, Clone)]
pub struct SeriesConfig {
    q_re: BigRational,
    q_im: BigRational,
    truncation: usize,
    tolerance: f64,
}

impl SeriesConfig {
    pub fn new(q_re: BigRational, q_im: BigRational, truncation: usize, tolerance: f64) -> Result<Self> {
        let norm = &q_re * &q_re + &q_im * &q_im;
        if norm >= BigRational::one() {
            return Err(Error::BadParameter(format!(
                "|q| must be < 1, got |q|^2 = {}",
                crate::fmt_rational(&norm)
            )));
        }
        if tolerance <= 0.0 {
            return Err(Error::BadParameter("tolerance must be positive".into()));
        }
        Ok(Self {
            q_re,
            q_im,
            truncation,
            tolerance,
        })
    }

    /// Choose the truncation from the tail bound so that the series for
    /// `E_{n,q}` is within `tolerance` of its limit.
    pub fn with_tail_bound(q_re: BigRational, q_im: BigRational, n: usize, tolerance: f64) -> Result<Self> {
        let mut cfg = Self::new(q_re, q_im, 0, tolerance)?;
        cfg.truncation = minimal_truncation(cfg.q_abs(), n, tolerance);
        Ok(cfg)
    }

    pub fn q_complex(&self) -> Complex64 {
        Complex64::new(
            self.q_re.to_f64().expect("|q| < 1 always converts"),
            self.q_im.to_f64().expect("|q| < 1 always converts"),
        )
    }

    pub fn q_exact(&self) -> (&BigRational, &BigRational) {
        (&self.q_re, &self.q_im)
    }

    pub fn q_abs(&self) -> f64 {
        self.q_complex().norm()
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// `[2]_{|q|} (1/(1-|q|))^n |q|^{M+1} / (1-|q|)`, a bound on the
    /// discarded tail of the m-series for `E_{n,q}`.
    pub fn tail_bound(&self, n: usize) -> f64 {
        tail_bound(self.q_abs(), self.truncation, n)
    }
}

fn tail_bound(q_abs: f64, truncation: usize, n: usize) -> f64 {
    let r = 1.0 / (1.0 - q_abs);
    (1.0 + q_abs) * r.powi(n as i32) * q_abs.powi(truncation as i32 + 1) * r
}

/// Smallest truncation whose tail bound is at or below `tolerance`.
pub fn minimal_truncation(q_abs: f64, n: usize, tolerance: f64) -> usize {
    if q_abs == 0.0 {
        return 0;
    }
    let rhs = tolerance * (1.0 - q_abs).powi(n as i32 + 1) / (1.0 + q_abs);
    let mut m = if rhs >= 1.0 {
        0
    } else {
        (rhs.ln() / q_abs.ln()).ceil().max(1.0) as usize - 1
    };
    while tail_bound(q_abs, m, n) > tolerance {
        m += 1;
    }
    while m > 0 && tail_bound(q_abs, m - 1, n) <= tolerance {
        m -= 1;
    }
    m
}

/// Truncated m-series and its tail bound, without a tolerance check.
pub fn euler_series_with_bound(n: usize, q: Complex64, truncation: usize) -> (Complex64, f64) {
    let mut bracket = Complex64::zero(); // [0]_q
    let mut qpow = Complex64::one();
    let mut acc = Complex64::zero();
    for m in 0..=truncation {
        let term = qpow * bracket.powu(n as u32);
        if m % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        bracket = Complex64::one() + q * bracket;
        qpow *= q;
    }
    acc *= Complex64::one() + q;
    (acc, tail_bound(q.norm(), truncation, n))
}

/// Truncated sum `[2]_q Σ_{m<=M} (-1)^m q^m [m]_q^n`, guaranteed within the
/// tail bound of the true `E_{n,q}`.
///
/// Fails when the configured truncation cannot meet the tolerance, reporting
/// the minimal sufficient truncation.
pub fn euler_series(n: usize, cfg: &SeriesConfig) -> Result<Complex64> {
    let bound = cfg.tail_bound(n);
    if bound > cfg.tolerance {
        return Err(Error::TruncationTooShort {
            tail_bound: bound,
            tolerance: cfg.tolerance,
            minimal_truncation: minimal_truncation(cfg.q_abs(), n, cfg.tolerance),
        });
    }
    Ok(euler_series_with_bound(n, cfg.q_complex(), cfg.truncation).0)
}

/// Evaluate a canonical ℚ(q) value at an exact Gaussian rational point,
/// rounding to `f64` only once at the end.
pub fn eval_qrat_gaussian(a: &QRat, re: &BigRational, im: &BigRational) -> Result<Complex64> {
    let (nr, ni) = eval_poly_gaussian(a.num().coeffs(), re, im);
    let (dr, di) = eval_poly_gaussian(a.den().coeffs(), re, im);
    let norm = &dr * &dr + &di * &di;
    if norm.is_zero() {
        return Err(Error::Pole {
            at: re.clone(), // complex pole; real part identifies the point in the error
        });
    }
    // (nr + ni i)(dr - di i) / |d|^2
    let out_re = (&nr * &dr + &ni * &di) / &norm;
    let out_im = (&ni * &dr - &nr * &di) / &norm;
    Ok(Complex64::new(
        out_re.to_f64().expect("finite rational"),
        out_im.to_f64().expect("finite rational"),
    ))
}

fn eval_poly_gaussian(coeffs: &[BigRational], re: &BigRational, im: &BigRational) -> (BigRational, BigRational) {
    let mut acc_re = BigRational::zero();
    let mut acc_im = BigRational::zero();
    for c in coeffs.iter().rev() {
        let new_re = &acc_re * re - &acc_im * im + c;
        let new_im = &acc_re * im + &acc_im * re;
        acc_re = new_re;
        acc_im = new_im;
    }
    (acc_re, acc_im)
}

/// Result of comparing the generating-function series against the exact
/// coefficient expansion on a grid of `t` points.
#[derive(Debug, Clone)]
pub struct GeneratingFunctionReport {
    pub q: Complex64,
    pub n_max: usize,
    pub truncation: usize,
    pub deviations: Vec<(Complex64, f64)>,
    pub max_abs_dev: f64,
}

impl GeneratingFunctionReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "q": [self.q.re, self.q.im],
            "n_max": self.n_max,
            "M": self.truncation,
            "max_abs_dev": self.max_abs_dev,
        })
    }
}

/// Compare `[2]_q Σ_{m<=M} (-1)^m q^m exp([m]_q t)` against
/// `Σ_{n<=n_max} E_{n,q} t^n / n!` with exact `E_{n,q}` coefficients,
/// reporting the deviation at each `t`.
///
/// Thresholding is left to the caller; the table must cover `0..=n_max`.
pub fn generating_function_check(
    cfg: &SeriesConfig,
    t_points: &[Complex64],
    n_max: usize,
    table: &QEulerTable,
) -> Result<GeneratingFunctionReport> {
    let (re, im) = cfg.q_exact();
    let coeffs: Vec<Complex64> = (0..=n_max)
        .map(|n| eval_qrat_gaussian(table.get(n), re, im))
        .collect::<Result<_>>()?;
    let q = cfg.q_complex();
    let mut deviations = Vec::with_capacity(t_points.len());
    let mut max_abs_dev = 0.0f64;
    for &t in t_points {
        // series side
        let mut bracket = Complex64::zero();
        let mut qpow = Complex64::one();
        let mut series = Complex64::zero();
        for m in 0..=cfg.truncation {
            let term = qpow * (bracket * t).exp();
            if m % 2 == 0 {
                series += term;
            } else {
                series -= term;
            }
            bracket = Complex64::one() + q * bracket;
            qpow *= q;
        }
        series *= Complex64::one() + q;
        // coefficient side
        let mut tn_over_fact = Complex64::one();
        let mut expansion = Complex64::zero();
        for (n, e) in coeffs.iter().enumerate() {
            expansion += e * tn_over_fact;
            tn_over_fact *= t / (n as f64 + 1.0);
        }
        let dev = (series - expansion).norm();
        max_abs_dev = max_abs_dev.max(dev);
        deviations.push((t, dev));
    }
    Ok(GeneratingFunctionReport {
        q,
        n_max,
        truncation: cfg.truncation,
        deviations,
        max_abs_dev,
    })
}
