//! q-Euler numbers and polynomials, with the Carlitz comparison sequences.
//!
//! `E_{n,q}` is built by two independent constructions that serve as each
//! other's oracle:
//!
//! * [`euler_q_recurrence`] solves the umbral recurrence
//!   `q(qE + 1)^n + E_{n,q} = [2]_q` (n = 0) `/ 0` (n > 0), dividing by
//!   `1 + q^{n+1}` each step;
//! * [`euler_q_closed_form`] evaluates the finite kernel sum
//!   `[2]_q (1/(1-q))^n Σ_l C(n,l) (-1)^l / (1 + q^{l+1})`, in which the
//!   `(1-q)^n` factor must cancel exactly (asserted).
//!
//! The polynomials `E_{n,q}(x)` live in the `X^i Q^j` basis of [`QXPoly`]
//! via `E_{n,q}(x) = Σ_l C(n,l) Q^l X^{n-l} E_{l,q}`, mirroring the umbral
//! shape `(q^x E + [x]_q)^n`. The Carlitz q-Bernoulli numbers `β_{k,q}` and
//! q-Euler numbers `H_k(u;q)` are provided as comparison objects.

use crate::qnumbers::Binomials;
use crate::poly::QPoly;
use crate::qxpoly::QXPoly;
use crate::ratfunc::QRat;
use crate::{fmt_rational, BigRational, Error, Result};
use num_traits::{One, Zero};
use serde_json::json;

/// Which construction produced a [`QEulerTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    Recurrence,
    ClosedForm,
}

/// `1 + q^k`.
fn one_plus_q_pow(k: usize) -> QPoly {
    &QPoly::one() + &QPoly::monomial(BigRational::one(), k)
}

/// `[2]_q = 1 + q` as a field element.
fn two_q() -> QRat {
    QRat::from_poly(QPoly::from_int_coeffs(&[1, 1]))
}

/// The shared umbral expansion `Σ_l C(m,l) Q^l X^{m-l} values[l]`.
fn umbral_polynomial(m: usize, values: &[QRat]) -> QXPoly {
    assert!(
        values.len() > m,
        "table of size {} does not cover index {m}; tables never extend implicitly",
        values.len()
    );
    let binom = Binomials::new(m);
    let mut p = QXPoly::zero();
    for (l, value) in values.iter().enumerate().take(m + 1) {
        let c = QRat::from_rational(binom.get_rational(m, l)) * value;
        p.add_term((m - l) as u32, l as u32, c);
    }
    p
}

/// Table of q-Euler numbers `E_{0,q} .. E_{n_max,q}` in canonical form.
#[derive(Debug, Clone)]
pub struct QEulerTable {
    values: Vec<QRat>,
    construction: Construction,
}

impl QEulerTable {
    pub fn values(&self) -> &[QRat] {
        &self.values
    }

    pub fn get(&self, n: usize) -> &QRat {
        assert!(
            n < self.values.len(),
            "table of size {} does not cover index {n}; tables never extend implicitly",
            self.values.len()
        );
        &self.values[n]
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "kind": "euler_q",
            "n_max": self.n_max(),
            "values": self.values.iter().map(|v| serde_json::to_value(v.machine_form()).unwrap()).collect::<Vec<_>>(),
        })
    }

    pub fn to_csv(&self) -> String {
        render_csv(&self.values)
    }

    pub fn to_latex(&self) -> String {
        render_latex("E_{n,q}", &self.values)
    }

    pub fn to_text(&self) -> String {
        render_text("E", &self.values)
    }
}

/// Solve the defining recurrence bottom-up:
/// `E_0 = 1`, `E_n = -q (Σ_{l<n} C(n,l) q^l E_l) / (1 + q^{n+1})`.
pub fn euler_q_recurrence(n_max: usize) -> QEulerTable {
    let binom = Binomials::new(n_max);
    let mut values = vec![QRat::one()];
    for n in 1..=n_max {
        let mut s = QRat::zero();
        for (l, value) in values.iter().enumerate().take(n) {
            let w = QPoly::monomial(binom.get_rational(n, l), l);
            s = &s + &(value * &QRat::from_poly(w));
        }
        let neg_q = QPoly::monomial(-BigRational::one(), 1);
        let e_n = (&s * &QRat::from_poly(neg_q))
            .checked_div(&QRat::from_poly(one_plus_q_pow(n + 1)))
            .expect("1 + q^{n+1} is never zero");
        values.push(e_n);
    }
    QEulerTable {
        values,
        construction: Construction::Recurrence,
    }
}

/// The finite closed form for a single `E_{n,q}`.
///
/// Fails with [`Error::InvariantViolation`] if the `(1-q)^n` factor does not
/// cancel (an arithmetic bug, not a domain case).
pub fn euler_q_closed_form(n: usize) -> Result<QRat> {
    let binom = Binomials::new(n);
    let mut s = QRat::zero();
    for l in 0..=n {
        let mut c = binom.get_rational(n, l);
        if l % 2 == 1 {
            c = -c;
        }
        s = &s + &QRat::new(QPoly::constant(c), one_plus_q_pow(l + 1));
    }
    let one_minus_q_n = QPoly::from_int_coeffs(&[1, -1]).pow(n as u32);
    let result = (&s * &two_q())
        .checked_div(&QRat::from_poly(one_minus_q_n))
        .expect("(1-q)^n is never zero");
    if result.den().eval(&BigRational::one()).is_zero() {
        return Err(Error::InvariantViolation(format!(
            "(1-q)^{n} failed to cancel in the closed form for E_{{{n},q}}"
        )));
    }
    Ok(result)
}

/// Closed-form construction of the whole table `E_{0,q} .. E_{n_max,q}`.
pub fn euler_q_closed_form_table(n_max: usize) -> Result<QEulerTable> {
    let values = (0..=n_max).map(euler_q_closed_form).collect::<Result<_>>()?;
    Ok(QEulerTable {
        values,
        construction: Construction::ClosedForm,
    })
}

/// `E_{n,q}(x) = Σ_l C(n,l) Q^l X^{n-l} E_{l,q}` in the `X = [x]_q`,
/// `Q = q^x` basis.
pub fn euler_q_polynomial(n: usize, table: &QEulerTable) -> QXPoly {
    umbral_polynomial(n, &table.values)
}

/// Direct kernel form of `E_{n,q}(x)` at a nonnegative integer `x`:
/// `[2]_q (1/(1-q))^n Σ_l C(n,l) (-1)^l q^{lx} / (1 + q^{l+1})`.
///
/// Independent of the umbral route through [`euler_q_polynomial`]; the two
/// must agree exactly.
pub fn euler_q_point_closed_form(n: usize, x: usize) -> Result<QRat> {
    let binom = Binomials::new(n);
    let mut s = QRat::zero();
    for l in 0..=n {
        let mut c = binom.get_rational(n, l);
        if l % 2 == 1 {
            c = -c;
        }
        s = &s + &QRat::new(QPoly::monomial(c, l * x), one_plus_q_pow(l + 1));
    }
    let one_minus_q_n = QPoly::from_int_coeffs(&[1, -1]).pow(n as u32);
    let result = (&s * &two_q())
        .checked_div(&QRat::from_poly(one_minus_q_n))
        .expect("(1-q)^n is never zero");
    if result.den().eval(&BigRational::one()).is_zero() {
        return Err(Error::InvariantViolation(format!(
            "(1-q)^{n} failed to cancel in the kernel form for E_{{{n},q}}({x})"
        )));
    }
    Ok(result)
}

/// Entrywise `q -> 1` limit; equals the classical Euler numbers.
///
/// A pole at 1 would contradict the table invariant and is reported as an
/// invariant violation.
pub fn euler_q_limit(table: &QEulerTable) -> Result<Vec<BigRational>> {
    table
        .values
        .iter()
        .enumerate()
        .map(|(n, v)| {
            v.eval(&BigRational::one()).map_err(|_| {
                Error::InvariantViolation(format!("E_{{{n},q}} has a pole at q = 1"))
            })
        })
        .collect()
}

/// Carlitz q-Bernoulli numbers `β_{k,q}`.
#[derive(Debug, Clone)]
pub struct CarlitzBernoulliTable {
    values: Vec<QRat>,
}

impl CarlitzBernoulliTable {
    pub fn values(&self) -> &[QRat] {
        &self.values
    }

    pub fn get(&self, k: usize) -> &QRat {
        assert!(
            k < self.values.len(),
            "table of size {} does not cover index {k}; tables never extend implicitly",
            self.values.len()
        );
        &self.values[k]
    }

    pub fn k_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "kind": "beta_q",
            "n_max": self.k_max(),
            "values": self.values.iter().map(|v| serde_json::to_value(v.machine_form()).unwrap()).collect::<Vec<_>>(),
        })
    }

    pub fn to_csv(&self) -> String {
        render_csv(&self.values)
    }

    pub fn to_latex(&self) -> String {
        render_latex("\\beta_{n,q}", &self.values)
    }

    pub fn to_text(&self) -> String {
        render_text("beta", &self.values)
    }
}

/// `β_0 = 1`, `β_1 = -1/(1+q)` (solved from `q(qβ+1) - β_1 = 1`), and for
/// k > 1: `β_k (q^{k+1} - 1) = -q Σ_{l<k} C(k,l) q^l β_l`.
pub fn carlitz_beta(k_max: usize) -> CarlitzBernoulliTable {
    let binom = Binomials::new(k_max);
    let mut values = vec![QRat::one()];
    for k in 1..=k_max {
        let value = if k == 1 {
            QRat::new(QPoly::from_int_coeffs(&[-1]), QPoly::from_int_coeffs(&[1, 1]))
        } else {
            let mut s = QRat::zero();
            for (l, b) in values.iter().enumerate().take(k) {
                let w = QPoly::monomial(binom.get_rational(k, l), l);
                s = &s + &(b * &QRat::from_poly(w));
            }
            let neg_q = QPoly::monomial(-BigRational::one(), 1);
            let mut den = QPoly::monomial(BigRational::one(), k + 1);
            den = &den - &QPoly::one();
            (&s * &QRat::from_poly(neg_q))
                .checked_div(&QRat::from_poly(den))
                .expect("q^{k+1} - 1 is never zero")
        };
        values.push(value);
    }
    CarlitzBernoulliTable { values }
}

/// `β_{m,q}(x) = Σ_l C(m,l) Q^l X^{m-l} β_{l,q}`.
pub fn carlitz_beta_polynomial(m: usize, table: &CarlitzBernoulliTable) -> QXPoly {
    umbral_polynomial(m, &table.values)
}

/// Carlitz q-Euler numbers `H_k(u;q)` for a rational parameter `u`.
#[derive(Debug, Clone)]
pub struct CarlitzQEulerTable {
    u: BigRational,
    values: Vec<QRat>,
}

impl CarlitzQEulerTable {
    pub fn u(&self) -> &BigRational {
        &self.u
    }

    pub fn values(&self) -> &[QRat] {
        &self.values
    }

    pub fn get(&self, k: usize) -> &QRat {
        assert!(
            k < self.values.len(),
            "table of size {} does not cover index {k}; tables never extend implicitly",
            self.values.len()
        );
        &self.values[k]
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "kind": "carlitz_h",
            "n_max": self.values.len() - 1,
            "u": fmt_rational(&self.u),
            "values": self.values.iter().map(|v| serde_json::to_value(v.machine_form()).unwrap()).collect::<Vec<_>>(),
        })
    }

    pub fn to_csv(&self) -> String {
        render_csv(&self.values)
    }

    pub fn to_latex(&self) -> String {
        render_latex("H_n(u;q)", &self.values)
    }

    pub fn to_text(&self) -> String {
        render_text("H", &self.values)
    }
}

/// `H_0 = 1`; `H_k = (Σ_{l<k} C(k,l) q^l H_l) / (u - q^k)` for k >= 1.
///
/// The per-step divisor `u - q^k` is nonzero for every rational `u` once
/// k >= 1; the check is kept to honor the domain contract.
pub fn carlitz_q_euler(u: BigRational, k_max: usize) -> Result<CarlitzQEulerTable> {
    let binom = Binomials::new(k_max);
    let mut values = vec![QRat::one()];
    for k in 1..=k_max {
        let mut divisor = QPoly::monomial(-BigRational::one(), k);
        divisor = &divisor + &QPoly::constant(u.clone());
        if divisor.is_zero() {
            return Err(Error::ZeroDivisor {
                context: format!("u - q^{k} vanishes identically for u = {}", fmt_rational(&u)),
            });
        }
        let mut s = QRat::zero();
        for (l, h) in values.iter().enumerate().take(k) {
            let w = QPoly::monomial(binom.get_rational(k, l), l);
            s = &s + &(h * &QRat::from_poly(w));
        }
        values.push(
            s.checked_div(&QRat::from_poly(divisor))
                .expect("divisor checked nonzero"),
        );
    }
    Ok(CarlitzQEulerTable { u, values })
}

fn limit_cell(v: &QRat) -> String {
    match v.eval(&BigRational::one()) {
        Ok(r) => fmt_rational(&r),
        Err(_) => "pole".to_string(),
    }
}

fn render_csv(values: &[QRat]) -> String {
    let mut out = String::from("n,num,den,limit_q1\n");
    for (n, v) in values.iter().enumerate() {
        out.push_str(&format!("{n},{},{},{}\n", v.num(), v.den(), limit_cell(v)));
    }
    out
}

fn render_latex(symbol: &str, values: &[QRat]) -> String {
    let mut out = String::from("\\begin{tabular}{rll}\n");
    out.push_str(&format!("$n$ & ${symbol}$ & $q \\to 1$ \\\\\n\\hline\n"));
    for (n, v) in values.iter().enumerate() {
        out.push_str(&format!("${n}$ & ${}$ & ${}$ \\\\\n", v.latex(), limit_cell(v)));
    }
    out.push_str("\\end{tabular}\n");
    out
}

fn render_text(prefix: &str, values: &[QRat]) -> String {
    let mut out = String::new();
    for (n, v) in values.iter().enumerate() {
        out.push_str(&format!("{prefix}_{n} = {v}\n"));
    }
    out
}
