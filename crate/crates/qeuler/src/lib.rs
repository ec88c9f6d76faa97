//! Exact arithmetic for q-Euler numbers and polynomials over ℚ(q).
//!
//! The crate builds the q-Euler numbers `E_{n,q}` by two independent
//! constructions (an umbral recurrence and a finite closed form), lifts them
//! to symbolic q-Euler polynomials `E_{n,q}(x)`, and verifies the defining
//! integral representation two ways:
//!
//! * exactly, through a family of alternating-sum identities checked as
//!   equalities of canonical rational functions in `q`;
//! * p-adically, by finite Riemann-sum approximants of the fermionic and
//!   bosonic q-integrals whose deviation from the exact values is certified
//!   by growing p-adic valuations;
//! * analytically, by a floating-point series oracle valid for `|q| < 1`.
//!
//! Everything outside [`analytic`] is exact: the scalar domain is
//! arbitrary-precision rationals, and the value domain for the q-objects is
//! the canonically reduced rational function field ℚ(q) ([`QRat`]).
//!
//! Start with the runnable examples (`cargo run --example euler_tables`) or
//! the `qeuler` binary (`qeuler table --kind euler-q --n-max 6 --format text`).

pub mod analytic;
pub mod cli;
pub mod euler;
pub mod gcd;
pub mod padic;
pub mod poly;
pub mod qnumbers;
pub mod qxpoly;
pub mod ratfunc;
pub mod verify;

pub use euler::{CarlitzBernoulliTable, CarlitzQEulerTable, QEulerTable};
pub use poly::QPoly;
pub use qxpoly::QXPoly;
pub use ratfunc::QRat;

/// Exact rational scalar used for every coefficient in the crate.
///
/// Values are always in lowest terms with a positive denominator; arithmetic
/// never rounds.
pub type BigRational = num_rational::BigRational;
pub use num_bigint::BigInt;

use num_traits::{One, Signed, Zero};

/// Errors surfaced by the exact-arithmetic layers.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Division of rational functions by the zero element.
    #[error("division by zero rational function")]
    DivisionByZero,
    /// Evaluation at a root of a reduced denominator.
    #[error("pole: reduced denominator vanishes at q = {at}")]
    Pole { at: BigRational },
    /// A recurrence step would divide by an identically zero element.
    #[error("zero divisor in recurrence step: {context}")]
    ZeroDivisor { context: String },
    /// An internal invariant failed; indicates a construction bug, not a domain case.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    /// A caller-supplied parameter is outside the documented domain.
    #[error("bad parameter: {0}")]
    BadParameter(String),
    /// A series truncation cannot meet the requested tolerance.
    #[error("truncation too short: tail bound {tail_bound:e} exceeds tolerance {tolerance:e}; minimal sufficient truncation is {minimal_truncation}")]
    TruncationTooShort {
        tail_bound: f64,
        tolerance: f64,
        minimal_truncation: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Parse an exact rational from the `P/Q` (or plain `P`) command-line form.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let err = || Error::BadParameter(format!("expected rational `P/Q` or integer `P`, got `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| err())?;
    let den: BigInt = den.trim().parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(Error::BadParameter(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(num, den))
}

/// Render an exact rational as `p` or `p/q`; the interchange form used by
/// every machine-readable output.
pub fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn rational_is_negative(r: &BigRational) -> bool {
    r.numer().is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["6", "-6/37", "1/2", "0"] {
            assert_eq!(fmt_rational(&parse_rational(s).unwrap()), s);
        }
        // non-canonical input parses to reduced form
        assert_eq!(fmt_rational(&parse_rational("4/6").unwrap()), "2/3");
        assert_eq!(fmt_rational(&parse_rational("3/-6").unwrap()), "-1/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn values_are_thread_transferable() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<QPoly>();
        assert_send_sync::<QRat>();
        assert_send_sync::<QXPoly>();
        assert_send_sync::<QEulerTable>();
    }
}
