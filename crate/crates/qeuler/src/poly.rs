//! Dense univariate polynomials in the indeterminate `q` over exact rationals.
//!
//! `QPoly` stores coefficients by ascending degree and keeps the leading
//! (highest stored) coefficient nonzero; the zero polynomial stores nothing.
//! Degrees in this crate stay below a few hundred, so the representation is
//! dense and multiplication is schoolbook.

use crate::{fmt_rational, rational_is_negative, BigInt, BigRational};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in `q` with `BigRational` coefficients, ascending by degree.
///
/// Invariants:
///   1. The last stored coefficient is nonzero.
///   2. The zero polynomial is the empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Integer coefficients by ascending degree; test and construction helper.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `q`.
    pub fn var() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    /// `c * q^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Coefficient of `q^k` (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Ascending coefficient slice; empty for zero.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: `self = quot * d + rem` with `deg rem < deg d`.
    ///
    /// Panics if `d` is zero.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let f = &rem[k] / lc;
            rem[k] = BigRational::zero();
            for (j, dc) in d.coeffs.iter().enumerate().take(dd) {
                let delta = dc * &f;
                rem[k - dd + j] -= delta;
            }
            quot[k - dd] = f;
        }
        (QPoly::from_coeffs(quot), QPoly::from_coeffs(rem))
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &QPoly) -> Option<QPoly> {
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        let (quot, rem) = self.div_rem(d);
        rem.is_zero().then_some(quot)
    }

    pub fn divides(&self, other: &QPoly) -> bool {
        other.exact_div(self).is_some()
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval(&self, v: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    /// Clear denominators and integer content: returns `(P, c)` with
    /// `self = c * P`, `P` a primitive integer polynomial with positive
    /// leading coefficient. Zero maps to `([], 0)`.
    pub fn primitive_integer_parts(&self) -> (Vec<BigInt>, BigRational) {
        if self.is_zero() {
            return (Vec::new(), BigRational::zero());
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
        (prim, BigRational::new(content, den_lcm))
    }

    /// The primitive integer-coefficient associate (positive leading
    /// coefficient); used by gcd routines where scalars are irrelevant.
    pub fn primitive_part(&self) -> QPoly {
        let (prim, _) = self.primitive_integer_parts();
        QPoly {
            coeffs: prim.into_iter().map(BigRational::from_integer).collect(),
        }
    }

    /// Coefficient strings by ascending degree; the machine interchange form.
    pub fn machine_coeffs(&self) -> Vec<String> {
        if self.is_zero() {
            return vec!["0".to_string()];
        }
        self.coeffs.iter().map(fmt_rational).collect()
    }

    /// LaTeX rendering with braced exponents, for tabular output.
    pub fn latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = rational_is_negative(c);
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let coeff_str = if a.denom().is_one() {
                a.numer().to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
            };
            match (k, a.is_one()) {
                (0, _) => out.push_str(&coeff_str),
                (_, true) => {}
                (_, false) => {
                    out.push_str(&coeff_str);
                    out.push(' ');
                }
            }
            match k {
                0 => {}
                1 => out.push('q'),
                _ => out.push_str(&format!("q^{{{k}}}")),
            }
        }
        out
    }
}

impl fmt::Display for QPoly {
    /// Human form: terms in decreasing degree, explicit signs, spaces around
    /// `+`/`-`, e.g. `q^2 + 1`, `-3/2*q^3 - q + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = rational_is_negative(c);
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            if k == 0 {
                write!(f, "{}", fmt_rational(&a))?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", fmt_rational(&a))?;
                }
                if k == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero);
            if let Some(r) = rhs.coeffs.get(k) {
                c += r;
            }
            coeffs.push(c);
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero);
            if let Some(r) = rhs.coeffs.get(k) {
                c -= r;
            }
            coeffs.push(c);
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<QPoly> for &QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_int_coeffs(coeffs)
    }

    #[test]
    fn construction_trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
        assert_eq!(p(&[0, 0, 7]).degree(), Some(2));
    }

    #[test]
    fn degree_law_for_products() {
        let a = p(&[1, 2, 3]);
        let b = p(&[-4, 0, 0, 5]);
        assert_eq!(
            (&a * &b).degree().unwrap(),
            a.degree().unwrap() + b.degree().unwrap()
        );
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[3, -1, 0, 7, 2]);
        let d = p(&[1, 1, 1]);
        let (quot, rem) = a.div_rem(&d);
        assert_eq!(&(&quot * &d) + &rem, a);
        assert!(rem.degree() < d.degree());
    }

    #[test]
    fn exact_div_detects_divisibility() {
        let a = p(&[-1, 0, 1]); // q^2 - 1
        let d = p(&[-1, 1]); // q - 1
        assert_eq!(a.exact_div(&d), Some(p(&[1, 1])));
        assert_eq!(a.exact_div(&p(&[1, 1, 1])), None);
        assert!(d.divides(&a));
    }

    #[test]
    fn eval_horner() {
        let a = p(&[1, 0, -2, 1]); // q^3 - 2q^2 + 1
        let v = BigRational::new(3.into(), 2.into());
        // 27/8 - 2*9/4 + 1 = 27/8 - 36/8 + 8/8 = -1/8
        assert_eq!(a.eval(&v), BigRational::new((-1).into(), 8.into()));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let a = p(&[1, 1]);
        assert_eq!(a.pow(0), QPoly::one());
        assert_eq!(a.pow(3), &(&a * &a) * &a);
        assert_eq!(QPoly::zero().pow(0), QPoly::one());
        assert!(QPoly::zero().pow(4).is_zero());
    }

    #[test]
    fn primitive_parts() {
        // 6q^2 + 3q = 3 * (2q^2 + q)
        let (prim, c) = p(&[0, 3, 6]).primitive_integer_parts();
        assert_eq!(prim, vec![BigInt::from(0), 1.into(), 2.into()]);
        assert_eq!(c, BigRational::from_integer(3.into()));
        // -q/2 - 1/2 = -1/2 * (q + 1)
        let half = BigRational::new(1.into(), 2.into());
        let poly = QPoly::from_coeffs(vec![-half.clone(), -half]);
        let (prim, c) = poly.primitive_integer_parts();
        assert_eq!(prim, vec![BigInt::from(1), 1.into()]);
        assert_eq!(c, BigRational::new((-1).into(), 2.into()));
    }

    #[test]
    fn display_human_form() {
        assert_eq!(p(&[1, 0, 1]).to_string(), "q^2 + 1");
        assert_eq!(p(&[0, -1]).to_string(), "-q");
        assert_eq!(p(&[2, -1, 0, -3]).to_string(), "-3*q^3 - q + 2");
        assert_eq!(QPoly::zero().to_string(), "0");
        let half = BigRational::new(3.into(), 2.into());
        assert_eq!(
            QPoly::from_coeffs(vec![BigRational::zero(), -half]).to_string(),
            "-3/2*q"
        );
    }

    #[test]
    fn latex_form() {
        assert_eq!(p(&[1, 0, 1]).latex(), "q^{2} + 1");
        let half = BigRational::new(1.into(), 2.into());
        let poly = QPoly::from_coeffs(vec![half, BigRational::one().neg()]);
        assert_eq!(poly.latex(), "-q + \\frac{1}{2}");
    }

    #[test]
    fn machine_coeffs_ascending() {
        let half = BigRational::new((-1).into(), 2.into());
        let poly = QPoly::from_coeffs(vec![BigRational::one(), half]);
        assert_eq!(poly.machine_coeffs(), vec!["1", "-1/2"]);
        assert_eq!(QPoly::zero().machine_coeffs(), vec!["0"]);
    }
}
