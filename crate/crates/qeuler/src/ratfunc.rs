//! The rational function field ℚ(q) in canonical form.
//!
//! A `QRat` is a ratio of two [`QPoly`] values kept in the canonical form
//! that makes field equality a component-wise comparison:
//!
//!   1. the denominator is never zero (zero is stored as `0/1`);
//!   2. numerator and denominator are coprime over ℚ[q];
//!   3. the denominator is monic.
//!
//! All arithmetic is exact and re-canonicalizes; values are immutable.

use crate::gcd::poly_gcd;
use crate::poly::QPoly;
use crate::{BigRational, Error, Result};
use num_traits::One;
use serde::Serialize;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

/// Machine interchange form: coefficient strings by ascending degree.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct MachineQRat {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl QRat {
    /// Canonicalize `num/den`.
    ///
    /// Panics if `den` is the zero polynomial; fallible division goes
    /// through [`QRat::checked_div`].
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in rational function");
        if num.is_zero() {
            return Self::zero();
        }
        let g = poly_gcd(&num, &den);
        let (mut num, mut den) = if g.degree() > Some(0) {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        } else {
            (num, den)
        };
        let lc = den.leading_coeff().unwrap();
        if !lc.is_one() {
            let inv = BigRational::one() / lc;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }

    /// The indeterminate `q` as a field element.
    pub fn var() -> Self {
        Self::from_poly(QPoly::var())
    }

    pub fn from_poly(p: QPoly) -> Self {
        Self {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_rational(BigRational::from_integer(c.into()))
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the canonical denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::new(self.den.clone(), self.num.clone()))
    }

    /// Exact quotient with the spec'd domain error on a zero divisor.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::new(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, e: u32) -> Self {
        // Coprimality and monicity survive powering; no re-reduction needed.
        Self {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Exact evaluation of the canonical form at `q = v`.
    ///
    /// Fails with [`Error::Pole`] when the reduced denominator vanishes.
    pub fn eval(&self, v: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(v);
        if num_traits::Zero::is_zero(&d) {
            return Err(Error::Pole { at: v.clone() });
        }
        Ok(self.num.eval(v) / d)
    }

    pub fn machine_form(&self) -> MachineQRat {
        MachineQRat {
            num: self.num.machine_coeffs(),
            den: self.den.machine_coeffs(),
        }
    }

    pub fn latex(&self) -> String {
        if self.den.is_one() {
            self.num.latex()
        } else {
            format!("\\frac{{{}}}{{{}}}", self.num.latex(), self.den.latex())
        }
    }
}

impl fmt::Display for QRat {
    /// Human form: `(num)/(den)`, or the bare numerator when the canonical
    /// denominator is 1, e.g. `(-q)/(q^2 + 1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        // a/b + c/d = (a(d/g) + c(b/g)) / (b(d/g)) with g = gcd(b, d);
        // the reduction step still runs, but on far smaller inputs.
        let g = poly_gcd(&self.den, &rhs.den);
        let (db, dd) = if g.degree() > Some(0) {
            (self.den.exact_div(&g).unwrap(), rhs.den.exact_div(&g).unwrap())
        } else {
            (self.den.clone(), rhs.den.clone())
        };
        let num = &(&self.num * &dd) + &(&rhs.num * &db);
        let den = &self.den * &dd;
        QRat::new(num, den)
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self + &(-rhs)
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        // Cross-cancel before multiplying to keep the final reduction small.
        let g1 = poly_gcd(&self.num, &rhs.den);
        let g2 = poly_gcd(&rhs.num, &self.den);
        let n1 = if g1.degree() > Some(0) { self.num.exact_div(&g1).unwrap() } else { self.num.clone() };
        let d2 = if g1.degree() > Some(0) { rhs.den.exact_div(&g1).unwrap() } else { rhs.den.clone() };
        let n2 = if g2.degree() > Some(0) { rhs.num.exact_div(&g2).unwrap() } else { rhs.num.clone() };
        let d1 = if g2.degree() > Some(0) { self.den.exact_div(&g2).unwrap() } else { self.den.clone() };
        QRat::new(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &QRat {
    type Output = QRat;
    /// Panics on a zero divisor; use [`QRat::checked_div`] to surface the
    /// domain error instead.
    fn div(self, rhs: &QRat) -> QRat {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QRat {
            type Output = QRat;
            fn $method(self, rhs: QRat) -> QRat {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QRat> for QRat {
            type Output = QRat;
            fn $method(self, rhs: &QRat) -> QRat {
                (&self).$method(rhs)
            }
        }
        impl $trait<QRat> for &QRat {
            type Output = QRat;
            fn $method(self, rhs: QRat) -> QRat {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}
