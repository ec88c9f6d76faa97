//! q-combinatorics primitives and the classical (q = 1) Euler reference
//! sequence.

use crate::poly::QPoly;
use crate::ratfunc::QRat;
use crate::{BigInt, BigRational};
use num_traits::{One, Zero};

/// `[n]_q = 1 + q + ... + q^{n-1}`; `[0]_q = 0`.
///
/// Implemented as the summed polynomial form, so integer arguments never
/// divide.
pub fn q_bracket(n: usize) -> QPoly {
    QPoly::from_coeffs(vec![BigRational::one(); n])
}

/// `[n]_{-q} = 1 - q + q^2 - ...` as an element of ℚ(q).
pub fn q_bracket_neg(n: usize) -> QRat {
    let coeffs = (0..n)
        .map(|k| {
            if k % 2 == 0 {
                BigRational::one()
            } else {
                -BigRational::one()
            }
        })
        .collect();
    QRat::from_poly(QPoly::from_coeffs(coeffs))
}

/// The bracket-shift law `[n+1]_q = 1 + q[n]_q`, returned as the two sides
/// for checking.
pub fn bracket_shift(n: usize) -> (QPoly, QPoly) {
    let lhs = q_bracket(n + 1);
    let rhs = &QPoly::one() + &(&QPoly::var() * &q_bracket(n));
    (lhs, rhs)
}

/// Pascal triangle of exact binomial coefficients, built bottom-up and
/// immutable afterwards.
#[derive(Debug, Clone)]
pub struct Binomials {
    rows: Vec<Vec<BigInt>>,
}

impl Binomials {
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut row = vec![BigInt::one(); n + 1];
            for k in 1..n {
                row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
            }
            rows.push(row);
        }
        Self { rows }
    }

    /// `C(n, k)`; panics when `n` exceeds the built size or `k > n`.
    pub fn get(&self, n: usize, k: usize) -> &BigInt {
        &self.rows[n][k]
    }

    pub fn get_rational(&self, n: usize, k: usize) -> BigRational {
        BigRational::from_integer(self.get(n, k).clone())
    }
}

/// Classical Euler numbers `E_n = E_n(0)`, the q = 1 limit targets.
#[derive(Debug, Clone)]
pub struct ClassicalEulerTable {
    values: Vec<BigRational>,
}

impl ClassicalEulerTable {
    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn get(&self, n: usize) -> &BigRational {
        &self.values[n]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `E_0 = 1`, and for n >= 1 the recurrence `sum_l C(n,l) E_l + E_n = 0`,
/// i.e. the coefficients of `2/(e^t + 1)` scaled by n!.
pub fn classical_euler(n_max: usize) -> ClassicalEulerTable {
    let binom = Binomials::new(n_max);
    let mut values = vec![BigRational::one()];
    let two = BigRational::from_integer(2.into());
    for n in 1..=n_max {
        let mut s = BigRational::zero();
        for (l, e) in values.iter().enumerate() {
            s += binom.get_rational(n, l) * e;
        }
        values.push(-s / &two);
    }
    ClassicalEulerTable { values }
}
