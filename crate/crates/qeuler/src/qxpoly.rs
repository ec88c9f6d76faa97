//! Bivariate polynomials in the formal symbols `X` and `Q` over ℚ(q).
//!
//! `X` stands for the q-bracket `[x]_q` and `Q` for the exponential `q^x`;
//! substituting a nonnegative integer `x` turns both into concrete elements
//! of ℚ(q). This is the symbolic value domain of the q-Euler and Carlitz
//! q-Bernoulli polynomials, whose umbral expansions live in exactly this
//! `X^i Q^j` basis.

use crate::qnumbers::q_bracket;
use crate::poly::QPoly;
use crate::ratfunc::QRat;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent pair: `(i, j)` represents `X^i Q^j`.
pub type Exponents = (u32, u32);

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QXPoly {
    terms: BTreeMap<Exponents, QRat>,
}

impl QXPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: QRat) -> Self {
        let mut p = Self::zero();
        p.add_term(0, 0, c);
        p
    }

    /// Accumulate `c * X^i Q^j`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, i: u32, j: u32, c: QRat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((i, j)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let merged = e.get() + &c;
                if merged.is_zero() {
                    e.remove();
                } else {
                    e.insert(merged);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in deterministic `(i, j)` order; no stored coefficient is zero.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &QRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> QRat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(QRat::zero)
    }

    /// Substitute a nonnegative integer `x`: `X -> [x]_q`, `Q -> q^x`.
    pub fn substitute(&self, x: usize) -> QRat {
        let bracket = QRat::from_poly(q_bracket(x));
        // powers of [x]_q are reused across terms; q^{xj} stays a monomial
        let max_i = self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let mut bracket_pows = Vec::with_capacity(max_i as usize + 1);
        bracket_pows.push(QRat::one());
        for _ in 0..max_i {
            let next = bracket_pows.last().unwrap() * &bracket;
            bracket_pows.push(next);
        }
        let mut acc = QRat::zero();
        for (&(i, j), c) in &self.terms {
            let qx = QRat::from_poly(QPoly::monomial(num_traits::One::one(), x * j as usize));
            acc = &acc + &(&(c * &bracket_pows[i as usize]) * &qx);
        }
        acc
    }
}

impl fmt::Display for QXPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest X power first, then by Q power
        let mut first = true;
        for (&(i, j), c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut parts: Vec<String> = Vec::new();
            if !c.is_one() || (i, j) == (0, 0) {
                parts.push(format!("({c})"));
            }
            match i {
                0 => {}
                1 => parts.push("X".into()),
                _ => parts.push(format!("X^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("Q".into()),
                _ => parts.push(format!("Q^{j}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::QPoly;

    fn rat(num: &[i64], den: &[i64]) -> QRat {
        QRat::new(QPoly::from_int_coeffs(num), QPoly::from_int_coeffs(den))
    }

    #[test]
    fn zero_coefficients_are_never_stored() {
        let mut p = QXPoly::zero();
        p.add_term(1, 0, QRat::one());
        p.add_term(1, 0, -QRat::one());
        assert!(p.is_zero());
        p.add_term(2, 1, QRat::zero());
        assert!(p.is_zero());
    }

    #[test]
    fn substitution_at_zero_keeps_only_pure_q_terms() {
        // X^i -> 0 for i >= 1 (since [0]_q = 0), Q^j -> 1
        let mut p = QXPoly::zero();
        p.add_term(2, 1, QRat::from_int(5));
        p.add_term(0, 3, QRat::from_int(7));
        p.add_term(0, 0, QRat::from_int(-2));
        assert_eq!(p.substitute(0), QRat::from_int(5 * 0 + 7 - 2));
    }

    #[test]
    fn substitution_mirrors_first_euler_polynomial() {
        // X - (q/(1+q^2)) Q at x = 1 gives 1/(1+q^2)
        let mut p = QXPoly::zero();
        p.add_term(1, 0, QRat::one());
        p.add_term(0, 1, -rat(&[0, 1], &[1, 0, 1]));
        let v = p.substitute(1);
        assert_eq!(v, rat(&[1], &[1, 0, 1]));
    }

    #[test]
    fn substitution_handles_bracket_powers() {
        // X^2 at x = 3 is (1 + q + q^2)^2
        let mut p = QXPoly::zero();
        p.add_term(2, 0, QRat::one());
        let expected = QRat::from_poly(QPoly::from_int_coeffs(&[1, 1, 1]).pow(2));
        assert_eq!(p.substitute(3), expected);
    }

    #[test]
    fn display_is_deterministic() {
        let mut p = QXPoly::zero();
        p.add_term(1, 0, QRat::one());
        p.add_term(0, 1, rat(&[0, -1], &[1, 0, 1]));
        assert_eq!(p.to_string(), "X + ((-q)/(q^2 + 1))*Q");
    }
}
