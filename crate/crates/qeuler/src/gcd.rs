//! Exact polynomial gcd over ℚ[q].
//!
//! The driver [`poly_gcd`] clears contents and runs a small-prime modular
//! algorithm (gcd images in GF(p), CRT reconstruction with Brown's
//! leading-coefficient normalization, verification by exact division). A
//! coprime image at a good prime certifies a trivial gcd immediately, which
//! is the common case when rational functions are already near canonical
//! form. The primitive Euclidean remainder sequence [`poly_gcd_prs`] is kept
//! both as the fallback for pathological prime sequences and as an
//! independent oracle for the modular path.
//!
//! Results are normalized to the primitive integer associate with positive
//! leading coefficient; callers treating the gcd as an element of ℚ[q] may
//! rescale freely.

use crate::poly::QPoly;
use crate::{BigInt, BigRational};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const MAX_MODULAR_PRIMES: usize = 64;

/// Gcd of two polynomials over ℚ[q], as the primitive integer associate
/// with positive leading coefficient. `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() {
        return b.primitive_part();
    }
    if b.is_zero() {
        return a.primitive_part();
    }
    if a.degree() == Some(0) || b.degree() == Some(0) {
        return QPoly::one();
    }
    let (ai, _) = a.primitive_integer_parts();
    let (bi, _) = b.primitive_integer_parts();
    match modular_gcd(&ai, &bi) {
        Some(g) => g,
        None => poly_gcd_prs(a, b),
    }
}

/// Primitive Euclidean remainder sequence; exact but slower than the
/// modular path on large coprime inputs.
pub fn poly_gcd_prs(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() {
        return b.primitive_part();
    }
    if b.is_zero() {
        return a.primitive_part();
    }
    let (mut r0, mut r1) = (a.primitive_part(), b.primitive_part());
    if r0.degree() < r1.degree() {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_zero() {
        // Rational remainder has the same primitive part as the
        // pseudo-remainder, so plain division suffices here.
        let rem = r0.div_rem(&r1).1;
        r0 = r1;
        r1 = rem.primitive_part();
    }
    if r0.degree() == Some(0) {
        QPoly::one()
    } else {
        r0
    }
}

fn modular_gcd(a: &[BigInt], b: &[BigInt]) -> Option<QPoly> {
    let lc_gcd = a.last().unwrap().gcd(b.last().unwrap());
    let a_poly = int_to_qpoly(a);
    let b_poly = int_to_qpoly(b);

    let mut primes = PrimeStream::new();
    let mut used = 0usize;
    let mut best_deg = usize::MAX;
    let mut modulus = BigInt::one();
    let mut residues: Vec<BigInt> = Vec::new();
    let mut last_candidate: Option<Vec<BigInt>> = None;

    while used < MAX_MODULAR_PRIMES {
        let p = primes.next();
        used += 1;
        if reduce_coeff(a.last().unwrap(), p) == 0 || reduce_coeff(b.last().unwrap(), p) == 0 {
            continue; // prime divides a leading coefficient
        }
        let ap = reduce_poly(a, p);
        let bp = reduce_poly(b, p);
        let gp = gf_gcd(ap, bp, p);
        let deg = gp.len() - 1;
        if deg == 0 {
            // A coprime image at a good prime certifies gcd = 1.
            return Some(QPoly::one());
        }
        if deg > best_deg {
            continue; // unlucky prime
        }
        let scaled = gf_scale(&gp, reduce_coeff(&lc_gcd, p), p);
        if deg < best_deg {
            best_deg = deg;
            modulus = BigInt::from(p);
            residues = scaled.iter().map(|&c| BigInt::from(c)).collect();
            last_candidate = None;
        } else {
            crt_merge(&mut residues, &modulus, &scaled, p);
            modulus *= BigInt::from(p);
        }
        let candidate = symmetric_lift(&residues, &modulus);
        if last_candidate.as_ref() == Some(&candidate) {
            let g = int_to_qpoly(&candidate).primitive_part();
            if g.divides(&a_poly) && g.divides(&b_poly) {
                return Some(g);
            }
        }
        last_candidate = Some(candidate);
    }
    None
}

fn int_to_qpoly(coeffs: &[BigInt]) -> QPoly {
    QPoly::from_coeffs(coeffs.iter().cloned().map(BigRational::from_integer).collect())
}

fn reduce_coeff(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

fn reduce_poly(coeffs: &[BigInt], p: u64) -> Vec<u64> {
    let mut out: Vec<u64> = coeffs.iter().map(|c| reduce_coeff(c, p)).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn gf_scale(poly: &[u64], c: u64, p: u64) -> Vec<u64> {
    poly.iter().map(|&a| a * c % p).collect()
}

/// Monic gcd in GF(p)[q]; inputs need not be normalized, output is monic
/// and nonempty (inputs are nonzero by construction).
fn gf_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        gf_rem_in_place(&mut a, &b, p);
        std::mem::swap(&mut a, &mut b);
    }
    let inv = gf_inv(*a.last().unwrap(), p);
    gf_scale(&a, inv, p)
}

fn gf_rem_in_place(a: &mut Vec<u64>, b: &[u64], p: u64) {
    let db = b.len() - 1;
    let inv_lb = gf_inv(b[db], p);
    while a.len() > db {
        let k = a.len() - 1;
        let f = a[k] * inv_lb % p;
        if f != 0 {
            for (j, &bc) in b.iter().enumerate().take(db) {
                let idx = k - db + j;
                a[idx] = (a[idx] + p - f * bc % p) % p;
            }
        }
        a.pop();
        while a.last() == Some(&0) {
            a.pop();
        }
    }
}

fn gf_inv(a: u64, p: u64) -> u64 {
    gf_pow(a, p - 2, p)
}

fn gf_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn crt_merge(residues: &mut Vec<BigInt>, modulus: &BigInt, new: &[u64], p: u64) {
    let pb = BigInt::from(p);
    let m_mod_p = reduce_coeff(modulus, p);
    let m_inv = gf_inv(m_mod_p, p);
    residues.resize(new.len().max(residues.len()), BigInt::zero());
    for (i, r) in residues.iter_mut().enumerate() {
        let target = new.get(i).copied().unwrap_or(0);
        let cur = reduce_coeff(r, p);
        let delta = (target + p - cur) % p * m_inv % p;
        *r += modulus * BigInt::from(delta);
        debug_assert!(r.mod_floor(&pb).to_u64().unwrap() == target);
    }
}

fn symmetric_lift(residues: &[BigInt], modulus: &BigInt) -> Vec<BigInt> {
    let half = modulus / 2;
    residues
        .iter()
        .map(|r| if r > &half { r - modulus } else { r.clone() })
        .collect()
}

/// Deterministic descending stream of 31-bit primes.
struct PrimeStream {
    next: u64,
}

impl PrimeStream {
    fn new() -> Self {
        Self { next: (1 << 31) - 1 }
    }

    fn next(&mut self) -> u64 {
        loop {
            let c = self.next;
            self.next -= 2;
            if is_prime_u64(c) {
                return c;
            }
        }
    }
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 4 {
        return n > 1;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5u64;
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_int_coeffs(coeffs)
    }

    #[test]
    fn trivial_cases() {
        assert!(poly_gcd(&QPoly::zero(), &QPoly::zero()).is_zero());
        assert_eq!(poly_gcd(&QPoly::zero(), &p(&[0, 2])), p(&[0, 1]));
        assert_eq!(poly_gcd(&p(&[3]), &p(&[0, 1])), QPoly::one());
        assert_eq!(poly_gcd(&p(&[0, 4]), &p(&[6])), QPoly::one());
    }

    #[test]
    fn shared_factor_is_found() {
        // gcd((q^2-1)(q^3+2), (q-1)(q^3+2)) = (q-1)(q^3+2)
        let common = &p(&[-1, 1]) * &p(&[2, 0, 0, 1]);
        let a = &p(&[1, 1]) * &common;
        let g = poly_gcd(&a, &common);
        assert_eq!(g, common);
    }

    #[test]
    fn cyclotomic_style_factors() {
        // 1+q^3 = (1+q)(1-q+q^2); gcd with 1-q^2 = (1-q)(1+q) is 1+q
        let g = poly_gcd(&p(&[1, 0, 0, 1]), &p(&[1, 0, -1]));
        assert_eq!(g, p(&[1, 1]));
        assert_eq!(poly_gcd(&p(&[1, 0, 1]), &p(&[1, 1])), QPoly::one());
    }

    #[test]
    fn rational_contents_are_ignored() {
        let half = BigRational::new(1.into(), 2.into());
        let a = p(&[-1, 0, 1]).scale(&half);
        let b = p(&[-3, 3]);
        assert_eq!(poly_gcd(&a, &b), p(&[-1, 1]));
    }

    #[test]
    fn prs_matches_modular_on_known_products() {
        let g = p(&[1, 2, 0, 1]);
        let a = &p(&[-5, 1, 3]) * &g;
        let b = &p(&[7, 0, 2]) * &g;
        let m = poly_gcd(&a, &b);
        let e = poly_gcd_prs(&a, &b);
        assert_eq!(m, e);
        assert!(m.divides(&a) && m.divides(&b));
        assert!(g.divides(&m));
    }

    proptest! {
        #[test]
        fn modular_and_prs_agree(
            ca in proptest::collection::vec(-9i64..=9, 1..6),
            cb in proptest::collection::vec(-9i64..=9, 1..6),
            cg in proptest::collection::vec(-9i64..=9, 1..5),
        ) {
            let a = &p(&ca) * &p(&cg);
            let b = &p(&cb) * &p(&cg);
            let m = poly_gcd(&a, &b);
            let e = poly_gcd_prs(&a, &b);
            prop_assert_eq!(&m, &e);
            if !a.is_zero() && !b.is_zero() {
                prop_assert!(m.divides(&a));
                prop_assert!(m.divides(&b));
                if !p(&cg).is_zero() {
                    prop_assert!(p(&cg).primitive_part().divides(&m));
                }
            }
        }
    }
}
