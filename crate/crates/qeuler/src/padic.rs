//! Finite Riemann-sum approximants of the bosonic and fermionic p-adic
//! q-integrals, with valuation-based convergence certificates.
//!
//! Everything here is exact rational arithmetic: a sum at refinement level
//! `N` ranges over `0 <= x < p^N`, and convergence toward the exact q-Euler
//! (or Carlitz q-Bernoulli) value is measured by the p-adic valuation of the
//! deviation. A certificate passes when the valuation gaps are nondecreasing
//! in the level and the final gap reaches `N_max - 1`.

use crate::gcd::is_prime_u64;
use crate::{fmt_rational, BigInt, BigRational, Error, Result};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::json;
use std::fmt;

/// A p-adic valuation; `Infinite` is the valuation of zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    pub fn at_least(&self, bound: i64) -> bool {
        match self {
            Valuation::Finite(v) => *v >= bound,
            Valuation::Infinite => true,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use Valuation::*;
        match (self, other) {
            (Infinite, Infinite) => std::cmp::Ordering::Equal,
            (Infinite, Finite(_)) => std::cmp::Ordering::Greater,
            (Finite(_), Infinite) => std::cmp::Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

fn vp_int(x: &BigInt, p: u64) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut v = 0i64;
    let mut n = x.abs();
    loop {
        let (quot, rem) = n.div_rem(&p);
        if !rem.is_zero() {
            return Some(v);
        }
        v += 1;
        n = quot;
    }
}

/// `v_p(x) = v_p(num) - v_p(den)`; `Infinite` for zero.
pub fn vp(x: &BigRational, p: u64) -> Valuation {
    match vp_int(x.numer(), p) {
        None => Valuation::Infinite,
        Some(vn) => Valuation::Finite(vn - vp_int(x.denom(), p).unwrap_or(0)),
    }
}

/// Which q-integral a Riemann sum approximates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    /// Alternating fermionic sums with the `[2]_q / 2` prefactor.
    Fermionic,
    /// q-Volkenborn sums normalized by `[p^N]_q`.
    Bosonic,
}

impl Measure {
    pub fn as_str(&self) -> &'static str {
        match self {
            Measure::Fermionic => "fermionic",
            Measure::Bosonic => "bosonic",
        }
    }
}

/// A fixed odd prime together with a rational q satisfying `v_p(q - 1) >= 1`
/// and the maximum refinement depth.
#[derive(Debug, Clone)]
pub struct PrimeContext {
    p: u64,
    q_value: BigRational,
    n_max: u32,
}

impl PrimeContext {
    pub fn new(p: u64, q_value: BigRational, n_max: u32) -> Result<Self> {
        if p == 2 || !is_prime_u64(p) {
            return Err(Error::BadParameter(format!("p = {p} is not an odd prime")));
        }
        let close = vp(&(&q_value - BigRational::one()), p).at_least(1);
        if !close {
            return Err(Error::BadParameter(format!(
                "q = {} does not satisfy v_{p}(q - 1) >= 1",
                fmt_rational(&q_value)
            )));
        }
        if n_max == 0 {
            return Err(Error::BadParameter("refinement depth must be >= 1".into()));
        }
        Ok(Self { p, q_value, n_max })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q_value(&self) -> &BigRational {
        &self.q_value
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    fn terms(&self, level: u32) -> u64 {
        self.p.pow(level)
    }
}

/// `[x0]_q` at the context's q, the starting point for shifted brackets.
fn bracket_at(q: &BigRational, x0: usize) -> BigRational {
    let mut acc = BigRational::zero();
    let mut pow = BigRational::one();
    for _ in 0..x0 {
        acc += &pow;
        pow *= q;
    }
    acc
}

fn rational_pow(base: &BigRational, e: usize) -> BigRational {
    let mut acc = BigRational::one();
    let mut b = base.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

/// Bosonic level-N sum `(1/[p^N]_q) Σ_{x<p^N} q^x [x+x0]_q^m`, exact.
pub fn riemann_sum_mu_q(ctx: &PrimeContext, level: u32, moment: usize, shift: usize) -> BigRational {
    assert!(level >= 1 && level <= ctx.n_max, "level out of range");
    let q = &ctx.q_value;
    let mut bracket = bracket_at(q, shift);
    let mut qpow = BigRational::one();
    let mut acc = BigRational::zero();
    let mut norm = BigRational::zero();
    for _ in 0..ctx.terms(level) {
        acc += &qpow * rational_pow(&bracket, moment);
        norm += &qpow;
        bracket = BigRational::one() + q * bracket;
        qpow *= q;
    }
    acc / norm
}

/// Fermionic level-N sum `([2]_q/2) Σ_{x<p^N} (-1)^x q^x [x+x0]_q^m`, exact.
pub fn riemann_sum_mu_minus_q(
    ctx: &PrimeContext,
    level: u32,
    moment: usize,
    shift: usize,
) -> BigRational {
    assert!(level >= 1 && level <= ctx.n_max, "level out of range");
    let q = &ctx.q_value;
    let mut bracket = bracket_at(q, shift);
    let mut qpow = BigRational::one();
    let mut acc = BigRational::zero();
    let mut negative = false;
    for _ in 0..ctx.terms(level) {
        let term = &qpow * rational_pow(&bracket, moment);
        if negative {
            acc -= term;
        } else {
            acc += term;
        }
        bracket = BigRational::one() + q * bracket;
        qpow *= q;
        negative = !negative;
    }
    acc * (BigRational::one() + q) / BigRational::from_integer(2.into())
}

/// One refinement level of a certificate: the exact sum, the reference it
/// approaches, and the p-adic valuation of the deviation (`Infinite` marks
/// an exact match).
#[derive(Debug, Clone)]
pub struct PadicEstimate {
    pub level: u32,
    pub sum_value: BigRational,
    pub reference: BigRational,
    pub valuation_gap: Valuation,
}

/// Convergence certificate for one `(measure, moment, shift)` instance.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub p: u64,
    pub q_value: BigRational,
    pub measure: Measure,
    pub moment: usize,
    pub shift: usize,
    pub levels: Vec<PadicEstimate>,
    pub pass: bool,
}

impl Certificate {
    /// Pass rule: gaps nondecreasing in the level and final gap
    /// `>= N_max - 1`.
    pub fn from_estimates(
        ctx: &PrimeContext,
        measure: Measure,
        moment: usize,
        shift: usize,
        levels: Vec<PadicEstimate>,
    ) -> Self {
        let monotone = levels.windows(2).all(|w| w[0].valuation_gap <= w[1].valuation_gap);
        let final_ok = levels
            .last()
            .is_some_and(|e| e.valuation_gap.at_least(ctx.n_max as i64 - 1));
        Certificate {
            p: ctx.p,
            q_value: ctx.q_value.clone(),
            measure,
            moment,
            shift,
            pass: monotone && final_ok,
            levels,
        }
    }

    pub fn gaps(&self) -> Vec<Valuation> {
        self.levels.iter().map(|e| e.valuation_gap).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let levels: Vec<serde_json::Value> = self
            .levels
            .iter()
            .map(|e| match e.valuation_gap {
                Valuation::Finite(g) => json!({"N": e.level, "gap": g}),
                Valuation::Infinite => json!({"N": e.level, "gap": serde_json::Value::Null, "exact": true}),
            })
            .collect();
        json!({
            "p": self.p,
            "q": fmt_rational(&self.q_value),
            "moment": self.moment,
            "shift": self.shift,
            "measure": self.measure.as_str(),
            "levels": levels,
            "pass": self.pass,
        })
    }
}

/// Run the Riemann sums for `N = 1 .. N_max` against an exact reference.
///
/// The caller supplies the reference (`E_{m,q}(x0)` for the fermionic
/// measure, `β_{m,q}(x0)` for the bosonic one) evaluated at the context's q.
pub fn convergence_certificate(
    ctx: &PrimeContext,
    measure: Measure,
    moment: usize,
    shift: usize,
    target: &BigRational,
) -> Certificate {
    let levels = (1..=ctx.n_max)
        .map(|level| {
            let sum_value = match measure {
                Measure::Fermionic => riemann_sum_mu_minus_q(ctx, level, moment, shift),
                Measure::Bosonic => riemann_sum_mu_q(ctx, level, moment, shift),
            };
            let valuation_gap = vp(&(&sum_value - target), ctx.p);
            PadicEstimate {
                level,
                sum_value,
                reference: target.clone(),
                valuation_gap,
            }
        })
        .collect();
    Certificate::from_estimates(ctx, measure, moment, shift, levels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ctx(p: u64, q: i64, n_max: u32) -> PrimeContext {
        PrimeContext::new(p, brat(q, 1), n_max).unwrap()
    }

    #[test]
    fn vp_examples() {
        assert_eq!(vp(&brat(50, 1), 5), Valuation::Finite(2));
        assert_eq!(vp(&brat(1, 5), 5), Valuation::Finite(-1));
        assert_eq!(vp(&brat(0, 1), 7), Valuation::Infinite);
        assert_eq!(vp(&brat(-45, 8), 3), Valuation::Finite(2));
    }

    #[test]
    fn valuation_ordering() {
        assert!(Valuation::Infinite > Valuation::Finite(1_000_000));
        assert!(Valuation::Finite(2) > Valuation::Finite(1));
        assert!(Valuation::Infinite.at_least(123));
        assert!(!Valuation::Finite(2).at_least(3));
    }

    #[test]
    fn context_preconditions() {
        assert!(PrimeContext::new(5, brat(6, 1), 4).is_ok());
        assert!(PrimeContext::new(4, brat(5, 1), 4).is_err());
        assert!(PrimeContext::new(2, brat(3, 1), 4).is_err());
        // v_5(7 - 1) = 0
        assert!(PrimeContext::new(5, brat(7, 1), 4).is_err());
        // v_3(10 - 1) = 2 is fine
        assert!(PrimeContext::new(3, brat(10, 1), 4).is_ok());
        assert!(PrimeContext::new(5, brat(6, 1), 0).is_err());
    }

    #[test]
    fn bosonic_one_step_example() {
        // p = 3, q = 4, m = 2, N = 1: (0 + 4 + 25*16)/21 = 404/21
        let c = ctx(3, 4, 2);
        assert_eq!(riemann_sum_mu_q(&c, 1, 2, 0), brat(404, 21));
    }

    #[test]
    fn bosonic_moment_zero_is_exactly_one() {
        let c = ctx(5, 6, 3);
        for level in 1..=3 {
            assert_eq!(riemann_sum_mu_q(&c, level, 0, 0), brat(1, 1));
        }
    }

    #[test]
    fn fermionic_one_step_example() {
        // p = 5, q = 6, m = 1, N = 1: (7/2)(0 - 6 + 252 - 9288 + 335664)
        let c = ctx(5, 6, 1);
        let s = riemann_sum_mu_minus_q(&c, 1, 1, 0);
        assert_eq!(s, brat(1143177, 1));
        // residue check: S_1 and E_{1,6} = -6/37 agree mod 5
        assert!(vp(&(&s - brat(-6, 37)), 5).at_least(1));
    }

    #[test]
    fn fermionic_moment_zero_matches_geometric_closed_form() {
        // ([2]_q/2) * sum (-1)^x q^x over x < p^N is (1 + q^{p^N})/2 exactly
        let c = ctx(3, 4, 3);
        for level in 1..=3u32 {
            let s = riemann_sum_mu_minus_q(&c, level, 0, 0);
            let pn = 3u32.pow(level);
            let closed = (BigRational::one() + rational_pow(&brat(4, 1), pn as usize))
                / BigRational::from_integer(2.into());
            assert_eq!(s, closed, "level {level}");
        }
    }

    #[test]
    fn fermionic_certificate_frozen_gaps() {
        // gaps frozen from an independent exact run
        let c = ctx(5, 6, 4);
        let cert = convergence_certificate(&c, Measure::Fermionic, 1, 0, &brat(-6, 37));
        assert!(cert.pass);
        assert_eq!(
            cert.gaps(),
            vec![
                Valuation::Finite(1),
                Valuation::Finite(2),
                Valuation::Finite(3),
                Valuation::Finite(4)
            ]
        );
    }

    #[test]
    fn bosonic_certificate_frozen_gaps() {
        let c = ctx(5, 6, 4);
        let cert = convergence_certificate(&c, Measure::Bosonic, 1, 0, &brat(-1, 7));
        assert!(cert.pass);
        assert_eq!(
            cert.gaps(),
            vec![
                Valuation::Finite(1),
                Valuation::Finite(2),
                Valuation::Finite(3),
                Valuation::Finite(4)
            ]
        );
        // p = 3, q = 4, m = 2 jumps from 1 to 3 but stays monotone
        let c = ctx(3, 4, 4);
        let cert = convergence_certificate(&c, Measure::Bosonic, 2, 0, &brat(4, 105));
        assert!(cert.pass);
        assert_eq!(
            cert.gaps(),
            vec![
                Valuation::Finite(1),
                Valuation::Finite(3),
                Valuation::Finite(4),
                Valuation::Finite(5)
            ]
        );
    }

    #[test]
    fn bosonic_moment_zero_certificate_is_exact_everywhere() {
        let c = ctx(3, 4, 3);
        let cert = convergence_certificate(&c, Measure::Bosonic, 0, 0, &brat(1, 1));
        assert!(cert.pass);
        assert!(cert.gaps().iter().all(Valuation::is_infinite));
    }

    #[test]
    fn wrong_target_fails_without_panicking() {
        // aiming at the level-2 sum itself breaks monotonicity: the gap is
        // infinite at N = 2 and finite afterwards
        let c = ctx(5, 6, 3);
        let fake = riemann_sum_mu_minus_q(&c, 2, 1, 0);
        let cert = convergence_certificate(&c, Measure::Fermionic, 1, 0, &fake);
        assert!(!cert.pass);
        assert!(cert.levels[1].valuation_gap.is_infinite());
    }

    #[test]
    fn certificate_json_shape() {
        let c = ctx(5, 6, 2);
        let cert = convergence_certificate(&c, Measure::Fermionic, 1, 0, &brat(-6, 37));
        let j = cert.to_json();
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            r#"{"p":5,"q":"6","moment":1,"shift":0,"measure":"fermionic","levels":[{"N":1,"gap":1},{"N":2,"gap":2}],"pass":true}"#
        );
        let c = ctx(3, 4, 1);
        let cert = convergence_certificate(&c, Measure::Bosonic, 0, 0, &brat(1, 1));
        let j = serde_json::to_string(&cert.to_json()).unwrap();
        assert!(j.contains(r#"{"N":1,"gap":null,"exact":true}"#));
    }
}
