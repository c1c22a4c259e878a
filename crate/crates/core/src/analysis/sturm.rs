//! Exact real-root counting with Sturm sequences.
//!
//! Signs at the infinite endpoints come from leading-coefficient parity, and
//! signs at rational endpoints from denominator-cleared integer evaluation,
//! so no approximate arithmetic is involved anywhere.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::analysis::univariate::{sign_of, UniPoly};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SturmError {
    ZeroPolynomial,
    NotUnivariate,
    NotSquarefree,
}

impl fmt::Display for SturmError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SturmError::ZeroPolynomial => f.write_str("Sturm count of the zero polynomial"),
            SturmError::NotUnivariate => f.write_str("Sturm count needs a univariate polynomial"),
            SturmError::NotSquarefree => {
                f.write_str("Sturm count needs a squarefree polynomial")
            }
        }
    }
}

/// One end of a root-counting interval.
#[derive(Debug, Clone, PartialEq)]
pub enum Endpoint {
    NegativeInfinity,
    Rational(BigRational),
    PositiveInfinity,
}

impl Endpoint {
    pub fn integer(v: i64) -> Endpoint {
        Endpoint::Rational(BigRational::from_integer(BigInt::from(v)))
    }

    fn cmp_endpoint(&self, other: &Endpoint) -> Ordering {
        use Endpoint::*;
        match (self, other) {
            (NegativeInfinity, NegativeInfinity) => Ordering::Equal,
            (PositiveInfinity, PositiveInfinity) => Ordering::Equal,
            (NegativeInfinity, _) => Ordering::Less,
            (_, NegativeInfinity) => Ordering::Greater,
            (PositiveInfinity, _) => Ordering::Greater,
            (_, PositiveInfinity) => Ordering::Less,
            (Rational(a), Rational(b)) => a.cmp(b),
        }
    }
}

/// Counts the distinct real roots of the squarefree polynomial `p` in the
/// half-open interval `(lo, hi]`.
pub fn sturm_real_roots(
    p: &Polynomial,
    lo: &Endpoint,
    hi: &Endpoint,
) -> Result<usize, SturmError> {
    if p.is_zero() {
        return Err(SturmError::ZeroPolynomial);
    }
    let (u, _) = UniPoly::from_polynomial(p).ok_or(SturmError::NotUnivariate)?;
    if u.deg() == 0 {
        return Ok(0);
    }
    let du = u.derivative();
    if UniPoly::gcd_primitive(&u, &du).deg() > 0 {
        return Err(SturmError::NotSquarefree);
    }
    if lo.cmp_endpoint(hi) != Ordering::Less {
        return Ok(0);
    }
    let chain = sturm_chain(&u, &du);
    let v_lo = sign_variations(&chain, lo);
    let v_hi = sign_variations(&chain, hi);
    debug_assert!(v_lo >= v_hi);
    Ok(v_lo.saturating_sub(v_hi))
}

/// The Sturm chain: `p, p', then negated remainders`, every element reduced
/// to its primitive part (positive constant multiples do not change sign
/// variations).
fn sturm_chain(p: &UniPoly, dp: &UniPoly) -> Vec<UniPoly> {
    let mut chain = Vec::new();
    chain.push(p.primitive_part_keep_sign());
    if dp.is_zero() {
        return chain;
    }
    chain.push(dp.primitive_part_keep_sign());
    loop {
        let a = &chain[chain.len() - 2];
        let b = &chain[chain.len() - 1];
        if b.deg() == 0 {
            break;
        }
        let r = a.prem(b);
        if r.is_zero() {
            break;
        }
        // prem scaled by lc(b)^(delta+1); flip so the net multiplier of the
        // true remainder is positive, then negate for the Sturm recurrence
        let delta = a.deg() - b.deg();
        let positive_multiplier = !(b.lc().is_negative() && (delta + 1) % 2 == 1);
        let next = if positive_multiplier { r.neg() } else { r };
        chain.push(next.primitive_part_keep_sign());
    }
    chain
}

fn sign_variations(chain: &[UniPoly], at: &Endpoint) -> usize {
    let signs: Vec<i8> = chain
        .iter()
        .map(|q| match at {
            Endpoint::NegativeInfinity => {
                let s = sign_of(q.lc());
                if q.deg() % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
            Endpoint::PositiveInfinity => sign_of(q.lc()),
            Endpoint::Rational(r) => {
                q.sign_at_rational(r.numer(), r.denom())
            }
        })
        .collect();
    let mut count = 0;
    let mut prev: i8 = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

impl UniPoly {
    /// Primitive part that keeps the original sign (divides by the positive
    /// content only).
    fn primitive_part_keep_sign(&self) -> UniPoly {
        debug_assert!(!self.is_zero());
        let c = self.content();
        UniPoly::from_coeffs(self.coeffs.iter().map(|k| k / &c).collect())
    }
}
