//! Multifactor Hensel lifting: takes the monic factorization of a squarefree
//! polynomial modulo a prime and lifts it to a prime power, factor tree plus
//! quadratic steps.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::analysis::modp::{PPoly, PrimeField};
use crate::analysis::univariate::UniPoly;

/// Coefficients reduced into `[0, m)`, ascending, trimmed.
type MPoly = Vec<BigInt>;

fn trim(mut coeffs: MPoly) -> MPoly {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

fn reduce(coeffs: &[BigInt], m: &BigInt) -> MPoly {
    trim(coeffs.iter().map(|c| c.mod_floor(m)).collect())
}

fn mod_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> MPoly {
    let len = a.len().max(b.len());
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let mut c = a.get(i).cloned().unwrap_or_else(BigInt::zero)
            + b.get(i).cloned().unwrap_or_else(BigInt::zero);
        if &c >= m {
            c -= m;
        }
        out.push(c);
    }
    trim(out)
}

fn mod_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> MPoly {
    let len = a.len().max(b.len());
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let mut c = a.get(i).cloned().unwrap_or_else(BigInt::zero)
            - b.get(i).cloned().unwrap_or_else(BigInt::zero);
        if c.is_negative() {
            c += m;
        }
        out.push(c);
    }
    trim(out)
}

fn mod_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> MPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut acc = alloc::vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            acc[i + j] += ca * cb;
        }
    }
    trim(acc.into_iter().map(|c| c.mod_floor(m)).collect())
}

/// Division by a monic divisor, everything mod `m`.
fn mod_divrem_monic(a: &[BigInt], d: &[BigInt], m: &BigInt) -> (MPoly, MPoly) {
    debug_assert!(d.last().is_some_and(One::is_one), "divisor must be monic");
    let dd = d.len() - 1;
    let mut r: Vec<BigInt> = a.to_vec();
    if r.len() <= dd {
        return (Vec::new(), trim(r));
    }
    let mut q = alloc::vec![BigInt::zero(); r.len() - dd];
    for k in (dd..r.len()).rev() {
        let c = core::mem::replace(&mut r[k], BigInt::zero());
        if c.is_zero() {
            continue;
        }
        for (i, dc) in d.iter().enumerate().take(dd) {
            let idx = k - dd + i;
            let v = (&r[idx] - &c * dc).mod_floor(m);
            r[idx] = v;
        }
        q[k - dd] = c;
    }
    (trim(q), trim(r))
}

fn from_ppoly(p: &PPoly) -> MPoly {
    p.coeffs.iter().map(|&c| BigInt::from(c)).collect()
}

/// One quadratic Hensel step: given `f = g*h (mod m)` with `g`, `h` monic and
/// `s*g + t*h = 1 (mod m)`, returns the lifted quadruple valid mod
/// `m_next` (any modulus dividing `m^2` that `m` divides).
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m_next: &BigInt,
) -> (MPoly, MPoly, MPoly, MPoly) {
    let g = reduce(g, m_next);
    let h = reduce(h, m_next);
    let s = reduce(s, m_next);
    let t = reduce(t, m_next);

    let e = mod_sub(f, &mod_mul(&g, &h, m_next), m_next);
    let (q, r) = mod_divrem_monic(&mod_mul(&s, &e, m_next), &h, m_next);
    let g_new = mod_add(&mod_add(&g, &mod_mul(&t, &e, m_next), m_next), &mod_mul(&q, &g, m_next), m_next);
    let h_new = mod_add(&h, &r, m_next);

    let one = alloc::vec![BigInt::one()];
    let b = mod_sub(
        &mod_add(&mod_mul(&s, &g_new, m_next), &mod_mul(&t, &h_new, m_next), m_next),
        &one,
        m_next,
    );
    let (c, d) = mod_divrem_monic(&mod_mul(&s, &b, m_next), &h_new, m_next);
    let s_new = mod_sub(&s, &d, m_next);
    let t_new = mod_sub(
        &t,
        &mod_add(&mod_mul(&t, &b, m_next), &mod_mul(&c, &g_new, m_next), m_next),
        m_next,
    );
    (g_new, h_new, s_new, t_new)
}

/// Lifts the monic mod-`p` factors of the primitive squarefree `f` to monic
/// factors modulo `p^k` where `p^k = modulus`; the product of the lifted
/// factors is `f` made monic mod `p^k`. Factor order is preserved.
pub(crate) fn lift_factors(
    f: &UniPoly,
    factors: &[PPoly],
    field: &PrimeField,
    modulus: &BigInt,
    exponent: u32,
) -> Vec<MPoly> {
    // monic image of f mod p^k
    let lc_inv = invert_mod(f.lc(), modulus);
    let fm: MPoly = trim(
        f.coeffs
            .iter()
            .map(|c| (c * &lc_inv).mod_floor(modulus))
            .collect(),
    );
    debug_assert!(fm.last().is_some_and(One::is_one));

    let mut out = Vec::with_capacity(factors.len());
    lift_rec(&fm, factors, field, modulus, exponent, &mut out);
    out
}

fn lift_rec(
    target: &[BigInt],
    factors: &[PPoly],
    field: &PrimeField,
    modulus: &BigInt,
    exponent: u32,
    out: &mut Vec<MPoly>,
) {
    if factors.len() == 1 {
        out.push(target.to_vec());
        return;
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let u0 = product_modp(left, field);
    let w0 = product_modp(right, field);
    let (gcd, s0, t0) = u0.egcd(&w0, field);
    debug_assert_eq!(gcd, PPoly::one(), "lift requires coprime halves");

    let mut u = from_ppoly(&u0);
    let mut w = from_ppoly(&w0);
    let mut s = from_ppoly(&s0);
    let mut t = from_ppoly(&t0);

    let p_big = BigInt::from(field.p);
    let mut k = 1u32;
    while k < exponent {
        let k_next = (2 * k).min(exponent);
        let m_next = p_big.pow(k_next);
        let f_next = reduce(target, &m_next);
        let (u2, w2, s2, t2) = hensel_step(&f_next, &u, &w, &s, &t, &m_next);
        u = u2;
        w = w2;
        s = s2;
        t = t2;
        k = k_next;
    }
    debug_assert_eq!(
        mod_mul(&u, &w, modulus),
        reduce(target, modulus),
        "lifted halves multiply back to the target"
    );
    lift_rec(&u, left, field, modulus, exponent, out);
    lift_rec(&w, right, field, modulus, exponent, out);
}

fn product_modp(factors: &[PPoly], field: &PrimeField) -> PPoly {
    let mut acc = PPoly::one();
    for f in factors {
        acc = acc.mul(f, field);
    }
    acc
}

pub(crate) fn invert_mod(v: &BigInt, m: &BigInt) -> BigInt {
    let e = v.extended_gcd(m);
    debug_assert!(e.gcd.is_one(), "value must be invertible");
    e.x.mod_floor(m)
}

/// The symmetric representative in `(-m/2, m/2]`.
pub(crate) fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let half = m >> 1;
    if c > &half {
        c - m
    } else {
        c.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::modp::reduce_mod_p;

    fn up(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn lifts_a_simple_split() {
        // f = (x - 1)(x + 3) = x^2 + 2x - 3, factored mod 5
        let f = up(&[-3, 2, 1]);
        let field = PrimeField::new(5);
        let fp = reduce_mod_p(&f.coeffs, &field);
        let factors = crate::analysis::modp::factor_squarefree_modp(&fp, &field);
        assert_eq!(factors.len(), 2);
        let exponent = 4;
        let modulus = BigInt::from(5i64.pow(4));
        let lifted = lift_factors(&f, &factors, &field, &modulus, exponent);
        assert_eq!(lifted.len(), 2);
        let prod = mod_mul(&lifted[0], &lifted[1], &modulus);
        assert_eq!(prod, reduce(&f.coeffs, &modulus));
        // symmetric representatives recover the true factors
        let roots: Vec<BigInt> = lifted
            .iter()
            .map(|g| symmetric(&g[0], &modulus))
            .collect();
        let mut consts: Vec<i64> = roots
            .iter()
            .map(|r| {
                use num_traits::ToPrimitive;
                r.to_i64().unwrap()
            })
            .collect();
        consts.sort_unstable();
        assert_eq!(consts, alloc::vec![-1, 3]);
    }

    #[test]
    fn lifts_many_factors() {
        // (x-1)(x-2)(x-3)(x-4) mod 7 lifted to 7^6
        let f = up(&[24, -50, 35, -10, 1]);
        let field = PrimeField::new(7);
        let fp = reduce_mod_p(&f.coeffs, &field);
        let factors = crate::analysis::modp::factor_squarefree_modp(&fp, &field);
        assert_eq!(factors.len(), 4);
        let modulus = BigInt::from(7i64.pow(6));
        let lifted = lift_factors(&f, &factors, &field, &modulus, 6);
        let mut prod = alloc::vec![BigInt::one()];
        for g in &lifted {
            prod = mod_mul(&prod, g, &modulus);
        }
        assert_eq!(prod, reduce(&f.coeffs, &modulus));
    }
}
