//! Exact polynomial square roots over the integers.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::poly::Polynomial;

/// Returns `q` with `q^2 = p` and positive leading coefficient when `p` is a
/// perfect square in the integer polynomial ring; `None` otherwise.
///
/// Works variable by variable: the coefficients of the highest occurring
/// variable are solved top-down, each step either dividing exactly or
/// refuting squareness, with a full verification multiply at the end.
pub fn perfect_square_root(p: &Polynomial) -> Option<Polynomial> {
    if p.is_zero() {
        return Some(p.clone());
    }
    let q = square_root_rec(p)?;
    debug_assert_eq!(&(&q * &q), p);
    if q.leading_coefficient().is_some_and(Signed::is_negative) {
        Some(q.neg_ref())
    } else {
        Some(q)
    }
}

fn square_root_rec(p: &Polynomial) -> Option<Polynomial> {
    let used = p.used_variable_indices();
    let Some(&top) = used.first() else {
        // constant
        let c = p.as_constant().expect("constant");
        let r = integer_square_root(&c)?;
        return Some(Polynomial::constant(p.ordering(), r));
    };
    let d = p.degree_in_index(top).expect("nonzero") as usize;
    if !d.is_multiple_of(2) {
        return None;
    }
    let m = d / 2;
    let coeffs = p.coefficients_in_index(top);
    debug_assert_eq!(coeffs.len(), d + 1);
    let ordering = p.ordering();
    let v = ordering.get(top as usize).expect("index valid").clone();

    let mut q = alloc::vec![Polynomial::zero(ordering); m + 1];
    q[m] = square_root_rec(&coeffs[d])?;
    let two_qm = q[m].scale(&BigInt::from(2));
    for k in ((m)..d).rev() {
        // p_k = 2 q_m q_{k-m} + sum of q_i q_j with i+j = k, k-m < i,j < m
        let mut s = coeffs[k].clone();
        let lo = k - m + 1;
        let hi = k / 2;
        for i in lo..=hi {
            let j = k - i;
            if j >= m {
                continue;
            }
            let prod = &q[i] * &q[j];
            s = if i == j {
                &s - &prod
            } else {
                &s - &prod.scale(&BigInt::from(2))
            };
        }
        q[k - m] = s.exact_div(&two_qm).ok()?;
    }
    let candidate = Polynomial::from_coefficients_in(ordering, &v, &q);
    if &(&candidate * &candidate) == p {
        Some(candidate)
    } else {
        None
    }
}

fn integer_square_root(c: &BigInt) -> Option<BigInt> {
    if c.is_negative() {
        return None;
    }
    let r = c.sqrt();
    if &(&r * &r) == c {
        Some(r)
    } else {
        None
    }
}
