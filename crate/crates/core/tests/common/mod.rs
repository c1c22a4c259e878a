//! Shared fixtures and generators for the integration test suites.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;

use iterres_core::monomial::Monomial;
use iterres_core::parse::parse;
use iterres_core::poly::Polynomial;
use iterres_core::variable::VariableOrdering;

pub fn ord_zyx() -> Arc<VariableOrdering> {
    VariableOrdering::from_names(&["z", "y", "x"]).unwrap()
}

pub fn ord_xyz() -> Arc<VariableOrdering> {
    VariableOrdering::from_names(&["x", "y", "z"]).unwrap()
}

pub fn ord_yx() -> Arc<VariableOrdering> {
    VariableOrdering::from_names(&["y", "x"]).unwrap()
}

pub fn ord_x() -> Arc<VariableOrdering> {
    VariableOrdering::from_names(&["x"]).unwrap()
}

pub fn p(text: &str, ord: &Arc<VariableOrdering>) -> Polynomial {
    parse(text, ord).unwrap()
}

/// The worked trivariate system under the z > y > x ordering.
pub fn sample_system_zyx() -> (Arc<VariableOrdering>, BTreeMap<String, Polynomial>) {
    let ord = ord_zyx();
    let mut m = BTreeMap::new();
    m.insert("f".to_string(), p("y^2 + z^2 + x + z - 1", &ord));
    m.insert("g".to_string(), p("-x^2 + y^2 + z^2 - 1", &ord));
    m.insert("h".to_string(), p("x^2 + y + z", &ord));
    (ord, m)
}

/// The same system under x > y > z.
pub fn sample_system_xyz() -> (Arc<VariableOrdering>, BTreeMap<String, Polynomial>) {
    let ord = ord_xyz();
    let mut m = BTreeMap::new();
    m.insert("f".to_string(), p("y^2 + z^2 + x + z - 1", &ord));
    m.insert("g".to_string(), p("-x^2 + y^2 + z^2 - 1", &ord));
    m.insert("h".to_string(), p("x^2 + y + z", &ord));
    (ord, m)
}

/// The three random degree-5 trivariate polynomials of the large worked
/// example, under z > y > x.
pub fn degree5_system() -> (Arc<VariableOrdering>, BTreeMap<String, Polynomial>) {
    let ord = ord_zyx();
    let mut m = BTreeMap::new();
    m.insert(
        "f".to_string(),
        p(
            "-34*x^2*z^3 - 20*y^5 + 7*x^2*y^2 - 43*y^3*z + 63*x + 16*z",
            &ord,
        ),
    );
    m.insert(
        "g".to_string(),
        p("13*x*z^4 - 27*z^4 - 21*x*y^2 + 30*y*z - 42*x - 81", &ord),
    );
    m.insert(
        "h".to_string(),
        p(
            "-65*x*z^4 + 13*z^5 + 30*x^3*z + 17*x*y^3 + 25*y*z + 78",
            &ord,
        ),
    );
    (ord, m)
}

/// Strategy for a random polynomial over the first `vars` variables of
/// `ord`, with per-variable exponents up to `max_exp`, up to `max_terms`
/// monomials, and coefficients in `[-cmax, cmax]`.
pub fn arb_poly(
    ord: Arc<VariableOrdering>,
    vars: usize,
    max_exp: u32,
    max_terms: usize,
    cmax: i64,
) -> impl Strategy<Value = Polynomial> {
    let term = (
        proptest::collection::vec(0..=max_exp, vars),
        -cmax..=cmax,
    );
    proptest::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        Polynomial::from_terms(
            &ord,
            terms.into_iter().map(|(exps, c)| {
                let pairs: Vec<(u32, u32)> = exps
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| (i as u32, e))
                    .collect();
                (Monomial::from_pairs(&pairs), BigInt::from(c))
            }),
        )
    })
}

pub fn arb_nonzero_poly(
    ord: Arc<VariableOrdering>,
    vars: usize,
    max_exp: u32,
    max_terms: usize,
    cmax: i64,
) -> impl Strategy<Value = Polynomial> {
    arb_poly(ord, vars, max_exp, max_terms, cmax)
        .prop_filter("nonzero", |q| !q.is_zero())
}

/// Descartes/bisection real-root isolation, an oracle independent of the
/// Sturm implementation.
pub mod oracle {
    use super::*;
    use num_traits::{Signed, Zero};
    use iterres_core::variable::Variable;

    // ---------------------------------------------------------------------------
    // Descartes/bisection real-root isolation oracle (independent of Sturm)
    // ---------------------------------------------------------------------------

    pub fn trim(mut c: Vec<BigInt>) -> Vec<BigInt> {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        c
    }

    fn binomial_table(n: usize) -> Vec<Vec<BigInt>> {
        let mut t = vec![vec![BigInt::from(1)]];
        for i in 1..=n {
            let prev = &t[i - 1];
            let mut row = vec![BigInt::from(1)];
            for j in 1..i {
                row.push(&prev[j - 1] + &prev[j]);
            }
            row.push(BigInt::from(1));
            t.push(row);
        }
        t
    }

    /// `p(x+1)` via binomial expansion.
    fn taylor_shift_1(c: &[BigInt]) -> Vec<BigInt> {
        let n = c.len();
        if n == 0 {
            return Vec::new();
        }
        let binom = binomial_table(n - 1);
        let mut out = vec![BigInt::from(0); n];
        for (i, ci) in c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, b) in binom[i].iter().enumerate() {
                out[j] += ci * b;
            }
        }
        trim(out)
    }

    fn sign_variations(c: &[BigInt]) -> usize {
        let mut count = 0;
        let mut prev = 0i8;
        for v in c {
            let s = if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            };
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

    /// Descartes bound for the open interval (0,1): variations of
    /// `(1+x)^n p(1/(1+x))`.
    fn descartes_bound_01(c: &[BigInt]) -> usize {
        let mut rev: Vec<BigInt> = c.to_vec();
        rev.reverse();
        sign_variations(&taylor_shift_1(&trim(rev)))
    }

    /// `sum c_i 2^(n-i)`, the numerator of `2^n p(1/2)`.
    fn value_at_half(c: &[BigInt]) -> BigInt {
        let n = c.len() - 1;
        let mut acc = BigInt::from(0);
        for (i, ci) in c.iter().enumerate() {
            acc += ci << (n - i);
        }
        acc
    }

    /// Exact division by `2x - 1` (valid when 1/2 is a root).
    fn divide_out_half_root(c: &[BigInt]) -> Vec<BigInt> {
        let n = c.len() - 1;
        let mut q = vec![BigInt::from(0); n];
        let mut carry = BigInt::from(0);
        // synthetic division from the top: c_k = 2*q_{k-1} - q_k
        for k in (1..=n).rev() {
            let qk = (&c[k] + &carry) / BigInt::from(2);
            carry = qk.clone();
            q[k - 1] = qk;
        }
        assert!((&c[0] + &carry).is_zero(), "1/2 is not a root");
        q
    }

    /// Number of distinct roots of squarefree `c` in the open interval (0,1);
    /// requires `c(0) != 0` and `c(1) != 0`.
    fn vca_count_01(c: &[BigInt]) -> usize {
        match descartes_bound_01(c) {
            0 => 0,
            1 => 1,
            _ => {
                let mut work: Vec<BigInt> = c.to_vec();
                let mut mid_root = 0;
                if value_at_half(&work).is_zero() {
                    work = divide_out_half_root(&work);
                    mid_root = 1;
                }
                let n = work.len() - 1;
                // left: 2^n p(x/2) maps (0,1) -> (0,1/2)
                let left: Vec<BigInt> = work
                    .iter()
                    .enumerate()
                    .map(|(i, ci)| ci << (n - i))
                    .collect();
                // right: shift of the left transform maps to (1/2,1)
                let right = taylor_shift_1(&left);
                mid_root + vca_count_01(&left) + vca_count_01(&right)
            }
        }
    }

    /// Distinct real roots of a squarefree integer polynomial, by Descartes
    /// isolation over a Cauchy root bound.
    pub fn count_real_roots_oracle(coeffs: &[BigInt]) -> usize {
        let mut c = trim(coeffs.to_vec());
        assert!(!c.is_empty());
        if c.len() == 1 {
            return 0;
        }
        let mut count = 0;
        if c[0].is_zero() {
            c.remove(0);
            count += 1;
            assert!(!c[0].is_zero(), "input must be squarefree");
            if c.len() == 1 {
                return count;
            }
        }
        let lc_abs = c.last().unwrap().abs();
        let max_abs = c.iter().map(|v| v.abs()).max().unwrap();
        let bound = BigInt::from(2) + max_abs / lc_abs;
        let n = c.len() - 1;
        // positive roots: p(bound * x) on (0,1)
        let mut pow = BigInt::from(1);
        let mut scaled: Vec<BigInt> = Vec::with_capacity(n + 1);
        let mut scaled_neg: Vec<BigInt> = Vec::with_capacity(n + 1);
        for (i, ci) in c.iter().enumerate() {
            scaled.push(ci * &pow);
            let v = ci * &pow;
            scaled_neg.push(if i % 2 == 1 { -v } else { v });
            pow *= &bound;
        }
        count += vca_count_01(&scaled);
        count += vca_count_01(&scaled_neg);
        count
    }

    pub fn coeff_vec(q: &Polynomial, v: &Variable) -> Vec<BigInt> {
        q.coefficients_in(v)
            .iter()
            .map(|c| c.as_constant().expect("univariate"))
            .collect()
    }

}
