//! Internal dense univariate polynomials over the integers.
//!
//! The public API works on [`Polynomial`]; this module is the workhorse for
//! the univariate analysis algorithms (squarefree decomposition, Sturm
//! sequences, factorization). Coefficients ascend by exponent and the top
//! coefficient is never zero.

use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::variable::VariableOrdering;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct UniPoly {
    pub coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> UniPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: BigInt) -> UniPoly {
        UniPoly::from_coeffs(alloc::vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    pub fn lc(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero")
    }

    /// Interprets a [`Polynomial`] as univariate. Returns the coefficient
    /// vector and the index of its variable (`None` when constant), or
    /// `None` when two or more variables occur.
    pub fn from_polynomial(p: &Polynomial) -> Option<(UniPoly, Option<u32>)> {
        let used = p.used_variable_indices();
        if used.len() > 1 {
            return None;
        }
        let var = used.first().copied();
        match var {
            None => {
                let c = p.as_constant().expect("constant");
                Some((UniPoly::from_coeffs(alloc::vec![c]), None))
            }
            Some(idx) => {
                let deg = p.degree_in_index(idx).expect("nonzero") as usize;
                let mut coeffs = alloc::vec![BigInt::zero(); deg + 1];
                for (m, c) in p.terms() {
                    coeffs[m.exponent(idx) as usize] = c.clone();
                }
                Some((UniPoly::from_coeffs(coeffs), Some(idx)))
            }
        }
    }

    pub fn to_polynomial(
        &self,
        ordering: &Arc<VariableOrdering>,
        var: Option<u32>,
    ) -> Polynomial {
        match var {
            Some(idx) => Polynomial::from_terms(
                ordering,
                self.coeffs
                    .iter()
                    .enumerate()
                    .map(|(e, c)| (Monomial::power(idx, e as u32), c.clone())),
            ),
            None => {
                debug_assert!(self.coeffs.len() <= 1);
                Polynomial::constant(
                    ordering,
                    self.coeffs.first().cloned().unwrap_or_else(BigInt::zero),
                )
            }
        }
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            coeffs.push(a - b);
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|k| k * c).collect() }
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Positive gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Content carrying the sign of the leading coefficient, and the
    /// primitive part with positive leading coefficient.
    pub fn content_and_primitive(&self) -> (BigInt, UniPoly) {
        debug_assert!(!self.is_zero());
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        let prim = UniPoly {
            coeffs: self.coeffs.iter().map(|k| k / &c).collect(),
        };
        (c, prim)
    }

    pub fn primitive_part(&self) -> UniPoly {
        self.content_and_primitive().1
    }

    /// Exact division over the integers; `None` when not exact.
    pub fn exact_div(&self, d: &UniPoly) -> Option<UniPoly> {
        assert!(!d.is_zero(), "division by zero");
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        if self.deg() < d.deg() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let qlen = self.deg() - d.deg() + 1;
        let mut q = alloc::vec![BigInt::zero(); qlen];
        let dl = d.lc();
        for k in (0..qlen).rev() {
            let top = rem[k + d.deg()].clone();
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(dl);
            if !r.is_zero() {
                return None;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                let prod = dc * &c;
                rem[k + i] -= prod;
            }
            q[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(UniPoly::from_coeffs(q))
    }

    /// Pseudo-remainder `rem(lc(d)^(deg self - deg d + 1) * self, d)`.
    pub fn prem(&self, d: &UniPoly) -> UniPoly {
        debug_assert!(!d.is_zero());
        debug_assert!(!self.is_zero() && self.deg() >= d.deg());
        let dl = d.lc().clone();
        let mut r = self.clone();
        let mut e = (self.deg() - d.deg() + 1) as u32;
        while !r.is_zero() && r.deg() >= d.deg() {
            let k = r.deg() - d.deg();
            let lr = r.lc().clone();
            // r = r*dl - lr * x^k * d
            let mut coeffs = alloc::vec![BigInt::zero(); r.coeffs.len()];
            for (i, c) in r.coeffs.iter().enumerate() {
                coeffs[i] = c * &dl;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                coeffs[k + i] -= c * &lr;
            }
            r = UniPoly::from_coeffs(coeffs);
            e -= 1;
        }
        if e > 0 {
            r = r.scale(&dl.pow(e));
        }
        r
    }

    /// Primitive positive-lc gcd. A single modular coprimality certificate
    /// settles the (overwhelmingly common) trivial case cheaply; otherwise
    /// the primitive remainder sequence runs exactly.
    pub fn gcd_primitive(a: &UniPoly, b: &UniPoly) -> UniPoly {
        if a.is_zero() {
            return if b.is_zero() { UniPoly::zero() } else { b.primitive_part() };
        }
        if b.is_zero() {
            return a.primitive_part();
        }
        if a.deg() > 0 && b.deg() > 0 && coprime_certificate(a, b) {
            return UniPoly::constant(BigInt::one());
        }
        let (mut f, mut g) = if a.deg() >= b.deg() {
            (a.primitive_part(), b.primitive_part())
        } else {
            (b.primitive_part(), a.primitive_part())
        };
        loop {
            if g.deg() == 0 {
                return UniPoly::constant(BigInt::one());
            }
            let r = f.prem(&g);
            if r.is_zero() {
                return g.primitive_part();
            }
            f = g;
            g = r.primitive_part();
            if f.deg() < g.deg() {
                core::mem::swap(&mut f, &mut g);
            }
        }
    }

    /// Sign of the value at the rational `num/den`, `den > 0`:
    /// the sign of `sum c_i num^i den^(n-i)`.
    pub fn sign_at_rational(&self, num: &BigInt, den: &BigInt) -> i8 {
        debug_assert!(den.is_positive());
        if self.is_zero() {
            return 0;
        }
        let n = self.deg();
        let mut acc = BigInt::zero();
        let mut num_pow = BigInt::one();
        let mut den_pows = Vec::with_capacity(n + 1);
        let mut dp = BigInt::one();
        for _ in 0..=n {
            den_pows.push(dp.clone());
            dp *= den;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c * &num_pow * &den_pows[n - i];
            }
            num_pow *= num;
        }
        sign_of(&acc)
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

/// True when some small prime certifies that `gcd(a, b) = 1` over the
/// rationals: for `p` not dividing `lc(a)`, the degree of the gcd can only
/// grow under reduction mod `p`, so a constant modular gcd is a proof.
fn coprime_certificate(a: &UniPoly, b: &UniPoly) -> bool {
    use crate::analysis::modp::{next_prime, reduce_mod_p, PrimeField};
    let mut p = 3u64;
    for _ in 0..12 {
        if (a.lc() % BigInt::from(p)).is_zero() {
            p = next_prime(p);
            continue;
        }
        let field = PrimeField::new(p);
        let ap = reduce_mod_p(&a.coeffs, &field);
        let bp = reduce_mod_p(&b.coeffs, &field);
        if !bp.is_zero() {
            let g = ap.gcd(&bp, &field);
            if !g.is_zero() && g.deg() == 0 {
                return true;
            }
        }
        p = next_prime(p);
    }
    false
}

pub(crate) fn sign_of(v: &BigInt) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn up(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn conversion_round_trip() {
        let ord = VariableOrdering::from_names(&["z", "y", "x"]).unwrap();
        let p = parse("x^4 + 2*x^3 + x^2 - 1", &ord).unwrap();
        let (u, var) = UniPoly::from_polynomial(&p).unwrap();
        assert_eq!(var, Some(2));
        assert_eq!(u, up(&[-1, 0, 1, 2, 1]));
        assert_eq!(u.to_polynomial(&ord, var), p);

        let c = parse("-7", &ord).unwrap();
        let (u, var) = UniPoly::from_polynomial(&c).unwrap();
        assert_eq!(var, None);
        assert_eq!(u.to_polynomial(&ord, var), c);

        let multi = parse("x + y", &ord).unwrap();
        assert!(UniPoly::from_polynomial(&multi).is_none());
    }

    #[test]
    fn exact_division_and_gcd() {
        let f = up(&[-1, 0, 1]); // x^2 - 1
        let g = up(&[1, 1]); // x + 1
        assert_eq!(f.exact_div(&g), Some(up(&[-1, 1])));
        assert_eq!(up(&[1, 0, 1]).exact_div(&g), None);

        let a = up(&[-1, 0, 1]); // (x-1)(x+1)
        let b = up(&[-2, 1, 1]); // (x-1)(x+2)
        assert_eq!(UniPoly::gcd_primitive(&a, &b), up(&[-1, 1]));
        assert_eq!(UniPoly::gcd_primitive(&a, &UniPoly::zero()), a);
        // coprime
        assert_eq!(
            UniPoly::gcd_primitive(&up(&[1, 0, 1]), &up(&[3, 1])),
            up(&[1])
        );
    }

    #[test]
    fn rational_sign_evaluation() {
        let f = up(&[-2, 0, 1]); // x^2 - 2
        assert_eq!(f.sign_at_rational(&BigInt::from(1), &BigInt::from(1)), -1);
        assert_eq!(f.sign_at_rational(&BigInt::from(3), &BigInt::from(2)), 1);
        assert_eq!(up(&[0, 1]).sign_at_rational(&BigInt::from(0), &BigInt::from(1)), 0);
    }
}
