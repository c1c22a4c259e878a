//! Dense univariate arithmetic over a small prime field, private to the
//! factorization pipeline: distinct-degree splitting and Cantor-Zassenhaus
//! equal-degree splitting. The splitting randomness comes from a fixed-seed
//! xorshift generator, so results are deterministic.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

/// Coefficients ascending, reduced mod `p`, trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct PPoly {
    pub coeffs: Vec<u64>,
}

pub(crate) struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> PrimeField {
        debug_assert!((2..1 << 31).contains(&p));
        PrimeField { p }
    }

    #[cfg(test)]
    fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }
}

impl PPoly {
    pub fn zero() -> PPoly {
        PPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>) -> PPoly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PPoly { coeffs }
    }

    pub fn one() -> PPoly {
        PPoly { coeffs: alloc::vec![1] }
    }

    pub fn x() -> PPoly {
        PPoly { coeffs: alloc::vec![0, 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    pub fn lc(&self) -> u64 {
        *self.coeffs.last().expect("nonzero")
    }

    #[cfg(test)]
    pub fn add(&self, other: &PPoly, field: &PrimeField) -> PPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            coeffs.push(field.add(a, b));
        }
        PPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &PPoly, field: &PrimeField) -> PPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            coeffs.push(field.sub(a, b));
        }
        PPoly::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &PPoly, field: &PrimeField) -> PPoly {
        if self.is_zero() || other.is_zero() {
            return PPoly::zero();
        }
        let mut acc = alloc::vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] += (a as u128) * (b as u128);
            }
        }
        PPoly::from_coeffs(acc.into_iter().map(|c| (c % field.p as u128) as u64).collect())
    }

    pub fn scale(&self, c: u64, field: &PrimeField) -> PPoly {
        PPoly::from_coeffs(self.coeffs.iter().map(|&k| field.mul(k, c)).collect())
    }

    pub fn monic(&self, field: &PrimeField) -> PPoly {
        if self.is_zero() {
            return PPoly::zero();
        }
        self.scale(field.inv(self.lc()), field)
    }

    /// Remainder of `self` by `d`.
    pub fn rem(&self, d: &PPoly, field: &PrimeField) -> PPoly {
        debug_assert!(!d.is_zero());
        let dd = d.deg();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return PPoly::from_coeffs(r);
        }
        let dinv = field.inv(d.lc());
        for k in (dd..r.len()).rev() {
            let c = r[k];
            if c == 0 {
                continue;
            }
            let q = field.mul(c, dinv);
            r[k] = 0;
            for (i, &dc) in d.coeffs.iter().enumerate().take(dd) {
                let idx = k - dd + i;
                r[idx] = field.sub(r[idx], field.mul(q, dc));
            }
        }
        PPoly::from_coeffs(r)
    }

    pub fn divrem(&self, d: &PPoly, field: &PrimeField) -> (PPoly, PPoly) {
        debug_assert!(!d.is_zero());
        let dd = d.deg();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (PPoly::zero(), PPoly::from_coeffs(r));
        }
        let mut q = alloc::vec![0u64; r.len() - dd];
        let dinv = field.inv(d.lc());
        for k in (dd..r.len()).rev() {
            let c = r[k];
            if c == 0 {
                continue;
            }
            let qc = field.mul(c, dinv);
            q[k - dd] = qc;
            r[k] = 0;
            for (i, &dc) in d.coeffs.iter().enumerate().take(dd) {
                let idx = k - dd + i;
                r[idx] = field.sub(r[idx], field.mul(qc, dc));
            }
        }
        (PPoly::from_coeffs(q), PPoly::from_coeffs(r))
    }

    pub fn gcd(&self, other: &PPoly, field: &PrimeField) -> PPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b, field);
            a = b;
            b = r;
        }
        a.monic(field)
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g`, `g`
    /// monic.
    pub fn egcd(&self, other: &PPoly, field: &PrimeField) -> (PPoly, PPoly, PPoly) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = PPoly::one();
        let mut s1 = PPoly::zero();
        let mut t0 = PPoly::zero();
        let mut t1 = PPoly::one();
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1, field);
            let new_s = s0.sub(&q.mul(&s1, field), field);
            let new_t = t0.sub(&q.mul(&t1, field), field);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = new_s;
            t0 = t1;
            t1 = new_t;
        }
        if r0.is_zero() {
            return (PPoly::zero(), PPoly::zero(), PPoly::zero());
        }
        let norm = field.inv(r0.lc());
        (
            r0.scale(norm, field),
            s0.scale(norm, field),
            t0.scale(norm, field),
        )
    }

    pub fn derivative(&self, field: &PrimeField) -> PPoly {
        if self.coeffs.len() <= 1 {
            return PPoly::zero();
        }
        PPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| field.mul(c, (i as u64) % field.p))
                .collect(),
        )
    }

    pub fn pow_mod(&self, e: &BigUint, modulus: &PPoly, field: &PrimeField) -> PPoly {
        let mut result = PPoly::one();
        let mut base = self.rem(modulus, field);
        let bits = e.bits();
        for i in 0..bits {
            if (e >> i) & BigUint::one() == BigUint::one() {
                result = result.mul(&base, field).rem(modulus, field);
            }
            if i + 1 < bits {
                base = base.mul(&base, field).rem(modulus, field);
            }
        }
        result
    }
}

pub(crate) fn next_prime(after: u64) -> u64 {
    let mut c = after + 2;
    loop {
        if is_prime_u64(c) {
            return c;
        }
        c += 2;
    }
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Deterministic xorshift64* stream.
pub(crate) struct XorShift {
    state: u64,
}

impl XorShift {
    pub fn new(seed: u64) -> XorShift {
        XorShift { state: seed | 1 }
    }

    pub fn next(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_f491_4f6c_dd1d)
    }
}

/// Distinct-degree split of a monic squarefree `f`: pairs of
/// (product of all irreducible factors of degree `d`, `d`), ascending in `d`.
pub(crate) fn distinct_degree(f: &PPoly, field: &PrimeField) -> Vec<(PPoly, usize)> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = PPoly::x().rem(&rest, field);
    let mut d = 0usize;
    let p = BigUint::from(field.p);
    while !rest.is_zero() && rest.deg() >= 1 {
        d += 1;
        if rest.deg() < 2 * d {
            // what is left is irreducible
            out.push((rest.clone(), rest.deg()));
            break;
        }
        h = h.pow_mod(&p, &rest, field);
        let hx = h.sub(&PPoly::x(), field);
        let g = hx.gcd(&rest, field);
        if !g.is_zero() && g.deg() > 0 {
            out.push((g.clone(), d));
            rest = rest.divrem(&g, field).0;
            h = h.rem(&rest, field);
        }
    }
    out
}

/// Cantor-Zassenhaus equal-degree splitting: factors a monic squarefree
/// product of degree-`d` irreducibles. Requires an odd prime.
pub(crate) fn equal_degree(
    f: &PPoly,
    d: usize,
    field: &PrimeField,
    rng: &mut XorShift,
    out: &mut Vec<PPoly>,
) {
    if f.deg() == d {
        out.push(f.clone());
        return;
    }
    let exponent = (BigUint::from(field.p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        // random polynomial of degree < deg f
        let len = f.deg();
        let mut coeffs = Vec::with_capacity(len);
        for _ in 0..len {
            coeffs.push(rng.next() % field.p);
        }
        let r = PPoly::from_coeffs(coeffs);
        if r.is_zero() || r.deg() == 0 {
            continue;
        }
        let g = r.gcd(f, field);
        if g.deg() > 0 && g.deg() < f.deg() {
            // lucky split
            let (q, _) = f.divrem(&g, field);
            equal_degree(&g, d, field, rng, out);
            equal_degree(&q, d, field, rng, out);
            return;
        }
        let s = r.pow_mod(&exponent, f, field);
        let s1 = s.sub(&PPoly::one(), field);
        if s1.is_zero() {
            continue;
        }
        let g = s1.gcd(f, field);
        if g.deg() > 0 && g.deg() < f.deg() {
            let (q, _) = f.divrem(&g, field);
            equal_degree(&g, d, field, rng, out);
            equal_degree(&q, d, field, rng, out);
            return;
        }
    }
}

/// Full factorization of a monic squarefree `f` over the field; factors are
/// monic, sorted by (degree, coefficients).
pub(crate) fn factor_squarefree_modp(f: &PPoly, field: &PrimeField) -> Vec<PPoly> {
    let mut rng = XorShift::new(0x1757_5eed_0f0a_u64 ^ field.p);
    let mut out = Vec::new();
    for (block, d) in distinct_degree(f, field) {
        equal_degree(&block, d, field, &mut rng, &mut out);
    }
    out.sort_by(|a, b| {
        a.deg()
            .cmp(&b.deg())
            .then_with(|| a.coeffs.iter().rev().cmp(b.coeffs.iter().rev()))
    });
    out
}

/// Reduction of an integer polynomial, given positively-reduced residues.
pub(crate) fn reduce_mod_p(coeffs: &[num_bigint::BigInt], field: &PrimeField) -> PPoly {
    use num_integer::Integer;
    let p = num_bigint::BigInt::from(field.p);
    PPoly::from_coeffs(
        coeffs
            .iter()
            .map(|c| c.mod_floor(&p).to_u64().expect("reduced below p"))
            .collect(),
    )
}
