//! Univariate resultants and discriminants of multivariate polynomials.
//!
//! The resultant of `f` and `g` with respect to `v` is the determinant of
//! their Sylvester matrix in `v` (rows of `f` first, then rows of `g`);
//! entries are polynomials in the remaining variables. Small matrices go
//! through fraction-free Bareiss elimination; large ones go through the
//! subresultant polynomial remainder sequence, which produces the identical
//! value. Results keep the determinant's sign, they are not normalised.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::Polynomial;
use crate::variable::{Variable, VariableOrdering};

/// Above this Sylvester dimension `resultant` switches from the Bareiss
/// determinant to the subresultant remainder sequence. Both routes compute
/// the same polynomial; the sequence scales much better.
const BAREISS_MAX_DIM: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResultantError {
    ZeroInput,
    BothConstantIn(String),
}

impl fmt::Display for ResultantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResultantError::ZeroInput => f.write_str("resultant of the zero polynomial"),
            ResultantError::BothConstantIn(v) => {
                write!(f, "both polynomials are constant in `{v}`")
            }
        }
    }
}

/// Options for the Bareiss determinant. `compress_every = Some(k)` strips
/// the integer content of the remaining rows after every `k` elimination
/// steps and restarts the elimination; the stripped factors and the pivot
/// correction are reapplied at the end, so the result is unchanged.
#[derive(Debug, Clone, Default)]
pub struct BareissOptions {
    pub compress_every: Option<usize>,
}

/// The Sylvester matrix of `f` and `g` with respect to one variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylvesterMatrix {
    dim: usize,
    entries: Vec<Polynomial>,
}

impl SylvesterMatrix {
    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Polynomial]> {
        self.entries.chunks(self.dim)
    }

    pub fn determinant(&self, opts: &BareissOptions) -> Polynomial {
        let ordering = match self.entries.first() {
            Some(e) => Arc::clone(e.ordering()),
            None => panic!("empty Sylvester matrix"),
        };
        let rows: Vec<Vec<Polynomial>> = self
            .entries
            .chunks(self.dim)
            .map(|r| r.to_vec())
            .collect();
        bareiss(rows, &ordering, opts)
    }
}

/// Builds the `(deg_v f + deg_v g)`-dimensional Sylvester matrix; rows of
/// `f` coefficients come first.
pub fn sylvester(
    f: &Polynomial,
    g: &Polynomial,
    v: &Variable,
) -> Result<SylvesterMatrix, ResultantError> {
    if f.is_zero() || g.is_zero() {
        return Err(ResultantError::ZeroInput);
    }
    let df = f.degree_in(v).expect("nonzero") as usize;
    let dg = g.degree_in(v).expect("nonzero") as usize;
    if df == 0 && dg == 0 {
        return Err(ResultantError::BothConstantIn(String::from(v.name())));
    }
    let ordering = f.ordering();
    let dim = df + dg;
    let zero = Polynomial::zero(ordering);
    let mut entries = alloc::vec![zero; dim * dim];

    // descending coefficient lists
    let fc: Vec<Polynomial> = f.coefficients_in(v).into_iter().rev().collect();
    let gc: Vec<Polynomial> = g.coefficients_in(v).into_iter().rev().collect();
    for row in 0..dg {
        for (k, c) in fc.iter().enumerate() {
            entries[row * dim + row + k] = c.clone();
        }
    }
    for row in 0..df {
        for (k, c) in gc.iter().enumerate() {
            entries[(dg + row) * dim + row + k] = c.clone();
        }
    }
    Ok(SylvesterMatrix { dim, entries })
}

/// The resultant of `f` and `g` with respect to `v`.
///
/// If one input is constant (nonzero) in `v`, the result is that constant
/// raised to the degree of the other input, matching the determinant
/// convention on degenerate Sylvester matrices.
pub fn resultant(
    f: &Polynomial,
    g: &Polynomial,
    v: &Variable,
) -> Result<Polynomial, ResultantError> {
    let (df, dg) = degrees(f, g, v)?;
    if df == 0 {
        return Ok(f.pow(dg as u32));
    }
    if dg == 0 {
        return Ok(g.pow(df as u32));
    }
    if df + dg <= BAREISS_MAX_DIM {
        Ok(sylvester(f, g, v)?.determinant(&BareissOptions::default()))
    } else {
        Ok(prs_resultant(f, g, v, df, dg))
    }
}

/// The resultant computed through the subresultant polynomial remainder
/// sequence. Equal to [`resultant`] on every input; kept as an independent
/// cross-check path.
pub fn subresultant_prs(
    f: &Polynomial,
    g: &Polynomial,
    v: &Variable,
) -> Result<Polynomial, ResultantError> {
    let (df, dg) = degrees(f, g, v)?;
    if df == 0 {
        return Ok(f.pow(dg as u32));
    }
    if dg == 0 {
        return Ok(g.pow(df as u32));
    }
    Ok(prs_resultant(f, g, v, df, dg))
}

/// `disc_v(f) = (-1)^(d(d-1)/2) * res_v(f, df/dv) / lc_v(f)`.
///
/// A polynomial of degree 1 in `v` has discriminant 1.
pub fn discriminant(f: &Polynomial, v: &Variable) -> Result<Polynomial, ResultantError> {
    if f.is_zero() {
        return Err(ResultantError::ZeroInput);
    }
    let d = f.degree_in(v).expect("nonzero");
    if d == 0 {
        return Err(ResultantError::BothConstantIn(String::from(v.name())));
    }
    if d == 1 {
        return Ok(Polynomial::one(f.ordering()));
    }
    let res = resultant(f, &f.derivative(v), v)?;
    let lc = f.leading_coefficient_in(v);
    let quot = res
        .exact_div(&lc)
        .expect("the leading coefficient divides res(f, f')");
    // (-1)^(d(d-1)/2) is -1 exactly when d = 2 or 3 mod 4
    if matches!(d % 4, 2 | 3) {
        Ok(quot.neg_ref())
    } else {
        Ok(quot)
    }
}

fn degrees(
    f: &Polynomial,
    g: &Polynomial,
    v: &Variable,
) -> Result<(usize, usize), ResultantError> {
    if f.is_zero() || g.is_zero() {
        return Err(ResultantError::ZeroInput);
    }
    let df = f.degree_in(v).expect("nonzero") as usize;
    let dg = g.degree_in(v).expect("nonzero") as usize;
    if df == 0 && dg == 0 {
        return Err(ResultantError::BothConstantIn(String::from(v.name())));
    }
    Ok((df, dg))
}

// ---------------------------------------------------------------------------
// Bareiss fraction-free elimination
// ---------------------------------------------------------------------------

fn bareiss(
    mut m: Vec<Vec<Polynomial>>,
    ordering: &Arc<VariableOrdering>,
    opts: &BareissOptions,
) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one(ordering);
    }
    let mut negated = false;
    let mut prev = Polynomial::one(ordering);
    for k in 0..n - 1 {
        if let Some(every) = opts.compress_every {
            if every > 0 && k > 0 && k % every == 0 {
                let d = compress_and_restart(&m, k, &prev, ordering, opts);
                return if negated { d.neg_ref() } else { d };
            }
        }
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negated = !negated;
                }
                None => return Polynomial::zero(ordering),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = Polynomial::zero(ordering);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negated {
        det.neg_ref()
    } else {
        det
    }
}

/// Content compression checkpoint: strip the integer content of every
/// remaining row, restart the elimination on the compressed block, and put
/// the stripped factors and pivot correction back. Uses the identity
/// `det(block) = prev^(n-k-1) * det(M)` for the bottom-right block left by
/// `k` Bareiss steps.
fn compress_and_restart(
    m: &[Vec<Polynomial>],
    k: usize,
    prev: &Polynomial,
    ordering: &Arc<VariableOrdering>,
    opts: &BareissOptions,
) -> Polynomial {
    let n = m.len();
    let mut factor = BigInt::one();
    let mut block: Vec<Vec<Polynomial>> = Vec::with_capacity(n - k);
    for row in &m[k..] {
        let mut content = BigInt::zero();
        for e in &row[k..] {
            for (_, c) in e.terms() {
                content = content.gcd(c);
                if content.is_one() {
                    break;
                }
            }
            if content.is_one() {
                break;
            }
        }
        if content.is_zero() {
            return Polynomial::zero(ordering);
        }
        let inv = Polynomial::constant(ordering, content.clone());
        factor *= content;
        block.push(
            row[k..]
                .iter()
                .map(|e| e.exact_div(&inv).expect("row content divides"))
                .collect(),
        );
    }
    let d = bareiss(block, ordering, opts);
    let numerator = d.scale(&factor);
    numerator
        .exact_div(&prev.pow((n - k - 1) as u32))
        .expect("pivot correction divides exactly")
}

// ---------------------------------------------------------------------------
// Subresultant polynomial remainder sequence
// ---------------------------------------------------------------------------

/// Dense view of a polynomial as coefficients with respect to one variable;
/// the coefficients live in the remaining variables.
struct VPoly {
    coeffs: Vec<Polynomial>,
}

impl VPoly {
    fn from_poly(p: &Polynomial, v: &Variable) -> VPoly {
        let mut coeffs = p.coefficients_in(v);
        while coeffs.last().is_some_and(Polynomial::is_zero) {
            coeffs.pop();
        }
        VPoly { coeffs }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn deg(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    fn lc(&self) -> &Polynomial {
        self.coeffs.last().expect("nonzero")
    }

    fn constant(&self) -> &Polynomial {
        debug_assert_eq!(self.coeffs.len(), 1);
        &self.coeffs[0]
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Polynomial::is_zero) {
            self.coeffs.pop();
        }
    }

    fn scale(&self, c: &Polynomial) -> VPoly {
        VPoly { coeffs: self.coeffs.iter().map(|k| k * c).collect() }
    }

    /// `self - shift(other) * c` where `shift` moves `other` up by `k`.
    fn sub_shifted_scaled(&self, other: &VPoly, k: usize, c: &Polynomial) -> VPoly {
        let len = self.coeffs.len().max(other.coeffs.len() + k);
        let ordering = Arc::clone(
            self.coeffs
                .first()
                .or_else(|| other.coeffs.first())
                .expect("one operand nonzero")
                .ordering(),
        );
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            let a = self.coeffs.get(i);
            let b = if i >= k { other.coeffs.get(i - k) } else { None };
            let term = match (a, b) {
                (Some(a), Some(b)) => a - &(b * c),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => (b * c).neg_ref(),
                (None, None) => Polynomial::zero(&ordering),
            };
            coeffs.push(term);
        }
        let mut out = VPoly { coeffs };
        out.trim();
        out
    }

    fn exact_div_coeff(&self, d: &Polynomial) -> VPoly {
        VPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.exact_div(d).expect("subresultant division is exact"))
                .collect(),
        }
    }
}

/// Pseudo-remainder `prem(a, b) = rem(lc(b)^(deg a - deg b + 1) * a, b)`.
fn prem(a: &VPoly, b: &VPoly) -> VPoly {
    let da = a.deg();
    let db = b.deg();
    debug_assert!(da >= db);
    let lb = b.lc().clone();
    let mut r = VPoly { coeffs: a.coeffs.clone() };
    let mut e = (da - db + 1) as u32;
    while !r.is_zero() && r.deg() >= db {
        let dr = r.deg();
        let lr = r.lc().clone();
        // r = r*lc(b) - lr * v^(dr-db) * b
        r = r.scale(&lb).sub_shifted_scaled(b, dr - db, &lr);
        // the leading terms cancel exactly
        debug_assert!(r.is_zero() || r.deg() < dr);
        e -= 1;
    }
    if e > 0 {
        r = r.scale(&lb.pow(e));
    }
    r
}

/// Resultant via the subresultant PRS; inputs have positive degree in `v`.
fn prs_resultant(f: &Polynomial, g: &Polynomial, v: &Variable, df: usize, dg: usize) -> Polynomial {
    let ordering = Arc::clone(f.ordering());
    let (a, b, swapped) = if df >= dg {
        (VPoly::from_poly(f, v), VPoly::from_poly(g, v), false)
    } else {
        (VPoly::from_poly(g, v), VPoly::from_poly(f, v), true)
    };
    let mut res = subresultant_s0(a, b, &ordering);
    // res(f, g) = (-1)^(df*dg) res(g, f)
    if swapped && df % 2 == 1 && dg % 2 == 1 {
        res = res.neg_ref();
    }
    res
}

/// The degree-0 subresultant (= the resultant, sign included) of `a`, `b`
/// with `deg a >= deg b >= 1`.
fn subresultant_s0(
    a: VPoly,
    b: VPoly,
    ordering: &Arc<VariableOrdering>,
) -> Polynomial {
    let mut r_prev = a;
    let mut r_cur = b;
    let mut delta = r_prev.deg() - r_cur.deg();
    // beta_1 = (-1)^(delta+1); psi tracks the signed divisor sequence and h
    // the classical unsigned pseudo-leading-coefficient sequence
    let mut beta = if delta.is_multiple_of(2) {
        Polynomial::int(ordering, -1)
    } else {
        Polynomial::one(ordering)
    };
    let mut psi = Polynomial::int(ordering, -1);
    let mut h = Polynomial::one(ordering);
    loop {
        if r_cur.deg() == 0 {
            // r_cur is the defective subresultant of nominal index
            // deg(r_prev)-1; adjust down to S_0 = c^e / h^(e-1).
            let e = r_prev.deg();
            let c = r_cur.constant().clone();
            if e == 1 {
                return c;
            }
            let num = c.pow(e as u32);
            let den = h.pow((e - 1) as u32);
            return num.exact_div(&den).expect("final subresultant adjustment is exact");
        }
        let r = prem(&r_prev, &r_cur);
        if r.is_zero() {
            // nonconstant common divisor
            return Polynomial::zero(ordering);
        }
        let r_next = r.exact_div_coeff(&beta);
        // psi_{i+1} = (-lc)^delta / psi^(delta-1), h likewise without signs
        if delta > 0 {
            let lc = r_cur.lc().clone();
            let neg_lc = lc.neg_ref();
            if delta == 1 {
                psi = neg_lc;
                h = lc;
            } else {
                psi = neg_lc
                    .pow(delta as u32)
                    .exact_div(&psi.pow((delta - 1) as u32))
                    .expect("psi update is exact");
                h = lc
                    .pow(delta as u32)
                    .exact_div(&h.pow((delta - 1) as u32))
                    .expect("h update is exact");
            }
        }
        r_prev = r_cur;
        r_cur = r_next;
        delta = r_prev.deg() - r_cur.deg();
        beta = &r_prev.lc().neg_ref() * &psi.pow(delta as u32);
    }
}
