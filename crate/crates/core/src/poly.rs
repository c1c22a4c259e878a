//! Sparse multivariate polynomials over arbitrary-precision integers.
//!
//! A [`Polynomial`] stores its terms in a map keyed by [`Monomial`], so no
//! zero coefficient and no zero exponent is ever represented. Each value
//! carries the [`VariableOrdering`] it was built against; term order,
//! rendering, and leading-term queries all follow the lexicographic order
//! induced by that ordering. Values are immutable after construction and all
//! operations are pure, so they can be shared freely across threads.

use alloc::borrow::ToOwned;
use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::monomial::Monomial;
use crate::variable::{Variable, VariableOrdering};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ordering: Arc<VariableOrdering>,
    terms: BTreeMap<Monomial, BigInt>,
}

/// Outcome classification for [`Polynomial::exact_div`]. `NotDivisible` is an
/// ordinary outcome, not a defect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DivisionError {
    DivisorZero,
    NotDivisible,
}

impl fmt::Display for DivisionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivisionError::DivisorZero => f.write_str("division by the zero polynomial"),
            DivisionError::NotDivisible => f.write_str("not exactly divisible"),
        }
    }
}

/// The operation is undefined on the zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroPolynomialError;

impl fmt::Display for ZeroPolynomialError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("undefined for the zero polynomial")
    }
}

impl Polynomial {
    pub fn zero(ordering: &Arc<VariableOrdering>) -> Self {
        Polynomial { ordering: Arc::clone(ordering), terms: BTreeMap::new() }
    }

    pub fn constant(ordering: &Arc<VariableOrdering>, value: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Monomial::unit(), value);
        }
        Polynomial { ordering: Arc::clone(ordering), terms }
    }

    pub fn one(ordering: &Arc<VariableOrdering>) -> Self {
        Self::constant(ordering, BigInt::one())
    }

    pub fn int(ordering: &Arc<VariableOrdering>, value: i64) -> Self {
        Self::constant(ordering, BigInt::from(value))
    }

    /// The polynomial consisting of the single variable `v`.
    ///
    /// Panics if `v` is not part of the ordering.
    pub fn variable(ordering: &Arc<VariableOrdering>, v: &Variable) -> Self {
        let idx = resolve(ordering, v);
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::variable(idx), BigInt::one());
        Polynomial { ordering: Arc::clone(ordering), terms }
    }

    /// Canonicalizing constructor: merges repeated monomials, drops zeros.
    pub fn from_terms<I>(ordering: &Arc<VariableOrdering>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut map: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            debug_assert!(
                m.exponents().iter().all(|&(v, _)| (v as usize) < ordering.len()),
                "monomial refers to a variable outside the ordering"
            );
            match map.entry(m) {
                Entry::Occupied(mut e) => {
                    *e.get_mut() += c;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
                Entry::Vacant(slot) => {
                    slot.insert(c);
                }
            }
        }
        Polynomial { ordering: Arc::clone(ordering), terms: map }
    }

    pub fn ordering(&self) -> &Arc<VariableOrdering> {
        &self.ordering
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.leading_term().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.leading_term().map(|(_, c)| c)
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&BigInt> {
        self.terms.get(m)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_unit)
    }

    /// `Some(c)` when the polynomial is the constant `c` (zero included).
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            Some(BigInt::zero())
        } else if self.terms.len() == 1 {
            self.terms
                .get(&Monomial::unit())
                .map(ToOwned::to_owned)
        } else {
            None
        }
    }

    /// Degree in `v`; `None` marks the zero polynomial, which has no degree.
    ///
    /// Panics if `v` is not part of the ordering.
    pub fn degree_in(&self, v: &Variable) -> Option<u32> {
        let idx = resolve(&self.ordering, v);
        self.degree_in_index(idx)
    }

    pub(crate) fn degree_in_index(&self, idx: u32) -> Option<u32> {
        if self.terms.is_empty() {
            return None;
        }
        Some(self.terms.keys().map(|m| m.exponent(idx)).max().unwrap_or(0))
    }

    /// Maximum total degree of a monomial; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        if self.terms.is_empty() {
            return None;
        }
        Some(self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0))
    }

    /// Indices of the variables that actually occur, ascending.
    pub fn used_variable_indices(&self) -> Vec<u32> {
        let mut seen: Vec<u32> = Vec::new();
        for m in self.terms.keys() {
            for &(v, _) in m.exponents() {
                if !seen.contains(&v) {
                    seen.push(v);
                }
            }
        }
        seen.sort_unstable();
        seen
    }

    pub fn neg_ref(&self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { ordering: Arc::clone(&self.ordering), terms }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ordering);
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        Polynomial { ordering: Arc::clone(&self.ordering), terms }
    }

    /// Multiplies by the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ordering);
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (k.mul(m), v * c))
            .collect();
        Polynomial { ordering: Arc::clone(&self.ordering), terms }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ordering);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact division in the integer polynomial ring: returns `q` with
    /// `self = divisor * q`, or `NotDivisible` when no such integer
    /// polynomial exists.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial, DivisionError> {
        self.assert_same_ordering(divisor);
        if divisor.is_zero() {
            return Err(DivisionError::DivisorZero);
        }
        let (dm, dc) = divisor.leading_term().expect("divisor is nonzero");
        let mut quotient: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        let mut rem = self.clone();
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = match dm.quotient_of(rm) {
                Some(m) => m,
                None => return Err(DivisionError::NotDivisible),
            };
            let (qc, r) = rc.div_rem(dc);
            if !r.is_zero() {
                return Err(DivisionError::NotDivisible);
            }
            rem = &rem - &divisor.mul_term(&qm, &qc);
            quotient.insert(qm, qc);
        }
        Ok(Polynomial { ordering: Arc::clone(&self.ordering), terms: quotient })
    }

    /// Formal partial derivative with respect to `v`.
    pub fn derivative(&self, v: &Variable) -> Polynomial {
        let idx = resolve(&self.ordering, v);
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(idx);
            if e == 0 {
                return None;
            }
            let mut pairs: Vec<(u32, u32)> = m
                .exponents()
                .iter()
                .copied()
                .map(|(w, f)| if w == idx { (w, f - 1) } else { (w, f) })
                .collect();
            pairs.retain(|&(_, f)| f > 0);
            Some((Monomial::from_pairs(&pairs), c * BigInt::from(e)))
        });
        Polynomial::from_terms(&self.ordering, terms)
    }

    /// Exact substitution `v := value`, fully expanded.
    pub fn substitute(&self, v: &Variable, value: &Polynomial) -> Polynomial {
        self.assert_same_ordering(value);
        let coeffs = self.coefficients_in(v);
        if coeffs.is_empty() {
            return Polynomial::zero(&self.ordering);
        }
        // Horner evaluation from the top coefficient down.
        let mut result = coeffs.last().expect("nonempty").clone();
        for c in coeffs.iter().rev().skip(1) {
            result = &(&result * value) + c;
        }
        result
    }

    /// Splits off the integer content. The content carries the sign, so the
    /// primitive part has a positive leading coefficient.
    pub fn content_and_primitive(&self) -> Result<(BigInt, Polynomial), ZeroPolynomialError> {
        if self.is_zero() {
            return Err(ZeroPolynomialError);
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.leading_coefficient().expect("nonzero").is_negative() {
            g = -g;
        }
        let primitive = self.exact_div(&Polynomial::constant(&self.ordering, g.clone()))
            .expect("content divides every coefficient");
        Ok((g, primitive))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Result<Polynomial, ZeroPolynomialError> {
        self.content_and_primitive().map(|(_, p)| p)
    }

    /// The top total-degree homogeneous component.
    pub fn leading_form(&self) -> Result<Polynomial, ZeroPolynomialError> {
        let d = self.total_degree().ok_or(ZeroPolynomialError)?;
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.total_degree() == d)
            .map(|(m, c)| (m.clone(), c.clone()));
        Ok(Polynomial::from_terms(&self.ordering, terms))
    }

    /// Degree-preserving homogenization by the fresh variable `fresh`, which
    /// must belong to the ordering but not occur in the polynomial.
    pub fn homogenize(&self, fresh: &Variable) -> Result<Polynomial, ZeroPolynomialError> {
        let idx = resolve(&self.ordering, fresh);
        let d = self.total_degree().ok_or(ZeroPolynomialError)?;
        assert!(
            self.degree_in_index(idx) == Some(0),
            "homogenization variable `{fresh}` already occurs"
        );
        let terms = self.terms.iter().map(|(m, c)| {
            (m.mul(&Monomial::power(idx, d - m.total_degree())), c.clone())
        });
        Ok(Polynomial::from_terms(&self.ordering, terms))
    }

    /// Coefficients with respect to `v`, ascending by exponent, each a
    /// polynomial in the remaining variables. Empty for the zero polynomial.
    pub fn coefficients_in(&self, v: &Variable) -> Vec<Polynomial> {
        let idx = resolve(&self.ordering, v);
        self.coefficients_in_index(idx)
    }

    pub(crate) fn coefficients_in_index(&self, idx: u32) -> Vec<Polynomial> {
        let deg = match self.degree_in_index(idx) {
            Some(d) => d,
            None => return Vec::new(),
        };
        let mut buckets: Vec<BTreeMap<Monomial, BigInt>> =
            (0..=deg).map(|_| BTreeMap::new()).collect();
        for (m, c) in &self.terms {
            let e = m.exponent(idx);
            let mut pairs: Vec<(u32, u32)> = m
                .exponents()
                .iter()
                .copied()
                .filter(|&(w, _)| w != idx)
                .collect();
            pairs.sort_unstable_by_key(|&(w, _)| w);
            buckets[e as usize].insert(Monomial::from_pairs(&pairs), c.clone());
        }
        buckets
            .into_iter()
            .map(|terms| Polynomial { ordering: Arc::clone(&self.ordering), terms })
            .collect()
    }

    /// The coefficient of the highest power of `v`; zero for the zero
    /// polynomial.
    pub fn leading_coefficient_in(&self, v: &Variable) -> Polynomial {
        self.coefficients_in(v)
            .pop()
            .unwrap_or_else(|| Polynomial::zero(&self.ordering))
    }

    /// Rebuilds a polynomial from coefficients with respect to `v`,
    /// ascending by exponent.
    pub fn from_coefficients_in(
        ordering: &Arc<VariableOrdering>,
        v: &Variable,
        coeffs: &[Polynomial],
    ) -> Polynomial {
        let idx = resolve(ordering, v);
        let mut terms: Vec<(Monomial, BigInt)> = Vec::new();
        for (e, c) in coeffs.iter().enumerate() {
            let shift = Monomial::power(idx, e as u32);
            for (m, k) in &c.terms {
                terms.push((m.mul(&shift), k.clone()));
            }
        }
        Polynomial::from_terms(ordering, terms)
    }

    /// A total, deterministic order on polynomials sharing an ordering, used
    /// to sort factor lists canonically. Compares term streams descending.
    pub fn canonical_cmp(&self, other: &Polynomial) -> Ordering {
        let mut a = self.terms();
        let mut b = other.terms();
        loop {
            match (a.next(), b.next()) {
                (Some((ma, ca)), Some((mb, cb))) => match ma.cmp(mb).then_with(|| ca.cmp(cb)) {
                    Ordering::Equal => {}
                    ne => return ne,
                },
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (None, None) => return Ordering::Equal,
            }
        }
    }

    fn assert_same_ordering(&self, other: &Polynomial) {
        assert!(
            Arc::ptr_eq(&self.ordering, &other.ordering) || self.ordering == other.ordering,
            "operands use different variable orderings ({} vs {})",
            self.ordering,
            other.ordering
        );
    }
}

fn resolve(ordering: &VariableOrdering, v: &Variable) -> u32 {
    match ordering.index_of(v) {
        Some(i) => i as u32,
        None => panic!("variable `{v}` is not in the ordering {ordering}"),
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ordering(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            match terms.entry(m.clone()) {
                Entry::Occupied(mut e) => {
                    *e.get_mut() += c;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
                Entry::Vacant(slot) => {
                    slot.insert(c.clone());
                }
            }
        }
        Polynomial { ordering: Arc::clone(&self.ordering), terms }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ordering(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            match terms.entry(m.clone()) {
                Entry::Occupied(mut e) => {
                    *e.get_mut() -= c;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
                Entry::Vacant(slot) => {
                    slot.insert(-c);
                }
            }
        }
        Polynomial { ordering: Arc::clone(&self.ordering), terms }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ordering(rhs);
        // Iterate the smaller operand on the outside.
        let (outer, inner) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &outer.terms {
            for (mb, cb) in &inner.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match terms.entry(m) {
                    Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    Entry::Vacant(slot) => {
                        slot.insert(c);
                    }
                }
            }
        }
        Polynomial { ordering: Arc::clone(&self.ordering), terms }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.magnitude();
            if m.is_unit() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                let mut sep = false;
                for &(v, e) in m.exponents() {
                    if sep {
                        f.write_str("*")?;
                    }
                    sep = true;
                    let name = self
                        .ordering
                        .get(v as usize)
                        .map(Variable::name)
                        .unwrap_or("?");
                    if e == 1 {
                        write!(f, "{name}")?;
                    } else {
                        write!(f, "{name}^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Renders to the canonical text form (same as `Display`).
pub fn render(p: &Polynomial) -> String {
    use alloc::string::ToString;
    p.to_string()
}
