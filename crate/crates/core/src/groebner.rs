//! Reduced lexicographic Groebner bases via Buchberger's algorithm.
//!
//! Coefficients stay in the integers: reduction is pseudo-division with
//! content clearing, so every basis element is primitive with a positive
//! leading coefficient. The reduced basis is unique for an ideal and
//! ordering; elements are listed ascending by leading monomial. Pair
//! selection is the normal strategy (smallest lcm first) with Buchberger's
//! product and chain criteria; the number of treated S-pairs is bounded by a
//! configurable budget and exceeding it is an explicit error.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::variable::VariableOrdering;

#[derive(Debug, Clone)]
pub struct GroebnerConfig {
    /// Maximum number of S-pairs taken off the queue.
    pub max_pairs: usize,
    /// Optional ceiling on coefficient size (in bits) of basis elements.
    pub max_coefficient_bits: Option<u64>,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { max_pairs: 100_000, max_coefficient_bits: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    EmptySystem,
    ZeroPolynomial,
    BudgetExceeded { pairs: usize },
    CoefficientCeiling { bits: u64, limit: u64 },
}

impl fmt::Display for GroebnerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroebnerError::EmptySystem => f.write_str("empty polynomial system"),
            GroebnerError::ZeroPolynomial => f.write_str("zero polynomial in the system"),
            GroebnerError::BudgetExceeded { pairs } => {
                write!(f, "S-pair budget exceeded ({pairs} pairs)")
            }
            GroebnerError::CoefficientCeiling { bits, limit } => {
                write!(f, "coefficient size {bits} bits exceeds the {limit}-bit ceiling")
            }
        }
    }
}

/// A reduced lex Groebner basis: primitive integer elements with positive
/// leading coefficients, ascending by leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ordering: Arc<VariableOrdering>,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ordering(&self) -> &Arc<VariableOrdering> {
        &self.ordering
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polys
    }

    /// Basis elements involving only the `keep` lowest variables of the
    /// ordering (a generating set of the elimination ideal).
    pub fn elimination_polynomials(&self, keep: usize) -> Vec<Polynomial> {
        let n = self.ordering.len();
        let keep = keep.min(n);
        let cutoff = (n - keep) as u32;
        self.polys
            .iter()
            .filter(|p| {
                p.used_variable_indices().iter().all(|&v| v >= cutoff)
            })
            .cloned()
            .collect()
    }
}

/// The integer S-polynomial: cross-multiplied so the leading terms cancel
/// with the smallest integer multipliers.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, GroebnerError> {
    let (fm, fc) = f.leading_term().ok_or(GroebnerError::ZeroPolynomial)?;
    let (gm, gc) = g.leading_term().ok_or(GroebnerError::ZeroPolynomial)?;
    let lcm = fm.lcm(gm);
    let d = fc.gcd(gc);
    let a = gc / &d;
    let b = fc / &d;
    let left = f.mul_term(&fm.quotient_of(&lcm).expect("lcm divisible"), &a);
    let right = g.mul_term(&gm.quotient_of(&lcm).expect("lcm divisible"), &b);
    Ok(&left - &right)
}

/// Multivariate pseudo-division remainder: no remaining monomial is
/// divisible by a basis leading monomial. Whenever at least one reduction
/// step was taken, the remainder is returned primitive with a positive
/// leading coefficient; an irreducible input comes back unchanged.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let divisors: Vec<(&Polynomial, &Monomial, &BigInt)> = basis
        .iter()
        .filter(|b| !b.is_zero())
        .map(|b| {
            let (m, c) = b.leading_term().expect("nonzero");
            (b, m, c)
        })
        .collect();
    if divisors.is_empty() {
        return p.clone();
    }
    let mut r = p.clone();
    let mut reduced = false;
    let mut steps_since_strip = 0u32;
    'outer: loop {
        let mut target: Option<(Monomial, BigInt, usize)> = None;
        for (m, c) in r.terms() {
            for (k, (_, bm, _)) in divisors.iter().enumerate() {
                if bm.divides(m) {
                    target = Some((m.clone(), c.clone(), k));
                    break;
                }
            }
            if target.is_some() {
                break;
            }
        }
        match target {
            Some((m, c, k)) => {
                let (b, bm, bc) = divisors[k];
                let d = c.gcd(bc);
                let scale_r = bc / &d;
                let scale_b = &c / &d;
                let shift = bm.quotient_of(&m).expect("divides");
                r = &r.scale(&scale_r) - &b.mul_term(&shift, &scale_b);
                reduced = true;
                if r.is_zero() {
                    return r;
                }
                // pseudo-reduction inflates every coefficient; strip the
                // content periodically to keep the integers small
                steps_since_strip += 1;
                if steps_since_strip >= 8 {
                    steps_since_strip = 0;
                    r = strip_positive_content(&r);
                }
                continue 'outer;
            }
            None => break,
        }
    }
    if reduced {
        normalize(&r)
    } else {
        r
    }
}

/// Divides out the positive integer content, keeping the sign.
fn strip_positive_content(p: &Polynomial) -> Polynomial {
    let (content, primitive) = p.content_and_primitive().expect("nonzero");
    if content.is_negative() {
        primitive.neg_ref()
    } else {
        primitive
    }
}

/// Primitive part with positive leading coefficient.
fn normalize(p: &Polynomial) -> Polynomial {
    p.primitive_part().expect("nonzero")
}

/// Buchberger's algorithm; returns the reduced basis.
pub fn buchberger(
    system: &[Polynomial],
    config: &GroebnerConfig,
) -> Result<GroebnerBasis, GroebnerError> {
    if system.is_empty() {
        return Err(GroebnerError::EmptySystem);
    }
    if system.iter().any(Polynomial::is_zero) {
        return Err(GroebnerError::ZeroPolynomial);
    }
    let ordering = Arc::clone(system[0].ordering());
    let mut basis: Vec<Polynomial> = Vec::new();
    for p in system {
        let n = normalize(p);
        if !basis.contains(&n) {
            basis.push(n);
        }
    }

    // queue keyed by (lcm total degree, lcm, i, j) — normal strategy
    let mut queue: BTreeSet<(u32, Monomial, usize, usize)> = BTreeSet::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    let lm = |b: &Polynomial| b.leading_monomial().expect("nonzero").clone();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let l = lm(&basis[i]).lcm(&lm(&basis[j]));
            queue.insert((l.total_degree(), l, i, j));
        }
    }

    let mut treated = 0usize;
    while let Some(entry) = queue.iter().next().cloned() {
        queue.remove(&entry);
        let (_, lcm, i, j) = entry;
        treated += 1;
        if treated > config.max_pairs {
            return Err(GroebnerError::BudgetExceeded { pairs: config.max_pairs });
        }
        done.insert((i, j));

        let lmi = lm(&basis[i]);
        let lmj = lm(&basis[j]);
        // product criterion
        if lmi.is_coprime(&lmj) {
            continue;
        }
        // chain criterion
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis[k]).divides(&lcm)
                && done.contains(&pair_key(i, k))
                && done.contains(&pair_key(j, k))
        });
        if chained {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j])?;
        let r = normal_form(&s, &basis);
        if r.is_zero() {
            continue;
        }
        if let Some(limit) = config.max_coefficient_bits {
            let bits = r
                .terms()
                .map(|(_, c)| c.magnitude().bits())
                .max()
                .unwrap_or(0);
            if bits > limit {
                return Err(GroebnerError::CoefficientCeiling { bits, limit });
            }
        }
        let t = basis.len();
        let lmr = lm(&r);
        for (k, b) in basis.iter().enumerate() {
            let l = lm(b).lcm(&lmr);
            queue.insert((l.total_degree(), l, k, t));
        }
        basis.push(r);
    }

    Ok(GroebnerBasis { ordering, polys: reduce_basis(basis) })
}

fn pair_key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Minimalizes and interreduces a Groebner basis, then sorts ascending by
/// leading monomial.
fn reduce_basis(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    basis.sort_by(|a, b| {
        a.leading_monomial()
            .expect("nonzero")
            .cmp(b.leading_monomial().expect("nonzero"))
            .then_with(|| a.canonical_cmp(b))
    });
    // keep only elements whose leading monomial no kept element divides
    let mut minimal: Vec<Polynomial> = Vec::new();
    for p in basis {
        let lmp = p.leading_monomial().expect("nonzero");
        if !minimal
            .iter()
            .any(|q| q.leading_monomial().expect("nonzero").divides(lmp))
        {
            minimal.push(p);
        }
    }
    // tail-reduce every element against the others until stable
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, q)| q.clone())
                .collect();
            let r = normal_form(&minimal[i], &others);
            debug_assert!(!r.is_zero(), "minimal basis element reduced to zero");
            let r = normalize(&r);
            if r != minimal[i] {
                minimal[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    minimal.sort_by(|a, b| {
        a.leading_monomial()
            .expect("nonzero")
            .cmp(b.leading_monomial().expect("nonzero"))
    });
    minimal
}

/// Convenience wrapper: a map from names to polynomials, in system order.
pub fn system_from_named(
    named: &BTreeMap<String, Polynomial>,
) -> Vec<Polynomial> {
    named.values().cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use alloc::vec;

    fn ord() -> Arc<VariableOrdering> {
        VariableOrdering::from_names(&["z", "y", "x"]).unwrap()
    }

    fn p(text: &str) -> Polynomial {
        parse(text, &ord()).unwrap()
    }

    fn sample_system() -> Vec<Polynomial> {
        vec![
            p("y^2 + z^2 + x + z - 1"),
            p("-x^2 + y^2 + z^2 - 1"),
            p("x^2 + y + z"),
        ]
    }

    #[test]
    fn s_polynomial_cancels_leading_terms() {
        let f = p("z^2");
        let g = p("z*y");
        assert!(s_polynomial(&f, &g).unwrap().is_zero());

        let f = p("y - x");
        let g = p("x^2 + x + z");
        let s = s_polynomial(&f, &g).unwrap();
        // lcm of z and y is z*y; the combination is y*(x^2+x+z)... with the
        // ordering z>y>x, lm(f) = y? no: lm(y - x) = y, lm(x^2+x+z) = z.
        let lcm = Monomial::from_pairs(&[(0, 1), (1, 1)]);
        assert!(s.leading_monomial().expect("nonzero") < &lcm);

        let f = p("y^2 + z^2 + x + z - 1");
        assert!(s_polynomial(&f, &f).unwrap().is_zero());
        assert_eq!(s_polynomial(&f, &p("0")), Err(GroebnerError::ZeroPolynomial));
    }

    #[test]
    fn normal_form_trivia() {
        let f = p("y^2 + z^2 + x + z - 1");
        assert_eq!(normal_form(&f, &[]), f);
        let x = p("x");
        assert!(normal_form(&p("x^2 + x"), &[x]).is_zero());
    }

    #[test]
    fn basis_of_the_sample_system_first_ordering() {
        let gb = buchberger(&sample_system(), &GroebnerConfig::default()).unwrap();
        let expected = vec![p("x^4 + 2*x^3 + x^2 - 1"), p("y - x"), p("x^2 + x + z")];
        assert_eq!(gb.polynomials(), expected.as_slice());
        // membership of the inputs
        for q in sample_system() {
            assert!(normal_form(&q, gb.polynomials()).is_zero());
        }
        // elimination polynomials
        assert_eq!(
            gb.elimination_polynomials(1),
            vec![p("x^4 + 2*x^3 + x^2 - 1")]
        );
        assert_eq!(gb.elimination_polynomials(3).len(), 3);
    }

    #[test]
    fn basis_of_the_sample_system_second_ordering() {
        let ord2 = VariableOrdering::from_names(&["x", "y", "z"]).unwrap();
        let system: Vec<Polynomial> = [
            "y^2 + z^2 + x + z - 1",
            "-x^2 + y^2 + z^2 - 1",
            "x^2 + y + z",
        ]
        .iter()
        .map(|t| parse(t, &ord2).unwrap())
        .collect();
        let gb = buchberger(&system, &GroebnerConfig::default()).unwrap();
        let expected: Vec<Polynomial> = ["z^2 - 1", "y^2 + y + z", "x - y"]
            .iter()
            .map(|t| parse(t, &ord2).unwrap())
            .collect();
        assert_eq!(gb.polynomials(), expected.as_slice());
        assert_eq!(
            gb.elimination_polynomials(1),
            vec![parse("z^2 - 1", &ord2).unwrap()]
        );
    }

    #[test]
    fn singleton_and_error_cases() {
        let ox = VariableOrdering::from_names(&["x"]).unwrap();
        let q = parse("x - 1", &ox).unwrap();
        let gb = buchberger(core::slice::from_ref(&q), &GroebnerConfig::default()).unwrap();
        assert_eq!(gb.polynomials(), &[q]);

        assert_eq!(
            buchberger(&[], &GroebnerConfig::default()),
            Err(GroebnerError::EmptySystem)
        );
        assert_eq!(
            buchberger(&[parse("0", &ox).unwrap()], &GroebnerConfig::default()),
            Err(GroebnerError::ZeroPolynomial)
        );
    }

    #[test]
    fn budget_is_enforced() {
        let config = GroebnerConfig { max_pairs: 1, ..GroebnerConfig::default() };
        let err = buchberger(&sample_system(), &config).unwrap_err();
        assert_eq!(err, GroebnerError::BudgetExceeded { pairs: 1 });
    }

    #[test]
    fn permuting_the_system_gives_the_same_basis() {
        let mut system = sample_system();
        let gb1 = buchberger(&system, &GroebnerConfig::default()).unwrap();
        system.rotate_left(1);
        let gb2 = buchberger(&system, &GroebnerConfig::default()).unwrap();
        system.swap(0, 1);
        let gb3 = buchberger(&system, &GroebnerConfig::default()).unwrap();
        assert_eq!(gb1, gb2);
        assert_eq!(gb1, gb3);
    }
}
