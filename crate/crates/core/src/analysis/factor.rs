//! Irreducible factorization of univariate integer polynomials:
//! squarefree decomposition, factorization modulo a deterministic choice of
//! prime, Hensel lifting to a Mignotte-style bound, then subset
//! recombination with early exact-division tests.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::analysis::hensel::{lift_factors, symmetric};
use crate::analysis::modp::{
    factor_squarefree_modp, next_prime, reduce_mod_p, PPoly, PrimeField,
};
use crate::analysis::squarefree::yun;
use crate::analysis::univariate::UniPoly;
use crate::poly::Polynomial;

#[derive(Debug, Clone)]
pub struct FactorConfig {
    /// Inputs of higher degree are rejected up front.
    pub degree_ceiling: usize,
    /// How many primes may be tested for a squarefree reduction.
    pub prime_attempts: usize,
    /// How many recombination candidates may be tried.
    pub max_recombination: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            degree_ceiling: 600,
            prime_attempts: 25,
            max_recombination: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorError {
    ZeroPolynomial,
    NotUnivariate,
    DegreeCeiling { degree: usize, ceiling: usize },
    NoSuitablePrime,
    RecombinationBudget,
}

impl fmt::Display for FactorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorError::ZeroPolynomial => f.write_str("factorization of zero"),
            FactorError::NotUnivariate => {
                f.write_str("factorization needs a univariate polynomial")
            }
            FactorError::DegreeCeiling { degree, ceiling } => {
                write!(f, "degree {degree} exceeds the factorization ceiling {ceiling}")
            }
            FactorError::NoSuitablePrime => {
                f.write_str("no squarefree modular reduction among the tried primes")
            }
            FactorError::RecombinationBudget => {
                f.write_str("factor recombination budget exceeded")
            }
        }
    }
}

/// An exact factorization: `content * prod factors_i ^ mult_i` reconstructs
/// the input. Factors are primitive irreducible with positive leading
/// coefficients, sorted by degree and then canonically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub content: BigInt,
    pub factors: Vec<(Polynomial, u32)>,
}

pub fn factor_univariate(p: &Polynomial) -> Result<Factorization, FactorError> {
    factor_univariate_with(p, &FactorConfig::default())
}

pub fn factor_univariate_with(
    p: &Polynomial,
    config: &FactorConfig,
) -> Result<Factorization, FactorError> {
    if p.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    let (u, var) = UniPoly::from_polynomial(p).ok_or(FactorError::NotUnivariate)?;
    if u.deg() > config.degree_ceiling {
        return Err(FactorError::DegreeCeiling {
            degree: u.deg(),
            ceiling: config.degree_ceiling,
        });
    }
    let ordering = p.ordering();
    let (content, prim) = u.content_and_primitive();
    let mut factors: Vec<(UniPoly, u32)> = Vec::new();
    for (part, mult) in yun(&prim) {
        for irreducible in zassenhaus(&part, config)? {
            factors.push((irreducible, mult));
        }
    }
    let mut out: Vec<(Polynomial, u32)> = factors
        .into_iter()
        .map(|(f, m)| (f.to_polynomial(ordering, var), m))
        .collect();
    out.sort_by(|(a, _), (b, _)| {
        a.total_degree()
            .cmp(&b.total_degree())
            .then_with(|| a.canonical_cmp(b))
    });
    Ok(Factorization { content, factors: out })
}

/// Factors a primitive squarefree polynomial with positive leading
/// coefficient into irreducibles (unsorted).
fn zassenhaus(f: &UniPoly, config: &FactorConfig) -> Result<Vec<UniPoly>, FactorError> {
    debug_assert!(!f.is_zero() && f.lc().is_positive());
    let mut out = Vec::new();
    let mut f = f.clone();
    if f.deg() == 0 {
        return Ok(out);
    }
    // split off a root at the origin first so constant-coefficient screens
    // apply below
    if f.coeffs[0].is_zero() {
        out.push(UniPoly::from_coeffs(alloc::vec![BigInt::zero(), BigInt::one()]));
        f = UniPoly::from_coeffs(f.coeffs[1..].to_vec());
        debug_assert!(!f.coeffs.is_empty() && !f.coeffs[0].is_zero());
    }
    if f.deg() == 0 {
        return Ok(out);
    }
    if f.deg() == 1 {
        out.push(f);
        return Ok(out);
    }

    let (field, modular) = choose_prime(&f, config)?;
    if modular.len() == 1 {
        out.push(f);
        return Ok(out);
    }

    // Hensel-lift to p^k beyond twice the factor coefficient bound
    let bound = mignotte_bound(&f);
    let two_bound = &bound * BigInt::from(2);
    let p_big = BigInt::from(field.p);
    let mut modulus = p_big.clone();
    let mut exponent = 1u32;
    while modulus <= two_bound {
        modulus *= &p_big;
        exponent += 1;
    }
    let lifted = lift_factors(&f, &modular, &field, &modulus, exponent);

    recombine(f, lifted, &modulus, config, &mut out)?;
    Ok(out)
}

/// Deterministic prime choice: walk odd primes in order, skip divisors of
/// the leading coefficient, test squarefree reduction; among the first three
/// squarefree reductions keep the one with the fewest modular factors.
fn choose_prime(
    f: &UniPoly,
    config: &FactorConfig,
) -> Result<(PrimeField, Vec<PPoly>), FactorError> {
    let lc = f.lc();
    let mut attempts = 0usize;
    let mut best: Option<(PrimeField, Vec<PPoly>)> = None;
    let mut viable = 0usize;
    let mut p = 3u64;
    while attempts < config.prime_attempts {
        if (lc % BigInt::from(p)).is_zero() {
            p = next_prime(p);
            continue;
        }
        attempts += 1;
        let field = PrimeField::new(p);
        let fp = reduce_mod_p(&f.coeffs, &field);
        debug_assert_eq!(fp.deg(), f.deg());
        let dfp = fp.derivative(&field);
        let squarefree = !dfp.is_zero() && {
            let g = fp.gcd(&dfp, &field);
            g.deg() == 0
        };
        if squarefree {
            let factors = factor_squarefree_modp(&fp.monic(&field), &field);
            let better = match &best {
                None => true,
                Some((_, b)) => factors.len() < b.len(),
            };
            if better {
                best = Some((field, factors));
            }
            viable += 1;
            if viable == 3 {
                break;
            }
        }
        p = next_prime(p);
    }
    best.ok_or(FactorError::NoSuitablePrime)
}

/// Landau-Mignotte style bound on the coefficients of any integer factor:
/// `sqrt(n+1) * 2^n * max|coeff| * |lc|`.
fn mignotte_bound(f: &UniPoly) -> BigInt {
    let n = f.deg();
    let sqrt = BigInt::from(n + 1).sqrt() + BigInt::one();
    let two_n = BigInt::one() << n;
    sqrt * two_n * f.max_abs_coeff() * f.lc().abs()
}

/// Zassenhaus subset recombination: searches subsets of the lifted modular
/// factors by increasing cardinality, tests candidates by exact division,
/// and peels confirmed factors off. Searching smallest-first makes every
/// confirmed candidate irreducible.
fn recombine(
    mut remaining: UniPoly,
    lifted: Vec<Vec<BigInt>>,
    modulus: &BigInt,
    config: &FactorConfig,
    out: &mut Vec<UniPoly>,
) -> Result<(), FactorError> {
    let mut available: Vec<usize> = (0..lifted.len()).collect();
    let mut budget = config.max_recombination;
    'restart: loop {
        let half = available.len() / 2;
        for size in 1..=half {
            let mut combo = Combinations::new(available.len(), size);
            while let Some(picks) = combo.next() {
                if budget == 0 {
                    return Err(FactorError::RecombinationBudget);
                }
                budget -= 1;
                let subset: Vec<usize> = picks.iter().map(|&i| available[i]).collect();
                if let Some((factor, quotient)) =
                    try_candidate(&remaining, &subset, &lifted, modulus)
                {
                    out.push(factor);
                    remaining = quotient;
                    available.retain(|i| !subset.contains(i));
                    continue 'restart;
                }
            }
        }
        break;
    }
    if remaining.deg() >= 1 {
        out.push(remaining.primitive_part());
    }
    Ok(())
}

fn try_candidate(
    remaining: &UniPoly,
    subset: &[usize],
    lifted: &[Vec<BigInt>],
    modulus: &BigInt,
) -> Option<(UniPoly, UniPoly)> {
    // lc(remaining) * prod of the chosen monic factors, mod p^k
    let mut prod: Vec<BigInt> = alloc::vec![remaining.lc().mod_floor(modulus)];
    for &i in subset {
        prod = mul_mod(&prod, &lifted[i], modulus);
    }
    let candidate = UniPoly::from_coeffs(
        prod.iter().map(|c| symmetric(c, modulus)).collect(),
    );
    if candidate.is_zero() {
        return None;
    }
    let candidate = candidate.primitive_part();
    // cheap screen: the constant coefficient of a factor divides the
    // constant coefficient of the polynomial
    let cc = &candidate.coeffs[0];
    if cc.is_zero() || !(&remaining.coeffs[0] % cc).is_zero() {
        return None;
    }
    let quotient = remaining.exact_div(&candidate)?;
    Some((candidate, quotient))
}

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut acc = alloc::vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            acc[i + j] += ca * cb;
        }
    }
    for c in &mut acc {
        *c = c.mod_floor(m);
    }
    acc
}

/// Lexicographic k-subsets of `0..n`.
struct Combinations {
    n: usize,
    indices: Vec<usize>,
    started: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Combinations {
        Combinations { n, indices: (0..k).collect(), started: false }
    }

    fn next(&mut self) -> Option<&[usize]> {
        let k = self.indices.len();
        if k > self.n {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.indices);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if self.indices[i] != i + self.n - k {
                break;
            }
        }
        self.indices[i] += 1;
        for j in i + 1..k {
            self.indices[j] = self.indices[j - 1] + 1;
        }
        Some(&self.indices)
    }
}
