//! The analytical toolkit over iterated resultants: factorization-backed
//! genuine/spurious classification against the lex elimination generator,
//! Bezout-bound screening, squarefree decomposition, Sturm real-root counts,
//! perfect-square detection, and degree-growth reporting.

mod factor;
mod hensel;
mod modp;
mod sqrt;
mod squarefree;
mod sturm;
mod univariate;

pub use factor::{
    factor_univariate, factor_univariate_with, FactorConfig, FactorError, Factorization,
};
pub use sqrt::perfect_square_root;
pub use squarefree::{squarefree_decompose, SquarefreeError};
pub use sturm::{sturm_real_roots, Endpoint, SturmError};

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::groebner::{buchberger, GroebnerConfig, GroebnerError};
use crate::plan::{evaluate_plan_trace, IterationPlan, PlanError};
use crate::poly::Polynomial;

/// Shared knobs for the classification pipeline.
#[derive(Debug, Clone, Default)]
pub struct AnalysisConfig {
    pub factor: FactorConfig,
    pub groebner: GroebnerConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    Genuine,
    Spurious,
    Unknown,
}

impl Label {
    pub fn as_str(self) -> &'static str {
        match self {
            Label::Genuine => "genuine",
            Label::Spurious => "spurious",
            Label::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Evidence {
    DividesEliminationGenerator,
    FailsEliminationDivisibility,
    ExceedsBezoutBound,
    Unclassified,
}

impl Evidence {
    pub fn as_str(self) -> &'static str {
        match self {
            Evidence::DividesEliminationGenerator => "divides_elimination_generator",
            Evidence::FailsEliminationDivisibility => "fails_elimination_divisibility",
            Evidence::ExceedsBezoutBound => "exceeds_bezout_bound",
            Evidence::Unclassified => "unclassified",
        }
    }
}

/// One classified irreducible factor of an iterated resultant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedFactor {
    pub factor: Polynomial,
    pub multiplicity: u32,
    pub label: Label,
    pub evidence: Evidence,
}

/// Factorization of an iterated resultant with genuine/spurious labels.
/// `content * prod factor_i^mult_i` reconstructs the analysed polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorReport {
    pub content: BigInt,
    pub factors: Vec<ClassifiedFactor>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenuinePartError {
    NoUnivariateGenerator,
    Groebner(GroebnerError),
}

impl fmt::Display for GenuinePartError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenuinePartError::NoUnivariateGenerator => {
                f.write_str("the elimination ideal has no generator in the lowest variable alone")
            }
            GenuinePartError::Groebner(e) => write!(f, "{e}"),
        }
    }
}

impl From<GroebnerError> for GenuinePartError {
    fn from(e: GroebnerError) -> Self {
        GenuinePartError::Groebner(e)
    }
}

/// The univariate generator of the elimination ideal in the lowest variable:
/// the operational "genuine" part of an iterated resultant. Primitive with a
/// positive leading coefficient.
pub fn genuine_part(
    system: &[Polynomial],
    config: &GroebnerConfig,
) -> Result<Polynomial, GenuinePartError> {
    let basis = buchberger(system, config)?;
    let elim = basis.elimination_polynomials(1);
    elim.into_iter()
        .next()
        .ok_or(GenuinePartError::NoUnivariateGenerator)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    Factor(FactorError),
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::Factor(e) => write!(f, "{e}"),
        }
    }
}

impl From<FactorError> for ClassifyError {
    fn from(e: FactorError) -> Self {
        ClassifyError::Factor(e)
    }
}

/// Factors a univariate iterated resultant and labels every irreducible
/// factor. A factor is genuine exactly when it divides the elimination
/// generator of the system; factors beyond the Bezout bound are spurious
/// outright. If the generator is unavailable (budget, or no univariate
/// generator), the remaining labels degrade to unknown.
pub fn classify_factors(
    iterated: &Polynomial,
    system: &[Polynomial],
    config: &AnalysisConfig,
) -> Result<FactorReport, ClassifyError> {
    let factorization = factor_univariate_with(iterated, &config.factor)?;
    let bound = bezout_bound(system);
    let generator = genuine_part(system, &config.groebner);
    let factors = factorization
        .factors
        .into_iter()
        .map(|(factor, multiplicity)| {
            let degree = u64::from(factor.total_degree().unwrap_or(0));
            let (label, evidence) = if degree > bound {
                (Label::Spurious, Evidence::ExceedsBezoutBound)
            } else {
                match &generator {
                    Ok(g) => {
                        if g.exact_div(&factor).is_ok() {
                            (Label::Genuine, Evidence::DividesEliminationGenerator)
                        } else {
                            (Label::Spurious, Evidence::FailsEliminationDivisibility)
                        }
                    }
                    Err(_) => (Label::Unknown, Evidence::Unclassified),
                }
            };
            ClassifiedFactor { factor, multiplicity, label, evidence }
        })
        .collect();
    Ok(FactorReport { content: factorization.content, factors })
}

/// Product of the total degrees of the system polynomials (saturating).
pub fn bezout_bound(system: &[Polynomial]) -> u64 {
    system
        .iter()
        .map(|p| u64::from(p.total_degree().unwrap_or(0)))
        .fold(1u64, u64::saturating_mul)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BezoutOutcome {
    MustBeSpurious,
    PossiblyGenuine,
}

/// A factor of degree beyond the product of the input total degrees cannot
/// come from common zeros and must be spurious.
pub fn bezout_check(factor_degree: u64, input_total_degrees: &[u64]) -> BezoutOutcome {
    let bound = input_total_degrees
        .iter()
        .fold(1u64, |acc, &d| acc.saturating_mul(d));
    if factor_degree > bound {
        BezoutOutcome::MustBeSpurious
    } else {
        BezoutOutcome::PossiblyGenuine
    }
}

/// The running variant: confirmed genuine degree shrinks the bound for the
/// factors still to be examined.
#[derive(Debug, Clone)]
pub struct BezoutBudget {
    remaining: u64,
}

impl BezoutBudget {
    pub fn new(input_total_degrees: &[u64]) -> BezoutBudget {
        BezoutBudget {
            remaining: input_total_degrees
                .iter()
                .fold(1u64, |acc, &d| acc.saturating_mul(d)),
        }
    }

    pub fn remaining(&self) -> u64 {
        self.remaining
    }

    pub fn check(&self, factor_degree: u64) -> BezoutOutcome {
        if factor_degree > self.remaining {
            BezoutOutcome::MustBeSpurious
        } else {
            BezoutOutcome::PossiblyGenuine
        }
    }

    /// Records a factor confirmed genuine, reducing the bound accordingly.
    pub fn confirm_genuine(&mut self, factor_degree: u64) {
        self.remaining = self.remaining.saturating_sub(factor_degree);
    }
}

/// Degree bookkeeping along a nested elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeGrowthReport {
    /// Degree in the lowest variable after each elimination level,
    /// first-eliminated variable first.
    pub nested_degrees: Vec<u32>,
    /// Product of the total degrees of the system polynomials.
    pub bezout_bound: u64,
    /// Degree of the elimination generator.
    pub genuine_degree: u32,
}

impl DegreeGrowthReport {
    pub fn final_degree(&self) -> u32 {
        self.nested_degrees.last().copied().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReportError {
    Plan(PlanError),
    Genuine(GenuinePartError),
}

impl fmt::Display for ReportError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReportError::Plan(e) => write!(f, "{e}"),
            ReportError::Genuine(e) => write!(f, "{e}"),
        }
    }
}

/// Runs the plan, recording the degree (in the lowest variable) reached at
/// every elimination level, the Bezout bound of the system, and the degree
/// of the genuine part.
pub fn degree_growth_report(
    inputs: &BTreeMap<String, Polynomial>,
    plan: &IterationPlan,
    config: &AnalysisConfig,
) -> Result<DegreeGrowthReport, ReportError> {
    let (final_value, trace) =
        evaluate_plan_trace(plan, inputs).map_err(ReportError::Plan)?;
    let system: Vec<Polynomial> = inputs.values().cloned().collect();
    let bound = bezout_bound(&system);
    let generator =
        genuine_part(&system, &config.groebner).map_err(ReportError::Genuine)?;
    let genuine_degree = generator.total_degree().unwrap_or(0);

    let lowest_degree = |p: &Polynomial| -> u32 {
        let ordering = p.ordering();
        let lowest = ordering.lowest().clone();
        p.degree_in(&lowest).unwrap_or(0)
    };

    // group node results per eliminated variable, highest variable first
    let mut levels: BTreeMap<usize, u32> = BTreeMap::new();
    for node in &trace {
        let d = lowest_degree(&node.result);
        levels
            .entry(node.variable_index)
            .and_modify(|m| *m = (*m).max(d))
            .or_insert(d);
    }
    let nested_degrees: Vec<u32> = if levels.is_empty() {
        alloc::vec![lowest_degree(&final_value)]
    } else {
        levels.values().copied().collect()
    };
    Ok(DegreeGrowthReport { nested_degrees, bezout_bound: bound, genuine_degree })
}
