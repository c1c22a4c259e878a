//! Nested resultant/discriminant iteration plans.
//!
//! A plan is a binary tree whose leaves name input polynomials and whose
//! internal nodes apply a resultant or discriminant in one variable, e.g.
//! `res(y, res(z, f, g), res(z, f, h))`. Going from the leaves to the root,
//! node variables must strictly descend in the active ordering: each level
//! eliminates the next-highest remaining variable.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::poly::Polynomial;
use crate::resultant::{discriminant, resultant, ResultantError};
use crate::variable::is_valid_name;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IterationPlan {
    Leaf(String),
    Resultant {
        variable: String,
        left: Box<IterationPlan>,
        right: Box<IterationPlan>,
    },
    Discriminant {
        variable: String,
        child: Box<IterationPlan>,
    },
}

impl IterationPlan {
    pub fn leaf(name: &str) -> IterationPlan {
        IterationPlan::Leaf(String::from(name))
    }

    pub fn res(variable: &str, left: IterationPlan, right: IterationPlan) -> IterationPlan {
        IterationPlan::Resultant {
            variable: String::from(variable),
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn disc(variable: &str, child: IterationPlan) -> IterationPlan {
        IterationPlan::Discriminant {
            variable: String::from(variable),
            child: Box::new(child),
        }
    }

    /// Names of the input polynomials referenced by the plan.
    pub fn leaves(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            IterationPlan::Leaf(name) => {
                if !out.contains(&name.as_str()) {
                    out.push(name);
                }
            }
            IterationPlan::Resultant { left, right, .. } => {
                left.collect_leaves(out);
                right.collect_leaves(out);
            }
            IterationPlan::Discriminant { child, .. } => child.collect_leaves(out),
        }
    }
}

impl fmt::Display for IterationPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IterationPlan::Leaf(name) => f.write_str(name),
            IterationPlan::Resultant { variable, left, right } => {
                write!(f, "res({variable},{left},{right})")
            }
            IterationPlan::Discriminant { variable, child } => {
                write!(f, "disc({variable},{child})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanError {
    UnknownInput(String),
    UnknownVariable(String),
    /// An inner node eliminates a variable that is not strictly higher than
    /// the outer node's variable.
    OrderViolation { outer: String, inner: String },
    Resultant(ResultantError),
}

impl fmt::Display for PlanError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanError::UnknownInput(name) => write!(f, "plan references unknown input `{name}`"),
            PlanError::UnknownVariable(name) => {
                write!(f, "plan variable `{name}` is not in the ordering")
            }
            PlanError::OrderViolation { outer, inner } => write!(
                f,
                "plan eliminates `{inner}` inside `{outer}`, but `{inner}` is not higher"
            ),
            PlanError::Resultant(e) => write!(f, "{e}"),
        }
    }
}

impl From<ResultantError> for PlanError {
    fn from(e: ResultantError) -> Self {
        PlanError::Resultant(e)
    }
}

/// The value produced at one internal node of a plan evaluation.
#[derive(Debug, Clone)]
pub struct PlanNodeResult {
    pub variable: String,
    /// Position of the variable in the ordering.
    pub variable_index: usize,
    pub result: Polynomial,
}

/// Evaluates a plan bottom-up over named input polynomials.
pub fn evaluate_plan(
    plan: &IterationPlan,
    inputs: &BTreeMap<String, Polynomial>,
) -> Result<Polynomial, PlanError> {
    let mut trace = Vec::new();
    evaluate_node(plan, inputs, &mut trace).map(|(p, _)| p)
}

/// Like [`evaluate_plan`], but also returns every internal node's result in
/// bottom-up evaluation order.
pub fn evaluate_plan_trace(
    plan: &IterationPlan,
    inputs: &BTreeMap<String, Polynomial>,
) -> Result<(Polynomial, Vec<PlanNodeResult>), PlanError> {
    let mut trace = Vec::new();
    let (p, _) = evaluate_node(plan, inputs, &mut trace)?;
    Ok((p, trace))
}

fn evaluate_node(
    plan: &IterationPlan,
    inputs: &BTreeMap<String, Polynomial>,
    trace: &mut Vec<PlanNodeResult>,
) -> Result<(Polynomial, Option<usize>), PlanError> {
    match plan {
        IterationPlan::Leaf(name) => {
            let p = inputs
                .get(name)
                .ok_or_else(|| PlanError::UnknownInput(name.clone()))?;
            Ok((p.clone(), None))
        }
        IterationPlan::Resultant { variable, left, right } => {
            let (lp, lv) = evaluate_node(left, inputs, trace)?;
            let (rp, rv) = evaluate_node(right, inputs, trace)?;
            let idx = resolve_variable(variable, &lp)?;
            check_descent(variable, idx, lv, left)?;
            check_descent(variable, idx, rv, right)?;
            let v = lp.ordering().get(idx).expect("resolved").clone();
            let out = resultant(&lp, &rp, &v)?;
            trace.push(PlanNodeResult {
                variable: variable.clone(),
                variable_index: idx,
                result: out.clone(),
            });
            Ok((out, Some(idx)))
        }
        IterationPlan::Discriminant { variable, child } => {
            let (cp, cv) = evaluate_node(child, inputs, trace)?;
            let idx = resolve_variable(variable, &cp)?;
            check_descent(variable, idx, cv, child)?;
            let v = cp.ordering().get(idx).expect("resolved").clone();
            let out = discriminant(&cp, &v)?;
            trace.push(PlanNodeResult {
                variable: variable.clone(),
                variable_index: idx,
                result: out.clone(),
            });
            Ok((out, Some(idx)))
        }
    }
}

fn resolve_variable(name: &str, context: &Polynomial) -> Result<usize, PlanError> {
    context
        .ordering()
        .index_of_name(name)
        .ok_or_else(|| PlanError::UnknownVariable(String::from(name)))
}

fn check_descent(
    outer: &str,
    outer_idx: usize,
    inner_idx: Option<usize>,
    inner: &IterationPlan,
) -> Result<(), PlanError> {
    if let Some(inner_idx) = inner_idx {
        // smaller index = higher variable = eliminated earlier
        if inner_idx >= outer_idx {
            let inner_name = match inner {
                IterationPlan::Resultant { variable, .. }
                | IterationPlan::Discriminant { variable, .. } => variable.clone(),
                IterationPlan::Leaf(_) => unreachable!("leaves carry no variable"),
            };
            return Err(PlanError::OrderViolation {
                outer: String::from(outer),
                inner: inner_name,
            });
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// plan text syntax
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for PlanParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "plan syntax error at offset {}: {}", self.position, self.message)
    }
}

/// Parses the plan syntax
/// `plan := res(var, plan, plan) | disc(var, plan) | name`.
pub fn parse_plan(text: &str) -> Result<IterationPlan, PlanParseError> {
    let mut cursor = PlanCursor { bytes: text.as_bytes(), pos: 0 };
    let plan = cursor.plan()?;
    cursor.skip_ws();
    if cursor.pos < cursor.bytes.len() {
        return Err(cursor.error("trailing input"));
    }
    Ok(plan)
}

struct PlanCursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> PlanCursor<'a> {
    fn error(&self, message: &str) -> PlanParseError {
        PlanParseError { position: self.pos, message: String::from(message) }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), PlanParseError> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(match b {
                b'(' => "expected `(`",
                b')' => "expected `)`",
                b',' => "expected `,`",
                _ => "unexpected input",
            }))
        }
    }

    fn name(&mut self) -> Result<String, PlanParseError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphanumeric())
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a name"));
        }
        let name = core::str::from_utf8(&self.bytes[start..self.pos]).expect("ASCII");
        if !is_valid_name(name) {
            return Err(PlanParseError {
                position: start,
                message: String::from("names start with a letter"),
            });
        }
        Ok(String::from(name))
    }

    fn plan(&mut self) -> Result<IterationPlan, PlanParseError> {
        let name = self.name()?;
        self.skip_ws();
        if self.bytes.get(self.pos) != Some(&b'(') {
            return Ok(IterationPlan::Leaf(name));
        }
        match name.as_str() {
            "res" => {
                self.expect(b'(')?;
                let variable = self.name()?;
                self.expect(b',')?;
                let left = self.plan()?;
                self.expect(b',')?;
                let right = self.plan()?;
                self.expect(b')')?;
                Ok(IterationPlan::Resultant {
                    variable,
                    left: Box::new(left),
                    right: Box::new(right),
                })
            }
            "disc" => {
                self.expect(b'(')?;
                let variable = self.name()?;
                self.expect(b',')?;
                let child = self.plan()?;
                self.expect(b')')?;
                Ok(IterationPlan::Discriminant { variable, child: Box::new(child) })
            }
            _ => Err(self.error("expected `res` or `disc` before `(`")),
        }
    }
}
