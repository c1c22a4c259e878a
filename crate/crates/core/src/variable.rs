//! Variables and elimination orderings.
//!
//! A [`VariableOrdering`] lists the variables of a polynomial system with the
//! variable to be eliminated first at position 0 (the "highest" variable).
//! Every comparison of variables goes through their position in the active
//! ordering; names themselves carry no order.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

/// A named variable. Names are nonempty ASCII, a letter followed by letters
/// or digits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variable {
    name: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VariableError {
    InvalidName(String),
    DuplicateName(String),
    Empty,
}

impl fmt::Display for VariableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VariableError::InvalidName(name) => write!(f, "invalid variable name `{name}`"),
            VariableError::DuplicateName(name) => write!(f, "duplicate variable `{name}`"),
            VariableError::Empty => write!(f, "an ordering needs at least one variable"),
        }
    }
}

pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric())
}

impl Variable {
    pub fn new(name: &str) -> Result<Self, VariableError> {
        if is_valid_name(name) {
            Ok(Variable { name: String::from(name) })
        } else {
            Err(VariableError::InvalidName(String::from(name)))
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// An elimination ordering: position 0 is eliminated first and compares
/// highest. Duplicates are rejected.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableOrdering {
    vars: Vec<Variable>,
}

impl VariableOrdering {
    pub fn new(vars: Vec<Variable>) -> Result<Arc<Self>, VariableError> {
        if vars.is_empty() {
            return Err(VariableError::Empty);
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].iter().any(|u| u.name == v.name) {
                return Err(VariableError::DuplicateName(v.name.clone()));
            }
        }
        Ok(Arc::new(VariableOrdering { vars }))
    }

    /// Builds an ordering from names listed highest (eliminated first) to
    /// lowest.
    pub fn from_names(names: &[&str]) -> Result<Arc<Self>, VariableError> {
        let vars = names
            .iter()
            .map(|n| Variable::new(n))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vars)
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }

    pub fn get(&self, index: usize) -> Option<&Variable> {
        self.vars.get(index)
    }

    /// Position of `v` in the ordering; 0 is the highest variable.
    pub fn index_of(&self, v: &Variable) -> Option<usize> {
        self.index_of_name(v.name())
    }

    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|u| u.name == name)
    }

    /// The last (lowest) variable, the one that survives a full elimination.
    pub fn lowest(&self) -> &Variable {
        self.vars.last().expect("ordering is nonempty")
    }
}

impl fmt::Display for VariableOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vars.iter().enumerate() {
            if i > 0 {
                f.write_str(" > ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
