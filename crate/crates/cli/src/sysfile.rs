//! Polynomial system files.
//!
//! ```text
//! # comment
//! vars: z, y, x
//! f = y^2 + z^2 + x + z - 1
//! g = -x^2 + y^2 + z^2 - 1
//! h = x^2 + y + z
//! ```
//!
//! The `vars:` line lists variables highest (eliminated first) to lowest and
//! fixes the elimination order; there are no reordering flags. Input must be
//! ASCII; `#` starts a comment.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use iterres_core::parse::parse;
use iterres_core::poly::Polynomial;
use iterres_core::variable::{is_valid_name, VariableOrdering};

#[derive(Debug)]
pub struct SystemFile {
    pub ordering: Arc<VariableOrdering>,
    /// Definitions in file order.
    pub definitions: Vec<(String, Polynomial)>,
}

impl SystemFile {
    pub fn named(&self) -> BTreeMap<String, Polynomial> {
        self.definitions.iter().cloned().collect()
    }

    pub fn system(&self) -> Vec<Polynomial> {
        self.definitions.iter().map(|(_, p)| p.clone()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Polynomial> {
        self.definitions
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, p)| p)
    }
}

#[derive(Debug)]
pub struct SysFileError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for SysFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

fn err(line: usize, message: impl Into<String>) -> SysFileError {
    SysFileError { line, message: message.into() }
}

pub fn parse_system(text: &str) -> Result<SystemFile, SysFileError> {
    if let Some(pos) = text.bytes().position(|b| b >= 0x80) {
        let line = text[..pos].bytes().filter(|&b| b == b'\n').count() + 1;
        return Err(err(line, "system files are ASCII only"));
    }
    let mut ordering: Option<Arc<VariableOrdering>> = None;
    let mut definitions: Vec<(String, Polynomial)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(k) => &raw[..k],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        match &ordering {
            None => {
                let Some(rest) = line.strip_prefix("vars:") else {
                    return Err(err(line_no, "expected a `vars:` line first"));
                };
                let names: Vec<&str> = rest.split(',').map(str::trim).collect();
                if names.iter().any(|n| n.is_empty()) {
                    return Err(err(line_no, "empty variable name in `vars:`"));
                }
                let ord = VariableOrdering::from_names(&names)
                    .map_err(|e| err(line_no, e.to_string()))?;
                ordering = Some(ord);
            }
            Some(ord) => {
                let Some((name, expr)) = line.split_once('=') else {
                    return Err(err(line_no, format!("expected `name = polynomial`, got `{line}`")));
                };
                let name = name.trim();
                let expr = expr.trim();
                if !is_valid_name(name) {
                    return Err(err(line_no, format!("invalid polynomial name `{name}`")));
                }
                if ord.index_of_name(name).is_some() {
                    return Err(err(
                        line_no,
                        format!("polynomial name `{name}` collides with a variable"),
                    ));
                }
                if definitions.iter().any(|(n, _)| n == name) {
                    return Err(err(line_no, format!("duplicate polynomial name `{name}`")));
                }
                let poly = parse(expr, ord)
                    .map_err(|e| err(line_no, format!("in `{name}`: {e}")))?;
                definitions.push((name.to_string(), poly));
            }
        }
    }
    let ordering = ordering.ok_or_else(|| err(1, "missing `vars:` line"))?;
    Ok(SystemFile { ordering, definitions })
}
