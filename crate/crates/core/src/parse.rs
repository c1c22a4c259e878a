//! Parser for the canonical polynomial text format.
//!
//! Accepted syntax: decimal integer literals, variable names drawn from the
//! active ordering, the operators `+ - * ^`, and parentheses. Multiplication
//! is always explicit (`2*x`, never `2x`), `^` takes a nonnegative integer
//! literal, and a single leading `-` may negate the first term of any
//! (sub)expression. Parsing the rendered form of a polynomial returns the
//! identical polynomial.

use alloc::string::String;
use alloc::sync::Arc;
use core::fmt;

use num_bigint::BigInt;

use crate::poly::Polynomial;
use crate::variable::VariableOrdering;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedEnd,
    UnexpectedChar(char),
    UnknownVariable(String),
    ExponentTooLarge,
    TrailingInput,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::UnexpectedEnd => {
                write!(f, "syntax error at offset {}: unexpected end of input", self.position)
            }
            ParseErrorKind::UnexpectedChar(c) => {
                write!(f, "syntax error at offset {}: unexpected `{c}`", self.position)
            }
            ParseErrorKind::UnknownVariable(name) => {
                write!(f, "unknown variable `{name}` at offset {}", self.position)
            }
            ParseErrorKind::ExponentTooLarge => {
                write!(f, "exponent at offset {} does not fit", self.position)
            }
            ParseErrorKind::TrailingInput => {
                write!(f, "syntax error at offset {}: trailing input", self.position)
            }
        }
    }
}

pub fn parse(text: &str, ordering: &Arc<VariableOrdering>) -> Result<Polynomial, ParseError> {
    let mut cursor = Cursor { bytes: text.as_bytes(), pos: 0, ordering };
    let poly = cursor.expr()?;
    cursor.skip_ws();
    if cursor.pos < cursor.bytes.len() {
        return Err(cursor.err_here(ParseErrorKind::TrailingInput));
    }
    Ok(poly)
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
    ordering: &'a Arc<VariableOrdering>,
}

impl<'a> Cursor<'a> {
    fn err_here(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { position: self.pos, kind }
    }

    fn skip_ws(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b' ' || b == b'\t' {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg_ref();
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let exp = self.natural_u32()?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            None => Err(ParseError { position: self.bytes.len(), kind: ParseErrorKind::UnexpectedEnd }),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(b')') => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    Some(c) => Err(self.err_here(ParseErrorKind::UnexpectedChar(c as char))),
                    None => Err(ParseError {
                        position: self.bytes.len(),
                        kind: ParseErrorKind::UnexpectedEnd,
                    }),
                }
            }
            Some(b) if b.is_ascii_digit() => {
                let digits = self.digit_run();
                let value = BigInt::parse_bytes(digits, 10).expect("digit run is a valid decimal");
                Ok(Polynomial::constant(self.ordering, value))
            }
            Some(b) if b.is_ascii_alphabetic() => {
                let start = self.pos;
                while self
                    .bytes
                    .get(self.pos)
                    .is_some_and(|b| b.is_ascii_alphanumeric())
                {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.bytes[start..self.pos])
                    .expect("ASCII alphanumeric run");
                match self.ordering.index_of_name(name) {
                    Some(idx) => Ok(Polynomial::from_terms(
                        self.ordering,
                        [(crate::monomial::Monomial::variable(idx as u32), BigInt::from(1))],
                    )),
                    None => Err(ParseError {
                        position: start,
                        kind: ParseErrorKind::UnknownVariable(String::from(name)),
                    }),
                }
            }
            Some(c) => Err(self.err_here(ParseErrorKind::UnexpectedChar(c as char))),
        }
    }

    fn digit_run(&mut self) -> &'a [u8] {
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        &self.bytes[start..self.pos]
    }

    fn natural_u32(&mut self) -> Result<u32, ParseError> {
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let start = self.pos;
                let digits = self.digit_run();
                core::str::from_utf8(digits)
                    .expect("digits")
                    .parse::<u32>()
                    .map_err(|_| ParseError { position: start, kind: ParseErrorKind::ExponentTooLarge })
            }
            Some(c) => Err(self.err_here(ParseErrorKind::UnexpectedChar(c as char))),
            None => Err(ParseError {
                position: self.bytes.len(),
                kind: ParseErrorKind::UnexpectedEnd,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn ord() -> Arc<VariableOrdering> {
        VariableOrdering::from_names(&["z", "y", "x"]).unwrap()
    }

    #[test]
    fn parses_the_sample_system() {
        let f = parse("y^2 + z^2 + x + z - 1", &ord()).unwrap();
        assert_eq!(f.num_terms(), 5);
        assert_eq!(f.total_degree(), Some(2));
        let zero = parse("0", &ord()).unwrap();
        assert!(zero.is_zero());
        assert_eq!(
            parse("(x+1)*(x-1)", &ord()).unwrap(),
            parse("x^2 - 1", &ord()).unwrap()
        );
    }

    #[test]
    fn render_parse_fixed_point() {
        let texts = [
            "y^2 + z^2 + x + z - 1",
            "-x^2 + y^2 + z^2 - 1",
            "5*x^8 + 16*x^7 + 14*x^6 - 2*x^5 - 12*x^4 - 8*x^3 + 3*x^2 + 2*x",
            "0",
            "-7",
            "z^2*y*x^3 - 12",
        ];
        for t in texts {
            let p = parse(t, &ord()).unwrap();
            let rendered = p.to_string();
            assert_eq!(parse(&rendered, &ord()).unwrap(), p, "round-trip of `{t}`");
        }
    }

    #[test]
    fn error_positions() {
        let err = parse("x + ", &ord()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedEnd);

        let err = parse("x + w", &ord()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownVariable("w".to_string()));
        assert_eq!(err.position, 4);

        let err = parse("2x", &ord()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::TrailingInput);
        assert_eq!(err.position, 1);

        let err = parse("x ^ y", &ord()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedChar('y'));

        let err = parse("(x + 1", &ord()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedEnd);

        assert!(parse("x^99999999999", &ord()).is_err());
    }

    #[test]
    fn no_implicit_multiplication() {
        assert!(parse("2 x", &ord()).is_err());
        assert!(parse("x y", &ord()).is_err());
        assert!(parse("2(x+1)", &ord()).is_err());
    }
}
