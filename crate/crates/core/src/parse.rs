//! Recursive-descent parser for the topology language.
//!
//! ```text
//! expr  := prim | comb
//! prim  := "complete(" INT ")" | "cycle(" INT ")" | "star(" INT ")"
//!        | "path(" INT ")" | "mesh(" INT { "," INT } ")" | "tree(" INT "," INT ")"
//! comb  := "wedge(" expr { "," expr } ")" | "rprod(" expr "," expr ")"
//!        | "power(" expr "," INT ")" | "attach(" expr ")"
//! INT   := [0-9]+
//! ```
//!
//! Whitespace is allowed between any two tokens. Parameter ranges are not
//! checked here; see [`TopologyExpr::validate`].

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::expr::{Primitive, TopologyExpr};

const KEYWORDS: &str = "complete, cycle, star, path, mesh, tree, wedge, rprod, power or attach";

/// First syntax error in the input.
///
/// `position` is a 1-based byte position; end of input reports `len + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: expected {expected}, found {found}")]
pub struct ParseError {
    pub position: usize,
    pub expected: String,
    pub found: String,
}

pub fn parse(input: &str) -> Result<TopologyExpr, ParseError> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
    };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("end of input"));
    }
    Ok(expr)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

enum Found<'a> {
    End,
    Byte(u8),
    Word(&'a str),
}

impl fmt::Display for Found<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Found::End => f.write_str("end of input"),
            Found::Byte(b) if b.is_ascii_graphic() => write!(f, "`{}`", *b as char),
            Found::Byte(b) => write!(f, "byte 0x{b:02x}"),
            Found::Word(w) => write!(f, "`{w}`"),
        }
    }
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn found(&self) -> Found<'a> {
        match self.peek() {
            None => Found::End,
            Some(b) if b.is_ascii_alphanumeric() => {
                let end = self.src[self.pos..]
                    .iter()
                    .position(|b| !b.is_ascii_alphanumeric())
                    .map_or(self.src.len(), |n| self.pos + n);
                // ASCII-only run, always valid UTF-8
                Found::Word(std::str::from_utf8(&self.src[self.pos..end]).unwrap_or("?"))
            }
            Some(b) => Found::Byte(b),
        }
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError {
            position: self.pos + 1,
            expected: expected.to_string(),
            found: self.found().to_string(),
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("`{}`", byte as char)))
        }
    }

    /// Consumes `byte` if it is the next token.
    fn eat(&mut self, byte: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<BigUint, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("integer"));
        }
        Ok(BigUint::parse_bytes(&self.src[start..self.pos], 10).expect("digits only"))
    }

    fn keyword(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_lowercase()) {
            self.pos += 1;
        }
        let word = std::str::from_utf8(&self.src[start..self.pos]).expect("ASCII only");
        let known = matches!(
            word,
            "complete"
                | "cycle"
                | "star"
                | "path"
                | "mesh"
                | "tree"
                | "wedge"
                | "rprod"
                | "power"
                | "attach"
        );
        if !known {
            self.pos = start;
            return Err(self.error(KEYWORDS));
        }
        Ok(word)
    }

    fn expr(&mut self) -> Result<TopologyExpr, ParseError> {
        let word = self.keyword()?;
        self.expect(b'(')?;
        let expr = match word {
            "complete" => Primitive::Complete(self.int()?).into(),
            "cycle" => Primitive::Cycle(self.int()?).into(),
            "star" => Primitive::Star(self.int()?).into(),
            "path" => Primitive::Path(self.int()?).into(),
            "mesh" => {
                let mut dims = vec![self.int()?];
                while self.eat(b',') {
                    dims.push(self.int()?);
                }
                Primitive::Mesh(dims).into()
            }
            "tree" => {
                let arity = self.int()?;
                self.expect(b',')?;
                let depth = self.int()?;
                Primitive::Tree { arity, depth }.into()
            }
            "wedge" => {
                let mut children = vec![self.expr()?];
                while self.eat(b',') {
                    children.push(self.expr()?);
                }
                TopologyExpr::Wedge(children)
            }
            "rprod" => {
                let left = self.expr()?;
                self.expect(b',')?;
                let right = self.expr()?;
                TopologyExpr::RootedProduct(Box::new(left), Box::new(right))
            }
            "power" => {
                let base = self.expr()?;
                self.expect(b',')?;
                let exponent = self.int()?;
                TopologyExpr::Power {
                    base: Box::new(base),
                    exponent,
                }
            }
            "attach" => TopologyExpr::Attach(Box::new(self.expr()?)),
            _ => unreachable!("keyword() only returns known words"),
        };
        self.expect(b')')?;
        Ok(expr)
    }
}
