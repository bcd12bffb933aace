//! Text syntax for class specs:
//!
//! ```text
//! av:321,3412 | rc(SPEC) | union(SPEC,SPEC) | inter(SPEC,SPEC)
//! sumclosure:monotone-skew-monotone | sumclosure:layered-skew-one | sumclosure:set(231,312)
//! geom:[-1,1;1,-1]
//! ```
//!
//! Whitespace is ignored. Basis permutations use the compact digit form.

use std::str::FromStr;

use super::{ClassSpec, GeneratorFamily};
use crate::error::{Error, Result};
use crate::grid::GridMatrix;
use crate::perm::Permutation;

impl FromStr for ClassSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut parser = Parser { text: &text, pos: 0 };
        let spec = parser.spec()?;
        if parser.pos != text.len() {
            return Err(Error::format(parser.rest_token(), "unexpected trailing input"));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    /// The next token, for error messages.
    fn rest_token(&self) -> String {
        let rest = self.rest();
        let end = rest
            .find(|c: char| matches!(c, ',' | '(' | ')' | ';' | '[' | ']'))
            .unwrap_or(rest.len());
        if end == 0 {
            rest.chars().next().map(String::from).unwrap_or_else(|| "<end of input>".into())
        } else {
            rest[..end].to_string()
        }
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.rest().starts_with(lit) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.eat(lit) {
            Ok(())
        } else {
            Err(Error::format(self.rest_token(), format!("expected `{lit}`")))
        }
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn spec(&mut self) -> Result<ClassSpec> {
        if self.eat("av:") {
            let basis = self.perm_list()?;
            Ok(ClassSpec::avoid(basis))
        } else if self.eat("rc(") {
            let inner = self.spec()?;
            self.expect(")")?;
            Ok(ClassSpec::rc(inner))
        } else if self.eat("union(") {
            let (a, b) = self.pair()?;
            Ok(ClassSpec::union(a, b))
        } else if self.eat("inter(") {
            let (a, b) = self.pair()?;
            Ok(ClassSpec::inter(a, b))
        } else if self.eat("sumclosure:") {
            let family = self.family()?;
            ClassSpec::sum_closure(family)
        } else if self.eat("geom:") {
            let matrix = self.matrix()?;
            Ok(ClassSpec::geom(matrix))
        } else {
            Err(Error::format(self.rest_token(), "unknown class spec"))
        }
    }

    fn pair(&mut self) -> Result<(ClassSpec, ClassSpec)> {
        let a = self.spec()?;
        self.expect(",")?;
        let b = self.spec()?;
        self.expect(")")?;
        Ok((a, b))
    }

    fn perm(&mut self) -> Result<Permutation> {
        let token = self.rest_token();
        let digits = token.find(|c: char| !c.is_ascii_digit()).unwrap_or(token.len());
        if digits == 0 {
            return Err(Error::format(token, "expected a permutation"));
        }
        if digits < token.len() {
            return Err(Error::format(&token[digits..], "expected a digit"));
        }
        let perm = token.parse::<Permutation>()?;
        self.pos += token.len();
        Ok(perm)
    }

    /// Comma-separated permutations; stops before a comma not followed by a digit.
    fn perm_list(&mut self) -> Result<Vec<Permutation>> {
        let mut out = vec![self.perm()?];
        while self.rest().starts_with(',')
            && self.rest()[1..].starts_with(|c: char| c.is_ascii_digit())
        {
            self.pos += 1;
            out.push(self.perm()?);
        }
        Ok(out)
    }

    fn family(&mut self) -> Result<GeneratorFamily> {
        if self.eat("monotone-skew-monotone") {
            Ok(GeneratorFamily::MonotoneSkewMonotone)
        } else if self.eat("layered-skew-one") {
            Ok(GeneratorFamily::LayeredSkewOne)
        } else if self.eat("set(") {
            let gens = self.perm_list()?;
            self.expect(")")?;
            Ok(GeneratorFamily::finite(gens))
        } else {
            Err(Error::format(self.rest_token(), "unknown generator family"))
        }
    }

    fn matrix(&mut self) -> Result<GridMatrix> {
        let bracketed = self.eat("[");
        let start = self.pos;
        loop {
            match self.peek() {
                Some('-') | Some('0'..='9') | Some(';') => self.pos += 1,
                // a comma continues the matrix only when an entry follows
                Some(',')
                    if self.rest()[1..].starts_with(|c: char| c == '-' || c.is_ascii_digit()) =>
                {
                    self.pos += 1
                }
                _ => break,
            }
        }
        let body = &self.text[start..self.pos];
        let matrix = body.parse::<GridMatrix>()?;
        if bracketed {
            self.expect("]")?;
        }
        Ok(matrix)
    }
}
