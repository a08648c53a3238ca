//! Text form of Laurent polynomials.
//!
//! Terms are written in decreasing exponent order as `c*q^k`, joined by
//! ` + ` / ` - `. Unit coefficients are omitted (`q^2`, `-q`), exponent one is
//! written `q`, constants stand alone, and rational coefficients use `p/r`:
//!
//! ```text
//! 1/2*q^3 - 2*q + 1
//! q^-1 + 3
//! ```
//!
//! The zero polynomial prints as `0`. Printing then parsing is the identity.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{is_negative, LaurentPoly};
use super::RingError;

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms().rev().enumerate() {
            let neg = is_negative(c);
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            write_term(f, &abs, k)?;
        }
        Ok(())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, abs: &BigRational, k: i64) -> fmt::Result {
    if k == 0 {
        return write_rational(f, abs);
    }
    if !abs.is_one() {
        write_rational(f, abs)?;
        f.write_str("*")?;
    }
    if k == 1 {
        f.write_str("q")
    } else {
        write!(f, "q^{k}")
    }
}

impl LaurentPoly {
    /// Math-mode LaTeX, e.g. `2q^{3} - q^{-1}`. The parser accepts it back.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms().rev().enumerate() {
            let neg = is_negative(c);
            out.push_str(match (i, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            let abs = c.abs();
            let coeff = if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format!("{}/{}", abs.numer(), abs.denom())
            };
            match k {
                0 => out.push_str(&coeff),
                _ => {
                    if !abs.is_one() {
                        out.push_str(&coeff);
                    }
                    out.push('q');
                    if k != 1 {
                        out.push_str(&format!("^{{{k}}}"));
                    }
                }
            }
        }
        out
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl FromStr for LaurentPoly {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser::new(s).parse()
    }
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            src,
            chars: src.char_indices().collect(),
            pos: 0,
        }
    }

    fn err(&self, msg: &str) -> RingError {
        let at = self.chars.get(self.pos).map_or(self.src.len(), |(i, _)| *i);
        RingError::Parse {
            input: self.src.to_string(),
            position: at,
            message: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-') | Some('\u{2212}') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let digits: String = self.chars[start..self.pos].iter().map(|(_, c)| c).collect();
        digits.parse().ok()
    }

    fn parse(mut self) -> Result<LaurentPoly, RingError> {
        let mut terms = Vec::new();
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.err("empty input"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let neg = match self.sign() {
                Some(n) => n,
                None if first => false,
                None => return Err(self.err("expected '+' or '-' between terms")),
            };
            self.skip_ws();
            let (k, mut c) = self.term()?;
            if neg {
                c = -c;
            }
            terms.push((k, c));
            first = false;
            self.skip_ws();
            if self.peek().is_none() {
                break;
            }
        }
        Ok(terms.into_iter().collect())
    }

    fn term(&mut self) -> Result<(i64, BigRational), RingError> {
        let coeff = match self.integer() {
            Some(n) => {
                let d = if self.eat('/') {
                    let d = self
                        .integer()
                        .ok_or_else(|| self.err("expected denominator"))?;
                    if d.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    d
                } else {
                    BigInt::one()
                };
                Some(BigRational::new(n, d))
            }
            None => None,
        };
        self.skip_ws();
        let had_star = self.eat('*');
        self.skip_ws();
        if self.eat('q') {
            self.skip_ws();
            let exp = if self.eat('^') {
                self.skip_ws();
                let close = if self.eat('(') {
                    Some(')')
                } else if self.eat('{') {
                    Some('}')
                } else {
                    None
                };
                let neg = matches!(self.sign(), Some(true));
                let e = self
                    .integer()
                    .ok_or_else(|| self.err("expected exponent"))?;
                if let Some(c) = close {
                    if !self.eat(c) {
                        return Err(self.err(&format!("expected '{c}'")));
                    }
                }
                let e: i64 = e
                    .try_into()
                    .map_err(|_| self.err("exponent out of range"))?;
                if neg {
                    -e
                } else {
                    e
                }
            } else {
                1
            };
            Ok((exp, coeff.unwrap_or_else(BigRational::one)))
        } else if had_star {
            Err(self.err("expected 'q' after '*'"))
        } else {
            coeff
                .map(|c| (0, c))
                .ok_or_else(|| self.err("expected coefficient or 'q'"))
        }
    }
}
