//! Surface syntax for generator words.
//!
//! ```text
//! word   := term+
//! term   := gen suffix?
//! gen    := "p" | "x" | "y" | "ta" | "tb" | "a" | "b"
//! suffix := "'" | "^" ["+" | "-"] digit+
//! ```
//!
//! Whitespace and `*` may separate terms. `'` is the inverse. Adjacent terms
//! with the same generator are merged and terms whose exponents cancel are
//! dropped, so `x x'` parses to the empty word.

use std::fmt;

use crate::error::{Error, Result};
use crate::hol::{HolElt, HolGen};
use crate::word::Sign;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WordExpr {
    terms: Vec<(HolGen, i64)>,
}

impl WordExpr {
    pub fn from_terms<I: IntoIterator<Item = (HolGen, i64)>>(terms: I) -> WordExpr {
        let mut out = WordExpr::default();
        for (g, e) in terms {
            out.push(g, e);
        }
        out
    }

    pub fn from_letters(letters: &[(HolGen, Sign)]) -> WordExpr {
        WordExpr::from_terms(letters.iter().map(|&(g, s)| (g, s.as_i64())))
    }

    fn push(&mut self, g: HolGen, e: i64) {
        match self.terms.last_mut() {
            Some((h, f)) if *h == g => {
                *f += e;
                if *f == 0 {
                    self.terms.pop();
                }
            }
            _ if e != 0 => self.terms.push((g, e)),
            _ => {}
        }
    }

    pub fn terms(&self) -> &[(HolGen, i64)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn letters(&self) -> Vec<(HolGen, Sign)> {
        self.terms
            .iter()
            .flat_map(|&(g, e)| {
                let s = if e > 0 { Sign::Pos } else { Sign::Neg };
                std::iter::repeat_n((g, s), e.unsigned_abs() as usize)
            })
            .collect()
    }

    pub fn eval(&self) -> HolElt {
        self.terms.iter().fold(HolElt::identity(), |acc, &(g, e)| {
            acc.mul(&HolElt::generator(g).pow(e))
        })
    }

    pub fn inverse(&self) -> WordExpr {
        WordExpr::from_terms(self.terms.iter().rev().map(|&(g, e)| (g, -e)))
    }

    pub fn concat(&self, other: &WordExpr) -> WordExpr {
        WordExpr::from_terms(self.terms.iter().chain(other.terms.iter()).copied())
    }
}

impl fmt::Display for WordExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|&(g, e)| match e {
                1 => g.name().to_string(),
                -1 => format!("{}'", g.name()),
                e => format!("{}^{e}", g.name()),
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Syntax {
            position: self.pos,
            expected: expected.to_string(),
        })
    }

    fn skip_separators(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace() || c == b'*') {
            self.pos += 1;
        }
    }

    fn gen(&mut self) -> Result<HolGen> {
        let g = match self.peek() {
            Some(b'p') => HolGen::P,
            Some(b'x') => HolGen::X,
            Some(b'y') => HolGen::Y,
            Some(b'a') => HolGen::A,
            Some(b'b') => HolGen::B,
            Some(b't') => {
                self.pos += 1;
                let g = match self.peek() {
                    Some(b'a') => HolGen::Ta,
                    Some(b'b') => HolGen::Tb,
                    _ => return self.err("'a' or 'b' after 't'"),
                };
                self.pos += 1;
                return Ok(g);
            }
            _ => return self.err("generator (p, x, y, ta, tb, a, b)"),
        };
        self.pos += 1;
        Ok(g)
    }

    fn exponent(&mut self) -> Result<i64> {
        match self.peek() {
            Some(b'\'') => {
                self.pos += 1;
                Ok(-1)
            }
            Some(b'^') => {
                self.pos += 1;
                let neg = match self.peek() {
                    Some(b'-') => {
                        self.pos += 1;
                        true
                    }
                    Some(b'+') => {
                        self.pos += 1;
                        false
                    }
                    _ => false,
                };
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    self.pos += 1;
                }
                if start == self.pos {
                    return self.err("integer exponent after '^'");
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                let value: i64 = match digits.parse() {
                    Ok(v) => v,
                    Err(_) => {
                        return Err(Error::Syntax {
                            position: start,
                            expected: "exponent within i64 range".into(),
                        })
                    }
                };
                if value == 0 {
                    return Err(Error::Syntax {
                        position: start,
                        expected: "nonzero exponent".into(),
                    });
                }
                Ok(if neg { -value } else { value })
            }
            _ => Ok(1),
        }
    }
}

pub fn parse_word(input: &str) -> Result<WordExpr> {
    let mut cur = Cursor {
        src: input.as_bytes(),
        pos: 0,
    };
    let mut out = WordExpr::default();
    let mut seen_term = false;
    loop {
        cur.skip_separators();
        if cur.peek().is_none() {
            break;
        }
        let g = cur.gen()?;
        let e = cur.exponent()?;
        out.push(g, e);
        seen_term = true;
        match cur.peek() {
            None => {}
            Some(c) if c.is_ascii_whitespace() || c == b'*' => {}
            Some(b'p' | b'x' | b'y' | b't' | b'a' | b'b') => {}
            Some(_) => return cur.err("generator, separator, ' or ^"),
        }
    }
    if !seen_term {
        return cur.err("generator (p, x, y, ta, tb, a, b)");
    }
    Ok(out)
}

/// Parses and evaluates; panics on malformed input. For static tables.
pub fn hol(input: &str) -> HolElt {
    parse_word(input)
        .unwrap_or_else(|e| panic!("bad static word {input:?}: {e}"))
        .eval()
}
