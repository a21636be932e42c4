//! Text syntax for words and linear combinations.
//!
//! Letters are `x1`, `x1*`, `x2`, ... (`x` alone means `x1`). Words are
//! concatenations, optionally separated by `·` or spaces; `1` is the unit
//! word. Linear combinations read `c1*w1 + c2*w2 - ...` with exact
//! coefficients `p` or `p/q`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::elements::{FreeElement, NecklaceElement};
use super::word::{Letter, Word};
use crate::error::{Error, Result};
use crate::lincomb::Rational;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn skip_separators(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace() || c == '·') {
            self.bump();
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.src, self.pos, msg)
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn rational(&mut self) -> Result<Option<Rational>> {
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        let num: BigInt = num.parse().map_err(|_| self.err("bad integer"))?;
        if self.peek() == Some('/') {
            self.bump();
            let den = self
                .digits()
                .ok_or_else(|| self.err("expected denominator"))?;
            let den: BigInt = den.parse().map_err(|_| self.err("bad integer"))?;
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            return Ok(Some(Rational::new(num, den)));
        }
        Ok(Some(Rational::from_integer(num)))
    }

    fn letter(&mut self) -> Result<Option<Letter>> {
        if self.peek() != Some('x') {
            return Ok(None);
        }
        self.bump();
        let index = match self.digits() {
            Some(d) => d
                .parse::<usize>()
                .map_err(|_| self.err("bad letter index"))?,
            None => 1,
        };
        if index == 0 || index > u16::MAX as usize / 2 {
            return Err(self.err("letter index out of range"));
        }
        let starred = if self.peek() == Some('*') {
            self.bump();
            true
        } else {
            false
        };
        Ok(Some(Letter::new(index, starred)))
    }

    /// Letters up to the next operator; `None` when no letter follows.
    fn word(&mut self) -> Result<Option<Word>> {
        let mut letters = Vec::new();
        loop {
            let save = self.pos;
            self.skip_separators();
            match self.letter()? {
                Some(l) => letters.push(l),
                None => {
                    self.pos = save;
                    break;
                }
            }
        }
        Ok((!letters.is_empty()).then(|| Word::new(letters)))
    }
}

/// Parses a single word; `1` denotes the empty word.
pub fn parse_word(s: &str) -> Result<Word> {
    let mut c = Cursor { src: s, pos: 0 };
    c.skip_ws();
    if c.peek() == Some('1') {
        c.bump();
        c.skip_ws();
        if c.peek().is_some() {
            return Err(c.err("trailing input after unit word"));
        }
        return Ok(Word::unit());
    }
    let w = c.word()?.ok_or_else(|| c.err("expected a word"))?;
    c.skip_ws();
    if c.peek().is_some() {
        return Err(c.err("trailing input"));
    }
    Ok(w)
}

/// Parses a linear combination of words.
pub fn parse_free(s: &str) -> Result<FreeElement> {
    let mut c = Cursor { src: s, pos: 0 };
    let mut out = FreeElement::zero();
    let mut first = true;
    loop {
        c.skip_ws();
        if c.peek().is_none() {
            if first {
                return Err(c.err("empty expression"));
            }
            break;
        }
        let mut sign = Rational::one();
        match c.peek() {
            Some('+') => {
                c.bump();
            }
            Some('-') => {
                c.bump();
                sign = -sign;
            }
            _ if !first => return Err(c.err("expected '+' or '-'")),
            _ => {}
        }
        c.skip_ws();
        let coeff = c.rational()?;
        if coeff.is_some() {
            c.skip_ws();
            if c.peek() == Some('*') {
                c.bump();
                c.skip_ws();
            }
        }
        let word = c.word()?;
        let (w, k) = match (word, coeff) {
            (Some(w), k) => (w, k.unwrap_or_else(Rational::one)),
            (None, Some(k)) => (Word::unit(), k),
            (None, None) => return Err(c.err("expected a coefficient or a word")),
        };
        out.add_term(w, sign * k);
        first = false;
    }
    Ok(out)
}

/// Parses a linear combination and projects it to necklaces.
pub fn parse_necklace(s: &str) -> Result<NecklaceElement> {
    Ok(parse_free(s)?.project())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::{rat, ratio};

    #[test]
    fn words() {
        let w = parse_word("x1x1*·x2").unwrap();
        assert_eq!(w.to_string(), "x1x1*x2");
        assert_eq!(parse_word("x x*").unwrap().to_string(), "x1x1*");
        assert!(parse_word("1").unwrap().is_empty());
        assert!(parse_word("y").is_err());
        assert!(parse_word("x0").is_err());
    }

    #[test]
    fn combinations() {
        let e = parse_free("2*x1x1* - 1/2 x1*x1* + 3").unwrap();
        assert_eq!(e.coeff(&parse_word("x1x1*").unwrap()), rat(2));
        assert_eq!(e.coeff(&parse_word("x1*x1*").unwrap()), ratio(-1, 2));
        assert_eq!(e.coeff(&Word::unit()), rat(3));
        assert_eq!(e.len(), 3);
        assert_eq!(parse_free("-x1 + x1").unwrap(), FreeElement::zero());
        assert!(parse_free("").is_err());
        assert!(parse_free("2 x1 x1").is_ok());
        assert!(parse_free("x1 +").is_err());
        assert!(parse_free("1/0*x1").is_err());
    }

    #[test]
    fn display_round_trip() {
        let e = parse_free("-3/4*x1x2* + x2 - 5 + x1*x1*x1").unwrap();
        assert_eq!(parse_free(&e.to_string()).unwrap(), e);
    }
}
