//! Text syntax for bi-words and their linear combinations.
//!
//! A bi-word is `[s1,...,sl | r1,...,rl]`; the `| ...` part is omitted when
//! every lower index is zero, so `[3,2,2]` is `[3,2,2 | 0,0,0]`. The empty
//! word is `[]`. A combination is a signed sum of terms `c * word` where `c`
//! is an integer or `n/d` and may be left out when it is one. `0` is the
//! zero combination. Printing produces exactly the form the parser reads.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{BiLetter, BiLinComb, BiWord, Letter, LinComb, Word};
use crate::arith::Rational;
use crate::error::{Error, Result};

pub(super) fn fmt_lincomb<L: Letter>(c: &LinComb<L>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.is_zero() {
        return write!(f, "0");
    }
    for (i, (w, a)) in c.iter().enumerate() {
        let neg = a.is_negative();
        match (i, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        let mag = a.abs();
        if !mag.is_one() {
            write!(f, "{mag} * ")?;
        }
        write!(f, "{w}")?;
    }
    Ok(())
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Self {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn err(&self, msg: String) -> Error {
        Error::Parse { pos: self.pos, msg }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number".into()));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn small(&mut self) -> Result<u32> {
        let at = self.pos;
        let n = self.digits()?;
        u32::try_from(n).map_err(|_| Error::Parse {
            pos: at,
            msg: "index too large".into(),
        })
    }

    fn index_list(&mut self, close: &[u8]) -> Result<Vec<u32>> {
        let mut out = Vec::new();
        if let Some(c) = self.peek() {
            if close.contains(&c) {
                return Ok(out);
            }
        }
        out.push(self.small()?);
        while self.eat(b',') {
            out.push(self.small()?);
        }
        Ok(out)
    }

    fn word(&mut self) -> Result<BiWord> {
        self.expect(b'[')?;
        let s = self.index_list(b"|]")?;
        let r = if self.eat(b'|') {
            self.index_list(b"]")?
        } else {
            vec![0; s.len()]
        };
        self.expect(b']')?;
        if r.len() != s.len() {
            return Err(self.err(format!(
                "{} upper indices but {} lower indices",
                s.len(),
                r.len()
            )));
        }
        if s.contains(&0) {
            return Err(self.err("upper indices must be at least 1".into()));
        }
        Ok(Word(
            s.into_iter()
                .zip(r)
                .map(|(s, r)| BiLetter::new(s, r))
                .collect(),
        ))
    }

    fn coefficient(&mut self) -> Result<Rational> {
        let n = self.digits()?;
        let d = if self.eat(b'/') {
            self.digits()?
        } else {
            BigInt::one()
        };
        if d == BigInt::from(0) {
            return Err(self.err("zero denominator".into()));
        }
        Ok(Rational::new(n, d))
    }
}

pub fn parse_bi_word(s: &str) -> Result<BiWord> {
    let mut cur = Cursor::new(s);
    let w = cur.word()?;
    if !cur.at_end() {
        return Err(cur.err("trailing input".into()));
    }
    Ok(w)
}

pub fn parse_bi_lincomb(s: &str) -> Result<BiLinComb> {
    let mut cur = Cursor::new(s);
    let mut out = LinComb::zero();
    if cur.at_end() {
        return Err(cur.err("empty input".into()));
    }
    let mut first = true;
    loop {
        let mut sign = Rational::one();
        if cur.eat(b'-') {
            sign = -sign;
        } else if !cur.eat(b'+') && !first {
            return Err(cur.err("expected '+' or '-'".into()));
        }
        first = false;
        let coeff = match cur.peek() {
            Some(c) if c.is_ascii_digit() => {
                let c = cur.coefficient()?;
                cur.eat(b'*');
                Some(c)
            }
            _ => None,
        };
        let word = if cur.peek() == Some(b'[') {
            cur.word()?
        } else if coeff.is_some() {
            Word::empty()
        } else {
            return Err(cur.err("expected a coefficient or a word".into()));
        };
        out.add_term(word, sign * coeff.unwrap_or_else(Rational::one));
        if cur.at_end() {
            break;
        }
    }
    Ok(out)
}

/// Index list `s1,...,sl`, optionally bracketed. Entries must be positive.
pub fn parse_index_list(s: &str) -> Result<Vec<u32>> {
    let mut cur = Cursor::new(s);
    let bracketed = cur.eat(b'[');
    let v = cur.index_list(b"]")?;
    if bracketed {
        cur.expect(b']')?;
    }
    if !cur.at_end() {
        return Err(cur.err("trailing input".into()));
    }
    if v.contains(&0) {
        return Err(Error::Parse {
            pos: 0,
            msg: "indices must be at least 1".into(),
        });
    }
    Ok(v)
}
