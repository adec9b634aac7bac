//! Text syntax for presentations.
//!
//! ```text
//! presentation := ['<'] names '|' [relation {',' relation}] ['>']
//! relation     := word {'=' word}
//! word         := term {['*' | '.'] term}
//! term         := factor {'^' exponent}
//! exponent     := ['-'] digits | name | '{' (['-'] digits | word) '}'
//! factor       := name | '1' | '(' word ')' | '[' word ',' word {',' word} ']'
//! ```
//!
//! Names are a letter followed by digits or underscores, so `bc` is `b c`.
//! `x^y` with `y` a generator (or braced word) is the conjugate `y^-1 x y`;
//! `[x, y]` is `x^-1 y^-1 x y`, left-normed for more entries. A relation
//! `u = v = w` yields the relators `u v^-1` and `v w^-1`.

use super::{Presentation, Word};
use crate::error::{Error, Result};

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut p = Parser { chars: text.char_indices().collect(), pos: 0, len: text.len(), names: Vec::new() };
    p.parse()
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
    names: Vec<String>,
}

impl Parser {
    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(o, _)| o)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.offset(), msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.err(format!("expected `{c}`, found `{found}`")),
                None => self.err(format!("expected `{c}`, found end of input")),
            }
        }
    }

    fn parse(&mut self) -> Result<Presentation> {
        let bracketed = self.eat('<') || self.eat('⟨');
        if self.peek() != Some('|') {
            loop {
                let at = self.offset();
                let name = self.name()?;
                if self.names.contains(&name) {
                    return Err(Error::Syntax { pos: at, msg: format!("generator `{name}` declared twice") });
                }
                self.names.push(name);
                if !self.eat(',') {
                    break;
                }
            }
        }
        self.expect('|')?;
        let mut relators = Vec::new();
        let at_end = |p: &mut Parser| matches!(p.peek(), None | Some('>') | Some('⟩'));
        if !at_end(self) {
            loop {
                self.relation(&mut relators)?;
                if !self.eat(',') {
                    break;
                }
            }
        }
        if bracketed && !(self.eat('>') || self.eat('⟩')) {
            return self.err("expected closing `>`");
        }
        if let Some(c) = self.peek() {
            return self.err(format!("unexpected `{c}`"));
        }
        Presentation::new(std::mem::take(&mut self.names), relators)
    }

    fn relation(&mut self, out: &mut Vec<Word>) -> Result<()> {
        let mut prev = self.word()?;
        let mut chained = false;
        while self.eat('=') {
            let next = self.word()?;
            out.push(prev.mul(&next.inverse()));
            prev = next;
            chained = true;
        }
        if !chained {
            out.push(prev);
        }
        Ok(())
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = self.term()?;
        loop {
            match self.peek() {
                Some('*') | Some('.') => {
                    self.pos += 1;
                    w = w.mul(&self.term()?);
                }
                Some(c) if c.is_ascii_alphabetic() || matches!(c, '(' | '[' | '1') => {
                    w = w.mul(&self.term()?);
                }
                _ => return Ok(w),
            }
        }
    }

    fn term(&mut self) -> Result<Word> {
        let mut w = self.factor()?;
        while self.eat('^') {
            w = self.exponent(w)?;
        }
        Ok(w)
    }

    fn exponent(&mut self, base: Word) -> Result<Word> {
        match self.peek() {
            Some('{') => {
                self.pos += 1;
                let out = match self.peek() {
                    Some(c) if c == '-' || c.is_ascii_digit() => base.pow(self.integer()?),
                    _ => base.conjugate(&self.word()?),
                };
                self.expect('}')?;
                Ok(out)
            }
            Some(c) if c == '-' || c.is_ascii_digit() => Ok(base.pow(self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let by = self.generator()?;
                Ok(base.conjugate(&by))
            }
            _ => self.err("expected an integer or generator after `^`"),
        }
    }

    fn factor(&mut self) -> Result<Word> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(')')?;
                Ok(w)
            }
            Some('[') => {
                self.pos += 1;
                let mut acc = self.word()?;
                self.expect(',')?;
                loop {
                    let next = self.word()?;
                    acc = Word::commutator(&acc, &next);
                    if !self.eat(',') {
                        break;
                    }
                }
                self.expect(']')?;
                Ok(acc)
            }
            Some('1') => {
                self.pos += 1;
                if self.chars.get(self.pos).is_some_and(|(_, c)| c.is_ascii_digit()) {
                    return self.err("only `1` may appear as a literal word");
                }
                Ok(Word::identity())
            }
            Some(c) if c.is_ascii_alphabetic() => self.generator(),
            Some(c) => self.err(format!("unexpected `{c}`")),
            None => self.err("unexpected end of input"),
        }
    }

    fn generator(&mut self) -> Result<Word> {
        let at = self.offset();
        let name = self.name()?;
        match self.names.iter().position(|n| *n == name) {
            Some(g) => Ok(Word::generator(g)),
            None => Err(Error::UndeclaredGenerator { name, pos: at }),
        }
    }

    fn name(&mut self) -> Result<String> {
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                let mut name = String::from(c);
                self.pos += 1;
                while let Some(&(_, c)) = self.chars.get(self.pos) {
                    if c.is_ascii_digit() || c == '_' {
                        name.push(c);
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                Ok(name)
            }
            _ => self.err("expected a generator name"),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        let negative = self.eat('-');
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        let value: i64 =
            digits.parse().map_err(|_| Error::Syntax { pos: self.chars[start].0, msg: "exponent too large".into() })?;
        Ok(if negative { -value } else { value })
    }
}
