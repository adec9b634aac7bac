//! Finitely presented groups: words, presentations, parsing and coset
//! enumeration.

mod coset;
mod parse;

use std::fmt;

use crate::error::{Error, Result};

pub use coset::{coset_enumerate, enumerate_cosets, CosetTable, EnumerationStatus, DEFAULT_MAX_COSETS};
pub use parse::parse_presentation;

/// A generator or its inverse, packed as `2 * generator + inverse_bit` so
/// that a letter doubles as a coset-table column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u32);

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Letter {
        Letter((generator as u32) << 1 | inverse as u32)
    }

    pub fn generator(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn inverse(self) -> Letter {
        Letter(self.0 ^ 1)
    }

    pub fn column(self) -> usize {
        self.0 as usize
    }
}

/// A freely reduced word over a presentation's generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn generator(g: usize) -> Word {
        Word(vec![Letter::new(g, false)])
    }

    /// Freely reduces the letter sequence.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Word {
        let mut w = Word::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    fn push(&mut self, l: Letter) {
        if self.0.last() == Some(&l.inverse()) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Word::identity(), |acc, _| acc.mul(&base))
    }

    /// `y^-1 x y`.
    pub fn conjugate(&self, by: &Word) -> Word {
        by.inverse().mul(self).mul(by)
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    pub fn commutator(x: &Word, y: &Word) -> Word {
        x.inverse().mul(&y.inverse()).mul(x).mul(y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Presentation> {
        for w in &relators {
            if let Some(l) = w.letters().iter().find(|l| l.generator() >= generators.len()) {
                return Err(Error::UndeclaredGenerator { name: format!("#{}", l.generator()), pos: 0 });
            }
        }
        Ok(Presentation { generators, relators })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Renders a word with runs collapsed to powers, e.g. `a^-1 b^2 a`.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let letters = w.letters();
        let mut i = 0;
        while i < letters.len() {
            let l = letters[i];
            let mut run = 1;
            while i + run < letters.len() && letters[i + run] == l {
                run += 1;
            }
            let name = &self.generators[l.generator()];
            parts.push(match (l.is_inverse(), run) {
                (false, 1) => name.clone(),
                (false, k) => format!("{name}^{k}"),
                (true, k) => format!("{name}^-{k}"),
            });
            i += run;
        }
        parts.join(" ")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|w| self.format_word(w)).collect();
        write!(f, "{} | {}", self.generators.join(","), rels.join(", "))
    }
}
