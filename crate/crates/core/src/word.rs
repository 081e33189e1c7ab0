//! Free-group words over labelled generators.
//!
//! A [`Word`] is stored as a run-length sequence of syllables `g^e` and is
//! kept freely reduced at all times: adjacent syllables carry distinct
//! generators and no exponent is zero. The empty word is the identity.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Subscript of an indexed generator such as `x[i,j]`.
pub type Index = (i64, i64);

/// A generator label: either a bare letter (`a`, `b`, `t`, ...) or a letter
/// carrying an integer pair (`x[2,-1]`).
///
/// The derived ordering (name, then subscript) is only used for canonical
/// printing and map keys. Group orders never look at it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen {
    name: char,
    index: Option<Index>,
}

impl Gen {
    pub const fn named(name: char) -> Self {
        Gen { name, index: None }
    }

    pub const fn indexed(name: char, i: i64, j: i64) -> Self {
        Gen {
            name,
            index: Some((i, j)),
        }
    }

    /// Shorthand for `x[i,j]`, the free basis letters used throughout.
    pub const fn x(i: i64, j: i64) -> Self {
        Gen::indexed('x', i, j)
    }

    pub fn name(&self) -> char {
        self.name
    }

    pub fn index(&self) -> Option<Index> {
        self.index
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            None => write!(f, "{}", self.name),
            Some((i, j)) => write!(f, "{}[{},{}]", self.name, i, j),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub gen: Gen,
    pub exp: BigInt,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("generator {0} is not in the domain")]
    UnknownGenerator(Gen),
    #[error("exponent of {0} is too large to track as a coset coordinate")]
    ExponentOverflow(Gen),
}

/// A freely reduced word in a free group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    syllables: Vec<Syllable>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn gen(g: Gen) -> Self {
        Word::power(g, 1)
    }

    pub fn power(g: Gen, exp: impl Into<BigInt>) -> Self {
        let mut w = Word::identity();
        w.push(g, exp.into());
        w
    }

    /// Freely reduces an arbitrary sequence of syllables.
    pub fn reduce<I, E>(raw: I) -> Self
    where
        I: IntoIterator<Item = (Gen, E)>,
        E: Into<BigInt>,
    {
        let mut w = Word::identity();
        for (g, e) in raw {
            w.push(g, e.into());
        }
        w
    }

    /// Right-multiplies by `g^exp` in place, cancelling as needed.
    pub fn push(&mut self, g: Gen, exp: BigInt) {
        if exp.is_zero() {
            return;
        }
        if let Some(last) = self.syllables.last_mut() {
            if last.gen == g {
                last.exp += exp;
                if last.exp.is_zero() {
                    self.syllables.pop();
                }
                return;
            }
        }
        self.syllables.push(Syllable { gen: g, exp });
    }

    /// Right-multiplies by a whole word in place.
    pub fn append(&mut self, other: &Word) {
        for s in &other.syllables {
            self.push(s.gen, s.exp.clone());
        }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, i.e. the sum of absolute exponents.
    pub fn letter_length(&self) -> BigInt {
        self.syllables.iter().map(|s| s.exp.abs()).sum()
    }

    pub fn multiply(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.append(other);
        w
    }

    pub fn invert(&self) -> Word {
        Word {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable {
                    gen: s.gen,
                    exp: -&s.exp,
                })
                .collect(),
        }
    }

    /// `by · self · by⁻¹`.
    pub fn conjugate(&self, by: &Word) -> Word {
        by.multiply(self).multiply(&by.invert())
    }

    pub fn pow(&self, exp: &BigInt) -> Word {
        let base = if exp.is_negative() {
            self.invert()
        } else {
            self.clone()
        };
        let mut out = Word::identity();
        let mut k = exp.abs();
        while k.is_positive() {
            out.append(&base);
            k -= 1;
        }
        out
    }

    pub fn exponent_sum(&self, g: Gen) -> BigInt {
        self.syllables
            .iter()
            .filter(|s| s.gen == g)
            .map(|s| &s.exp)
            .sum()
    }

    pub fn generators(&self) -> BTreeSet<Gen> {
        self.syllables.iter().map(|s| s.gen).collect()
    }

    /// Relabels every generator; the result is re-reduced because the map
    /// need not be injective.
    pub fn map_gens(&self, mut f: impl FnMut(Gen) -> Gen) -> Word {
        Word::reduce(self.syllables.iter().map(|s| (f(s.gen), s.exp.clone())))
    }

    /// Expands into single letters `(g, ±1)`.
    pub fn letters(&self) -> Vec<(Gen, i8)> {
        let mut out = Vec::new();
        for s in &self.syllables {
            let sign = if s.exp.is_positive() { 1 } else { -1 };
            let mut k = s.exp.abs();
            while k.is_positive() {
                out.push((s.gen, sign));
                k -= 1;
            }
        }
        out
    }
}

impl Mul<&Word> for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.multiply(rhs)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        for (k, s) in self.syllables.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if s.exp.is_one() {
                write!(f, "{}", s.gen)?;
            } else {
                write!(f, "{}^{}", s.gen, s.exp)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at column {column}: {message}")]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(column: usize, message: impl Into<String>) -> Self {
        ParseError {
            column: column + 1,
            message: message.into(),
        }
    }
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            chars: src.char_indices().collect(),
            pos: 0,
            src,
        }
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(c, _)| c)
            .unwrap_or(self.src.len())
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        self.skip_ws();
        match self.bump() {
            Some(c) if c == want => Ok(()),
            Some(c) => Err(ParseError::new(
                self.column() - 1,
                format!("expected '{want}', found '{c}'"),
            )),
            None => Err(ParseError::new(self.column(), format!("expected '{want}'"))),
        }
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.column();
        let mut text = String::new();
        if let Some(c @ ('-' | '+')) = self.peek() {
            text.push(c);
            self.pos += 1;
        }
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            text.push(c);
            self.pos += 1;
        }
        text.parse::<BigInt>()
            .map_err(|_| ParseError::new(start, "expected an integer"))
    }

    fn small_int(&mut self) -> Result<i64, ParseError> {
        let start = self.column();
        let v = self.int()?;
        i64::try_from(&v).map_err(|_| ParseError::new(start, "subscript out of range"))
    }
}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor::new(s);
        let mut w = Word::identity();
        loop {
            cur.skip_ws();
            let Some(c) = cur.peek() else { break };
            let g = if c == '1' {
                cur.bump();
                None
            } else if c.is_ascii_alphabetic() {
                cur.bump();
                let save = cur.pos;
                cur.skip_ws();
                if cur.peek() == Some('[') {
                    cur.bump();
                    let i = cur.small_int()?;
                    cur.expect(',')?;
                    let j = cur.small_int()?;
                    cur.expect(']')?;
                    Some(Gen::indexed(c, i, j))
                } else {
                    cur.pos = save;
                    Some(Gen::named(c))
                }
            } else {
                return Err(ParseError::new(
                    cur.column(),
                    format!("unexpected character '{c}'"),
                ));
            };
            let save = cur.pos;
            cur.skip_ws();
            let exp = if cur.peek() == Some('^') {
                cur.bump();
                cur.int()?
            } else {
                cur.pos = save;
                BigInt::one()
            };
            match g {
                Some(g) => w.push(g, exp),
                None if exp.is_one() => {}
                None => return Err(ParseError::new(save, "the identity takes no exponent")),
            }
        }
        Ok(w)
    }
}

/// A homomorphism of free groups given by the images of a declared
/// generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endomorphism {
    images: BTreeMap<Gen, Word>,
}

impl Endomorphism {
    pub fn new(images: impl IntoIterator<Item = (Gen, Word)>) -> Self {
        Endomorphism {
            images: images.into_iter().collect(),
        }
    }

    pub fn identity_on(domain: impl IntoIterator<Item = Gen>) -> Self {
        Endomorphism::new(domain.into_iter().map(|g| (g, Word::gen(g))))
    }

    pub fn domain(&self) -> impl Iterator<Item = Gen> + '_ {
        self.images.keys().copied()
    }

    pub fn image(&self, g: Gen) -> Option<&Word> {
        self.images.get(&g)
    }

    pub fn apply(&self, w: &Word) -> Result<Word, WordError> {
        let mut out = Word::identity();
        for s in w.syllables() {
            let image = self
                .images
                .get(&s.gen)
                .ok_or(WordError::UnknownGenerator(s.gen))?;
            out.append(&image.pow(&s.exp));
        }
        Ok(out)
    }

    /// `self ∘ inner`: first apply `inner`, then `self`.
    pub fn compose(&self, inner: &Endomorphism) -> Result<Endomorphism, WordError> {
        let images = inner
            .images
            .iter()
            .map(|(g, w)| Ok((*g, self.apply(w)?)))
            .collect::<Result<_, WordError>>()?;
        Ok(Endomorphism { images })
    }

    /// True when every declared generator is sent to itself.
    pub fn is_identity(&self) -> bool {
        self.images.iter().all(|(g, w)| *w == Word::gen(*g))
    }
}
