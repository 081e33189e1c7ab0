//! Truncated noncommutative power series over the integers and the Magnus
//! map from free-group words into them.
//!
//! Variables are labelled by integer pairs, so a monomial is a finite
//! sequence of pairs. Every series carries its truncation degree and all
//! binary operations insist the degrees agree.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::lattice::IndexOrder;
use crate::word::{Gen, Index, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("truncation degrees differ ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("series is not a unit of the form 1 + (higher terms)")]
    NotAUnit,
    #[error("generator {0} has no Magnus variable")]
    UnmappedGenerator(Gen),
}

/// A noncommutative monomial `X[i1,j1]·X[i2,j2]···`.
///
/// Ordered by degree first and then lexicographically on the labels using
/// the natural (lexicographic) order of integer pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<Index>);

impl Monomial {
    pub fn constant() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(vars: impl Into<Vec<Index>>) -> Self {
        Monomial(vars.into())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn vars(&self) -> &[Index] {
        &self.0
    }

    fn concat(&self, other: &Monomial) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Monomial(v)
    }

    /// Degree first, then position by position under `ord`.
    pub fn compare_under(&self, other: &Monomial, ord: &IndexOrder) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| ord.compare_index(*a, *b))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (i, j)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "·")?;
            }
            write!(f, "X[{i},{j}]")?;
        }
        Ok(())
    }
}

/// An element of `Z<<X>>` truncated above a fixed degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    degree: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl TruncatedSeries {
    pub fn zero(degree: usize) -> Self {
        TruncatedSeries {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(degree: usize) -> Self {
        let mut s = Self::zero(degree);
        s.terms.insert(Monomial::constant(), BigInt::one());
        s
    }

    /// Builds a series from terms, summing repeats and dropping zero
    /// coefficients and anything above `degree`.
    pub fn from_terms<C: Into<BigInt>>(
        degree: usize,
        terms: impl IntoIterator<Item = (Monomial, C)>,
    ) -> Self {
        let mut s = Self::zero(degree);
        for (m, c) in terms {
            if m.degree() <= degree {
                s.add_term(m, c.into());
            }
        }
        s
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn truncation_degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::constant())
    }

    /// True when the only stored term is the constant one.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    fn check_degree(&self, other: &Self) -> Result<(), SeriesError> {
        if self.degree != other.degree {
            return Err(SeriesError::DegreeMismatch(self.degree, other.degree));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn negate(&self) -> Self {
        TruncatedSeries {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_degree(other)?;
        let mut out = Self::zero(self.degree);
        for (m1, c1) in &self.terms {
            let room = self.degree - m1.degree();
            for (m2, c2) in &other.terms {
                // keys iterate in ascending degree
                if m2.degree() > room {
                    break;
                }
                out.add_term(m1.concat(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// Inverse of a unit `1 + ε` via the geometric series `Σ (-ε)^k`.
    pub fn unit_inverse(&self) -> Result<Self, SeriesError> {
        if !self.constant_term().is_one() {
            return Err(SeriesError::NotAUnit);
        }
        let mut neg_eps = self.negate();
        neg_eps.terms.remove(&Monomial::constant());
        let mut total = Self::one(self.degree);
        let mut power = Self::one(self.degree);
        for _ in 0..self.degree {
            power = power.multiply(&neg_eps)?;
            if power.is_empty() {
                break;
            }
            total = total.add(&power)?;
        }
        Ok(total)
    }

    /// The minimal nonconstant term: lowest degree, then position-wise
    /// comparison of labels under `ord`.
    pub fn lowest_term(&self, ord: &IndexOrder) -> Option<(&Monomial, &BigInt)> {
        let mut nonconstant = self.terms.iter().filter(|(m, _)| m.degree() > 0);
        let first = nonconstant.next()?;
        if ord.is_lex() {
            return Some(first);
        }
        let d = first.0.degree();
        Some(
            std::iter::once(first)
                .chain(nonconstant.take_while(|(m, _)| m.degree() == d))
                .min_by(|a, b| a.0.compare_under(b.0, ord))
                .expect("nonempty"),
        )
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            match (k, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            if m.degree() == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}·{m}")?;
            }
        }
        Ok(())
    }
}

/// How generators of a word are assigned Magnus variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VarMap {
    /// `x[i,j]` (any name) becomes `X[i,j]`; bare letters are rejected.
    Indexed,
    /// The k-th letter of a finite alphabet becomes `X[k,0]`.
    Alphabet(Vec<Gen>),
}

impl VarMap {
    pub fn lookup(&self, g: &Gen) -> Option<Index> {
        match self {
            VarMap::Indexed => g.index(),
            VarMap::Alphabet(letters) => letters.iter().position(|l| l == g).map(|k| (k as i64, 0)),
        }
    }
}

/// Coefficients of `(1 + X)^e` up to `X^degree`: the generalized binomials
/// `C(e, k)`, valid for negative `e` as well.
fn binomial_row(e: &BigInt, degree: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(degree + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 1..=degree {
        c = c * (e - BigInt::from(k - 1)) / BigInt::from(k);
        row.push(c.clone());
    }
    row
}

/// The Magnus image of `w`: each generator goes to `1 + X`.
pub fn magnus_expand(
    w: &Word,
    degree: usize,
    varmap: &VarMap,
) -> Result<TruncatedSeries, SeriesError> {
    let mut acc = TruncatedSeries::one(degree);
    for s in w.syllables() {
        let var = varmap
            .lookup(&s.gen)
            .ok_or(SeriesError::UnmappedGenerator(s.gen))?;
        let factor = TruncatedSeries::from_terms(
            degree,
            binomial_row(&s.exp, degree)
                .into_iter()
                .enumerate()
                .map(|(k, c)| (Monomial(vec![var; k]), c)),
        );
        acc = acc.multiply(&factor)?;
    }
    Ok(acc)
}
