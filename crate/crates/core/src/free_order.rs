//! Bi-orderings of free groups via the Magnus expansion.
//!
//! A nonidentity word is positive when the lowest nonconstant term of its
//! Magnus expansion has a positive coefficient. "Lowest" is degree first,
//! then position-by-position comparison of variable labels under a
//! pluggable [`IndexOrder`] on Z². Finite alphabets are placed along
//! `(0,0), (1,0), (2,0), ...`.

use std::cmp::Ordering;

use num_traits::{ToPrimitive, Zero};

use crate::lattice::IndexOrder;
use crate::order::{Decision, Group, Invariance, MagnusWitness, OrderError, OrderOracle, Sign};
use crate::series::{magnus_expand, VarMap};
use crate::word::Word;

/// Decides the sign of `w` by expanding at degrees `1, 2, ..., |w|`.
///
/// The lowest nonvanishing degree of `μ(w) - 1` is the lower-central-series
/// weight of `w`, which never exceeds its letter length, so the loop is
/// bounded.
pub fn magnus_decide(w: &Word, ord: &IndexOrder, varmap: &VarMap) -> Result<Decision, OrderError> {
    if w.is_identity() {
        return Ok(Decision::new(Sign::Zero, "magnus"));
    }
    let bound = w.letter_length().to_usize().unwrap_or(usize::MAX);
    for degree in 1..=bound {
        let series = magnus_expand(w, degree, varmap)?;
        if let Some((m, c)) = series.lowest_term(ord) {
            return Ok(Decision {
                sign: Sign::of(c),
                stage: "magnus".into(),
                witness: Some(MagnusWitness {
                    degree,
                    monomial: m.clone(),
                    coefficient: c.clone(),
                }),
            });
        }
    }
    Err(OrderError::MagnusStalled {
        word: w.to_string(),
        bound,
    })
}

/// Sign of a word over indexed generators `x[i,j]`.
pub fn magnus_sign(w: &Word, ord: &IndexOrder) -> Result<Sign, OrderError> {
    Ok(magnus_decide(w, ord, &VarMap::Indexed)?.sign)
}

/// `u` vs `v` through the sign of `u⁻¹v`.
pub fn magnus_compare(u: &Word, v: &Word, ord: &IndexOrder) -> Result<Ordering, OrderError> {
    let s = magnus_sign(&u.invert().multiply(v), ord)?;
    Ok(s.as_ordering().reverse())
}

/// Free group on whatever letters appear, as reduced words.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeGroup;

impl Group for FreeGroup {
    type Elem = Word;

    fn identity(&self) -> Word {
        Word::identity()
    }
    fn multiply(&self, a: &Word, b: &Word) -> Word {
        a.multiply(b)
    }
    fn invert(&self, a: &Word) -> Word {
        a.invert()
    }
}

/// The Magnus order as an oracle on words.
#[derive(Clone, Debug)]
pub struct MagnusOrder {
    order: IndexOrder,
    varmap: VarMap,
}

impl MagnusOrder {
    /// Order on the free group with basis `{x[i,j]}`.
    pub fn indexed(order: IndexOrder) -> Self {
        MagnusOrder {
            order,
            varmap: VarMap::Indexed,
        }
    }

    /// Order on a finitely generated free group.
    pub fn finite(alphabet: Vec<crate::word::Gen>, order: IndexOrder) -> Self {
        MagnusOrder {
            order,
            varmap: VarMap::Alphabet(alphabet),
        }
    }

    pub fn index_order(&self) -> &IndexOrder {
        &self.order
    }

    pub fn varmap(&self) -> &VarMap {
        &self.varmap
    }
}

impl Group for MagnusOrder {
    type Elem = Word;

    fn identity(&self) -> Word {
        Word::identity()
    }
    fn multiply(&self, a: &Word, b: &Word) -> Word {
        a.multiply(b)
    }
    fn invert(&self, a: &Word) -> Word {
        a.invert()
    }
}

impl OrderOracle for MagnusOrder {
    fn decide(&self, g: &Word) -> Result<Decision, OrderError> {
        magnus_decide(g, &self.order, &self.varmap)
    }

    fn invariance(&self) -> Invariance {
        Invariance::Bi
    }
}

/// True when the word has zero exponent sum in every generator.
pub fn in_commutator_subgroup(w: &Word) -> bool {
    w.generators()
        .into_iter()
        .all(|g| w.exponent_sum(g).is_zero())
}
