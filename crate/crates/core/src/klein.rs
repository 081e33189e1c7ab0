//! The Klein bottle group `⟨x, y : x y x⁻¹ = y⁻¹⟩`.
//!
//! Every element has a unique normal form `x^m y^n`, and
//! `(x^m y^n)(x^m' y^n') = x^(m+m') y^((-1)^m' n + n')`. The order is the
//! extension of `Z` (the x-exponent) by `⟨y⟩ ≅ Z`. It is left-invariant
//! only: conjugating by `x` flips the sign of `y`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::order::{
    extend_order, ExtensionOrder, ExtensionSpec, Group, IntegerOrder, OrderError, OrderOracle,
};
use crate::word::{Gen, Word, WordError};

pub const X: Gen = Gen::named('x');
pub const Y: Gen = Gen::named('y');

/// `x^m y^n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct KleinElem {
    pub m: BigInt,
    pub n: BigInt,
}

impl KleinElem {
    pub fn new(m: impl Into<BigInt>, n: impl Into<BigInt>) -> Self {
        KleinElem {
            m: m.into(),
            n: n.into(),
        }
    }

    pub fn to_word(&self) -> Word {
        Word::reduce([(X, self.m.clone()), (Y, self.n.clone())])
    }
}

impl fmt::Display for KleinElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct KleinGroup;

impl Group for KleinGroup {
    type Elem = KleinElem;

    fn identity(&self) -> KleinElem {
        KleinElem::default()
    }

    fn multiply(&self, a: &KleinElem, b: &KleinElem) -> KleinElem {
        let n = if b.m.is_odd() { -&a.n } else { a.n.clone() };
        KleinElem {
            m: &a.m + &b.m,
            n: n + &b.n,
        }
    }

    fn invert(&self, a: &KleinElem) -> KleinElem {
        // (x^m y^n)⁻¹ = y^-n x^-m = x^-m y^(-(-1)^m n)
        let n = if a.m.is_odd() { a.n.clone() } else { -&a.n };
        KleinElem { m: -&a.m, n }
    }
}

/// Normal form of a word over `{x, y}`.
pub fn klein_normal_form(w: &Word) -> Result<KleinElem, WordError> {
    let g = KleinGroup;
    w.syllables().iter().try_fold(g.identity(), |acc, s| {
        let step = match s.gen {
            X => KleinElem {
                m: s.exp.clone(),
                n: BigInt::zero(),
            },
            Y => KleinElem {
                m: BigInt::zero(),
                n: s.exp.clone(),
            },
            other => return Err(WordError::UnknownGenerator(other)),
        };
        Ok(g.multiply(&acc, &step))
    })
}

pub type KleinOrder = ExtensionOrder<KleinGroup, IntegerOrder, IntegerOrder>;

/// The left-order: x-exponent first, then y-exponent.
///
/// The kernel order on `⟨y⟩` is not conjugation-invariant, so the
/// extension is flagged left-invariant.
pub fn klein_order() -> KleinOrder {
    extend_order(ExtensionSpec {
        group: KleinGroup,
        quotient: IntegerOrder,
        kernel: IntegerOrder,
        project: Box::new(|g: &KleinElem| g.m.clone()),
        kernel_cast: Box::new(|g: &KleinElem| g.m.is_zero().then(|| g.n.clone())),
        kernel_conjugation_invariant: false,
    })
}

pub fn klein_compare(u: &Word, v: &Word) -> Result<Ordering, OrderError> {
    let o = klein_order();
    o.compare(&klein_normal_form(u)?, &klein_normal_form(v)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{Invariance, Sign};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn compare_examples() {
        assert_eq!(klein_compare(&w("1"), &w("y")), Ok(Ordering::Less));
        assert_eq!(klein_compare(&w("y"), &w("x")), Ok(Ordering::Less));
        assert_eq!(klein_compare(&w("x y x^-1"), &w("1")), Ok(Ordering::Less));
        assert_eq!(klein_compare(&w("x y^5"), &w("y^9")), Ok(Ordering::Greater));
    }

    #[test]
    fn relation_holds_in_normal_form() {
        assert_eq!(
            klein_normal_form(&w("x y x^-1")).unwrap(),
            KleinElem::new(0, -1)
        );
        assert_eq!(klein_normal_form(&w("y x")).unwrap(), KleinElem::new(1, -1));
        assert_eq!(
            klein_normal_form(&w("y^3 x^2")).unwrap(),
            KleinElem::new(2, 3)
        );
        assert!(klein_normal_form(&w("a")).is_err());
    }

    #[test]
    fn inverse_and_identity() {
        let g = KleinGroup;
        for m in -3..=3 {
            for n in -3..=3 {
                let e = KleinElem::new(m, n);
                assert_eq!(g.multiply(&e, &g.invert(&e)), g.identity());
                assert_eq!(g.multiply(&g.invert(&e), &e), g.identity());
                assert_eq!(klein_normal_form(&e.to_word()).unwrap(), e);
            }
        }
    }

    #[test]
    fn identity_is_zero() {
        let o = klein_order();
        assert_eq!(o.sign(&KleinElem::default()), Ok(Sign::Zero));
        assert_eq!(o.invariance(), Invariance::Left);
    }

    #[test]
    fn conjugation_reverses_a_sign() {
        assert_eq!(klein_compare(&w("1"), &w("y")), Ok(Ordering::Less));
        assert_eq!(
            klein_compare(&w("x^-1 x"), &w("x^-1 y x")),
            Ok(Ordering::Greater)
        );
    }
}
