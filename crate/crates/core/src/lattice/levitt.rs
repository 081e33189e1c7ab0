//! Deciding whether an automorphism of Z² preserves some bi-ordering.
//!
//! Split C² into the span `E` of Jordan vectors with positive real
//! eigenvalue and the span `F` of the rest. The matrix preserves a
//! bi-ordering iff `F ∩ Z² = 0`. For 2×2 matrices this reduces to a case
//! analysis on trace and determinant.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{IndexOrder, IntMatrix2, ZnError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LevittVerdict {
    Preserves,
    DoesNotPreserve,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EigenClass {
    PositiveRealPair,
    NegativeRealPair,
    MixedSignPair,
    ComplexPair,
    /// Double eigenvalue ±1 (trace ±2, det 1).
    Repeated,
}

impl fmt::Display for EigenClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EigenClass::PositiveRealPair => "positive-real-pair",
            EigenClass::NegativeRealPair => "negative-real-pair",
            EigenClass::MixedSignPair => "mixed-sign-pair",
            EigenClass::ComplexPair => "complex-pair",
            EigenClass::Repeated => "repeated",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevittReport {
    pub verdict: LevittVerdict,
    pub trace: BigInt,
    pub det: BigInt,
    pub discriminant: BigInt,
    pub classification: EigenClass,
    /// An invariant order, present exactly when the verdict is positive.
    pub order: Option<IndexOrder>,
}

impl LevittReport {
    pub fn preserves(&self) -> bool {
        self.verdict == LevittVerdict::Preserves
    }
}

pub fn levitt_check(m: &IntMatrix2) -> Result<LevittReport, ZnError> {
    let det = m.det();
    if !det.abs().is_one() {
        return Err(ZnError::Determinant(det));
    }
    let trace = m.trace();
    let discriminant = m.discriminant();
    let two = BigInt::from(2);

    let (classification, preserves) = if det.is_one() {
        if trace.abs() < two {
            (EigenClass::ComplexPair, false)
        } else if trace == two {
            // eigenvalue 1, so E is everything
            (EigenClass::Repeated, true)
        } else if trace == -two {
            (EigenClass::Repeated, false)
        } else if trace.is_positive() {
            (EigenClass::PositiveRealPair, true)
        } else {
            (EigenClass::NegativeRealPair, false)
        }
    } else {
        // F is the negative eigenline; it carries lattice points iff the
        // eigenvalues are rational iff t² + 4 is a square iff t = 0.
        (EigenClass::MixedSignPair, !trace.is_zero())
    };

    let order = if preserves {
        Some(IndexOrder::eigen(m)?)
    } else {
        None
    };
    Ok(LevittReport {
        verdict: if preserves {
            LevittVerdict::Preserves
        } else {
            LevittVerdict::DoesNotPreserve
        },
        trace,
        det,
        discriminant,
        classification,
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{is_perfect_square, Point};
    use crate::order::Sign;

    fn check(m: IntMatrix2) -> LevittReport {
        levitt_check(&m).unwrap()
    }

    #[test]
    fn worked_examples() {
        let r = check(IntMatrix2::new(2, 1, 1, 1));
        assert!(r.preserves());
        assert_eq!(r.classification, EigenClass::PositiveRealPair);
        assert_eq!(r.discriminant, BigInt::from(5));

        let r = check(IntMatrix2::new(-1, 0, 0, -1));
        assert!(!r.preserves());
        assert_eq!(r.classification, EigenClass::Repeated);
        assert!(r.order.is_none());

        let r = check(IntMatrix2::new(1, -1, 1, 0));
        assert!(!r.preserves());
        assert_eq!(r.classification, EigenClass::ComplexPair);
        assert_eq!(r.discriminant, BigInt::from(-3));

        let r = check(IntMatrix2::identity());
        assert!(r.preserves());
    }

    #[test]
    fn determinant_minus_one() {
        let swap = check(IntMatrix2::new(0, 1, 1, 0));
        assert!(!swap.preserves());
        assert_eq!(swap.classification, EigenClass::MixedSignPair);
        let r = check(IntMatrix2::new(1, 1, 1, 0));
        assert!(r.preserves());
        assert!(matches!(r.order, Some(IndexOrder::Eigen(_))));
    }

    #[test]
    fn bad_determinant() {
        assert_eq!(
            levitt_check(&IntMatrix2::new(2, 0, 0, 2)),
            Err(ZnError::Determinant(BigInt::from(4)))
        );
    }

    #[test]
    fn det_minus_one_rational_iff_trace_zero() {
        for t in -30i64..=30 {
            let disc = BigInt::from(t * t + 4);
            assert_eq!(is_perfect_square(&disc), t == 0);
        }
    }

    #[test]
    fn positive_verdicts_come_with_invariant_orders() {
        for m in [
            IntMatrix2::new(2, 1, 1, 1),
            IntMatrix2::new(1, 2, 0, 1),
            IntMatrix2::new(3, -1, 1, 0),
            IntMatrix2::new(2, 1, 1, 0),
            IntMatrix2::new(-1, 1, 1, 0),
        ] {
            let r = check(m.clone());
            let order = r.order.expect("positive verdict");
            for x in -6..=6 {
                for y in -6..=6 {
                    let v = Point::new(x, y);
                    let s = order.sign(&v);
                    assert_eq!(s == Sign::Zero, v.is_zero());
                    assert_eq!(order.sign(&m.apply(&v)), s, "{m} at {v}");
                }
            }
        }
    }
}
