//! Punctured-torus bundle groups `⟨a, b, t : t a t⁻¹ = φ(a), t b t⁻¹ = φ(b)⟩`.
//!
//! Each element is `t^k w` with `w ∈ F₂`. Two short exact sequences order
//! the group: `F₂ → G → Z` (the t-exponent) and `[F₂,F₂] → F₂ → Z²`
//! (abelianization). The quotient `Z²` is ordered by the eigenbasis cone
//! of the abelianized monodromy `Φ`, and the free commutator subgroup by
//! the Magnus order whose variables `x[i,j]` are ranked by that same cone.
//! When `Φ` has positive eigenvalues both layers are `φ`-invariant and the
//! result is a bi-ordering.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::free_order::{FreeGroup, MagnusOrder};
use crate::lattice::{levitt_check, IndexOrder, IntMatrix2, LevittReport, Point, ZnError};
use crate::order::{
    extend_order, ExtensionOrder, ExtensionSpec, Group, IntegerOrder, LatticeOrder, OrderError,
    OrderOracle,
};
use crate::schreier::{expand_x_word, Rewriter, A, B};
use crate::word::{Endomorphism, Gen, ParseError, Word, WordError};

pub const T: Gen = Gen::named('t');

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BundleError {
    #[error("monodromy must be defined on exactly {{a, b}}")]
    Domain,
    #[error("the supplied inverse does not invert the monodromy ({0} is not the identity)")]
    NotInverse(&'static str),
    #[error("abelianized monodromy has determinant {0}, expected ±1")]
    Determinant(BigInt),
    #[error("word has exponent sums ({0}, {1}), not in the commutator subgroup")]
    NotInCommutator(BigInt, BigInt),
    #[error("monodromy is not certified bi-orderable: {0}")]
    Uncertified(MonodromyVerdict),
    #[error("t-exponent {0} is too large")]
    Exponent(BigInt),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Zn(#[from] ZnError),
}

/// Rewrites `w ∈ [F₂,F₂]` in the basis
/// `x[i,j] = a^i b^j (a b a⁻¹ b⁻¹) b^-j a^-i`.
pub fn commutator_rewrite(w: &Word) -> Result<Word, BundleError> {
    let st = Rewriter::new(1, None).scan(w)?;
    if st.i != 0 || st.j != 0 {
        return Err(BundleError::NotInCommutator(
            w.exponent_sum(A),
            w.exponent_sum(B),
        ));
    }
    Ok(st.f)
}

/// Inverse of [`commutator_rewrite`]: substitutes the definition of each
/// `x[i,j]` and reduces.
pub fn commutator_expand(f: &Word) -> Result<Word, WordError> {
    expand_x_word(f, &Word::reduce([(A, 1), (B, 1), (A, -1), (B, -1)]))
}

/// Abelianization of a word over `{a, b}`.
pub fn abelianize(w: &Word) -> Point {
    Point {
        x: w.exponent_sum(A),
        y: w.exponent_sum(B),
    }
}

/// A monodromy `φ` of F₂ with an explicitly supplied inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromySpec {
    phi: Endomorphism,
    phi_inv: Endomorphism,
    matrix: IntMatrix2,
}

impl MonodromySpec {
    pub fn new(phi: Endomorphism, phi_inv: Endomorphism) -> Result<Self, BundleError> {
        for e in [&phi, &phi_inv] {
            if !e.domain().eq([A, B]) {
                return Err(BundleError::Domain);
            }
            for g in [A, B] {
                let image = e.image(g).expect("domain checked");
                if image.generators().iter().any(|h| *h != A && *h != B) {
                    return Err(BundleError::Domain);
                }
            }
        }
        if !phi.compose(&phi_inv)?.is_identity() {
            return Err(BundleError::NotInverse("φ∘φ⁻¹"));
        }
        if !phi_inv.compose(&phi)?.is_identity() {
            return Err(BundleError::NotInverse("φ⁻¹∘φ"));
        }
        // columns are the abelianized images of a and b
        let pa = abelianize(phi.image(A).expect("domain checked"));
        let pb = abelianize(phi.image(B).expect("domain checked"));
        let matrix = IntMatrix2::new(pa.x, pb.x, pa.y, pb.y);
        let det = matrix.det();
        if !det.abs().is_one() {
            return Err(BundleError::Determinant(det));
        }
        Ok(MonodromySpec {
            phi,
            phi_inv,
            matrix,
        })
    }

    /// Parses `φ(a)`, `φ(b)`, `φ⁻¹(a)`, `φ⁻¹(b)`.
    pub fn from_images(images: [&str; 4]) -> Result<Self, BundleError> {
        let [pa, pb, qa, qb] = images.map(str::parse::<Word>);
        let phi = Endomorphism::new([(A, pa?), (B, pb?)]);
        let phi_inv = Endomorphism::new([(A, qa?), (B, qb?)]);
        MonodromySpec::new(phi, phi_inv)
    }

    pub fn phi(&self) -> &Endomorphism {
        &self.phi
    }

    pub fn phi_inv(&self) -> &Endomorphism {
        &self.phi_inv
    }

    /// `Φ`, the action on `H₁ ≅ Z²`.
    pub fn matrix(&self) -> &IntMatrix2 {
        &self.matrix
    }

    /// `φ^n(w)` for any integer `n`.
    pub fn iterate(&self, n: &BigInt, w: &Word) -> Result<Word, BundleError> {
        let (e, steps) = if n.is_negative() {
            (&self.phi_inv, -n)
        } else {
            (&self.phi, n.clone())
        };
        let steps = steps
            .to_u32()
            .ok_or_else(|| BundleError::Exponent(n.clone()))?;
        let mut out = w.clone();
        for _ in 0..steps {
            out = e.apply(&out)?;
        }
        Ok(out)
    }
}

/// φ: a ↦ a b, b ↦ b a b, the monodromy of the figure-eight knot.
///
/// Its abelianization is `[[1,1],[1,2]]`, conjugate to `[[2,1],[1,1]]`
/// with the same trace 3 and eigenvalues `(3 ± √5)/2`.
pub fn figure_eight_preset() -> MonodromySpec {
    MonodromySpec::from_images(["a b", "b a b", "a^2 b^-1", "b a^-1"])
        .expect("figure-eight monodromy is an automorphism")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonodromyVerdict {
    BiOrderable,
    RejectedOrientationReversing,
    RejectedEigenvalues,
}

impl fmt::Display for MonodromyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonodromyVerdict::BiOrderable => "bi-orderable",
            MonodromyVerdict::RejectedOrientationReversing => "rejected-orientation-reversing",
            MonodromyVerdict::RejectedEigenvalues => "rejected-eigenvalues",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyReport {
    pub det: BigInt,
    pub levitt: LevittReport,
    pub verdict: MonodromyVerdict,
    /// Order of `Φ` when finite. A periodic monodromy with a rejected
    /// verdict gives a group that is provably not bi-orderable.
    pub abelian_period: Option<u32>,
}

pub fn analyze_monodromy(spec: &MonodromySpec) -> MonodromyReport {
    let m = spec.matrix();
    let levitt = levitt_check(m).expect("determinant checked at construction");
    let det = m.det();
    let verdict = if det.is_negative() {
        MonodromyVerdict::RejectedOrientationReversing
    } else if levitt.preserves() {
        MonodromyVerdict::BiOrderable
    } else {
        MonodromyVerdict::RejectedEigenvalues
    };
    MonodromyReport {
        det,
        levitt,
        verdict,
        abelian_period: m.finite_order(),
    }
}

/// `t^k w`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BundleElement {
    pub k: BigInt,
    pub w: Word,
}

impl BundleElement {
    pub fn new(k: impl Into<BigInt>, w: Word) -> Self {
        BundleElement { k: k.into(), w }
    }

    pub fn to_word(&self) -> Word {
        let mut out = Word::power(T, self.k.clone());
        out.append(&self.w);
        out
    }
}

impl fmt::Display for BundleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

/// `t^k w · t^l v = t^(k+l) φ^-l(w) v`.
pub fn bundle_multiply(
    e1: &BundleElement,
    e2: &BundleElement,
    spec: &MonodromySpec,
) -> Result<BundleElement, BundleError> {
    let moved = spec.iterate(&-&e2.k, &e1.w)?;
    Ok(BundleElement {
        k: &e1.k + &e2.k,
        w: moved.multiply(&e2.w),
    })
}

/// `(t^k w)⁻¹ = t^-k φ^k(w⁻¹)`.
pub fn bundle_invert(
    e: &BundleElement,
    spec: &MonodromySpec,
) -> Result<BundleElement, BundleError> {
    Ok(BundleElement {
        k: -&e.k,
        w: spec.iterate(&e.k, &e.w.invert())?,
    })
}

/// Normal form of a word over `{a, b, t}`.
pub fn bundle_element(w: &Word, spec: &MonodromySpec) -> Result<BundleElement, BundleError> {
    w.syllables()
        .iter()
        .try_fold(BundleElement::default(), |acc, s| {
            let step = match s.gen {
                T => BundleElement::new(s.exp.clone(), Word::identity()),
                A | B => BundleElement::new(0, Word::power(s.gen, s.exp.clone())),
                g => return Err(WordError::UnknownGenerator(g).into()),
            };
            bundle_multiply(&acc, &step, spec)
        })
}

/// The bundle group with a fixed monodromy.
///
/// The [`Group`] methods panic if a t-exponent is too large to iterate
/// `φ` over; use [`bundle_multiply`] to handle that case.
#[derive(Clone, Debug)]
pub struct BundleGroup {
    spec: MonodromySpec,
}

impl BundleGroup {
    pub fn new(spec: MonodromySpec) -> Self {
        BundleGroup { spec }
    }

    pub fn spec(&self) -> &MonodromySpec {
        &self.spec
    }
}

impl Group for BundleGroup {
    type Elem = BundleElement;

    fn identity(&self) -> BundleElement {
        BundleElement::default()
    }
    fn multiply(&self, a: &BundleElement, b: &BundleElement) -> BundleElement {
        bundle_multiply(a, b, &self.spec).expect("t-exponent within range")
    }
    fn invert(&self, a: &BundleElement) -> BundleElement {
        bundle_invert(a, &self.spec).expect("t-exponent within range")
    }
}

pub type FiberOrder = ExtensionOrder<FreeGroup, LatticeOrder, MagnusOrder>;
pub type BundleOrder = ExtensionOrder<BundleGroup, IntegerOrder, FiberOrder>;

/// The bi-ordering of F₂ by `Φ`'s eigenbasis cone on `H₁`, then Magnus
/// on the commutator subgroup with variables ranked by the same cone.
pub fn fiber_order(spec: &MonodromySpec) -> Result<FiberOrder, BundleError> {
    let ord = IndexOrder::eigen(spec.matrix())?;
    Ok(extend_order(ExtensionSpec {
        group: FreeGroup,
        quotient: LatticeOrder(ord.clone()),
        kernel: MagnusOrder::indexed(ord),
        project: Box::new(abelianize),
        kernel_cast: Box::new(|w: &Word| commutator_rewrite(w).ok()),
        // conjugation shifts x-indices uniformly, which a cone order respects
        kernel_conjugation_invariant: true,
    }))
}

/// The bi-ordering of the bundle group: t-exponent first (t positive),
/// then the fiber order.
pub fn bundle_order(spec: &MonodromySpec) -> Result<BundleOrder, BundleError> {
    let report = analyze_monodromy(spec);
    if report.verdict != MonodromyVerdict::BiOrderable {
        return Err(BundleError::Uncertified(report.verdict));
    }
    Ok(extend_order(ExtensionSpec {
        group: BundleGroup::new(spec.clone()),
        quotient: IntegerOrder,
        kernel: fiber_order(spec)?,
        project: Box::new(|e: &BundleElement| e.k.clone()),
        kernel_cast: Box::new(|e: &BundleElement| e.k.is_zero().then(|| e.w.clone())),
        // the fiber order is φ-invariant because Φ preserves its cone
        kernel_conjugation_invariant: true,
    }))
}

pub fn bundle_compare(
    e1: &BundleElement,
    e2: &BundleElement,
    spec: &MonodromySpec,
) -> Result<Ordering, BundleError> {
    let o = bundle_order(spec)?;
    let diff = bundle_multiply(&bundle_invert(e1, spec)?, e2, spec)?;
    let sign = o.sign(&diff).map_err(|e| match e {
        OrderError::Word(w) => BundleError::Word(w),
        other => unreachable!("bundle order cannot fail this way: {other}"),
    })?;
    Ok(sign.as_ordering().reverse())
}
