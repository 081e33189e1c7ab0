//! Order oracles: three-way comparison contracts over group elements.
//!
//! Every oracle here is defined by a positive cone. `sign(g)` says whether
//! `g` lies in the cone, its inverse, or is the identity, and `a < b` iff
//! `a⁻¹b` is positive. That makes every oracle left-invariant by
//! construction; bi-invariance is an additional claim recorded in
//! [`Invariance`].

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::lattice::{IndexOrder, Point};
use crate::series::{Monomial, SeriesError};
use crate::word::WordError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of<T: Signed>(x: &T) -> Sign {
        if x.is_positive() {
            Sign::Positive
        } else if x.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    /// `Greater` maps to positive.
    pub fn of_ordering(o: Ordering) -> Sign {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn as_ordering(self) -> Ordering {
        match self {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        })
    }
}

/// The strongest invariance an oracle claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Invariance {
    Left,
    Bi,
}

impl fmt::Display for Invariance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Invariance::Left => "left-invariant",
            Invariance::Bi => "bi-invariant",
        })
    }
}

/// The lowest Magnus term that decided a free-group sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagnusWitness {
    pub degree: usize,
    pub monomial: Monomial,
    pub coefficient: BigInt,
}

/// A sign together with where it was decided.
///
/// `stage` is a dotted path such as `kernel.quotient` or `kernel.magnus`,
/// naming the extension layers walked through before the deciding one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub sign: Sign,
    pub stage: String,
    pub witness: Option<MagnusWitness>,
}

impl Decision {
    pub fn new(sign: Sign, stage: impl Into<String>) -> Self {
        Decision {
            sign,
            stage: stage.into(),
            witness: None,
        }
    }

    fn nested(self, prefix: &str) -> Self {
        Decision {
            stage: format!("{prefix}.{}", self.stage),
            ..self
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("no nonzero Magnus term up to degree {bound} for nonidentity word {word}")]
    MagnusStalled { word: String, bound: usize },
    #[error("element projects to the identity but has no kernel representative")]
    KernelCastUndefined,
    #[error("{0}")]
    Domain(String),
}

/// Group operations on some element representation.
pub trait Group {
    type Elem: Clone;

    fn identity(&self) -> Self::Elem;
    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn invert(&self, a: &Self::Elem) -> Self::Elem;
}

pub trait OrderOracle: Group {
    /// Sign of `g` with provenance.
    fn decide(&self, g: &Self::Elem) -> Result<Decision, OrderError>;

    fn invariance(&self) -> Invariance;

    fn sign(&self, g: &Self::Elem) -> Result<Sign, OrderError> {
        Ok(self.decide(g)?.sign)
    }

    /// `a` vs `b`, via the sign of `a⁻¹b`.
    fn compare(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Ordering, OrderError> {
        Ok(self.compare_explained(a, b)?.0)
    }

    fn compare_explained(
        &self,
        a: &Self::Elem,
        b: &Self::Elem,
    ) -> Result<(Ordering, Decision), OrderError> {
        let d = self.decide(&self.multiply(&self.invert(a), b))?;
        Ok((d.sign.as_ordering().reverse(), d))
    }
}

/// `Z` with its natural order.
#[derive(Clone, Copy, Debug, Default)]
pub struct IntegerOrder;

impl Group for IntegerOrder {
    type Elem = BigInt;

    fn identity(&self) -> BigInt {
        BigInt::zero()
    }
    fn multiply(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn invert(&self, a: &BigInt) -> BigInt {
        -a
    }
}

impl OrderOracle for IntegerOrder {
    fn decide(&self, g: &BigInt) -> Result<Decision, OrderError> {
        Ok(Decision::new(Sign::of(g), "integer"))
    }
    fn invariance(&self) -> Invariance {
        Invariance::Bi
    }
}

/// `Z²` ordered by an [`IndexOrder`]. Every such order comes from a cone,
/// and Z² is abelian, so it is bi-invariant.
#[derive(Clone, Debug)]
pub struct LatticeOrder(pub IndexOrder);

impl Group for LatticeOrder {
    type Elem = Point;

    fn identity(&self) -> Point {
        Point::default()
    }
    fn multiply(&self, a: &Point, b: &Point) -> Point {
        a + b
    }
    fn invert(&self, a: &Point) -> Point {
        -a
    }
}

impl OrderOracle for LatticeOrder {
    fn decide(&self, g: &Point) -> Result<Decision, OrderError> {
        Ok(Decision::new(self.0.sign(g), "lattice"))
    }
    fn invariance(&self) -> Invariance {
        Invariance::Bi
    }
}

type Projection<G, H> = Box<dyn Fn(&G) -> H + Send + Sync>;
type KernelCast<G, F> = Box<dyn Fn(&G) -> Option<F> + Send + Sync>;

/// Data for ordering `G` from a short exact sequence `1 → F → G → H → 1`.
pub struct ExtensionSpec<G: Group, H: OrderOracle, F: OrderOracle> {
    pub group: G,
    pub quotient: H,
    pub kernel: F,
    /// The homomorphism `G → H`.
    pub project: Projection<G::Elem, H::Elem>,
    /// Defined exactly on elements projecting to the identity.
    pub kernel_cast: KernelCast<G::Elem, F::Elem>,
    /// Caller's assertion that the kernel order is invariant under
    /// conjugation by all of `G`. Not checked here.
    pub kernel_conjugation_invariant: bool,
}

/// The order with positive cone `p⁻¹(P_H) ∪ P_F`.
pub struct ExtensionOrder<G: Group, H: OrderOracle, F: OrderOracle> {
    spec: ExtensionSpec<G, H, F>,
    invariance: Invariance,
}

pub fn extend_order<G: Group, H: OrderOracle, F: OrderOracle>(
    spec: ExtensionSpec<G, H, F>,
) -> ExtensionOrder<G, H, F> {
    let bi = spec.quotient.invariance() == Invariance::Bi
        && spec.kernel.invariance() == Invariance::Bi
        && spec.kernel_conjugation_invariant;
    ExtensionOrder {
        invariance: if bi { Invariance::Bi } else { Invariance::Left },
        spec,
    }
}

impl<G: Group, H: OrderOracle, F: OrderOracle> ExtensionOrder<G, H, F> {
    pub fn quotient(&self) -> &H {
        &self.spec.quotient
    }

    pub fn kernel(&self) -> &F {
        &self.spec.kernel
    }

    pub fn project(&self, g: &G::Elem) -> H::Elem {
        (self.spec.project)(g)
    }

    pub fn kernel_cast(&self, g: &G::Elem) -> Option<F::Elem> {
        (self.spec.kernel_cast)(g)
    }
}

impl<G: Group, H: OrderOracle, F: OrderOracle> Group for ExtensionOrder<G, H, F> {
    type Elem = G::Elem;

    fn identity(&self) -> G::Elem {
        self.spec.group.identity()
    }
    fn multiply(&self, a: &G::Elem, b: &G::Elem) -> G::Elem {
        self.spec.group.multiply(a, b)
    }
    fn invert(&self, a: &G::Elem) -> G::Elem {
        self.spec.group.invert(a)
    }
}

impl<G: Group, H: OrderOracle, F: OrderOracle> OrderOracle for ExtensionOrder<G, H, F> {
    fn decide(&self, g: &G::Elem) -> Result<Decision, OrderError> {
        let q = self.spec.quotient.decide(&self.project(g))?;
        if q.sign != Sign::Zero {
            return Ok(q.nested("quotient"));
        }
        let f = self.kernel_cast(g).ok_or(OrderError::KernelCastUndefined)?;
        Ok(self.spec.kernel.decide(&f)?.nested("kernel"))
    }

    fn invariance(&self) -> Invariance {
        self.invariance
    }
}
