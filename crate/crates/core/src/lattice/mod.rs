//! Bi-orderings of the lattice Z² and automorphisms that preserve them.
//!
//! Two families of orders live here: the lexicographic ones, and cone
//! orders read off a Jordan basis of an integer matrix. The latter are
//! what [`levitt::levitt_check`] hands back when a matrix preserves some
//! bi-ordering.

mod levitt;
mod quad;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use levitt::{levitt_check, EigenClass, LevittReport, LevittVerdict};
pub use quad::{is_perfect_square, sign_of_surd, QuadNum};

use crate::order::Sign;
use crate::word::Index;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZnError {
    #[error("determinant {0} is not ±1")]
    Determinant(BigInt),
    #[error("matrix (trace {trace}, det {det}) does not have two positive eigenvalues")]
    NotPositivePair { trace: BigInt, det: BigInt },
    #[error("matrix (trace {trace}, det {det}) preserves no bi-ordering of Z²")]
    NoInvariantCone { trace: BigInt, det: BigInt },
    #[error("bad matrix '{0}': expected m11,m12;m21,m22")]
    Syntax(String),
}

/// A point of Z².
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: BigInt,
    pub y: BigInt,
}

impl Point {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Point {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

impl From<Index> for Point {
    fn from((i, j): Index) -> Self {
        Point::new(i, j)
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        Point::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        Point::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-&self.x, -&self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A 2×2 integer matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix2 {
    pub m: [[BigInt; 2]; 2],
}

impl IntMatrix2 {
    pub fn new(
        m11: impl Into<BigInt>,
        m12: impl Into<BigInt>,
        m21: impl Into<BigInt>,
        m22: impl Into<BigInt>,
    ) -> Self {
        IntMatrix2 {
            m: [[m11.into(), m12.into()], [m21.into(), m22.into()]],
        }
    }

    pub fn identity() -> Self {
        IntMatrix2::new(1, 0, 0, 1)
    }

    pub fn trace(&self) -> BigInt {
        &self.m[0][0] + &self.m[1][1]
    }

    pub fn det(&self) -> BigInt {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    /// `trace² - 4·det`, the discriminant of the characteristic polynomial.
    pub fn discriminant(&self) -> BigInt {
        let t = self.trace();
        &t * &t - BigInt::from(4) * self.det()
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix2::identity()
    }

    pub fn apply(&self, v: &Point) -> Point {
        Point::new(
            &self.m[0][0] * &v.x + &self.m[0][1] * &v.y,
            &self.m[1][0] * &v.x + &self.m[1][1] * &v.y,
        )
    }

    pub fn apply_index(&self, (i, j): Index) -> Point {
        self.apply(&Point::new(i, j))
    }

    pub fn mul(&self, rhs: &IntMatrix2) -> IntMatrix2 {
        let a = &self.m;
        let b = &rhs.m;
        IntMatrix2 {
            m: [
                [
                    &a[0][0] * &b[0][0] + &a[0][1] * &b[1][0],
                    &a[0][0] * &b[0][1] + &a[0][1] * &b[1][1],
                ],
                [
                    &a[1][0] * &b[0][0] + &a[1][1] * &b[1][0],
                    &a[1][0] * &b[0][1] + &a[1][1] * &b[1][1],
                ],
            ],
        }
    }

    /// Order of the matrix in GL₂(Z) when finite. Finite orders there are
    /// 1, 2, 3, 4 or 6.
    pub fn finite_order(&self) -> Option<u32> {
        let mut p = self.clone();
        for k in 1..=6 {
            if p.is_identity() {
                return Some(k);
            }
            p = p.mul(self);
        }
        None
    }
}

impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{};{},{}",
            self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]
        )
    }
}

impl FromStr for IntMatrix2 {
    type Err = ZnError;

    fn from_str(s: &str) -> Result<Self, ZnError> {
        let bad = || ZnError::Syntax(s.to_string());
        let rows: Vec<&str> = s.split(';').collect();
        if rows.len() != 2 {
            return Err(bad());
        }
        let mut entries = Vec::with_capacity(4);
        for row in rows {
            let cols: Vec<&str> = row.split(',').collect();
            if cols.len() != 2 {
                return Err(bad());
            }
            for c in cols {
                entries.push(c.trim().parse::<BigInt>().map_err(|_| bad())?);
            }
        }
        let [a, b, c, d]: [BigInt; 4] = entries.try_into().map_err(|_| bad())?;
        Ok(IntMatrix2::new(a, b, c, d))
    }
}

/// Lexicographic comparison: first coordinate dominates.
pub fn lex_compare(v: &Point, w: &Point) -> Ordering {
    v.x.cmp(&w.x).then_with(|| v.y.cmp(&w.y))
}

/// Which Jordan-basis situation an [`EigenCone`] was built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeKind {
    /// The identity matrix: standard basis.
    Identity,
    /// Trace 2, det 1, not the identity: eigenvector plus generalized
    /// eigenvector, all rational.
    Parabolic,
    /// Det 1, trace > 2: two irrational positive eigenvalues.
    Hyperbolic,
    /// Det -1, trace ≠ 0: eigenvalues of opposite sign, both irrational.
    /// The boundary of the cone is the negative eigenline.
    Reflection,
}

/// `v ↦ sign of (rat·v + (irr·v)√d)` up to a positive scale factor.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Functional {
    rat: [BigInt; 2],
    irr: [BigInt; 2],
}

impl Functional {
    /// Clears denominators of `α x + β y` with a positive multiplier.
    fn from_coefficients(alpha: &QuadNum, beta: &QuadNum) -> Self {
        let parts = [
            alpha.rational_part(),
            beta.rational_part(),
            alpha.surd_part(),
            beta.surd_part(),
        ];
        let lcm = parts
            .iter()
            .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let scaled: Vec<BigInt> = parts
            .iter()
            .map(|r| (*r * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        Functional {
            rat: [scaled[0].clone(), scaled[1].clone()],
            irr: [scaled[2].clone(), scaled[3].clone()],
        }
    }

    fn sign(&self, v: &Point, d: &BigInt) -> Sign {
        let p = &self.rat[0] * &v.x + &self.rat[1] * &v.y;
        let q = &self.irr[0] * &v.x + &self.irr[1] * &v.y;
        sign_of_surd(&p, &q, d)
    }
}

/// The cone `{ c₁v₁ + c₂v₂ : c₂ > 0, or c₂ = 0 and c₁ > 0 }` for a Jordan
/// basis `(v₁, v₂)` of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenCone {
    matrix: IntMatrix2,
    kind: ConeKind,
    basis: [[QuadNum; 2]; 2],
    radicand: BigInt,
    c1: Functional,
    c2: Functional,
}

impl EigenCone {
    /// Cone for a matrix that preserves some bi-ordering: det 1 with trace
    /// at least 2, or det -1 with nonzero trace.
    pub fn new(m: &IntMatrix2) -> Result<Self, ZnError> {
        let det = m.det();
        if det.is_one() {
            Self::for_positive_pair(m)
        } else if det == -BigInt::one() && !m.trace().is_zero() {
            Self::build(m, ConeKind::Reflection)
        } else if det.abs().is_one() {
            Err(ZnError::NoInvariantCone {
                trace: m.trace(),
                det,
            })
        } else {
            Err(ZnError::Determinant(det))
        }
    }

    /// Det 1, trace ≥ 2 only.
    pub fn for_positive_pair(m: &IntMatrix2) -> Result<Self, ZnError> {
        let det = m.det();
        let trace = m.trace();
        if !det.is_one() || trace < BigInt::from(2) {
            return Err(ZnError::NotPositivePair { trace, det });
        }
        let kind = if m.is_identity() {
            ConeKind::Identity
        } else if trace == BigInt::from(2) {
            ConeKind::Parabolic
        } else {
            ConeKind::Hyperbolic
        };
        Self::build(m, kind)
    }

    fn build(m: &IntMatrix2, kind: ConeKind) -> Result<Self, ZnError> {
        let trace = m.trace();
        let disc = m.discriminant();
        // Rational cases never touch the surd part, so any valid radicand
        // will do for them.
        let d = match kind {
            ConeKind::Hyperbolic | ConeKind::Reflection => disc.clone(),
            ConeKind::Identity | ConeKind::Parabolic => BigInt::from(2),
        };
        let int = |n: &BigInt| QuadNum::from_int(n.clone(), &d);
        let [[a, b], [c, dd]] = &m.m;
        let basis = match kind {
            ConeKind::Identity => [
                [int(&1.into()), int(&0.into())],
                [int(&0.into()), int(&1.into())],
            ],
            ConeKind::Parabolic => {
                // N = M - I is nilpotent and nonzero; pick v₂ outside ker N
                let n = [[a - 1, b.clone()], [c.clone(), dd - 1]];
                let (v2, v1) = if !n[0][0].is_zero() || !n[1][0].is_zero() {
                    ((1, 0), (n[0][0].clone(), n[1][0].clone()))
                } else {
                    ((0, 1), (n[0][1].clone(), n[1][1].clone()))
                };
                [
                    [int(&v1.0), int(&v1.1)],
                    [int(&v2.0.into()), int(&v2.1.into())],
                ]
            }
            ConeKind::Hyperbolic | ConeKind::Reflection => {
                // eigenvalues (t ± √disc)/2; eigenvector (b, λ - a) since b ≠ 0
                debug_assert!(!b.is_zero());
                let half = BigRational::new(1.into(), 2.into());
                let mid = QuadNum::rational(BigRational::from_integer(trace.clone()) * &half, &d);
                let root = &QuadNum::root(&d) * &QuadNum::rational(half, &d);
                let large = &mid + &root;
                let small = &mid - &root;
                let eig = |lambda: &QuadNum| [int(b), lambda - &int(a)];
                match kind {
                    // c₂ is the coordinate along the small eigenvalue
                    ConeKind::Hyperbolic => [eig(&large), eig(&small)],
                    // c₂ is the coordinate along the positive eigenvalue
                    _ => [eig(&small), eig(&large)],
                }
            }
        };
        let [v1, v2] = &basis;
        let det_b = &(&v1[0] * &v2[1]) - &(&v2[0] * &v1[1]);
        let c1 = Functional::from_coefficients(&(&v2[1] / &det_b), &(&(-&v2[0]) / &det_b));
        let c2 = Functional::from_coefficients(&(&(-&v1[1]) / &det_b), &(&v1[0] / &det_b));
        Ok(EigenCone {
            matrix: m.clone(),
            kind,
            basis,
            radicand: d,
            c1,
            c2,
        })
    }

    pub fn matrix(&self) -> &IntMatrix2 {
        &self.matrix
    }

    pub fn kind(&self) -> ConeKind {
        self.kind
    }

    /// The Jordan basis `[v₁, v₂]`, coordinates in `Q(√d)`.
    pub fn basis(&self) -> &[[QuadNum; 2]; 2] {
        &self.basis
    }

    pub fn sign(&self, v: &Point) -> Sign {
        match self.c2.sign(v, &self.radicand) {
            Sign::Zero => self.c1.sign(v, &self.radicand),
            s => s,
        }
    }
}

/// Sign of `v` in the eigenbasis cone of `m` (det 1, trace ≥ 2).
pub fn eigen_sign(m: &IntMatrix2, v: &Point) -> Result<Sign, ZnError> {
    Ok(EigenCone::for_positive_pair(m)?.sign(v))
}

/// A strict total order on Z², used both for lattice elements and for
/// ordering Magnus variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndexOrder {
    Lex,
    /// Second coordinate dominates.
    SwappedLex,
    Eigen(Arc<EigenCone>),
}

impl IndexOrder {
    pub fn eigen(m: &IntMatrix2) -> Result<Self, ZnError> {
        Ok(IndexOrder::Eigen(Arc::new(EigenCone::new(m)?)))
    }

    pub fn is_lex(&self) -> bool {
        matches!(self, IndexOrder::Lex)
    }

    pub fn sign(&self, v: &Point) -> Sign {
        match self {
            IndexOrder::Lex => Sign::of_ordering(lex_compare(v, &Point::default())),
            IndexOrder::SwappedLex => Sign::of_ordering(
                v.y.cmp(&BigInt::zero())
                    .then_with(|| v.x.cmp(&BigInt::zero())),
            ),
            IndexOrder::Eigen(cone) => cone.sign(v),
        }
    }

    /// `a < b` iff `b - a` is positive.
    pub fn compare(&self, a: &Point, b: &Point) -> Ordering {
        match self {
            IndexOrder::Lex => lex_compare(a, b),
            _ => self.sign(&(b - a)).as_ordering().reverse(),
        }
    }

    pub fn compare_index(&self, a: Index, b: Index) -> Ordering {
        match self {
            IndexOrder::Lex => a.cmp(&b),
            IndexOrder::SwappedLex => (a.1, a.0).cmp(&(b.1, b.0)),
            IndexOrder::Eigen(_) => self.compare(&a.into(), &b.into()),
        }
    }
}

impl fmt::Display for IndexOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexOrder::Lex => write!(f, "lex"),
            IndexOrder::SwappedLex => write!(f, "swapped-lex"),
            IndexOrder::Eigen(c) => write!(f, "eigen({})", c.matrix()),
        }
    }
}

/// A lattice point `v` in the box `|x|, |y| ≤ bound` with `v > 0` but
/// `m v ≤ 0`, i.e. a witness that `ord` is not `m`-invariant.
pub fn invariance_violation(m: &IntMatrix2, ord: &IndexOrder, bound: i64) -> Option<Point> {
    (-bound..=bound)
        .flat_map(|x| (-bound..=bound).map(move |y| Point::new(x, y)))
        .find(|v| ord.sign(v) == Sign::Positive && ord.sign(&m.apply(v)) != Sign::Positive)
}
