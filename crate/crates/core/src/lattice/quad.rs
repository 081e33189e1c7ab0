//! Exact arithmetic in a real quadratic field `Q(√d)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::order::Sign;

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Sign of `p + q√d` for integers or rationals, with `d > 0` non-square.
///
/// No floating point: when `p` and `q` disagree in sign, compare `p²`
/// against `q²d`.
pub fn sign_of_surd<T>(p: &T, q: &T, d: &BigInt) -> Sign
where
    T: Signed + Clone + From<BigInt> + PartialOrd,
{
    let sp = Sign::of(p);
    let sq = Sign::of(q);
    match (sp, sq) {
        (s, Sign::Zero) | (Sign::Zero, s) => s,
        (a, b) if a == b => a,
        _ => {
            let lhs = p.clone() * p.clone();
            let rhs = q.clone() * q.clone() * T::from(d.clone());
            if lhs > rhs {
                sp
            } else {
                sq
            }
        }
    }
}

/// `p + q√d` with rational `p`, `q` and a fixed non-square radicand `d > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadNum {
    p: BigRational,
    q: BigRational,
    d: BigInt,
}

impl QuadNum {
    /// Panics if `d` is not a positive non-square.
    pub fn new(p: BigRational, q: BigRational, d: BigInt) -> Self {
        assert!(
            d.is_positive() && !is_perfect_square(&d),
            "radicand {d} must be a positive non-square"
        );
        QuadNum { p, q, d }
    }

    pub fn rational(p: BigRational, d: &BigInt) -> Self {
        QuadNum::new(p, BigRational::zero(), d.clone())
    }

    pub fn from_int(n: impl Into<BigInt>, d: &BigInt) -> Self {
        QuadNum::rational(BigRational::from_integer(n.into()), d)
    }

    /// `√d` itself.
    pub fn root(d: &BigInt) -> Self {
        QuadNum::new(
            BigRational::zero(),
            BigRational::from_integer(1.into()),
            d.clone(),
        )
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.p
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.q
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn sign(&self) -> Sign {
        sign_of_surd(&self.p, &self.q, &self.d)
    }

    pub fn conjugate(&self) -> Self {
        QuadNum {
            p: self.p.clone(),
            q: -self.q.clone(),
            d: self.d.clone(),
        }
    }

    /// Field norm `p² - q²d`; zero only for zero.
    pub fn norm(&self) -> BigRational {
        &self.p * &self.p - &self.q * &self.q * BigRational::from_integer(self.d.clone())
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conjugate();
        Some(QuadNum {
            p: c.p / &n,
            q: c.q / &n,
            d: c.d,
        })
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(self.d, other.d, "mixed quadratic fields");
    }
}

impl Add for &QuadNum {
    type Output = QuadNum;
    fn add(self, rhs: &QuadNum) -> QuadNum {
        self.same_field(rhs);
        QuadNum {
            p: &self.p + &rhs.p,
            q: &self.q + &rhs.q,
            d: self.d.clone(),
        }
    }
}

impl Sub for &QuadNum {
    type Output = QuadNum;
    fn sub(self, rhs: &QuadNum) -> QuadNum {
        self + &(-rhs)
    }
}

impl Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum {
            p: -self.p.clone(),
            q: -self.q.clone(),
            d: self.d.clone(),
        }
    }
}

impl Mul for &QuadNum {
    type Output = QuadNum;
    fn mul(self, rhs: &QuadNum) -> QuadNum {
        self.same_field(rhs);
        let d = BigRational::from_integer(self.d.clone());
        QuadNum {
            p: &self.p * &rhs.p + &self.q * &rhs.q * d,
            q: &self.p * &rhs.q + &self.q * &rhs.p,
            d: self.d.clone(),
        }
    }
}

impl Div for &QuadNum {
    type Output = QuadNum;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &QuadNum) -> QuadNum {
        self * &rhs.recip().expect("division by zero in quadratic field")
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p.is_zero(), self.q.is_zero()) {
            (_, true) => write!(f, "{}", self.p),
            (true, false) => write!(f, "({})√{}", self.q, self.d),
            (false, false) => write!(f, "{} + ({})√{}", self.p, self.q, self.d),
        }
    }
}
