//! The bi-ordering of π₁(3P²) = ⟨a, b, c : a b a⁻¹ b⁻¹ = c²⟩.
//!
//! The normal closure `F` of `c` is the kernel of the exponent-sum map to
//! Z² and is free on `x[i,j] = a^i b^j c b^-j a^-i`. Every element is
//! written uniquely as `f · a^m b^n` with `f` a reduced word in the
//! `x[i,j]`. The order compares `(m, n)` lexicographically and breaks ties
//! with the Magnus order on `f`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;

use crate::free_order::MagnusOrder;
use crate::lattice::{IndexOrder, Point};
use crate::order::{
    extend_order, ExtensionOrder, ExtensionSpec, Group, LatticeOrder, OrderError, OrderOracle,
};
use crate::schreier::{expand_x_word, Rewriter, Scan, A, B};
use crate::word::{Gen, Word, WordError};

pub const C: Gen = Gen::named('c');

fn rewriter() -> Rewriter {
    Rewriter::new(2, Some(C))
}

/// Normal form `f · a^m b^n` of an element of π₁(3P²).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NF3P2 {
    pub m: i64,
    pub n: i64,
    /// Kernel part, a reduced word in the `x[i,j]`.
    pub f: Word,
}

impl NF3P2 {
    pub fn new(m: i64, n: i64, f: Word) -> Self {
        NF3P2 { m, n, f }
    }

    /// Image under the exponent-sum map to Z².
    pub fn projection(&self) -> Point {
        Point::new(self.m, self.n)
    }

    /// Back to a word in `a, b, c`.
    pub fn to_word(&self) -> Word {
        let mut w = expand_x_word(&self.f, &Word::gen(C)).expect("kernel part is an x-word");
        w.push(A, BigInt::from(self.m));
        w.push(B, BigInt::from(self.n));
        w
    }

    fn from_scan(st: Scan) -> Self {
        NF3P2 {
            m: st.i,
            n: st.j,
            f: st.f,
        }
    }

    fn scan(&self) -> Scan {
        Scan {
            i: self.m,
            j: self.n,
            f: self.f.clone(),
        }
    }
}

impl fmt::Display for NF3P2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} · a^{} b^{}", self.f, self.m, self.n)
    }
}

pub fn nf_of_word(w: &Word) -> Result<NF3P2, WordError> {
    Ok(NF3P2::from_scan(rewriter().scan(w)?))
}

pub fn nf_multiply(u: &NF3P2, v: &NF3P2) -> NF3P2 {
    let mut st = u.scan();
    rewriter()
        .feed(&mut st, &v.to_word())
        .expect("normal forms only contain a, b, c");
    NF3P2::from_scan(st)
}

pub fn nf_invert(u: &NF3P2) -> NF3P2 {
    nf_of_word(&u.to_word().invert()).expect("normal forms only contain a, b, c")
}

/// `w[i,j] = g a^i b^-n a^-(i+m)` where `(m, n)` are the exponent sums of
/// `g`. It lies in `F` and satisfies `g x[i,j] g⁻¹ = w x[i+m,j+n] w⁻¹`.
/// The `b^j` factors cancel, so `w` does not depend on `j`.
pub fn conjugator(g: &Word, i: i64, _j: i64) -> Word {
    let m = g.exponent_sum(A);
    let n = g.exponent_sum(B);
    let w = g.multiply(&Word::reduce([
        (A, BigInt::from(i)),
        (B, -&n),
        (A, -(BigInt::from(i) + &m)),
    ]));
    debug_assert!(w.exponent_sum(A) == BigInt::from(0) && w.exponent_sum(B) == BigInt::from(0));
    w
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Surf3P2Group;

impl Group for Surf3P2Group {
    type Elem = NF3P2;

    fn identity(&self) -> NF3P2 {
        NF3P2::default()
    }
    fn multiply(&self, a: &NF3P2, b: &NF3P2) -> NF3P2 {
        nf_multiply(a, b)
    }
    fn invert(&self, a: &NF3P2) -> NF3P2 {
        nf_invert(a)
    }
}

pub type Surf3P2Order = ExtensionOrder<Surf3P2Group, LatticeOrder, MagnusOrder>;

/// Lex on the Z² quotient, Magnus (lex variables) on the free kernel.
///
/// Conjugation by `g` sends `x[i,j]` to a conjugate of `x[i+m,j+n]`, a
/// uniform shift on the abelianized kernel, which the lex Magnus order
/// respects. Hence the bi-invariant flag.
pub fn surf3p2_order() -> Surf3P2Order {
    extend_order(ExtensionSpec {
        group: Surf3P2Group,
        quotient: LatticeOrder(IndexOrder::Lex),
        kernel: MagnusOrder::indexed(IndexOrder::Lex),
        project: Box::new(NF3P2::projection),
        kernel_cast: Box::new(|g: &NF3P2| (g.m == 0 && g.n == 0).then(|| g.f.clone())),
        kernel_conjugation_invariant: true,
    })
}

pub fn surf3p2_compare(u: &Word, v: &Word) -> Result<Ordering, OrderError> {
    surf3p2_order().compare(&nf_of_word(u)?, &nf_of_word(v)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::Sign;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn nf(s: &str) -> NF3P2 {
        nf_of_word(&w(s)).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(nf("c"), NF3P2::new(0, 0, w("x[0,0]")));
        assert_eq!(nf("a b a^-1 b^-1"), NF3P2::new(0, 0, w("x[0,0]^2")));
        assert_eq!(nf("a c a^-1"), NF3P2::new(0, 0, w("x[1,0]")));
        assert_eq!(nf("a b c"), NF3P2::new(1, 1, w("x[1,1]")));
        assert!(nf_of_word(&w("t")).is_err());
    }

    #[test]
    fn multiply_examples() {
        let a = NF3P2::new(1, 0, Word::identity());
        let c = NF3P2::new(0, 0, w("x[0,0]"));
        assert_eq!(nf_multiply(&a, &c), NF3P2::new(1, 0, w("x[1,0]")));
        let u = nf("a b^-2 c a c^-1 b");
        assert_eq!(nf_multiply(&u, &nf_invert(&u)), NF3P2::default());
        let x10 = NF3P2::new(0, 0, w("x[1,0]"));
        assert_eq!(nf_multiply(&c, &x10), NF3P2::new(0, 0, w("x[0,0] x[1,0]")));
    }

    #[test]
    fn conjugator_examples() {
        assert_eq!(conjugator(&w("a"), 0, 0), Word::identity());
        assert_eq!(conjugator(&w("a b"), 0, 0), Word::identity());
        assert_eq!(conjugator(&w("b"), 1, 0), w("b a b^-1 a^-1"));
    }

    #[test]
    fn conjugator_identity_holds() {
        for g in ["a", "b", "a^-1 c b^2", "c b a^-2 c^-1", "b^-1 a b^3"] {
            let g = w(g);
            let m: i64 = g.exponent_sum(A).try_into().unwrap();
            let n: i64 = g.exponent_sum(B).try_into().unwrap();
            for i in -2..=2 {
                for j in -2..=2 {
                    let x = expand_x_word(&Word::gen(Gen::x(i, j)), &Word::gen(C)).unwrap();
                    let y = expand_x_word(&Word::gen(Gen::x(i + m, j + n)), &Word::gen(C)).unwrap();
                    let cw = conjugator(&g, i, j);
                    let lhs = nf_of_word(&x.conjugate(&g)).unwrap();
                    let rhs = nf_of_word(&y.conjugate(&cw)).unwrap();
                    assert_eq!(lhs, rhs);
                    assert_eq!(nf_of_word(&cw).unwrap().projection(), Point::default());
                }
            }
        }
    }

    #[test]
    fn compare_examples() {
        assert_eq!(surf3p2_compare(&w("1"), &w("c")), Ok(Ordering::Less));
        assert_eq!(surf3p2_compare(&w("c"), &w("a")), Ok(Ordering::Less));
        assert_eq!(
            surf3p2_compare(&w("c^2"), &w("a b a^-1 b^-1")),
            Ok(Ordering::Equal)
        );
    }

    #[test]
    fn decision_stages() {
        let o = surf3p2_order();
        let d = o.decide(&nf("a^-1 c")).unwrap();
        assert_eq!(
            (d.sign, d.stage.as_str()),
            (Sign::Negative, "quotient.lattice")
        );
        let d = o.decide(&nf("a c a^-1 c^-1")).unwrap();
        assert_eq!(d.stage, "kernel.magnus");
    }

    #[test]
    fn round_trip() {
        for s in [
            "a^3 c^-1 b^2 a^-1 c",
            "b^-2 c a b c^3",
            "1",
            "c a^-1 b^-1 c",
        ] {
            let u = nf(s);
            assert_eq!(nf_of_word(&u.to_word()).unwrap(), u);
        }
    }
}
