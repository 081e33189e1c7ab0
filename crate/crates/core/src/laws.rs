//! Checking the order axioms on sampled elements.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::order::{OrderError, OrderOracle, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Law {
    /// Exactly one of `a < b`, `a = b`, `a > b`, consistently both ways,
    /// with `a = b` only for equal elements.
    Trichotomy,
    /// `a < b < c` implies `a < c`, and positives multiply to positives.
    Transitivity,
    /// `a < b` implies `c a < c b`.
    LeftInv,
    /// `a < b` implies `a c < b c`.
    RightInv,
    /// `sign(c a c⁻¹) = sign(a)`.
    ConjInv,
    /// `sign(φ(a)) = sign(a)` for a supplied automorphism `φ`.
    EndoInv,
}

impl Law {
    pub const ALL: [Law; 6] = [
        Law::Trichotomy,
        Law::Transitivity,
        Law::LeftInv,
        Law::RightInv,
        Law::ConjInv,
        Law::EndoInv,
    ];

    /// Laws that only a bi-invariant order is expected to satisfy.
    pub fn needs_bi(self) -> bool {
        matches!(self, Law::RightInv | Law::ConjInv)
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Law::Trichotomy => "trichotomy",
            Law::Transitivity => "transitivity",
            Law::LeftInv => "left-inv",
            Law::RightInv => "right-inv",
            Law::ConjInv => "conj-inv",
            Law::EndoInv => "endo-inv",
        })
    }
}

impl FromStr for Law {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Law::ALL
            .into_iter()
            .find(|l| l.to_string() == s)
            .ok_or_else(|| format!("unknown law `{s}`"))
    }
}

fn sym(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    }
}

/// An automorphism applied elementwise for [`Law::EndoInv`].
pub type Endo<'a, E> = &'a dyn Fn(&E) -> E;

/// Checks `law` on the triple `(a, b, c)`. Returns a description of the
/// failure, if any. `endo` is required for [`Law::EndoInv`].
pub fn check_law<O>(
    o: &O,
    law: Law,
    [a, b, c]: &[O::Elem; 3],
    endo: Option<Endo<'_, O::Elem>>,
) -> Result<Option<String>, OrderError>
where
    O: OrderOracle,
    O::Elem: PartialEq,
{
    let fail = |s: String| Ok(Some(s));
    match law {
        Law::Trichotomy => {
            let ab = o.compare(a, b)?;
            let ba = o.compare(b, a)?;
            if ab != ba.reverse() {
                return fail(format!("a {} b but b {} a", sym(ab), sym(ba)));
            }
            if (ab == Ordering::Equal) != (a == b) {
                return fail(format!(
                    "a {} b disagrees with equality of normal forms",
                    sym(ab)
                ));
            }
            let sa = o.sign(a)?;
            let si = o.sign(&o.invert(a))?;
            if si != sa.flip() {
                return fail(format!("sign(a) = {sa} but sign(a⁻¹) = {si}"));
            }
        }
        Law::Transitivity => {
            let xs = [a, b, c];
            for p in PERMS {
                let (x, y, z) = (xs[p[0]], xs[p[1]], xs[p[2]]);
                let xy = o.compare(x, y)?;
                let yz = o.compare(y, z)?;
                if xy == Ordering::Less && yz == Ordering::Less {
                    let xz = o.compare(x, z)?;
                    if xz != Ordering::Less {
                        return fail(format!("x < y < z but x {} z", sym(xz)));
                    }
                }
            }
            if o.sign(a)? == Sign::Positive && o.sign(b)? == Sign::Positive {
                let s = o.sign(&o.multiply(a, b))?;
                if s != Sign::Positive {
                    return fail(format!("a, b positive but a b is {s}"));
                }
            }
        }
        Law::LeftInv => {
            let before = o.compare(a, b)?;
            let after = o.compare(&o.multiply(c, a), &o.multiply(c, b))?;
            if before != after {
                return fail(format!("a {} b but c a {} c b", sym(before), sym(after)));
            }
        }
        Law::RightInv => {
            let before = o.compare(a, b)?;
            let after = o.compare(&o.multiply(a, c), &o.multiply(b, c))?;
            if before != after {
                return fail(format!("a {} b but a c {} b c", sym(before), sym(after)));
            }
        }
        Law::ConjInv => {
            let s = o.sign(a)?;
            let conj = o.multiply(&o.multiply(c, a), &o.invert(c));
            let t = o.sign(&conj)?;
            if s != t {
                return fail(format!("sign(a) = {s} but sign(c a c⁻¹) = {t}"));
            }
        }
        Law::EndoInv => {
            let phi = endo.ok_or_else(|| {
                OrderError::Domain("endo-inv needs an automorphism for this group".into())
            })?;
            let s = o.sign(a)?;
            let t = o.sign(&phi(a))?;
            if s != t {
                return fail(format!("sign(a) = {s} but sign(φ(a)) = {t}"));
            }
        }
    }
    Ok(None)
}

const PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];
