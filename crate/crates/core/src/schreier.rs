//! Reidemeister–Schreier rewriting along the transversal `{a^i b^j}`.
//!
//! Both kernels handled by this crate have the same shape: a group
//! generated by `a`, `b` (and possibly a kernel letter `c`), mapping onto
//! Z² by exponent sums, whose kernel is free on
//! `x[i,j] = a^i b^j · r · b^-j a^-i` where `r^k = a b a⁻¹ b⁻¹`.
//! For π₁(3P²), `r = c` and `k = 2`; for the free group F₂, `r` is the
//! commutator itself and `k = 1`.
//!
//! Scanning a word letter by letter from coset `(0,0)` writes it as
//! `f · a^i b^j` with `f` in the kernel. Moving along `b` contributes
//! nothing. Moving along `a` at height `j` contributes the Schreier
//! generator `y[i,j] = a^i b^j a b^-j a^-(i+1)`, which the relators
//! express in the x-basis as
//!
//! ```text
//! y[i,j] = x[i,j-1]^-k ··· x[i,0]^-k     (j > 0)
//! y[i,j] = x[i,j]^k ··· x[i,-1]^k        (j < 0)
//! ```
//!
//! and a kernel letter `c` at coset `(i,j)` contributes `x[i,j]`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::word::{Gen, Word, WordError};

pub(crate) const A: Gen = Gen::named('a');
pub(crate) const B: Gen = Gen::named('b');

#[derive(Clone, Debug)]
pub(crate) struct Rewriter {
    power: i64,
    kernel_letter: Option<Gen>,
}

/// A partially scanned word `f · a^i b^j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Scan {
    pub i: i64,
    pub j: i64,
    pub f: Word,
}

fn small(g: Gen, e: &BigInt) -> Result<i64, WordError> {
    e.to_i64().ok_or(WordError::ExponentOverflow(g))
}

impl Rewriter {
    pub fn new(power: i64, kernel_letter: Option<Gen>) -> Self {
        Rewriter {
            power,
            kernel_letter,
        }
    }

    /// The Schreier generator `y[i,j]` in the x-basis.
    fn schreier_gen(&self, i: i64, j: i64) -> Word {
        let k = self.power;
        if j > 0 {
            Word::reduce((0..j).rev().map(|l| (Gen::x(i, l), -k)))
        } else {
            Word::reduce((j..0).map(|l| (Gen::x(i, l), k)))
        }
    }

    /// Right-multiplies the scanned prefix by `w`.
    pub fn feed(&self, st: &mut Scan, w: &Word) -> Result<(), WordError> {
        for s in w.syllables() {
            match s.gen {
                B => st.j += small(B, &s.exp)?,
                A => {
                    let e = small(A, &s.exp)?;
                    if st.j == 0 {
                        st.i += e;
                    } else if e > 0 {
                        for _ in 0..e {
                            st.f.append(&self.schreier_gen(st.i, st.j));
                            st.i += 1;
                        }
                    } else {
                        for _ in 0..-e {
                            st.i -= 1;
                            st.f.append(&self.schreier_gen(st.i, st.j).invert());
                        }
                    }
                }
                g if Some(g) == self.kernel_letter => {
                    st.f.push(Gen::x(st.i, st.j), s.exp.clone());
                }
                g => return Err(WordError::UnknownGenerator(g)),
            }
        }
        Ok(())
    }

    pub fn scan(&self, w: &Word) -> Result<Scan, WordError> {
        let mut st = Scan::default();
        self.feed(&mut st, w)?;
        Ok(st)
    }
}

/// Substitutes `x[i,j] ↦ a^i b^j · r · b^-j a^-i` throughout an x-word.
pub(crate) fn expand_x_word(f: &Word, r: &Word) -> Result<Word, WordError> {
    let mut out = Word::identity();
    for s in f.syllables() {
        let (i, j) = s.gen.index().ok_or(WordError::UnknownGenerator(s.gen))?;
        let tail = Word::reduce([(A, i), (B, j)]);
        let core = if s.exp.is_negative() {
            r.invert().pow(&-&s.exp)
        } else {
            r.pow(&s.exp)
        };
        out.append(&core.conjugate(&tail));
    }
    Ok(out)
}
