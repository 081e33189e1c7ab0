//! Seeded random words for fuzzing.
//!
//! The default distribution: the number of syllables is geometric with
//! mean 4 (success probability 1/5, counting failures), each exponent is
//! uniform on `{-3..3} \ {0}`, and indexed letters draw both coordinates
//! uniformly from `-3..=3`. Adjacent syllables on the same letter merge,
//! so the reduced word may be shorter than the draw.

use num_bigint::BigInt;
use rand::seq::IndexedRandom;
use rand::Rng;
use rand_distr::{Distribution, Geometric};

use crate::word::{Gen, Word};

/// Where letters come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Alphabet {
    Letters(Vec<Gen>),
    /// `x[i,j]` with `|i|, |j| ≤ bound`.
    Indexed {
        bound: i64,
    },
}

impl Alphabet {
    pub fn letters(names: &str) -> Self {
        Alphabet::Letters(names.chars().map(Gen::named).collect())
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Gen {
        match self {
            Alphabet::Letters(gens) => *gens.choose(rng).expect("nonempty alphabet"),
            Alphabet::Indexed { bound } => Gen::x(
                rng.random_range(-bound..=*bound),
                rng.random_range(-bound..=*bound),
            ),
        }
    }
}

pub const MEAN_SYLLABLES: f64 = 4.0;
pub const MAX_EXPONENT: i64 = 3;
pub const INDEX_BOUND: i64 = 3;

/// A word from the documented fuzzing distribution.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, alphabet: &Alphabet) -> Word {
    let geo = Geometric::new(1.0 / (1.0 + MEAN_SYLLABLES)).expect("valid probability");
    let count = geo.sample(rng);
    Word::reduce((0..count).map(|_| {
        let g = alphabet.sample(rng);
        let mut e = rng.random_range(1..=MAX_EXPONENT);
        if rng.random_bool(0.5) {
            e = -e;
        }
        (g, BigInt::from(e))
    }))
}

/// A freely reduced word of exactly `len` letters.
pub fn random_reduced_word<R: Rng + ?Sized>(rng: &mut R, alphabet: &Alphabet, len: usize) -> Word {
    let mut out = Word::identity();
    let mut last: Option<(Gen, i8)> = None;
    for _ in 0..len {
        let letter = loop {
            let g = alphabet.sample(rng);
            let e: i8 = if rng.random_bool(0.5) { 1 } else { -1 };
            if last != Some((g, -e)) {
                break (g, e);
            }
        };
        out.push(letter.0, BigInt::from(letter.1));
        last = Some(letter);
    }
    out
}

/// A reduced word whose length is uniform on `0..=max_len`.
pub fn random_word_up_to<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: &Alphabet,
    max_len: usize,
) -> Word {
    let len = rng.random_range(0..=max_len);
    random_reduced_word(rng, alphabet, len)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn deterministic_for_a_seed() {
        let ab = Alphabet::letters("ab");
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..20)
                .map(|_| random_word(&mut rng, &ab))
                .collect::<Vec<_>>()
        };
        assert_eq!(draw(7), draw(7));
        assert_ne!(draw(7), draw(8));
    }

    #[test]
    fn reduced_words_have_exact_length() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let alpha = Alphabet::Indexed { bound: 1 };
        for len in 0..12 {
            let w = random_reduced_word(&mut rng, &alpha, len);
            assert_eq!(w.letter_length().to_usize(), Some(len));
        }
    }

    #[test]
    fn mean_syllable_count_is_about_four() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let alpha = Alphabet::Indexed { bound: 3 };
        let n = 4000;
        let total: usize = (0..n)
            .map(|_| random_word(&mut rng, &alpha).syllables().len())
            .sum();
        // a few syllables merge, so the mean sits slightly below 4
        let mean = total as f64 / n as f64;
        assert!((3.5..4.2).contains(&mean), "mean {mean}");
        let w = random_word(&mut rng, &alpha);
        for s in w.syllables() {
            let (i, j) = s.gen.index().unwrap();
            assert!(i.abs() <= 3 && j.abs() <= 3);
        }
    }
}
