#![allow(dead_code)]

use biorder::word::{Gen, Word};
use proptest::prelude::*;

/// Words over named letters: up to `max_syl` syllables, exponents in
/// `-3..=3`.
pub fn letter_word(names: &'static str, max_syl: usize) -> impl Strategy<Value = Word> {
    let n = names.chars().count();
    prop::collection::vec((0..n, -3i64..=3), 0..=max_syl).prop_map(move |syl| {
        Word::reduce(
            syl.into_iter()
                .map(|(k, e)| (Gen::named(names.chars().nth(k).unwrap()), e)),
        )
    })
}

/// Words over `x[i,j]` with `|i|, |j| ≤ bound`.
pub fn x_word(bound: i64, max_syl: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((-bound..=bound, -bound..=bound, -3i64..=3), 0..=max_syl)
        .prop_map(|syl| Word::reduce(syl.into_iter().map(|(i, j, e)| (Gen::x(i, j), e))))
}

/// A freely reduced word given as a letter list, built from an arbitrary
/// letter sequence by cancelling adjacent inverse pairs.
pub fn reduce_letters(letters: &[(Gen, i8)]) -> Vec<(Gen, i8)> {
    let mut out: Vec<(Gen, i8)> = Vec::new();
    for &(g, e) in letters {
        if out.last() == Some(&(g, -e)) {
            out.pop();
        } else {
            out.push((g, e));
        }
    }
    out
}

pub fn word_from_letters(letters: &[(Gen, i8)]) -> Word {
    Word::reduce(letters.iter().map(|&(g, e)| (g, i64::from(e))))
}

/// Every freely reduced word of exactly `len` letters over `gens`.
pub fn all_reduced_words(gens: &[Gen], len: usize) -> Vec<Vec<(Gen, i8)>> {
    let letters: Vec<(Gen, i8)> = gens.iter().flat_map(|&g| [(g, 1), (g, -1)]).collect();
    let mut layer: Vec<Vec<(Gen, i8)>> = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                if w.last() != Some(&(l.0, -l.1)) {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        layer = next;
    }
    layer
}
