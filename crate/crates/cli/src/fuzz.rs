//! Seeded law fuzzing with greedy shrinking.

use num_traits::{One, Signed};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use biorder::laws::Law;
use biorder::random::random_word;
use biorder::word::Word;

use crate::context::Context;
use crate::CliError;

/// A failing triple after shrinking.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub law: Law,
    /// Index of the first failing sample.
    pub sample: usize,
    pub triple: [Word; 3],
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawOutcome {
    pub law: Law,
    pub failure: Option<Counterexample>,
}

/// The sample triples for a seed: every run with the same `(samples, seed)`
/// and context sees the same words.
pub fn draw_samples(ctx: &Context, samples: usize, seed: u64) -> Vec<[Word; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alphabet = ctx.alphabet();
    (0..samples)
        .map(|_| {
            [
                random_word(&mut rng, &alphabet),
                random_word(&mut rng, &alphabet),
                random_word(&mut rng, &alphabet),
            ]
        })
        .collect()
}

pub fn fuzz(
    ctx: &Context,
    laws: &[Law],
    samples: usize,
    seed: u64,
) -> Result<Vec<LawOutcome>, CliError> {
    let triples = draw_samples(ctx, samples, seed);
    laws.iter()
        .map(|&law| {
            if law == Law::EndoInv && !ctx.has_endo() {
                return Err(CliError::Precondition(format!(
                    "endo-inv has no automorphism to check in context {}",
                    ctx.name()
                )));
            }
            let results: Vec<Result<Option<String>, CliError>> =
                triples.par_iter().map(|t| ctx.check(law, t)).collect();
            // the smallest failing index wins, independent of scheduling
            for (i, r) in results.into_iter().enumerate() {
                if let Some(reason) = r? {
                    let (triple, reason) = shrink(ctx, law, triples[i].clone(), reason);
                    return Ok(LawOutcome {
                        law,
                        failure: Some(Counterexample {
                            law,
                            sample: i,
                            triple,
                            reason,
                        }),
                    });
                }
            }
            Ok(LawOutcome { law, failure: None })
        })
        .collect()
}

/// Candidate simplifications of a word: drop one syllable, or move one
/// exponent a step toward zero.
fn simpler(w: &Word) -> Vec<Word> {
    let syl = w.syllables();
    let mut out = Vec::new();
    for k in 0..syl.len() {
        out.push(Word::reduce(
            syl.iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, s)| (s.gen, s.exp.clone())),
        ));
    }
    for k in 0..syl.len() {
        if syl[k].exp.abs().is_one() {
            continue;
        }
        out.push(Word::reduce(syl.iter().enumerate().map(|(i, s)| {
            let e = if i == k {
                &s.exp - s.exp.signum()
            } else {
                s.exp.clone()
            };
            (s.gen, e)
        })));
    }
    out
}

fn shrink(
    ctx: &Context,
    law: Law,
    mut triple: [Word; 3],
    mut reason: String,
) -> ([Word; 3], String) {
    'outer: loop {
        for slot in 0..3 {
            for candidate in simpler(&triple[slot]) {
                let mut t = triple.clone();
                t[slot] = candidate;
                if let Ok(Some(r)) = ctx.check(law, &t) {
                    triple = t;
                    reason = r;
                    continue 'outer;
                }
            }
        }
        return (triple, reason);
    }
}
