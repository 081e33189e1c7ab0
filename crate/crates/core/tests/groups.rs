//! Normal forms and orders of the surface and torus-bundle groups.

mod common;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use biorder::bundle::{
    abelianize, bundle_compare, bundle_element, bundle_multiply, bundle_order, commutator_expand,
    commutator_rewrite, figure_eight_preset, BundleElement, MonodromySpec,
};
use biorder::free_order::magnus_sign;
use biorder::lattice::{invariance_violation, IndexOrder, IntMatrix2, Point};
use biorder::laws::{check_law, Law};
use biorder::order::{Group, OrderOracle, Sign};
use biorder::surface::{conjugator, nf_multiply, nf_of_word, surf3p2_order, NF3P2};
use biorder::word::{Gen, Word};
use common::{letter_word, x_word};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;

const A: Gen = Gen::named('a');
const B: Gen = Gen::named('b');

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

/// Splices `r` into `u` between syllables `at` and `at + 1` (clamped).
fn splice(u: &Word, at: usize, r: &Word) -> Word {
    let syl = u.syllables();
    let at = at.min(syl.len());
    let head = Word::reduce(syl[..at].iter().map(|s| (s.gen, s.exp.clone())));
    let tail = Word::reduce(syl[at..].iter().map(|s| (s.gen, s.exp.clone())));
    head.multiply(r).multiply(&tail)
}

fn relators() -> Vec<Word> {
    let r = w("a b a^-1 b^-1 c^-2");
    let mut out = vec![r.clone(), r.invert()];
    // cyclic shifts
    let letters = r.letters();
    for k in 1..letters.len() {
        let rotated: Vec<_> = letters[k..].iter().chain(&letters[..k]).copied().collect();
        out.push(common::word_from_letters(&rotated));
    }
    out
}

/// A word over `{a, b}` with zero exponent sums.
fn commutator_word() -> impl Strategy<Value = Word> {
    letter_word("ab", 6).prop_map(|u| {
        let fix = Word::reduce([(B, -u.exponent_sum(B)), (A, -u.exponent_sum(A))]);
        u.multiply(&fix)
    })
}

fn nf_triple() -> impl Strategy<Value = [NF3P2; 3]> {
    prop::array::uniform3(letter_word("abc", 5)).prop_map(|t| t.map(|u| nf_of_word(&u).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn relator_insertion_is_invisible(u in letter_word("abc", 6), at in 0usize..8, k in 0usize..7) {
        let r = &relators()[k];
        prop_assert_eq!(nf_of_word(&splice(&u, at, r)).unwrap(), nf_of_word(&u).unwrap());
    }

    #[test]
    fn normal_form_is_a_homomorphism(u in letter_word("abc", 6), v in letter_word("abc", 6)) {
        let lhs = nf_multiply(&nf_of_word(&u).unwrap(), &nf_of_word(&v).unwrap());
        prop_assert_eq!(lhs, nf_of_word(&u.multiply(&v)).unwrap());
    }

    #[test]
    fn normal_form_round_trip(u in letter_word("abc", 8)) {
        let n = nf_of_word(&u).unwrap();
        prop_assert_eq!(nf_of_word(&n.to_word()).unwrap(), n.clone());
        prop_assert_eq!(n.projection(), Point { x: u.exponent_sum(A), y: u.exponent_sum(B) });
    }

    #[test]
    fn commutator_rewrite_round_trip(u in commutator_word()) {
        prop_assume!(u.letter_length() <= BigInt::from(16));
        let f = commutator_rewrite(&u).unwrap();
        prop_assert_eq!(commutator_expand(&f).unwrap(), u);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn kernel_order_is_conjugation_invariant(g in letter_word("abc", 5), f in x_word(3, 4)) {
        // f lives in F; g f g⁻¹ is back in F
        let lex = IndexOrder::Lex;
        let f_elem = NF3P2::new(0, 0, f.clone());
        let conj = nf_of_word(&f_elem.to_word().conjugate(&g)).unwrap();
        prop_assert_eq!((conj.m, conj.n), (0, 0));
        prop_assert_eq!(magnus_sign(&conj.f, &lex).unwrap(), magnus_sign(&f, &lex).unwrap());
    }

    #[test]
    fn conjugator_relates_shifted_generators(g in letter_word("abc", 5), i in -3i64..=3, j in -3i64..=3) {
        let m = g.exponent_sum(A).to_i64().unwrap();
        let n = g.exponent_sum(B).to_i64().unwrap();
        let xg = NF3P2::new(0, 0, Word::gen(Gen::x(i, j))).to_word();
        let shifted = NF3P2::new(0, 0, Word::gen(Gen::x(i + m, j + n))).to_word();
        let lhs = nf_of_word(&xg.conjugate(&g)).unwrap();
        let rhs = nf_of_word(&shifted.conjugate(&conjugator(&g, i, j))).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn surface_order_axioms(t in nf_triple()) {
        let o = surf3p2_order();
        for law in [Law::Trichotomy, Law::Transitivity, Law::LeftInv, Law::RightInv, Law::ConjInv] {
            prop_assert_eq!(check_law(&o, law, &t, None).unwrap(), None, "{}", law);
        }
    }
}

fn bundle_el() -> impl Strategy<Value = BundleElement> {
    (
        -3i64..=3,
        0usize..=8,
        prop::collection::vec((0..2usize, prop::bool::ANY), 8),
    )
        .prop_map(|(k, len, letters)| {
            let raw: Vec<(Gen, i8)> = letters[..len]
                .iter()
                .map(|&(g, pos)| ([A, B][g], if pos { 1 } else { -1 }))
                .collect();
            BundleElement::new(k, common::word_from_letters(&raw))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn bundle_order_axioms(t in prop::array::uniform3(bundle_el())) {
        let spec = figure_eight_preset();
        let o = bundle_order(&spec).unwrap();
        let t_gen = BundleElement::new(1, Word::identity());
        let t_inv = BundleElement::new(-1, Word::identity());
        let conj_t = |e: &BundleElement| o.multiply(&o.multiply(&t_gen, e), &t_inv);
        for law in Law::ALL {
            prop_assert_eq!(check_law(&o, law, &t, Some(&conj_t)).unwrap(), None, "{}", law);
        }
    }

    #[test]
    fn bundle_multiplication_is_associative(t in prop::array::uniform3(bundle_el())) {
        let spec = figure_eight_preset();
        let [x, y, z] = &t;
        let l = bundle_multiply(&bundle_multiply(x, y, &spec).unwrap(), z, &spec).unwrap();
        let r = bundle_multiply(x, &bundle_multiply(y, z, &spec).unwrap(), &spec).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn fiber_conjugation_invariance(g in letter_word("ab", 4), u in commutator_word()) {
        let spec = figure_eight_preset();
        let ord = IndexOrder::eigen(spec.matrix()).unwrap();
        let before = magnus_sign(&commutator_rewrite(&u).unwrap(), &ord).unwrap();
        let after = magnus_sign(&commutator_rewrite(&u.conjugate(&g)).unwrap(), &ord).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn monodromy_is_equivariant_on_indices(f in x_word(2, 4)) {
        // φ sends x[i,j] to a conjugate of x[Φ(i,j) + s], where x[s] is the
        // rewrite of φ(a b a⁻¹ b⁻¹)
        for spec in [figure_eight_preset(), parabolic()] {
            let s = commutator_rewrite(&spec.phi().apply(&w("a b a^-1 b^-1")).unwrap()).unwrap();
            prop_assert_eq!(s.syllables().len(), 1);
            let shift = s.syllables()[0].gen.index().unwrap();
            let image = commutator_rewrite(&spec.phi().apply(&commutator_expand(&f).unwrap()).unwrap()).unwrap();
            let expected = index_sums(&f, |(i, j)| {
                let p = spec.matrix().apply_index((i, j));
                (p.x.to_i64().unwrap() + shift.0, p.y.to_i64().unwrap() + shift.1)
            });
            prop_assert_eq!(index_sums(&image, |ij| ij), expected);
        }
    }
}

fn parabolic() -> MonodromySpec {
    MonodromySpec::from_images(["a", "a b", "a", "a^-1 b"]).unwrap()
}

/// Abelianization of an x-word: total exponent per (mapped) index.
fn index_sums(f: &Word, map: impl Fn((i64, i64)) -> (i64, i64)) -> BTreeMap<(i64, i64), BigInt> {
    let mut out: BTreeMap<(i64, i64), BigInt> = BTreeMap::new();
    for s in f.syllables() {
        *out.entry(map(s.gen.index().unwrap())).or_default() += &s.exp;
    }
    out.retain(|_, e| *e != BigInt::from(0));
    out
}

#[test]
fn figure_eight_examples() {
    let spec = figure_eight_preset();
    let el = |s: &str| bundle_element(&w(s), &spec).unwrap();
    assert_eq!(
        bundle_compare(&el("b"), &el("1"), &spec),
        Ok(Ordering::Less)
    );
    assert_eq!(
        bundle_compare(&el("1"), &el("t"), &spec),
        Ok(Ordering::Less)
    );
    let phi_a = BundleElement::new(0, spec.phi().apply(&w("a")).unwrap());
    assert_eq!(
        bundle_compare(&el("t a t^-1"), &phi_a, &spec),
        Ok(Ordering::Equal)
    );
    assert_eq!(abelianize(&w("b a b")), Point::new(1, 2));
}

#[test]
fn period_six_monodromy_has_no_invariant_catalog_order() {
    let period6 = MonodromySpec::from_images(["a b", "a^-1", "b^-1", "b a"]).unwrap();
    let m = period6.matrix();
    assert_eq!(m, &IntMatrix2::new(1, -1, 1, 0));
    for ord in [
        IndexOrder::Lex,
        IndexOrder::SwappedLex,
        IndexOrder::eigen(&IntMatrix2::new(2, 1, 1, 1)).unwrap(),
        IndexOrder::eigen(&IntMatrix2::new(1, 1, 1, 2)).unwrap(),
        IndexOrder::eigen(&IntMatrix2::new(1, 1, 0, 1)).unwrap(),
    ] {
        assert!(invariance_violation(m, &ord, 10).is_some(), "{ord}");
    }
}

#[test]
fn parabolic_monodromy_is_certified() {
    let spec = parabolic();
    let o = bundle_order(&spec).unwrap();
    let e = bundle_element(&w("a b a^-1 b^-1"), &spec).unwrap();
    assert_eq!(o.sign(&e), Ok(Sign::Positive));
}
