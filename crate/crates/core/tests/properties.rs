use std::collections::HashSet;

use braid3::coefficients::{alternating_word, observe, predict};
use braid3::invariants::{alexander, invariant_report, jones_closure};
use braid3::lspace::{classify, Chirality};
use braid3::{burau, normalize, BraidWord, BurauMatrix, HalfLaurentPoly, Letter, SchreierForm};
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

fn letter() -> impl Strategy<Value = Letter> {
    prop_oneof![
        Just(Letter::S1),
        Just(Letter::S1Inv),
        Just(Letter::S2),
        Just(Letter::S2Inv)
    ]
}

fn word(max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec(letter(), 0..=max_len).prop_map(BraidWord::new)
}

fn poly() -> impl Strategy<Value = HalfLaurentPoly> {
    prop::collection::vec((-8i64..=8, -5i64..=5), 0..6).prop_map(|terms| {
        HalfLaurentPoly::from_terms(terms.into_iter().map(|(h, c)| (h, BigInt::from(c))))
    })
}

fn syllables(max_s: usize) -> impl Strategy<Value = Vec<(u64, u64)>> {
    prop::collection::vec((1u64..=4, 1u64..=4), 1..=max_s)
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn cyclotomic_division_round_trip(a in poly()) {
        let a = HalfLaurentPoly::from_terms(a.terms().map(|(h, c)| (2 * h, c.clone())));
        let product = &a * &braid3::laurent::cyclotomic();
        prop_assert_eq!(product.exact_div_cyclotomic().unwrap(), a);
    }

    #[test]
    fn text_and_json_round_trip(a in poly()) {
        prop_assert_eq!(a.to_string().parse::<HalfLaurentPoly>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<HalfLaurentPoly>(&json).unwrap(), a);
    }

    #[test]
    fn burau_of_inverse(w in word(16)) {
        prop_assert_eq!(&burau(&w) * &burau(&w.inverse()), BurauMatrix::identity());
        prop_assert_eq!(burau(&w.free_reduce()), burau(&w));
    }

    #[test]
    fn word_text_round_trip(w in word(16)) {
        prop_assert_eq!(w.to_string().parse::<BraidWord>().unwrap(), w);
    }

    #[test]
    fn mirror_and_components(w in word(16), c in word(6)) {
        prop_assert_eq!(w.mirror().exponent_sum(), -w.exponent_sum());
        prop_assert_eq!(w.conjugate_by(&c).closure_components(), w.closure_components());
        prop_assert_eq!(w.free_reduce().closure_components(), w.closure_components());
    }

    #[test]
    fn jones_of_mirror_inverts_variable(w in word(12)) {
        prop_assert_eq!(jones_closure(&w.mirror()), jones_closure(&w).invert_variable());
    }

    #[test]
    fn alexander_is_symmetric_and_normalised(w in word(14)) {
        if let Ok(delta) = alexander(&w) {
            prop_assert!(delta.is_symmetric());
            prop_assert_eq!(delta.eval_at_one().abs(), BigInt::from(1));
        }
    }

    #[test]
    fn normal_form_idempotent(w in word(20)) {
        let form = normalize(&w);
        let rep = form.to_word();
        prop_assert_eq!(normalize(&rep), form.clone());
        prop_assert_eq!(rep.exponent_sum(), w.exponent_sum());
        prop_assert_eq!(burau(&rep).trace(), burau(&w).trace());
        prop_assert_eq!(form.closure_components(), w.closure_components());
    }

    #[test]
    fn normal_form_conjugation_invariant(w in word(20), c in word(6)) {
        prop_assert_eq!(normalize(&w.conjugate_by(&c)), normalize(&w));
    }

    #[test]
    fn normal_form_json_round_trip(w in word(16)) {
        let form = normalize(&w);
        let json = serde_json::to_string(&form).unwrap();
        prop_assert_eq!(serde_json::from_str::<SchreierForm>(&json).unwrap(), form);
    }

    #[test]
    fn cyclic_syllable_invariance(syl in syllables(4), k in -3i64..=3, r in 0usize..4) {
        let mut rotated = syl.clone();
        rotated.rotate_left(r % syl.len());
        let a = BraidWord::full_twist_power(k).concat(&alternating_word(&syl));
        let b = BraidWord::full_twist_power(k).concat(&alternating_word(&rotated));
        prop_assert_eq!(normalize(&a), normalize(&b));
        prop_assert_eq!(normalize(&a), SchreierForm::generic(k, syl).unwrap());
    }

    #[test]
    fn predictions_match_when_defined(syl in syllables(3)) {
        if let Ok(predicted) = predict(&syl) {
            prop_assert_eq!(observe(&jones_closure(&alternating_word(&syl))).unwrap(), predicted);
        }
    }

    #[test]
    fn classification_is_conjugation_invariant(w in word(14), c in word(5)) {
        prop_assert_eq!(classify(&w.conjugate_by(&c)), classify(&w));
    }

    #[test]
    fn mirror_coherence(w in word(14)) {
        let v = classify(&w);
        let m = classify(&w.mirror());
        prop_assert_eq!(v.status, m.status);
        prop_assert_eq!(v.chirality.map(Chirality::flip), m.chirality);
    }

    #[test]
    fn reports_agree(w in word(14)) {
        let r = invariant_report(&w);
        prop_assert_eq!(r.alexander.is_some(), w.is_knot());
        prop_assert_eq!(r.jones.lives_in_t(), r.components % 2 == 1);
    }
}

/// Burau images of all group elements of length at most `radius`.
fn conjugator_ball(radius: usize) -> Vec<BurauMatrix> {
    let letters = [Letter::S1, Letter::S1Inv, Letter::S2, Letter::S2Inv];
    let mut seen: HashSet<BurauMatrix> = HashSet::from([BurauMatrix::identity()]);
    let mut frontier = vec![BurauMatrix::identity()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for m in &frontier {
            for l in letters {
                let m2 = m * burau::generator_image(l);
                if seen.insert(m2.clone()) {
                    next.push(m2);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

fn words_up_to(len: usize) -> Vec<BraidWord> {
    let letters = [Letter::S1, Letter::S1Inv, Letter::S2, Letter::S2Inv];
    let mut all = vec![BraidWord::empty()];
    let mut layer = all.clone();
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|w| {
                letters
                    .iter()
                    .map(move |&l| w.concat(&BraidWord::new(vec![l])))
            })
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

#[test]
fn normal_form_is_conjugate_by_burau_search() {
    let ball = conjugator_ball(6);
    for w in words_up_to(4) {
        let target = burau(&normalize(&w).to_word());
        let m = burau(&w);
        let found = ball.iter().any(|c| {
            let c_inv = c.inverse().expect("unit determinant");
            &(c * &m) * &c_inv == target
        });
        assert!(
            found,
            "no conjugator of length ≤ 6 takes {w} to {}",
            normalize(&w)
        );
    }
}

#[test]
fn distinct_forms_have_non_conjugate_images() {
    let ball = conjugator_ball(4);
    let mut forms: Vec<SchreierForm> = words_up_to(3).iter().map(normalize).collect();
    forms.sort_by_key(|f| f.to_string());
    forms.dedup();
    for (i, a) in forms.iter().enumerate() {
        let ma = burau(&a.to_word());
        for b in &forms[i + 1..] {
            let mb = burau(&b.to_word());
            let conjugate = ball.iter().any(|c| {
                let c_inv = c.inverse().expect("unit determinant");
                &(c * &ma) * &c_inv == mb
            });
            assert!(!conjugate, "{a} and {b} are conjugate");
        }
    }
}
