//! Self-check suites over the closed forms.
//!
//! Each suite compares a closed-form prediction against direct computation
//! and records the first counterexample.

use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Letter};
use crate::burau::burau_trace;
use crate::coefficients::{
    alternating_word, coefficient_grid, observe, predict, CoefficientSummary,
};
use crate::error::Result;
use crate::invariants::{
    alexander_product, jones_closure, jones_generic_shift, product_identity_rhs,
};
use crate::schreier::normalize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Options {
    /// Largest syllable exponent in the coefficient grid (syllable count ≤ 3).
    pub grid_max: u64,
    /// Random alternating words for the twist identities.
    pub identity_samples: usize,
    /// Random words for the normal-form suite.
    pub normal_form_samples: usize,
    pub seed: u64,
    /// Negative control: mirror every grid braid before observing.
    pub flip_convention: bool,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            grid_max: 4,
            identity_samples: 200,
            normal_form_samples: 500,
            seed: 0x5eed_b3a1,
            flip_convention: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub first_counterexample: Option<String>,
}

impl SuiteResult {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_owned(),
            cases: 0,
            failures: 0,
            first_counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "ok" } else { "FAILED" };
        write!(f, "{:<20} {:>6} cases  {}", self.name, self.cases, tag)?;
        if let Some(c) = &self.first_counterexample {
            write!(f, "\n  first counterexample: {c}")?;
        }
        Ok(())
    }
}

/// A uniformly random word with up to `max_len` letters.
pub fn random_word(rng: &mut impl Rng, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| match rng.gen_range(0..4) {
            0 => Letter::S1,
            1 => Letter::S1Inv,
            2 => Letter::S2,
            _ => Letter::S2Inv,
        })
        .collect();
    BraidWord::new(letters)
}

/// Random syllables `(p_i, q_i)` of an alternating word with at most `max_len` letters.
pub fn random_alternating(rng: &mut impl Rng, max_len: u64) -> Vec<(u64, u64)> {
    let mut syllables = Vec::new();
    let mut budget = rng.gen_range(2..=max_len.max(2));
    while budget >= 2 {
        let p = rng.gen_range(1..budget);
        let q = rng.gen_range(1..=budget - p);
        syllables.push((p, q));
        budget -= p + q;
        if rng.gen_bool(0.4) {
            break;
        }
    }
    syllables
}

fn grid_suite(opts: &Options) -> SuiteResult {
    let mut r = SuiteResult::new("coefficient grid");
    for syl in coefficient_grid(3, opts.grid_max) {
        let mut word = alternating_word(&syl);
        if opts.flip_convention {
            word = word.mirror();
        }
        let predicted = predict(&syl);
        let observed = observe(&jones_closure(&word));
        let show = |x: &Result<CoefficientSummary>| match x {
            Ok(s) => s.to_string(),
            Err(e) => e.to_string(),
        };
        let ok = matches!((&predicted, &observed), (Ok(a), Ok(b)) if a == b);
        r.record(ok, || {
            format!(
                "{syl:?}: predicted {}; observed {}",
                show(&predicted),
                show(&observed)
            )
        });
    }
    r
}

fn twist_samples(opts: &Options) -> Vec<(BraidWord, i64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    (0..opts.identity_samples)
        .map(|_| {
            let a = alternating_word(&random_alternating(&mut rng, 12));
            (a, rng.gen_range(-4..=4))
        })
        .collect()
}

fn shift_suite(samples: &[(BraidWord, i64)]) -> SuiteResult {
    let mut r = SuiteResult::new("generic shift");
    for (a, k) in samples {
        let lhs = jones_generic_shift(&jones_closure(a), a.exponent_sum(), *k);
        let rhs = jones_closure(&BraidWord::full_twist_power(*k).concat(a));
        r.record(lhs == rhs, || format!("a = {a}, k = {k}: {lhs} vs {rhs}"));
    }
    r
}

fn product_suite(samples: &[(BraidWord, i64)]) -> SuiteResult {
    let mut r = SuiteResult::new("product identity");
    for (a, k) in samples.iter().filter(|(a, _)| a.exponent_sum() % 2 == 0) {
        let lhs = product_identity_rhs(&jones_closure(a), a.exponent_sum(), *k);
        let rhs = alexander_product(&BraidWord::full_twist_power(*k).concat(a));
        let ok = matches!((&lhs, &rhs), (Ok(x), Ok(y)) if x == y);
        r.record(ok, || format!("a = {a}, k = {k}: {lhs:?} vs {rhs:?}"));
    }
    r
}

fn normal_form_suite(opts: &Options) -> SuiteResult {
    let mut r = SuiteResult::new("normal form");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5eed);
    for _ in 0..opts.normal_form_samples {
        let w = random_word(&mut rng, 20);
        let c = random_word(&mut rng, 6);
        let form = normalize(&w);
        let rep = form.to_word();
        let ok = normalize(&rep) == form
            && normalize(&w.conjugate_by(&c)) == form
            && rep.exponent_sum() == w.exponent_sum()
            && burau_trace(&rep) == burau_trace(&w);
        r.record(ok, || format!("w = {w}, conjugator {c}, form {form}"));
    }
    r
}

/// Runs every suite.
pub fn run(opts: &Options) -> Vec<SuiteResult> {
    let samples = twist_samples(opts);
    vec![
        grid_suite(opts),
        shift_suite(&samples),
        product_suite(&samples),
        normal_form_suite(opts),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Options {
        Options {
            grid_max: 2,
            identity_samples: 20,
            normal_form_samples: 20,
            ..Options::default()
        }
    }

    #[test]
    fn small_suites_pass() {
        let results = run(&small());
        assert_eq!(results.len(), 4);
        for r in &results {
            assert!(r.passed(), "{r}");
            assert!(r.cases > 0, "{r}");
        }
    }

    #[test]
    fn flipped_convention_fails_grid() {
        let results = run(&Options {
            flip_convention: true,
            ..small()
        });
        assert!(!results[0].passed());
        assert!(results[0].first_counterexample.is_some());
        assert!(results[1..].iter().all(SuiteResult::passed));
    }

    #[test]
    fn alternating_samples_respect_length() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let syl = random_alternating(&mut rng, 12);
            assert!(!syl.is_empty());
            assert!(syl.iter().map(|x| x.0 + x.1).sum::<u64>() <= 12);
            assert!(syl.iter().all(|&(p, q)| p > 0 && q > 0));
        }
    }
}
