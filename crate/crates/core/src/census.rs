//! Enumeration and classification of closed 3-braid knots by normal form.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::lspace::{classify_form, Status, Verdict};
use crate::schreier::SchreierForm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusBounds {
    pub k_min: i64,
    pub k_max: i64,
    /// Largest syllable count of generic forms.
    pub max_s: usize,
    /// Largest `p + q` of generic forms.
    pub max_sum: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub word: String,
    pub verdict: Verdict,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummary {
    pub total: usize,
    pub lspace: usize,
    pub not_lspace: usize,
    pub unknot: usize,
    pub discrepancies: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub records: Vec<CensusRecord>,
    pub summary: CensusSummary,
}

fn push_sequences(
    prefix: &mut Vec<(u64, u64)>,
    remaining_s: usize,
    budget: u64,
    out: &mut Vec<Vec<(u64, u64)>>,
) {
    if remaining_s == 0 {
        out.push(prefix.clone());
        return;
    }
    // reserve 2 for every syllable still to come
    let spare = budget.saturating_sub(2 * (remaining_s as u64 - 1));
    for p in 1..spare {
        for q in 1..=spare - p {
            prefix.push((p, q));
            push_sequences(prefix, remaining_s - 1, budget - p - q, out);
            prefix.pop();
        }
    }
}

/// Syllable sequences in canonical rotation with `s` syllables and `p + q ≤ max_sum`.
pub fn canonical_syllables(s: usize, max_sum: u64) -> Vec<Vec<(u64, u64)>> {
    let mut all = Vec::new();
    if s > 0 {
        push_sequences(&mut Vec::new(), s, max_sum, &mut all);
    }
    all.retain(|syl| match SchreierForm::generic(0, syl.clone()) {
        Ok(SchreierForm::Generic { syllables, .. }) => &syllables == syl,
        _ => false,
    });
    all
}

/// Knot-closure normal forms within `bounds`, in output order.
pub fn knot_forms(bounds: &CensusBounds) -> Vec<SchreierForm> {
    let generic: Vec<Vec<(u64, u64)>> = (1..=bounds.max_s)
        .flat_map(|s| canonical_syllables(s, bounds.max_sum))
        .collect();
    let mut forms = Vec::new();
    for k in bounds.k_min..=bounds.k_max {
        forms.push(SchreierForm::TorusOne { k });
        forms.push(SchreierForm::TorusTwo { k });
        for syl in &generic {
            forms.push(SchreierForm::Generic {
                k,
                syllables: syl.clone(),
            });
        }
    }
    forms.retain(|f| f.closure_components() == 1);
    forms
}

/// Classifies every knot form within `bounds`. The result is deterministic.
pub fn run(bounds: &CensusBounds) -> Census {
    let records: Vec<CensusRecord> = knot_forms(bounds)
        .par_iter()
        .map(|form| CensusRecord {
            word: form.to_string(),
            verdict: classify_form(form),
        })
        .collect();
    let mut summary = CensusSummary {
        total: records.len(),
        ..CensusSummary::default()
    };
    for r in &records {
        match r.verdict.status {
            Status::LSpaceKnot => summary.lspace += 1,
            Status::NotLSpaceKnot => summary.not_lspace += 1,
            Status::Unknot => summary.unknot += 1,
            Status::NotAKnot => {}
        }
        if r.verdict.discrepancy.is_some() {
            summary.discrepancies += 1;
        }
    }
    Census { records, summary }
}
