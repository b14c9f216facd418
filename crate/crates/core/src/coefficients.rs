//! Extreme degrees and coefficients of Jones polynomials of alternating
//! 3-braid closures.
//!
//! For `a = σ1^p1 σ2^-q1 ... σ1^ps σ2^-qs` with `p = Σp_i > 1` and
//! `q = Σq_i > 1`, the closed forms are
//!
//! ```text
//! M  = (3q - p)/2                 m  = (q - 3p)/2
//! α  = (-1)^p                     α' = (-1)^q
//! β  = (-1)^(p+1) (s - ε_q)       β' = (-1)^(q+1) (s - ε_p)
//! (-1)^p γ  = (s² + 3s)/2 - #{p_i = 1} - #{q_i = 1} - δ(q = 3)
//! (-1)^q γ' = (s² + 3s)/2 - #{p_i = 1} - #{q_i = 1} - δ(p = 3)
//! ```
//!
//! with `ε_n = 1` iff `n = 2`. Coefficients are counted by position from the
//! extreme degrees (β sits at `t^(M-1)` whether or not it vanishes).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::HalfLaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoefficientSummary {
    /// Highest degree `M`, in half-units.
    pub max_half: i64,
    /// Lowest degree `m`, in half-units.
    pub min_half: i64,
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub gamma_prime: i64,
    pub beta_prime: i64,
    pub alpha_prime: i64,
}

impl CoefficientSummary {
    /// Names of the fields on which `self` and `other` differ.
    pub fn mismatches(&self, other: &Self) -> Vec<&'static str> {
        let pairs = [
            ("M", self.max_half, other.max_half),
            ("m", self.min_half, other.min_half),
            ("alpha", self.alpha, other.alpha),
            ("beta", self.beta, other.beta),
            ("gamma", self.gamma, other.gamma),
            ("gamma_prime", self.gamma_prime, other.gamma_prime),
            ("beta_prime", self.beta_prime, other.beta_prime),
            ("alpha_prime", self.alpha_prime, other.alpha_prime),
        ];
        pairs
            .into_iter()
            .filter(|(_, a, b)| a != b)
            .map(|(name, _, _)| name)
            .collect()
    }
}

fn fmt_half(half: i64) -> String {
    if half % 2 == 0 {
        (half / 2).to_string()
    } else {
        format!("{half}/2")
    }
}

impl fmt::Display for CoefficientSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "M={} m={} α={} β={} γ={} γ'={} β'={} α'={}",
            fmt_half(self.max_half),
            fmt_half(self.min_half),
            self.alpha,
            self.beta,
            self.gamma,
            self.gamma_prime,
            self.beta_prime,
            self.alpha_prime
        )
    }
}

/// `ε_n`.
fn epsilon(n: u64) -> i64 {
    match n {
        2 => 1,
        _ => 0,
    }
}

/// `δ(n = 3)`.
fn delta_three(n: u64) -> i64 {
    match n {
        3 => 1,
        _ => 0,
    }
}

fn parity_sign(n: u64) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Closed-form summary for the alternating braid with the given syllables.
pub fn predict(syllables: &[(u64, u64)]) -> Result<CoefficientSummary> {
    if syllables.is_empty() || syllables.iter().any(|&(p, q)| p == 0 || q == 0) {
        return Err(Error::NonPositiveSyllable);
    }
    let s = syllables.len() as i64;
    let p: u64 = syllables.iter().map(|x| x.0).sum();
    let q: u64 = syllables.iter().map(|x| x.1).sum();
    if p <= 1 || q <= 1 {
        return Err(Error::OutsideHypotheses { p, q });
    }
    let ones = syllables.iter().filter(|x| x.0 == 1).count() as i64
        + syllables.iter().filter(|x| x.1 == 1).count() as i64;
    let base = (s * s + 3 * s) / 2 - ones;
    let (pi, qi) = (p as i64, q as i64);
    Ok(CoefficientSummary {
        max_half: 3 * qi - pi,
        min_half: qi - 3 * pi,
        alpha: parity_sign(p),
        beta: -parity_sign(p) * (s - epsilon(q)),
        gamma: parity_sign(p) * (base - delta_three(q)),
        gamma_prime: parity_sign(q) * (base - delta_three(p)),
        beta_prime: -parity_sign(q) * (s - epsilon(p)),
        alpha_prime: parity_sign(q),
    })
}

/// Reads the same summary off a computed Jones polynomial.
pub fn observe(jones: &HalfLaurentPoly) -> Result<CoefficientSummary> {
    let top = jones.max_half()?;
    let bottom = jones.min_half()?;
    // all exponents share a parity, so consecutive positions are 2 half-units apart
    let width = ((top - bottom) / 2 + 1) as usize;
    if width < 3 {
        return Err(Error::WindowTooNarrow(width));
    }
    let at = |half: i64| -> Result<i64> {
        i64::try_from(jones.coeff_half(half)).map_err(|_| Error::WindowTooNarrow(width))
    };
    Ok(CoefficientSummary {
        max_half: top,
        min_half: bottom,
        alpha: at(top)?,
        beta: at(top - 2)?,
        gamma: at(top - 4)?,
        gamma_prime: at(bottom + 4)?,
        beta_prime: at(bottom + 2)?,
        alpha_prime: at(bottom)?,
    })
}

/// `σ1^p1 σ2^-q1 ... σ1^ps σ2^-qs`.
pub fn alternating_word(syllables: &[(u64, u64)]) -> BraidWord {
    syllables.iter().fold(BraidWord::empty(), |acc, &(p, q)| {
        acc.concat(&BraidWord::syllable(1, p as i64))
            .concat(&BraidWord::syllable(2, -(q as i64)))
    })
}

/// Every syllable sequence with `1..=max_s` syllables and entries in
/// `1..=max_entry` satisfying `p > 1` and `q > 1`, in lexicographic order.
pub fn coefficient_grid(max_s: usize, max_entry: u64) -> Vec<Vec<(u64, u64)>> {
    let pairs: Vec<(u64, u64)> = (1..=max_entry)
        .flat_map(|p| (1..=max_entry).map(move |q| (p, q)))
        .collect();
    let mut out = Vec::new();
    let mut level: Vec<Vec<(u64, u64)>> = vec![vec![]];
    for _ in 0..max_s {
        level = level
            .iter()
            .flat_map(|prefix| {
                pairs.iter().map(move |&pq| {
                    let mut v = prefix.clone();
                    v.push(pq);
                    v
                })
            })
            .collect();
        out.extend(
            level
                .iter()
                .filter(|syl| {
                    syl.iter().map(|x| x.0).sum::<u64>() > 1
                        && syl.iter().map(|x| x.1).sum::<u64>() > 1
                })
                .cloned(),
        );
    }
    out
}
