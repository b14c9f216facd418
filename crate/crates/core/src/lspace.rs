//! L-space knot obstructions and the classification of closed 3-braid knots.
//!
//! Three necessary conditions on the symmetric Alexander polynomial `Δ` of an
//! L-space knot of genus `g = deg Δ`:
//!
//! * every nonzero coefficient is `±1` and their signs alternate;
//! * the coefficient of `t^(g-1)` is nonzero;
//! * `(t⁻¹ + 1 + t)·Δ` has coefficients in `{-1, 0, 1}` and vanishes just
//!   inside both extreme degrees.
//!
//! [`classify`] reads the verdict off the normal form: torus knots
//! `C^k σ1σ2` and `C^k σ1σ2σ1σ2`, twisted torus knots `C^k σ1^p σ2^-1` and
//! `C^k σ1 σ2^-q`, and nothing else. A twisted-torus verdict whose
//! polynomial fails one of the conditions is overruled and flagged with
//! [`Discrepancy::TableContradicted`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::invariants::alexander_product;
use crate::laurent::{cyclotomic, HalfLaurentPoly};
use crate::schreier::{normalize, SchreierForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    Ono,
    Hedden,
    Product,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::Ono => "ono",
            Condition::Hedden => "hedden",
            Condition::Product => "product",
        })
    }
}

/// A coefficient that violates a condition. `exponent` is in powers of `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub condition: Condition,
    pub exponent: i64,
    pub coefficient: BigInt,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} at t^{}",
            self.condition, self.coefficient, self.exponent
        )
    }
}

/// Outcome of one condition; it passes iff there are no witnesses.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Check {
    pub witnesses: Vec<Witness>,
}

impl Check {
    pub fn pass(&self) -> bool {
        self.witnesses.is_empty()
    }
}

fn witness(condition: Condition, half: i64, coefficient: &BigInt) -> Witness {
    Witness {
        condition,
        exponent: half.div_euclid(2),
        coefficient: coefficient.clone(),
    }
}

/// Nonzero coefficients are `±1` and alternate in sign.
pub fn ono_condition(delta: &HalfLaurentPoly) -> Check {
    debug_assert!(delta.lives_in_t());
    let mut witnesses = Vec::new();
    let mut previous: Option<bool> = None;
    for (half, c) in delta.terms().rev() {
        if c.abs() != BigInt::one() {
            witnesses.push(witness(Condition::Ono, half, c));
        }
        let positive = c.is_positive();
        if previous == Some(positive) {
            witnesses.push(witness(Condition::Ono, half, c));
        }
        previous = Some(positive);
    }
    witnesses.dedup();
    Check { witnesses }
}

/// The coefficient of `t^(g-1)` is nonzero. Vacuous for `Δ = 1`.
pub fn hedden_condition(delta: &HalfLaurentPoly) -> Check {
    let Ok(g) = delta.max_degree() else {
        return Check::default();
    };
    let c = delta.coeff(g - 1);
    let witnesses = if g > 0 && c.is_zero() {
        vec![witness(Condition::Hedden, 2 * (g - 1), &c)]
    } else {
        vec![]
    };
    Check { witnesses }
}

/// Coefficients of `(t⁻¹ + 1 + t)·Δ` lie in `{-1, 0, 1}`, and those next to
/// the extreme degrees vanish. The second clause is vacuous for `Δ = 1`.
pub fn product_condition(product: &HalfLaurentPoly) -> Check {
    debug_assert!(product.lives_in_t());
    let mut witnesses: Vec<Witness> = product
        .terms()
        .filter(|(_, c)| c.abs() > BigInt::one())
        .map(|(half, c)| witness(Condition::Product, half, c))
        .collect();
    if let (Ok(top), Ok(bottom)) = (product.max_degree(), product.min_degree()) {
        if top > 1 {
            for n in [top - 1, bottom + 1] {
                let c = product.coeff(n);
                if !c.is_zero() && !witnesses.iter().any(|w| w.exponent == n) {
                    witnesses.push(witness(Condition::Product, 2 * n, &c));
                }
            }
        }
    }
    witnesses.sort_by_key(|w| w.exponent);
    witnesses.dedup();
    Check { witnesses }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    /// Top degree of `Δ`.
    pub genus: i64,
    pub ono_pass: bool,
    pub hedden_pass: bool,
    pub product_pass: bool,
    pub failing_positions: Vec<Witness>,
}

impl ObstructionReport {
    fn from_delta(delta: &HalfLaurentPoly) -> Self {
        let product = delta * &cyclotomic();
        let (ono, hedden, prod) = (
            ono_condition(delta),
            hedden_condition(delta),
            product_condition(&product),
        );
        Self {
            genus: delta.max_degree().unwrap_or(0),
            ono_pass: ono.pass(),
            hedden_pass: hedden.pass(),
            product_pass: prod.pass(),
            failing_positions: [ono.witnesses, hedden.witnesses, prod.witnesses].concat(),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.ono_pass && self.hedden_pass && self.product_pass
    }
}

impl fmt::Display for ObstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "pass" } else { "fail" };
        write!(
            f,
            "g={} ono={} hedden={} product={}",
            self.genus,
            mark(self.ono_pass),
            mark(self.hedden_pass),
            mark(self.product_pass)
        )
    }
}

fn delta_of_knot(word: &BraidWord) -> Result<HalfLaurentPoly> {
    let components = word.closure_components();
    if components != 1 {
        return Err(Error::NotAKnot(components));
    }
    alexander_product(word)?.exact_div_cyclotomic()
}

/// Runs all three conditions on the closure, which must be a knot.
pub fn obstruct(word: &BraidWord) -> Result<ObstructionReport> {
    Ok(ObstructionReport::from_delta(&delta_of_knot(word)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    LSpaceKnot,
    NotLSpaceKnot,
    NotAKnot,
    Unknot,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Whether the certified knot or its mirror admits a positive L-space surgery.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Chirality {
    AsGiven,
    Mirror,
}

impl Chirality {
    pub fn flip(self) -> Self {
        match self {
            Chirality::AsGiven => Chirality::Mirror,
            Chirality::Mirror => Chirality::AsGiven,
        }
    }

    fn from_negative(negative: bool) -> Self {
        if negative {
            Chirality::Mirror
        } else {
            Chirality::AsGiven
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    /// The torus knot `T(p, q)`; a negative `q` is the mirror of `T(p, |q|)`.
    TorusKnot {
        p: i64,
        q: i64,
    },
    /// `T(p, q)` with `s` extra full twists on `r` adjacent strands.
    TwistedTorus {
        p: i64,
        q: i64,
        r: i64,
        s: i64,
    },
    ObstructionWitness {
        witnesses: Vec<Witness>,
    },
    TrivialKnot,
    Link {
        components: u8,
    },
    /// Ruled out by the normal form alone; every condition passed.
    ExcludedByClassification,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::TorusKnot { p, q } => write!(f, "T({p},{q})"),
            Certificate::TwistedTorus { p, q, r, s } => write!(f, "K({p},{q};{r},{s})"),
            Certificate::ObstructionWitness { witnesses } => {
                let parts: Vec<String> = witnesses.iter().map(ToString::to_string).collect();
                write!(f, "obstructed [{}]", parts.join("; "))
            }
            Certificate::TrivialKnot => f.write_str("unknot"),
            Certificate::Link { components } => write!(f, "{components}-component link"),
            Certificate::ExcludedByClassification => f.write_str("excluded by normal form"),
        }
    }
}

/// Disagreement between the normal-form verdict and the obstructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Discrepancy {
    /// A twisted-torus identification whose polynomial fails a condition.
    TableContradicted,
    /// Classified not L-space although every condition passes.
    ObstructionsInconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub chirality: Option<Chirality>,
    pub certificate: Certificate,
    pub obstructions: Option<ObstructionReport>,
    pub normal_form: SchreierForm,
    pub discrepancy: Option<Discrepancy>,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.status)?;
        if let Some(c) = self.chirality {
            write!(
                f,
                " ({})",
                if c == Chirality::Mirror {
                    "mirror"
                } else {
                    "as-given"
                }
            )?;
        }
        write!(f, ": {}", self.certificate)?;
        if let Some(d) = self.discrepancy {
            write!(f, " [{d:?}]")?;
        }
        Ok(())
    }
}

/// Torus knot `T(3, n)` from `C^k σ1σ2` or `C^k σ1σ2σ1σ2`.
fn torus_three(n: i64) -> (Status, Option<Chirality>, Certificate) {
    if n.abs() == 1 {
        (Status::Unknot, None, Certificate::TrivialKnot)
    } else {
        (
            Status::LSpaceKnot,
            Some(Chirality::from_negative(n < 0)),
            Certificate::TorusKnot { p: 3, q: n },
        )
    }
}

/// Table entry for a single-syllable knot `C^k σ1^p σ2^-q` with `p = 1` or `q = 1`.
fn single_syllable(k: i64, p: i64, q: i64) -> (Status, Option<Chirality>, Certificate) {
    let lspace = |negative: bool, cert| {
        (
            Status::LSpaceKnot,
            Some(Chirality::from_negative(negative)),
            cert,
        )
    };
    match (k, p, q) {
        (0, 1, 1) => (Status::Unknot, None, Certificate::TrivialKnot),
        // destabilises to σ1^p or σ2^-q in B2
        (0, p, 1) => lspace(false, Certificate::TorusKnot { p: 2, q: p }),
        (0, 1, q) => lspace(true, Certificate::TorusKnot { p: 2, q: -q }),
        // conjugate to (σ2σ1)^(3k-1) σ1^(p+1)
        (k, p, 1) => lspace(
            k < 0,
            Certificate::TwistedTorus {
                p: 3,
                q: 3 * k - 1,
                r: 2,
                s: (p + 1) / 2,
            },
        ),
        // conjugate to (σ1σ2)^(3k+1) σ2^-(q+1)
        (k, _, q) => lspace(
            k < 0,
            Certificate::TwistedTorus {
                p: 3,
                q: 3 * k + 1,
                r: 2,
                s: -(q + 1) / 2,
            },
        ),
    }
}

/// Classifies the closure of `word`.
pub fn classify(word: &BraidWord) -> Verdict {
    classify_form(&normalize(word))
}

/// Classifies the closure of a normal form.
pub fn classify_form(form: &SchreierForm) -> Verdict {
    let components = form.closure_components();
    let verdict = |status, chirality, certificate, obstructions, discrepancy| Verdict {
        status,
        chirality,
        certificate,
        obstructions,
        normal_form: form.clone(),
        discrepancy,
    };
    if components != 1 {
        return verdict(
            Status::NotAKnot,
            None,
            Certificate::Link { components },
            None,
            None,
        );
    }
    let report = obstruct(&form.to_word()).expect("knot closure");
    let k = form.k();
    let (status, chirality, certificate) = match form {
        SchreierForm::TorusOne { .. } => torus_three(3 * k + 1),
        SchreierForm::TorusTwo { .. } => torus_three(3 * k + 2),
        SchreierForm::Generic { syllables, .. }
            if syllables.len() == 1 && (syllables[0].0 == 1 || syllables[0].1 == 1) =>
        {
            let (p, q) = syllables[0];
            single_syllable(k, p as i64, q as i64)
        }
        _ => (
            Status::NotLSpaceKnot,
            None,
            Certificate::ExcludedByClassification,
        ),
    };
    let obstructed = || Certificate::ObstructionWitness {
        witnesses: report.failing_positions.clone(),
    };
    match status {
        Status::LSpaceKnot if !report.all_pass() => verdict(
            Status::NotLSpaceKnot,
            None,
            obstructed(),
            Some(report.clone()),
            Some(Discrepancy::TableContradicted),
        ),
        Status::NotLSpaceKnot if report.all_pass() => verdict(
            status,
            None,
            certificate,
            Some(report.clone()),
            Some(Discrepancy::ObstructionsInconclusive),
        ),
        Status::NotLSpaceKnot => verdict(status, None, obstructed(), Some(report.clone()), None),
        _ => verdict(status, chirality, certificate, Some(report.clone()), None),
    }
}
