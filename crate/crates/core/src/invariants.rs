//! Jones and Alexander polynomials of closed 3-braids from the Burau trace.
//!
//! With `e` the exponent sum of `w` and `τ = trace ψ(w)`:
//!
//! ```text
//! J(t)                 = (-√t)^(-e) · (t + t⁻¹ + τ)
//! (t⁻¹ + 1 + t) · Δ(t) = (-1)^e · (t^(-e/2) - t^(e/2)·τ + t^(e/2))      (e even)
//! ```
//!
//! `(-1)^(-e)` is evaluated as `(-1)^e`. The Alexander polynomial comes from
//! the second formula; the generic-shift and product identities below are
//! independent closed forms used to cross-check it.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::burau::burau_trace;
use crate::error::{Error, Result};
use crate::laurent::HalfLaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub jones: HalfLaurentPoly,
    /// `(t⁻¹ + 1 + t)·Δ`, present when the exponent sum is even.
    pub alexander_product: Option<HalfLaurentPoly>,
    /// Present iff the closure is a knot.
    pub alexander: Option<HalfLaurentPoly>,
    pub exponent_sum: i64,
    pub components: u8,
}

fn t_plus_t_inverse() -> HalfLaurentPoly {
    HalfLaurentPoly::from_t_coeffs(-1, &[1, 0, 1])
}

fn sign_pow(e: i64) -> HalfLaurentPoly {
    HalfLaurentPoly::constant(if e.is_even() { 1 } else { -1 })
}

fn require_even(e: i64) -> Result<i64> {
    if e.is_odd() {
        return Err(Error::OddExponentSum(e));
    }
    Ok(e / 2)
}

fn jones_from_trace(trace: &HalfLaurentPoly, e: i64) -> HalfLaurentPoly {
    HalfLaurentPoly::neg_sqrt_t_pow(-e) * (t_plus_t_inverse() + trace)
}

/// Jones polynomial of the closure. Valid for links as well as knots.
pub fn jones_closure(word: &BraidWord) -> HalfLaurentPoly {
    jones_from_trace(&burau_trace(word), word.exponent_sum())
}

fn alexander_product_from_trace(trace: &HalfLaurentPoly, e: i64) -> Result<HalfLaurentPoly> {
    let half = require_even(e)?;
    let body = HalfLaurentPoly::t_pow(-half) - HalfLaurentPoly::t_pow(half) * trace
        + HalfLaurentPoly::t_pow(half);
    Ok(sign_pow(e) * body)
}

/// `(t⁻¹ + 1 + t)·Δ` of the closure. Needs an even exponent sum.
pub fn alexander_product(word: &BraidWord) -> Result<HalfLaurentPoly> {
    alexander_product_from_trace(&burau_trace(word), word.exponent_sum())
}

/// Symmetric Alexander polynomial of a knot closure.
pub fn alexander(word: &BraidWord) -> Result<HalfLaurentPoly> {
    let components = word.closure_components();
    if components != 1 {
        return Err(Error::NotAKnot(components));
    }
    let delta = alexander_product(word)?.exact_div_cyclotomic()?;
    debug_assert!(
        delta.is_symmetric(),
        "Alexander polynomial {delta} not symmetric"
    );
    Ok(delta)
}

/// Jones polynomial of the closure of `C^k a`, given that of `a`.
pub fn jones_generic_shift(j_a: &HalfLaurentPoly, e_a: i64, k: i64) -> HalfLaurentPoly {
    let twist = HalfLaurentPoly::t_pow(-3 * k) - HalfLaurentPoly::t_pow(-6 * k);
    j_a.shift(-6 * k) + HalfLaurentPoly::neg_sqrt_t_pow(-e_a) * t_plus_t_inverse() * twist
}

/// Closed form of `(t⁻¹ + 1 + t)·Δ` for the closure of `C^k a`:
/// `-t^e J_a + t^(e/2-1) + t^(e/2+1) + t^(-3k-e/2) + t^(3k+e/2)`.
pub fn product_identity_rhs(j_a: &HalfLaurentPoly, e_a: i64, k: i64) -> Result<HalfLaurentPoly> {
    let half = require_even(e_a)?;
    Ok([
        -j_a.shift(e_a),
        HalfLaurentPoly::t_pow(half - 1),
        HalfLaurentPoly::t_pow(half + 1),
        HalfLaurentPoly::t_pow(-3 * k - half),
        HalfLaurentPoly::t_pow(3 * k + half),
    ]
    .into_iter()
    .sum())
}

/// Symmetrised Alexander polynomial of the torus knot `T(p, q)`,
/// `(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))` centred at degree zero.
/// Signs of `p` and `q` are ignored (Δ does not see mirror images).
pub fn torus_knot_alexander(p: i64, q: i64) -> Result<HalfLaurentPoly> {
    let (a, b) = (p.abs(), q.abs());
    if a == 0 || b == 0 || a.gcd(&b) != 1 {
        return Err(Error::TorusParameters { p, q });
    }
    let minus_one = |n: i64| HalfLaurentPoly::t_pow(n) - HalfLaurentPoly::one();
    let numerator = minus_one(a * b) * minus_one(1);
    let denominator = minus_one(a) * minus_one(b);
    let delta = numerator.div_exact(&denominator)?;
    Ok(delta.shift(-(a - 1) * (b - 1) / 2))
}

pub fn invariant_report(word: &BraidWord) -> InvariantReport {
    let trace = burau_trace(word);
    let e = word.exponent_sum();
    let components = word.closure_components();
    let alexander_product = alexander_product_from_trace(&trace, e).ok();
    let alexander = match (&alexander_product, components) {
        (Some(product), 1) => Some(
            product
                .exact_div_cyclotomic()
                .expect("knot closure product is divisible by t^-1 + 1 + t"),
        ),
        _ => None,
    };
    InvariantReport {
        jones: jones_from_trace(&trace, e),
        alexander_product,
        alexander,
        exponent_sum: e,
        components,
    }
}
