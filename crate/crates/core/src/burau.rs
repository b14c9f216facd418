//! Reduced Burau representation of B3 over `Z[t, t^-1]`.
//!
//! The inverse generators carry the fixed matrices
//!
//! ```text
//! σ1⁻¹ ↦ [[-t, 1], [0, 1]]      σ2⁻¹ ↦ [[1, 0], [t, -t]]
//! ```
//!
//! and the positive generators are obtained from them by exact inversion.

use std::fmt;
use std::ops::Mul;
use std::sync::OnceLock;

use crate::braid::{BraidWord, Letter};
use crate::laurent::HalfLaurentPoly;

/// A 2×2 matrix over the Laurent polynomial ring, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BurauMatrix {
    pub a11: HalfLaurentPoly,
    pub a12: HalfLaurentPoly,
    pub a21: HalfLaurentPoly,
    pub a22: HalfLaurentPoly,
}

impl BurauMatrix {
    pub fn new(
        a11: HalfLaurentPoly,
        a12: HalfLaurentPoly,
        a21: HalfLaurentPoly,
        a22: HalfLaurentPoly,
    ) -> Self {
        Self { a11, a12, a21, a22 }
    }

    pub fn identity() -> Self {
        Self::scalar(HalfLaurentPoly::one())
    }

    pub fn scalar(lambda: HalfLaurentPoly) -> Self {
        Self::new(
            lambda.clone(),
            HalfLaurentPoly::zero(),
            HalfLaurentPoly::zero(),
            lambda,
        )
    }

    pub fn trace(&self) -> HalfLaurentPoly {
        &self.a11 + &self.a22
    }

    pub fn determinant(&self) -> HalfLaurentPoly {
        &self.a11 * &self.a22 - &self.a12 * &self.a21
    }

    /// Returns `λ` when the matrix is `λ·I`.
    pub fn as_scalar(&self) -> Option<&HalfLaurentPoly> {
        (self.a12.is_zero() && self.a21.is_zero() && self.a11 == self.a22).then_some(&self.a11)
    }

    /// Inverse over the Laurent ring; `None` when the determinant is not a unit.
    pub fn inverse(&self) -> Option<Self> {
        let inv_det = self.determinant().unit_inverse()?;
        Some(Self::new(
            &self.a22 * &inv_det,
            -(&self.a12 * &inv_det),
            -(&self.a21 * &inv_det),
            &self.a11 * &inv_det,
        ))
    }

    pub fn scale(&self, lambda: &HalfLaurentPoly) -> Self {
        Self::new(
            &self.a11 * lambda,
            &self.a12 * lambda,
            &self.a21 * lambda,
            &self.a22 * lambda,
        )
    }

    pub fn entries_live_in_t(&self) -> bool {
        [&self.a11, &self.a12, &self.a21, &self.a22]
            .iter()
            .all(|e| e.lives_in_t())
    }
}

impl Mul for &BurauMatrix {
    type Output = BurauMatrix;
    fn mul(self, rhs: &BurauMatrix) -> BurauMatrix {
        BurauMatrix::new(
            &self.a11 * &rhs.a11 + &self.a12 * &rhs.a21,
            &self.a11 * &rhs.a12 + &self.a12 * &rhs.a22,
            &self.a21 * &rhs.a11 + &self.a22 * &rhs.a21,
            &self.a21 * &rhs.a12 + &self.a22 * &rhs.a22,
        )
    }
}

impl fmt::Display for BurauMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.a11, self.a12, self.a21, self.a22
        )
    }
}

fn t_poly(coeffs: &[i64], lowest: i64) -> HalfLaurentPoly {
    HalfLaurentPoly::from_t_coeffs(lowest, coeffs)
}

fn sigma1_inverse() -> BurauMatrix {
    BurauMatrix::new(
        t_poly(&[-1], 1),
        t_poly(&[1], 0),
        t_poly(&[], 0),
        t_poly(&[1], 0),
    )
}

fn sigma2_inverse() -> BurauMatrix {
    BurauMatrix::new(
        t_poly(&[1], 0),
        t_poly(&[], 0),
        t_poly(&[1], 1),
        t_poly(&[-1], 1),
    )
}

struct GeneratorImages {
    s1: BurauMatrix,
    s1_inv: BurauMatrix,
    s2: BurauMatrix,
    s2_inv: BurauMatrix,
}

fn images() -> &'static GeneratorImages {
    static IMAGES: OnceLock<GeneratorImages> = OnceLock::new();
    IMAGES.get_or_init(|| {
        let s1_inv = sigma1_inverse();
        let s2_inv = sigma2_inverse();
        GeneratorImages {
            s1: s1_inv.inverse().expect("determinant -t is a unit"),
            s2: s2_inv.inverse().expect("determinant -t is a unit"),
            s1_inv,
            s2_inv,
        }
    })
}

pub fn generator_image(letter: Letter) -> &'static BurauMatrix {
    let g = images();
    match letter {
        Letter::S1 => &g.s1,
        Letter::S1Inv => &g.s1_inv,
        Letter::S2 => &g.s2,
        Letter::S2Inv => &g.s2_inv,
    }
}

/// Image of a word under the representation.
pub fn burau(word: &BraidWord) -> BurauMatrix {
    word.letters()
        .iter()
        .fold(BurauMatrix::identity(), |acc, &l| &acc * generator_image(l))
}

/// `trace ψ(w)`.
pub fn burau_trace(word: &BraidWord) -> HalfLaurentPoly {
    burau(word).trace()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> HalfLaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn empty_word_is_identity() {
        assert_eq!(burau(&BraidWord::empty()), BurauMatrix::identity());
        assert_eq!(
            BurauMatrix::identity().trace(),
            HalfLaurentPoly::constant(2)
        );
    }

    #[test]
    fn inverse_generator_matrices() {
        let m = burau(&w("-1"));
        assert_eq!(m, BurauMatrix::new(p("-t"), p("1"), p("0"), p("1")));
        let m = burau(&w("-2"));
        assert_eq!(m, BurauMatrix::new(p("1"), p("0"), p("t"), p("-t")));
    }

    #[test]
    fn positive_generator_matrices() {
        let s1 = burau(&w("1"));
        assert_eq!(s1, BurauMatrix::new(p("-t^-1"), p("t^-1"), p("0"), p("1")));
        let s2 = burau(&w("2"));
        assert_eq!(s2, BurauMatrix::new(p("1"), p("0"), p("1"), p("-t^-1")));
        assert_eq!(burau(&w("-1")).determinant(), p("-t"));
        assert_eq!(burau(&w("-2")).determinant(), p("-t"));
    }

    #[test]
    fn trace_of_sigma1_sigma2() {
        assert_eq!(burau_trace(&w("1 2")), p("-t^-1"));
    }

    #[test]
    fn braid_relation() {
        assert_eq!(burau(&w("1 2 1")), burau(&w("2 1 2")));
    }

    #[test]
    fn full_twist_is_scalar() {
        let c = burau(&BraidWord::full_twist());
        assert_eq!(c.as_scalar(), Some(&p("t^-3")));
        let m = burau(&w("1 -2 -2 1"));
        for k in -3i64..=3 {
            let lam = p("t^-3").pow(k.unsigned_abs() as u32);
            let lam = if k < 0 {
                lam.unit_inverse().unwrap()
            } else {
                lam
            };
            let word = BraidWord::full_twist_power(k).concat(&w("1 -2 -2 1"));
            assert_eq!(burau(&word), m.scale(&lam));
        }
    }

    #[test]
    fn determinant_is_a_unit() {
        let m = burau(&w("1 2 -1 -1 2 -2 -2 1"));
        assert!(m.determinant().unit_inverse().is_some());
        assert!(m.entries_live_in_t());
        let singular = BurauMatrix::scalar(p("1 + t"));
        assert!(singular.inverse().is_none());
    }
}
