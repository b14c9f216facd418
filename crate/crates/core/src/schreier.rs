//! Schreier's conjugacy normal form for B3.
//!
//! Every 3-braid is conjugate to exactly one of
//!
//! 1. `C^k σ1^p1 σ2^-q1 ... σ1^ps σ2^-qs` with all `p_i, q_i ≥ 1` (generic),
//! 2. `C^k σ1^p`,
//! 3. `C^k σ1σ2`,
//! 4. `C^k σ1σ2σ1`,
//! 5. `C^k σ1σ2σ1σ2`,
//!
//! where `C = (σ1σ2)^3`. The reduction works in the presentation
//! `B3 = <x, y | x^2 = y^3>` with `x = σ1σ2σ1`, `y = σ1σ2` and
//! `x^2 = y^3 = C` central. Modulo the centre this is `Z/2 * Z/3`, so an
//! element is `C^n` times an alternating product of `x` and `y^(1|2)`,
//! unique up to cyclic rotation once cyclically reduced. The generators map as
//!
//! ```text
//! σ1 = C⁻¹·y²x    σ1⁻¹ = C⁻¹·xy    σ2 = C⁻¹·xy²    σ2⁻¹ = C⁻¹·yx
//! ```
//!
//! so a generic braid reads off as a cyclic sequence of `y²x` blocks (σ1)
//! and `yx` blocks (σ2⁻¹).

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawForm", into = "RawForm")]
pub enum SchreierForm {
    /// `C^k σ1^p1 σ2^-q1 ... σ1^ps σ2^-qs`, syllables in least cyclic rotation.
    Generic { k: i64, syllables: Vec<(u64, u64)> },
    /// `C^k σ1^p`; `p = 0` is the pure central power.
    Band { k: i64, p: i64 },
    /// `C^k σ1σ2`.
    TorusOne { k: i64 },
    /// `C^k σ1σ2σ1`.
    HalfTwist { k: i64 },
    /// `C^k σ1σ2σ1σ2`.
    TorusTwo { k: i64 },
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "lowercase")]
enum RawForm {
    Generic {
        k: i64,
        syllables: Vec<(u64, u64)>,
    },
    Band {
        k: i64,
        p: i64,
    },
    #[serde(rename = "torus1")]
    TorusOne {
        k: i64,
    },
    HalfTwist {
        k: i64,
    },
    #[serde(rename = "torus2")]
    TorusTwo {
        k: i64,
    },
}

impl From<SchreierForm> for RawForm {
    fn from(f: SchreierForm) -> Self {
        match f {
            SchreierForm::Generic { k, syllables } => RawForm::Generic { k, syllables },
            SchreierForm::Band { k, p } => RawForm::Band { k, p },
            SchreierForm::TorusOne { k } => RawForm::TorusOne { k },
            SchreierForm::HalfTwist { k } => RawForm::HalfTwist { k },
            SchreierForm::TorusTwo { k } => RawForm::TorusTwo { k },
        }
    }
}

impl TryFrom<RawForm> for SchreierForm {
    type Error = Error;
    fn try_from(raw: RawForm) -> Result<Self> {
        Ok(match raw {
            RawForm::Generic { k, syllables } => SchreierForm::generic(k, syllables)?,
            RawForm::Band { k, p } => SchreierForm::Band { k, p },
            RawForm::TorusOne { k } => SchreierForm::TorusOne { k },
            RawForm::HalfTwist { k } => SchreierForm::HalfTwist { k },
            RawForm::TorusTwo { k } => SchreierForm::TorusTwo { k },
        })
    }
}

/// Index of the lexicographically least rotation of `items`.
fn least_rotation<T: Ord>(items: &[T]) -> usize {
    let n = items.len();
    (0..n)
        .min_by(|&a, &b| {
            (0..n)
                .map(|i| items[(a + i) % n].cmp(&items[(b + i) % n]))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .unwrap_or(0)
}

impl SchreierForm {
    /// A generic form with its syllables rotated into canonical position.
    pub fn generic(k: i64, mut syllables: Vec<(u64, u64)>) -> Result<Self> {
        if syllables.is_empty() || syllables.iter().any(|&(p, q)| p == 0 || q == 0) {
            return Err(Error::NonPositiveSyllable);
        }
        let r = least_rotation(&syllables);
        syllables.rotate_left(r);
        Ok(SchreierForm::Generic { k, syllables })
    }

    pub fn k(&self) -> i64 {
        match *self {
            SchreierForm::Generic { k, .. }
            | SchreierForm::Band { k, .. }
            | SchreierForm::TorusOne { k }
            | SchreierForm::HalfTwist { k }
            | SchreierForm::TorusTwo { k } => k,
        }
    }

    /// Short class tag used in serialised output.
    pub fn class_name(&self) -> &'static str {
        match self {
            SchreierForm::Generic { .. } => "generic",
            SchreierForm::Band { .. } => "band",
            SchreierForm::TorusOne { .. } => "torus1",
            SchreierForm::HalfTwist { .. } => "halftwist",
            SchreierForm::TorusTwo { .. } => "torus2",
        }
    }

    /// The part of the template after `C^k`.
    pub fn tail_word(&self) -> BraidWord {
        let letters = |ints: &[i64]| BraidWord::from_ints(ints).expect("valid letters");
        match self {
            SchreierForm::Generic { syllables, .. } => syllables
                .iter()
                .map(|&(p, q)| {
                    BraidWord::syllable(1, p as i64).concat(&BraidWord::syllable(2, -(q as i64)))
                })
                .fold(BraidWord::empty(), |acc, s| acc.concat(&s)),
            SchreierForm::Band { p, .. } => BraidWord::syllable(1, *p),
            SchreierForm::TorusOne { .. } => letters(&[1, 2]),
            SchreierForm::HalfTwist { .. } => letters(&[1, 2, 1]),
            SchreierForm::TorusTwo { .. } => letters(&[1, 2, 1, 2]),
        }
    }

    /// The literal template word `C^k · tail`.
    pub fn to_word(&self) -> BraidWord {
        BraidWord::full_twist_power(self.k()).concat(&self.tail_word())
    }

    pub fn exponent_sum(&self) -> i64 {
        6 * self.k() + self.tail_word().exponent_sum()
    }

    /// Syllable count `s`, bold `p = Σp_i` and bold `q = Σq_i` of a generic form.
    pub fn syllable_stats(&self) -> Option<(usize, u64, u64)> {
        match self {
            SchreierForm::Generic { syllables, .. } => Some((
                syllables.len(),
                syllables.iter().map(|s| s.0).sum(),
                syllables.iter().map(|s| s.1).sum(),
            )),
            _ => None,
        }
    }

    pub fn closure_components(&self) -> u8 {
        self.tail_word().closure_components()
    }
}

impl fmt::Display for SchreierForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C^{} {}", self.k(), self.tail_word())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Piece {
    X,
    /// `y^1` or `y^2`.
    Y(u8),
}

/// `C^central · pieces`, with `pieces` alternating between `x` and `y^e`.
#[derive(Debug, Default)]
struct Amalgam {
    central: i64,
    pieces: VecDeque<Piece>,
}

impl Amalgam {
    fn from_word(word: &BraidWord) -> Self {
        let mut a = Amalgam::default();
        for &l in word.letters() {
            let image = match l {
                Letter::S1 => [Piece::Y(2), Piece::X],
                Letter::S1Inv => [Piece::X, Piece::Y(1)],
                Letter::S2 => [Piece::X, Piece::Y(2)],
                Letter::S2Inv => [Piece::Y(1), Piece::X],
            };
            a.central -= 1;
            for p in image {
                a.push(p);
            }
        }
        a
    }

    fn push(&mut self, piece: Piece) {
        match (self.pieces.back().copied(), piece) {
            (Some(Piece::X), Piece::X) => {
                self.pieces.pop_back();
                self.central += 1;
            }
            (Some(Piece::Y(a)), Piece::Y(b)) => {
                self.pieces.pop_back();
                let e = self.carry(a + b);
                if e > 0 {
                    self.pieces.push_back(Piece::Y(e));
                }
            }
            _ => self.pieces.push_back(piece),
        }
    }

    /// Reduces a `y` exponent mod 3, moving `y^3 = C` into the centre.
    fn carry(&mut self, e: u8) -> u8 {
        if e >= 3 {
            self.central += 1;
            e - 3
        } else {
            e
        }
    }

    /// Conjugates until the first and last pieces differ in type.
    fn cyclically_reduce(&mut self) {
        while self.pieces.len() >= 2 {
            let front = self.pieces[0];
            let back = self.pieces[self.pieces.len() - 1];
            match (front, back) {
                (Piece::X, Piece::X) => {
                    self.pieces.pop_front();
                    self.pieces.pop_back();
                    self.central += 1;
                }
                (Piece::Y(a), Piece::Y(b)) => {
                    self.pieces.pop_front();
                    self.pieces.pop_back();
                    let e = self.carry(a + b);
                    if e > 0 {
                        self.pieces.push_back(Piece::Y(e));
                    }
                }
                _ => break,
            }
        }
    }
}

/// Reduces a word to the normal form of its conjugacy class.
pub fn normalize(word: &BraidWord) -> SchreierForm {
    let mut a = Amalgam::from_word(word);
    a.cyclically_reduce();
    let form = match a.pieces.len() {
        0 => SchreierForm::Band { k: a.central, p: 0 },
        1 => match a.pieces[0] {
            Piece::X => SchreierForm::HalfTwist { k: a.central },
            Piece::Y(1) => SchreierForm::TorusOne { k: a.central },
            Piece::Y(_) => SchreierForm::TorusTwo { k: a.central },
        },
        _ => {
            if a.pieces[0] == Piece::X {
                a.pieces.rotate_left(1);
            }
            // pieces now read y^e1 x y^e2 x ... ; each block is σ1 (e = 2) or σ2⁻¹ (e = 1)
            let exps: Vec<u8> = a
                .pieces
                .iter()
                .filter_map(|p| match p {
                    Piece::Y(e) => Some(*e),
                    Piece::X => None,
                })
                .collect();
            let blocks = exps.len() as i64;
            let k = a.central + blocks;
            if exps.iter().all(|&e| e == 2) {
                SchreierForm::Band { k, p: blocks }
            } else if exps.iter().all(|&e| e == 1) {
                SchreierForm::Band { k, p: -blocks }
            } else {
                SchreierForm::generic(k, syllables_from_blocks(&exps)).expect("runs are nonempty")
            }
        }
    };
    debug_assert_eq!(
        form.exponent_sum(),
        word.exponent_sum(),
        "central power disagrees with exponent sum for {word}"
    );
    form
}

/// Groups a cyclic sequence of σ1 (2) and σ2⁻¹ (1) blocks, containing both,
/// into `(p_i, q_i)` runs.
fn syllables_from_blocks(exps: &[u8]) -> Vec<(u64, u64)> {
    let n = exps.len();
    // start at a σ1 block preceded (cyclically) by a σ2⁻¹ block
    let start = (0..n)
        .find(|&i| exps[i] == 2 && exps[(i + n - 1) % n] == 1)
        .expect("both block kinds present");
    let mut syllables = Vec::new();
    let mut i = 0;
    while i < n {
        let mut p = 0;
        while i < n && exps[(start + i) % n] == 2 {
            p += 1;
            i += 1;
        }
        let mut q = 0;
        while i < n && exps[(start + i) % n] == 1 {
            q += 1;
            i += 1;
        }
        syllables.push((p, q));
    }
    syllables
}
