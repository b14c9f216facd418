//! Words in the three-strand braid group.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest absolute exponent accepted by the parser for a single token.
pub const MAX_TOKEN_EXPONENT: i64 = 100_000;

/// A generator of B3 or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    S1,
    S1Inv,
    S2,
    S2Inv,
}

impl Letter {
    /// `1 -> σ1`, `-1 -> σ1⁻¹`, `2 -> σ2`, `-2 -> σ2⁻¹`.
    pub fn from_signed(v: i64) -> Option<Self> {
        match v {
            1 => Some(Letter::S1),
            -1 => Some(Letter::S1Inv),
            2 => Some(Letter::S2),
            -2 => Some(Letter::S2Inv),
            _ => None,
        }
    }

    pub fn signed(self) -> i8 {
        match self {
            Letter::S1 => 1,
            Letter::S1Inv => -1,
            Letter::S2 => 2,
            Letter::S2Inv => -2,
        }
    }

    /// Generator index, 1 or 2.
    pub fn index(self) -> u8 {
        self.signed().unsigned_abs()
    }

    pub fn sign(self) -> i64 {
        self.signed().signum() as i64
    }

    pub fn inverse(self) -> Self {
        match self {
            Letter::S1 => Letter::S1Inv,
            Letter::S1Inv => Letter::S1,
            Letter::S2 => Letter::S2Inv,
            Letter::S2Inv => Letter::S2,
        }
    }

    fn with_sign(index: u8, positive: bool) -> Self {
        match (index, positive) {
            (1, true) => Letter::S1,
            (1, false) => Letter::S1Inv,
            (2, true) => Letter::S2,
            (2, false) => Letter::S2Inv,
            _ => unreachable!("generator index is 1 or 2"),
        }
    }
}

/// The permutation of strand positions {1, 2, 3} underlying a braid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Permutation3([u8; 3]);

impl Permutation3 {
    pub const IDENTITY: Self = Permutation3([0, 1, 2]);

    /// Images of strands 1, 2, 3 (one-based).
    pub fn images(&self) -> [u8; 3] {
        self.0.map(|i| i + 1)
    }

    fn swap_positions(&mut self, i: usize) {
        self.0.swap(i, i + 1);
    }

    pub fn cycle_count(&self) -> u8 {
        let mut seen = [false; 3];
        let mut cycles = 0;
        for start in 0..3 {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.0[j] as usize;
            }
        }
        cycles
    }
}

/// A word in σ1^±1, σ2^±1, stored fully expanded.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct BraidWord {
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a word from signed generator indices (`1, -1, 2, -2`).
    pub fn from_ints(ints: &[i64]) -> Result<Self, ParseError> {
        ints.iter()
            .enumerate()
            .map(|(i, &v)| {
                Letter::from_signed(v).ok_or(ParseError {
                    token_index: i,
                    offset: 0,
                    token: v.to_string(),
                    kind: ParseErrorKind::GeneratorOutOfRange,
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }

    /// `σ_index^exponent`.
    pub fn syllable(index: u8, exponent: i64) -> Self {
        assert!(index == 1 || index == 2, "B3 has generators 1 and 2");
        let letter = Letter::with_sign(index, exponent > 0);
        Self::new(vec![letter; exponent.unsigned_abs() as usize])
    }

    /// The full twist `C = (σ1σ2)^3`, generating the centre of B3.
    pub fn full_twist() -> Self {
        Self::new([Letter::S1, Letter::S2].repeat(3))
    }

    /// `C^k`.
    pub fn full_twist_power(k: i64) -> Self {
        Self::full_twist().power(k)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }

    pub fn permutation(&self) -> Permutation3 {
        let mut perm = Permutation3::IDENTITY;
        for l in &self.letters {
            perm.swap_positions(l.index() as usize - 1);
        }
        perm
    }

    /// Number of components of the closure: 1 for a knot, up to 3.
    pub fn closure_components(&self) -> u8 {
        self.permutation().cycle_count()
    }

    pub fn is_knot(&self) -> bool {
        self.closure_components() == 1
    }

    /// Mirror image: every crossing flipped.
    pub fn mirror(&self) -> Self {
        Self::new(self.letters.iter().map(|l| l.inverse()).collect())
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.letters.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Self::new(letters)
    }

    /// `w^n`; negative powers use the inverse word.
    pub fn power(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        Self::new(base.letters.repeat(n.unsigned_abs() as usize))
    }

    /// `c w c⁻¹`.
    pub fn conjugate_by(&self, c: &Self) -> Self {
        c.concat(self).concat(&c.inverse())
    }

    /// Cancels adjacent inverse pairs. Braid relations are not applied.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self::new(out)
    }

    /// Maximal runs of a single letter, as `(index, signed exponent)`.
    pub fn syllables(&self) -> Vec<(u8, i64)> {
        let mut out: Vec<(u8, i64)> = Vec::new();
        for l in &self.letters {
            match out.last_mut() {
                Some((idx, e)) if *idx == l.index() && e.signum() == l.sign() => *e += l.sign(),
                _ => out.push((l.index(), l.sign())),
            }
        }
        out
    }

    /// Space-separated signed integers, e.g. `1 -2 1 -2`.
    pub fn to_letter_string(&self) -> String {
        self.letters
            .iter()
            .map(|l| l.signed().to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Mul for &BraidWord {
    type Output = BraidWord;
    fn mul(self, rhs: &BraidWord) -> BraidWord {
        self.concat(rhs)
    }
}

impl From<BraidWord> for Vec<i64> {
    fn from(w: BraidWord) -> Self {
        w.letters.iter().map(|l| l.signed() as i64).collect()
    }
}

impl TryFrom<Vec<i64>> for BraidWord {
    type Error = ParseError;
    fn try_from(v: Vec<i64>) -> Result<Self, ParseError> {
        Self::from_ints(&v)
    }
}

/// Syllable form, e.g. `s1^3 s2^-1`; the empty word prints as `e`.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self
            .syllables()
            .into_iter()
            .map(|(i, e)| format!("s{i}^{e}"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Malformed,
    GeneratorOutOfRange,
    BadExponent,
    ExponentTooLarge,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParseErrorKind::Malformed => "malformed token",
            ParseErrorKind::GeneratorOutOfRange => "generator index must be 1 or 2",
            ParseErrorKind::BadExponent => "exponent is not an integer",
            ParseErrorKind::ExponentTooLarge => "exponent too large",
        })
    }
}

/// A rejected token, with its position in the input.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} {token:?} (token {token_index}, byte {offset})", token_index = .token_index + 1)]
pub struct ParseError {
    /// Zero-based index of the offending token.
    pub token_index: usize,
    /// Byte offset of the token in the input.
    pub offset: usize,
    pub token: String,
    pub kind: ParseErrorKind,
}

fn parse_exponent(s: &str) -> Result<i64, ParseErrorKind> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseErrorKind::BadExponent);
    }
    let n: i64 = s.parse().map_err(|_| ParseErrorKind::ExponentTooLarge)?;
    if n.abs() > MAX_TOKEN_EXPONENT {
        return Err(ParseErrorKind::ExponentTooLarge);
    }
    Ok(n)
}

fn parse_token(tok: &str) -> Result<BraidWord, ParseErrorKind> {
    if tok == "e" {
        return Ok(BraidWord::empty());
    }
    if let Some(rest) = tok.strip_prefix("C^") {
        return Ok(BraidWord::full_twist_power(parse_exponent(rest)?));
    }
    if let Some(rest) = tok.strip_prefix('s') {
        let (gen, exp) = rest.split_once('^').ok_or(ParseErrorKind::Malformed)?;
        if gen.is_empty() || !gen.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseErrorKind::Malformed);
        }
        let index = match gen {
            "1" => 1,
            "2" => 2,
            _ => return Err(ParseErrorKind::GeneratorOutOfRange),
        };
        return Ok(BraidWord::syllable(index, parse_exponent(exp)?));
    }
    let digits = tok.strip_prefix(['+', '-']).unwrap_or(tok);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseErrorKind::Malformed);
    }
    let v: i64 = tok
        .parse()
        .map_err(|_| ParseErrorKind::GeneratorOutOfRange)?;
    Letter::from_signed(v)
        .map(|l| BraidWord::new(vec![l]))
        .ok_or(ParseErrorKind::GeneratorOutOfRange)
}

/// Parses whitespace-separated tokens: `1`, `-2` (single letters),
/// `s1^3`, `s2^-1` (syllables), `C^k` (powers of the full twist) and `e`
/// (the identity).
impl FromStr for BraidWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut letters = Vec::new();
        let mut token_index = 0;
        let mut rest = s;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[start..];
            let end = tail.find(char::is_whitespace).unwrap_or(tail.len());
            let tok = &tail[..end];
            let offset = s.len() - tail.len();
            let word = parse_token(tok).map_err(|kind| ParseError {
                token_index,
                offset,
                token: tok.to_string(),
                kind,
            })?;
            letters.extend(word.letters);
            token_index += 1;
            rest = &tail[end..];
        }
        Ok(BraidWord::new(letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_letter_list() {
        assert_eq!(
            w("1 1 1 -2 -2 -2"),
            BraidWord::syllable(1, 3).concat(&BraidWord::syllable(2, -3))
        );
        assert_eq!(w("  +1\t-2 \n"), BraidWord::from_ints(&[1, -2]).unwrap());
        assert_eq!(w(""), BraidWord::empty());
    }

    #[test]
    fn parse_syllables_and_twists() {
        let got = w("C^1 s1^3 s2^-1");
        let want = BraidWord::from_ints(&[1, 2, 1, 2, 1, 2, 1, 1, 1, -2]).unwrap();
        assert_eq!(got, want);
        assert_eq!(w("C^-1"), BraidWord::full_twist().inverse());
        assert_eq!(w("C^0 s1^0"), BraidWord::empty());
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = "s3^1".parse::<BraidWord>().unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::GeneratorOutOfRange);
        let e = "1 x y".parse::<BraidWord>().unwrap_err();
        assert_eq!(
            (e.token_index, e.offset, e.kind),
            (1, 2, ParseErrorKind::Malformed)
        );
        assert_eq!(e.token, "x");
        let e = "s1^1.5".parse::<BraidWord>().unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::BadExponent);
        let e = "C^x".parse::<BraidWord>().unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::BadExponent);
        for bad in ["3", "0", "-3", "s1", "s^2", "s12^1"] {
            assert!(bad.parse::<BraidWord>().is_err(), "{bad}");
        }
        let e = "s1^9999999".parse::<BraidWord>().unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ExponentTooLarge);
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(w("s1^3 s2^-3").exponent_sum(), 0);
        assert_eq!(BraidWord::full_twist().exponent_sum(), 6);
        for (k, p, q) in [(2, 5, 1), (-3, 1, 7), (0, 4, 4)] {
            let word = w(&format!("C^{k} s1^{p} s2^-{q}"));
            assert_eq!(word.exponent_sum(), 6 * k + p - q);
        }
    }

    #[test]
    fn components() {
        assert_eq!(BraidWord::empty().closure_components(), 3);
        assert_eq!(w("1 2").closure_components(), 1);
        for p in 1..8 {
            let word = w(&format!("s1^{p} s2^-1"));
            assert_eq!(word.closure_components(), if p % 2 == 1 { 1 } else { 2 });
        }
        assert_eq!(w("1 2 1").closure_components(), 2);
        assert_eq!(BraidWord::full_twist().closure_components(), 3);
    }

    #[test]
    fn mirror_and_free_reduce() {
        assert_eq!(w("1 -2").mirror(), w("-1 2"));
        assert_eq!(w("1 -1 2").free_reduce(), w("2"));
        assert_eq!(w("2 1 -1 -2 1").free_reduce(), w("1"));
        assert_eq!(w("1 2 -1").inverse(), w("1 -2 -1"));
        assert_eq!(w("1 2").power(-2), w("-2 -1 -2 -1"));
    }

    #[test]
    fn display_round_trips() {
        let word = w("C^-1 s1^3 s2^-2 1");
        assert_eq!(word.to_string().parse::<BraidWord>().unwrap(), word);
        assert_eq!(BraidWord::empty().to_string(), "e");
        assert_eq!(w("e"), BraidWord::empty());
        assert_eq!(w("1 1 -2").to_string(), "s1^2 s2^-1");
        assert_eq!(w("1 1 -2").to_letter_string(), "1 1 -2");
    }

    #[test]
    fn serde_as_int_list() {
        let word = w("1 -2 2");
        let js = serde_json::to_string(&word).unwrap();
        assert_eq!(js, "[1,-2,2]");
        assert_eq!(serde_json::from_str::<BraidWord>(&js).unwrap(), word);
        assert!(serde_json::from_str::<BraidWord>("[3]").is_err());
    }
}
