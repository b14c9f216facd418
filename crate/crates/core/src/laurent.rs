//! Exact Laurent polynomials in `t` with half-integer exponents.
//!
//! Exponents are stored in half-units: the key `n` stands for `t^(n/2)`,
//! so the square root `q = t^(1/2)` is the monomial with key `1`. This lets
//! the `(-sqrt t)^(-e)` normalisation factor of the trace formula live in the
//! same ring as everything else, including for links with odd exponent sum.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Laurent polynomial over the integers in the variable `q = t^(1/2)`.
///
/// The zero polynomial is the empty term map. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct HalfLaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

/// Dense view of a nonzero polynomial between its extreme exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffWindow {
    /// Least exponent, in half-units.
    pub min_half: i64,
    /// Greatest exponent, in half-units.
    pub max_half: i64,
    /// Coefficients of `t^(min_half/2)`, `t^((min_half+1)/2)`, ... up to `max_half`.
    pub coeffs: Vec<BigInt>,
}

impl CoeffWindow {
    /// Rebuilds the polynomial the window was read from.
    pub fn to_poly(&self) -> HalfLaurentPoly {
        HalfLaurentPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (self.min_half + i as i64, c.clone())),
        )
    }
}

impl HalfLaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial_half(c, 0)
    }

    /// `c * t^(half/2)`.
    pub fn monomial_half(c: impl Into<BigInt>, half: i64) -> Self {
        Self::from_terms(std::iter::once((half, c.into())))
    }

    /// `c * t^n`.
    pub fn monomial(c: impl Into<BigInt>, n: i64) -> Self {
        Self::monomial_half(c, 2 * n)
    }

    /// `t^n`.
    pub fn t_pow(n: i64) -> Self {
        Self::monomial(1, n)
    }

    /// `(-sqrt t)^n = (-1)^n q^n`, defined for every integer `n`.
    pub fn neg_sqrt_t_pow(n: i64) -> Self {
        let sign = if n.is_even() { 1 } else { -1 };
        Self::monomial_half(sign, n)
    }

    /// Builds a polynomial in `t` from integer coefficients of
    /// `t^lowest, t^(lowest+1), ...`.
    pub fn from_t_coeffs(lowest: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (2 * (lowest + i as i64), BigInt::from(c))),
        )
    }

    /// Builds a polynomial from `(half-unit exponent, coefficient)` pairs.
    /// Repeated exponents are summed and zero coefficients dropped.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            accumulate(&mut map, e, c);
        }
        Self { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in ascending exponent order, exponents in half-units.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Coefficient of `t^(half/2)`.
    pub fn coeff_half(&self, half: i64) -> BigInt {
        self.terms.get(&half).cloned().unwrap_or_default()
    }

    /// Coefficient of `t^n`.
    pub fn coeff(&self, n: i64) -> BigInt {
        self.coeff_half(2 * n)
    }

    /// True iff every exponent is an integer power of `t`.
    pub fn lives_in_t(&self) -> bool {
        self.terms.keys().all(|e| e.is_even())
    }

    pub fn min_half(&self) -> Result<i64> {
        self.terms
            .keys()
            .next()
            .copied()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn max_half(&self) -> Result<i64> {
        self.terms
            .keys()
            .next_back()
            .copied()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Greatest exponent as an integer power of `t`.
    pub fn max_degree(&self) -> Result<i64> {
        whole_degree(self.max_half()?)
    }

    /// Least exponent as an integer power of `t`.
    pub fn min_degree(&self) -> Result<i64> {
        whole_degree(self.min_half()?)
    }

    pub fn coeff_window(&self) -> Result<CoeffWindow> {
        let min_half = self.min_half()?;
        let max_half = self.max_half()?;
        let coeffs = (min_half..=max_half).map(|e| self.coeff_half(e)).collect();
        Ok(CoeffWindow {
            min_half,
            max_half,
            coeffs,
        })
    }

    /// True iff `p(t) = p(t^-1)` coefficientwise.
    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| self.terms.get(&-e) == Some(c))
    }

    /// `p(t^-1)`.
    pub fn invert_variable(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplies by `t^(half/2)`.
    pub fn shift_half(&self, half: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + half, c.clone()))
                .collect(),
        }
    }

    /// Multiplies by `t^n`.
    pub fn shift(&self, n: i64) -> Self {
        self.shift_half(2 * n)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Sum of the coefficients, i.e. the value at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// If `self` is a unit `±t^(h/2)`, returns its inverse.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        (c.abs().is_one()).then(|| Self::monomial_half(c.clone(), -e))
    }

    /// Exact division by a divisor whose extreme coefficients are `±1`.
    ///
    /// Fails with [`Error::NotDivisible`] when a nonzero remainder is left.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let d_max = divisor.max_half()?;
        let d_min = divisor.min_half()?;
        let lead = divisor.terms[&d_max].clone();
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        let Ok(p_min) = self.min_half() else {
            return Ok(Self::zero());
        };
        let q_min = p_min - d_min;
        while let Ok(r_max) = rem.max_half() {
            let q_exp = r_max - d_max;
            if q_exp < q_min {
                return Err(Error::NotDivisible);
            }
            let (q_coeff, r) = rem.terms[&r_max].div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            let step = Self::monomial_half(q_coeff, q_exp);
            rem = &rem - &(&step * divisor);
            quotient += step;
        }
        Ok(quotient)
    }

    /// Divides by `t^-1 + 1 + t`.
    pub fn exact_div_cyclotomic(&self) -> Result<Self> {
        if !self.lives_in_t() {
            return Err(Error::HalfIntegerExponent);
        }
        self.div_exact(&cyclotomic())
    }
}

/// `t^-1 + 1 + t`.
pub fn cyclotomic() -> HalfLaurentPoly {
    HalfLaurentPoly::from_t_coeffs(-1, &[1, 1, 1])
}

fn whole_degree(half: i64) -> Result<i64> {
    if half.is_even() {
        Ok(half / 2)
    } else {
        Err(Error::HalfIntegerExponent)
    }
}

fn accumulate(map: &mut BTreeMap<i64, BigInt>, e: i64, c: BigInt) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(e) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl<'a> Add<&'a HalfLaurentPoly> for &'a HalfLaurentPoly {
    type Output = HalfLaurentPoly;
    fn add(self, rhs: &HalfLaurentPoly) -> HalfLaurentPoly {
        let mut out = self.clone();
        out += rhs.clone();
        out
    }
}

impl AddAssign for HalfLaurentPoly {
    fn add_assign(&mut self, rhs: HalfLaurentPoly) {
        for (e, c) in rhs.terms {
            accumulate(&mut self.terms, e, c);
        }
    }
}

impl<'a> Sub<&'a HalfLaurentPoly> for &'a HalfLaurentPoly {
    type Output = HalfLaurentPoly;
    fn sub(self, rhs: &HalfLaurentPoly) -> HalfLaurentPoly {
        let mut out = self.clone();
        out += -rhs;
        out
    }
}

impl<'a> Mul<&'a HalfLaurentPoly> for &'a HalfLaurentPoly {
    type Output = HalfLaurentPoly;
    fn mul(self, rhs: &HalfLaurentPoly) -> HalfLaurentPoly {
        let mut map = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                accumulate(&mut map, ea + eb, ca * cb);
            }
        }
        HalfLaurentPoly { terms: map }
    }
}

impl Neg for &HalfLaurentPoly {
    type Output = HalfLaurentPoly;
    fn neg(self) -> HalfLaurentPoly {
        HalfLaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for HalfLaurentPoly {
    type Output = HalfLaurentPoly;
    fn neg(mut self) -> HalfLaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<HalfLaurentPoly> for HalfLaurentPoly {
            type Output = HalfLaurentPoly;
            fn $method(self, rhs: HalfLaurentPoly) -> HalfLaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $imp<&'a HalfLaurentPoly> for HalfLaurentPoly {
            type Output = HalfLaurentPoly;
            fn $method(self, rhs: &HalfLaurentPoly) -> HalfLaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $imp<HalfLaurentPoly> for &'a HalfLaurentPoly {
            type Output = HalfLaurentPoly;
            fn $method(self, rhs: HalfLaurentPoly) -> HalfLaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl std::iter::Sum for HalfLaurentPoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}

// Text form: ascending exponents, e.g. "-t^-2 + 2t^-1 - 1 + 2t - t^2",
// half powers as "t^(3/2)".

fn fmt_power(f: &mut fmt::Formatter<'_>, half: i64) -> fmt::Result {
    match half {
        0 => Ok(()),
        2 => write!(f, "t"),
        h if h.is_even() => write!(f, "t^{}", h / 2),
        h => write!(f, "t^({h}/2)"),
    }
}

impl fmt::Display for HalfLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if e == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            fmt_power(f, e)?;
        }
        Ok(())
    }
}

impl fmt::Debug for HalfLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HalfLaurentPoly({self})")
    }
}

struct TextParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl TextParser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::PolyParse {
            position: self.pos,
            message: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            std::str::from_utf8(&self.src[start..self.pos])
                .expect("ascii digits")
                .parse()
                .expect("nonempty digit run")
        })
    }

    fn signed_int(&mut self) -> Result<i64> {
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let n = self.digits().ok_or_else(|| self.err("expected exponent"))?;
        let n: i64 = n
            .try_into()
            .map_err(|_| self.err("exponent out of range"))?;
        Ok(if negative { -n } else { n })
    }

    /// Exponent after `^`, returned in half-units.
    fn exponent(&mut self) -> Result<i64> {
        if self.eat(b'(') {
            let num = self.signed_int()?;
            let half = if self.eat(b'/') {
                match self.digits().and_then(|d| i64::try_from(d).ok()) {
                    Some(1) => 2 * num,
                    Some(2) => num,
                    _ => return Err(self.err("exponent denominator must be 1 or 2")),
                }
            } else {
                2 * num
            };
            if !self.eat(b')') {
                return Err(self.err("expected ')'"));
            }
            Ok(half)
        } else {
            Ok(2 * self.signed_int()?)
        }
    }

    fn term(&mut self, negative: bool) -> Result<(i64, BigInt)> {
        let coeff = self.digits();
        self.eat(b'*');
        let half = if self.eat(b't') {
            if self.eat(b'^') {
                self.exponent()?
            } else {
                2
            }
        } else if coeff.is_none() {
            return Err(self.err("expected coefficient or 't'"));
        } else {
            0
        };
        let c = coeff.unwrap_or_else(BigInt::one);
        Ok((half, if negative { -c } else { c }))
    }

    fn parse(mut self) -> Result<HalfLaurentPoly> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                None if !first => break,
                None => return Err(self.err("empty polynomial")),
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(_) if first => false,
                Some(c) => return Err(self.err(format!("unexpected '{}'", c as char))),
            };
            first = false;
            terms.push(self.term(negative)?);
        }
        Ok(HalfLaurentPoly::from_terms(terms))
    }
}

impl FromStr for HalfLaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TextParser {
            src: s.as_bytes(),
            pos: 0,
        }
        .parse()
    }
}

// List form: ascending [exponent-in-half-units, coefficient] pairs. Coefficients
// that fit in i64 are JSON numbers, larger ones decimal strings.

impl Serialize for HalfLaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(untagged)]
        enum Coeff {
            Small(i64),
            Big(String),
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            let c = i64::try_from(c).map_or_else(|_| Coeff::Big(c.to_string()), Coeff::Small);
            seq.serialize_element(&(e, c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for HalfLaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Small(i64),
            Big(String),
        }

        struct PairsVisitor;

        impl<'de> Visitor<'de> for PairsVisitor {
            type Value = HalfLaurentPoly;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a list of [half-exponent, coefficient] pairs")
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Self::Value, A::Error> {
                let mut terms = BTreeMap::new();
                while let Some((e, c)) = seq.next_element::<(i64, Coeff)>()? {
                    let c = match c {
                        Coeff::Small(c) => BigInt::from(c),
                        Coeff::Big(s) => s.parse().map_err(de::Error::custom)?,
                    };
                    if c.is_zero() {
                        return Err(de::Error::custom("zero coefficient in list form"));
                    }
                    if terms.insert(e, c).is_some() {
                        return Err(de::Error::custom(format!("duplicate exponent {e}")));
                    }
                }
                Ok(HalfLaurentPoly { terms })
            }
        }

        deserializer.deserialize_seq(PairsVisitor)
    }
}
