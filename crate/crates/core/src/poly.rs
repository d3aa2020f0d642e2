//! Exact Laurent polynomials in one variable with arbitrary-precision integer
//! coefficients.
//!
//! Three variables are in play: `A` (the Kauffman bracket variable), `u`
//! (standing for t^(1/2), the Jones variable) and `t` (the Alexander
//! variable). A polynomial carries its variable tag and arithmetic across
//! tags fails with [`Error::VariableMismatch`].
//!
//! Text form lists terms by descending exponent, e.g. `-t^-4 + t^-3 + t^-1`.
//! Polynomials in `u` print in `t` with half-integer exponents (`t^-23/2`).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variable {
    #[serde(rename = "A")]
    A,
    /// t^(1/2)
    #[serde(rename = "u")]
    U,
    #[serde(rename = "t")]
    T,
}

impl Variable {
    fn letter(self) -> char {
        match self {
            Variable::A => 'A',
            Variable::U | Variable::T => 't',
        }
    }
}

/// A Laurent polynomial. Terms are kept sorted by ascending exponent with no
/// zero coefficients, so equal polynomials compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    var: Variable,
    terms: Vec<(i64, BigInt)>,
}

impl LaurentPolynomial {
    pub fn zero(var: Variable) -> Self {
        LaurentPolynomial { var, terms: Vec::new() }
    }

    pub fn one(var: Variable) -> Self {
        Self::monomial(var, 0, 1)
    }

    pub fn constant(var: Variable, c: impl Into<BigInt>) -> Self {
        Self::monomial(var, 0, c)
    }

    pub fn monomial(var: Variable, exponent: i64, coefficient: impl Into<BigInt>) -> Self {
        let c = coefficient.into();
        if c.is_zero() {
            return Self::zero(var);
        }
        LaurentPolynomial { var, terms: vec![(exponent, c)] }
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs;
    /// repeated exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(var: Variable, terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_default() += c.into();
        }
        Self::from_map(var, acc)
    }

    fn from_map(var: Variable, map: BTreeMap<i64, BigInt>) -> Self {
        LaurentPolynomial {
            var,
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn variable(&self) -> Variable {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms by ascending exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coefficient(&self, exponent: i64) -> BigInt {
        match self.terms.binary_search_by_key(&exponent, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn min_exponent(&self) -> Result<i64> {
        self.terms.first().map(|(e, _)| *e).ok_or(Error::ZeroPolynomial)
    }

    pub fn max_exponent(&self) -> Result<i64> {
        self.terms.last().map(|(e, _)| *e).ok_or(Error::ZeroPolynomial)
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::VariableMismatch { left: self.var, right: other.var })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let signed = |c: &BigInt| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, signed(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(e, c)| (*e, signed(c))));
        LaurentPolynomial { var: self.var, terms: out }
    }

    /// In-place `self += other`, used by hot accumulation loops.
    pub(crate) fn add_assign_unchecked(&mut self, other: &Self) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            self.terms = other.terms.clone();
            return;
        }
        *self = self.merge(other, false);
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.var);
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return self.scaled_shift(*e, c);
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return other.scaled_shift(*e, c);
        }
        let lo = self.terms[0].0 + other.terms[0].0;
        let hi = self.terms.last().unwrap().0 + other.terms.last().unwrap().0;
        let span = (hi - lo + 1) as usize;
        let products = self.terms.len() * other.terms.len();
        if span <= 8 * products + 64 {
            let mut dense = vec![BigInt::zero(); span];
            for (ea, ca) in &self.terms {
                for (eb, cb) in &other.terms {
                    dense[(ea + eb - lo) as usize] += ca * cb;
                }
            }
            let terms = dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i64, c))
                .collect();
            LaurentPolynomial { var: self.var, terms }
        } else {
            let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
            for (ea, ca) in &self.terms {
                for (eb, cb) in &other.terms {
                    *acc.entry(ea + eb).or_default() += ca * cb;
                }
            }
            Self::from_map(self.var, acc)
        }
    }

    fn scaled_shift(&self, shift: i64, factor: &BigInt) -> Self {
        LaurentPolynomial {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (e + shift, c * factor)).collect(),
        }
    }

    /// Multiplies by `±x^shift`.
    pub fn mul_monomial(&self, shift: i64, negate: bool) -> Self {
        LaurentPolynomial {
            var: self.var,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + shift, if negate { -c } else { c.clone() }))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero(self.var);
        }
        self.scaled_shift(0, factor)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.var);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / divisor` in Z[x, x^-1].
    ///
    /// Fails with [`Error::NotDivisible`] carrying the remainder when the
    /// divisor does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        self.check_var(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.var));
        }
        // Strip the lowest powers so both become ordinary polynomials with a
        // nonzero constant term; Laurent divisibility then matches Z[x].
        let p_lo = self.terms[0].0;
        let q_lo = divisor.terms[0].0;
        let q_deg = (divisor.terms.last().unwrap().0 - q_lo) as usize;
        let mut rem = vec![BigInt::zero(); (self.terms.last().unwrap().0 - p_lo) as usize + 1];
        for (e, c) in &self.terms {
            rem[(e - p_lo) as usize] = c.clone();
        }
        let mut q = vec![BigInt::zero(); q_deg + 1];
        for (e, c) in &divisor.terms {
            q[(e - q_lo) as usize] = c.clone();
        }
        let lead = &q[q_deg];
        let mut quotient: Vec<(i64, BigInt)> = Vec::new();
        let remainder_poly = |rem: &[BigInt]| {
            LaurentPolynomial::from_terms(
                self.var,
                rem.iter().enumerate().map(|(i, c)| (p_lo + i as i64, c.clone())),
            )
        };
        let mut top = rem.len() as i64 - 1;
        while top >= q_deg as i64 {
            let t = top as usize;
            if !rem[t].is_zero() {
                let (factor, r) = rem[t].div_rem(lead);
                if !r.is_zero() {
                    return Err(Error::NotDivisible { remainder: Box::new(remainder_poly(&rem)) });
                }
                let shift = t - q_deg;
                for (i, qc) in q.iter().enumerate() {
                    if !qc.is_zero() {
                        rem[shift + i] -= &factor * qc;
                    }
                }
                quotient.push((shift as i64 + p_lo - q_lo, factor));
            }
            top -= 1;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible { remainder: Box::new(remainder_poly(&rem)) });
        }
        quotient.reverse();
        Ok(LaurentPolynomial { var: self.var, terms: quotient })
    }

    /// Realizes `x -> x^d`. With `d = 0` every term collapses onto the
    /// constant, i.e. the result is the value at `x = 1`.
    pub fn substitute_power(&self, d: u32) -> Self {
        Self::from_terms(self.var, self.terms.iter().map(|(e, c)| (e * d as i64, c.clone())))
    }

    /// `x -> x^-1`.
    pub fn mirror(&self) -> Self {
        let mut terms: Vec<_> = self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.reverse();
        LaurentPolynomial { var: self.var, terms }
    }

    /// Converts a bracket-variable polynomial into the Jones variable via
    /// `t^(1/2) = A^-2`, i.e. `A^e -> u^(-e/2)`.
    pub fn to_jones_variable(&self) -> Result<Self> {
        if self.var != Variable::A {
            return Err(Error::VariableMismatch { left: self.var, right: Variable::A });
        }
        if let Some((e, _)) = self.terms.iter().find(|(e, _)| e % 2 != 0) {
            return Err(Error::OddExponent { exponent: *e });
        }
        let mut terms: Vec<_> = self.terms.iter().map(|(e, c)| (-e / 2, c.clone())).collect();
        terms.reverse();
        Ok(LaurentPolynomial { var: Variable::U, terms })
    }

    /// `u^(2e) -> t^e`; fails on odd powers of `u`.
    pub fn u_to_t(&self) -> Result<Self> {
        if self.var != Variable::U {
            return Err(Error::VariableMismatch { left: self.var, right: Variable::U });
        }
        if let Some((e, _)) = self.terms.iter().find(|(e, _)| e % 2 != 0) {
            return Err(Error::OddExponent { exponent: *e });
        }
        Ok(LaurentPolynomial {
            var: Variable::T,
            terms: self.terms.iter().map(|(e, c)| (e / 2, c.clone())).collect(),
        })
    }

    /// `t^e -> u^(2e)`.
    pub fn t_to_u(&self) -> Result<Self> {
        if self.var != Variable::T {
            return Err(Error::VariableMismatch { left: self.var, right: Variable::T });
        }
        Ok(LaurentPolynomial {
            var: Variable::U,
            terms: self.terms.iter().map(|(e, c)| (e * 2, c.clone())).collect(),
        })
    }

    /// Value at `x = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    /// Value at `x = -1`.
    pub fn eval_at_minus_one(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| if e % 2 == 0 { c.clone() } else { -c })
            .sum()
    }

    /// `p(x) = p(x^-1)`.
    pub fn is_symmetric(&self) -> bool {
        *self == self.mirror()
    }

    /// Parses the canonical text form. `var` selects the letter and, for
    /// [`Variable::U`], allows half-integer exponents written `k/2`.
    pub fn parse(text: &str, var: Variable) -> Result<Self> {
        Parser::new(text, var).parse()
    }
}

/// `(-A^-3)^n`.
pub fn framing_factor(n: i64) -> LaurentPolynomial {
    let sign = if n.rem_euclid(2) == 0 { 1 } else { -1 };
    LaurentPolynomial::monomial(Variable::A, -3 * n, sign)
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.var, self)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let letter = self.var.letter();
        // Jones polynomials read in ascending powers, brackets and
        // Alexander polynomials in descending powers.
        let ordered: Box<dyn Iterator<Item = &(i64, BigInt)>> = match self.var {
            Variable::U => Box::new(self.terms.iter()),
            _ => Box::new(self.terms.iter().rev()),
        };
        for (i, (e, c)) in ordered.enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if *e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            match self.var {
                Variable::U if e % 2 != 0 => write!(f, "{letter}^{e}/2")?,
                Variable::U if *e == 2 => write!(f, "{letter}")?,
                Variable::U => write!(f, "{letter}^{}", e / 2)?,
                _ if *e == 1 => write!(f, "{letter}")?,
                _ => write!(f, "{letter}^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPolynomial {
    type Err = Error;

    /// Guesses the variable: `A` if the letter `A` occurs, `u` if any
    /// exponent is fractional, `t` otherwise.
    fn from_str(s: &str) -> Result<Self> {
        let var = if s.contains('A') {
            Variable::A
        } else if s.contains('/') {
            Variable::U
        } else {
            Variable::T
        };
        Self::parse(s, var)
    }
}

struct Parser<'a> {
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
    var: Variable,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str, var: Variable) -> Self {
        Parser { input, chars: input.chars().collect(), pos: 0, var }
    }

    fn err(&self, msg: &str) -> Error {
        Error::parse(self.input, self.pos, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-') | Some('−') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn exponent(&mut self) -> Result<i64> {
        self.skip_ws();
        let braced = self.peek() == Some('{');
        if braced {
            self.pos += 1;
        }
        let negative = self.sign().unwrap_or(false);
        let digits = self.digits().ok_or_else(|| self.err("expected exponent"))?;
        let mut value: i64 = digits.parse().map_err(|_| self.err("exponent out of range"))?;
        if negative {
            value = -value;
        }
        let half = if self.peek() == Some('/') {
            self.pos += 1;
            if self.digits().as_deref() != Some("2") {
                return Err(self.err("only /2 fractions are supported"));
            }
            true
        } else {
            false
        };
        if braced {
            if self.peek() != Some('}') {
                return Err(self.err("expected '}'"));
            }
            self.pos += 1;
        }
        match (self.var, half) {
            (Variable::U, true) => Ok(value),
            (Variable::U, false) => Ok(2 * value),
            (_, true) => Err(self.err("fractional exponent outside the Jones variable")),
            (_, false) => Ok(value),
        }
    }

    fn parse(mut self) -> Result<LaurentPolynomial> {
        let letter = self.var.letter();
        let mut terms: Vec<(i64, BigInt)> = Vec::new();
        self.skip_ws();
        if self.pos == self.chars.len() {
            return Err(self.err("empty polynomial"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            if self.pos == self.chars.len() {
                break;
            }
            let negative = match self.sign() {
                Some(s) => s,
                None if first => false,
                None => return Err(self.err("expected '+' or '-'")),
            };
            first = false;
            self.skip_ws();
            let coeff = self.digits();
            self.skip_ws();
            if self.peek() == Some('*') || self.peek() == Some('·') {
                if coeff.is_none() {
                    return Err(self.err("dangling '*'"));
                }
                self.pos += 1;
                self.skip_ws();
            }
            let exponent = if self.peek() == Some(letter) {
                self.pos += 1;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    self.exponent()?
                } else if self.var == Variable::U {
                    2
                } else {
                    1
                }
            } else if coeff.is_some() {
                0
            } else {
                return Err(self.err("expected a coefficient or the variable"));
            };
            let mut c: BigInt = match coeff {
                Some(d) => d.parse().map_err(|_| self.err("bad coefficient"))?,
                None => BigInt::one(),
            };
            if negative {
                c = -c;
            }
            terms.push((exponent, c));
        }
        Ok(LaurentPolynomial::from_terms(self.var, terms))
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    variable: Variable,
    terms: Vec<(i64, String)>,
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            variable: self.var,
            terms: self.terms.iter().rev().map(|(e, c)| (*e, c.to_string())).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for (e, c) in raw.terms {
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            terms.push((e, c));
        }
        Ok(LaurentPolynomial::from_terms(raw.variable, terms))
    }
}

// Operator forms panic on a variable mismatch; use the `checked_*` methods
// where the tags are not known to agree.

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: Self) -> LaurentPolynomial {
        self.checked_add(rhs).expect("polynomial variable mismatch")
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: Self) -> LaurentPolynomial {
        self.checked_sub(rhs).expect("polynomial variable mismatch")
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: Self) -> LaurentPolynomial {
        self.checked_mul(rhs).expect("polynomial variable mismatch")
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.mul_monomial(0, true)
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}
