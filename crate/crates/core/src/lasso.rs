//! Lassos: knots in the solid torus obtained by consecutively twisting
//! together `m + 1` nested copies of the core.
//!
//! A lasso is recorded by its twist counts `L(r_1, ..., r_m)`. Its bracket is
//! evaluated with a recursion on the innermost twist region; closed forms for
//! the families `L(r)` and `L(1, r)` are provided alongside as independent
//! routes to the same values.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{framing_factor, LaurentPolynomial, Variable};
use crate::skein::SkeinElement;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Lasso {
    twists: Vec<i64>,
}

/// One zero-elimination step applied by [`Lasso::normalize_traced`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rewrite {
    /// `L(0, r_2, r_3, ...) -> L(r_3, ...)`
    Leading,
    /// `L(..., a, 0, b, ...) -> L(..., a + b, ...)`; zero-based index of the zero.
    Interior(usize),
    /// `L(..., r_{m-1}, 0) -> L(..., r_{m-2})`
    Trailing,
}

impl Lasso {
    pub fn new(twists: Vec<i64>) -> Self {
        Lasso { twists }
    }

    /// `L(∅)`, a single copy of the core.
    pub fn core() -> Self {
        Lasso::default()
    }

    pub fn simple(r: i64) -> Self {
        Lasso::new(vec![r])
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn len(&self) -> usize {
        self.twists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.twists.is_empty()
    }

    pub fn is_normalized(&self) -> bool {
        !self.twists.contains(&0) || self.twists == [0]
    }

    /// Homological degree: how many times the lasso winds around the solid
    /// torus. Each strand after the first flips orientation when its twist
    /// count is even, unless the previous strand already flipped.
    pub fn degree(&self) -> Result<u32> {
        let mut previous = 1i64;
        let mut total = 1i64;
        for (position, &r) in self.twists.iter().enumerate() {
            if r == 0 {
                return Err(Error::ZeroTwist { position });
            }
            let current = if previous == 1 && r % 2 == 0 { -1 } else { 1 };
            total += current;
            previous = current;
        }
        Ok(total as u32)
    }

    pub fn writhe(&self) -> i64 {
        -self.twists.iter().sum::<i64>()
    }

    pub fn reversed(&self) -> Lasso {
        Lasso::new(self.twists.iter().rev().copied().collect())
    }

    /// Eliminates zero twists. `L(0)` is kept: it is the unknot bounding a
    /// disk, not the core.
    pub fn normalize(&self) -> Lasso {
        self.normalize_traced().0
    }

    pub fn normalize_traced(&self) -> (Lasso, Vec<Rewrite>) {
        let mut twists = self.twists.clone();
        let mut trace = Vec::new();
        loop {
            let m = twists.len();
            if m >= 2 && twists[0] == 0 {
                twists.drain(..2);
                trace.push(Rewrite::Leading);
            } else if let Some(i) = (1..m.saturating_sub(1)).find(|&i| twists[i] == 0) {
                let merged = twists[i - 1] + twists[i + 1];
                twists.splice(i - 1..=i + 1, [merged]);
                trace.push(Rewrite::Interior(i));
            } else if m >= 2 && twists[m - 1] == 0 {
                twists.truncate(m - 2);
                trace.push(Rewrite::Trailing);
            } else {
                return (Lasso::new(twists), trace);
            }
        }
    }

    /// Skein module bracket via the innermost-crossing recursion. Zero
    /// twists are accepted and resolved by the recursion itself.
    pub fn bracket(&self) -> SkeinElement {
        BracketCache::default().bracket(&self.twists)
    }

    /// `T(wr) ⟨L⟩` in the Jones variable.
    pub fn jones_st(&self) -> Result<SkeinElement> {
        self.jones_st_with(&mut BracketCache::default())
    }

    pub fn jones_st_with(&self, cache: &mut BracketCache) -> Result<SkeinElement> {
        cache
            .bracket(&self.twists)
            .scale(&framing_factor(self.writhe()))?
            .to_jones_variable()
    }
}

/// Memo table for the bracket recursion. Sharing one cache across many
/// lassos reuses common suffixes.
#[derive(Debug, Default)]
pub struct BracketCache {
    memo: HashMap<Vec<i64>, SkeinElement>,
}

impl BracketCache {
    pub fn bracket(&mut self, twists: &[i64]) -> SkeinElement {
        if let Some(hit) = self.memo.get(twists) {
            return hit.clone();
        }
        let var = Variable::A;
        let value = match twists {
            [] => SkeinElement::basis(var, 1),
            [0] => SkeinElement::basis(var, 0),
            [0, r2, rest @ ..] => {
                let inner = self.bracket(rest);
                inner.scale(&framing_factor(*r2)).expect("bracket coefficients are in A")
            }
            [r1, rest @ ..] => {
                // Smooth the innermost crossing: one smoothing removes a
                // twist, the other splits off a core circle and untwists.
                let (step, a_exp) = if *r1 > 0 { (-1, 1) } else { (1, -1) };
                let mut reduced = Vec::with_capacity(twists.len());
                reduced.push(r1 + step);
                reduced.extend_from_slice(rest);
                let kept = self.bracket(&reduced).scale(&LaurentPolynomial::monomial(var, a_exp, 1));
                let split = SkeinElement::basis(var, 1)
                    .mul(&self.bracket(rest))
                    .and_then(|x| x.scale(&framing_factor(r1 + step)))
                    .and_then(|x| x.scale(&LaurentPolynomial::monomial(var, -a_exp, 1)));
                kept.and_then(|k| k.checked_add(&split?)).expect("bracket coefficients are in A")
            }
        };
        self.memo.insert(twists.to_vec(), value.clone());
        value
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }
}

/// Closed form of `⟨L(r)⟩`:
/// `A^r z^0 + T(r) Σ_{i=1..r} (-1)^i A^(4i-2) z^2` for `r > 0`, and the
/// `A -> A^-1` mirror for `r < 0`.
pub fn closed_form_simple(r: i64) -> Result<SkeinElement> {
    if r == 0 {
        return Err(Error::ZeroArgument);
    }
    if r < 0 {
        return Ok(closed_form_simple(-r)?.mirror());
    }
    let var = Variable::A;
    let sum = LaurentPolynomial::from_terms(
        var,
        (1..=r).map(|i| (4 * i - 2, if i % 2 == 0 { 1 } else { -1 })),
    );
    SkeinElement::from_terms(
        var,
        [
            (0, LaurentPolynomial::monomial(var, r, 1)),
            (2, &framing_factor(r) * &sum),
        ],
    )
}

/// `(-t)^(-r)` in the Jones variable.
fn minus_t_power(r: i64) -> LaurentPolynomial {
    LaurentPolynomial::monomial(Variable::U, -2 * r, if r % 2 == 0 { 1 } else { -1 })
}

/// `(1 - (-t)^(-r)) / (t + 1)`, always an exact quotient.
fn geometric_quotient(r: i64) -> LaurentPolynomial {
    let one = LaurentPolynomial::one(Variable::U);
    let t_plus_one = LaurentPolynomial::from_terms(Variable::U, [(2, 1), (0, 1)]);
    (&one - &minus_t_power(r))
        .exact_div(&t_plus_one)
        .expect("1 - (-t)^n is divisible by t + 1")
}

/// `J_ST(L(r)) = (-t)^(-r) z^0 - t^(1/2) (1 - (-t)^(-r)) / (t + 1) z^2` for
/// `r > 0`; negative `r` uses the `t -> t^-1` mirror.
pub fn eq1_simple(r: i64) -> Result<SkeinElement> {
    if r == 0 {
        return Err(Error::ZeroArgument);
    }
    if r < 0 {
        return Ok(eq1_simple(-r)?.mirror());
    }
    let minus_sqrt_t = LaurentPolynomial::monomial(Variable::U, 1, -1);
    SkeinElement::from_terms(
        Variable::U,
        [(0, minus_t_power(r)), (2, &minus_sqrt_t * &geometric_quotient(r))],
    )
}

/// `J_ST(L(1, r)) = (-t^-1 + (-t)^(-r)(t^-1 + 1)) z^1 + (1 - (-t)^(-r)) / (t + 1) z^3`.
///
/// The expression is evaluated literally for either sign of `r`; the
/// recursion agrees with it on negative `r` as well.
pub fn formula_l1r(r: i64) -> Result<SkeinElement> {
    if r == 0 {
        return Err(Error::ZeroArgument);
    }
    let var = Variable::U;
    let inv_t_plus_one = LaurentPolynomial::from_terms(var, [(-2, 1), (0, 1)]);
    let z1 = &LaurentPolynomial::monomial(var, -2, -1) + &(&minus_t_power(r) * &inv_t_plus_one);
    SkeinElement::from_terms(var, [(1, z1), (3, geometric_quotient(r))])
}

impl fmt::Display for Lasso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L(")?;
        for (i, r) in self.twists.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Lasso {
    type Err = Error;

    /// Accepts `L(r1, r2, ...)`, `L()` and `L(∅)`. Zeros are kept as given.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let offset = s.len() - s.trim_start().len();
        let body = trimmed
            .strip_prefix('L')
            .map(str::trim_start)
            .and_then(|b| b.strip_prefix('('))
            .ok_or_else(|| Error::parse(s, offset, "expected 'L('"))?;
        let body_start = s.len() - body.len();
        let inner = body
            .strip_suffix(')')
            .ok_or_else(|| Error::parse(s, s.len(), "expected ')'"))?;
        if inner.trim().is_empty() || inner.trim() == "∅" {
            return Ok(Lasso::core());
        }
        let mut twists = Vec::new();
        let mut position = body_start;
        for piece in inner.split(',') {
            let token = piece.trim().replace('−', "-");
            let value: i64 = token
                .strip_prefix('+')
                .unwrap_or(&token)
                .parse()
                .map_err(|_| Error::parse(s, position, format!("bad twist count {:?}", piece.trim())))?;
            twists.push(value);
            position += piece.len() + 1;
        }
        Ok(Lasso::new(twists))
    }
}
