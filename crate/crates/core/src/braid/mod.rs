//! Braid words and the invariants of their closures.
//!
//! Letters are signed, 1-based generator indices: `2` is `σ_2`, `-2` is
//! `σ_2^-1`. Strands are oriented upward, so the exponent sum is the writhe of
//! the closure diagram.

mod state_sum;
mod transfer;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{framing_factor, LaurentPolynomial, Variable};
use crate::skein::SkeinElement;

pub use state_sum::{state_sum_annulus, state_sum_sphere, STATE_SUM_LIMIT};

/// Where the closure lives: the 3-sphere, or the solid torus with the braid
/// axis as its complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    Sphere,
    Annulus,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBraid", into = "RawBraid")]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct RawBraid {
    strands: usize,
    letters: Vec<i32>,
}

impl TryFrom<RawBraid> for BraidWord {
    type Error = Error;

    fn try_from(raw: RawBraid) -> Result<Self> {
        BraidWord::new(raw.strands, raw.letters)
    }
}

impl From<BraidWord> for RawBraid {
    fn from(b: BraidWord) -> Self {
        RawBraid { strands: b.strands, letters: b.letters }
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidBraid("a braid needs at least one strand".into()));
        }
        if strands > 64 {
            return Err(Error::InvalidBraid(format!("{strands} strands is more than supported (64)")));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::InvalidBraid(format!("letter {l} is not a generator of B{strands}")));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord::new(strands, Vec::new()).expect("identity braid")
    }

    /// The unknot as a braid: the empty word on one strand.
    pub fn unknot() -> Self {
        Self::identity(1)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// `perm[p]` is the bottom position of the strand that ends at top
    /// position `p`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        at
    }

    /// Number of components of the closure.
    pub fn component_count(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = perm[p];
            }
        }
        cycles
    }

    pub fn is_knot(&self) -> bool {
        self.component_count() == 1
    }

    pub fn require_knot(&self) -> Result<()> {
        match self.component_count() {
            1 => Ok(()),
            components => Err(Error::NotAKnot { components }),
        }
    }

    /// Same letters on more strands.
    pub fn widen(&self, strands: usize) -> Result<Self> {
        if strands < self.strands {
            return Err(Error::InvalidBraid(format!("cannot narrow B{} to B{strands}", self.strands)));
        }
        Ok(BraidWord { strands, letters: self.letters.clone() })
    }

    /// Letters shifted up by `offset` generators, on `strands` strands.
    pub fn shifted(&self, offset: usize, strands: usize) -> Result<Self> {
        let off = offset as i32;
        BraidWord::new(
            strands,
            self.letters.iter().map(|&l| l + l.signum() * off).collect(),
        )
    }

    /// `self` followed by `other` (read bottom to top); strand counts must agree.
    pub fn then(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::InvalidBraid(format!(
                "cannot compose B{} with B{}",
                self.strands, other.strands
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn mirror(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|l| -l).collect(),
        }
    }

    /// Cyclic rotation by `k` letters; the closure is unchanged.
    pub fn rotated(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Markov stabilization: one more strand and a final `σ_n^±`.
    pub fn stabilized(&self, positive: bool) -> Self {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        BraidWord { strands: self.strands + 1, letters }
    }

    /// Blackboard `k`-cable: every strand becomes `k` parallel strands and
    /// every crossing a `k × k` grid of crossings of the same sign.
    pub fn cable(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidBraid("cable multiplicity must be at least 1".into()));
        }
        let mut letters = Vec::with_capacity(self.letters.len() * k * k);
        for &l in &self.letters {
            let base = (l.unsigned_abs() as usize - 1) * k;
            for b in 0..k {
                for a in 0..k {
                    let g = (base + k + b - a) as i32;
                    letters.push(g * l.signum());
                }
            }
        }
        BraidWord::new(self.strands * k, letters)
    }

    /// `Δ_k^n`, where `Δ_k = (σ_1…σ_{k-1})(σ_1…σ_{k-2})…(σ_1)` is the
    /// half twist on `k` strands.
    pub fn half_twists(k: usize, n: i64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidBraid("half twist needs at least one strand".into()));
        }
        let delta: Vec<i32> = (1..k).rev().flat_map(|top| 1..=top as i32).collect();
        let mut letters = Vec::with_capacity(delta.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            letters.extend_from_slice(&delta);
        }
        let word = BraidWord::new(k, letters)?;
        Ok(if n < 0 { word.inverse() } else { word })
    }

    /// Braid whose closure is the `k`-parallel of the closure with framing
    /// zero: the blackboard cable followed by `-2·wr` half twists on the first
    /// cable group.
    pub fn zero_framed_cable(&self, k: usize) -> Result<Self> {
        let twists = Self::half_twists(k, -2 * self.exponent_sum())?.widen(self.strands * k)?;
        self.cable(k)?.then(&twists)
    }

    /// Braid for the connected sum of the two closures: the last strand of
    /// `self` is joined to the first strand of `other`.
    pub fn connected_sum(&self, other: &BraidWord) -> Result<Self> {
        self.require_knot()?;
        other.require_knot()?;
        let strands = self.strands + other.strands - 1;
        let left = self.widen(strands)?;
        let right = other.shifted(self.strands - 1, strands)?;
        left.then(&right)
    }

    /// Unknot-normalized Kauffman bracket of the closure in the 3-sphere.
    pub fn bracket_sphere(&self) -> LaurentPolynomial {
        transfer::closure_sphere(self)
    }

    /// Kauffman bracket of the closure read in the solid torus.
    pub fn bracket_annulus(&self) -> SkeinElement {
        transfer::closure_annulus(self)
    }

    pub fn bracket_closure(&self, ambient: Ambient) -> Bracket {
        match ambient {
            Ambient::Sphere => Bracket::Sphere(self.bracket_sphere()),
            Ambient::Annulus => Bracket::Annulus(self.bracket_annulus()),
        }
    }

    /// Jones polynomial of the closure, `T(wr)⟨β̂⟩` with `t^(1/2) = A^-2`.
    pub fn jones_closure(&self) -> LaurentPolynomial {
        let framed = &framing_factor(self.exponent_sum()) * &self.bracket_sphere();
        framed.to_jones_variable().expect("closure brackets have even exponents")
    }

    /// `J(C; k)`: Jones polynomial of the 0-framed `k`-parallel. `J(C; 0) = 1`.
    pub fn parallel_jones(&self, k: usize) -> Result<LaurentPolynomial> {
        self.require_knot()?;
        if k == 0 {
            return Ok(LaurentPolynomial::one(Variable::U));
        }
        Ok(self.zero_framed_cable(k)?.jones_closure())
    }

    /// Bracket of the 0-framed `k`-parallel in the 3-sphere. `k = 0` gives 1.
    pub fn parallel_bracket(&self, k: usize) -> Result<LaurentPolynomial> {
        self.require_knot()?;
        if k == 0 {
            return Ok(LaurentPolynomial::one(Variable::A));
        }
        Ok(self.zero_framed_cable(k)?.bracket_sphere())
    }
}

/// A closure bracket in either ambient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bracket {
    Sphere(LaurentPolynomial),
    Annulus(SkeinElement),
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracket::Sphere(p) => p.fmt(f),
            Bracket::Annulus(s) => s.fmt(f),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// `B3: 1 -2 1 -2`. Letters may be separated by spaces or commas.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim_start();
        let lead = s.len() - trimmed.len();
        let rest = trimmed
            .strip_prefix('B')
            .or_else(|| trimmed.strip_prefix('b'))
            .ok_or_else(|| Error::parse(s, lead, "expected 'B<strands>:'"))?;
        let colon = rest
            .find(':')
            .ok_or_else(|| Error::parse(s, lead + 1, "expected ':' after the strand count"))?;
        let strands: usize = rest[..colon]
            .trim()
            .parse()
            .map_err(|_| Error::parse(s, lead + 1, "bad strand count"))?;
        let body_start = lead + 1 + colon + 1;
        let mut letters = Vec::new();
        let body = &s[body_start..];
        let mut offset = 0;
        for token in body.split(|c: char| c.is_whitespace() || c == ',') {
            if !token.is_empty() {
                let normalized = token.replace('−', "-");
                let letter: i32 = normalized
                    .parse()
                    .map_err(|_| Error::parse(s, body_start + offset, format!("bad letter {token:?}")))?;
                letters.push(letter);
            }
            offset += token.len() + 1;
        }
        BraidWord::new(strands, letters).map_err(|e| match e {
            Error::InvalidBraid(msg) => Error::parse(s, body_start, msg),
            other => other,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn a(s: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(s, Variable::A).unwrap()
    }

    fn u(s: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(s, Variable::U).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let w = b("B3: 1 -2 1 -2");
        assert_eq!(w.strands(), 3);
        assert_eq!(w.letters(), &[1, -2, 1, -2]);
        assert_eq!(w.to_string(), "B3: 1 -2 1 -2");
        assert_eq!(b("B1:"), BraidWord::unknot());
        assert_eq!(b("B2: −1,−1"), BraidWord::new(2, vec![-1, -1]).unwrap());
        assert!("B2: 2".parse::<BraidWord>().is_err());
        assert!("B2: 0".parse::<BraidWord>().is_err());
        assert!("3: 1".parse::<BraidWord>().is_err());
        match "B3: 1 x".parse::<BraidWord>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 6),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn json_roundtrip_validates() {
        let w = b("B3: 1 -2");
        let text = serde_json::to_string(&w).unwrap();
        assert_eq!(text, r#"{"strands":3,"letters":[1,-2]}"#);
        assert_eq!(serde_json::from_str::<BraidWord>(&text).unwrap(), w);
        assert!(serde_json::from_str::<BraidWord>(r#"{"strands":2,"letters":[3]}"#).is_err());
    }

    #[test]
    fn components() {
        assert_eq!(b("B2: 1 1").component_count(), 2);
        assert_eq!(b("B2: -1 -1 -1").component_count(), 1);
        assert_eq!(b("B3: 1 -2 1 -2").component_count(), 1);
        assert_eq!(BraidWord::identity(4).component_count(), 4);
    }

    #[test]
    fn cable_shapes() {
        assert_eq!(BraidWord::unknot().cable(3).unwrap(), BraidWord::identity(3));
        assert_eq!(b("B2: 1").cable(2).unwrap(), b("B4: 2 1 3 2"));
        let c = b("B2: -1 -1 -1").cable(2).unwrap();
        assert_eq!(c.len(), 12);
        assert_eq!(c.exponent_sum(), -12);
        // the block exchanges the two groups, keeping their internal order
        assert_eq!(b("B2: 1").cable(3).unwrap().permutation(), vec![3, 4, 5, 0, 1, 2]);
    }

    #[test]
    fn half_twist_words() {
        assert_eq!(BraidWord::half_twists(2, 1).unwrap(), b("B2: 1"));
        assert_eq!(BraidWord::half_twists(3, 1).unwrap(), b("B3: 1 2 1"));
        assert_eq!(BraidWord::half_twists(2, -6).unwrap(), b("B2: -1 -1 -1 -1 -1 -1"));
        assert_eq!(BraidWord::half_twists(1, 5).unwrap(), BraidWord::identity(1));
        assert_eq!(BraidWord::half_twists(4, -1).unwrap(), b("B4: -1 -2 -1 -3 -2 -1"));
    }

    #[test]
    fn zero_framed_cable_writhe() {
        for (w, k) in [("B2: -1 -1 -1", 2), ("B3: 1 -2 1 -2", 3), ("B2: 1 1 1 1 1", 3)] {
            let w = b(w);
            let c = w.zero_framed_cable(k).unwrap();
            assert_eq!(c.exponent_sum(), k as i64 * w.exponent_sum());
        }
    }

    #[test]
    fn small_brackets() {
        assert!(BraidWord::unknot().bracket_sphere().is_one());
        assert_eq!(b("B2: 1").bracket_sphere(), a("-A^3"));
        assert_eq!(b("B2: -1 -1 -1").bracket_sphere(), a("A^7 - A^3 - A^-5"));
        assert_eq!(BraidWord::identity(2).bracket_annulus(), SkeinElement::basis(Variable::A, 2));
        let annular =
            SkeinElement::from_terms(Variable::A, [(0, a("A^7 - A^3 + A^-1")), (2, a("A^-3"))]).unwrap();
        assert_eq!(b("B2: -1 -1 -1").bracket_annulus(), annular);
    }

    #[test]
    fn jones_examples() {
        assert!(BraidWord::unknot().jones_closure().is_one());
        assert_eq!(b("B2: -1 -1 -1").jones_closure(), u("-t^-4 + t^-3 + t^-1"));
        assert_eq!(b("B3: 1 -2 1 -2").jones_closure(), u("t^-2 - t^-1 + 1 - t + t^2"));
    }

    #[test]
    fn parallel_jones_examples() {
        let trefoil = b("B2: -1 -1 -1");
        assert!(trefoil.parallel_jones(0).unwrap().is_one());
        assert_eq!(trefoil.parallel_jones(1).unwrap(), trefoil.jones_closure());
        assert_eq!(BraidWord::unknot().parallel_jones(2).unwrap(), u("-t^1/2 - t^-1/2"));
        assert_eq!(
            trefoil.parallel_jones(2).unwrap(),
            u("-t^-23/2 + t^-21/2 + t^-17/2 - t^-9/2 - t^-5/2 - t^-1/2")
        );
        assert_eq!(b("B2: 1 1").parallel_jones(2), Err(Error::NotAKnot { components: 2 }));
    }

    #[test]
    fn connected_sums() {
        let trefoil = b("B2: -1 -1 -1");
        let eight = b("B3: 1 -2 1 -2");
        let sum = trefoil.connected_sum(&eight).unwrap();
        assert_eq!(sum.strands(), 4);
        assert!(sum.is_knot());
        assert_eq!(sum.jones_closure(), &trefoil.jones_closure() * &eight.jones_closure());
        let with_unknot = trefoil.connected_sum(&BraidWord::unknot()).unwrap();
        assert_eq!(with_unknot.jones_closure(), trefoil.jones_closure());
    }
}
