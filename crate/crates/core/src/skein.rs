//! The Kauffman bracket skein module of the solid torus.
//!
//! Elements are written over the normalized basis `z^k`, where `z^k` for
//! `k >= 1` is `k` parallel copies of the core and `z^0` is the empty diagram
//! scaled by `δ = -A^2 - A^-2`, so that a single contractible loop evaluates
//! to `z^0`. Products follow
//!
//! ```text
//! z^0 · z^j = δ z^j        z^i · z^j = z^(i+j)   (i, j >= 1)
//! ```

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::{LaurentPolynomial, Variable};

/// The value of a contractible loop: `-A^2 - A^-2`, or `-t^(1/2) - t^(-1/2)`
/// in the Jones variable.
pub fn delta(var: Variable) -> Result<LaurentPolynomial> {
    match var {
        Variable::A => Ok(LaurentPolynomial::from_terms(var, [(2, -1), (-2, -1)])),
        Variable::U => Ok(LaurentPolynomial::from_terms(var, [(1, -1), (-1, -1)])),
        Variable::T => Err(Error::UnsupportedVariable(var)),
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct SkeinElement {
    var: Variable,
    terms: BTreeMap<u32, LaurentPolynomial>,
}

impl SkeinElement {
    pub fn zero(var: Variable) -> Self {
        SkeinElement { var, terms: BTreeMap::new() }
    }

    /// The basis element `z^k` with coefficient one.
    pub fn basis(var: Variable, k: u32) -> Self {
        Self::term(k, LaurentPolynomial::one(var))
    }

    pub fn term(k: u32, coefficient: LaurentPolynomial) -> Self {
        let var = coefficient.variable();
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(k, coefficient);
        }
        SkeinElement { var, terms }
    }

    pub fn from_terms(var: Variable, terms: impl IntoIterator<Item = (u32, LaurentPolynomial)>) -> Result<Self> {
        let mut out = Self::zero(var);
        for (k, c) in terms {
            out = out.checked_add(&Self::term(k, c))?;
        }
        Ok(out)
    }

    pub fn variable(&self) -> Variable {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &LaurentPolynomial)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coefficient(&self, k: u32) -> LaurentPolynomial {
        self.terms.get(&k).cloned().unwrap_or_else(|| LaurentPolynomial::zero(self.var))
    }

    fn check_var(&self, var: Variable) -> Result<()> {
        if self.var == var {
            Ok(())
        } else {
            Err(Error::VariableMismatch { left: self.var, right: var })
        }
    }

    fn insert_add(&mut self, k: u32, c: &LaurentPolynomial) {
        let slot = self.terms.entry(k).or_insert_with(|| LaurentPolynomial::zero(c.variable()));
        slot.add_assign_unchecked(c);
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        self.check_var(other.var)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_add(*k, c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        SkeinElement {
            var: self.var,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    /// Multiplies every coefficient by a scalar polynomial.
    pub fn scale(&self, factor: &LaurentPolynomial) -> Result<Self> {
        if self.is_zero() {
            return Ok(SkeinElement::zero(factor.variable()));
        }
        self.check_var(factor.variable())?;
        let mut out = Self::zero(self.var);
        for (k, c) in &self.terms {
            let p = c.checked_mul(factor)?;
            if !p.is_zero() {
                out.terms.insert(*k, p);
            }
        }
        Ok(out)
    }

    /// The skein module product, extended bilinearly from the basis rules.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(if self.is_zero() { other.var } else { self.var }));
        }
        self.check_var(other.var)?;
        let d = delta(self.var)?;
        let mut out = Self::zero(self.var);
        for (i, ci) in &self.terms {
            for (j, cj) in &other.terms {
                let mut c = ci.checked_mul(cj)?;
                if *i == 0 || *j == 0 {
                    c = c.checked_mul(&d)?;
                }
                out.insert_add(i + j, &c);
            }
        }
        Ok(out)
    }

    /// Largest `k` with a nonzero coefficient.
    pub fn geometric_degree(&self) -> Result<u32> {
        self.terms.keys().next_back().copied().ok_or(Error::ZeroSkeinElement)
    }

    /// Replaces each `z^k` by `image(k)` and sums. Coefficients in `A` are
    /// moved to the Jones variable when the images live there; any other
    /// variable disagreement is an error.
    pub fn substitute_basis(
        &self,
        mut image: impl FnMut(u32) -> Option<LaurentPolynomial>,
    ) -> Result<LaurentPolynomial> {
        let mut acc: Option<LaurentPolynomial> = None;
        for (k, c) in &self.terms {
            let img = image(*k).ok_or(Error::MissingBasisImage(*k))?;
            let coeff = match (c.variable(), img.variable()) {
                (a, b) if a == b => c.clone(),
                (Variable::A, Variable::U) => c.to_jones_variable()?,
                (a, b) => return Err(Error::VariableMismatch { left: a, right: b }),
            };
            let term = coeff.checked_mul(&img)?;
            acc = Some(match acc {
                None => term,
                Some(sum) => sum.checked_add(&term)?,
            });
        }
        Ok(acc.unwrap_or_else(|| LaurentPolynomial::zero(self.var)))
    }

    /// Reads the element in the 3-sphere: `z^0 -> 1` and `z^k -> δ^(k-1)`,
    /// the unknot-normalized bracket of `k` unlinked circles.
    pub fn embed_to_s3(&self) -> Result<LaurentPolynomial> {
        if self.is_zero() {
            return Err(Error::ZeroSkeinElement);
        }
        let d = delta(self.var)?;
        self.substitute_basis(|k| Some(d.pow(k.saturating_sub(1))))
    }

    /// Applies `t^(1/2) = A^-2` to every coefficient.
    pub fn to_jones_variable(&self) -> Result<Self> {
        let mut out = Self::zero(Variable::U);
        for (k, c) in &self.terms {
            out.terms.insert(*k, c.to_jones_variable()?);
        }
        Ok(out)
    }

    /// Applies `x -> x^-1` to every coefficient.
    pub fn mirror(&self) -> Self {
        SkeinElement {
            var: self.var,
            terms: self.terms.iter().map(|(k, c)| (*k, c.mirror())).collect(),
        }
    }
}

impl fmt::Debug for SkeinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.var, self)
    }
}

impl fmt::Display for SkeinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let text = c.to_string();
            let (negative, body) = if c.len() == 1 {
                match text.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, text),
                }
            } else {
                (false, format!("({text})"))
            };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if body == "1" {
                write!(f, "z^{k}")?;
            } else {
                write!(f, "{body}·z^{k}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for SkeinElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<String, &LaurentPolynomial> =
            self.terms.iter().map(|(k, c)| (k.to_string(), c)).collect();
        map.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SkeinElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let map = BTreeMap::<String, LaurentPolynomial>::deserialize(deserializer)?;
        let var = map.values().next().map(|c| c.variable()).unwrap_or(Variable::A);
        let mut terms = Vec::new();
        for (k, c) in map {
            let k: u32 = k.parse().map_err(D::Error::custom)?;
            terms.push((k, c));
        }
        SkeinElement::from_terms(var, terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(s, Variable::A).unwrap()
    }

    fn z(k: u32) -> SkeinElement {
        SkeinElement::basis(Variable::A, k)
    }

    #[test]
    fn basis_products() {
        let d = delta(Variable::A).unwrap();
        assert_eq!(z(0).mul(&z(2)).unwrap(), SkeinElement::term(2, d.clone()));
        assert_eq!(z(1).mul(&z(2)).unwrap(), z(3));
        let x = SkeinElement::term(0, a("A"));
        assert_eq!(x.mul(&x).unwrap(), SkeinElement::term(0, &a("A^2") * &d));
    }

    #[test]
    fn geometric_degree_examples() {
        assert_eq!(z(1).geometric_degree().unwrap(), 1);
        let x = SkeinElement::from_terms(Variable::A, [(0, a("A")), (2, a("A^-1"))]).unwrap();
        assert_eq!(x.geometric_degree().unwrap(), 2);
        assert_eq!(SkeinElement::zero(Variable::A).geometric_degree(), Err(Error::ZeroSkeinElement));
    }

    #[test]
    fn substitution() {
        let x = SkeinElement::from_terms(Variable::A, [(0, a("A")), (2, a("A^-1"))]).unwrap();
        let d = delta(Variable::A).unwrap();
        let value = x
            .substitute_basis(|k| match k {
                0 => Some(a("1")),
                2 => Some(d.clone()),
                _ => None,
            })
            .unwrap();
        assert_eq!(value, a("-A^-3"));
        assert_eq!(z(0).substitute_basis(|_| Some(a("1"))).unwrap(), a("1"));
        assert_eq!(x.substitute_basis(|k| (k == 0).then(|| a("1"))), Err(Error::MissingBasisImage(2)));
        // A coefficients move over to u when the images are in u
        let u = z(1).substitute_basis(|_| Some(delta(Variable::U).unwrap())).unwrap();
        assert_eq!(u, delta(Variable::U).unwrap());
        // but not to t
        let t = LaurentPolynomial::one(Variable::T);
        assert!(z(1).substitute_basis(|_| Some(t.clone())).is_err());
    }

    #[test]
    fn embedding_into_the_sphere() {
        let trefoil = SkeinElement::from_terms(Variable::A, [(0, a("A^7 - A^3 + A^-1")), (2, a("A^-3"))]).unwrap();
        assert_eq!(trefoil.embed_to_s3().unwrap(), a("A^7 - A^3 - A^-5"));
        assert_eq!(z(0).embed_to_s3().unwrap(), a("1"));
        let d = delta(Variable::A).unwrap();
        assert_eq!(z(3).embed_to_s3().unwrap(), &d * &d);
        assert_eq!(SkeinElement::zero(Variable::A).embed_to_s3(), Err(Error::ZeroSkeinElement));
    }

    #[test]
    fn text_form() {
        let u = |e: i64, c: i64| LaurentPolynomial::monomial(Variable::U, e, c);
        let x = SkeinElement::from_terms(
            Variable::U,
            [(0, u(-4, 1)), (2, &u(-3, 1) + &u(-1, -1))],
        )
        .unwrap();
        assert_eq!(x.to_string(), "t^-2·z^0 + (t^-3/2 - t^-1/2)·z^2");
        let y = SkeinElement::from_terms(Variable::U, [(0, u(-2, -1)), (2, u(-1, -1))]).unwrap();
        assert_eq!(y.to_string(), "-t^-1·z^0 - t^-1/2·z^2");
        assert_eq!(z(1).to_string(), "z^1");
        assert_eq!(SkeinElement::zero(Variable::A).to_string(), "0");
    }

    #[test]
    fn json_form() {
        let x = SkeinElement::from_terms(Variable::A, [(0, a("A")), (2, a("A^-1"))]).unwrap();
        let json = serde_json::to_string(&x).unwrap();
        assert!(json.starts_with(r#"{"0":{"variable":"A""#));
        let back: SkeinElement = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn cancellation_passes_through_zero() {
        let x = SkeinElement::term(2, a("A"));
        assert!(x.checked_sub(&x).unwrap().is_zero());
    }
}
