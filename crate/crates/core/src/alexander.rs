//! Alexander polynomials of braid closures and satellites, and the builder
//! that realizes a requested product of Alexander polynomials as a connected
//! sum of lasso satellites.

use std::fmt;

use serde::Serialize;

use crate::braid::BraidWord;
use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::lasso::Lasso;
use crate::poly::{LaurentPolynomial, Variable};
use crate::satellite::{Pattern, SatelliteSpec};

type Matrix = Vec<Vec<LaurentPolynomial>>;

fn t_monomial(exponent: i64, coefficient: i64) -> LaurentPolynomial {
    LaurentPolynomial::monomial(Variable::T, exponent, coefficient)
}

fn identity(size: usize) -> Matrix {
    (0..size)
        .map(|r| {
            (0..size)
                .map(|c| if r == c { LaurentPolynomial::one(Variable::T) } else { LaurentPolynomial::zero(Variable::T) })
                .collect()
        })
        .collect()
}

/// Replaces row `i - 1` of `m` by `row · m`, where `row` is the only
/// non-identity row of the letter's matrix, given as `(column, entry)`.
fn apply_letter(m: &mut Matrix, letter: i32, size: usize) {
    let i = letter.unsigned_abs() as usize;
    let row = i - 1;
    let entries: Vec<(usize, LaurentPolynomial)> = if letter > 0 {
        [(i.wrapping_sub(2), t_monomial(1, 1)), (row, t_monomial(1, -1)), (i, t_monomial(0, 1))].into()
    } else {
        [(i.wrapping_sub(2), t_monomial(0, 1)), (row, t_monomial(-1, -1)), (i, t_monomial(-1, 1))].into()
    };
    let entries: Vec<_> = entries.into_iter().filter(|(c, _)| *c < size).collect();
    let new_row: Vec<LaurentPolynomial> = (0..size)
        .map(|col| {
            let mut acc = LaurentPolynomial::zero(Variable::T);
            for (k, e) in &entries {
                acc.add_assign_unchecked(&(e * &m[*k][col]));
            }
            acc
        })
        .collect();
    m[row] = new_row;
}

/// Reduced Burau matrix of the braid, `(n-1) × (n-1)` over `Z[t, t^-1]`.
///
/// `σ_i` acts as the identity except in row `i`, which reads
/// `(t, -t, 1)` in columns `i-1, i, i+1` (truncated at the edges).
pub fn reduced_burau(word: &BraidWord) -> Result<Matrix> {
    let n = word.strands();
    if n < 2 {
        return Err(Error::InvalidBraid("the reduced Burau matrix needs at least two strands".into()));
    }
    let size = n - 1;
    let mut m = identity(size);
    // rows act on the left: the product is read from the last letter down
    for &letter in word.letters().iter().rev() {
        apply_letter(&mut m, letter, size);
    }
    Ok(m)
}

/// Fraction-free Gaussian elimination.
pub fn determinant(matrix: &Matrix) -> Result<LaurentPolynomial> {
    let n = matrix.len();
    if n == 0 {
        return Ok(LaurentPolynomial::one(Variable::T));
    }
    let mut m = matrix.clone();
    let mut negate = false;
    let mut previous = LaurentPolynomial::one(Variable::T);
    for k in 0..n {
        let Some(pivot) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Ok(LaurentPolynomial::zero(Variable::T));
        };
        if pivot != k {
            m.swap(pivot, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let value = m[i][j].checked_mul(&m[k][k])?.checked_sub(&m[i][k].checked_mul(&m[k][j])?)?;
                m[i][j] = value.exact_div(&previous)?;
            }
            m[i][k] = LaurentPolynomial::zero(Variable::T);
        }
        previous = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Multiplies by the unique unit `±t^j` that makes `p` symmetric with
/// `p(1) = 1`.
pub fn conway_normalize(p: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    let (lo, hi) = (p.min_exponent()?, p.max_exponent()?);
    if (lo + hi) % 2 != 0 {
        return Err(Error::Normalization(p.to_string()));
    }
    let centered = p.mul_monomial(-(lo + hi) / 2, false);
    let at_one = centered.eval_at_one();
    let normalized = if at_one == (-1).into() {
        -centered
    } else if at_one == 1.into() {
        centered
    } else {
        return Err(Error::Normalization(p.to_string()));
    };
    if !normalized.is_symmetric() {
        return Err(Error::Normalization(p.to_string()));
    }
    Ok(normalized)
}

/// Conway-normalized Alexander polynomial of a knot closure:
/// `det(B - I) · (1 - t) / (1 - t^n)`, normalized.
pub fn alexander_closure(word: &BraidWord) -> Result<LaurentPolynomial> {
    word.require_knot()?;
    let n = word.strands();
    if n == 1 {
        return Ok(LaurentPolynomial::one(Variable::T));
    }
    let mut m = reduced_burau(word)?;
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = row[i].checked_sub(&LaurentPolynomial::one(Variable::T))?;
    }
    let det = determinant(&m)?;
    let one = LaurentPolynomial::one(Variable::T);
    let numerator = det.checked_mul(&one.checked_sub(&t_monomial(1, 1))?)?;
    let raw = numerator.exact_div(&one.checked_sub(&t_monomial(n as i64, 1))?)?;
    conway_normalize(&raw)
}

/// `Δ_Sat(P,C)(t) = Δ_P(t) · Δ_C(t^w)` with `w` the winding number of the
/// pattern.
pub fn satellite_alexander(spec: &SatelliteSpec) -> Result<LaurentPolynomial> {
    let companion = alexander_closure(spec.companion())?;
    let pattern = spec.pattern();
    pattern.alexander()?.checked_mul(&companion.substitute_power(pattern.winding()?))
}

pub fn connected_sum_alexander<'a>(parts: impl IntoIterator<Item = &'a LaurentPolynomial>) -> Result<LaurentPolynomial> {
    parts
        .into_iter()
        .try_fold(LaurentPolynomial::one(Variable::T), |acc, p| acc.checked_mul(p))
}

/// One factor `Δ_K(t^d)` of a requested Alexander polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlexanderSpecTerm {
    pub knot: String,
    pub power: u32,
}

/// Parses `5_1^2 * 8_19@3 * 10_161@0`: `^` repeats a factor, `@` sets the
/// power of `t` (default 1). The empty string is the empty product.
pub fn parse_spec(text: &str) -> Result<Vec<AlexanderSpecTerm>> {
    let mut terms = Vec::new();
    if text.trim().is_empty() {
        return Ok(terms);
    }
    let mut offset = 0;
    for factor in text.split('*') {
        let position = offset + (factor.len() - factor.trim_start().len());
        offset += factor.len() + 1;
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::parse(text, position, "empty factor"));
        }
        let number = |s: &str, what: &str| -> Result<u32> {
            s.trim()
                .parse()
                .map_err(|_| Error::parse(text, position, format!("bad {what} {:?}", s.trim())))
        };
        let (rest, power) = match factor.split_once('@') {
            Some((rest, p)) => (rest, number(p, "power")?),
            None => (factor, 1),
        };
        let (name, multiplicity) = match rest.split_once('^') {
            Some((name, k)) => (name, number(k, "multiplicity")?),
            None => (rest, 1),
        };
        let name = name.trim();
        if name.is_empty() || name.contains(char::is_whitespace) {
            return Err(Error::parse(text, position, format!("bad knot name {name:?}")));
        }
        for _ in 0..multiplicity {
            terms.push(AlexanderSpecTerm { knot: name.to_string(), power });
        }
    }
    Ok(terms)
}

/// Lasso of degree `d` used by the builder: `L(2)`, `L(1,2)`, then
/// `L(1, ..., 1)` with `d - 1` ones.
pub fn canonical_lasso(d: u32) -> Lasso {
    match d {
        0 => Lasso::simple(2),
        1 => Lasso::new(vec![1, 2]),
        _ => Lasso::new(vec![1; d as usize - 1]),
    }
}

#[derive(Clone, Debug, Default)]
pub struct RealizeOptions {
    /// Use `Sat(L(1,2), K)` rather than `K` for power-1 terms.
    pub proper: bool,
    /// Replaces the canonical lasso for every term whose power equals its
    /// degree.
    pub lasso: Option<Lasso>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RecipePart {
    Knot { name: String },
    Satellite { pattern: Lasso, companion: String },
}

impl fmt::Display for RecipePart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecipePart::Knot { name } => write!(f, "{name}"),
            RecipePart::Satellite { pattern, companion } => write!(f, "Sat({pattern},{companion})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Realization {
    pub spec: Vec<AlexanderSpecTerm>,
    pub parts: Vec<RecipePart>,
    pub recipe: String,
    pub target: LaurentPolynomial,
    pub recomputed: LaurentPolynomial,
    pub certified: bool,
}

/// Builds a connected sum of lasso satellites whose Alexander polynomial is
/// `Π Δ_K(t^d)` and recomputes it from the recipe.
pub fn realize_spec(terms: &[AlexanderSpecTerm], options: &RealizeOptions, catalog: &Catalog) -> Result<Realization> {
    let override_degree = match &options.lasso {
        Some(lasso) => {
            let normalized = lasso.normalize();
            let degree = normalized.degree()?;
            if !terms.iter().any(|t| t.power == degree) {
                return Err(Error::LassoDegreeUnused { lasso: lasso.to_string(), degree });
            }
            Some(degree)
        }
        None => None,
    };

    let mut parts = Vec::with_capacity(terms.len());
    let mut target_factors = Vec::with_capacity(terms.len());
    let mut recomputed_factors = Vec::with_capacity(terms.len());
    for term in terms {
        let entry = catalog.get(&term.knot)?;
        let companion = entry.braid.clone();
        let delta = alexander_closure(&companion)?;
        target_factors.push(delta.substitute_power(term.power));

        let lasso = match (&options.lasso, override_degree) {
            (Some(l), Some(d)) if d == term.power => Some(l.clone()),
            _ if term.power == 1 && !options.proper => None,
            _ => Some(canonical_lasso(term.power)),
        };
        match lasso {
            None => {
                recomputed_factors.push(delta);
                parts.push(RecipePart::Knot { name: entry.name.clone() });
            }
            Some(lasso) => {
                let spec = SatelliteSpec::new(Pattern::Lasso(lasso.clone()), companion)?;
                recomputed_factors.push(satellite_alexander(&spec)?);
                parts.push(RecipePart::Satellite { pattern: lasso, companion: entry.name.clone() });
            }
        }
    }

    let target = connected_sum_alexander(&target_factors)?;
    let recomputed = connected_sum_alexander(&recomputed_factors)?;
    let recipe = if parts.is_empty() {
        "unknot".to_string()
    } else {
        parts.iter().map(ToString::to_string).collect::<Vec<_>>().join(" # ")
    };
    Ok(Realization {
        spec: terms.to_vec(),
        certified: target == recomputed,
        parts,
        recipe,
        target,
        recomputed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(s, Variable::T).unwrap()
    }

    fn b(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn burau_blocks() {
        assert_eq!(reduced_burau(&BraidWord::identity(2)).unwrap(), vec![vec![t("1")]]);
        assert_eq!(reduced_burau(&b("B2: 1")).unwrap(), vec![vec![t("-t")]]);
        assert_eq!(reduced_burau(&b("B2: -1 -1 -1")).unwrap(), vec![vec![t("-t^-3")]]);
        assert!(reduced_burau(&BraidWord::unknot()).is_err());
        let m = reduced_burau(&b("B3: 1 -1")).unwrap();
        assert_eq!(m, identity(2));
        let m = reduced_burau(&b("B4: -2 2 3 -3")).unwrap();
        assert_eq!(m, identity(3));
    }

    #[test]
    fn braid_relation_holds() {
        let lhs = reduced_burau(&b("B4: 1 2 1 3 2 3")).unwrap();
        let rhs = reduced_burau(&b("B4: 2 1 2 2 3 2")).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn small_knots() {
        assert!(alexander_closure(&BraidWord::unknot()).unwrap().is_one());
        assert!(alexander_closure(&b("B2: 1")).unwrap().is_one());
        assert_eq!(alexander_closure(&b("B2: -1 -1 -1")).unwrap(), t("t - 1 + t^-1"));
        assert_eq!(alexander_closure(&b("B3: 1 -2 1 -2")).unwrap(), t("-t + 3 - t^-1"));
        assert_eq!(alexander_closure(&b("B2: 1 1")), Err(Error::NotAKnot { components: 2 }));
    }

    #[test]
    fn spec_parsing() {
        let terms = parse_spec("5_1^2 * 8_19@3 * 10_161@0").unwrap();
        let pairs: Vec<_> = terms.iter().map(|t| (t.knot.as_str(), t.power)).collect();
        assert_eq!(pairs, vec![("5_1", 1), ("5_1", 1), ("8_19", 3), ("10_161", 0)]);
        assert!(parse_spec("  ").unwrap().is_empty());
        assert_eq!(parse_spec("3_1^2@2").unwrap().len(), 2);
        assert!(matches!(parse_spec("5_1 * * 3_1"), Err(Error::Parse { position: 6, .. })));
        assert!(parse_spec("5_1@x").is_err());
    }

    #[test]
    fn canonical_lasso_degrees() {
        for d in 0..8 {
            assert_eq!(canonical_lasso(d).degree().unwrap(), d);
        }
    }
}
