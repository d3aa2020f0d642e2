//! Satellite knots `Sat(P, C)`: a pattern in the solid torus carried along
//! the 0-framed neighbourhood of a companion knot.
//!
//! Brackets substitute each `z^k` of the pattern by the bracket of the
//! 0-framed `k`-parallel of the companion; Jones polynomials substitute
//! `J(C; k)` into `J_ST(P)`. Both routes are kept and can be compared.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::Serialize;

use crate::alexander::{alexander_closure, satellite_alexander};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::lasso::{BracketCache, Lasso};
use crate::poly::{framing_factor, LaurentPolynomial, Variable};
use crate::skein::{delta, SkeinElement};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Pattern {
    Lasso(Lasso),
    /// Closure of the braid around the core of the solid torus.
    Braid(BraidWord),
    /// The core with the closure of the braid tied into it as a local knot.
    LocalKnot(BraidWord),
}

impl Pattern {
    /// Kauffman bracket in the skein module of the solid torus.
    pub fn bracket(&self) -> Result<SkeinElement> {
        self.bracket_with(&mut BracketCache::default())
    }

    pub fn bracket_with(&self, cache: &mut BracketCache) -> Result<SkeinElement> {
        match self {
            Pattern::Lasso(l) => Ok(cache.bracket(l.twists())),
            Pattern::Braid(b) => Ok(b.bracket_annulus()),
            Pattern::LocalKnot(k) => {
                k.require_knot()?;
                Ok(SkeinElement::term(1, k.bracket_sphere()))
            }
        }
    }

    pub fn writhe(&self) -> i64 {
        match self {
            Pattern::Lasso(l) => l.writhe(),
            Pattern::Braid(b) | Pattern::LocalKnot(b) => b.exponent_sum(),
        }
    }

    /// How many times the pattern winds around the solid torus.
    pub fn winding(&self) -> Result<u32> {
        match self {
            Pattern::Lasso(l) => l.normalize().degree(),
            Pattern::Braid(b) => Ok(b.strands() as u32),
            Pattern::LocalKnot(_) => Ok(1),
        }
    }

    /// Alexander polynomial of the pattern read in the 3-sphere. Lassos are
    /// unknotted there.
    pub fn alexander(&self) -> Result<LaurentPolynomial> {
        match self {
            Pattern::Lasso(_) => Ok(LaurentPolynomial::one(Variable::T)),
            Pattern::Braid(b) | Pattern::LocalKnot(b) => alexander_closure(b),
        }
    }

    /// `J_ST(P) = T(wr) ⟨P⟩` in the Jones variable.
    pub fn jones_st(&self) -> Result<SkeinElement> {
        self.bracket()?.scale(&framing_factor(self.writhe()))?.to_jones_variable()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Lasso(l) => l.fmt(f),
            Pattern::Braid(b) => b.fmt(f),
            Pattern::LocalKnot(b) => write!(f, "local({b})"),
        }
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// `L(...)` is a lasso, `B<n>: ...` an annular braid and
    /// `local(B<n>: ...)` a local knot in the core.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(inner) = t.strip_prefix("local(").and_then(|r| r.strip_suffix(')')) {
            return Ok(Pattern::LocalKnot(inner.parse()?));
        }
        if t.starts_with(['B', 'b']) {
            return Ok(Pattern::Braid(t.parse()?));
        }
        if t.starts_with('L') {
            return Ok(Pattern::Lasso(t.parse()?));
        }
        Err(Error::parse(s, s.len() - s.trim_start().len(), "expected a lasso L(...) or a braid B<n>: ..."))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatelliteSpec {
    pattern: Pattern,
    companion: BraidWord,
}

impl SatelliteSpec {
    pub fn new(pattern: Pattern, companion: BraidWord) -> Result<Self> {
        companion.require_knot()?;
        Ok(SatelliteSpec { pattern, companion })
    }

    pub fn pattern(&self) -> &Pattern {
        &self.pattern
    }

    pub fn companion(&self) -> &BraidWord {
        &self.companion
    }
}

/// Brackets of the 0-framed parallels of one companion, computed on demand
/// and kept for reuse.
#[derive(Debug)]
pub struct CableTable {
    companion: BraidWord,
    brackets: Mutex<BTreeMap<usize, LaurentPolynomial>>,
}

impl CableTable {
    pub fn new(companion: BraidWord) -> Result<Self> {
        companion.require_knot()?;
        Ok(CableTable { companion, brackets: Mutex::new(BTreeMap::new()) })
    }

    pub fn companion(&self) -> &BraidWord {
        &self.companion
    }

    /// `⟨C^k(-2 wr C)⟩`, with `⟨C^0⟩ = 1`.
    pub fn bracket(&self, k: usize) -> Result<LaurentPolynomial> {
        if let Some(hit) = self.brackets.lock().unwrap().get(&k) {
            return Ok(hit.clone());
        }
        let value = self.companion.parallel_bracket(k)?;
        self.brackets.lock().unwrap().insert(k, value.clone());
        Ok(value)
    }

    /// Computes the missing parallels `0..=max` concurrently.
    pub fn prefetch(&self, max: usize) -> Result<()> {
        let missing: Vec<usize> = {
            let known = self.brackets.lock().unwrap();
            (0..=max).filter(|k| !known.contains_key(k)).collect()
        };
        let computed: Vec<(usize, LaurentPolynomial)> = missing
            .into_par_iter()
            .map(|k| Ok((k, self.companion.parallel_bracket(k)?)))
            .collect::<Result<_>>()?;
        self.brackets.lock().unwrap().extend(computed);
        Ok(())
    }

    /// Parallels evaluated so far.
    pub fn computed(&self) -> Vec<usize> {
        self.brackets.lock().unwrap().keys().copied().collect()
    }

    /// `J(C; k) = T(k · wr C) ⟨C^k(-2 wr C)⟩` in the Jones variable.
    pub fn jones(&self, k: usize) -> Result<LaurentPolynomial> {
        let writhe = k as i64 * self.companion.exponent_sum();
        (&framing_factor(writhe) * &self.bracket(k)?).to_jones_variable()
    }
}

/// `wr(K^k(n)) = k² wr(K) + n k(k-1)/2`: the blackboard cable plus `n`
/// half twists of `k(k-1)/2` crossings each.
pub fn cable_writhe(k: i64, n: i64, w: i64) -> i64 {
    k * k * w + n * k * (k - 1) / 2
}

/// Number of parallel copies the pattern needs: the top power of `z`.
pub fn geometric_degree(pattern: &Pattern) -> Result<u32> {
    pattern.bracket()?.geometric_degree()
}

/// `wr(Sat(P, C)) = wr(P) + M wr(C)`.
pub fn satellite_writhe(spec: &SatelliteSpec) -> Result<i64> {
    let m = geometric_degree(&spec.pattern)? as i64;
    Ok(spec.pattern.writhe() + m * spec.companion.exponent_sum())
}

fn cable_index(k: u32) -> usize {
    k as usize
}

/// `⟨Sat(P, C)⟩ = ⟨P⟩ |_{z^k = T(-wr C)^(M-k) ⟨C^k(-2 wr C)⟩}`.
pub fn satellite_bracket(spec: &SatelliteSpec) -> Result<LaurentPolynomial> {
    satellite_bracket_with(spec, &CableTable::new(spec.companion.clone())?)
}

pub fn satellite_bracket_with(spec: &SatelliteSpec, table: &CableTable) -> Result<LaurentPolynomial> {
    let pattern = spec.pattern.bracket()?;
    let m = pattern.geometric_degree()?;
    table.prefetch(cable_index(m))?;
    let twist = framing_factor(-spec.companion.exponent_sum());
    let mut failure = None;
    let value = pattern.substitute_basis(|k| match table.bracket(cable_index(k)) {
        Ok(b) => Some(&twist.pow(m - k) * &b),
        Err(e) => {
            failure = Some(e);
            None
        }
    });
    match failure {
        Some(e) => Err(e),
        None => value,
    }
}

/// Jones polynomial through the bracket: `T(wr Sat) ⟨Sat⟩`.
pub fn satellite_jones_via_bracket(spec: &SatelliteSpec, table: &CableTable) -> Result<LaurentPolynomial> {
    let bracket = satellite_bracket_with(spec, table)?;
    (&framing_factor(satellite_writhe(spec)?) * &bracket).to_jones_variable()
}

/// Jones polynomial through `J_ST(P) |_{z^k = J(C; k)}`.
pub fn satellite_jones_via_parallels(spec: &SatelliteSpec, table: &CableTable) -> Result<LaurentPolynomial> {
    let jst = spec.pattern.jones_st()?;
    table.prefetch(cable_index(jst.geometric_degree()?))?;
    let mut failure = None;
    let value = jst.substitute_basis(|k| match table.jones(cable_index(k)) {
        Ok(j) => Some(j),
        Err(e) => {
            failure = Some(e);
            None
        }
    });
    match failure {
        Some(e) => Err(e),
        None => value,
    }
}

/// Jones polynomial of the satellite. With `verify`, the bracket route is
/// also evaluated and any disagreement is an error.
pub fn satellite_jones(spec: &SatelliteSpec, verify: bool) -> Result<LaurentPolynomial> {
    let table = CableTable::new(spec.companion.clone())?;
    satellite_jones_with(spec, &table, verify)
}

pub fn satellite_jones_with(spec: &SatelliteSpec, table: &CableTable, verify: bool) -> Result<LaurentPolynomial> {
    let substituted = satellite_jones_via_parallels(spec, table)?;
    if verify {
        let bracketed = satellite_jones_via_bracket(spec, table)?;
        if bracketed != substituted {
            return Err(Error::RouteMismatch {
                what: format!("Jones of Sat({}, {})", spec.pattern, spec.companion),
                left: substituted.to_string(),
                right: bracketed.to_string(),
            });
        }
    }
    Ok(substituted)
}

/// Braid word whose closure is `Sat(P, C)` for a braid pattern on `n`
/// strands: the 0-framed `n`-parallel of `C` with the pattern inserted in one
/// cable group. Independent of the substitution formulas.
pub fn satellite_braid(pattern: &BraidWord, companion: &BraidWord) -> Result<BraidWord> {
    let n = pattern.strands();
    let cabled = companion.zero_framed_cable(n)?;
    cabled.then(&pattern.widen(cabled.strands())?)
}

/// Everything the command line reports about one satellite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SatelliteReport {
    pub pattern: String,
    pub companion: String,
    pub alexander: String,
    pub jones: String,
    pub writhe: i64,
    pub geometric_degree: u32,
    pub winding: u32,
    /// Present when both Jones routes were compared.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub routes_agree: Option<bool>,
}

pub fn report(spec: &SatelliteSpec, companion_label: &str, verify: bool) -> Result<SatelliteReport> {
    let table = CableTable::new(spec.companion.clone())?;
    let jones = satellite_jones_via_parallels(spec, &table)?;
    let routes_agree = if verify {
        Some(satellite_jones_via_bracket(spec, &table)? == jones)
    } else {
        None
    };
    Ok(SatelliteReport {
        pattern: spec.pattern.to_string(),
        companion: companion_label.to_string(),
        alexander: satellite_alexander(spec)?.to_string(),
        jones: jones.to_string(),
        writhe: satellite_writhe(spec)?,
        geometric_degree: geometric_degree(&spec.pattern)?,
        winding: spec.pattern.winding()?,
        routes_agree,
    })
}

/// Outcome of a distinguishing criterion, with the polynomials it compared.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub holds: bool,
    pub alexander_nontrivial: bool,
    pub parallels_differ: bool,
    pub alexander: String,
    pub parallel: String,
    pub reference: String,
}

fn condition(companion: &BraidWord, k: usize, reference: LaurentPolynomial) -> Result<Condition> {
    let alexander = alexander_closure(companion)?;
    let parallel = companion.parallel_jones(k)?;
    let alexander_nontrivial = !alexander.is_one();
    let parallels_differ = parallel != reference;
    Ok(Condition {
        holds: alexander_nontrivial && parallels_differ,
        alexander_nontrivial,
        parallels_differ,
        alexander: alexander.to_string(),
        parallel: parallel.to_string(),
        reference: reference.to_string(),
    })
}

/// `Δ_C ≠ 1` and `J(C; 2) ≠ J(U; 2)`: satellites of `L(r)` over `C` are then
/// pairwise distinct.
pub fn thm1_condition(companion: &BraidWord) -> Result<Condition> {
    condition(companion, 2, delta(Variable::U)?)
}

/// `Δ_C ≠ 1` and `J(C; 3) ≠ J(C) J(U; 3)`: satellites of `L(1, r)` over `C`
/// are then pairwise distinct.
pub fn thm2_condition(companion: &BraidWord) -> Result<Condition> {
    let reference = &companion.jones_closure() * &delta(Variable::U)?.pow(2);
    condition(companion, 3, reference)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "distinguished-by-Alexander")]
    Alexander,
    #[serde(rename = "distinguished-by-Jones")]
    Jones,
    #[serde(rename = "not-distinguished")]
    NotDistinguished,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Alexander => "distinguished-by-Alexander",
            Verdict::Jones => "distinguished-by-Jones",
            Verdict::NotDistinguished => "not-distinguished",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistinguishReport {
    pub companion: String,
    pub satellites: Vec<SatelliteReport>,
    pub verdict: Verdict,
}

/// Compares the satellites of two patterns over one companion, Alexander
/// polynomial first.
pub fn distinguish(first: &Pattern, second: &Pattern, companion: &BraidWord, label: &str) -> Result<DistinguishReport> {
    let table = CableTable::new(companion.clone())?;
    let mut satellites = Vec::with_capacity(2);
    let mut values = Vec::with_capacity(2);
    for pattern in [first, second] {
        let spec = SatelliteSpec::new(pattern.clone(), companion.clone())?;
        let alexander = satellite_alexander(&spec)?;
        let jones = satellite_jones_with(&spec, &table, false)?;
        satellites.push(SatelliteReport {
            pattern: pattern.to_string(),
            companion: label.to_string(),
            alexander: alexander.to_string(),
            jones: jones.to_string(),
            writhe: satellite_writhe(&spec)?,
            geometric_degree: geometric_degree(pattern)?,
            winding: pattern.winding()?,
            routes_agree: None,
        });
        values.push((alexander, jones));
    }
    let verdict = if values[0].0 != values[1].0 {
        Verdict::Alexander
    } else if values[0].1 != values[1].1 {
        Verdict::Jones
    } else {
        Verdict::NotDistinguished
    };
    Ok(DistinguishReport { companion: label.to_string(), satellites, verdict })
}
