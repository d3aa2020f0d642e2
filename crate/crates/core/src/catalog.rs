//! Named knots, loaded from a versioned TOML file.
//!
//! The built-in table is compiled in; `SATKNOT_CATALOG` points at a
//! replacement file.

use std::path::Path;

use serde::Deserialize;

use crate::alexander::alexander_closure;
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::poly::{LaurentPolynomial, Variable};

pub const CATALOG_ENV: &str = "SATKNOT_CATALOG";
pub const SUPPORTED_VERSION: u32 = 1;

const BUILTIN: &str = include_str!("../data/catalog.toml");

#[derive(Deserialize)]
struct CatalogFile {
    version: u32,
    #[serde(default)]
    knot: Vec<RawEntry>,
}

#[derive(Deserialize)]
struct RawEntry {
    name: String,
    #[serde(default)]
    aliases: Vec<String>,
    braid: String,
    jones: String,
    alexander: String,
    determinant: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub aliases: Vec<String>,
    pub braid: BraidWord,
    pub expected_jones: LaurentPolynomial,
    pub expected_alexander: LaurentPolynomial,
    pub determinant: u64,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    version: u32,
    entries: Vec<CatalogEntry>,
}

/// One line of the catalog self-test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn compare(name: String, expected: &LaurentPolynomial, actual: &LaurentPolynomial) -> Self {
        Check {
            name,
            passed: expected == actual,
            detail: format!("expected {expected}, got {actual}"),
        }
    }
}

impl Catalog {
    pub fn builtin() -> Self {
        Self::from_toml_str(BUILTIN).expect("built-in catalog parses")
    }

    /// The file named by `SATKNOT_CATALOG`, or the built-in table.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(CATALOG_ENV) {
            Some(path) => Self::load(Path::new(&path)),
            None => Ok(Self::builtin()),
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Catalog(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    pub fn from_toml_str(text: &str) -> Result<Self> {
        let file: CatalogFile = toml::from_str(text).map_err(|e| Error::Catalog(e.to_string()))?;
        if file.version != SUPPORTED_VERSION {
            return Err(Error::Catalog(format!(
                "unsupported catalog version {} (expected {SUPPORTED_VERSION})",
                file.version
            )));
        }
        let mut entries = Vec::with_capacity(file.knot.len());
        for raw in file.knot {
            let context = |e: Error| Error::Catalog(format!("entry {}: {e}", raw.name));
            entries.push(CatalogEntry {
                braid: raw.braid.parse().map_err(context)?,
                expected_jones: LaurentPolynomial::parse(&raw.jones, Variable::U).map_err(context)?,
                expected_alexander: LaurentPolynomial::parse(&raw.alexander, Variable::T).map_err(context)?,
                name: raw.name,
                aliases: raw.aliases,
                determinant: raw.determinant,
            });
        }
        Ok(Catalog { version: file.version, entries })
    }

    pub fn version(&self) -> u32 {
        self.version
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        let name = name.trim();
        self.entries
            .iter()
            .find(|e| e.name == name || e.aliases.iter().any(|a| a == name))
            .ok_or_else(|| Error::UnknownKnot(name.to_string()))
    }

    pub fn braid(&self, name: &str) -> Result<BraidWord> {
        Ok(self.get(name)?.braid.clone())
    }

    /// A catalog name, or an inline braid such as `B3: 1 -2 1 -2`.
    /// Returns the display label together with the braid.
    pub fn resolve(&self, text: &str) -> Result<(String, BraidWord)> {
        let trimmed = text.trim();
        if let Ok(entry) = self.get(trimmed) {
            return Ok((entry.name.clone(), entry.braid.clone()));
        }
        if trimmed.starts_with(['B', 'b']) && trimmed.contains(':') {
            let braid: BraidWord = trimmed.parse()?;
            return Ok((braid.to_string(), braid));
        }
        Err(Error::UnknownKnot(trimmed.to_string()))
    }

    /// Recomputes every stored expectation.
    pub fn self_test(&self) -> Vec<Check> {
        let mut checks = Vec::new();
        for entry in &self.entries {
            let name = &entry.name;
            if let Err(e) = entry.braid.require_knot() {
                checks.push(Check { name: format!("{name}: closure is a knot"), passed: false, detail: e.to_string() });
                continue;
            }
            let jones = entry.braid.jones_closure();
            checks.push(Check::compare(format!("{name}: Jones"), &entry.expected_jones, &jones));
            match alexander_closure(&entry.braid) {
                Ok(alexander) => {
                    checks.push(Check::compare(format!("{name}: Alexander"), &entry.expected_alexander, &alexander));
                    let det = alexander.eval_at_minus_one().magnitude().clone();
                    checks.push(Check {
                        name: format!("{name}: determinant"),
                        passed: det == entry.determinant.into(),
                        detail: format!("expected {}, got {det}", entry.determinant),
                    });
                }
                Err(e) => checks.push(Check {
                    name: format!("{name}: Alexander"),
                    passed: false,
                    detail: e.to_string(),
                }),
            }
        }
        checks
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_loads_and_resolves() {
        let cat = Catalog::builtin();
        assert_eq!(cat.version(), 1);
        assert_eq!(cat.braid("3_1").unwrap().to_string(), "B2: -1 -1 -1");
        assert_eq!(cat.braid("trefoil").unwrap(), cat.braid("3_1").unwrap());
        assert_eq!(cat.braid("unknot").unwrap(), BraidWord::unknot());
        assert_eq!(cat.get("7_4").unwrap_err(), Error::UnknownKnot("7_4".into()));
        let (label, braid) = cat.resolve("B3: 1 -2 1 -2").unwrap();
        assert_eq!(label, "B3: 1 -2 1 -2");
        assert_eq!(braid, cat.braid("4_1").unwrap());
        assert_eq!(cat.resolve("4_1").unwrap().0, "4_1");
    }

    #[test]
    fn rejects_bad_files() {
        assert!(matches!(Catalog::from_toml_str("version = 2"), Err(Error::Catalog(_))));
        let bad = "version = 1\n[[knot]]\nname = \"x\"\nbraid = \"B2: 5\"\njones = \"1\"\nalexander = \"1\"\ndeterminant = 1\n";
        assert!(matches!(Catalog::from_toml_str(bad), Err(Error::Catalog(_))));
    }

    #[test]
    fn builtin_self_test_passes() {
        for check in Catalog::builtin().self_test() {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
    }
}
