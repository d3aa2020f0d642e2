//! Catalog expectations plus fixed reference polynomials.

use satknot_core::alexander::{parse_spec, realize_spec, satellite_alexander, RealizeOptions};
use satknot_core::catalog::{Catalog, Check};
use satknot_core::satellite::{satellite_bracket, satellite_jones, Pattern, SatelliteSpec};
use satknot_core::{BraidWord, LaurentPolynomial, Result, SkeinElement, Variable};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub checks: Vec<CheckLine>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            if c.passed {
                out.push_str(&format!("ok    {}\n", c.name));
            } else {
                out.push_str(&format!("FAIL  {}: {}\n", c.name, c.detail));
            }
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        out.push_str(&format!("{passed}/{} checks passed", self.checks.len()));
        out
    }
}

fn line(name: &str, expected: &str, actual: Result<String>) -> CheckLine {
    match actual {
        Ok(actual) => CheckLine {
            name: name.to_string(),
            passed: actual == expected,
            detail: format!("expected {expected}, got {actual}"),
        },
        Err(e) => CheckLine { name: name.to_string(), passed: false, detail: e.to_string() },
    }
}

fn satellite(pattern: &str, companion: &BraidWord) -> Result<SatelliteSpec> {
    SatelliteSpec::new(pattern.parse::<Pattern>()?, companion.clone())
}

fn reference_checks(catalog: &Catalog) -> Result<Vec<CheckLine>> {
    let trefoil = catalog.braid("3_1")?;
    let eight = catalog.braid("4_1")?;
    let left: BraidWord = "B2: -1 -1 -1".parse()?;
    let annular = SkeinElement::from_terms(
        Variable::A,
        [(0, LaurentPolynomial::parse("A^7 - A^3 + A^-1", Variable::A)?), (2, LaurentPolynomial::monomial(Variable::A, -3, 1))],
    )?;
    let over_eight = satellite("B2: -1 -1 -1", &eight)?;
    let jones = |p: &str| satellite_jones(&satellite(p, &trefoil)?, true).map(|j| j.to_string());
    let alexander = |p: &str| satellite_alexander(&satellite(p, &trefoil)?).map(|d| d.to_string());
    let realized = || -> Result<String> {
        let out = realize_spec(&parse_spec("5_1^2 * 8_19@3")?, &RealizeOptions::default(), catalog)?;
        Ok(format!("{} certified={}", out.recipe, out.certified))
    };
    Ok(vec![
        line("annular bracket of B2: -1 -1 -1", &annular.to_string(), Ok(left.bracket_annulus().to_string())),
        line(
            "sphere bracket from the annular one",
            &left.bracket_sphere().to_string(),
            annular.embed_to_s3().map(|p| p.to_string()),
        ),
        line(
            "0-framed 2-cable bracket of 4_1",
            "-A^26 + A^22 - A^2 - A^-2 + A^-22 - A^-26",
            eight.parallel_bracket(2).map(|p| p.to_string()),
        ),
        line(
            "bracket of Sat(B2: -1 -1 -1, 4_1)",
            "-A^23 + A^19 + A^7 - A^3 - A^-5 + A^-25 - A^-29",
            satellite_bracket(&over_eight).map(|p| p.to_string()),
        ),
        line(
            "Jones of Sat(B2: -1 -1 -1, 4_1)",
            "t^-8 - t^-7 - t^-4 + t^-3 + t^-1 - t^4 + t^5",
            satellite_jones(&over_eight, true).map(|p| p.to_string()),
        ),
        line(
            "J(3_1; 2)",
            "-t^-23/2 + t^-21/2 + t^-17/2 - t^-9/2 - t^-5/2 - t^-1/2",
            trefoil.parallel_jones(2).map(|p| p.to_string()),
        ),
        line(
            "Jones of Sat(L(2), 3_1)",
            "-t^-13 + 2t^-12 - t^-11 + t^-10 - t^-9 - t^-6 + t^-5 - t^-4 + t^-3 + t^-1",
            jones("L(2)"),
        ),
        line(
            "Jones of Sat(L(4), 3_1)",
            "-t^-15 + 2t^-14 - 2t^-13 + 3t^-12 - 2t^-11 + t^-10 - t^-9 - t^-8 + t^-7 - 2t^-6 + 2t^-5 - t^-4 + 2t^-3 - t^-2 + t^-1",
            jones("L(4)"),
        ),
        line("Alexander of Sat(L(2), 3_1)", "1", alexander("L(2)")),
        line("Alexander of Sat(L(4), 3_1)", "1", alexander("L(4)")),
        line("Alexander of Sat(L(1,2), 3_1)", "t - 1 + t^-1", alexander("L(1,2)")),
        line("realize 5_1^2 * 8_19@3", "5_1 # 5_1 # Sat(L(1,1),8_19) certified=true", realized()),
    ])
}

pub fn run(catalog: &Catalog) -> Report {
    let mut checks: Vec<CheckLine> = catalog
        .self_test()
        .into_iter()
        .map(|Check { name, passed, detail }| CheckLine { name, passed, detail })
        .collect();
    match reference_checks(catalog) {
        Ok(lines) => checks.extend(lines),
        Err(e) => checks.push(CheckLine { name: "reference polynomials".into(), passed: false, detail: e.to_string() }),
    }
    Report { checks }
}
