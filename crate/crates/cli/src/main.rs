//! `satknot`: brackets, Jones and Alexander polynomials of lassos, braid
//! closures and satellite knots.

mod selftest;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use satknot_core::alexander::{alexander_closure, parse_spec, realize_spec, satellite_alexander, RealizeOptions};
use satknot_core::catalog::Catalog;
use satknot_core::lasso::{Lasso, Rewrite};
use satknot_core::satellite::{self, CableTable, Pattern, SatelliteSpec};
use satknot_core::{Error, LaurentPolynomial, SkeinElement};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "satknot", version, about = "Knot polynomials of lassos, braid closures and satellites")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Recompute every catalog expectation and the reference polynomials.
    #[arg(long)]
    self_test: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lassos in the solid torus, written L(r1,...,rm).
    Lasso {
        #[command(subcommand)]
        op: LassoOp,
    },
    /// Knots given by catalog name or inline braid such as "B3: 1 -2 1 -2".
    Knot {
        #[command(subcommand)]
        op: KnotOp,
    },
    /// Satellites of a pattern in the solid torus over a companion knot.
    Sat {
        #[command(subcommand)]
        op: SatOp,
    },
    /// Build a knot with a requested Alexander polynomial, e.g. "5_1^2 * 8_19@3".
    Realize {
        spec: String,
        /// Use this lasso for every factor whose power equals its degree.
        #[arg(long)]
        lasso: Option<String>,
        /// Use Sat(L(1,2),K) instead of K itself for power-1 factors.
        #[arg(long)]
        proper: bool,
    },
}

#[derive(Subcommand, Debug)]
enum LassoOp {
    Degree { lasso: String },
    Writhe { lasso: String },
    Bracket { lasso: String },
    JonesSt { lasso: String },
    Normalize { lasso: String },
}

#[derive(Subcommand, Debug)]
enum KnotOp {
    Jones { knot: String },
    Alexander { knot: String },
    Bracket { knot: String },
    ParallelJones {
        #[arg(long)]
        k: usize,
        knot: String,
    },
}

#[derive(Args, Debug)]
struct SatArgs {
    /// Lasso L(...), annular braid B<n>: ..., or local(B<n>: ...).
    #[arg(long)]
    pattern: String,
    #[arg(long)]
    companion: String,
    /// Compute the Jones polynomial by both routes and compare them.
    #[arg(long)]
    verify: bool,
}

#[derive(Subcommand, Debug)]
enum SatOp {
    Jones(SatArgs),
    Alexander(SatArgs),
    Bracket(SatArgs),
    Report(SatArgs),
    /// Compare two members of a lasso family such as "L(1,r)".
    Distinguish {
        #[arg(long)]
        family: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        r: Vec<i64>,
        #[arg(long)]
        companion: String,
    },
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::UnknownKnot(_)
            | Error::InvalidBraid(_)
            | Error::LassoDegreeUnused { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

type Outcome<T = ()> = std::result::Result<T, Failure>;

/// Text and JSON renderings of one result.
struct Output {
    text: String,
    json: Value,
}

fn poly_json(p: &LaurentPolynomial) -> Value {
    json!({ "text": p.to_string(), "value": p })
}

fn skein_json(x: &SkeinElement) -> Value {
    json!({ "text": x.to_string(), "value": x })
}

fn to_value(x: &impl Serialize) -> Value {
    serde_json::to_value(x).expect("serializable output")
}

fn parse_lasso(text: &str) -> Outcome<Lasso> {
    Ok(text.parse()?)
}

fn describe(rewrite: &Rewrite) -> String {
    match rewrite {
        Rewrite::Leading => "dropped a leading zero twist with its neighbour".into(),
        Rewrite::Interior(i) => format!("merged the neighbours of the zero twist at position {}", i + 1),
        Rewrite::Trailing => "dropped a trailing zero twist with its neighbour".into(),
    }
}

fn normalized_with_warnings(lasso: &Lasso) -> (Lasso, Vec<String>) {
    let (normal, trace) = lasso.normalize_traced();
    let notes: Vec<String> = trace.iter().map(describe).collect();
    for note in &notes {
        eprintln!("warning: {lasso}: {note}");
    }
    (normal, notes)
}

fn run_lasso(op: &LassoOp) -> Outcome<Output> {
    Ok(match op {
        LassoOp::Degree { lasso } => {
            let l = parse_lasso(lasso)?;
            let (normal, _) = normalized_with_warnings(&l);
            let degree = normal.degree()?;
            Output { text: degree.to_string(), json: json!({ "lasso": l, "normalized": normal, "degree": degree }) }
        }
        LassoOp::Writhe { lasso } => {
            let l = parse_lasso(lasso)?;
            Output { text: l.writhe().to_string(), json: json!({ "lasso": l, "writhe": l.writhe() }) }
        }
        LassoOp::Bracket { lasso } => {
            let l = parse_lasso(lasso)?;
            let b = l.bracket();
            Output { text: b.to_string(), json: json!({ "lasso": l, "bracket": skein_json(&b) }) }
        }
        LassoOp::JonesSt { lasso } => {
            let l = parse_lasso(lasso)?;
            let j = l.jones_st()?;
            Output { text: j.to_string(), json: json!({ "lasso": l, "jones_st": skein_json(&j) }) }
        }
        LassoOp::Normalize { lasso } => {
            let l = parse_lasso(lasso)?;
            let (normal, notes) = normalized_with_warnings(&l);
            Output {
                text: normal.to_string(),
                json: json!({ "lasso": l, "normalized": normal, "text": normal.to_string(), "rewrites": notes }),
            }
        }
    })
}

fn run_knot(op: &KnotOp, catalog: &Catalog) -> Outcome<Output> {
    let knot = match op {
        KnotOp::Jones { knot } | KnotOp::Alexander { knot } | KnotOp::Bracket { knot } => knot,
        KnotOp::ParallelJones { knot, .. } => knot,
    };
    let (label, braid) = catalog.resolve(knot)?;
    let (key, value) = match op {
        KnotOp::Jones { .. } => {
            braid.require_knot()?;
            ("jones", braid.jones_closure())
        }
        KnotOp::Alexander { .. } => ("alexander", alexander_closure(&braid)?),
        KnotOp::Bracket { .. } => ("bracket", braid.bracket_sphere()),
        KnotOp::ParallelJones { k, .. } => ("parallel_jones", braid.parallel_jones(*k)?),
    };
    let mut json = json!({ "knot": label, "braid": braid, key: poly_json(&value) });
    if let KnotOp::ParallelJones { k, .. } = op {
        json["k"] = json!(k);
    }
    Ok(Output { text: value.to_string(), json })
}

fn satellite_spec(args: &SatArgs, catalog: &Catalog) -> Outcome<(SatelliteSpec, String)> {
    let pattern: Pattern = args.pattern.parse()?;
    let (label, companion) = catalog.resolve(&args.companion)?;
    Ok((SatelliteSpec::new(pattern, companion)?, label))
}

fn run_sat(op: &SatOp, catalog: &Catalog) -> Outcome<Output> {
    let args = match op {
        SatOp::Jones(a) | SatOp::Alexander(a) | SatOp::Bracket(a) | SatOp::Report(a) => a,
        SatOp::Distinguish { family, r, companion } => return distinguish(family, r, companion, catalog),
    };
    let (spec, label) = satellite_spec(args, catalog)?;
    let head = json!({ "pattern": spec.pattern().to_string(), "companion": label });
    let with = |mut head: Value, key: &str, value: Value| {
        head[key] = value;
        head
    };
    Ok(match op {
        SatOp::Jones(_) => {
            let j = satellite::satellite_jones(&spec, args.verify)?;
            let json = with(head, "jones", poly_json(&j));
            let json = if args.verify { with(json, "routes_agree", json!(true)) } else { json };
            Output { text: j.to_string(), json }
        }
        SatOp::Alexander(_) => {
            let d = satellite_alexander(&spec)?;
            Output { text: d.to_string(), json: with(head, "alexander", poly_json(&d)) }
        }
        SatOp::Bracket(_) => {
            let b = satellite::satellite_bracket_with(&spec, &CableTable::new(spec.companion().clone())?)?;
            Output { text: b.to_string(), json: with(head, "bracket", poly_json(&b)) }
        }
        SatOp::Report(_) => {
            let r = satellite::report(&spec, &label, args.verify)?;
            if r.routes_agree == Some(false) {
                return Err(Failure::Compute(format!("the two Jones routes disagree for Sat({}, {label})", r.pattern)));
            }
            let mut text = format!(
                "pattern: {}\ncompanion: {}\nJones: {}\nAlexander: {}\nwrithe: {}\ngeometric degree: {}\nwinding: {}",
                r.pattern, r.companion, r.jones, r.alexander, r.writhe, r.geometric_degree, r.winding
            );
            if let Some(agree) = r.routes_agree {
                text.push_str(&format!("\nroutes agree: {agree}"));
            }
            Output { text, json: to_value(&r) }
        }
        SatOp::Distinguish { .. } => unreachable!(),
    })
}

fn distinguish(family: &str, values: &[i64], companion: &str, catalog: &Catalog) -> Outcome<Output> {
    if !family.contains('r') {
        return Err(Failure::Usage(format!("family {family:?} has no parameter r")));
    }
    if values.len() != 2 {
        return Err(Failure::Usage(format!("--r takes exactly two values, got {}", values.len())));
    }
    let patterns: Vec<Pattern> = values
        .iter()
        .map(|r| family.replace('r', &r.to_string()).parse())
        .collect::<Result<_, Error>>()?;
    let (label, braid) = catalog.resolve(companion)?;
    let report = satellite::distinguish(&patterns[0], &patterns[1], &braid, &label)?;
    let mut text = String::new();
    for s in &report.satellites {
        text.push_str(&format!("Sat({},{}): Alexander {}; Jones {}\n", s.pattern, s.companion, s.alexander, s.jones));
    }
    text.push_str(&report.verdict.to_string());
    Ok(Output { text, json: to_value(&report) })
}

fn run_realize(spec: &str, lasso: Option<&str>, proper: bool, catalog: &Catalog) -> Outcome<Output> {
    let terms = parse_spec(spec)?;
    let lasso = lasso.map(parse_lasso).transpose()?;
    let out = realize_spec(&terms, &RealizeOptions { proper, lasso }, catalog)?;
    let text = format!(
        "{}\ntarget: {}\nrecomputed: {}\ncertificate: {}",
        out.recipe,
        out.target,
        out.recomputed,
        if out.certified { "equal" } else { "MISMATCH" }
    );
    if !out.certified {
        return Err(Failure::Compute(text));
    }
    Ok(Output { text, json: to_value(&out) })
}

fn run(cli: &Cli) -> Outcome<Output> {
    let catalog = Catalog::from_env()?;
    if cli.self_test {
        let report = selftest::run(&catalog);
        let output = Output { text: report.text(), json: to_value(&report) };
        return if report.passed() {
            Ok(output)
        } else {
            emit(&output, cli.json);
            Err(Failure::Compute("self-test failed".into()))
        };
    }
    match &cli.command {
        Some(Command::Lasso { op }) => run_lasso(op),
        Some(Command::Knot { op }) => run_knot(op, &catalog),
        Some(Command::Sat { op }) => run_sat(op, &catalog),
        Some(Command::Realize { spec, lasso, proper }) => run_realize(spec, lasso.as_deref(), *proper, &catalog),
        None => Err(Failure::Usage("no command given; see --help".into())),
    }
}

fn emit(output: &Output, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(&output.json).expect("json output"));
    } else {
        println!("{}", output.text);
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(output) => {
            emit(&output, cli.json);
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
