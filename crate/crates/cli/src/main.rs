//! `lieideal`: build algebras over GF(p), enumerate and classify Lie ideals,
//! and run the verification suites.
//!
//! Exit codes: 0 pass, 1 a check failed, 2 input rejected, 3 budget or
//! limit exceeded, 4 not a Lie ideal, 5 unsupported algebra.

use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use lieideal::algebra::parse_builtin;
use lieideal::calc::{bracket_space, center, dim_over_c};
use lieideal::classify::{
    classify_lie_ideal, is_exceptional, is_prime, is_prime_by_ideals, is_semiprime,
    is_semiprime_by_ideals, is_simple, DEFAULT_BUDGET,
};
use lieideal::enumerate::{all_ideals, all_lie_ideals, DEFAULT_LIMIT};
use lieideal::verify::{run_all, run_suite, Config, Suite};
use lieideal::{Algebra, AlgebraDefinition, CheckReport, Element, Error, Status, Subspace};

#[derive(Parser)]
#[command(
    name = "lieideal",
    version,
    about = "Lie ideals of finite algebras over GF(p)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Basic invariants and classification flags of an algebra.
    Info {
        /// `builtin:<spec>` or a path to a JSON definition.
        algebra: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List every Lie ideal or ideal.
    Enumerate {
        algebra: String,
        #[arg(long, value_enum, default_value_t = Kind::LieIdeals)]
        kind: Kind,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Which structural case a Lie ideal falls into.
    Classify {
        algebra: String,
        /// Spanning vectors as `v1;v2;...`, coordinates comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        lie_ideal: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite and report every check.
    Verify {
        algebra: String,
        /// `s2` through `s8`, or `all` for every applicable suite.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_power: usize,
        #[arg(long, default_value_t = 3)]
        max_factors: usize,
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run suites even when the algebra fails their hypotheses.
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    LieIdeals,
    Ideals,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::TheoremViolation(_) => 1,
        Error::BudgetExceeded { .. } | Error::LimitExceeded { .. } => 3,
        Error::NotLieIdeal { .. } => 4,
        Error::Unsupported(_) | Error::NotUnital | Error::NotCSubmodule => 5,
        _ => 2,
    }
}

fn load(spec: &str) -> Result<Algebra, Error> {
    if let Some(builtin) = spec.strip_prefix("builtin:") {
        return parse_builtin(builtin);
    }
    let text = fs::read_to_string(spec).map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
    AlgebraDefinition::from_json(&text)?.to_algebra()
}

fn parse_subspace(alg: &Algebra, text: &str) -> Result<Subspace, Error> {
    let mut gens: Vec<Element> = Vec::new();
    for part in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let coords = part
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad coordinate {c:?}")))
            })
            .collect::<Result<Vec<i64>, Error>>()?;
        gens.push(alg.element(&coords)?);
    }
    Ok(Subspace::spanned_by(alg.field(), alg.dim(), &gens))
}

fn tuple(coords: &[u32]) -> String {
    let parts: Vec<String> = coords.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

fn basis_json(s: &Subspace) -> Json {
    json!(s.rows())
}

/// Element test first, falling back to the ideal lattice when the element
/// scan is over budget. `None` when neither decides.
fn decide(
    alg: &Algebra,
    by_elements: fn(&Algebra, u128) -> lieideal::Result<bool>,
    by_ideals: fn(&Algebra, usize) -> lieideal::Result<bool>,
) -> Option<bool> {
    by_elements(alg, DEFAULT_BUDGET)
        .or_else(|_| by_ideals(alg, DEFAULT_LIMIT))
        .ok()
}

fn info(alg: &Algebra, format: Format) -> u8 {
    let z = center(alg);
    let full = alg.full_space();
    let rr = bracket_space(alg, &full, &full).expect("same algebra");
    let simple = is_simple(alg, DEFAULT_BUDGET).ok();
    let flags = [
        ("commutative", Some(alg.is_commutative())),
        ("unital", Some(alg.is_unital())),
        (
            "semiprime",
            decide(alg, is_semiprime, is_semiprime_by_ideals),
        ),
        ("prime", decide(alg, is_prime, is_prime_by_ideals)),
        ("simple", simple),
        ("exceptional", Some(is_exceptional(alg).unwrap_or(false))),
    ];
    let c_dim = dim_over_c(alg, &full).ok();
    let unity = alg.unity().map(|u| u.coords().to_vec());

    if format == Format::Json {
        let mut out =
            serde_json::to_value(AlgebraDefinition::from_algebra(alg)).expect("serializes");
        let info = out.as_object_mut().expect("object");
        info.insert("characteristic".into(), json!(alg.p()));
        info.insert("unity".into(), json!(unity));
        info.insert("center".into(), basis_json(&z));
        info.insert("dim_over_center".into(), json!(c_dim));
        info.insert("commutator_dim".into(), json!(rr.dim()));
        let flags: serde_json::Map<String, Json> = flags
            .iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect();
        info.insert("flags".into(), Json::Object(flags));
        println!("{out}");
        return 0;
    }

    let mut out = String::new();
    let _ = writeln!(out, "algebra: {}", alg.name());
    let _ = writeln!(out, "dim: {}", alg.dim());
    let _ = writeln!(out, "characteristic: {}", alg.p());
    let _ = writeln!(
        out,
        "unity: {}",
        unity.as_deref().map_or("none".into(), tuple)
    );
    let rows: Vec<String> = z.rows().iter().map(|r| tuple(r)).collect();
    let _ = writeln!(out, "center: dim {} basis [{}]", z.dim(), rows.join(" "));
    if let Some(d) = c_dim {
        let _ = writeln!(out, "dim over center: {d}");
    }
    let _ = writeln!(out, "commutator space dim: {}", rr.dim());
    for (name, value) in flags {
        let shown = value.map_or("unknown".to_string(), |v| v.to_string());
        let _ = writeln!(out, "{name}={shown}");
    }
    print!("{out}");
    0
}

fn enumerate(alg: &Algebra, kind: Kind, limit: usize, format: Format) -> u8 {
    let found = match kind {
        Kind::LieIdeals => all_lie_ideals(alg, limit),
        Kind::Ideals => all_ideals(alg, limit),
    };
    let list = match found {
        Ok(list) => list,
        Err(e) => {
            if let Error::LimitExceeded { count, .. } = e {
                println!("partial count: {count}");
            }
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    if format == Format::Json {
        let bases: Vec<Json> = list.iter().map(basis_json).collect();
        println!(
            "{}",
            json!({ "algebra": alg.name(), "count": list.len(), "bases": bases })
        );
    } else {
        println!("count: {}", list.len());
        for s in &list {
            let rows: Vec<String> = s.rows().iter().map(|r| tuple(r)).collect();
            println!("dim {}: [{}]", s.dim(), rows.join(" "));
        }
    }
    0
}

fn classify(alg: &Algebra, lie_ideal: &str, format: Format) -> Result<u8, Error> {
    let l = parse_subspace(alg, lie_ideal)?;
    let class = match classify_lie_ideal(alg, &l) {
        Ok(c) => c,
        Err(e @ Error::NotLieIdeal { .. }) => {
            if let Error::NotLieIdeal {
                element,
                basis,
                bracket,
            } = &e
            {
                println!(
                    "not a Lie ideal: [{}, e{basis}] = {} is outside the subspace",
                    tuple(element),
                    tuple(bracket)
                );
            }
            return Err(e);
        }
        Err(e) => return Err(e),
    };
    let labels: Vec<&str> = class.flags.iter().map(|f| f.label()).collect();
    let witness = class.plane_witness.as_ref().map(|w| w.coords().to_vec());
    if format == Format::Json {
        println!("{}", json!({ "flags": labels, "plane_witness": witness }));
    } else {
        println!("flags: {}", labels.join(" "));
        if let Some(w) = witness {
            println!("witness: {}", tuple(&w));
        }
    }
    Ok(0)
}

fn verify(alg: &Algebra, suite: &str, config: &Config, format: Format) -> Result<u8, Error> {
    let reports: Vec<CheckReport> = if suite == "all" {
        run_all(alg, config)
    } else {
        let s = Suite::parse(suite).ok_or_else(|| {
            Error::Parse(format!("unknown suite {suite:?}; expected s2..s8 or all"))
        })?;
        run_suite(alg, s, config)
    };
    for r in &reports {
        match format {
            Format::Json => println!("{}", r.to_json_line()),
            Format::Text => println!("{r}"),
        }
    }
    Ok(u8::from(reports.iter().any(|r| r.status == Status::Fail)))
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Info { algebra, format } => Ok(info(&load(&algebra)?, format)),
        Command::Enumerate {
            algebra,
            kind,
            limit,
            format,
        } => Ok(enumerate(&load(&algebra)?, kind, limit, format)),
        Command::Classify {
            algebra,
            lie_ideal,
            format,
        } => classify(&load(&algebra)?, &lie_ideal, format),
        Command::Verify {
            algebra,
            suite,
            max_power,
            max_factors,
            samples,
            limit,
            seed,
            force,
            format,
        } => {
            let config = Config {
                max_power,
                max_factors,
                samples,
                limit,
                seed,
                force,
                ..Config::default()
            };
            verify(&load(&algebra)?, &suite, &config, format)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
