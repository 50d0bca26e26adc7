//! Theorem suites: each statement becomes a check quantified over
//! enumerated or sampled instances, reported with a re-checkable witness on
//! failure.

mod centralizers;
mod commutators;
mod context;
mod identities;
mod instance;
mod multiples;
mod products;
mod semiprime;
mod structure;

use std::fmt;

use serde_json::json;

use crate::algebra::Algebra;
use crate::classify;
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::par::{self, Exec};
pub use crate::report::{CheckReport, Status};

pub(crate) use context::Ctx;
pub use instance::{Instance, Value};

pub(crate) use structure::{ABELIAN_EQUIVALENCES, PLANE_CRITERION, PLANE_IFF_BRACKET_SPAN};

#[derive(Clone, Debug)]
pub struct Config {
    pub max_power: usize,
    pub max_factors: usize,
    /// Element samples per instance family when exhaustive scans are too big.
    pub samples: usize,
    /// Enumeration limit for Lie ideals and ideals.
    pub limit: usize,
    pub seed: u64,
    pub exec: Exec,
    /// Maximum instances per tuple-quantified check; the rest are counted
    /// as skipped.
    pub tuple_cap: u64,
    pub element_budget: u128,
    /// Run suites even when the algebra fails their hypotheses.
    pub force: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_power: 3,
            max_factors: 3,
            samples: 64,
            limit: crate::enumerate::DEFAULT_LIMIT,
            seed: 0,
            exec: Exec::default(),
            tuple_cap: 100_000,
            element_budget: classify::DEFAULT_BUDGET,
            force: false,
        }
    }
}

/// Families of elements are scanned exhaustively up to this size.
pub const EXHAUSTIVE_ELEMENTS: u128 = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    /// Identities valid in every ring (`s2`).
    Identities,
    /// Semiprime rings (`s3`).
    Semiprime,
    /// Lie ideal structure of simple rings (`s4`).
    Structure,
    /// When `L + aL` contains a nonzero ideal (`s5`).
    Multiples,
    /// Commuting Lie ideals and their powers (`s6`).
    Commutators,
    /// Products of Lie ideals (`s7`).
    Products,
    /// Centralizers of Lie ideals and their products (`s8`).
    Centralizers,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Identities,
        Suite::Semiprime,
        Suite::Structure,
        Suite::Multiples,
        Suite::Commutators,
        Suite::Products,
        Suite::Centralizers,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "s2",
            Suite::Semiprime => "s3",
            Suite::Structure => "s4",
            Suite::Multiples => "s5",
            Suite::Commutators => "s6",
            Suite::Products => "s7",
            Suite::Centralizers => "s8",
        }
    }

    pub fn parse(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    fn checks(self) -> &'static [Check] {
        match self {
            Suite::Identities => identities::CHECKS,
            Suite::Semiprime => semiprime::CHECKS,
            Suite::Structure => structure::CHECKS,
            Suite::Multiples => multiples::CHECKS,
            Suite::Commutators => commutators::CHECKS,
            Suite::Products => products::CHECKS,
            Suite::Centralizers => centralizers::CHECKS,
        }
    }

    pub fn check_ids(self) -> Vec<&'static str> {
        self.checks().iter().map(|c| c.id).collect()
    }

    fn body(self) -> fn(&Ctx) -> Vec<CheckReport> {
        match self {
            Suite::Identities => identities::run,
            Suite::Semiprime => semiprime::run,
            Suite::Structure => structure::run,
            Suite::Multiples => multiples::run,
            Suite::Commutators => commutators::run,
            Suite::Products => products::run,
            Suite::Centralizers => centralizers::run,
        }
    }

    /// Why the suite does not apply, if it does not.
    fn refusal(self, ctx: &Ctx) -> Option<String> {
        let alg = ctx.alg;
        match self {
            Suite::Identities => None,
            Suite::Semiprime => match classify::is_semiprime(alg, ctx.config.element_budget) {
                Ok(true) => None,
                Ok(false) => Some("not semiprime".into()),
                Err(e) => Some(e.to_string()),
            },
            _ => classify::require_noncommutative_simple(alg)
                .err()
                .map(|e| e.to_string()),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub(crate) enum Outcome {
    Holds,
    Vacuous,
    Fails { kind: &'static str, detail: String },
}

pub(crate) fn fails(kind: &'static str, detail: impl Into<String>) -> Outcome {
    Outcome::Fails {
        kind,
        detail: detail.into(),
    }
}

/// Outcome of an equivalence: vacuous when every side is false, failing
/// with `kind` when the sides disagree.
pub(crate) fn equivalence(kind: &'static str, sides: &[(&str, bool)]) -> Outcome {
    if sides.iter().all(|s| s.1) {
        Outcome::Holds
    } else if sides.iter().all(|s| !s.1) {
        Outcome::Vacuous
    } else {
        let listing: Vec<String> = sides.iter().map(|(n, v)| format!("{n}={v}")).collect();
        fails(kind, listing.join(", "))
    }
}

pub(crate) fn implication(
    kind: &'static str,
    hypothesis: bool,
    conclusion: bool,
    detail: impl FnOnce() -> String,
) -> Outcome {
    match (hypothesis, conclusion) {
        (false, _) => Outcome::Vacuous,
        (true, true) => Outcome::Holds,
        (true, false) => fails(kind, detail()),
    }
}

pub(crate) type Eval = fn(&Ctx, &Instance) -> Result<Outcome>;

pub(crate) struct Check {
    pub id: &'static str,
    pub eval: Eval,
}

fn find_check(id: &str) -> Option<(Suite, &'static Check)> {
    Suite::ALL
        .into_iter()
        .find_map(|s| s.checks().iter().find(|c| c.id == id).map(|c| (s, c)))
}

impl Ctx<'_> {
    /// Evaluates `check` on every instance; the first failure in instance
    /// order becomes the witness.
    pub(crate) fn run(&self, check: &Check, instances: &[Instance], skipped: u64) -> CheckReport {
        let outcomes = par::map_slice(self.config.exec, instances, |inst| (check.eval)(self, inst));
        let mut report = CheckReport {
            check: check.id.to_string(),
            algebra: self.alg.name().to_string(),
            status: Status::Pass,
            instances: instances.len() as u64,
            vacuous: 0,
            skipped,
            witness: None,
            reason: None,
        };
        for (index, (inst, outcome)) in instances.iter().zip(outcomes).enumerate() {
            let (kind, detail) = match outcome {
                Ok(Outcome::Holds) => continue,
                Ok(Outcome::Vacuous) => {
                    report.vacuous += 1;
                    continue;
                }
                Ok(Outcome::Fails { kind, detail }) => (kind, detail),
                Err(e) => ("evaluation_error", e.to_string()),
            };
            if report.witness.is_none() {
                report.status = Status::Fail;
                report.witness = Some(json!({
                    "index": index,
                    "kind": kind,
                    "detail": detail,
                    "instance": inst.to_json(),
                }));
            }
        }
        report
    }

    pub(crate) fn skip(&self, check: &Check, reason: impl Into<String>) -> CheckReport {
        CheckReport::skipped(check.id, self.alg.name(), reason)
    }

    pub(crate) fn skip_all(&self, checks: &[Check], reason: &str) -> Vec<CheckReport> {
        checks.iter().map(|c| self.skip(c, reason)).collect()
    }
}

/// Runs one suite, or reports every check of it as skipped when the
/// algebra fails the suite's hypotheses.
pub fn run_suite(alg: &Algebra, suite: Suite, config: &Config) -> Vec<CheckReport> {
    let ctx = Ctx::new(alg, config.clone());
    run_in(&ctx, suite)
}

fn run_in(ctx: &Ctx, suite: Suite) -> Vec<CheckReport> {
    if !ctx.config.force {
        if let Some(reason) = suite.refusal(ctx) {
            return ctx.skip_all(suite.checks(), &reason);
        }
    }
    (suite.body())(ctx)
}

/// Every suite whose hypotheses the algebra satisfies: identities always,
/// the semiprime suite for semiprime algebras, the rest for simple unital
/// noncommutative algebras.
pub fn run_all(alg: &Algebra, config: &Config) -> Vec<CheckReport> {
    let ctx = Ctx::new(alg, config.clone());
    let mut out = Vec::new();
    for suite in Suite::ALL {
        if config.force || suite.refusal(&ctx).is_none() {
            out.extend(run_in(&ctx, suite));
        }
    }
    out
}

/// Suites that `run_all` would run.
pub fn applicable_suites(alg: &Algebra, config: &Config) -> Vec<Suite> {
    let ctx = Ctx::new(alg, config.clone());
    Suite::ALL
        .into_iter()
        .filter(|s| s.refusal(&ctx).is_none())
        .collect()
}

/// Re-runs the failing instance recorded in a report's witness, from its
/// serialized form alone. Returns whether it still fails.
pub fn reevaluate(alg: &Algebra, report: &CheckReport) -> Result<bool> {
    let witness = report
        .witness
        .as_ref()
        .ok_or_else(|| Error::InvalidParameter("report has no witness".into()))?;
    let (_, check) = find_check(&report.check)
        .ok_or_else(|| Error::InvalidParameter(format!("unknown check {:?}", report.check)))?;
    let instance = Instance::from_json(alg, &witness["instance"])?;
    let ctx = Ctx::new(alg, Config::default());
    Ok(matches!(
        (check.eval)(&ctx, &instance)?,
        Outcome::Fails { .. }
    ))
}

pub(crate) fn run_single(alg: &Algebra, id: &str, instance: Instance) -> Result<CheckReport> {
    let (_, check) = find_check(id).expect("registered check");
    let ctx = Ctx::new(alg, Config::default());
    Ok(ctx.run(check, &[instance], 0))
}

/// Runs an element-quantified check over the default element family.
pub(crate) fn run_element_check(alg: &Algebra, id: &str) -> Result<CheckReport> {
    let (_, check) = find_check(id).expect("registered check");
    let ctx = Ctx::new(alg, Config::default());
    let instances: Vec<Instance> = ctx
        .element_family(id)
        .into_iter()
        .map(|a| Instance::new().with("a", Value::Element(a)))
        .collect();
    Ok(ctx.run(check, &instances, 0))
}

pub(crate) fn lie_ideal_instance(l: &Subspace) -> Instance {
    Instance::new().with("L", Value::Subspace(l.clone()))
}

pub(crate) fn empty_instance() -> Instance {
    Instance::new()
}
