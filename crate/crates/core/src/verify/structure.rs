//! Lie ideal structure of simple rings and the exceptional case.

use super::context::as_result;
use super::{equivalence, fails, implication, Check, CheckReport, Ctx, Instance, Outcome, Value};
use crate::calc::is_lie_ideal;
use crate::classify::{classify_lie_ideal, nested_commutators_central};
use crate::error::{Error, Result};

pub(crate) const ABELIAN_EQUIVALENCES: &str = "abelian_iff_plane_iff_c_dim_two";
pub(crate) const PLANE_CRITERION: &str = "plane_lie_ideals_iff_exceptional";
pub(crate) const PLANE_IFF_BRACKET_SPAN: &str = "plane_lie_ideal_iff_bracket_span";

/// Pair checks scan every pair up to this many, else draw random pairs.
const EXHAUSTIVE_PAIRS: usize = 1 << 16;
const RANDOM_PAIRS: usize = 500;

pub(super) const CHECKS: &[Check] = &[
    Check {
        id: ABELIAN_EQUIVALENCES,
        eval: abelian_equivalences,
    },
    Check {
        id: "bracket_span_exceeds_one_c_dim",
        eval: bracket_span_exceeds_one_c_dim,
    },
    Check {
        id: "power_contains_ideal_unless_plane",
        eval: power_contains_ideal_unless_plane,
    },
    Check {
        id: PLANE_CRITERION,
        eval: plane_criterion,
    },
    Check {
        id: PLANE_IFF_BRACKET_SPAN,
        eval: plane_iff_bracket_span,
    },
    Check {
        id: "lie_ideal_trichotomy",
        eval: lie_ideal_trichotomy,
    },
    Check {
        id: "exceptional_iff_nested_commutators_central",
        eval: exceptional_iff_nested_commutators_central,
    },
    Check {
        id: "central_bracket_implies_commutators",
        eval: central_bracket_implies_commutators,
    },
];

/// For noncentral `L`: `[L,L] = 0` iff (`R` exceptional and
/// `LC = [a,R]C = Ca + C` for every noncentral `a ∈ L`) iff `dim_C LC = 2`.
fn abelian_equivalences(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let l = inst.subspace("L")?;
    if ctx.is_central(l) {
        return Ok(Outcome::Vacuous);
    }
    let info = ctx.info(l);
    let planes = ctx.exceptional()
        && l.elements()
            .filter(|a| !ctx.is_central_element(a))
            .all(|a| {
                let plane = ctx.plane(&a);
                plane == info.lc && ctx.c_span(&ctx.with_algebra(&ctx.span1(&a))) == plane
            });
    Ok(equivalence(
        "abelian_sides_disagree",
        &[
            ("abelian", info.abelian),
            ("exceptional_plane", planes),
            ("c_dim_two", info.c_dim == 2),
        ],
    ))
}

/// `dim_C [a, R]C > 1` for noncentral `a`.
fn bracket_span_exceeds_one_c_dim(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let a = inst.element("a")?;
    if ctx.is_central_element(a) {
        return Ok(Outcome::Vacuous);
    }
    let span = ctx.c_span(&ctx.with_algebra(&ctx.span1(a)));
    let d = ctx.c_dim(&span);
    Ok(if d > 1 {
        Outcome::Holds
    } else {
        fails("bracket_span_too_small", format!("dim_C [a,R]C = {d}"))
    })
}

/// For noncentral `L` and `k > 1`: `L^k` contains a nonzero ideal exactly
/// when `dim_C LC != 2`.
fn power_contains_ideal_unless_plane(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let l = inst.subspace("L")?;
    let k = inst.usize("k")?;
    if ctx.is_central(l) {
        return Ok(Outcome::Vacuous);
    }
    let has_ideal = !ctx.core(&ctx.power(l, k)).is_zero();
    let plane = ctx.info(l).c_dim == 2;
    Ok(match (has_ideal, plane) {
        (true, false) | (false, true) => Outcome::Holds,
        (true, true) => fails("plane_power_contains_ideal", format!("L = {l:?}")),
        (false, false) => fails("power_without_ideal", format!("L = {l:?}")),
    })
}

/// `Ca + C` is a Lie ideal for every `a ∈ [R,R] \ Z(R)` iff `R` is
/// exceptional.
fn plane_criterion(ctx: &Ctx, _inst: &Instance) -> Result<Outcome> {
    let all = ctx
        .elements_of(&ctx.commutators, PLANE_CRITERION)
        .iter()
        .filter(|a| !ctx.is_central_element(a))
        .all(|a| is_lie_ideal(ctx.alg, &ctx.plane(a)));
    Ok(equivalence(
        "criterion_disagrees",
        &[
            ("planes_are_lie_ideals", all),
            ("exceptional", ctx.exceptional()),
        ],
    ))
}

/// For noncentral `a`: `Ca + C` is a Lie ideal iff `[a, R]C = Ca + C`.
fn plane_iff_bracket_span(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let a = inst.element("a")?;
    if ctx.is_central_element(a) {
        return Ok(Outcome::Vacuous);
    }
    let plane = ctx.plane(a);
    Ok(equivalence(
        "plane_sides_disagree",
        &[
            ("plane_is_lie_ideal", is_lie_ideal(ctx.alg, &plane)),
            (
                "bracket_span_is_plane",
                ctx.c_span(&ctx.with_algebra(&ctx.span1(a))) == plane,
            ),
        ],
    ))
}

/// Every Lie ideal is central, equals `Z(R)a + Z(R)`, or contains `[R,R]`.
fn lie_ideal_trichotomy(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let l = inst.subspace("L")?;
    match classify_lie_ideal(ctx.alg, l) {
        Ok(_) => Ok(Outcome::Holds),
        Err(Error::TheoremViolation(detail)) => Ok(fails("no_case_applies", detail)),
        Err(e) => Err(e),
    }
}

/// `0 != [[R,R],[R,R]] ⊆ Z(R)` iff `R` is exceptional.
fn exceptional_iff_nested_commutators_central(ctx: &Ctx, _inst: &Instance) -> Result<Outcome> {
    Ok(equivalence(
        "criterion_disagrees",
        &[
            (
                "nested_commutators_central",
                nested_commutators_central(ctx.alg),
            ),
            ("exceptional", ctx.exceptional()),
        ],
    ))
}

/// In an exceptional ring, `0 != [a,b] ∈ Z(R)` forces `a, b ∈ [R,R]`.
fn central_bracket_implies_commutators(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let a = inst.element("a")?;
    let b = inst.element("b")?;
    let ab = ctx.alg.commutator(a, b);
    let rr = ctx.c_span(&ctx.commutators);
    Ok(implication(
        "outside_commutators",
        !ab.is_zero() && ctx.is_central_element(&ab),
        rr.contains(a) && rr.contains(b),
        || format!("[a,b] = {ab:?}"),
    ))
}

pub(super) fn run(ctx: &Ctx) -> Vec<CheckReport> {
    let lie = match as_result(ctx.lie_ideals()) {
        Ok(l) => l,
        Err(e) => return ctx.skip_all(CHECKS, &e.to_string()),
    };
    let noncentral: Vec<_> = lie.iter().filter(|l| !ctx.is_central(l)).collect();
    let mut out = Vec::new();

    let per_l: Vec<Instance> = noncentral
        .iter()
        .map(|l| super::lie_ideal_instance(l))
        .collect();
    out.push(ctx.run(&CHECKS[0], &per_l, 0));

    let elements: Vec<Instance> = ctx
        .element_family(CHECKS[1].id)
        .into_iter()
        .map(|a| Instance::new().with("a", Value::Element(a)))
        .collect();
    out.push(ctx.run(&CHECKS[1], &elements, 0));

    let powers: Vec<Instance> = noncentral
        .iter()
        .flat_map(|l| {
            (2..=ctx.config.max_power.max(2))
                .map(move |k| super::lie_ideal_instance(l).with("k", Value::Int(k as i64)))
        })
        .collect();
    out.push(ctx.run(&CHECKS[2], &powers, 0));
    out.push(ctx.run(&CHECKS[3], &[Instance::new()], 0));
    out.push(ctx.run(&CHECKS[4], &elements, 0));

    let all_l: Vec<Instance> = lie.iter().map(super::lie_ideal_instance).collect();
    out.push(ctx.run(&CHECKS[5], &all_l, 0));
    out.push(ctx.run(&CHECKS[6], &[Instance::new()], 0));

    if ctx.exceptional() {
        let pair = |a, b| {
            Instance::new()
                .with("a", Value::Element(a))
                .with("b", Value::Element(b))
        };
        let family = ctx.element_family(CHECKS[7].id);
        let pairs: Vec<Instance> = if family.len() * family.len() <= EXHAUSTIVE_PAIRS {
            family
                .iter()
                .flat_map(|a| family.iter().map(move |b| pair(a.clone(), b.clone())))
                .collect()
        } else {
            let mut rng = ctx.rng(CHECKS[7].id);
            (0..RANDOM_PAIRS)
                .map(|_| pair(ctx.random_element(&mut rng), ctx.random_element(&mut rng)))
                .collect()
        };
        out.push(ctx.run(&CHECKS[7], &pairs, 0));
    } else {
        out.push(ctx.skip(&CHECKS[7], "not exceptional"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix_algebra;
    use crate::verify::{run_suite, Config, Status, Suite};

    #[test]
    fn passes_on_small_matrix_rings() {
        for (n, p) in [(2, 2), (2, 3)] {
            let m = matrix_algebra(n, p).unwrap();
            for r in run_suite(&m, Suite::Structure, &Config::default()) {
                assert_ne!(r.status, Status::Fail, "{r}");
            }
        }
    }

    #[test]
    fn pair_check_only_runs_on_exceptional_rings() {
        let m = matrix_algebra(2, 3).unwrap();
        let reports = run_suite(&m, Suite::Structure, &Config::default());
        let r = reports.iter().find(|r| r.check == CHECKS[7].id).unwrap();
        assert_eq!(r.status, Status::Skipped);
        let m = matrix_algebra(2, 2).unwrap();
        let reports = run_suite(&m, Suite::Structure, &Config::default());
        let r = reports.iter().find(|r| r.check == CHECKS[7].id).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!(r.effective() > 0);
    }
}
