//! Commuting Lie ideals and their powers.

use super::context::as_result;
use super::{equivalence, fails, implication, Check, CheckReport, Ctx, Instance, Outcome, Value};
use crate::error::Result;
use crate::linalg::Subspace;

pub(super) const CHECKS: &[Check] = &[
    Check {
        id: "powers_commute_iff_commute_iff_shared_plane",
        eval: powers_commute_iff_commute_iff_shared_plane,
    },
    Check {
        id: "exceptional_has_commuting_noncentral_pairs",
        eval: exceptional_has_commuting_noncentral_pairs,
    },
    Check {
        id: "central_bracket_iff_within_commutators",
        eval: central_bracket_iff_within_commutators,
    },
    Check {
        id: "nested_power_bracket_zero_forces_planes",
        eval: nested_power_bracket_zero_forces_planes,
    },
];

/// `KC = LC = Ca + C` for every noncentral `a ∈ L`, in an exceptional ring.
fn shared_plane(ctx: &Ctx, k: &Subspace, l: &Subspace) -> bool {
    ctx.exceptional() && ctx.info(l).plane_all && ctx.info(k).lc == ctx.info(l).lc
}

/// For noncentral `K, L`: `[K^m, L^n] = 0` iff `[K, L] = 0` iff `R` is
/// exceptional and `KC = LC = Ca + C` for every noncentral `a ∈ L`.
fn powers_commute_iff_commute_iff_shared_plane(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let k = inst.subspace("K")?;
    let l = inst.subspace("L")?;
    let m = inst.usize("m")?;
    let n = inst.usize("n")?;
    Ok(equivalence(
        "commuting_sides_disagree",
        &[
            (
                "powers_commute",
                ctx.commute(&ctx.power(k, m), &ctx.power(l, n)),
            ),
            ("commute", ctx.commute(k, l)),
            ("shared_plane", shared_plane(ctx, k, l)),
        ],
    ))
}

/// An exceptional ring has two noncentral Lie ideals that commute.
fn exceptional_has_commuting_noncentral_pairs(ctx: &Ctx, _inst: &Instance) -> Result<Outcome> {
    let lie = as_result(ctx.noncentral_lie_ideals())?;
    let found = lie.iter().any(|k| lie.iter().any(|l| ctx.commute(k, l)));
    Ok(implication(
        "no_commuting_pair",
        ctx.exceptional(),
        found,
        || format!("{} noncentral Lie ideals, none commute", lie.len()),
    ))
}

/// In an exceptional ring, for noncentral `K, L`: `[K, L] ⊆ Z(R)` iff
/// `KC, LC ⊆ [R,R]C`.
fn central_bracket_iff_within_commutators(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let k = inst.subspace("K")?;
    let l = inst.subspace("L")?;
    let rr = ctx.c_span(&ctx.commutators);
    Ok(equivalence(
        "central_bracket_sides_disagree",
        &[
            ("central_bracket", ctx.is_central(&ctx.bracket(k, l))),
            (
                "within_commutators",
                ctx.info(k).lc.is_within(&rr) && ctx.info(l).lc.is_within(&rr),
            ),
        ],
    ))
}

/// `[K^m, [L^s, N^t]] = 0` with `s, t > 1` forces an exceptional ring with
/// `dim_C KC >= 3 ⇒ dim_C LC = dim_C NC = 2` and
/// `dim_C KC = 2 ⇒ KC = LC, KC = NC, or dim_C LC = dim_C NC = 2`.
fn nested_power_bracket_zero_forces_planes(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let k = inst.subspace("K")?;
    let l = inst.subspace("L")?;
    let n = inst.subspace("N")?;
    let (m, s, t) = (inst.usize("m")?, inst.usize("s")?, inst.usize("t")?);
    let inner = ctx.bracket(&ctx.power(l, s), &ctx.power(n, t));
    if !ctx.commute(&ctx.power(k, m), &inner) {
        return Ok(Outcome::Vacuous);
    }
    if !ctx.exceptional() {
        return Ok(fails(
            "not_exceptional",
            "nested bracket vanishes in a non-exceptional ring",
        ));
    }
    let (ki, li, ni) = (ctx.info(k), ctx.info(l), ctx.info(n));
    let both_planes = li.c_dim == 2 && ni.c_dim == 2;
    let ok = if ki.c_dim >= 3 {
        both_planes
    } else {
        ki.lc == li.lc || ki.lc == ni.lc || both_planes
    };
    Ok(if ok {
        Outcome::Holds
    } else {
        fails(
            "dimension_dichotomy",
            format!(
                "dim_C KC = {}, LC = {}, NC = {}",
                ki.c_dim, li.c_dim, ni.c_dim
            ),
        )
    })
}

pub(super) fn run(ctx: &Ctx) -> Vec<CheckReport> {
    let lie = match as_result(ctx.noncentral_lie_ideals()) {
        Ok(l) => l,
        Err(e) => return ctx.skip_all(CHECKS, &e.to_string()),
    };
    let max = ctx.config.max_power;
    let mut out = Vec::new();

    let (pairs, cut) = ctx.sequences(&lie, 2..=2);
    let exps: Vec<(usize, usize)> = (1..=max)
        .flat_map(|m| (1..=max).map(move |n| (m, n)))
        .collect();
    let pair = |p: &[Subspace]| {
        Instance::new()
            .with("K", Value::Subspace(p[0].clone()))
            .with("L", Value::Subspace(p[1].clone()))
    };
    let powered: Vec<Instance> = pairs
        .iter()
        .flat_map(|p| {
            exps.iter().map(move |&(m, n)| {
                pair(p)
                    .with("m", Value::Int(m as i64))
                    .with("n", Value::Int(n as i64))
            })
        })
        .collect();
    out.push(ctx.run(&CHECKS[0], &powered, cut * exps.len() as u64));
    out.push(ctx.run(&CHECKS[1], &[Instance::new()], 0));

    if ctx.exceptional() {
        let plain: Vec<Instance> = pairs.iter().map(|p| pair(p)).collect();
        out.push(ctx.run(&CHECKS[2], &plain, cut));
    } else {
        out.push(ctx.skip(&CHECKS[2], "not exceptional"));
    }

    let (triples, cut) = ctx.sequences(&lie, 3..=3);
    let inner: Vec<(usize, usize)> = (2..=max)
        .flat_map(|s| (2..=max).map(move |t| (s, t)))
        .collect();
    let per_triple = max * inner.len();
    let nested: Vec<Instance> = triples
        .iter()
        .flat_map(|tr| {
            let inner = &inner;
            (1..=max).flat_map(move |m| {
                inner.iter().map(move |&(s, t)| {
                    Instance::new()
                        .with("K", Value::Subspace(tr[0].clone()))
                        .with("L", Value::Subspace(tr[1].clone()))
                        .with("N", Value::Subspace(tr[2].clone()))
                        .with("m", Value::Int(m as i64))
                        .with("s", Value::Int(s as i64))
                        .with("t", Value::Int(t as i64))
                })
            })
        })
        .collect();
    out.push(ctx.run(&CHECKS[3], &nested, cut * per_triple as u64));
    out
}
