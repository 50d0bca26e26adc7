//! Statements about semiprime rings.

use super::context::as_result;
use super::{fails, implication, Check, CheckReport, Ctx, Instance, Outcome, Value};
use crate::calc::centralizer;
use crate::error::Result;

pub(super) const CHECKS: &[Check] = &[
    Check {
        id: "centralizer_of_power_centralizes",
        eval: centralizer_of_power_centralizes,
    },
    Check {
        id: "central_power_forces_central",
        eval: central_power_forces_central,
    },
    Check {
        id: "commuting_powers_force_commuting",
        eval: commuting_powers_force_commuting,
    },
    Check {
        id: "commuting_commutator_powers_force_commutative",
        eval: commuting_commutator_powers_force_commutative,
    },
    Check {
        id: "nonabelian_power_contains_ideal",
        eval: nonabelian_power_contains_ideal,
    },
    Check {
        id: "centralizer_of_commutators_is_center",
        eval: centralizer_of_commutators_is_center,
    },
    Check {
        id: "noncommuting_element_multiples_contain_ideal",
        eval: noncommuting_element_multiples_contain_ideal,
    },
];

/// `[a, L^m] = 0` implies `[a, L] = 0`: the centralizer of `L^m` lies in
/// that of `L`. Checking a basis suffices since centralizing is linear.
fn centralizer_of_power_centralizes(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let l = inst.subspace("L")?;
    let m = inst.usize("m")?;
    let cm = centralizer(ctx.alg, &ctx.power(l, m));
    if cm.is_within(&ctx.center) {
        return Ok(Outcome::Vacuous);
    }
    Ok(
        match cm.rows().iter().find(|a| {
            l.rows()
                .iter()
                .any(|x| ctx.alg.bracket_raw(a, x).iter().any(|&c| c != 0))
        }) {
            None => Outcome::Holds,
            Some(a) => fails("does_not_centralize", format!("a = {a:?}")),
        },
    )
}

/// `L^m ⊆ Z(R)` implies `L ⊆ Z(R)`.
fn central_power_forces_central(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let l = inst.subspace("L")?;
    let m = inst.usize("m")?;
    Ok(implication(
        "noncentral",
        ctx.is_central(&ctx.power(l, m)),
        ctx.is_central(l),
        || format!("L^{m} central, L = {l:?} is not"),
    ))
}

/// `[K^m, L^n] = 0` implies `[K, L] = 0`.
fn commuting_powers_force_commuting(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let k = inst.subspace("K")?;
    let l = inst.subspace("L")?;
    let m = inst.usize("m")?;
    let n = inst.usize("n")?;
    Ok(implication(
        "do_not_commute",
        ctx.commute(&ctx.power(k, m), &ctx.power(l, n)),
        ctx.commute(k, l),
        || format!("[K,L] = {:?}", ctx.bracket(k, l)),
    ))
}

/// `[[R,R]^m, [R,R]^n] = 0` implies `R` is commutative.
fn commuting_commutator_powers_force_commutative(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let m = inst.usize("m")?;
    let n = inst.usize("n")?;
    let rr = &ctx.commutators;
    Ok(implication(
        "noncommutative",
        ctx.commute(&ctx.power(rr, m), &ctx.power(rr, n)),
        ctx.alg.is_commutative(),
        || "powers of [R,R] commute in a noncommutative ring".into(),
    ))
}

/// `L` nonabelian implies `0 != R~[L^(m-1), L^m]R~ ⊆ L^m`.
fn nonabelian_power_contains_ideal(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let l = inst.subspace("L")?;
    let m = inst.usize("m")?;
    if ctx.commute(l, l) {
        return Ok(Outcome::Vacuous);
    }
    let lm = ctx.power(l, m);
    let ideal = ctx.ideal(&ctx.bracket(&ctx.power(l, m - 1), &lm));
    Ok(if ideal.is_zero() {
        fails("zero_ideal", "R~[L^(m-1), L^m]R~ = 0")
    } else if !ideal.is_within(&lm) {
        fails("ideal_not_in_power", format!("ideal {ideal:?}, L^m {lm:?}"))
    } else {
        Outcome::Holds
    })
}

/// `[a, [R,R]] = 0` forces `a ∈ Z(R)`.
fn centralizer_of_commutators_is_center(ctx: &Ctx, _inst: &Instance) -> Result<Outcome> {
    let c = centralizer(ctx.alg, &ctx.commutators);
    Ok(if c == ctx.center {
        Outcome::Holds
    } else {
        fails("larger_than_center", format!("centralizer {c:?}"))
    })
}

/// `a ∈ L` with `[a, L] != 0` makes `L + aL` contain a nonzero ideal.
fn noncommuting_element_multiples_contain_ideal(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let l = inst.subspace("L")?;
    let a = inst.element("a")?;
    let hyp = !ctx.commute(&ctx.span1(a), l);
    Ok(implication(
        "no_ideal",
        hyp,
        !ctx.core(&ctx.plus_multiple(l, a)).is_zero(),
        || format!("L + aL = {:?}", ctx.plus_multiple(l, a)),
    ))
}

pub(super) fn run(ctx: &Ctx) -> Vec<CheckReport> {
    let lie = match as_result(ctx.lie_ideals()) {
        Ok(l) => l,
        Err(e) => return ctx.skip_all(CHECKS, &e.to_string()),
    };
    let max = ctx.config.max_power;
    let mut out = Vec::new();
    let with_power = |from: usize| -> Vec<Instance> {
        lie.iter()
            .flat_map(|l| {
                (from..=max)
                    .map(move |m| super::lie_ideal_instance(l).with("m", Value::Int(m as i64)))
            })
            .collect()
    };
    out.push(ctx.run(&CHECKS[0], &with_power(2), 0));
    out.push(ctx.run(&CHECKS[1], &with_power(1), 0));

    let (pairs, cut) = ctx.sequences(lie, 2..=2);
    let exps: Vec<(usize, usize)> = (1..=max)
        .flat_map(|m| (1..=max).map(move |n| (m, n)))
        .collect();
    let pair_powers: Vec<Instance> = pairs
        .iter()
        .flat_map(|p| {
            exps.iter().map(move |&(m, n)| {
                Instance::new()
                    .with("K", Value::Subspace(p[0].clone()))
                    .with("L", Value::Subspace(p[1].clone()))
                    .with("m", Value::Int(m as i64))
                    .with("n", Value::Int(n as i64))
            })
        })
        .collect();
    out.push(ctx.run(&CHECKS[2], &pair_powers, cut * exps.len() as u64));

    let rr: Vec<Instance> = exps
        .iter()
        .map(|&(m, n)| {
            Instance::new()
                .with("m", Value::Int(m as i64))
                .with("n", Value::Int(n as i64))
        })
        .collect();
    out.push(ctx.run(&CHECKS[3], &rr, 0));
    out.push(ctx.run(&CHECKS[4], &with_power(2), 0));
    out.push(ctx.run(&CHECKS[5], &[Instance::new()], 0));

    let multiples: Vec<Instance> = lie
        .iter()
        .flat_map(|l| {
            ctx.elements_of(l, CHECKS[6].id)
                .into_iter()
                .map(move |a| super::lie_ideal_instance(l).with("a", Value::Element(a)))
        })
        .collect();
    out.push(ctx.run(&CHECKS[6], &multiples, 0));
    out
}
