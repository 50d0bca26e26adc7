//! Inclusions that hold in every ring.

use super::context::as_result;
use super::{fails, implication, Check, CheckReport, Ctx, Instance, Outcome, Value};
use crate::calc::{is_lie_ideal, subring_closure};
use crate::error::Result;

const RANDOM_SUBSPACES: usize = 50;
const RANDOM_ABELIAN: usize = 200;

pub(super) const CHECKS: &[Check] = &[
    Check {
        id: "bracket_ignores_subring_closure",
        eval: bracket_ignores_subring_closure,
    },
    Check {
        id: "ideal_of_lie_ideal_is_left_multiples",
        eval: ideal_of_lie_ideal_is_left_multiples,
    },
    Check {
        id: "power_commutator_ideal_in_power",
        eval: power_commutator_ideal_in_power,
    },
    Check {
        id: "bracket_with_commutator_ideal_in_lie_ideal",
        eval: bracket_with_commutator_ideal_in_lie_ideal,
    },
    Check {
        id: "commutator_ideal_in_lie_ideal_plus_square",
        eval: commutator_ideal_in_lie_ideal_plus_square,
    },
    Check {
        id: "brackets_and_products_are_lie_ideals",
        eval: brackets_and_products_are_lie_ideals,
    },
    Check {
        id: "abelian_complement_forces_commutators",
        eval: abelian_complement_forces_commutators,
    },
];

/// `[A, R] = [subring(A), R]`
fn bracket_ignores_subring_closure(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let a = inst.subspace("A")?;
    let closure = subring_closure(ctx.alg, a);
    if closure == *a {
        return Ok(Outcome::Vacuous);
    }
    let lhs = ctx.with_algebra(a);
    let rhs = ctx.with_algebra(&closure);
    Ok(if lhs == rhs {
        Outcome::Holds
    } else {
        fails(
            "spans_differ",
            format!("[A,R] = {lhs:?}, [closure,R] = {rhs:?}"),
        )
    })
}

/// `R~ L R~ = R~ L`
fn ideal_of_lie_ideal_is_left_multiples(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let l = inst.subspace("L")?;
    if l.is_zero() {
        return Ok(Outcome::Vacuous);
    }
    let full = ctx.alg.full_space();
    let left = l.join(&crate::calc::products(ctx.alg, &full, l));
    let ideal = ctx.ideal(l);
    Ok(if left == ideal {
        Outcome::Holds
    } else {
        fails("sides_differ", format!("R~L = {left:?}, ideal = {ideal:?}"))
    })
}

/// `I = R~[L^(m-1), L^m]R~ ⊆ L^m` and `[I, R] ⊆ L^m ∩ L`
fn power_commutator_ideal_in_power(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let l = inst.subspace("L")?;
    let m = inst.usize("m")?;
    let lm = ctx.power(l, m);
    let x = ctx.bracket(&ctx.power(l, m - 1), &lm);
    if x.is_zero() {
        return Ok(Outcome::Vacuous);
    }
    let ideal = ctx.ideal(&x);
    if !ideal.is_within(&lm) {
        return Ok(fails(
            "ideal_not_in_power",
            format!("ideal {ideal:?}, L^m {lm:?}"),
        ));
    }
    let br = ctx.with_algebra(&ideal);
    let meet = lm.meet(l);
    Ok(if br.is_within(&meet) {
        Outcome::Holds
    } else {
        fails("bracket_not_in_intersection", format!("[I,R] = {br:?}"))
    })
}

/// `[R, R~[L,L]R~] ⊆ L`
fn bracket_with_commutator_ideal_in_lie_ideal(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let l = inst.subspace("L")?;
    let ll = ctx.bracket(l, l);
    if ll.is_zero() {
        return Ok(Outcome::Vacuous);
    }
    let br = ctx.with_algebra(&ctx.ideal(&ll));
    Ok(if br.is_within(l) {
        Outcome::Holds
    } else {
        fails("not_in_lie_ideal", format!("[R,I] = {br:?}"))
    })
}

/// `R~[L,L]R~ ⊆ L + L^2`
fn commutator_ideal_in_lie_ideal_plus_square(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let l = inst.subspace("L")?;
    let ll = ctx.bracket(l, l);
    if ll.is_zero() {
        return Ok(Outcome::Vacuous);
    }
    let ideal = ctx.ideal(&ll);
    let bound = l.join(&ctx.power(l, 2));
    Ok(if ideal.is_within(&bound) {
        Outcome::Holds
    } else {
        fails(
            "not_in_sum",
            format!("ideal {ideal:?}, L + L^2 = {bound:?}"),
        )
    })
}

/// `[K, L]` and `KL` are Lie ideals.
fn brackets_and_products_are_lie_ideals(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let k = inst.subspace("K")?;
    let l = inst.subspace("L")?;
    if k.is_zero() || l.is_zero() {
        return Ok(Outcome::Vacuous);
    }
    let br = ctx.bracket(k, l);
    if !is_lie_ideal(ctx.alg, &br) {
        return Ok(fails("bracket_not_lie_ideal", format!("{br:?}")));
    }
    let pr = crate::calc::products(ctx.alg, k, l);
    Ok(if is_lie_ideal(ctx.alg, &pr) {
        Outcome::Holds
    } else {
        fails("product_not_lie_ideal", format!("{pr:?}"))
    })
}

/// `L + V = R` with `[V, V] = 0` forces `[R, R] ⊆ L`.
fn abelian_complement_forces_commutators(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let l = inst.subspace("L")?;
    let v = inst.subspace("V")?;
    if !ctx.commute(v, v) {
        return Ok(fails("not_abelian", "V is not commutative"));
    }
    Ok(implication(
        "commutators_not_in_lie_ideal",
        l.join(v).is_full(),
        ctx.commutators.is_within(l),
        || format!("[R,R] = {:?}", ctx.commutators),
    ))
}

pub(super) fn run(ctx: &Ctx) -> Vec<CheckReport> {
    let lie = match as_result(ctx.lie_ideals()) {
        Ok(l) => l,
        Err(e) => return ctx.skip_all(CHECKS, &e.to_string()),
    };
    let mut out = Vec::new();

    let mut rng = ctx.rng(CHECKS[0].id);
    let random: Vec<Instance> = (0..RANDOM_SUBSPACES)
        .map(|_| Instance::new().with("A", Value::Subspace(ctx.random_subspace(&mut rng))))
        .collect();
    out.push(ctx.run(&CHECKS[0], &random, 0));

    let per_l: Vec<Instance> = lie.iter().map(super::lie_ideal_instance).collect();
    out.push(ctx.run(&CHECKS[1], &per_l, 0));

    let powers: Vec<Instance> = lie
        .iter()
        .flat_map(|l| {
            (2..=ctx.config.max_power)
                .map(move |m| super::lie_ideal_instance(l).with("m", Value::Int(m as i64)))
        })
        .collect();
    out.push(ctx.run(&CHECKS[2], &powers, 0));
    out.push(ctx.run(&CHECKS[3], &per_l, 0));
    out.push(ctx.run(&CHECKS[4], &per_l, 0));

    let (pairs, cut) = ctx.sequences(lie, 2..=2);
    let pairs: Vec<Instance> = pairs
        .into_iter()
        .map(|p| {
            Instance::new()
                .with("K", Value::Subspace(p[0].clone()))
                .with("L", Value::Subspace(p[1].clone()))
        })
        .collect();
    out.push(ctx.run(&CHECKS[5], &pairs, cut));

    let mut rng = ctx.rng(CHECKS[6].id);
    let abelian: Vec<_> = (0..RANDOM_ABELIAN)
        .map(|_| ctx.random_abelian_subspace(&mut rng))
        .collect();
    let complements: Vec<Instance> = lie
        .iter()
        .flat_map(|l| {
            abelian
                .iter()
                .map(move |v| super::lie_ideal_instance(l).with("V", Value::Subspace(v.clone())))
        })
        .collect();
    out.push(ctx.run(&CHECKS[6], &complements, 0));
    out
}
