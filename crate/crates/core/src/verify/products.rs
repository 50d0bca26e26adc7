//! Products of Lie ideals.

use super::context::as_result;
use super::{fails, Check, CheckReport, Ctx, Instance, Outcome, Value};
use crate::calc::is_lie_ideal;
use crate::error::Result;
use crate::linalg::Subspace;

pub(super) const CHECKS: &[Check] = &[
    Check {
        id: "pair_product_contains_ideal_unless_shared_plane",
        eval: pair_product_contains_ideal_unless_shared_plane,
    },
    Check {
        id: "product_contains_ideal_unless_all_share_plane",
        eval: product_contains_ideal_unless_all_share_plane,
    },
    Check {
        id: "products_are_noncentral_lie_ideals",
        eval: products_are_noncentral_lie_ideals,
    },
];

fn xor_outcome(has_ideal: bool, exception: bool, detail: impl FnOnce() -> String) -> Outcome {
    match (has_ideal, exception) {
        (true, false) | (false, true) => Outcome::Holds,
        (true, true) => fails("exception_contains_ideal", detail()),
        (false, false) => fails("missing_ideal", detail()),
    }
}

/// For noncentral `K, L`: `KL` contains a nonzero ideal unless
/// `KC = LC = Ca + C` for some `a ∈ L`.
fn pair_product_contains_ideal_unless_shared_plane(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let k = inst.subspace("K")?;
    let l = inst.subspace("L")?;
    let kl = ctx.product(&[k.clone(), l.clone()]);
    let (ki, li) = (ctx.info(k), ctx.info(l));
    let exception = ki.lc == li.lc && li.plane_some;
    Ok(xor_outcome(!ctx.core(&kl).is_zero(), exception, || {
        format!("KL = {kl:?}")
    }))
}

/// For noncentral `K_1, ..., K_m`, `m >= 2`: the product contains a nonzero
/// ideal unless every `K_j C = K_1 C = Ca + C` for every noncentral
/// `a ∈ K_1`.
fn product_contains_ideal_unless_all_share_plane(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let ks = inst.subspaces("K")?;
    let p = ctx.product(ks);
    let first = ctx.info(&ks[0]);
    let exception = first.plane_all && ks.iter().all(|k| ctx.info(k).lc == first.lc);
    Ok(xor_outcome(!ctx.core(&p).is_zero(), exception, || {
        format!("product = {p:?}")
    }))
}

/// A product of noncentral Lie ideals is a noncentral Lie ideal.
fn products_are_noncentral_lie_ideals(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let ks = inst.subspaces("K")?;
    let p = ctx.product(ks);
    Ok(if !is_lie_ideal(ctx.alg, &p) {
        fails("not_lie_ideal", format!("product = {p:?}"))
    } else if ctx.is_central(&p) {
        fails("central_product", format!("product = {p:?}"))
    } else {
        Outcome::Holds
    })
}

fn tuple_instance(ks: Vec<Subspace>) -> Instance {
    Instance::new().with("K", Value::Subspaces(ks))
}

pub(super) fn run(ctx: &Ctx) -> Vec<CheckReport> {
    let lie = match as_result(ctx.noncentral_lie_ideals()) {
        Ok(l) => l,
        Err(e) => return ctx.skip_all(CHECKS, &e.to_string()),
    };
    let mut out = Vec::new();

    let (pairs, cut) = ctx.sequences(&lie, 2..=2);
    let pair_instances: Vec<Instance> = pairs
        .iter()
        .map(|p| {
            Instance::new()
                .with("K", Value::Subspace(p[0].clone()))
                .with("L", Value::Subspace(p[1].clone()))
        })
        .collect();
    out.push(ctx.run(&CHECKS[0], &pair_instances, cut));

    let (tuples, cut) = ctx.sequences(&lie, 2..=ctx.config.max_factors.max(2));
    let tuples: Vec<Instance> = tuples.into_iter().map(tuple_instance).collect();
    out.push(ctx.run(&CHECKS[1], &tuples, cut));
    out.push(ctx.run(&CHECKS[2], &tuples, cut));
    out
}
