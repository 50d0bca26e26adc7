//! Centralizers of Lie ideals and of their products.

use super::context::as_result;
use super::{equivalence, fails, Check, CheckReport, Ctx, Instance, Outcome, Value};
use crate::calc::centralizer;
use crate::error::Result;
use crate::linalg::Subspace;

pub(super) const CHECKS: &[Check] = &[
    Check {
        id: "centralizer_is_c_span_iff_c_dim_two",
        eval: centralizer_is_c_span_iff_c_dim_two,
    },
    Check {
        id: "centralizer_is_center_iff_c_dim_exceeds_two",
        eval: centralizer_is_center_iff_c_dim_exceeds_two,
    },
    Check {
        id: "product_centralizer_dichotomy",
        eval: product_centralizer_dichotomy,
    },
    Check {
        id: "products_commute_iff_all_share_plane",
        eval: products_commute_iff_all_share_plane,
    },
];

/// For noncentral `K`: `C_R(K) = KC` iff `dim_C KC = 2`.
fn centralizer_is_c_span_iff_c_dim_two(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let k = inst.subspace("K")?;
    let info = ctx.info(k);
    Ok(equivalence(
        "c_span_sides_disagree",
        &[
            ("centralizer_is_c_span", centralizer(ctx.alg, k) == info.lc),
            ("c_dim_two", info.c_dim == 2),
        ],
    ))
}

/// For noncentral `K`: `C_R(K) = Z(R)` iff `dim_C KC > 2`.
fn centralizer_is_center_iff_c_dim_exceeds_two(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let k = inst.subspace("K")?;
    let info = ctx.info(k);
    Ok(equivalence(
        "center_sides_disagree",
        &[
            (
                "centralizer_is_center",
                centralizer(ctx.alg, k) == ctx.center,
            ),
            ("c_dim_exceeds_two", info.c_dim > 2),
        ],
    ))
}

/// `K_1, ..., K_m` share one plane `Ca + C` with `a` any noncentral
/// element of `K_1`.
fn all_share_plane(ctx: &Ctx, ks: &[Subspace]) -> bool {
    let first = ctx.info(&ks[0]);
    first.plane_all && ks.iter().all(|k| ctx.info(k).lc == first.lc)
}

/// Either `C_R(K_1...K_m) = Z(R)`, or it equals `K_1 C` with every
/// `K_j C = K_1 C` and `dim_C K_1 C = 2`.
fn product_centralizer_dichotomy(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let ks = inst.subspaces("K")?;
    let c = centralizer(ctx.alg, &ctx.product(ks));
    if c == ctx.center {
        return Ok(Outcome::Holds);
    }
    let first = ctx.info(&ks[0]);
    let same = ks.iter().all(|k| ctx.info(k).lc == first.lc);
    Ok(if c == first.lc && same && first.c_dim == 2 {
        Outcome::Holds
    } else {
        fails("neither_branch", format!("centralizer {c:?}"))
    })
}

/// `[K_1...K_m, L_1...L_n] = 0` iff every `K_j C` and `L_k C` equal
/// `K_1 C = Ca + C` for every noncentral `a ∈ K_1`.
fn products_commute_iff_all_share_plane(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let ks = inst.subspaces("K")?;
    let ls = inst.subspaces("L")?;
    let all: Vec<Subspace> = ks.iter().chain(ls).cloned().collect();
    Ok(equivalence(
        "product_commuting_sides_disagree",
        &[
            (
                "products_commute",
                ctx.commute(&ctx.product(ks), &ctx.product(ls)),
            ),
            ("all_share_plane", all_share_plane(ctx, &all)),
        ],
    ))
}

pub(super) fn run(ctx: &Ctx) -> Vec<CheckReport> {
    let lie = match as_result(ctx.noncentral_lie_ideals()) {
        Ok(l) => l,
        Err(e) => return ctx.skip_all(CHECKS, &e.to_string()),
    };
    let mut out = Vec::new();

    let single: Vec<Instance> = lie
        .iter()
        .map(|k| Instance::new().with("K", Value::Subspace(k.clone())))
        .collect();
    out.push(ctx.run(&CHECKS[0], &single, 0));
    out.push(ctx.run(&CHECKS[1], &single, 0));

    let (tuples, cut) = ctx.sequences(&lie, 1..=ctx.config.max_factors.max(1));
    let tuple_instances: Vec<Instance> = tuples
        .iter()
        .map(|t| Instance::new().with("K", Value::Subspaces(t.clone())))
        .collect();
    out.push(ctx.run(&CHECKS[2], &tuple_instances, cut));

    let n = tuples.len() as u64;
    let total = (n + cut).saturating_mul(n + cut);
    let kept = (n * n).min(ctx.config.tuple_cap) as usize;
    let pairs: Vec<Instance> = (0..kept)
        .map(|i| {
            let (a, b) = (i / tuples.len(), i % tuples.len());
            Instance::new()
                .with("K", Value::Subspaces(tuples[a].clone()))
                .with("L", Value::Subspaces(tuples[b].clone()))
        })
        .collect();
    out.push(ctx.run(&CHECKS[3], &pairs, total - kept as u64));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix_algebra;
    use crate::verify::{run_suite, Config, Status, Suite};

    #[test]
    fn planes_are_self_centralizing() {
        let m = matrix_algebra(2, 2).unwrap();
        let ctx = Ctx::new(&m, Config::default());
        for k in ctx.noncentral_lie_ideals().unwrap() {
            let c = centralizer(&m, &k);
            if ctx.info(&k).c_dim == 2 {
                assert_eq!(c, k);
            } else {
                assert_eq!(c, ctx.center);
            }
        }
    }

    #[test]
    fn passes_on_small_matrix_rings() {
        for (n, p) in [(2, 2), (2, 3)] {
            let m = matrix_algebra(n, p).unwrap();
            for r in run_suite(&m, Suite::Centralizers, &Config::default()) {
                assert_eq!(r.status, Status::Pass, "{r}");
            }
        }
    }
}
