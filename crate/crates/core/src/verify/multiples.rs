//! When `L + aL` contains a nonzero ideal.

use super::context::as_result;
use super::{fails, implication, Check, CheckReport, Ctx, Instance, Outcome, Value};
use crate::algebra::Element;
use crate::calc::{centralizer, idempotent_span, is_lie_ideal, is_unit_of};
use crate::error::{Error, Result};

pub(super) const CHECKS: &[Check] = &[
    Check {
        id: "lie_ideal_plus_multiple_matches_case",
        eval: lie_ideal_plus_multiple_matches_case,
    },
    Check {
        id: "element_centralizer_is_plane",
        eval: element_centralizer_is_plane,
    },
    Check {
        id: "central_commutator_square_contains_no_ideal",
        eval: central_commutator_square_contains_no_ideal,
    },
    Check {
        id: "commutator_closed_multiples_contain_ideal",
        eval: commutator_closed_multiples_contain_ideal,
    },
    Check {
        id: "idempotent_span_is_commutator_closed",
        eval: idempotent_span_is_commutator_closed,
    },
    Check {
        id: "idempotent_commutator_multiples_contain_ideal",
        eval: idempotent_commutator_multiples_contain_ideal,
    },
    Check {
        id: "commutator_multiples_contain_ideal",
        eval: commutator_multiples_contain_ideal,
    },
];

/// The case split for a noncentral Lie ideal `L` and any `a`:
/// nonabelian `L` with noncentral `a` gives an ideal; for abelian `L` with
/// `LC = Cb + C`, `a ∈ LC` gives none, `a ∈ [R,R] \ LC` gives one, and
/// otherwise there is one iff `[a, b]` is a unit.
fn lie_ideal_plus_multiple_matches_case(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let l = inst.subspace("L")?;
    let a = inst.element("a")?;
    let info = ctx.info(l);
    if info.central {
        return Ok(Outcome::Vacuous);
    }
    let observed = !ctx.core(&ctx.plus_multiple(l, a)).is_zero();
    let (case, predicted) = if !info.abelian {
        if ctx.is_central_element(a) {
            return Ok(Outcome::Vacuous);
        }
        ("nonabelian", true)
    } else {
        let b = info
            .first_noncentral
            .as_ref()
            .expect("noncentral L has a noncentral element");
        if ctx.plane(b) != info.lc {
            return Ok(fails(
                "abelian_not_plane",
                format!("LC = {:?}, b = {b:?}", info.lc),
            ));
        }
        if info.lc.contains(a) {
            ("in_lc", false)
        } else if ctx.c_span(&ctx.commutators).contains(a) {
            ("commutator", true)
        } else {
            let one = ctx.alg.unity().ok_or(Error::NotUnital)?;
            (
                "unit_bracket",
                is_unit_of(ctx.alg, &ctx.alg.commutator(a, b), one),
            )
        }
    };
    if observed == predicted {
        return Ok(Outcome::Holds);
    }
    let kind = match (case, predicted) {
        ("nonabelian", _) => "nonabelian_missing_ideal",
        ("in_lc", _) => "in_lc_unexpected_ideal",
        ("commutator", _) => "commutator_missing_ideal",
        (_, true) => "unit_bracket_missing_ideal",
        (_, false) => "nonunit_bracket_unexpected_ideal",
    };
    Ok(fails(
        kind,
        format!("L + aL = {:?}", ctx.plus_multiple(l, a)),
    ))
}

/// In an exceptional ring the centralizer of a noncentral `a` is `Ca + C`.
fn element_centralizer_is_plane(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let a = inst.element("a")?;
    if ctx.is_central_element(a) {
        return Ok(Outcome::Vacuous);
    }
    let c = centralizer(ctx.alg, &ctx.span1(a));
    let plane = ctx.plane(a);
    Ok(if c == plane {
        Outcome::Holds
    } else {
        fails(
            "centralizer_differs",
            format!("centralizer {c:?}, Ca + C {plane:?}"),
        )
    })
}

/// In an exceptional ring, with `L = [R,R]`: `0 != [L,L] ⊆ Z(R)` and
/// `[L,L] + a[L,L]` contains no nonzero ideal.
fn central_commutator_square_contains_no_ideal(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let a = inst.element("a")?;
    let ll = ctx.bracket(&ctx.commutators, &ctx.commutators);
    if ll.is_zero() {
        return Ok(fails("zero_square", "[L,L] = 0"));
    }
    if !ctx.is_central(&ll) {
        return Ok(fails("noncentral_square", format!("[L,L] = {ll:?}")));
    }
    let core = ctx.core(&ctx.plus_multiple(&ll, a));
    Ok(if core.is_zero() {
        Outcome::Holds
    } else {
        fails("unexpected_ideal", format!("ideal {core:?}"))
    })
}

/// `[L,L] = [L,R] != 0` and `a` noncentral: `[L,L] + a[L,L]` contains a
/// nonzero ideal.
fn commutator_closed_multiples_contain_ideal(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let l = inst.subspace("L")?;
    let a = inst.element("a")?;
    let ll = ctx.bracket(l, l);
    let hyp = !ll.is_zero() && ll == ctx.with_algebra(l) && !ctx.is_central_element(a);
    Ok(implication(
        "no_ideal",
        hyp,
        hyp && !ctx.core(&ctx.plus_multiple(&ll, a)).is_zero(),
        || format!("[L,L] = {ll:?}"),
    ))
}

/// `E(R)` is a Lie ideal with `[E,E] = [E,R]`.
fn idempotent_span_is_commutator_closed(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let e = inst.subspace("E")?;
    if !is_lie_ideal(ctx.alg, e) {
        return Ok(fails("not_lie_ideal", format!("E = {e:?}")));
    }
    let ee = ctx.bracket(e, e);
    let er = ctx.with_algebra(e);
    Ok(if ee == er {
        Outcome::Holds
    } else {
        fails("brackets_differ", format!("[E,E] = {ee:?}, [E,R] = {er:?}"))
    })
}

/// With a nontrivial idempotent and `a` noncentral, `[E,E] + a[E,E]`
/// contains a nonzero ideal.
fn idempotent_commutator_multiples_contain_ideal(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let e = inst.subspace("E")?;
    let a = inst.element("a")?;
    let trivial = match ctx.alg.unity() {
        Some(one) => e.is_within(&ctx.span1(one)),
        None => e.is_zero(),
    };
    let hyp = !trivial && !ctx.is_central_element(a);
    let ee = ctx.bracket(e, e);
    Ok(implication(
        "no_ideal",
        hyp,
        hyp && !ctx.core(&ctx.plus_multiple(&ee, a)).is_zero(),
        || format!("[E,E] = {ee:?}"),
    ))
}

/// `a` noncentral: `[R,R] + a[R,R]` contains a nonzero ideal.
fn commutator_multiples_contain_ideal(ctx: &Ctx, inst: &Instance) -> Result<Outcome> {
    let a = inst.element("a")?;
    let rr = &ctx.commutators;
    let hyp = !ctx.is_central_element(a);
    Ok(implication(
        "no_ideal",
        hyp,
        hyp && !ctx.core(&ctx.plus_multiple(rr, a)).is_zero(),
        || format!("[R,R] + a[R,R] = {:?}", ctx.plus_multiple(rr, a)),
    ))
}

fn with_elements(base: &Instance, elements: &[Element]) -> Vec<Instance> {
    elements
        .iter()
        .map(|a| base.clone().with("a", Value::Element(a.clone())))
        .collect()
}

pub(super) fn run(ctx: &Ctx) -> Vec<CheckReport> {
    let lie = match as_result(ctx.lie_ideals()) {
        Ok(l) => l,
        Err(e) => return ctx.skip_all(CHECKS, &e.to_string()),
    };
    let family = ctx.element_family(CHECKS[0].id);
    let per_element = with_elements(&Instance::new(), &family);
    let mut out = Vec::new();

    let cases: Vec<Instance> = lie
        .iter()
        .filter(|l| !ctx.is_central(l))
        .flat_map(|l| with_elements(&super::lie_ideal_instance(l), &family))
        .collect();
    out.push(ctx.run(&CHECKS[0], &cases, 0));

    if ctx.exceptional() {
        out.push(ctx.run(&CHECKS[1], &per_element, 0));
        out.push(ctx.run(&CHECKS[2], &per_element, 0));
    } else {
        out.push(ctx.skip(&CHECKS[1], "not exceptional"));
        out.push(ctx.skip(&CHECKS[2], "not exceptional"));
    }

    let closed: Vec<Instance> = lie
        .iter()
        .flat_map(|l| with_elements(&super::lie_ideal_instance(l), &family))
        .collect();
    out.push(ctx.run(&CHECKS[3], &closed, 0));

    match idempotent_span(ctx.alg, ctx.config.element_budget, ctx.config.exec) {
        Ok(e) => {
            let base = Instance::new().with("E", Value::Subspace(e));
            out.push(ctx.run(&CHECKS[4], std::slice::from_ref(&base), 0));
            out.push(ctx.run(&CHECKS[5], &with_elements(&base, &family), 0));
        }
        Err(err) => {
            out.push(ctx.skip(&CHECKS[4], err.to_string()));
            out.push(ctx.skip(&CHECKS[5], err.to_string()));
        }
    }
    out.push(ctx.run(&CHECKS[6], &per_element, 0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{field_algebra_default, matrix_algebra, tensor_product};
    use crate::linalg::Subspace;
    use crate::verify::{run_suite, Config, Status, Suite};

    fn report<'a>(reports: &'a [CheckReport], id: &str) -> &'a CheckReport {
        reports.iter().find(|r| r.check == id).unwrap()
    }

    #[test]
    fn worked_instances_in_the_smallest_exceptional_ring() {
        let m = matrix_algebra(2, 2).unwrap();
        let ctx = Ctx::new(&m, Config::default());
        let l = Subspace::spanned_by(
            m.field(),
            4,
            &[
                m.element(&[1, 0, 0, 1]).unwrap(),
                m.element(&[0, 1, 0, 0]).unwrap(),
            ],
        );
        for (a, full) in [
            ([0, 0, 1, 0], true),
            ([1, 0, 0, 0], false),
            ([1, 0, 1, 0], true),
        ] {
            let a = m.element(&a).unwrap();
            let core = ctx.core(&ctx.plus_multiple(&l, &a));
            assert_eq!(core.is_full(), full);
            assert_eq!(core.is_zero(), !full);
            let inst = super::super::lie_ideal_instance(&l).with("a", Value::Element(a));
            assert!(matches!(
                lie_ideal_plus_multiple_matches_case(&ctx, &inst).unwrap(),
                Outcome::Holds
            ));
        }
    }

    #[test]
    fn suite_passes_with_exhaustive_elements() {
        let m2 = matrix_algebra(2, 2).unwrap();
        let big = tensor_product(&m2, &field_algebra_default(2, 2).unwrap()).unwrap();
        for alg in [m2, big, matrix_algebra(2, 3).unwrap()] {
            let reports = run_suite(&alg, Suite::Multiples, &Config::default());
            for r in &reports {
                assert_ne!(r.status, Status::Fail, "{r}");
            }
            let cases = report(&reports, CHECKS[0].id);
            assert_eq!(cases.instances % alg.element_count() as u64, 0);
            assert!(cases.effective() > 0);
        }
    }
}
