//! Ring-level predicates and the classification of Lie ideals of simple
//! algebras.

use serde::Serialize;

use crate::algebra::{Algebra, Element};
use crate::calc::{self, brackets, c_dim, c_span_of, center_ref, ideal_of, is_lie_ideal, products};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::linalg::{left_kernel, SpanBuilder, Subspace, Vector};
use crate::par::{self, Exec};
use crate::report::CheckReport;
use crate::verify;

/// Element scans are refused beyond this many elements unless the caller
/// passes a larger budget.
pub const DEFAULT_BUDGET: u128 = 1 << 20;

fn check_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// Whether the first nonzero coordinate is 1. Scans over these cover every
/// line through the origin once.
pub(crate) fn is_normalized(v: &[u32]) -> bool {
    v.iter().find(|&&c| c != 0) == Some(&1)
}

/// `R^2 != 0` and every nonzero element generates `R` as an ideal.
pub fn is_simple(alg: &Algebra, budget: u128) -> Result<bool> {
    if let Some(known) = alg.cached_simplicity() {
        return Ok(known);
    }
    let full = alg.full_space();
    let simple = if products(alg, &full, &full).is_zero() {
        false
    } else {
        let n = alg.element_count();
        check_budget(n, budget)?;
        let proper = par::find_first(Exec::default(), n, |i| {
            let a = full.element_at(i);
            is_normalized(a.coords())
                && !ideal_of(
                    alg,
                    &Subspace::from_raw_rows(alg.field(), alg.dim(), [a.into_coords()]),
                )
                .is_full()
        });
        proper.is_none()
    };
    alg.record_simplicity(simple);
    Ok(simple)
}

/// Elements `b` with `a e_k b = 0` for every basis element `e_k`, i.e. the
/// right annihilator of `aR`.
fn right_annihilator_of_a_r(alg: &Algebra, a: &[u32]) -> Subspace {
    let d = alg.dim();
    let ae: Vec<Vec<u32>> = (0..d).map(|k| alg.mul_raw(a, &unit(d, k))).collect();
    let images: Vec<Vec<u32>> = (0..d)
        .map(|j| {
            let ej = unit(d, j);
            ae.iter().flat_map(|x| alg.mul_raw(x, &ej)).collect()
        })
        .collect();
    left_kernel(alg.field(), &images, d * d)
}

fn unit(d: usize, j: usize) -> Vec<u32> {
    let mut v = vec![0; d];
    v[j] = 1;
    v
}

/// `aRb = 0` forces `a = 0` or `b = 0`.
///
/// For each nonzero `a` the set of `b` with `aRb = 0` is a subspace, found
/// by one kernel computation; this replaces the scan over all pairs.
pub fn is_prime(alg: &Algebra, budget: u128) -> Result<bool> {
    let n = alg.element_count();
    check_budget(n, budget)?;
    let full = alg.full_space();
    let witness = par::find_first(Exec::default(), n, |i| {
        let a = full.element_at(i);
        is_normalized(a.coords()) && !right_annihilator_of_a_r(alg, a.coords()).is_zero()
    });
    Ok(witness.is_none())
}

/// `aRa = 0` forces `a = 0`.
pub fn is_semiprime(alg: &Algebra, budget: u128) -> Result<bool> {
    let n = alg.element_count();
    check_budget(n, budget)?;
    let full = alg.full_space();
    let d = alg.dim();
    let witness = par::find_first(Exec::default(), n, |i| {
        let a = full.element_at(i);
        is_normalized(a.coords())
            && (0..d).all(|k| {
                let ae = alg.mul_raw(a.coords(), &unit(d, k));
                alg.mul_raw(&ae, a.coords()).iter().all(|&c| c == 0)
            })
    });
    Ok(witness.is_none())
}

/// Ideal-level primeness: `IJ != 0` for all nonzero ideals `I, J`.
pub fn is_prime_by_ideals(alg: &Algebra, limit: usize) -> Result<bool> {
    let ideals = enumerate::all_ideals(alg, limit)?;
    let nonzero: Vec<&Subspace> = ideals.iter().filter(|i| !i.is_zero()).collect();
    Ok(nonzero
        .iter()
        .all(|i| nonzero.iter().all(|j| !products(alg, i, j).is_zero())))
}

/// Ideal-level semiprimeness: `I^2 != 0` for every nonzero ideal `I`.
pub fn is_semiprime_by_ideals(alg: &Algebra, limit: usize) -> Result<bool> {
    let ideals = enumerate::all_ideals(alg, limit)?;
    Ok(ideals
        .iter()
        .filter(|i| !i.is_zero())
        .all(|i| !products(alg, i, i).is_zero()))
}

/// Characteristic 2 and dimension 4 over the center. Requires a simple,
/// unital, noncommutative algebra.
pub fn is_exceptional(alg: &Algebra) -> Result<bool> {
    require_noncommutative_simple(alg)?;
    Ok(alg.p() == 2 && c_dim(alg, &alg.full_space()) == 4)
}

pub(crate) fn require_noncommutative_simple(alg: &Algebra) -> Result<()> {
    calc::require_simple_unital(alg)?;
    if alg.is_commutative() {
        return Err(Error::Unsupported(format!(
            "{} is commutative; the exceptional case needs a noncommutative ring",
            alg.name()
        )));
    }
    Ok(())
}

/// `0 != [[R,R],[R,R]] ⊆ Z(R)`.
pub fn nested_commutators_central(alg: &Algebra) -> bool {
    let full = alg.full_space();
    let rr = brackets(alg, &full, &full);
    let nested = brackets(alg, &rr, &rr);
    !nested.is_zero() && nested.is_within(center_ref(alg))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LieIdealCase {
    Central,
    Plane,
    ContainsCommutators,
}

impl LieIdealCase {
    pub fn label(self) -> &'static str {
        match self {
            LieIdealCase::Central => "CENTRAL",
            LieIdealCase::Plane => "PLANE",
            LieIdealCase::ContainsCommutators => "CONTAINS_COMMUTATORS",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieIdealClass {
    /// Satisfied cases in declaration order; never empty.
    pub flags: Vec<LieIdealCase>,
    /// A noncentral `a` with `LC = Ca + C`, present iff `Plane` is flagged.
    pub plane_witness: Option<Element>,
}

impl LieIdealClass {
    pub fn has(&self, case: LieIdealCase) -> bool {
        self.flags.contains(&case)
    }
}

/// `Ca + C`: the C-span of `a` and the center.
pub(crate) fn c_line_plus_center(alg: &Algebra, a: &[u32]) -> Subspace {
    let z = center_ref(alg);
    let mut b = SpanBuilder::from_subspace(z);
    for zr in z.rows() {
        b.insert_raw(alg.mul_raw(a, zr));
    }
    b.finish()
}

/// First noncentral `a` in `L` (element order) with `Ca + C = LC`.
pub(crate) fn plane_witness(alg: &Algebra, l: &Subspace, lc: &Subspace) -> Option<Element> {
    if c_dim(alg, lc) != 2 {
        return None;
    }
    let z = center_ref(alg);
    l.elements()
        .find(|a| !z.contains(a) && c_line_plus_center(alg, a.coords()) == *lc)
}

/// Which of the three cases hold for a Lie ideal `L` of a simple unital
/// algebra: `L ⊆ Z(R)`; `LC = Ca + C` with `a ∈ L` noncentral and
/// `dim_C LC = 2`; `[R,R] ⊆ LC`.
///
/// Fails with `TheoremViolation` if no case holds, or if the sharpened
/// simple-ring forms (`L = Z(R)a + Z(R)`, resp. `[R,R] ⊆ L`) fail.
pub fn classify_lie_ideal(alg: &Algebra, l: &Subspace) -> Result<LieIdealClass> {
    alg.check_subspace(l)?;
    calc::require_simple_unital(alg)?;
    if let Some((element, basis, bracket)) = calc::lie_ideal_violation(alg, l) {
        return Err(Error::NotLieIdeal {
            element: element.into_coords(),
            basis,
            bracket: bracket.into_coords(),
        });
    }
    let z = center_ref(alg);
    let lc = c_span_of(alg, l);
    let full = alg.full_space();
    let rr = brackets(alg, &full, &full);
    let mut flags = Vec::new();
    if l.is_within(z) {
        flags.push(LieIdealCase::Central);
    }
    let witness = plane_witness(alg, l, &lc);
    if let Some(a) = &witness {
        flags.push(LieIdealCase::Plane);
        if c_line_plus_center(alg, a.coords()) != *l {
            return Err(Error::TheoremViolation(format!(
                "plane case holds for LC but L = {l:?} differs from Z(R)a + Z(R) with a = {a:?}"
            )));
        }
    }
    if rr.is_within(&lc) {
        flags.push(LieIdealCase::ContainsCommutators);
        if !rr.is_within(l) {
            return Err(Error::TheoremViolation(format!(
                "[R,R] lies in LC but not in L = {l:?}"
            )));
        }
    }
    if flags.is_empty() {
        return Err(Error::TheoremViolation(format!(
            "Lie ideal {l:?} is neither central, a plane, nor contains [R,R]"
        )));
    }
    Ok(LieIdealClass {
        flags,
        plane_witness: witness,
    })
}

/// For a noncentral Lie ideal `L`, evaluates (i) `[L,L] = 0`, (ii) `R` is
/// exceptional and `LC = [a,R]C = Ca + C` for every noncentral `a ∈ L`,
/// (iii) `dim_C LC = 2`, and reports whether the three agree.
pub fn abelian_equivalences(alg: &Algebra, l: &Subspace) -> Result<CheckReport> {
    alg.check_subspace(l)?;
    require_noncommutative_simple(alg)?;
    if !is_lie_ideal(alg, l) {
        let (element, basis, bracket) = calc::lie_ideal_violation(alg, l).expect("violation");
        return Err(Error::NotLieIdeal {
            element: element.into_coords(),
            basis,
            bracket: bracket.into_coords(),
        });
    }
    if l.is_within(center_ref(alg)) {
        return Err(Error::InvalidParameter(
            "the Lie ideal must be noncentral".into(),
        ));
    }
    verify::run_single(
        alg,
        verify::ABELIAN_EQUIVALENCES,
        verify::lie_ideal_instance(l),
    )
}

/// Checks that `Ca + C` is a Lie ideal for every `a ∈ [R,R] \ Z(R)` exactly
/// when `R` is exceptional, and that for noncentral `a`, `Ca + C` is a Lie
/// ideal exactly when `[a,R]C = Ca + C`.
pub fn plane_lie_ideal_criterion(alg: &Algebra) -> Result<Vec<CheckReport>> {
    require_noncommutative_simple(alg)?;
    Ok(vec![
        verify::run_single(alg, verify::PLANE_CRITERION, verify::empty_instance())?,
        verify::run_element_check(alg, verify::PLANE_IFF_BRACKET_SPAN)?,
    ])
}

/// Convenience for callers holding an element rather than raw coordinates.
pub fn c_plane(alg: &Algebra, a: &Vector) -> Result<Subspace> {
    alg.check_element(a)?;
    calc::require_simple_unital(alg)?;
    Ok(c_line_plus_center(alg, a.coords()))
}
