//! Complete enumeration of Lie ideals and ideals of small algebras.
//!
//! Every Lie ideal (resp. ideal) is the sum of the cyclic ones generated by
//! its elements, and sums of Lie ideals are Lie ideals. So the closures of
//! single elements, closed under pairwise sums, give the whole lattice.

use std::collections::{BTreeSet, HashSet};

use crate::algebra::Algebra;
use crate::calc::{core_of, ideal_of, lie_closure};
use crate::classify::is_normalized;
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::par::{self, Exec};

pub const DEFAULT_LIMIT: usize = 100_000;

/// Largest algebra (in elements) whose cyclic closures are scanned.
pub const ENUMERATION_BUDGET: u128 = 1 << 20;

pub fn all_lie_ideals(alg: &Algebra, limit: usize) -> Result<Vec<Subspace>> {
    all_lie_ideals_with(alg, limit, Exec::default())
}

pub fn all_lie_ideals_with(alg: &Algebra, limit: usize, exec: Exec) -> Result<Vec<Subspace>> {
    lattice(alg, limit, exec, lie_closure)
}

pub fn all_ideals(alg: &Algebra, limit: usize) -> Result<Vec<Subspace>> {
    all_ideals_with(alg, limit, Exec::default())
}

pub fn all_ideals_with(alg: &Algebra, limit: usize, exec: Exec) -> Result<Vec<Subspace>> {
    lattice(alg, limit, exec, ideal_of)
}

fn lattice(
    alg: &Algebra,
    limit: usize,
    exec: Exec,
    closure: fn(&Algebra, &Subspace) -> Subspace,
) -> Result<Vec<Subspace>> {
    let n = alg.element_count();
    if n > ENUMERATION_BUDGET {
        return Err(Error::BudgetExceeded {
            needed: n,
            budget: ENUMERATION_BUDGET,
        });
    }
    let full = alg.full_space();
    let cyclic = par::map_range(exec, n, |i| {
        let a = full.element_at(i);
        is_normalized(a.coords()).then(|| {
            closure(
                alg,
                &Subspace::from_raw_rows(alg.field(), alg.dim(), [a.into_coords()]),
            )
        })
    });
    // BTreeSet keeps the seed order independent of the execution mode
    let seeds: Vec<Subspace> = cyclic
        .into_iter()
        .flatten()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    let mut found: HashSet<Subspace> = HashSet::new();
    found.insert(alg.zero_space());
    let mut frontier = Vec::new();
    for s in &seeds {
        if found.insert(s.clone()) {
            frontier.push(s.clone());
        }
    }
    check_limit(found.len(), limit)?;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in &seeds {
                if g.is_within(x) {
                    continue;
                }
                let y = x.join(g);
                if !found.contains(&y) {
                    found.insert(y.clone());
                    check_limit(found.len(), limit)?;
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Subspace> = found.into_iter().collect();
    out.sort();
    Ok(out)
}

fn check_limit(count: usize, limit: usize) -> Result<()> {
    if count > limit {
        return Err(Error::LimitExceeded { count, limit });
    }
    Ok(())
}

/// The largest ideal of `R` inside `S`, if it is nonzero.
///
/// Computed directly as `{x : x, Rx, xR, RxR ⊆ S}`, which contains every
/// ideal lying in `S`.
pub fn contains_nonzero_ideal(alg: &Algebra, s: &Subspace) -> Result<Option<Subspace>> {
    alg.check_subspace(s)?;
    let core = core_of(alg, s);
    Ok((!core.is_zero()).then_some(core))
}

/// All ideals of an algebra, kept for lookups by subspace.
pub struct IdealLattice {
    ideals: Vec<Subspace>,
}

impl IdealLattice {
    pub fn new(alg: &Algebra, limit: usize) -> Result<Self> {
        Ok(IdealLattice {
            ideals: all_ideals(alg, limit)?,
        })
    }

    pub fn ideals(&self) -> &[Subspace] {
        &self.ideals
    }

    /// Sum of the ideals inside `S`, if nonzero.
    pub fn largest_inside(&self, s: &Subspace) -> Option<Subspace> {
        let sum = self
            .ideals
            .iter()
            .filter(|i| i.is_within(s))
            .fold(Subspace::zero(s.field(), s.ambient_dim()), |acc, i| {
                acc.join(i)
            });
        (!sum.is_zero()).then_some(sum)
    }
}
