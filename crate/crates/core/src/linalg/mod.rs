//! Exact linear algebra over prime fields.
//!
//! Over GF(p) every additive subgroup of a vector space is a subspace, so
//! [`Subspace`] stands in for every additive subgroup the Lie-ideal calculus
//! manipulates. Subspaces are kept in canonical reduced row echelon form,
//! which turns set equality into structural equality.

mod field;
mod subspace;
mod vector;

pub use field::{is_prime, PrimeField};
pub use subspace::{SpanBuilder, Subspace};
pub use vector::Vector;

use crate::error::{Error, Result};

fn check_vector(field: PrimeField, ambient: usize, v: &Vector) -> Result<()> {
    if v.field() != field {
        return Err(Error::FieldMismatch {
            left: field.p(),
            right: v.field().p(),
        });
    }
    if v.len() != ambient {
        return Err(Error::DimensionMismatch {
            expected: ambient,
            found: v.len(),
        });
    }
    Ok(())
}

pub(crate) fn check_same_space(a: &Subspace, b: &Subspace) -> Result<()> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch {
            left: a.field().p(),
            right: b.field().p(),
        });
    }
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: a.ambient_dim(),
            found: b.ambient_dim(),
        });
    }
    Ok(())
}

/// Canonical span of `vectors` inside GF(p)^`ambient`.
pub fn span(field: PrimeField, vectors: &[Vector], ambient: usize) -> Result<Subspace> {
    for v in vectors {
        check_vector(field, ambient, v)?;
    }
    Ok(Subspace::spanned_by(field, ambient, vectors))
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_same_space(a, b)?;
    Ok(a.join(b))
}

pub fn subspace_intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_same_space(a, b)?;
    Ok(a.meet(b))
}

pub fn contains(a: &Subspace, v: &Vector) -> Result<bool> {
    check_vector(a.field(), a.ambient_dim(), v)?;
    Ok(a.contains(v))
}

pub fn subspace_leq(a: &Subspace, b: &Subspace) -> Result<bool> {
    check_same_space(a, b)?;
    Ok(a.is_within(b))
}

/// All coefficient vectors `x` with `sum_i x_i * images[i] = 0`, as a
/// subspace of GF(p)^`images.len()`.
///
/// Row-reduces the augmented rows `[images[i] | e_i]`; rows whose image part
/// vanishes span the kernel.
pub fn left_kernel(field: PrimeField, images: &[Vec<u32>], image_dim: usize) -> Subspace {
    let k = images.len();
    let mut b = SpanBuilder::new(field, image_dim + k);
    for (i, img) in images.iter().enumerate() {
        debug_assert_eq!(img.len(), image_dim);
        let mut row = img.clone();
        row.resize(image_dim + k, 0);
        row[image_dim + i] = 1;
        b.insert_raw(row);
    }
    let reduced = b.finish();
    let rows: Vec<Vec<u32>> = reduced
        .rows()
        .iter()
        .zip(reduced.pivots())
        .filter(|(_, &q)| q >= image_dim)
        .map(|(r, _)| r[image_dim..].to_vec())
        .collect();
    Subspace::from_raw_rows(field, k, rows)
}

/// Some `x` with `sum_i x_i * images[i] = target`, if one exists.
pub fn solve_combination(
    field: PrimeField,
    images: &[Vec<u32>],
    image_dim: usize,
    target: &[u32],
) -> Option<Vec<u32>> {
    let k = images.len();
    let mut b = SpanBuilder::new(field, image_dim + k);
    for (i, img) in images.iter().enumerate() {
        let mut row = img.clone();
        row.resize(image_dim + k, 0);
        row[image_dim + i] = 1;
        b.insert_raw(row);
    }
    let reduced = b.finish();
    let mut t = target.to_vec();
    t.resize(image_dim + k, 0);
    for (row, &q) in reduced.rows().iter().zip(reduced.pivots()) {
        if q >= image_dim {
            break;
        }
        let c = t[q];
        if c != 0 {
            for (a, &r) in t.iter_mut().zip(row) {
                *a = field.sub(*a, field.mul(c, r));
            }
        }
    }
    if t[..image_dim].iter().any(|&c| c != 0) {
        return None;
    }
    Some(t[image_dim..].iter().map(|&c| field.neg(c)).collect())
}

/// Every subspace of GF(p)^n, generated directly as reduced row echelon
/// matrices: for each pivot set, every assignment of the free entries.
///
/// Intended for small `n`; the count is the sum of Gaussian binomials.
pub fn all_subspaces(field: PrimeField, n: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    for k in 0..=n {
        let mut pivots: Vec<usize> = (0..k).collect();
        loop {
            // free positions: (row, col) with col > pivot[row], col not a pivot
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| {
                    let piv = pivots.clone();
                    (pivots[r] + 1..n)
                        .filter(move |c| !piv.contains(c))
                        .map(move |c| (r, c))
                })
                .collect();
            let p = field.p() as u128;
            let count = p.pow(free.len() as u32);
            for idx in 0..count {
                let mut rows = vec![vec![0u32; n]; k];
                for (r, &q) in pivots.iter().enumerate() {
                    rows[r][q] = 1;
                }
                let mut rem = idx;
                for &(r, c) in &free {
                    rows[r][c] = (rem % p) as u32;
                    rem /= p;
                }
                out.push(Subspace::from_rref_unchecked(
                    field,
                    n,
                    rows,
                    pivots.clone(),
                ));
            }
            if !next_combination(&mut pivots, n) {
                break;
            }
        }
    }
    out
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn v(f: PrimeField, c: &[i64]) -> Vector {
        Vector::from_ints(f, c)
    }

    #[test]
    fn span_examples() {
        let f = gf(2);
        assert_eq!(span(f, &[], 4).unwrap().dim(), 0);
        let a = v(f, &[1, 0, 0, 1]);
        assert_eq!(span(f, &[a.clone(), a.clone()], 4).unwrap().dim(), 1);
        let s = span(
            f,
            &[
                a,
                v(f, &[0, 1, 0, 0]),
                v(f, &[1, 0, 1, 0]),
                v(f, &[0, 1, 0, 1]),
            ],
            4,
        )
        .unwrap();
        assert!(s.is_full());
        assert_eq!(s, Subspace::full(f, 4));
    }

    #[test]
    fn span_errors() {
        let f = gf(2);
        assert!(matches!(
            span(f, &[v(f, &[1, 0])], 4),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            span(f, &[v(gf(3), &[1, 0, 0, 0])], 4),
            Err(Error::FieldMismatch { .. })
        ));
        let a = Subspace::zero(f, 3);
        let b = Subspace::zero(f, 4);
        assert!(subspace_sum(&a, &b).is_err());
        assert!(subspace_intersect(&a, &b).is_err());
        assert!(subspace_leq(&a, &b).is_err());
    }

    #[test]
    fn sum_and_intersection_examples() {
        let f = gf(2);
        let e = |i: usize| Vector::unit(f, 4, i);
        let a = span(f, &[e(0)], 4).unwrap();
        let b = span(f, &[e(0).add(&e(1))], 4).unwrap();
        let zero = Subspace::zero(f, 4);
        assert_eq!(subspace_sum(&a, &zero).unwrap(), a);
        assert_eq!(subspace_sum(&a, &a).unwrap(), a);
        assert_eq!(
            subspace_sum(&a, &b).unwrap(),
            span(f, &[e(0), e(1)], 4).unwrap()
        );

        let x = span(f, &[e(0), e(1)], 4).unwrap();
        let y = span(f, &[e(1), e(2)], 4).unwrap();
        assert_eq!(subspace_intersect(&x, &x).unwrap(), x);
        assert_eq!(subspace_intersect(&x, &zero).unwrap(), zero);
        assert_eq!(
            subspace_intersect(&x, &y).unwrap(),
            span(f, &[e(1)], 4).unwrap()
        );
    }

    #[test]
    fn intersection_matches_enumeration() {
        let f = gf(2);
        let e = |i: usize| Vector::unit(f, 4, i);
        let x = span(f, &[e(0), e(1)], 4).unwrap();
        let y = span(f, &[e(1), e(2)], 4).unwrap();
        let common: Vec<Vector> = x.elements().filter(|a| y.contains(a)).collect();
        assert_eq!(common.len(), 2);
        assert_eq!(Subspace::spanned_by(f, 4, &common), x.meet(&y));
    }

    #[test]
    fn membership_examples() {
        let f = gf(2);
        let e = |i: usize| Vector::unit(f, 4, i);
        let zero = Subspace::zero(f, 4);
        assert!(contains(&zero, &Vector::zero(f, 4)).unwrap());
        let a = span(f, &[e(0)], 4).unwrap();
        assert!(subspace_leq(&a, &Subspace::full(f, 4)).unwrap());
        let b = span(f, &[e(0).add(&e(1)), e(1)], 4).unwrap();
        assert!(subspace_leq(&a, &b).unwrap());
        assert!(!subspace_leq(&b, &a).unwrap());
    }

    #[test]
    fn subspace_counts_are_gaussian_binomial_sums() {
        assert_eq!(all_subspaces(gf(2), 4).len(), 67);
        assert_eq!(all_subspaces(gf(3), 4).len(), 212);
        assert_eq!(all_subspaces(gf(2), 0).len(), 1);
        let all = all_subspaces(gf(3), 3);
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn kernel_and_solve() {
        let f = gf(3);
        // images of e0,e1,e2: (1,1), (2,2), (0,1)
        let images = vec![vec![1, 1], vec![2, 2], vec![0, 1]];
        let k = left_kernel(f, &images, 2);
        assert_eq!(k.dim(), 1);
        // 1*(1,1) + 1*(2,2) = 0
        assert!(k.contains(&Vector::from_ints(f, &[1, 1, 0])));
        let x = solve_combination(f, &images, 2, &[2, 0]).unwrap();
        let mut acc = [0u32; 2];
        for (c, img) in x.iter().zip(&images) {
            for (a, &b) in acc.iter_mut().zip(img) {
                *a = f.add(*a, f.mul(*c, b));
            }
        }
        assert_eq!(acc, [2, 0]);
        assert!(solve_combination(f, &images[..2], 2, &[1, 0]).is_none());
    }

    fn arb_vectors(p: u32, n: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
        prop::collection::vec(prop::collection::vec(0..p, n), 0..6)
    }

    proptest! {
        #[test]
        fn modular_law(a in arb_vectors(3, 5), b in arb_vectors(3, 5)) {
            let f = gf(3);
            let sa = Subspace::from_raw_rows(f, 5, a);
            let sb = Subspace::from_raw_rows(f, 5, b);
            prop_assert_eq!(
                sa.join(&sb).dim() + sa.meet(&sb).dim(),
                sa.dim() + sb.dim()
            );
            prop_assert!(sa.meet(&sb).is_within(&sa));
            prop_assert!(sa.is_within(&sa.join(&sb)));
        }

        #[test]
        fn span_is_canonical(a in arb_vectors(2, 5), shuffle in any::<u64>()) {
            let f = gf(2);
            let s = Subspace::from_raw_rows(f, 5, a.clone());
            // a different generating set: the basis plus random sums, reversed
            let mut gens: Vec<Vec<u32>> = s.rows().to_vec();
            for (i, r) in a.iter().enumerate() {
                if (shuffle >> (i % 64)) & 1 == 1 {
                    gens.push(r.clone());
                }
            }
            gens.reverse();
            let t = Subspace::from_raw_rows(f, 5, gens);
            prop_assert_eq!(&s, &t);
            prop_assert_eq!(Subspace::from_raw_rows(f, 5, s.rows().to_vec()), s);
        }

        #[test]
        fn enumeration_agrees_with_membership(a in arb_vectors(3, 4)) {
            let f = gf(3);
            let s = Subspace::from_raw_rows(f, 4, a);
            let elems: std::collections::HashSet<Vector> = s.elements().collect();
            prop_assert_eq!(elems.len() as u128, 3u128.pow(s.dim() as u32));
            for x in Subspace::full(f, 4).elements() {
                prop_assert_eq!(s.contains(&x), elems.contains(&x));
            }
        }
    }
}
