//! Products, brackets, closures, generated ideals, centralizers and C-spans
//! of subspaces of an algebra.
//!
//! Every "additive subgroup generated by all `ab`" is computed as the span
//! of the products of basis pairs. Over the prime field this is exact:
//! the product is bilinear and scalars are integers mod p.

use crate::algebra::{Algebra, Element};
use crate::classify;
use crate::error::{Error, Result};
use crate::linalg::{left_kernel, solve_combination, SpanBuilder, Subspace, Vector};
use crate::par::{self, Exec};

fn check_pair(alg: &Algebra, a: &Subspace, b: &Subspace) -> Result<()> {
    alg.check_subspace(a)?;
    alg.check_subspace(b)
}

pub(crate) fn products(alg: &Algebra, a: &Subspace, b: &Subspace) -> Subspace {
    let mut out = SpanBuilder::new(alg.field(), alg.dim());
    'outer: for x in a.rows() {
        for y in b.rows() {
            if out.is_full() {
                break 'outer;
            }
            out.insert_raw(alg.mul_raw(x, y));
        }
    }
    out.finish()
}

pub(crate) fn brackets(alg: &Algebra, a: &Subspace, b: &Subspace) -> Subspace {
    let mut out = SpanBuilder::new(alg.field(), alg.dim());
    'outer: for x in a.rows() {
        for y in b.rows() {
            if out.is_full() {
                break 'outer;
            }
            out.insert_raw(alg.bracket_raw(x, y));
        }
    }
    out.finish()
}

/// `[S, R]`, spanned by `[s_i, e_j]`.
pub(crate) fn brackets_with_algebra(alg: &Algebra, s: &Subspace) -> Subspace {
    let mut out = SpanBuilder::new(alg.field(), alg.dim());
    for x in s.rows() {
        for j in 0..alg.dim() {
            if out.is_full() {
                return out.finish();
            }
            let e = unit(alg.dim(), j);
            out.insert_raw(alg.bracket_raw(x, &e));
        }
    }
    out.finish()
}

fn unit(d: usize, j: usize) -> Vec<u32> {
    let mut v = vec![0; d];
    v[j] = 1;
    v
}

/// `AB`: the subspace spanned by all products `ab`.
pub fn product_space(alg: &Algebra, a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_pair(alg, a, b)?;
    Ok(products(alg, a, b))
}

/// `[A, B]`: the subspace spanned by all commutators `[a, b]`.
pub fn bracket_space(alg: &Algebra, a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_pair(alg, a, b)?;
    Ok(brackets(alg, a, b))
}

/// `L^m` with `L^1 = L` and `L^m = L^(m-1) L`.
pub fn power_space(alg: &Algebra, l: &Subspace, m: usize) -> Result<Subspace> {
    alg.check_subspace(l)?;
    if m < 1 {
        return Err(Error::InvalidParameter("power must be at least 1".into()));
    }
    Ok(power(alg, l, m))
}

pub(crate) fn power(alg: &Algebra, l: &Subspace, m: usize) -> Subspace {
    let mut acc = l.clone();
    for _ in 1..m {
        if acc.is_zero() {
            break;
        }
        acc = products(alg, &acc, l);
    }
    acc
}

/// Product `K_1 K_2 ... K_m` of a nonempty list of subspaces.
pub(crate) fn product_of(alg: &Algebra, factors: &[&Subspace]) -> Subspace {
    let mut acc = factors[0].clone();
    for f in &factors[1..] {
        acc = products(alg, &acc, f);
    }
    acc
}

/// The ideal generated by `S`: `S + RS + SR + RSR`, evaluated as
/// `T + TR` with `T = S + RS`.
pub fn ideal_generated(alg: &Algebra, s: &Subspace) -> Result<Subspace> {
    alg.check_subspace(s)?;
    Ok(ideal_of(alg, s))
}

pub(crate) fn ideal_of(alg: &Algebra, s: &Subspace) -> Subspace {
    let d = alg.dim();
    let mut left = SpanBuilder::from_subspace(s);
    for x in s.rows() {
        for j in 0..d {
            if left.is_full() {
                break;
            }
            left.insert_raw(alg.mul_raw(&unit(d, j), x));
        }
    }
    let t = left.finish();
    let mut out = SpanBuilder::from_subspace(&t);
    for x in t.rows() {
        for j in 0..d {
            if out.is_full() {
                break;
            }
            out.insert_raw(alg.mul_raw(x, &unit(d, j)));
        }
    }
    let ideal = out.finish();
    debug_assert!(is_ideal(alg, &ideal));
    ideal
}

/// Largest ideal of `R` contained in `S`: all `x` with `x, Rx, xR, RxR ⊆ S`.
/// This set is an ideal, lies in `S`, and contains every ideal inside `S`.
pub fn ideal_core(alg: &Algebra, s: &Subspace) -> Result<Subspace> {
    alg.check_subspace(s)?;
    Ok(core_of(alg, s))
}

pub(crate) fn core_of(alg: &Algebra, s: &Subspace) -> Subspace {
    if s.is_full() {
        return s.clone();
    }
    if s.is_zero() {
        return s.clone();
    }
    let d = alg.dim();
    let images: Vec<Vec<u32>> = (0..d)
        .map(|k| {
            let ek = unit(d, k);
            let mut img = Vec::with_capacity(d * (1 + 2 * d + d * d));
            img.extend(s.reduce_raw(&ek));
            for i in 0..d {
                let ei = unit(d, i);
                let left = alg.mul_raw(&ei, &ek);
                img.extend(s.reduce_raw(&left));
                img.extend(s.reduce_raw(&alg.mul_raw(&ek, &ei)));
                for j in 0..d {
                    img.extend(s.reduce_raw(&alg.mul_raw(&left, &unit(d, j))));
                }
            }
            img
        })
        .collect();
    let width = images[0].len();
    let core = left_kernel(alg.field(), &images, width);
    debug_assert!(core.is_within(s) && is_ideal(alg, &core));
    core
}

/// Smallest Lie ideal containing `S`: iterate `T <- T + [T, R]`.
pub fn lie_ideal_closure(alg: &Algebra, s: &Subspace) -> Result<Subspace> {
    alg.check_subspace(s)?;
    Ok(lie_closure(alg, s))
}

pub(crate) fn lie_closure(alg: &Algebra, s: &Subspace) -> Subspace {
    let d = alg.dim();
    let mut current = s.clone();
    // only brackets of newly added rows can contribute; track a frontier
    let mut frontier: Vec<Vec<u32>> = s.rows().to_vec();
    while !frontier.is_empty() {
        let mut b = SpanBuilder::from_subspace(&current);
        let mut next = Vec::new();
        for x in &frontier {
            for j in 0..d {
                if b.is_full() {
                    break;
                }
                let y = alg.bracket_raw(x, &unit(d, j));
                if b.insert_raw(y.clone()) {
                    next.push(y);
                }
            }
        }
        current = b.finish();
        frontier = next;
    }
    current
}

/// A witness that `S` is not a Lie ideal: a basis row `s` of `S`, a basis
/// index `j` and `[s, e_j] ∉ S`.
pub fn lie_ideal_violation(alg: &Algebra, s: &Subspace) -> Option<(Vector, usize, Vector)> {
    let d = alg.dim();
    for x in s.rows() {
        for j in 0..d {
            let y = alg.bracket_raw(x, &unit(d, j));
            if !s.contains_raw(&y) {
                return Some((
                    Vector::from_raw(alg.field(), x.clone()),
                    j,
                    Vector::from_raw(alg.field(), y),
                ));
            }
        }
    }
    None
}

/// `[S, R] ⊆ S`
pub fn is_lie_ideal(alg: &Algebra, s: &Subspace) -> bool {
    let d = alg.dim();
    s.rows()
        .iter()
        .all(|x| (0..d).all(|j| s.contains_raw(&alg.bracket_raw(x, &unit(d, j)))))
}

/// `RS + SR ⊆ S`
pub fn is_ideal(alg: &Algebra, s: &Subspace) -> bool {
    let d = alg.dim();
    s.rows().iter().all(|x| {
        (0..d).all(|j| {
            let e = unit(d, j);
            s.contains_raw(&alg.mul_raw(&e, x)) && s.contains_raw(&alg.mul_raw(x, &e))
        })
    })
}

/// Multiplicative closure of `A`: iterate `T <- T + T T`.
pub fn subring_closure(alg: &Algebra, a: &Subspace) -> Subspace {
    let mut t = a.clone();
    loop {
        let next = t.join(&products(alg, &t, &t));
        if next.dim() == t.dim() {
            return t;
        }
        t = next;
    }
}

/// `{x : [x, s] = 0 for all s in S}`.
pub fn centralizer(alg: &Algebra, s: &Subspace) -> Subspace {
    let d = alg.dim();
    let k = s.dim();
    if k == 0 {
        return alg.full_space();
    }
    let images: Vec<Vec<u32>> = (0..d)
        .map(|i| {
            let e = unit(d, i);
            let mut img = Vec::with_capacity(d * k);
            for x in s.rows() {
                img.extend(alg.bracket_raw(&e, x));
            }
            img
        })
        .collect();
    left_kernel(alg.field(), &images, d * k)
}

/// `Z(R)`; computed once per algebra.
pub fn center(alg: &Algebra) -> Subspace {
    alg.cached_center(|| centralizer(alg, &alg.full_space()))
        .clone()
}

pub(crate) fn center_ref(alg: &Algebra) -> &Subspace {
    alg.cached_center(|| centralizer(alg, &alg.full_space()))
}

/// Requires a simple unital algebra, the regime where the extended centroid
/// is the center.
pub(crate) fn require_simple_unital(alg: &Algebra) -> Result<()> {
    if !alg.is_unital() {
        return Err(Error::Unsupported(format!("{} has no unity", alg.name())));
    }
    match classify::is_simple(alg, classify::DEFAULT_BUDGET) {
        Ok(true) => Ok(()),
        Ok(false) => Err(Error::Unsupported(format!("{} is not simple", alg.name()))),
        Err(Error::BudgetExceeded { .. }) => Err(Error::Unsupported(format!(
            "simplicity of {} cannot be decided within budget",
            alg.name()
        ))),
        Err(e) => Err(e),
    }
}

/// `SC`: the span of `s z` over `s` in `S` and `z` in `Z(R)`.
pub fn c_span(alg: &Algebra, s: &Subspace) -> Result<Subspace> {
    alg.check_subspace(s)?;
    require_simple_unital(alg)?;
    Ok(c_span_of(alg, s))
}

pub(crate) fn c_span_of(alg: &Algebra, s: &Subspace) -> Subspace {
    products(alg, s, center_ref(alg))
}

/// Dimension over `C = Z(R)` of a C-submodule.
pub fn dim_over_c(alg: &Algebra, s: &Subspace) -> Result<usize> {
    alg.check_subspace(s)?;
    require_simple_unital(alg)?;
    if c_span_of(alg, s) != *s {
        return Err(Error::NotCSubmodule);
    }
    Ok(s.dim() / center_ref(alg).dim())
}

pub(crate) fn c_dim(alg: &Algebra, c_module: &Subspace) -> usize {
    c_module.dim() / center_ref(alg).dim()
}

/// Whether `a` is invertible: both `ax = 1` and `ya = 1` are solvable.
pub fn is_unit(alg: &Algebra, a: &Element) -> Result<bool> {
    alg.check_element(a)?;
    let one = alg.unity().ok_or(Error::NotUnital)?;
    Ok(is_unit_of(alg, a, one))
}

pub(crate) fn is_unit_of(alg: &Algebra, a: &Element, one: &Element) -> bool {
    let d = alg.dim();
    let right: Vec<Vec<u32>> = (0..d)
        .map(|k| alg.mul_raw(a.coords(), &unit(d, k)))
        .collect();
    let left: Vec<Vec<u32>> = (0..d)
        .map(|k| alg.mul_raw(&unit(d, k), a.coords()))
        .collect();
    solve_combination(alg.field(), &right, d, one.coords()).is_some()
        && solve_combination(alg.field(), &left, d, one.coords()).is_some()
}

/// `E(R)`: span of all idempotents, by exhaustive element scan.
pub fn idempotent_span(alg: &Algebra, element_budget: u128, exec: Exec) -> Result<Subspace> {
    let n = alg.element_count();
    if n > element_budget {
        return Err(Error::BudgetExceeded {
            needed: n,
            budget: element_budget,
        });
    }
    let full = alg.full_space();
    let found = par::map_range(exec, n, |i| {
        let e = full.element_at(i);
        (alg.mul_raw(e.coords(), e.coords()) == e.coords()).then_some(e)
    });
    let idempotents: Vec<Vector> = found.into_iter().flatten().collect();
    Ok(Subspace::spanned_by(alg.field(), alg.dim(), &idempotents))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{
        field_algebra, field_algebra_default, matrix_algebra, strict_triangular_algebra,
        tensor_product, triangular_algebra,
    };
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sp(alg: &Algebra, vs: &[&[i64]]) -> Subspace {
        let vecs: Vec<Vector> = vs.iter().map(|c| alg.element(c).unwrap()).collect();
        Subspace::spanned_by(alg.field(), alg.dim(), &vecs)
    }

    fn m22() -> Algebra {
        matrix_algebra(2, 2).unwrap()
    }

    // coordinates in M2: (e11, e12, e21, e22)
    const ONE: &[i64] = &[1, 0, 0, 1];
    const E11: &[i64] = &[1, 0, 0, 0];
    const E12: &[i64] = &[0, 1, 0, 0];
    const E21: &[i64] = &[0, 0, 1, 0];

    /// Oracle for element-level sets: every pairwise product/bracket of
    /// elements, spanned.
    fn elementwise(alg: &Algebra, a: &Subspace, b: &Subspace, bracket: bool) -> Subspace {
        let mut all = Vec::new();
        for x in a.elements() {
            for y in b.elements() {
                all.push(if bracket {
                    alg.commutator(&x, &y)
                } else {
                    alg.mul(&x, &y)
                });
            }
        }
        Subspace::spanned_by(alg.field(), alg.dim(), &all)
    }

    #[test]
    fn product_space_examples() {
        let m = m22();
        let zero = m.zero_space();
        assert!(product_space(&m, &zero, &m.full_space()).unwrap().is_zero());
        let p = product_space(&m, &sp(&m, &[E12]), &sp(&m, &[E21])).unwrap();
        assert_eq!(p, sp(&m, &[E11]));
        assert!(product_space(&m, &m.full_space(), &m.full_space())
            .unwrap()
            .is_full());
    }

    #[test]
    fn bracket_space_examples() {
        let m = m22();
        assert!(bracket_space(&m, &sp(&m, &[E12]), &sp(&m, &[E12]))
            .unwrap()
            .is_zero());
        let rr = bracket_space(&m, &m.full_space(), &m.full_space()).unwrap();
        assert_eq!(rr, sp(&m, &[ONE, E12, E21]));
        let m3 = matrix_algebra(2, 3).unwrap();
        let rr3 = bracket_space(&m3, &m3.full_space(), &m3.full_space()).unwrap();
        assert_eq!(rr3, sp(&m3, &[&[1, 0, 0, -1], E12, E21]));
    }

    #[test]
    fn span_over_basis_pairs_matches_elementwise() {
        let m = m22();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let a = Subspace::spanned_by(m.field(), 4, &[Vector::random(m.field(), 4, &mut rng)]);
            let b = Subspace::spanned_by(
                m.field(),
                4,
                &[
                    Vector::random(m.field(), 4, &mut rng),
                    Vector::random(m.field(), 4, &mut rng),
                ],
            );
            assert_eq!(products(&m, &a, &b), elementwise(&m, &a, &b, false));
            assert_eq!(brackets(&m, &a, &b), elementwise(&m, &a, &b, true));
        }
    }

    #[test]
    fn random_elements_land_in_computed_spans() {
        let alg = matrix_algebra(2, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = Subspace::spanned_by(
            alg.field(),
            4,
            &[
                Vector::random(alg.field(), 4, &mut rng),
                Vector::random(alg.field(), 4, &mut rng),
            ],
        );
        let b = Subspace::spanned_by(alg.field(), 4, &[Vector::random(alg.field(), 4, &mut rng)]);
        let ab = products(&alg, &a, &b);
        let br = brackets(&alg, &a, &b);
        for _ in 0..100 {
            let x = a.random_element(&mut rng);
            let y = b.random_element(&mut rng);
            assert!(ab.contains(&alg.mul(&x, &y)));
            assert!(br.contains(&alg.commutator(&x, &y)));
        }
    }

    #[test]
    fn power_examples() {
        let m = m22();
        let l = sp(&m, &[E12]);
        assert_eq!(power_space(&m, &l, 1).unwrap(), l);
        assert!(power_space(&m, &l, 2).unwrap().is_zero());
        let sl2 = sp(&m, &[ONE, E12, E21]);
        assert!(power_space(&m, &sl2, 2).unwrap().is_full());
        assert!(power_space(&m, &l, 0).is_err());
    }

    #[test]
    fn ideal_generated_examples() {
        let m = m22();
        assert!(ideal_generated(&m, &m.zero_space()).unwrap().is_zero());
        assert!(ideal_generated(&m, &sp(&m, &[E12])).unwrap().is_full());
        let t = triangular_algebra(2, 2).unwrap();
        // basis e11, e12, e22
        let e12 = sp(&t, &[&[0, 1, 0]]);
        assert_eq!(ideal_generated(&t, &e12).unwrap(), e12);
    }

    #[test]
    fn ideal_generated_through_unitization() {
        let n = strict_triangular_algebra(3, 2).unwrap();
        let u = crate::algebra::unitization(&n);
        assert_eq!(u.dim(), n.dim() + 1);
        for a in n.full_space().elements() {
            let s = Subspace::spanned_by(n.field(), n.dim(), std::slice::from_ref(&a));
            let mut lifted = a.coords().to_vec();
            lifted.push(0);
            let s_u = Subspace::from_raw_rows(u.field(), u.dim(), vec![lifted]);
            // R~ S R~ inside the unitization, as products with the full space
            let full = u.full_space();
            let inside = products(&u, &products(&u, &full, &s_u), &full);
            let back = Subspace::from_raw_rows(
                n.field(),
                n.dim(),
                inside.rows().iter().map(|r| {
                    assert_eq!(r[n.dim()], 0);
                    r[..n.dim()].to_vec()
                }),
            );
            assert_eq!(back, ideal_generated(&n, &s).unwrap());
        }
    }

    #[test]
    fn lie_closure_examples() {
        let m = m22();
        let z = center(&m);
        assert_eq!(lie_ideal_closure(&m, &z).unwrap(), z);
        assert_eq!(
            lie_ideal_closure(&m, &sp(&m, &[E12])).unwrap(),
            sp(&m, &[ONE, E12])
        );
        assert!(lie_ideal_closure(&m, &sp(&m, &[E11])).unwrap().is_full());
    }

    #[test]
    fn lie_ideal_predicates() {
        let m = m22();
        assert!(is_lie_ideal(&m, &m.full_space()));
        assert!(is_lie_ideal(&m, &sp(&m, &[ONE, E12])));
        let m3 = matrix_algebra(2, 3).unwrap();
        let plane = sp(&m3, &[ONE, E12]);
        assert!(!is_lie_ideal(&m3, &plane));
        let (_, _, br) = lie_ideal_violation(&m3, &plane).unwrap();
        assert!(!plane.contains(&br));
        assert!(is_ideal(&m, &m.full_space()));
        assert!(!is_ideal(&m, &sp(&m, &[E12])));
    }

    #[test]
    fn center_examples() {
        for (n, p) in [(2, 2), (2, 3), (3, 2)] {
            let m = matrix_algebra(n, p).unwrap();
            let z = center(&m);
            assert_eq!(z.dim(), 1);
            assert!(z.contains(m.unity().unwrap()));
        }
        let g4 = field_algebra(2, 2, &[1, 1]).unwrap();
        assert!(center(&g4).is_full());
        let mg = tensor_product(&m22(), &field_algebra_default(2, 2).unwrap()).unwrap();
        assert_eq!(center(&mg).dim(), 2);
    }

    #[test]
    fn centralizer_examples() {
        let m = m22();
        assert!(centralizer(&m, &m.zero_space()).is_full());
        assert_eq!(centralizer(&m, &sp(&m, &[E12])), sp(&m, &[ONE, E12]));
        assert_eq!(centralizer(&m, &m.full_space()), center(&m));
    }

    #[test]
    fn centralizer_is_basis_independent() {
        let m = matrix_algebra(2, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let gens: Vec<Vector> = (0..2)
                .map(|_| Vector::random(m.field(), 4, &mut rng))
                .collect();
            let s = Subspace::spanned_by(m.field(), 4, &gens);
            let mut more = gens.clone();
            more.push(gens[0].add(&gens[1]));
            more.reverse();
            let direct: Vec<Vector> = m
                .full_space()
                .elements()
                .filter(|x| gens.iter().all(|g| m.commutator(x, g).is_zero()))
                .collect();
            assert_eq!(
                centralizer(&m, &s),
                Subspace::spanned_by(m.field(), 4, &direct)
            );
        }
    }

    #[test]
    fn c_span_examples() {
        let m = m22();
        let l = sp(&m, &[E12]);
        assert_eq!(c_span(&m, &l).unwrap(), l);
        let mg = tensor_product(&m, &field_algebra_default(2, 2).unwrap()).unwrap();
        // e12 ⊗ 1 has index (1 * 2 + 0)
        let a = Subspace::from_raw_rows(
            mg.field(),
            8,
            vec![{
                let mut v = vec![0; 8];
                v[2] = 1;
                v
            }],
        );
        let ca = c_span(&mg, &a).unwrap();
        assert_eq!(ca.dim(), 2);
        assert_eq!(dim_over_c(&mg, &ca).unwrap(), 1);
        assert_eq!(c_span(&mg, &center(&mg)).unwrap(), center(&mg));
        assert_eq!(dim_over_c(&mg, &mg.full_space()).unwrap(), 4);
        assert_eq!(dim_over_c(&m, &m.full_space()).unwrap(), 4);
        assert_eq!(dim_over_c(&mg, &center(&mg)).unwrap(), 1);
        assert_eq!(dim_over_c(&mg, &a), Err(Error::NotCSubmodule));
        let t = triangular_algebra(2, 2).unwrap();
        assert!(matches!(
            c_span(&t, &t.full_space()),
            Err(Error::Unsupported(_))
        ));
        let n = strict_triangular_algebra(2, 2).unwrap();
        assert!(matches!(
            c_span(&n, &n.full_space()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn unit_examples() {
        let m = m22();
        assert!(is_unit(&m, m.unity().unwrap()).unwrap());
        assert!(!is_unit(&m, &m.element(E12).unwrap()).unwrap());
        assert!(is_unit(&m, &m.element(&[1, 1, 0, 1]).unwrap()).unwrap());
        let n = strict_triangular_algebra(2, 2).unwrap();
        assert_eq!(is_unit(&n, &n.zero()), Err(Error::NotUnital));
    }

    #[test]
    fn idempotent_span_examples() {
        for p in [2, 3, 5] {
            let g = field_algebra(p, 1, &[1]).unwrap();
            let e = idempotent_span(&g, 1 << 20, Exec::Sequential).unwrap();
            assert_eq!(
                e,
                Subspace::spanned_by(g.field(), 1, &[g.unity().unwrap().clone()])
            );
        }
        assert!(idempotent_span(&m22(), 1 << 20, Exec::Parallel)
            .unwrap()
            .is_full());
        let n = strict_triangular_algebra(3, 2).unwrap();
        assert!(idempotent_span(&n, 1 << 20, Exec::Parallel)
            .unwrap()
            .is_zero());
        assert!(matches!(
            idempotent_span(&m22(), 8, Exec::Sequential),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn subring_closure_is_multiplicatively_closed() {
        let m = matrix_algebra(2, 3).unwrap();
        let s = sp(&m, &[E12, E21]);
        let c = subring_closure(&m, &s);
        assert!(products(&m, &c, &c).is_within(&c));
        assert!(c.is_full());
    }
}
