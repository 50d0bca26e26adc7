use proptest::prelude::*;

use lieideal::algebra::{
    field_algebra_default, matrix_algebra, tensor_product, triangular_algebra,
};
use lieideal::calc::{
    bracket_space, centralizer, ideal_core, ideal_generated, is_ideal, is_lie_ideal,
    lie_ideal_closure, product_space,
};
use lieideal::enumerate::{all_ideals, all_lie_ideals};
use lieideal::{Algebra, Element, Subspace};

fn pool() -> Vec<Algebra> {
    let m22 = matrix_algebra(2, 2).unwrap();
    vec![
        m22.clone(),
        matrix_algebra(2, 3).unwrap(),
        triangular_algebra(3, 2).unwrap(),
        tensor_product(&m22, &field_algebra_default(2, 2).unwrap()).unwrap(),
    ]
}

fn subspace(alg: &Algebra, raw: &[Vec<i64>]) -> Subspace {
    let d = alg.dim();
    let gens: Vec<Element> = raw.iter().map(|v| alg.element(&v[..d]).unwrap()).collect();
    Subspace::spanned_by(alg.field(), d, &gens)
}

fn arb_case() -> impl Strategy<Value = (usize, Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    let vecs = || prop::collection::vec(prop::collection::vec(0i64..3, 8), 0..3);
    (0..4usize, vecs(), vecs())
}

/// Span of `f(x, y)` over all element pairs.
fn span_of_pairs(
    alg: &Algebra,
    a: &Subspace,
    b: &Subspace,
    f: impl Fn(&Element, &Element) -> Element,
) -> Subspace {
    let vals: Vec<Element> = a
        .elements()
        .flat_map(|x| b.elements().map(|y| f(&x, &y)).collect::<Vec<_>>())
        .collect();
    Subspace::spanned_by(alg.field(), alg.dim(), &vals)
}

fn lie_ideal_by_elements(alg: &Algebra, s: &Subspace) -> bool {
    let full = alg.full_space();
    s.elements()
        .all(|x| full.elements().all(|r| s.contains(&alg.commutator(&x, &r))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lie_closure_is_least_lie_ideal((which, s, _) in arb_case()) {
        let alg = &pool()[which];
        let s = subspace(alg, &s);
        let l = lie_ideal_closure(alg, &s).unwrap();
        prop_assert!(s.is_within(&l));
        prop_assert!(is_lie_ideal(alg, &l));
        prop_assert_eq!(lie_ideal_closure(alg, &l).unwrap(), l.clone());
        for k in all_lie_ideals(alg, 100_000).unwrap() {
            if s.is_within(&k) {
                prop_assert!(l.is_within(&k));
            }
        }
    }

    #[test]
    fn generated_ideal_and_core_bracket_the_subspace((which, s, _) in arb_case()) {
        let alg = &pool()[which];
        let s = subspace(alg, &s);
        let up = ideal_generated(alg, &s).unwrap();
        let down = ideal_core(alg, &s).unwrap();
        prop_assert!(is_ideal(alg, &up) && is_ideal(alg, &down));
        prop_assert!(down.is_within(&s) && s.is_within(&up));
        for i in all_ideals(alg, 100_000).unwrap() {
            if s.is_within(&i) {
                prop_assert!(up.is_within(&i));
            }
            if i.is_within(&s) {
                prop_assert!(i.is_within(&down));
            }
        }
    }

    #[test]
    fn lie_ideal_test_matches_element_scan((which, s, _) in arb_case()) {
        let alg = &pool()[which];
        let s = subspace(alg, &s);
        prop_assert_eq!(is_lie_ideal(alg, &s), lie_ideal_by_elements(alg, &s));
    }

    #[test]
    fn products_and_brackets_are_spans_of_elementwise_values((which, a, b) in arb_case()) {
        let alg = &pool()[which];
        let (a, b) = (subspace(alg, &a), subspace(alg, &b));
        prop_assert_eq!(product_space(alg, &a, &b).unwrap(), span_of_pairs(alg, &a, &b, |x, y| alg.mul(x, y)));
        let ab = bracket_space(alg, &a, &b).unwrap();
        prop_assert_eq!(&ab, &span_of_pairs(alg, &a, &b, |x, y| alg.commutator(x, y)));
        prop_assert_eq!(ab, bracket_space(alg, &b, &a).unwrap());
    }

    #[test]
    fn centralizer_matches_element_scan((which, s, _) in arb_case()) {
        let alg = &pool()[which];
        let s = subspace(alg, &s);
        let c = centralizer(alg, &s);
        let full = alg.full_space();
        let commuting = full
            .elements()
            .filter(|x| s.elements().all(|y| alg.commutator(x, &y).is_zero()))
            .count() as u128;
        prop_assert_eq!(c.element_count(), commuting);
        prop_assert!(c.elements().all(|x| s.elements().all(|y| alg.commutator(&x, &y).is_zero())));
    }

    #[test]
    fn bracket_is_a_derivation((which, v, _) in arb_case()) {
        let alg = &pool()[which];
        let d = alg.dim();
        let mut v = v;
        v.resize(3, vec![1, 2, 0, 1, 1, 0, 2, 1]);
        let [a, b, c] = [0, 1, 2].map(|i| alg.element(&v[i][..d]).unwrap());
        let lhs = alg.commutator(&a, &alg.mul(&b, &c));
        let rhs = alg.mul(&alg.commutator(&a, &b), &c).add(&alg.mul(&b, &alg.commutator(&a, &c)));
        prop_assert_eq!(lhs, rhs);
    }
}
