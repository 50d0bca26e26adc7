//! Finite-dimensional associative algebras over GF(p), given by structure
//! constants `e_i * e_j = sum_k c[i][j][k] e_k`.

mod constructors;
mod definition;
mod poly;

pub use constructors::{
    direct_sum, field_algebra, field_algebra_default, matrix_algebra, strict_triangular_algebra,
    tensor_product, triangular_algebra, unitization,
};
pub use definition::{parse_builtin, AlgebraDefinition};
pub use poly::{default_irreducible, is_irreducible};

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::linalg::{solve_combination, PrimeField, Subspace, Vector};

/// Ring elements are coordinate vectors in the algebra's basis.
pub type Element = Vector;

pub struct Algebra {
    name: String,
    field: PrimeField,
    dim: usize,
    /// `table[(i * dim + j) * dim + k] = c[i][j][k]`
    table: Vec<u32>,
    unity: Option<Vector>,
    center: OnceLock<Subspace>,
    commutative: OnceLock<bool>,
    simple: OnceLock<bool>,
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Algebra {
            name: self.name.clone(),
            field: self.field,
            dim: self.dim,
            table: self.table.clone(),
            unity: self.unity.clone(),
            center: self.center.clone(),
            commutative: self.commutative.clone(),
            simple: self.simple.clone(),
        }
    }
}

/// Equality of the defining data; caches are ignored.
impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.field == other.field
            && self.dim == other.dim
            && self.table == other.table
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("name", &self.name)
            .field("field", &self.field)
            .field("dim", &self.dim)
            .finish_non_exhaustive()
    }
}

impl Algebra {
    /// Builds an algebra from a dense table, rejecting non-associative
    /// tables.
    pub fn from_table(
        name: impl Into<String>,
        field: PrimeField,
        dim: usize,
        table: Vec<u32>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter(
                "algebra dimension must be at least 1".into(),
            ));
        }
        if table.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&c| c >= field.p()) {
            return Err(Error::UnreducedCoordinate {
                value: bad as u64,
                p: field.p(),
            });
        }
        let mut alg = Algebra {
            name: name.into(),
            field,
            dim,
            table,
            unity: None,
            center: OnceLock::new(),
            commutative: OnceLock::new(),
            simple: OnceLock::new(),
        };
        if let Some((i, j, k)) = alg.associativity_violation() {
            return Err(Error::NonAssociative { i, j, k });
        }
        alg.unity = alg.solve_unity();
        Ok(alg)
    }

    /// Builds an algebra from sparse `(i, j, k, c)` entries. Omitted entries
    /// are zero; repeated `(i, j, k)` triples are rejected.
    pub fn from_entries(
        name: impl Into<String>,
        field: PrimeField,
        dim: usize,
        entries: &[(usize, usize, usize, i64)],
    ) -> Result<Self> {
        let mut table = vec![0u32; dim * dim * dim];
        let mut seen = vec![false; dim * dim * dim];
        for &(i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::IndexOutOfRange { i, j, k, dim });
            }
            let at = (i * dim + j) * dim + k;
            if seen[at] {
                return Err(Error::DuplicateEntry { i, j, k });
            }
            seen[at] = true;
            table[at] = field.reduce(c);
        }
        Self::from_table(name, field, dim, table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// The characteristic p.
    #[inline]
    pub fn p(&self) -> u32 {
        self.field.p()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn constant(&self, i: usize, j: usize, k: usize) -> u32 {
        self.table[(i * self.dim + j) * self.dim + k]
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    /// Coordinates of `e_i * e_j`.
    #[inline]
    pub fn basis_product(&self, i: usize, j: usize) -> &[u32] {
        let at = (i * self.dim + j) * self.dim;
        &self.table[at..at + self.dim]
    }

    /// Nonzero structure constants in `(i, j, k)` order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, u32)> {
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, &c) in self.basis_product(i, j).iter().enumerate() {
                    if c != 0 {
                        out.push((i, j, k, c));
                    }
                }
            }
        }
        out
    }

    pub fn zero(&self) -> Element {
        Vector::zero(self.field, self.dim)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Vector::unit(self.field, self.dim, i)
    }

    pub fn element(&self, coords: &[i64]) -> Result<Element> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: coords.len(),
            });
        }
        Ok(Vector::from_ints(self.field, coords))
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.field, self.dim)
    }

    /// Every element, in `Subspace::element_at` order.
    pub fn element_count(&self) -> u128 {
        (self.p() as u128)
            .checked_pow(self.dim as u32)
            .unwrap_or(u128::MAX)
    }

    pub(crate) fn check_element(&self, a: &Element) -> Result<()> {
        if a.field() != self.field {
            return Err(Error::FieldMismatch {
                left: self.p(),
                right: a.field().p(),
            });
        }
        if a.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: a.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.field() != self.field {
            return Err(Error::FieldMismatch {
                left: self.p(),
                right: s.field().p(),
            });
        }
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.ambient_dim(),
            });
        }
        Ok(())
    }

    /// Product on raw coordinates: bilinear extension of the table.
    pub(crate) fn mul_raw(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = self.field;
        let d = self.dim;
        let mut out = vec![0u32; d];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = f.mul(ai, bj);
                let row = self.basis_product(i, j);
                for (o, &r) in out.iter_mut().zip(row) {
                    if r != 0 {
                        *o = f.add(*o, f.mul(c, r));
                    }
                }
            }
        }
        out
    }

    pub(crate) fn bracket_raw(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = self.field;
        let ab = self.mul_raw(a, b);
        let ba = self.mul_raw(b, a);
        ab.iter().zip(&ba).map(|(&x, &y)| f.sub(x, y)).collect()
    }

    /// Product `a * b`. Panics if either operand is from a different space;
    /// see [`Algebra::multiply`] for the checked form.
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        assert_eq!(a.len(), self.dim, "element dimension mismatch");
        assert_eq!(b.len(), self.dim, "element dimension mismatch");
        Vector::from_raw(self.field, self.mul_raw(a.coords(), b.coords()))
    }

    /// Commutator `ab - ba`; panics on mismatch like [`Algebra::mul`].
    pub fn commutator(&self, a: &Element, b: &Element) -> Element {
        assert_eq!(a.len(), self.dim, "element dimension mismatch");
        assert_eq!(b.len(), self.dim, "element dimension mismatch");
        Vector::from_raw(self.field, self.bracket_raw(a.coords(), b.coords()))
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(self.mul(a, b))
    }

    pub fn bracket(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(self.commutator(a, b))
    }

    pub fn unity(&self) -> Option<&Element> {
        self.unity.as_ref()
    }

    pub fn is_unital(&self) -> bool {
        self.unity.is_some()
    }

    pub fn is_commutative(&self) -> bool {
        *self.commutative.get_or_init(|| {
            (0..self.dim).all(|i| {
                (i + 1..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i))
            })
        })
    }

    pub(crate) fn cached_center(&self, init: impl FnOnce() -> Subspace) -> &Subspace {
        self.center.get_or_init(init)
    }

    pub(crate) fn cached_simplicity(&self) -> Option<bool> {
        self.simple.get().copied()
    }

    pub(crate) fn record_simplicity(&self, simple: bool) {
        let _ = self.simple.set(simple);
    }

    /// First basis triple violating associativity, in lexicographic order.
    fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j).to_vec();
                for k in 0..d {
                    let lhs = self.mul_raw(&ij, &unit(d, k));
                    let rhs = self.mul_raw(&unit(d, i), self.basis_product(j, k));
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Solves `u e_i = e_i u = e_i` for all basis elements.
    fn solve_unity(&self) -> Option<Vector> {
        let d = self.dim;
        let images: Vec<Vec<u32>> = (0..d)
            .map(|k| {
                let mut img = Vec::with_capacity(2 * d * d);
                for i in 0..d {
                    img.extend_from_slice(self.basis_product(k, i));
                    img.extend_from_slice(self.basis_product(i, k));
                }
                img
            })
            .collect();
        let mut target = Vec::with_capacity(2 * d * d);
        for i in 0..d {
            let e = unit(d, i);
            target.extend_from_slice(&e);
            target.extend_from_slice(&e);
        }
        solve_combination(self.field, &images, 2 * d * d, &target)
            .map(|u| Vector::from_raw(self.field, u))
    }
}

fn unit(d: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

/// The unique two-sided unity, if the algebra has one.
pub fn find_unity(alg: &Algebra) -> Option<Element> {
    alg.unity().cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// Oracle: plain 2x2 matrix product over GF(p), row-major coordinates.
    fn mat2(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut out = vec![0; 4];
        for r in 0..2 {
            for c in 0..2 {
                out[r * 2 + c] = (0..2).map(|k| a[r * 2 + k] * b[k * 2 + c]).sum::<u32>() % p;
            }
        }
        out
    }

    #[test]
    fn matrix_products_match_oracle() {
        for p in [2u32, 3] {
            let m = matrix_algebra(2, p).unwrap();
            for a in m.full_space().elements() {
                for b in m.full_space().elements() {
                    assert_eq!(m.mul(&a, &b).coords(), &mat2(p, a.coords(), b.coords())[..]);
                }
            }
        }
        let m = matrix_algebra(2, 2).unwrap();
        // e12 * e21 = e11
        assert_eq!(
            m.mul(&m.basis_element(1), &m.basis_element(2)),
            m.basis_element(0)
        );
        let a = m.element(&[1, 1, 0, 1]).unwrap();
        assert!(m.mul(&a, &m.zero()).is_zero());
        assert_eq!(&m.mul(m.unity().unwrap(), &a), &a);
    }

    #[test]
    fn bracket_examples() {
        let m = matrix_algebra(2, 2).unwrap();
        let e12 = m.basis_element(1);
        let e21 = m.basis_element(2);
        // [e21, e12] = e22 - e11 = 1 in characteristic 2
        assert_eq!(&m.commutator(&e21, &e12), m.unity().unwrap());
        let a = m.element(&[1, 1, 0, 0]).unwrap();
        assert!(m.commutator(&a, &a).is_zero());
        let m3 = matrix_algebra(2, 3).unwrap();
        let x = m3.element(&[1, 2, 0, 1]).unwrap();
        let y = m3.element(&[0, 1, 1, 2]).unwrap();
        assert!(m3.commutator(&x, &y).add(&m3.commutator(&y, &x)).is_zero());
    }

    #[test]
    fn checked_ops_reject_mismatch() {
        let m = matrix_algebra(2, 2).unwrap();
        let short = Vector::zero(gf(2), 3);
        assert!(m.multiply(&short, &m.zero()).is_err());
        let other = Vector::zero(gf(3), 4);
        assert!(matches!(
            m.bracket(&other, &m.zero()),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn rejects_non_associative_table() {
        // e0*e0 = e1, everything else zero except e1*e0 = e0:
        // (e0 e0) e0 = e1 e0 = e0, e0 (e0 e0) = e0 e1 = 0
        let err =
            Algebra::from_entries("bad", gf(2), 2, &[(0, 0, 1, 1), (1, 0, 0, 1)]).unwrap_err();
        assert_eq!(err, Error::NonAssociative { i: 0, j: 0, k: 0 });
    }

    #[test]
    fn rejects_bad_entries() {
        assert!(matches!(
            Algebra::from_entries("x", gf(2), 2, &[(0, 0, 2, 1)]),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            Algebra::from_entries("x", gf(2), 1, &[(0, 0, 0, 1), (0, 0, 0, 1)]),
            Err(Error::DuplicateEntry { i: 0, j: 0, k: 0 })
        ));
        assert!(Algebra::from_entries("x", gf(2), 0, &[]).is_err());
    }

    #[test]
    fn unity_detection() {
        let m = matrix_algebra(3, 2).unwrap();
        let id = m.element(&[1, 0, 0, 0, 1, 0, 0, 0, 1]).unwrap();
        assert_eq!(find_unity(&m), Some(id));
        assert_eq!(find_unity(&strict_triangular_algebra(2, 2).unwrap()), None);
        let a = matrix_algebra(2, 2).unwrap();
        let b = matrix_algebra(3, 2).unwrap();
        let s = direct_sum(&a, &b).unwrap();
        let mut expect = a.unity().unwrap().coords().to_vec();
        expect.extend_from_slice(b.unity().unwrap().coords());
        assert_eq!(s.unity().unwrap().coords(), &expect[..]);
    }

    #[test]
    fn random_triples_associate_and_have_characteristic_p() {
        let catalog = [
            matrix_algebra(2, 3).unwrap(),
            triangular_algebra(3, 2).unwrap(),
            tensor_product(
                &matrix_algebra(2, 2).unwrap(),
                &field_algebra_default(2, 2).unwrap(),
            )
            .unwrap(),
            direct_sum(
                &matrix_algebra(2, 2).unwrap(),
                &matrix_algebra(2, 2).unwrap(),
            )
            .unwrap(),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for alg in &catalog {
            for _ in 0..100 {
                let a = Vector::random(alg.field(), alg.dim(), &mut rng);
                let b = Vector::random(alg.field(), alg.dim(), &mut rng);
                let c = Vector::random(alg.field(), alg.dim(), &mut rng);
                assert_eq!(alg.mul(&alg.mul(&a, &b), &c), alg.mul(&a, &alg.mul(&b, &c)));
                let mut pa = alg.zero();
                for _ in 0..alg.p() {
                    pa = pa.add(&a);
                }
                assert!(pa.is_zero());
            }
        }
    }
}
