use std::cmp::Ordering;
use std::fmt;

use rand::Rng;

use super::vector::axpy;
use super::{PrimeField, Vector};

/// Incremental reduced-row-echelon builder.
///
/// Rows are kept sorted by pivot column, every pivot entry is 1 and every
/// other row is zero in that column, so the final matrix is the canonical
/// basis of the span.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl SpanBuilder {
    pub fn new(field: PrimeField, ambient: usize) -> Self {
        SpanBuilder {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        SpanBuilder {
            field: s.field,
            ambient: s.ambient,
            rows: s.rows.clone(),
            pivots: s.pivots.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    fn reduce(&self, v: &mut [u32]) {
        for (row, &q) in self.rows.iter().zip(&self.pivots) {
            let c = v[q];
            if c != 0 {
                axpy(self.field, v, self.field.neg(c), row);
            }
        }
    }

    /// Adds a raw coordinate vector; returns whether the span grew.
    pub fn insert_raw(&mut self, mut v: Vec<u32>) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        if self.is_full() {
            return false;
        }
        self.reduce(&mut v);
        let Some(q) = v.iter().position(|&c| c != 0) else {
            return false;
        };
        let f = self.field;
        let lead = v[q];
        if lead != 1 {
            let inv = f.inv(lead);
            for c in v.iter_mut() {
                *c = f.mul(*c, inv);
            }
        }
        for row in self.rows.iter_mut() {
            let c = row[q];
            if c != 0 {
                axpy(f, row, f.neg(c), &v);
            }
        }
        let at = self.pivots.partition_point(|&p| p < q);
        self.pivots.insert(at, q);
        self.rows.insert(at, v);
        true
    }

    pub fn insert(&mut self, v: &Vector) -> bool {
        assert_eq!(v.field(), self.field, "mixed fields");
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        self.insert_raw(v.coords().to_vec())
    }

    pub fn insert_all(&mut self, s: &Subspace) {
        for row in &s.rows {
            if self.is_full() {
                break;
            }
            self.insert_raw(row.clone());
        }
    }

    pub fn finish(self) -> Subspace {
        Subspace {
            field: self.field,
            ambient: self.ambient,
            rows: self.rows,
            pivots: self.pivots,
        }
    }
}

/// A subspace of GF(p)^n in canonical reduced row echelon form.
///
/// Two subspaces are equal as sets exactly when their bases are identical,
/// so the derived `Eq`/`Hash` are set equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        SpanBuilder::new(field, ambient).finish()
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut r = vec![0; ambient];
                r[i] = 1;
                r
            })
            .collect();
        Subspace {
            field,
            ambient,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of vectors; panics on field or length mismatch. See
    /// [`crate::linalg::span`] for the checked form.
    pub fn spanned_by<'a, I>(field: PrimeField, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a Vector>,
    {
        let mut b = SpanBuilder::new(field, ambient);
        for v in vectors {
            if b.is_full() {
                break;
            }
            b.insert(v);
        }
        b.finish()
    }

    pub(crate) fn from_raw_rows<I>(field: PrimeField, ambient: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        let mut b = SpanBuilder::new(field, ambient);
        for r in rows {
            if b.is_full() {
                break;
            }
            b.insert_raw(r);
        }
        b.finish()
    }

    /// Wraps rows already known to be in canonical form.
    pub(crate) fn from_rref_unchecked(
        field: PrimeField,
        ambient: usize,
        rows: Vec<Vec<u32>>,
        pivots: Vec<usize>,
    ) -> Self {
        let s = Subspace {
            field,
            ambient,
            rows,
            pivots,
        };
        debug_assert!(s.is_canonical());
        s
    }

    fn is_canonical(&self) -> bool {
        self.rows
            .iter()
            .zip(&self.pivots)
            .enumerate()
            .all(|(i, (row, &q))| {
                row[..q].iter().all(|&c| c == 0)
                    && row[q] == 1
                    && (i == 0 || self.pivots[i - 1] < q)
                    && self
                        .rows
                        .iter()
                        .enumerate()
                        .all(|(j, other)| j == i || other[q] == 0)
            })
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// Canonical basis rows.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> Vec<Vector> {
        self.rows
            .iter()
            .map(|r| Vector::from_raw(self.field, r.clone()))
            .collect()
    }

    /// Residue of `v` after elimination against the basis; zero iff `v` is in
    /// the subspace. The map is linear in `v`.
    pub fn reduce_raw(&self, v: &[u32]) -> Vec<u32> {
        let mut w = v.to_vec();
        for (row, &q) in self.rows.iter().zip(&self.pivots) {
            let c = w[q];
            if c != 0 {
                axpy(self.field, &mut w, self.field.neg(c), row);
            }
        }
        w
    }

    pub fn contains_raw(&self, v: &[u32]) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        if self.is_full() {
            return true;
        }
        self.reduce_raw(v).iter().all(|&c| c == 0)
    }

    /// Membership; panics on length mismatch.
    pub fn contains(&self, v: &Vector) -> bool {
        assert_eq!(v.field(), self.field, "mixed fields");
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        self.contains_raw(v.coords())
    }

    fn check_same_ambient(&self, other: &Subspace) {
        assert_eq!(self.field, other.field, "mixed fields");
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
    }

    /// `self ⊆ other`
    pub fn is_within(&self, other: &Subspace) -> bool {
        self.check_same_ambient(other);
        self.dim() <= other.dim() && self.rows.iter().all(|r| other.contains_raw(r))
    }

    /// Subspace sum `self + other`.
    pub fn join(&self, other: &Subspace) -> Subspace {
        self.check_same_ambient(other);
        let (big, small) = if self.dim() >= other.dim() {
            (self, other)
        } else {
            (other, self)
        };
        let mut b = SpanBuilder::from_subspace(big);
        b.insert_all(small);
        b.finish()
    }

    /// Intersection, via the Zassenhaus construction: row-reduce
    /// `[a | a]` stacked on `[b | 0]`; rows whose left half vanishes carry
    /// a basis of the intersection in their right half.
    pub fn meet(&self, other: &Subspace) -> Subspace {
        self.check_same_ambient(other);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.field, self.ambient);
        }
        if self.is_within(other) {
            return self.clone();
        }
        if other.is_within(self) {
            return other.clone();
        }
        let n = self.ambient;
        let mut b = SpanBuilder::new(self.field, 2 * n);
        for r in &self.rows {
            let mut v = r.clone();
            v.extend_from_slice(r);
            b.insert_raw(v);
        }
        for r in &other.rows {
            let mut v = r.clone();
            v.extend(std::iter::repeat_n(0, n));
            b.insert_raw(v);
        }
        let reduced = b.finish();
        Subspace::from_raw_rows(
            self.field,
            n,
            reduced
                .rows
                .iter()
                .zip(&reduced.pivots)
                .filter(|(_, &q)| q >= n)
                .map(|(r, _)| r[n..].to_vec()),
        )
    }

    /// Number of elements, `p^dim`, saturating at `u128::MAX`.
    pub fn element_count(&self) -> u128 {
        (self.field.p() as u128)
            .checked_pow(self.dim() as u32)
            .unwrap_or(u128::MAX)
    }

    /// The element whose basis coefficients are the base-p digits of
    /// `index` (least significant first).
    pub fn element_at(&self, mut index: u128) -> Vector {
        let p = self.field.p() as u128;
        let mut v = vec![0u32; self.ambient];
        for row in &self.rows {
            let c = (index % p) as u32;
            index /= p;
            axpy(self.field, &mut v, c, row);
        }
        Vector::from_raw(self.field, v)
    }

    /// Iterates every element of the subspace in `element_at` order.
    pub fn elements(&self) -> impl Iterator<Item = Vector> + '_ {
        let count = self.element_count();
        (0..count).map(move |i| self.element_at(i))
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Vector {
        let mut v = vec![0u32; self.ambient];
        for row in &self.rows {
            let c = rng.gen_range(0..self.field.p());
            axpy(self.field, &mut v, c, row);
        }
        Vector::from_raw(self.field, v)
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by (ambient, dim, basis rows), the canonical listing order.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.field, self.ambient, self.rows.len(), &self.rows).cmp(&(
            other.field,
            other.ambient,
            other.rows.len(),
            &other.rows,
        ))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} of {}; {:?})",
            self.dim(),
            self.ambient,
            self.rows
        )
    }
}
