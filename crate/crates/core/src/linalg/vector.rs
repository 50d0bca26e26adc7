use std::fmt;

use rand::Rng;

use super::PrimeField;
use crate::error::{Error, Result};

/// A coordinate vector over GF(p).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector {
    field: PrimeField,
    coords: Vec<u32>,
}

impl Vector {
    pub fn new(field: PrimeField, coords: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = coords.iter().find(|&&c| c >= field.p()) {
            return Err(Error::UnreducedCoordinate {
                value: bad as u64,
                p: field.p(),
            });
        }
        Ok(Vector { field, coords })
    }

    /// Builds a vector from arbitrary integers, reducing each modulo p.
    pub fn from_ints(field: PrimeField, coords: &[i64]) -> Self {
        Vector {
            field,
            coords: coords.iter().map(|&c| field.reduce(c)).collect(),
        }
    }

    pub(crate) fn from_raw(field: PrimeField, coords: Vec<u32>) -> Self {
        debug_assert!(coords.iter().all(|&c| c < field.p()));
        Vector { field, coords }
    }

    pub fn zero(field: PrimeField, len: usize) -> Self {
        Vector {
            field,
            coords: vec![0; len],
        }
    }

    pub fn unit(field: PrimeField, len: usize, index: usize) -> Self {
        let mut v = Self::zero(field, len);
        v.coords[index] = 1;
        v
    }

    pub fn random<R: Rng + ?Sized>(field: PrimeField, len: usize, rng: &mut R) -> Self {
        Vector {
            field,
            coords: (0..len).map(|_| rng.gen_range(0..field.p())).collect(),
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    #[inline]
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<u32> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn check_compatible(&self, other: &Vector) {
        assert_eq!(self.field, other.field, "mixed fields");
        assert_eq!(self.len(), other.len(), "vector length mismatch");
    }

    pub fn add(&self, other: &Vector) -> Vector {
        self.check_compatible(other);
        let f = self.field;
        Vector {
            field: f,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        self.check_compatible(other);
        let f = self.field;
        Vector {
            field: f,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: u32) -> Vector {
        let f = self.field;
        Vector {
            field: f,
            coords: self.coords.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        self.scale(self.field.p() - 1)
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: u32, other: &Vector) {
        self.check_compatible(other);
        axpy(self.field, &mut self.coords, c, &other.coords);
    }

    /// The vector scaled so that its first nonzero coordinate is 1.
    pub fn normalized(&self) -> Vector {
        match self.coords.iter().find(|&&c| c != 0) {
            Some(&lead) => self.scale(self.field.inv(lead)),
            None => self.clone(),
        }
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

/// `y += c * x` on raw residue slices.
#[inline]
pub(crate) fn axpy(f: PrimeField, y: &mut [u32], c: u32, x: &[u32]) {
    if c == 0 {
        return;
    }
    if f.p() == 2 {
        for (a, &b) in y.iter_mut().zip(x) {
            *a ^= b;
        }
        return;
    }
    for (a, &b) in y.iter_mut().zip(x) {
        if b != 0 {
            *a = f.add(*a, f.mul(c, b));
        }
    }
}
