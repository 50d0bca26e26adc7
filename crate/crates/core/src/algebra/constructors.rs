use super::poly::{default_irreducible, is_irreducible, rem_monic};
use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::PrimeField;

fn prime(p: u32) -> Result<PrimeField> {
    PrimeField::new(p)
}

/// Matrix units `e_uv` on the given index pairs; `e_uv * e_wx = [v == w] e_ux`.
fn matrix_units(name: String, field: PrimeField, pairs: &[(usize, usize)]) -> Result<Algebra> {
    let d = pairs.len();
    let index = |u: usize, v: usize| pairs.iter().position(|&q| q == (u, v));
    let mut table = vec![0u32; d * d * d];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        for (j, &(w, x)) in pairs.iter().enumerate() {
            if v == w {
                let k = index(u, x).expect("matrix unit set closed under products");
                table[(i * d + j) * d + k] = 1;
            }
        }
    }
    Algebra::from_table(name, field, d, table)
}

/// The full matrix algebra M_n(GF(p)) on basis `e_uv`, index `u * n + v`.
pub fn matrix_algebra(n: usize, p: u32) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "matrix size must be at least 1".into(),
        ));
    }
    let field = prime(p)?;
    let pairs: Vec<_> = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).collect();
    matrix_units(format!("M{n}(F{p})"), field, &pairs)
}

/// Upper triangular n x n matrices, basis `e_uv` (u <= v) in row-major order.
pub fn triangular_algebra(n: usize, p: u32) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "matrix size must be at least 1".into(),
        ));
    }
    let field = prime(p)?;
    let pairs: Vec<_> = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
    matrix_units(format!("T{n}(F{p})"), field, &pairs)
}

/// Strictly upper triangular n x n matrices (nilpotent, no unity).
pub fn strict_triangular_algebra(n: usize, p: u32) -> Result<Algebra> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "strictly triangular algebra needs n >= 2".into(),
        ));
    }
    let field = prime(p)?;
    let pairs: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    matrix_units(format!("N{n}(F{p})"), field, &pairs)
}

/// GF(p^k) = GF(p)[x]/(min_poly), basis `1, x, ..., x^(k-1)`.
///
/// `min_poly` lists coefficients from the constant term up; the leading 1
/// may be given (length `k + 1`) or left implicit (length `k`).
pub fn field_algebra(p: u32, k: usize, min_poly: &[i64]) -> Result<Algebra> {
    let field = prime(p)?;
    if k == 0 || k > 8 {
        return Err(Error::InvalidParameter(format!(
            "extension degree must be in 1..=8, got {k}"
        )));
    }
    let mut poly: Vec<u32> = min_poly.iter().map(|&c| field.reduce(c)).collect();
    match poly.len() {
        n if n == k => poly.push(1),
        n if n == k + 1 && poly[k] == 1 => {}
        _ => {
            return Err(Error::InvalidParameter(format!(
                "minimal polynomial of degree {k} must be monic with {k} or {} coefficients",
                k + 1
            )))
        }
    }
    if !is_irreducible(field, &poly) {
        return Err(Error::ReduciblePolynomial(poly));
    }
    let mut table = vec![0u32; k * k * k];
    for i in 0..k {
        for j in 0..k {
            let mut mono = vec![0u32; i + j + 1];
            mono[i + j] = 1;
            let mut r = rem_monic(field, &mono, &poly);
            r.resize(k, 0);
            table[(i * k + j) * k..(i * k + j + 1) * k].copy_from_slice(&r);
        }
    }
    let name = if k == 1 {
        format!("GF({p})")
    } else {
        format!("GF({p}^{k})")
    };
    Algebra::from_table(name, field, k, table)
}

/// GF(p^k) using [`default_irreducible`] as the modulus.
pub fn field_algebra_default(p: u32, k: usize) -> Result<Algebra> {
    let field = prime(p)?;
    if k == 0 || k > 8 {
        return Err(Error::InvalidParameter(format!(
            "extension degree must be in 1..=8, got {k}"
        )));
    }
    let poly: Vec<i64> = default_irreducible(field, k)
        .iter()
        .map(|&c| c as i64)
        .collect();
    field_algebra(p, k, &poly)
}

fn check_fields(a: &Algebra, b: &Algebra) -> Result<()> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch {
            left: a.p(),
            right: b.p(),
        });
    }
    Ok(())
}

/// `A ⊗ B` on basis pairs `(i, j)`, index `i * dim B + j`.
pub fn tensor_product(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    check_fields(a, b)?;
    let f = a.field();
    let (da, db) = (a.dim(), b.dim());
    let d = da * db;
    let mut table = vec![0u32; d * d * d];
    for i in 0..da {
        for j in 0..db {
            for i2 in 0..da {
                for j2 in 0..db {
                    let row = ((i * db + j) * d + (i2 * db + j2)) * d;
                    for (k, &ca) in a.basis_product(i, i2).iter().enumerate() {
                        if ca == 0 {
                            continue;
                        }
                        for (l, &cb) in b.basis_product(j, j2).iter().enumerate() {
                            table[row + k * db + l] = f.mul(ca, cb);
                        }
                    }
                }
            }
        }
    }
    Algebra::from_table(format!("{}⊗{}", a.name(), b.name()), f, d, table)
}

/// `A ⊕ B` with componentwise product on the concatenated basis.
pub fn direct_sum(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    check_fields(a, b)?;
    let (da, db) = (a.dim(), b.dim());
    let d = da + db;
    let mut table = vec![0u32; d * d * d];
    for i in 0..da {
        for j in 0..da {
            let row = (i * d + j) * d;
            table[row..row + da].copy_from_slice(a.basis_product(i, j));
        }
    }
    for i in 0..db {
        for j in 0..db {
            let row = ((da + i) * d + (da + j)) * d + da;
            table[row..row + db].copy_from_slice(b.basis_product(i, j));
        }
    }
    Algebra::from_table(format!("{}⊕{}", a.name(), b.name()), a.field(), d, table)
}

/// Minimal unitization: the algebra itself if it has a unity, otherwise
/// `A ⊕ GF(p)·1` with the adjoined last basis element acting as unity.
///
/// GF(p) is adjoined rather than the integers: in characteristic p the
/// integers act through GF(p), so generated ideals are the same.
pub fn unitization(a: &Algebra) -> Algebra {
    if a.is_unital() {
        return a.clone();
    }
    let d = a.dim() + 1;
    let one = a.dim();
    let mut table = vec![0u32; d * d * d];
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let row = (i * d + j) * d;
            table[row..row + a.dim()].copy_from_slice(a.basis_product(i, j));
        }
    }
    for i in 0..d {
        table[(one * d + i) * d + i] = 1;
        table[(i * d + one) * d + i] = 1;
    }
    Algebra::from_table(format!("{}~", a.name()), a.field(), d, table)
        .expect("unitization of an associative algebra is associative")
}
