use crate::linalg::PrimeField;

/// Remainder of `a` modulo the monic polynomial `m` (coefficients low to
/// high degree).
pub(crate) fn rem_monic(f: PrimeField, a: &[u32], m: &[u32]) -> Vec<u32> {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead == 0 {
            continue;
        }
        let shift = r.len() - dm;
        for (i, &c) in m[..dm].iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(lead, c));
        }
    }
    r
}

/// Whether a monic polynomial (coefficients low to high, leading 1 included)
/// is irreducible over GF(p): brute force over every monic factor of degree
/// at most half.
pub fn is_irreducible(f: PrimeField, poly: &[u32]) -> bool {
    let k = poly.len().saturating_sub(1);
    if k == 0 {
        return false;
    }
    let p = f.p() as u64;
    for d in 1..=k / 2 {
        for idx in 0..p.pow(d as u32) {
            let mut g = vec![0u32; d + 1];
            g[d] = 1;
            let mut rem = idx;
            for c in g.iter_mut().take(d) {
                *c = (rem % p) as u32;
                rem /= p;
            }
            if rem_monic(f, poly, &g).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The first monic irreducible polynomial of degree `k`, enumerating the
/// non-leading coefficients as a base-p number with the constant term least
/// significant. Gives x^2+x+1 and x^3+x+1 over GF(2).
pub fn default_irreducible(f: PrimeField, k: usize) -> Vec<u32> {
    let p = f.p() as u64;
    for idx in 0.. {
        let mut poly = vec![0u32; k + 1];
        poly[k] = 1;
        let mut rem = idx;
        for c in poly.iter_mut().take(k) {
            *c = (rem % p) as u32;
            rem /= p;
        }
        if rem > 0 {
            break;
        }
        if is_irreducible(f, &poly) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
