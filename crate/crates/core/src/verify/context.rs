use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Config, EXHAUSTIVE_ELEMENTS};
use crate::algebra::{Algebra, Element};
use crate::calc::{self, brackets, c_dim, c_span_of, core_of, product_of};
use crate::classify::{self, c_line_plus_center};
use crate::enumerate;
use crate::error::Result;
use crate::linalg::{Subspace, Vector};

/// Write-once memo table safe to share across worker threads. Values are
/// computed outside the lock; a racing duplicate computation is harmless.
struct Memo<K, V>(Mutex<HashMap<K, V>>);

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    fn new() -> Self {
        Memo(Mutex::new(HashMap::new()))
    }

    fn get_or(&self, key: &K, f: impl FnOnce() -> V) -> V {
        if let Some(v) = self.0.lock().unwrap().get(key) {
            return v.clone();
        }
        let v = f();
        self.0.lock().unwrap().insert(key.clone(), v.clone());
        v
    }
}

/// Facts about one Lie ideal `L` of a simple algebra.
#[derive(Clone, Debug)]
pub(crate) struct LieInfo {
    pub lc: Subspace,
    pub c_dim: usize,
    pub central: bool,
    pub abelian: bool,
    /// `LC = Ca + C` for every noncentral `a ∈ L` (false for central `L`).
    pub plane_all: bool,
    /// `LC = Ca + C` for some noncentral `a ∈ L`.
    pub plane_some: bool,
    pub first_noncentral: Option<Element>,
}

/// Shared state of one verification run over one algebra.
pub(crate) struct Ctx<'a> {
    pub alg: &'a Algebra,
    pub config: Config,
    pub center: Subspace,
    /// `[R, R]`
    pub commutators: Subspace,
    lie_ideals: OnceLock<std::result::Result<Vec<Subspace>, String>>,
    exceptional: OnceLock<bool>,
    info: Memo<Subspace, LieInfo>,
    powers: Memo<(Subspace, usize), Subspace>,
    products: Memo<Vec<Subspace>, Subspace>,
}

impl<'a> Ctx<'a> {
    pub fn new(alg: &'a Algebra, config: Config) -> Self {
        let full = alg.full_space();
        Ctx {
            alg,
            config,
            center: calc::center(alg),
            commutators: brackets(alg, &full, &full),
            lie_ideals: OnceLock::new(),
            exceptional: OnceLock::new(),
            info: Memo::new(),
            powers: Memo::new(),
            products: Memo::new(),
        }
    }

    pub fn lie_ideals(&self) -> std::result::Result<&[Subspace], String> {
        self.lie_ideals
            .get_or_init(|| {
                enumerate::all_lie_ideals_with(self.alg, self.config.limit, self.config.exec)
                    .map_err(|e| e.to_string())
            })
            .as_deref()
            .map_err(Clone::clone)
    }

    pub fn noncentral_lie_ideals(&self) -> std::result::Result<Vec<Subspace>, String> {
        Ok(self
            .lie_ideals()?
            .iter()
            .filter(|l| !l.is_within(&self.center))
            .cloned()
            .collect())
    }

    pub fn exceptional(&self) -> bool {
        *self
            .exceptional
            .get_or_init(|| classify::is_exceptional(self.alg).unwrap_or(false))
    }

    pub fn is_central(&self, s: &Subspace) -> bool {
        s.is_within(&self.center)
    }

    pub fn is_central_element(&self, a: &Element) -> bool {
        self.center.contains(a)
    }

    pub fn span1(&self, a: &Element) -> Subspace {
        Subspace::spanned_by(self.alg.field(), self.alg.dim(), [a])
    }

    pub fn power(&self, l: &Subspace, m: usize) -> Subspace {
        if m <= 1 {
            return l.clone();
        }
        self.powers.get_or(&(l.clone(), m), || {
            calc::products(self.alg, &self.power(l, m - 1), l)
        })
    }

    /// `K_1 K_2 ... K_m`, memoized by factor list.
    pub fn product(&self, factors: &[Subspace]) -> Subspace {
        if factors.len() == 1 {
            return factors[0].clone();
        }
        self.products.get_or(&factors.to_vec(), || {
            let refs: Vec<&Subspace> = factors.iter().collect();
            product_of(self.alg, &refs)
        })
    }

    pub fn bracket(&self, a: &Subspace, b: &Subspace) -> Subspace {
        brackets(self.alg, a, b)
    }

    /// `[A, B] = 0`, stopping at the first nonzero commutator.
    pub fn commute(&self, a: &Subspace, b: &Subspace) -> bool {
        a.rows().iter().all(|x| {
            b.rows()
                .iter()
                .all(|y| self.alg.bracket_raw(x, y).iter().all(|&c| c == 0))
        })
    }

    pub fn with_algebra(&self, s: &Subspace) -> Subspace {
        calc::brackets_with_algebra(self.alg, s)
    }

    pub fn ideal(&self, s: &Subspace) -> Subspace {
        calc::ideal_of(self.alg, s)
    }

    /// Largest ideal inside `S`.
    pub fn core(&self, s: &Subspace) -> Subspace {
        core_of(self.alg, s)
    }

    pub fn c_span(&self, s: &Subspace) -> Subspace {
        c_span_of(self.alg, s)
    }

    pub fn c_dim(&self, s: &Subspace) -> usize {
        c_dim(self.alg, s)
    }

    /// `Ca + C`
    pub fn plane(&self, a: &Element) -> Subspace {
        c_line_plus_center(self.alg, a.coords())
    }

    /// `S + aS`
    pub fn plus_multiple(&self, s: &Subspace, a: &Element) -> Subspace {
        s.join(&calc::products(self.alg, &self.span1(a), s))
    }

    pub fn info(&self, l: &Subspace) -> LieInfo {
        self.info.get_or(l, || {
            let lc = self.c_span(l);
            let central = self.is_central(l);
            let c_dim = self.c_dim(&lc);
            let noncentral: Vec<Element> = if central {
                Vec::new()
            } else {
                l.elements()
                    .filter(|a| !self.is_central_element(a))
                    .collect()
            };
            let (plane_all, plane_some) = if central || c_dim != 2 {
                (false, false)
            } else {
                let hits: Vec<bool> = noncentral.iter().map(|a| self.plane(a) == lc).collect();
                (hits.iter().all(|&h| h), hits.iter().any(|&h| h))
            };
            LieInfo {
                c_dim,
                central,
                abelian: self.commute(l, l),
                plane_all,
                plane_some,
                first_noncentral: noncentral.into_iter().next(),
                lc,
            }
        })
    }

    /// Deterministic generator for one check, independent of which other
    /// checks ran before it.
    pub fn rng(&self, salt: &str) -> ChaCha8Rng {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in salt.bytes() {
            h = (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3);
        }
        ChaCha8Rng::seed_from_u64(h ^ self.config.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    /// Every element when there are at most [`EXHAUSTIVE_ELEMENTS`],
    /// otherwise `samples` seeded random elements.
    pub fn element_family(&self, salt: &str) -> Vec<Element> {
        self.elements_of(&self.alg.full_space(), salt)
    }

    pub fn elements_of(&self, s: &Subspace, salt: &str) -> Vec<Element> {
        if s.element_count() <= EXHAUSTIVE_ELEMENTS {
            s.elements().collect()
        } else {
            let mut rng = self.rng(salt);
            (0..self.config.samples)
                .map(|_| s.random_element(&mut rng))
                .collect()
        }
    }

    pub fn random_element(&self, rng: &mut ChaCha8Rng) -> Element {
        Vector::random(self.alg.field(), self.alg.dim(), rng)
    }

    pub fn random_subspace(&self, rng: &mut ChaCha8Rng) -> Subspace {
        let k = rng.gen_range(1..=self.alg.dim().min(3));
        let vs: Vec<Vector> = (0..k).map(|_| self.random_element(rng)).collect();
        Subspace::spanned_by(self.alg.field(), self.alg.dim(), &vs)
    }

    /// Grows a commutative subspace by adding random elements of its own
    /// centralizer.
    pub fn random_abelian_subspace(&self, rng: &mut ChaCha8Rng) -> Subspace {
        let target = rng.gen_range(1..=self.alg.dim());
        let mut v = self.alg.zero_space();
        for _ in 0..target {
            let c = calc::centralizer(self.alg, &v);
            v = v.join(&self.span1(&c.random_element(rng)));
        }
        debug_assert!(self.commute(&v, &v));
        v
    }

    /// Sequences over `items` of every length in `lengths`, with
    /// repetition, in lexicographic order; truncated at the tuple cap.
    /// Returns the sequences and how many were cut.
    pub fn sequences(
        &self,
        items: &[Subspace],
        lengths: std::ops::RangeInclusive<usize>,
    ) -> (Vec<Vec<Subspace>>, u64) {
        let cap = self.config.tuple_cap;
        let n = items.len() as u64;
        let mut total: u64 = 0;
        for len in lengths.clone() {
            total = total.saturating_add(n.saturating_pow(len as u32));
        }
        let mut out = Vec::new();
        'lengths: for len in lengths {
            let mut idx = vec![0usize; len];
            if items.is_empty() {
                break;
            }
            loop {
                if out.len() as u64 >= cap {
                    break 'lengths;
                }
                out.push(idx.iter().map(|&i| items[i].clone()).collect());
                let mut pos = len;
                loop {
                    if pos == 0 {
                        continue 'lengths;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < items.len() {
                        break;
                    }
                    idx[pos] = 0;
                }
            }
        }
        let kept = out.len() as u64;
        (out, total - kept)
    }
}

pub(crate) fn as_result<T>(r: std::result::Result<T, String>) -> Result<T> {
    r.map_err(crate::error::Error::InvalidParameter)
}
