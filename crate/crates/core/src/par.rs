//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) [`Exec::Parallel`] runs on the
//! rayon pool; without it every mode runs sequentially. Output order never
//! depends on the mode.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Maps `f` over `0..n`, preserving index order.
pub fn map_range<T, F>(exec: Exec, n: u128, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u128) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        let n = u64::try_from(n).expect("range too large");
        return (0..n).into_par_iter().map(|i| f(i as u128)).collect();
    }
    let _ = exec;
    (0..n).map(f).collect()
}

/// Maps `f` over a slice, preserving order.
pub fn map_slice<S, T, F>(exec: Exec, items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Smallest index in `0..n` satisfying `pred`, if any.
pub fn find_first<F>(exec: Exec, n: u128, pred: F) -> Option<u128>
where
    F: Fn(u128) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        let n = u64::try_from(n).expect("range too large");
        return (0..n)
            .into_par_iter()
            .find_first(|&i| pred(i as u128))
            .map(|i| i as u128);
    }
    let _ = exec;
    (0..n).find(|&i| pred(i))
}
