//! Data-parallel helpers. With the `parallel` feature (on by default) these
//! fan out over rayon's pool; without it they run sequentially. Output order is
//! always the input order, so results are identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..len` and collects in index order.
#[cfg(feature = "parallel")]
pub fn map_range<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_range<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    map_range_seq(len, f)
}

/// Sequential variant, always available (benchmarks compare the two).
pub fn map_range_seq<T, F>(len: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..len).map(f).collect()
}

/// Maps `f` over a slice and collects in order.
#[cfg(feature = "parallel")]
pub fn map_slice<S, T, F>(items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_slice<S, T, F>(items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    items.iter().map(f).collect()
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
