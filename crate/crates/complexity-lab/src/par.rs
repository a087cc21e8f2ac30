//! Data-parallel map with a sequential fallback.
//!
//! Built with the `parallel` feature (the default), [`map_range`] and
//! [`map_slice`] fan work out over rayon; without it they run in place.
//! Results are collected in index order either way, so every reduction in
//! this crate is independent of the worker count. [`map_range_seq`] is the
//! sequential path kept callable in parallel builds for benchmarking.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map_range_seq<R, F>(n: usize, f: F) -> Vec<R>
where
    F: Fn(usize) -> R + Sync + Send,
    R: Send,
{
    (0..n).map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    F: Fn(usize) -> R + Sync + Send,
    R: Send,
{
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    F: Fn(usize) -> R + Sync + Send,
    R: Send,
{
    map_range_seq(n, f)
}

#[cfg(feature = "parallel")]
pub fn map_slice<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    F: Fn(usize, &T) -> R + Sync + Send,
    R: Send,
{
    items.par_iter().enumerate().map(|(i, t)| f(i, t)).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_slice<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    F: Fn(usize, &T) -> R + Sync + Send,
    R: Send,
{
    items.iter().enumerate().map(|(i, t)| f(i, t)).collect()
}
