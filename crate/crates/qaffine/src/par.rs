//! Data-parallel map with a sequential fallback.
//!
//! The verification suites are embarrassingly parallel over (relation
//! instance, basis state) pairs. With the default `parallel` feature the map
//! runs on rayon; without it the same code path runs sequentially. Output
//! order is the input order either way, so reports are deterministic.

#[cfg(feature = "parallel")]
pub fn par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send + Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(&f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send + Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.iter().map(&f).collect()
}

/// Sequential map with the same signature, for benchmarking against the
/// parallel path.
pub fn seq_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(&f).collect()
}
