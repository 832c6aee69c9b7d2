//! Data-parallel sweeps over independent items.
//!
//! With the `parallel` feature these dispatch to rayon; without it they run
//! as plain iterators. Results always come back in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub(crate) fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return items.par_iter().map(f).collect();

    #[cfg(not(feature = "parallel"))]
    return items.iter().map(f).collect();
}

pub(crate) fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return (0..n).into_par_iter().map(f).collect();

    #[cfg(not(feature = "parallel"))]
    return (0..n).map(f).collect();
}

pub(crate) fn all<T, F>(items: &[T], f: F) -> bool
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return items.par_iter().all(f);

    #[cfg(not(feature = "parallel"))]
    return items.iter().all(f);
}

/// Runs `f` with every sweep inside it forced onto a single thread.
///
/// Used by the benches to compare against the default thread pool. Without
/// the `parallel` feature this just calls `f`.
pub fn sequential<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .expect("single-thread pool");
        pool.install(f)
    }

    #[cfg(not(feature = "parallel"))]
    f()
}

/// Whether sweeps run on the rayon pool in this build.
pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
