//! Worker-count plumbing shared by the oracle and the searches.

use rayon::ThreadPoolBuilder;

/// Runs `f` on a dedicated pool with `workers` threads. Falls back to the
/// calling thread when the pool cannot be built.
pub fn install<R: Send>(workers: usize, f: impl FnOnce() -> R + Send) -> R {
    match ThreadPoolBuilder::new().num_threads(workers.max(1)).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Maps `f` over `items` with `workers` threads, preserving input order.
pub fn map_ordered<T, R, F>(workers: usize, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    if workers <= 1 {
        items.iter().map(f).collect()
    } else {
        install(workers, || items.par_iter().map(f).collect())
    }
}
