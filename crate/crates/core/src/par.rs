//! Data-parallel loop helpers with a sequential fallback.
//!
//! Every exhaustive verifier in the crate runs its outer loop (over basis
//! indices, tuples or samples) through these helpers. With the `parallel`
//! feature the loops are dispatched to rayon; without it, or when the
//! runtime strategy is [`Strategy::Sequential`], they run on the calling
//! thread. Results are always returned in index order and searches report the
//! lowest failing index, so output never depends on the schedule.

use std::sync::atomic::{AtomicU8, Ordering};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    Parallel,
}

static STRATEGY: AtomicU8 = AtomicU8::new(1);

/// Selects how the helpers below execute. `Parallel` degrades to sequential
/// execution when the crate is built without the `parallel` feature.
pub fn set_strategy(strategy: Strategy) {
    STRATEGY.store(
        match strategy {
            Strategy::Sequential => 0,
            Strategy::Parallel => 1,
        },
        Ordering::Relaxed,
    );
}

pub fn strategy() -> Strategy {
    match STRATEGY.load(Ordering::Relaxed) {
        0 => Strategy::Sequential,
        _ => Strategy::Parallel,
    }
}

#[cfg(feature = "parallel")]
fn use_parallel(n: usize) -> bool {
    n > 1 && strategy() == Strategy::Parallel
}

/// `(0..n).map(f).collect()`, in order.
pub fn map_range<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if use_parallel(n) {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

/// Maps over a slice, preserving order.
pub fn map_slice<I, T, F>(items: &[I], f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if use_parallel(items.len()) {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}

/// The result of `f` at the smallest index where it returns `Some`.
pub fn find_first<T, F>(n: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if use_parallel(n) {
        use rayon::prelude::*;
        return (0..n).into_par_iter().find_map_first(f);
    }
    (0..n).find_map(f)
}
