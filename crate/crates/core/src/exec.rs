//! Execution policy for the data-parallel loops (basis enumeration, ledger
//! rows). Results never depend on the policy: parallel paths split work into
//! independent chunks and recombine them in a fixed order.
//!
//! Without the `parallel` feature every policy runs sequentially.

/// How independent work items are scheduled.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    #[default]
    Parallel,
}

impl Parallelism {
    /// Whether this policy actually fans out in the current build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Parallelism::Parallel
    }
}

/// Maps `f` over `items`, returning results in input order.
pub fn map_ordered<I, T, F>(items: Vec<I>, par: Parallelism, f: F) -> Vec<T>
where
    I: Send,
    T: Send,
    F: Fn(I) -> T + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if par.is_parallel() {
        use rayon::prelude::*;
        return items.into_par_iter().map(f).collect();
    }
    let _ = par;
    items.into_iter().map(f).collect()
}

/// Runs `body` on a pool capped at `threads` workers (when the `parallel`
/// feature is on); otherwise runs it inline.
pub fn with_thread_cap<T: Send>(threads: Option<usize>, body: impl FnOnce() -> T + Send) -> T {
    #[cfg(feature = "parallel")]
    if let Some(n) = threads {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            return pool.install(body);
        }
    }
    let _ = threads;
    body()
}
