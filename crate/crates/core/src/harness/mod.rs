//! Verification sweeps, reports and persistence.

pub mod cache;
pub mod report;
pub mod sweep;

use serde::{Deserialize, Serialize};

pub use cache::{DiskCache, CACHE_DIR_ENV, FORMAT_VERSION};
pub use report::{Report, Status, Summary, SweepConfig, SweepRow};
pub use sweep::{run_comb, run_sym, sweep_comb, sweep_sym, table, TableRow};

/// How sweep tasks are scheduled. Without the `parallel` feature both
/// variants run sequentially.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parallelism {
    Sequential,
    #[default]
    Parallel,
}

/// Maps `f` over `items`, keeping the input order in the output.
pub(crate) fn map_ordered<T, R, F>(items: &[T], mode: Parallelism, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        Parallelism::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}
