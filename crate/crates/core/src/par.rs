//! Scheduling helpers for loops over coordinate-permutation ranks.
//!
//! Both helpers preserve rank order in their results, so output does not
//! depend on the execution mode.

use crate::config::Execution;

pub(crate) fn flat_map_ranks<T, F>(count: u64, execution: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Vec<T> + Sync + Send,
{
    match execution {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            let chunks: Vec<Vec<T>> = (0..count).into_par_iter().map(f).collect();
            chunks.into_iter().flatten().collect()
        }
        _ => (0..count).flat_map(f).collect(),
    }
}

pub(crate) fn find_first_rank<T, F>(count: u64, execution: Execution, f: F) -> Option<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    match execution {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..count).into_par_iter().find_map_first(f)
        }
        _ => (0..count).find_map(f),
    }
}
