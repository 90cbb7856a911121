//! Switch between rayon and plain loops for the exhaustive scans.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::{Error, Result};

/// How the data-parallel loops in this crate are executed.
///
/// `Parallel` uses the global rayon pool when the `parallel` feature is
/// enabled and degrades to `Sequential` otherwise. Results are identical
/// either way; only wall-clock time differs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

const CHUNK: u64 = 1 << 14;

/// Caps the global worker pool. Returns an error if the pool was already
/// initialised. A no-op without the `parallel` feature.
pub fn configure_threads(threads: usize) -> Result<()> {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Error::ThreadPool(e.to_string()))
    }
    #[cfg(not(feature = "parallel"))]
    {
        if threads == 0 {
            return Err(Error::ThreadPool("thread count must be positive".into()));
        }
        Ok(())
    }
}

/// Applies `f` to every value in `0..total`, keeping the `Some` results in
/// ascending input order.
pub(crate) fn filter_map_range<T, F>(exec: Execution, total: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    let chunks = total.div_ceil(CHUNK);
    let run_chunk = |c: u64| -> Vec<T> {
        let lo = c * CHUNK;
        let hi = (lo + CHUNK).min(total);
        (lo..hi).filter_map(&f).collect()
    };
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            let parts: Vec<Vec<T>> = (0..chunks).into_par_iter().map(run_chunk).collect();
            parts.into_iter().flatten().collect()
        }
        _ => (0..chunks).flat_map(run_chunk).collect(),
    }
}

/// Maps `items` in order, giving each worker its own scratch state.
pub(crate) fn map_with_scratch<I, S, T, N, F>(exec: Execution, items: &[I], init: N, f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    N: Fn() -> S + Sync + Send,
    F: Fn(&mut S, &I) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.par_iter().map_init(&init, |s, item| f(s, item)).collect(),
        _ => {
            let mut scratch = init();
            items.iter().map(|item| f(&mut scratch, item)).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_scan_is_ordered_and_matches_sequential() {
        let total = 3 * CHUNK + 17;
        let keep = |x: u64| (x % 7 == 3).then_some(x * 2);
        let seq = filter_map_range(Execution::Sequential, total, keep);
        let par = filter_map_range(Execution::Parallel, total, keep);
        assert_eq!(seq, par);
        assert!(seq.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(seq.len() as u64, (0..total).filter(|x| x % 7 == 3).count() as u64);
    }

    #[test]
    fn empty_range() {
        let out: Vec<u64> = filter_map_range(Execution::Parallel, 0, Some);
        assert!(out.is_empty());
    }

    #[test]
    fn scratch_map_preserves_order() {
        let items: Vec<u32> = (0..1000).collect();
        let out = map_with_scratch(Execution::Parallel, &items, Vec::<u32>::new, |buf, &x| {
            buf.push(x);
            x + 1
        });
        assert_eq!(out, (1..1001).collect::<Vec<_>>());
    }
}
