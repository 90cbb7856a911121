//! Exhaustive enumeration of hexaflexagon classes by scanning all `2^n`
//! sign sequences and keeping the canonical, valid ones.

use super::{packed, CanonicalSequence, SignSequence, DEFAULT_ENUMERATION_LIMIT};
use crate::geometry::{printable_packed, OverlapGrid, PrintabilityRule};
use crate::labeling::pattern_for;
use crate::par::{filter_map_range, map_with_scratch};
use crate::{Error, Execution, Result};

/// One hexaflexagon class and the data derived from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRecord {
    pub sequence: CanonicalSequence,
    pub sum: i32,
    /// Present when printability was requested.
    pub printable: Option<bool>,
    /// Label sequence of the construction, when requested.
    pub labels: Option<Vec<u32>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub limit: usize,
    pub printability: bool,
    pub labels: bool,
    pub execution: Execution,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            limit: DEFAULT_ENUMERATION_LIMIT,
            printability: false,
            labels: false,
            execution: Execution::default(),
        }
    }
}

pub(crate) fn check_range(n: usize, limit: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::TooFewFaces(n));
    }
    let limit = limit.min(packed::MAX_LEN);
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    Ok(())
}

/// Packed representatives of every valid class of length `n`, ascending.
pub(crate) fn canonical_keys(n: usize, execution: Execution) -> Vec<u64> {
    filter_map_range(execution, 1u64 << n, |x| {
        (packed::is_valid(x, n) && packed::is_canonical(x, n)).then_some(x)
    })
}

/// All classes with `n` faces in lexicographic order, using the default
/// options (sum only).
pub fn enumerate_classes(n: usize) -> Result<Vec<ClassRecord>> {
    enumerate_classes_with(n, &EnumerateOptions::default())
}

pub fn enumerate_classes_with(n: usize, options: &EnumerateOptions) -> Result<Vec<ClassRecord>> {
    check_range(n, options.limit)?;
    let keys = canonical_keys(n, options.execution);
    let grid = || OverlapGrid::new(n + 1);
    let records = map_with_scratch(options.execution, &keys, grid, |grid, &x| {
        let sequence: SignSequence = packed::unpack(x, n);
        let printable = options
            .printability
            .then(|| printable_packed(x, n, PrintabilityRule::default(), grid));
        let labels = if options.labels {
            Some(pattern_for(&sequence).map(|p| p.labels())?)
        } else {
            None
        };
        Ok(ClassRecord {
            sum: sequence.sum(),
            sequence: sequence.canonicalize(),
            printable,
            labels,
        })
    });
    records.into_iter().collect()
}
