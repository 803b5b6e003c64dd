//! Exhaustive censuses: rectangular groupoids, central groupoids and
//! one-element blow-ups of rectangular bands.
//!
//! Work is split at the top of each search tree across a rayon pool; every
//! result set is sorted before it is returned, so output never depends on the
//! number of workers.

mod blow_up;
mod central;
mod rectangular;
mod state;

pub use blow_up::{count_one_element_blow_ups, enumerate_band_blow_ups, BLOW_UP_BOUND};
pub use central::{enumerate_central, CentralCensus, CENTRAL_BOUND, CENTRAL_LONG_RUN_BOUND};
pub use rectangular::{
    count_rectangular, enumerate_rectangular, for_each_rectangular, Census, Mode,
    ISOMORPHISM_BOUND, ISOTOPY_CENSUS_BOUND, LABELED_COUNT_BOUND, LABELED_LIST_BOUND,
};

use crate::error::{Error, Result};

/// Runs `f` inside a pool of `jobs` workers; `0` means rayon's default.
pub(crate) fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::WorkerPool(e.to_string()))?;
    Ok(pool.install(f))
}
