//! Parallel census: the outer permutation range is split across a rayon pool
//! and the per-chunk tables are merged.

use bipmap_core::census::{all_perms, census_range, check_size, CensusData};

pub const WORKERS_ENV: &str = "BIPMAP_WORKERS";

/// Worker count from `BIPMAP_WORKERS`, else rayon's default.
pub fn workers() -> usize {
    std::env::var(WORKERS_ENV).ok().and_then(|v| v.parse().ok()).filter(|&w| w > 0).unwrap_or_else(rayon::current_num_threads)
}

pub fn census(n: usize, allow_large: bool, workers: usize) -> bipmap_core::Result<CensusData> {
    check_size(n, allow_large)?;
    let perms = all_perms(n);
    let total = perms.len();
    let chunks = (workers * 8).clamp(1, total);
    let ranges: Vec<_> = (0..chunks).map(|i| (i * total / chunks)..((i + 1) * total / chunks)).collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build().expect("thread pool");
    let parts: Vec<CensusData> = pool.install(|| {
        use rayon::prelude::*;
        ranges.into_par_iter().map(|r| census_range(n, &perms, r)).collect()
    });
    let mut out = CensusData { n, ..Default::default() };
    for p in parts {
        out.merge(p);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn independent_of_partitioning() {
        let seq = bipmap_core::census::census(5, false).unwrap();
        for w in [1, 3] {
            assert_eq!(census(5, false, w).unwrap(), seq);
        }
    }
}
