//! Oracle searches split over the partner of dart 0 and run on a rayon pool.
//!
//! Every branch is an independent fold and results are combined by addition,
//! so the totals do not depend on the thread count.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use unicell_core::oracle::{root_branches, tally_branch, SearchSpec, Tally};

/// Runs every branch of `spec` on `threads` workers (0: rayon's default),
/// reporting finished branches to standard error when `progress` is set.
pub fn tally_parallel(spec: &SearchSpec, threads: usize, progress: bool) -> Tally {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool");
    let branches: Vec<_> = root_branches(spec).collect();
    let total = branches.len();
    let done = AtomicUsize::new(0);
    pool.install(|| {
        branches
            .par_iter()
            .map(|&p| {
                let t = tally_branch(spec, p);
                let finished = done.fetch_add(1, Ordering::Relaxed) + 1;
                if progress {
                    eprintln!("branch alpha(0)={p}: {} maps ({finished}/{total})", t.maps);
                }
                t
            })
            .sum()
    })
}
