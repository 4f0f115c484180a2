//! Partition-parallel witness search.
//!
//! Partitions run concurrently on the current rayon pool. A partition is
//! skipped once a witness is known in an earlier one, and outcomes are
//! merged in partition order, so the result equals the sequential search
//! for any number of threads.

use std::sync::atomic::{AtomicUsize, Ordering};

use nullkit_core::conjectures::{Family, SearchBounds, SearchOutcome, SearchPlan};
use nullkit_core::{FieldSpec, Ideal, Polynomial, Result};
use rayon::prelude::*;

pub fn run_plan(plan: &SearchPlan) -> Result<SearchOutcome> {
    let first_hit = AtomicUsize::new(usize::MAX);
    let outcomes = (0..plan.partition_count())
        .into_par_iter()
        .map(|i| {
            if i > first_hit.load(Ordering::Relaxed) {
                return Ok(None);
            }
            let o = plan.run_partition(i)?;
            if o.witness.is_some() {
                first_hit.fetch_min(i, Ordering::Relaxed);
            }
            Ok(Some(o))
        })
        .collect::<Result<Vec<_>>>()?;
    let hit = first_hit.into_inner();
    // every partition up to the first hit ran to completion
    Ok(plan.merge(outcomes.into_iter().take(hit.saturating_add(1)).map(|o| o.expect("ran")).collect()))
}

pub fn search_witness(
    f: &Polynomial,
    ideal: &Ideal,
    family: Family,
    bounds: SearchBounds,
    points: &FieldSpec,
) -> Result<SearchOutcome> {
    run_plan(&SearchPlan::new(f, ideal, family, bounds, points)?)
}
