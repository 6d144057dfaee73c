//! Batch verifiers binding minors, regions and tilings together: contiguous minors against
//! truncated diamonds, semicontiguous minors against Q-regions and their mirrors, the
//! condensation identities, the enumeration and symbolic oracles, and the network checks.

pub mod condense;
pub mod netsuite;
pub mod oracles;
pub mod report;
pub mod sample;
pub mod theorems;

pub use condense::{dodgson_suite, jaw_suite, kuo_suite, random_subregion, recurrence_suite, verify_condensations};
pub use netsuite::{network_family, verify_networks};
pub use oracles::{oracle_equivalence, symbolic_consistency};
pub use report::{summarize, Summary, VerificationReport};
pub use sample::{generic_matrix, random_matrix, rng, Generic};
pub use theorems::{
    all_type_labels, contiguous_sweep, q_params, reference_cases, semicontig_specs, types_seen, verify_reference_case,
    verify_semicontig, verify_theorem1, verify_theorem2, verify_theorem3, ReferenceCase, SweepBounds, WORKED_EXAMPLE,
};

use cminor_minors::MinorError;
use cminor_networks::NetworkError;
use cminor_regions::RegionError;
use cminor_tilings::TilingError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("matrix is not generic: CM_{{{x},{y}}} = 0")]
    GenericityViolation { x: i64, y: usize },
    #[error("bad case: {0}")]
    BadCase(String),
    #[error(transparent)]
    Minor(#[from] MinorError),
    #[error(transparent)]
    Region(#[from] RegionError),
    #[error(transparent)]
    Tiling(#[from] TilingError),
    #[error(transparent)]
    Network(#[from] NetworkError),
}

/// Runs `f` over `items` on `jobs` threads; results come back in input order.
pub fn run_parallel<T: Sync, R: Send>(items: &[T], jobs: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let jobs = jobs.max(1).min(items.len().max(1));
    if jobs == 1 {
        return items.iter().map(f).collect();
    }
    let f = &f;
    let mut slots: Vec<Option<R>> = (0..items.len()).map(|_| None).collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|j| {
                scope.spawn(move || {
                    items.iter().enumerate().skip(j).step_by(jobs).map(|(i, t)| (i, f(t))).collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, r) in h.join().expect("worker panicked") {
                slots[i] = Some(r);
            }
        }
    });
    slots.into_iter().map(|r| r.expect("every slot is filled")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_keeps_order() {
        let items: Vec<u32> = (0..50).collect();
        assert_eq!(run_parallel(&items, 4, |x| x * 2), items.iter().map(|x| x * 2).collect::<Vec<_>>());
        assert_eq!(run_parallel(&items, 1, |x| x + 1)[49], 50);
        assert!(run_parallel(&Vec::<u32>::new(), 3, |x| *x).is_empty());
    }
}
