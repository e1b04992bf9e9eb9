//! Rayon fan-out for the clique engine and the group scan.
//!
//! Both produce the same results as their serial counterparts in
//! `sfactor_core`: extremal witnesses are tie-broken lexicographically, and
//! the scan reports the first unstable subset in serial order.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;
use sfactor_core::clique::{CliqueEnumerator, EngineError, ExtremalTracker};
use sfactor_core::stability::{
    examine_subset, scan_group_stability, with_identity, Combinations, GroupStabilityReport, Instability,
    ScanOptions, StabilityError, Verdict, EXHAUSTIVE_SCAN_MAX,
};
use sfactor_core::{ExtremalReport, FiniteGroup, Graph, Mode, SetKind};

/// Parallel counterpart of `extremal_clique_numbers` /
/// `extremal_independent_numbers`, splitting on root branches.
pub fn extremal_numbers(graph: &Graph, kind: SetKind, mode: Mode, cap: usize) -> Result<ExtremalReport, EngineError> {
    let owned;
    let g = match kind {
        SetKind::Clique => graph,
        SetKind::Independent => {
            owned = graph.complement();
            &owned
        }
    };
    let engine = CliqueEnumerator::new(g);
    if g.n() == 0 {
        let mut t = ExtremalTracker::new();
        let _ = engine.for_each(&mut |s| {
            t.observe(s);
            ControlFlow::Continue(())
        });
        return Ok(t.finish(kind, true));
    }
    let seen = AtomicUsize::new(0);
    let capped = AtomicBool::new(false);
    let stop = AtomicBool::new(false);
    let trackers: Vec<ExtremalTracker> = engine
        .root_branches()
        .par_iter()
        .map(|branch| {
            let mut t = ExtremalTracker::new();
            let _ = engine.for_each_in_branch(branch, &mut |s| {
                if stop.load(Ordering::Relaxed) {
                    return ControlFlow::Break(());
                }
                if seen.fetch_add(1, Ordering::Relaxed) >= cap {
                    capped.store(true, Ordering::Relaxed);
                    stop.store(true, Ordering::Relaxed);
                    return ControlFlow::Break(());
                }
                t.observe(s);
                if mode == Mode::EarlyExit && t.sizes_differ() {
                    stop.store(true, Ordering::Relaxed);
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            });
            t
        })
        .collect();
    let mut all = ExtremalTracker::new();
    for t in trackers {
        all.merge(t);
    }
    if capped.load(Ordering::Relaxed) {
        return Err(EngineError::CapExceeded { cap, found: cap });
    }
    let early = mode == Mode::EarlyExit && all.sizes_differ();
    Ok(all.finish(kind, !early))
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

enum Event {
    Unstable(Instability),
    Failed(StabilityError),
}

/// Parallel counterpart of [`scan_group_stability`] for orders up to
/// [`EXHAUSTIVE_SCAN_MAX`]; larger orders fall back to the serial random scan.
///
/// Subsets of each size are split by their smallest non-identity element.
/// Every event (unstable subset or error) carries its serial index and the
/// smallest one wins, so the report matches the serial scan exactly.
pub fn scan_group(g: &FiniteGroup, opts: &ScanOptions) -> Result<GroupStabilityReport, StabilityError> {
    let n = g.order();
    if n > EXHAUSTIVE_SCAN_MAX {
        return scan_group_stability(g, opts);
    }
    let budget = opts.budget.unwrap_or(u64::MAX);
    let mut base = 0u64;
    for k in 1..n.saturating_sub(1) {
        let firsts: Vec<(usize, u64)> = (1..=n - k)
            .scan(base, |offset, first| {
                let start = *offset;
                *offset += binomial(n - 1 - first, k - 1);
                Some((first, start))
            })
            .collect();
        let best = AtomicU64::new(u64::MAX);
        let events: Mutex<Vec<(u64, Event)>> = Mutex::new(Vec::new());
        firsts.par_iter().for_each(|&(first, start)| {
            for (i, rest) in Combinations::starting_with(n, k, first).enumerate() {
                let idx = start + i as u64;
                if idx >= budget || idx >= best.load(Ordering::Relaxed) {
                    return;
                }
                let event = match examine_subset(g, &with_identity(&rest), opts.cap) {
                    Ok(None) => continue,
                    Ok(Some(w)) => Event::Unstable(w),
                    Err(e) => Event::Failed(e),
                };
                best.fetch_min(idx, Ordering::Relaxed);
                events.lock().unwrap().push((idx, event));
                return;
            }
        });
        let level = binomial(n - 1, k);
        let first_event = events.into_inner().unwrap().into_iter().min_by_key(|(idx, _)| *idx);
        if let Some((idx, event)) = first_event {
            return match event {
                Event::Unstable(w) => Ok(GroupStabilityReport {
                    verdict: Verdict::Unstable,
                    witness: Some(w),
                    subsets_scanned: idx + 1,
                    exhaustive: false,
                }),
                Event::Failed(e) => Err(e),
            };
        }
        if base + level > budget {
            return Ok(GroupStabilityReport {
                verdict: Verdict::Unknown,
                witness: None,
                subsets_scanned: budget,
                exhaustive: false,
            });
        }
        base += level;
    }
    Ok(GroupStabilityReport { verdict: Verdict::Stable, witness: None, subsets_scanned: base, exhaustive: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use sfactor_core::clique::{extremal_clique_numbers, extremal_independent_numbers, DEFAULT_CAP as CAP};
    use sfactor_core::group::finite_catalog;

    #[test]
    fn binomials() {
        assert_eq!(binomial(23, 5), 33649);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 4), 0);
    }

    #[test]
    fn extremal_matches_serial() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 6), (0, 3)]);
        assert_eq!(
            extremal_numbers(&g, SetKind::Clique, Mode::Exhaustive, CAP).unwrap(),
            extremal_clique_numbers(&g, Mode::Exhaustive, CAP).unwrap()
        );
        assert_eq!(
            extremal_numbers(&g, SetKind::Independent, Mode::Exhaustive, CAP).unwrap(),
            extremal_independent_numbers(&g, Mode::Exhaustive, CAP).unwrap()
        );
        assert!(matches!(
            extremal_numbers(&g, SetKind::Clique, Mode::Exhaustive, 2),
            Err(EngineError::CapExceeded { cap: 2, .. })
        ));
        let empty = Graph::with_vertices(0);
        assert_eq!(extremal_numbers(&empty, SetKind::Clique, Mode::Exhaustive, CAP).unwrap().count, 1);
    }

    #[test]
    fn scan_matches_serial() {
        for d in finite_catalog(12) {
            let g = d.build_finite().unwrap();
            for budget in [None, Some(3), Some(40)] {
                let opts = ScanOptions { budget, ..Default::default() };
                assert_eq!(scan_group(&g, &opts).unwrap(), scan_group_stability(&g, &opts).unwrap(), "{d} {budget:?}");
            }
        }
    }
}
