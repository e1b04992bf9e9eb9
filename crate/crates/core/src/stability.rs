//! s-factors, s-indices and stability of subsets and finite groups.
//!
//! [`check_sfactor`] works straight from the definition (unique products,
//! maximality) and never touches a graph; everything else goes through
//! `Cay(G, ∂A)` and the clique engine. The two routes are compared by
//! [`cross_validate_correspondence`].

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cayley::{boundary_set, cayley_graph, CayleyError};
use crate::clique::{
    enumerate_maximal_independent_sets, extremal_independent_numbers, EngineError, Mode,
};
use crate::group::FiniteGroup;

/// Orders up to this bound are scanned over every subset containing `e`.
pub const EXHAUSTIVE_SCAN_MAX: usize = 24;
/// Orders up to this bound are accepted by [`cross_validate_correspondence`].
pub const CROSS_VALIDATE_MAX: usize = 16;
/// Random subsets tried for large groups when no budget is given.
pub const DEFAULT_RANDOM_BUDGET: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StabilityError {
    #[error(transparent)]
    Cayley(#[from] CayleyError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("group order {n} exceeds the limit {max} for this operation")]
    TooLarge { n: usize, max: usize },
    #[error("instability witness for A = {subset:?} failed the definition-level recheck")]
    WitnessRejected { subset: Vec<usize> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SFactorViolation {
    /// `a u = b v` with `(a, u) ≠ (b, v)`.
    Collision { a: usize, u: usize, b: usize, v: usize },
    /// `x ∉ U` and `A(U ∪ {x})` is still direct.
    Extendable { x: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SFactorCheck {
    pub subset_a: Vec<usize>,
    pub candidate_u: Vec<usize>,
    pub sf1: bool,
    pub sf2: bool,
    pub violation: Option<SFactorViolation>,
}

impl SFactorCheck {
    pub fn is_sfactor(&self) -> bool {
        self.sf1 && self.sf2
    }
}

fn normalize(g: &FiniteGroup, s: &[usize]) -> Result<Vec<usize>, CayleyError> {
    if s.is_empty() {
        return Err(CayleyError::EmptySubset);
    }
    if let Some(&x) = s.iter().find(|&&x| x >= g.order()) {
        return Err(CayleyError::OutOfRange(x));
    }
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

/// Checks whether `U` is a right s-factor of `G` associated with `A`.
///
/// When the products are not unique, `sf2` is reported `false` as well and
/// the violation is the first colliding pair found.
pub fn check_sfactor(g: &FiniteGroup, a: &[usize], u: &[usize]) -> Result<SFactorCheck, StabilityError> {
    let a = normalize(g, a)?;
    let u = normalize(g, u)?;
    let mut owner: Vec<Option<(usize, usize)>> = vec![None; g.order()];
    let mut violation = None;
    'outer: for &x in &a {
        for &y in &u {
            let p = g.product(x, y);
            if let Some((b, v)) = owner[p] {
                violation = Some(SFactorViolation::Collision { a: b, u: v, b: x, v: y });
                break 'outer;
            }
            owner[p] = Some((x, y));
        }
    }
    let sf1 = violation.is_none();
    let mut sf2 = false;
    if sf1 {
        let in_u = {
            let mut m = vec![false; g.order()];
            u.iter().for_each(|&y| m[y] = true);
            m
        };
        // Products a x over a ∈ A are pairwise distinct, so only clashes
        // with the existing products matter.
        let extendable = (0..g.order())
            .find(|&x| !in_u[x] && a.iter().all(|&y| owner[g.product(y, x)].is_none()));
        match extendable {
            Some(x) => violation = Some(SFactorViolation::Extendable { x }),
            None => sf2 = true,
        }
    }
    Ok(SFactorCheck { subset_a: a, candidate_u: u, sf1, sf2, violation })
}

/// Lower and upper s-indices with s-factors attaining them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SIndexReport {
    pub lower: usize,
    pub upper: usize,
    pub stable: bool,
    pub witness_min: Vec<usize>,
    pub witness_max: Vec<usize>,
    /// Maximal independent sets of `Cay(G, ∂A)` enumerated.
    pub count: usize,
}

/// `|G:A|⁻ = i(Γ)` and `|G:A|⁺ = α(Γ)` for `Γ = Cay(G, ∂A)`, by full
/// enumeration.
pub fn s_indices(g: &FiniteGroup, a: &[usize], cap: usize) -> Result<SIndexReport, StabilityError> {
    let gamma = cayley_graph(g, &boundary_set(g, a)?);
    let r = extremal_independent_numbers(&gamma, Mode::Exhaustive, cap)?;
    Ok(SIndexReport {
        lower: r.min_maximal_size,
        upper: r.max_size,
        stable: r.all_same_size(),
        witness_min: r.witness_min,
        witness_max: r.witness_max,
        count: r.count,
    })
}

/// `x⁻¹A` for the smallest `x ∈ A`, which contains `e` and has the same `∂`.
pub fn normalize_subset(g: &FiniteGroup, a: &[usize]) -> Result<Vec<usize>, CayleyError> {
    let a = normalize(g, a)?;
    let xi = g.inverse(a[0]);
    Ok(crate::cayley::translate(g, xi, &a))
}

pub fn is_stable_subset(g: &FiniteGroup, a: &[usize], cap: usize) -> Result<bool, StabilityError> {
    let a = normalize_subset(g, a)?;
    let gamma = cayley_graph(g, &boundary_set(g, &a)?);
    let r = extremal_independent_numbers(&gamma, Mode::EarlyExit, cap)?;
    Ok(r.all_same_size())
}

/// An unstable subset together with two s-factors of different sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instability {
    pub subset: Vec<usize>,
    pub lower: usize,
    pub upper: usize,
    pub small: Vec<usize>,
    pub large: Vec<usize>,
}

/// `None` if `A` is stable; otherwise the exact s-indices of `A` and two
/// s-factors attaining them, each rechecked against the definition.
pub fn examine_subset(g: &FiniteGroup, a: &[usize], cap: usize) -> Result<Option<Instability>, StabilityError> {
    let gamma = cayley_graph(g, &boundary_set(g, a)?);
    let quick = extremal_independent_numbers(&gamma, Mode::EarlyExit, cap)?;
    if quick.all_same_size() {
        return Ok(None);
    }
    let (lower, upper, small, large) = match extremal_independent_numbers(&gamma, Mode::Exhaustive, cap) {
        Ok(r) => (r.min_maximal_size, r.max_size, r.witness_min, r.witness_max),
        // Too many s-factors to pin the extremes; the early-exit pair still
        // certifies instability.
        Err(EngineError::CapExceeded { .. }) => {
            (quick.min_maximal_size, quick.max_size, quick.witness_min, quick.witness_max)
        }
        Err(e) => return Err(e.into()),
    };
    for u in [&small, &large] {
        if !check_sfactor(g, a, u)?.is_sfactor() {
            return Err(StabilityError::WitnessRejected { subset: a.to_vec() });
        }
    }
    Ok(Some(Instability { subset: a.to_vec(), lower, upper, small, large }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Stable,
    Unstable,
    /// Budget ran out before the scan was complete.
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Stable => "STABLE",
            Verdict::Unstable => "UNSTABLE",
            Verdict::Unknown => "UNKNOWN",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupStabilityReport {
    pub verdict: Verdict,
    pub witness: Option<Instability>,
    pub subsets_scanned: u64,
    pub exhaustive: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct ScanOptions {
    /// Maximum number of subsets examined.
    pub budget: Option<u64>,
    pub cap: usize,
    pub seed: u64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { budget: None, cap: crate::clique::DEFAULT_CAP, seed: 0x5fac_7012 }
    }
}

/// Lexicographic `k`-subsets of `{1, …, n-1}`, optionally restricted to
/// those whose smallest element is `first`.
#[derive(Clone, Debug)]
pub struct Combinations {
    n: usize,
    cur: Vec<usize>,
    first: Option<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        let cur: Vec<usize> = (1..=k).collect();
        let done = k == 0 || k > n.saturating_sub(1);
        Combinations { n, cur, first: None, done }
    }

    pub fn starting_with(n: usize, k: usize, first: usize) -> Self {
        let cur: Vec<usize> = (first..first + k).collect();
        let done = k == 0 || first == 0 || first + k > n;
        Combinations { n, cur, first: Some(first), done }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        let k = self.cur.len();
        let lowest = if self.first.is_some() { 1 } else { 0 };
        match (lowest..k).rev().find(|&i| self.cur[i] < self.n - k + i) {
            Some(i) => {
                self.cur[i] += 1;
                for j in i + 1..k {
                    self.cur[j] = self.cur[j - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(out)
    }
}

/// Subset `{e} ∪ rest` as sorted indices.
pub fn with_identity(rest: &[usize]) -> Vec<usize> {
    let mut a = Vec::with_capacity(rest.len() + 1);
    a.push(0);
    a.extend_from_slice(rest);
    a
}

/// Decides stability of a finite group.
///
/// Only subsets `A ∋ e` with `2 ≤ |A| ≤ |G| - 1` are examined (one
/// representative per left-translation class; singletons and `G` itself are
/// always stable), by size and then lexicographically, stopping at the first
/// unstable one. Groups larger than [`EXHAUSTIVE_SCAN_MAX`] only get a
/// random sample and never report `Stable`.
pub fn scan_group_stability(g: &FiniteGroup, opts: &ScanOptions) -> Result<GroupStabilityReport, StabilityError> {
    let n = g.order();
    let mut scanned = 0u64;
    if n > EXHAUSTIVE_SCAN_MAX {
        let budget = opts.budget.unwrap_or(DEFAULT_RANDOM_BUDGET);
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        while scanned < budget {
            let mut a = vec![0usize];
            a.extend((1..n).filter(|_| rng.gen_bool(0.5)));
            if a.len() < 2 || a.len() == n {
                continue;
            }
            scanned += 1;
            if let Some(w) = examine_subset(g, &a, opts.cap)? {
                return Ok(GroupStabilityReport {
                    verdict: Verdict::Unstable,
                    witness: Some(w),
                    subsets_scanned: scanned,
                    exhaustive: false,
                });
            }
        }
        return Ok(GroupStabilityReport {
            verdict: Verdict::Unknown,
            witness: None,
            subsets_scanned: scanned,
            exhaustive: false,
        });
    }
    for k in 1..n.saturating_sub(1) {
        for rest in Combinations::new(n, k) {
            if opts.budget.is_some_and(|b| scanned >= b) {
                return Ok(GroupStabilityReport {
                    verdict: Verdict::Unknown,
                    witness: None,
                    subsets_scanned: scanned,
                    exhaustive: false,
                });
            }
            scanned += 1;
            let a = with_identity(&rest);
            if let Some(w) = examine_subset(g, &a, opts.cap)? {
                return Ok(GroupStabilityReport {
                    verdict: Verdict::Unstable,
                    witness: Some(w),
                    subsets_scanned: scanned,
                    exhaustive: false,
                });
            }
        }
    }
    Ok(GroupStabilityReport { verdict: Verdict::Stable, witness: None, subsets_scanned: scanned, exhaustive: true })
}

/// All right s-factors of `A`, by brute force over every `U ⊆ G` using
/// [`check_sfactor`]. Sets are sorted lexicographically.
pub fn sfactor_family(g: &FiniteGroup, a: &[usize]) -> Result<Vec<Vec<usize>>, StabilityError> {
    let n = g.order();
    if n > CROSS_VALIDATE_MAX {
        return Err(StabilityError::TooLarge { n, max: CROSS_VALIDATE_MAX });
    }
    let mut out = Vec::new();
    for mask in 1usize..1 << n {
        let u: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if check_sfactor(g, a, &u)?.is_sfactor() {
            out.push(u);
        }
    }
    out.sort();
    Ok(out)
}

/// Whether the definition-level s-factor family of `A` equals the family of
/// maximal independent sets of `Cay(G, ∂A)`.
pub fn cross_validate_correspondence(g: &FiniteGroup, a: &[usize], cap: usize) -> Result<bool, StabilityError> {
    let by_definition = sfactor_family(g, a)?;
    let gamma = cayley_graph(g, &boundary_set(g, a)?);
    let mut by_graph: Vec<Vec<usize>> = enumerate_maximal_independent_sets(&gamma, cap)?
        .sets
        .iter()
        .map(|s| s.to_vec())
        .collect();
    by_graph.sort();
    Ok(by_definition == by_graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::DEFAULT_CAP;

    fn c(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n).unwrap()
    }

    #[test]
    fn sfactor_examples() {
        let g = c(4);
        let ok = check_sfactor(&g, &[0, 1], &[0, 2]).unwrap();
        assert!(ok.sf1 && ok.sf2);
        let all = check_sfactor(&g, &[0], &[0, 1, 2, 3]).unwrap();
        assert!(all.is_sfactor());
        let bad = check_sfactor(&g, &[0, 1], &[0, 1]).unwrap();
        assert!(!bad.sf1);
        // g·e and e·g collide
        assert_eq!(bad.violation, Some(SFactorViolation::Collision { a: 0, u: 1, b: 1, v: 0 }));
        let small = check_sfactor(&g, &[0, 1], &[0]).unwrap();
        assert!(small.sf1 && !small.sf2);
        assert_eq!(small.violation, Some(SFactorViolation::Extendable { x: 2 }));
        assert!(check_sfactor(&g, &[], &[0]).is_err());
    }

    #[test]
    fn s_index_examples() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let all: Vec<usize> = (0..6).collect();
        let r = s_indices(&g, &all, DEFAULT_CAP).unwrap();
        assert_eq!((r.lower, r.upper), (1, 1));
        let r = s_indices(&g, &[0], DEFAULT_CAP).unwrap();
        assert_eq!((r.lower, r.upper), (6, 6));
        let r = s_indices(&c(4), &[0, 1], DEFAULT_CAP).unwrap();
        assert_eq!((r.lower, r.upper, r.stable), (2, 2, true));
    }

    #[test]
    fn stable_subset_translation() {
        let g = c(4);
        assert!(is_stable_subset(&g, &[1, 2], DEFAULT_CAP).unwrap());
        assert_eq!(normalize_subset(&g, &[1, 2]).unwrap(), vec![0, 1]);
        assert!(is_stable_subset(&g, &[3], DEFAULT_CAP).unwrap());
    }

    #[test]
    fn combinations_in_order() {
        let all: Vec<Vec<usize>> = Combinations::new(5, 2).collect();
        assert_eq!(all, vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]);
        let from2: Vec<Vec<usize>> = Combinations::starting_with(5, 2, 2).collect();
        assert_eq!(from2, vec![vec![2, 3], vec![2, 4]]);
        assert_eq!(Combinations::starting_with(5, 1, 4).count(), 1);
        assert_eq!(Combinations::new(3, 3).count(), 0);
        assert_eq!(Combinations::new(24, 5).count(), 33649);
        let parts: usize = (1..24).map(|f| Combinations::starting_with(24, 5, f).count()).sum();
        assert_eq!(parts, 33649);
    }

    #[test]
    fn tiny_groups_are_stable() {
        for n in 1..=3 {
            let r = scan_group_stability(&c(n), &ScanOptions::default()).unwrap();
            assert_eq!(r.verdict, Verdict::Stable, "C{n}");
        }
    }

    #[test]
    fn budget_gives_unknown() {
        let opts = ScanOptions { budget: Some(0), ..Default::default() };
        let r = scan_group_stability(&c(5), &opts).unwrap();
        assert_eq!(r.verdict, Verdict::Unknown);
    }

    #[test]
    fn correspondence_examples() {
        assert!(cross_validate_correspondence(&c(4), &[0, 1], DEFAULT_CAP).unwrap());
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert!(cross_validate_correspondence(&s3, &[0, s3.resolve("(12)").unwrap()], DEFAULT_CAP).unwrap());
        let fam = sfactor_family(&s3, &[0]).unwrap();
        assert_eq!(fam, vec![(0..6).collect::<Vec<_>>()]);
    }
}
