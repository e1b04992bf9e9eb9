//! Maximal clique and maximal independent set enumeration.
//!
//! The enumerator is Bron–Kerbosch with Tomita pivoting (pivot from `P ∪ X`
//! maximizing `|P ∩ N(u)|`) over bitsets. Work splits into independent root
//! branches so callers can fan them out across threads and merge the results
//! deterministically.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::ControlFlow;

use crate::bitset::VertexSet;
use crate::cayley::Graph;

pub const DEFAULT_CAP: usize = 1_000_000;

/// Largest graph the `2ⁿ` brute-force oracle accepts.
pub const BRUTE_FORCE_MAX: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SetKind {
    Clique,
    Independent,
}

impl SetKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SetKind::Clique => "clique",
            SetKind::Independent => "independent",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Exhaustive,
    /// Stop at the first two maximal sets of different sizes.
    EarlyExit,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("more than {cap} maximal sets (stopped after {found})")]
    CapExceeded { cap: usize, found: usize },
    #[error("brute force supports at most {max} vertices, graph has {n}")]
    TooLarge { n: usize, max: usize },
}

/// Every maximal set of one kind in a graph, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalSetFamily {
    pub kind: SetKind,
    pub sets: Vec<VertexSet>,
}

impl MaximalSetFamily {
    fn sorted(kind: SetKind, mut sets: Vec<VertexSet>) -> Self {
        sets.sort_by(|a, b| a.lex_cmp(b));
        MaximalSetFamily { kind, sets }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// Extremal sizes of maximal cliques (`ω`, `ι`) or maximal independent sets
/// (`α`, `i`), with witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalReport {
    pub kind: SetKind,
    pub max_size: usize,
    pub min_maximal_size: usize,
    pub witness_max: Vec<usize>,
    pub witness_min: Vec<usize>,
    /// `false` when an early exit skipped part of the enumeration.
    pub exhaustive: bool,
    /// Maximal sets visited.
    pub count: usize,
}

impl ExtremalReport {
    pub fn all_same_size(&self) -> bool {
        self.max_size == self.min_maximal_size
    }
}

/// Accumulates extremal sizes; merging is order-independent because ties are
/// broken by lexicographic order.
#[derive(Clone, Debug)]
pub struct ExtremalTracker {
    best_max: Option<VertexSet>,
    best_min: Option<VertexSet>,
    count: usize,
}

impl Default for ExtremalTracker {
    fn default() -> Self {
        Self::new()
    }
}

fn better(candidate: &VertexSet, current: &Option<VertexSet>, want_larger: bool) -> bool {
    let Some(cur) = current else { return true };
    let (a, b) = (candidate.len(), cur.len());
    match a.cmp(&b) {
        Ordering::Equal => candidate.lex_cmp(cur) == Ordering::Less,
        Ordering::Greater => want_larger,
        Ordering::Less => !want_larger,
    }
}

impl ExtremalTracker {
    pub fn new() -> Self {
        ExtremalTracker { best_max: None, best_min: None, count: 0 }
    }

    pub fn observe(&mut self, set: &VertexSet) {
        self.count += 1;
        if better(set, &self.best_max, true) {
            self.best_max = Some(set.clone());
        }
        if better(set, &self.best_min, false) {
            self.best_min = Some(set.clone());
        }
    }

    pub fn merge(&mut self, other: ExtremalTracker) {
        self.count += other.count;
        if let Some(s) = other.best_max {
            if better(&s, &self.best_max, true) {
                self.best_max = Some(s);
            }
        }
        if let Some(s) = other.best_min {
            if better(&s, &self.best_min, false) {
                self.best_min = Some(s);
            }
        }
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// Whether two different sizes have been seen.
    pub fn sizes_differ(&self) -> bool {
        match (&self.best_max, &self.best_min) {
            (Some(a), Some(b)) => a.len() != b.len(),
            _ => false,
        }
    }

    pub fn finish(self, kind: SetKind, exhaustive: bool) -> ExtremalReport {
        let max = self.best_max.unwrap_or_else(|| VertexSet::new(0));
        let min = self.best_min.unwrap_or_else(|| VertexSet::new(0));
        ExtremalReport {
            kind,
            max_size: max.len(),
            min_maximal_size: min.len(),
            witness_max: max.to_vec(),
            witness_min: min.to_vec(),
            exhaustive,
            count: self.count,
        }
    }
}

/// One top-level subproblem of the enumeration: all maximal cliques that
/// contain `start`, avoid `excluded`, and draw the rest from `candidates`.
#[derive(Clone, Debug)]
pub struct RootBranch {
    pub start: usize,
    candidates: VertexSet,
    excluded: VertexSet,
}

/// Bron–Kerbosch over one graph.
pub struct CliqueEnumerator<'g> {
    graph: &'g Graph,
}

impl<'g> CliqueEnumerator<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        CliqueEnumerator { graph }
    }

    fn pivot(&self, p: &VertexSet, x: &VertexSet) -> Option<usize> {
        p.iter()
            .chain(x.iter())
            .max_by(|&a, &b| {
                let (da, db) = (
                    p.intersection_len(self.graph.neighbors(a)),
                    p.intersection_len(self.graph.neighbors(b)),
                );
                // prefer the smaller index on ties
                da.cmp(&db).then(b.cmp(&a))
            })
    }

    /// Splits the search below the root. Empty graphs have no branches;
    /// their unique maximal clique `∅` is handled by [`Self::for_each`].
    pub fn root_branches(&self) -> Vec<RootBranch> {
        let n = self.graph.n();
        let mut p = VertexSet::full(n);
        let mut x = VertexSet::new(n);
        let Some(u) = self.pivot(&p, &x) else {
            return Vec::new();
        };
        let mut todo = p.clone();
        todo.difference_with(self.graph.neighbors(u));
        let mut out = Vec::new();
        for v in todo.iter() {
            let nv = self.graph.neighbors(v);
            out.push(RootBranch {
                start: v,
                candidates: p.intersection(nv),
                excluded: x.intersection(nv),
            });
            p.remove(v);
            x.insert(v);
        }
        out
    }

    pub fn for_each_in_branch<F>(&self, branch: &RootBranch, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&VertexSet) -> ControlFlow<()>,
    {
        let mut r = VertexSet::new(self.graph.n());
        r.insert(branch.start);
        self.expand(&mut r, branch.candidates.clone(), branch.excluded.clone(), visit)
    }

    /// Visits every maximal clique exactly once until `visit` breaks.
    pub fn for_each<F>(&self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&VertexSet) -> ControlFlow<()>,
    {
        if self.graph.n() == 0 {
            return visit(&VertexSet::new(0));
        }
        for b in self.root_branches() {
            self.for_each_in_branch(&b, visit)?;
        }
        ControlFlow::Continue(())
    }

    fn expand<F>(&self, r: &mut VertexSet, mut p: VertexSet, mut x: VertexSet, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&VertexSet) -> ControlFlow<()>,
    {
        let Some(u) = self.pivot(&p, &x) else {
            // P and X both empty: R is maximal.
            return visit(r);
        };
        let mut todo = p.clone();
        todo.difference_with(self.graph.neighbors(u));
        let n = self.graph.n();
        let mut next_p = VertexSet::new(n);
        let mut next_x = VertexSet::new(n);
        for v in todo.iter() {
            let nv = self.graph.neighbors(v);
            p.intersect_into(nv, &mut next_p);
            x.intersect_into(nv, &mut next_x);
            r.insert(v);
            let flow = self.expand(r, next_p.clone(), next_x.clone(), visit);
            r.remove(v);
            flow?;
            p.remove(v);
            x.insert(v);
        }
        ControlFlow::Continue(())
    }
}

fn graph_for(graph: &Graph, kind: SetKind) -> alloc::borrow::Cow<'_, Graph> {
    match kind {
        SetKind::Clique => alloc::borrow::Cow::Borrowed(graph),
        SetKind::Independent => alloc::borrow::Cow::Owned(graph.complement()),
    }
}

fn enumerate(graph: &Graph, kind: SetKind, cap: usize) -> Result<MaximalSetFamily, EngineError> {
    let g = graph_for(graph, kind);
    let mut sets = Vec::new();
    let flow = CliqueEnumerator::new(&g).for_each(&mut |s| {
        if sets.len() == cap {
            return ControlFlow::Break(());
        }
        sets.push(s.clone());
        ControlFlow::Continue(())
    });
    if flow.is_break() {
        return Err(EngineError::CapExceeded { cap, found: sets.len() });
    }
    Ok(MaximalSetFamily::sorted(kind, sets))
}

pub fn enumerate_maximal_cliques(graph: &Graph, cap: usize) -> Result<MaximalSetFamily, EngineError> {
    enumerate(graph, SetKind::Clique, cap)
}

/// The maximal cliques of the complement.
pub fn enumerate_maximal_independent_sets(graph: &Graph, cap: usize) -> Result<MaximalSetFamily, EngineError> {
    enumerate(graph, SetKind::Independent, cap)
}

fn extremal(graph: &Graph, kind: SetKind, mode: Mode, cap: usize) -> Result<ExtremalReport, EngineError> {
    let g = graph_for(graph, kind);
    let mut tracker = ExtremalTracker::new();
    let mut capped = false;
    let flow = CliqueEnumerator::new(&g).for_each(&mut |s| {
        if tracker.count() == cap {
            capped = true;
            return ControlFlow::Break(());
        }
        tracker.observe(s);
        if mode == Mode::EarlyExit && tracker.sizes_differ() {
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    if capped {
        return Err(EngineError::CapExceeded { cap, found: tracker.count() });
    }
    Ok(tracker.finish(kind, flow.is_continue()))
}

/// `ω` and `ι` with witnesses.
pub fn extremal_clique_numbers(graph: &Graph, mode: Mode, cap: usize) -> Result<ExtremalReport, EngineError> {
    extremal(graph, SetKind::Clique, mode, cap)
}

/// `α` and `i` with witnesses.
pub fn extremal_independent_numbers(graph: &Graph, mode: Mode, cap: usize) -> Result<ExtremalReport, EngineError> {
    extremal(graph, SetKind::Independent, mode, cap)
}

/// Whether every maximal independent set has the same size. When not, the
/// report's two witnesses are maximal independent sets of different sizes.
pub fn is_well_covered(graph: &Graph, cap: usize) -> Result<(bool, ExtremalReport), EngineError> {
    let report = extremal_independent_numbers(graph, Mode::EarlyExit, cap)?;
    Ok((report.all_same_size(), report))
}

/// Reference enumeration over all `2ⁿ` vertex subsets.
pub fn brute_force_maximal_sets(graph: &Graph, kind: SetKind) -> Result<MaximalSetFamily, EngineError> {
    let n = graph.n();
    if n > BRUTE_FORCE_MAX {
        return Err(EngineError::TooLarge { n, max: BRUTE_FORCE_MAX });
    }
    // adjacency masks in the graph whose cliques we want
    let adj: Vec<u32> = (0..n)
        .map(|v| {
            let mut m = 0u32;
            for u in 0..n {
                let edge = u != v && graph.has_edge(u, v);
                let wanted = match kind {
                    SetKind::Clique => edge,
                    SetKind::Independent => u != v && !edge,
                };
                if wanted {
                    m |= 1 << u;
                }
            }
            m
        })
        .collect();
    let total = 1usize << n;
    let mut good = alloc::vec![false; total];
    good[0] = true;
    for mask in 1..total {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        good[mask] = good[rest] && (adj[low] as usize & rest) == rest;
    }
    let mut sets = Vec::new();
    for (mask, _) in good.iter().enumerate().filter(|(_, &ok)| ok) {
        let extendable = (0..n).any(|v| mask >> v & 1 == 0 && (adj[v] as usize & mask) == mask);
        if !extendable {
            sets.push(VertexSet::from_elements(n, (0..n).filter(|v| mask >> v & 1 == 1)));
        }
    }
    Ok(MaximalSetFamily::sorted(kind, sets))
}
