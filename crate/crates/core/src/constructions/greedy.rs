//! Stage-by-stage construction of `A ∋ e` with `A⁻¹A = G \ F`.
//!
//! With `g₀, g₁, …` enumerating `G \ F`, stage `ξ` picks `a_ξ` outside
//! `A_ξF ∪ A_ξFg_ξ⁻¹` and adds `a_ξ, a_ξg_ξ`, which keeps `A ∩ AF = ∅` and
//! puts `g_ξ` into `A⁻¹A`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::ConstructionError;
use crate::cayley::SymSet;
use crate::group::Group;

/// Search nodes allowed when a finite run has to backtrack.
const FINITE_NODE_BUDGET: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyState<E> {
    /// Distinct elements of `A` in the order they were added.
    pub a: Vec<E>,
    /// `(a_ξ, a_ξ g_ξ)` for every stage that added elements.
    pub pairs: Vec<(E, E)>,
    /// `g₀, …, g_{N-1}`.
    pub covered: Vec<E>,
    pub steps: usize,
}

impl<E: Clone + Ord> GreedyState<E> {
    /// Brute-force recheck over all pairs of `A`: `A⁻¹A ∩ F = ∅` (equivalently
    /// `A ∩ AF = ∅`) and every covered `g_ξ` lies in `A⁻¹A`.
    pub fn verify<G: Group<Elem = E>>(&self, g: &G, f: &SymSet<E>) -> bool {
        let quotients = quotient_set(g, &self.a);
        quotients.iter().all(|x| !f.contains(x)) && self.covered.iter().all(|x| quotients.contains(x))
    }
}

fn quotient_set<G: Group>(g: &G, a: &[G::Elem]) -> BTreeSet<G::Elem> {
    let mut out = BTreeSet::new();
    for x in a {
        let xi = g.inv(x);
        for y in a {
            out.insert(g.mul(&xi, y));
        }
    }
    out
}

fn forbidden<G: Group>(g: &G, a: &[G::Elem], f: &SymSet<G::Elem>, gx: &G::Elem) -> BTreeSet<G::Elem> {
    let gi = g.inv(gx);
    let mut out = BTreeSet::new();
    for x in a {
        for y in f.elements() {
            let xy = g.mul(x, y);
            out.insert(g.mul(&xy, &gi));
            out.insert(xy);
        }
    }
    out
}

/// Runs `steps` stages. For infinite groups each `a_ξ` is the first
/// enumerated element outside the forbidden set, which is finite, so a
/// choice always exists. For finite groups stages whose `g_ξ` is already in
/// `A⁻¹A` add nothing, and dead ends are backtracked; running with `steps ≥
/// |G \ F|` then either covers all of `G \ F` or reports that no admissible
/// choice sequence exists.
pub fn greedy_construct_a<G: Group>(
    g: &G,
    f: &SymSet<G::Elem>,
    steps: usize,
) -> Result<GreedyState<G::Elem>, ConstructionError> {
    if steps == 0 {
        return Err(ConstructionError::PreconditionViolated("steps must be at least 1".into()));
    }
    // Re-validate so a SymSet built against another group cannot slip through.
    SymSet::new(g, f.elements().iter().cloned()).map_err(ConstructionError::FNotValid)?;
    let e = g.identity();

    if f.is_empty() {
        // A = G, truncated to the enumerated prefix.
        let a: Vec<G::Elem> = g.elements().take(steps).collect();
        let pairs = a.iter().map(|x| (e.clone(), x.clone())).collect();
        return Ok(GreedyState { covered: a.clone(), a, pairs, steps });
    }
    if g.cardinality().is_some() {
        return finite_run(g, f, steps);
    }

    let mut state = GreedyState { a: Vec::new(), pairs: Vec::new(), covered: Vec::new(), steps: 0 };
    let mut members = BTreeSet::new();
    let targets = g.elements().filter(|x| !f.contains(x));
    for (xi, gx) in targets.take(steps).enumerate() {
        let ax = if xi == 0 {
            e.clone()
        } else {
            let bad = forbidden(g, &state.a, f, &gx);
            g.elements()
                .take(bad.len() + 1)
                .find(|x| !bad.contains(x))
                .ok_or(ConstructionError::StepsExhausted { step: xi })?
        };
        let bx = g.mul(&ax, &gx);
        for x in [&ax, &bx] {
            if members.insert(x.clone()) {
                state.a.push(x.clone());
            }
        }
        state.pairs.push((ax, bx));
        state.covered.push(gx);
        state.steps += 1;
    }
    Ok(state)
}

struct FiniteSearch<'a, G: Group> {
    g: &'a G,
    f: &'a SymSet<G::Elem>,
    targets: Vec<G::Elem>,
    all: Vec<G::Elem>,
    a: Vec<G::Elem>,
    pairs: Vec<(G::Elem, G::Elem)>,
    nodes: usize,
}

impl<G: Group> FiniteSearch<'_, G> {
    fn dfs(&mut self, idx: usize) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > FINITE_NODE_BUDGET {
            return None;
        }
        if idx == self.targets.len() {
            return Some(true);
        }
        let gx = self.targets[idx].clone();
        if idx > 0 && quotient_set(self.g, &self.a).contains(&gx) {
            return self.dfs(idx + 1);
        }
        let candidates: Vec<G::Elem> = if idx == 0 {
            alloc::vec![self.g.identity()]
        } else {
            let bad = forbidden(self.g, &self.a, self.f, &gx);
            self.all.iter().filter(|x| !bad.contains(x)).cloned().collect()
        };
        for ax in candidates {
            let bx = self.g.mul(&ax, &gx);
            let before = self.a.len();
            for x in [&ax, &bx] {
                if !self.a.contains(x) {
                    self.a.push(x.clone());
                }
            }
            self.pairs.push((ax, bx));
            match self.dfs(idx + 1) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {
                    self.pairs.pop();
                    self.a.truncate(before);
                }
            }
        }
        Some(false)
    }
}

fn finite_run<G: Group>(g: &G, f: &SymSet<G::Elem>, steps: usize) -> Result<GreedyState<G::Elem>, ConstructionError> {
    let targets: Vec<G::Elem> = g.elements().filter(|x| !f.contains(x)).take(steps).collect();
    let mut search = FiniteSearch {
        g,
        f,
        all: g.elements().collect(),
        targets,
        a: Vec::new(),
        pairs: Vec::new(),
        nodes: 0,
    };
    match search.dfs(0) {
        Some(true) => Ok(GreedyState {
            steps: search.targets.len(),
            covered: search.targets,
            a: search.a,
            pairs: search.pairs,
        }),
        Some(false) => Err(ConstructionError::StepsExhausted { step: search.targets.len() }),
        None => Err(ConstructionError::SearchExhausted { prefix: FINITE_NODE_BUDGET }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{ElementCode, EnumerableGroup};

    fn int_set(xs: &[i64]) -> SymSet<ElementCode> {
        SymSet::new(&EnumerableGroup::Integers, xs.iter().map(|&x| ElementCode::Int(x))).unwrap()
    }

    #[test]
    fn integers_small_f() {
        let z = EnumerableGroup::Integers;
        let f = int_set(&[1, -1]);
        let s = greedy_construct_a(&z, &f, 6).unwrap();
        assert_eq!(s.covered.len(), 6);
        assert!(s.verify(&z, &f));
        assert_eq!(s.a[0], ElementCode::Int(0));
    }

    #[test]
    fn empty_f_takes_prefix_of_g() {
        let z = EnumerableGroup::Integers;
        let s = greedy_construct_a(&z, &SymSet::empty(), 5).unwrap();
        let expect: Vec<ElementCode> = [0, 1, -1, 2, -2].map(ElementCode::Int).to_vec();
        assert_eq!(s.a, expect);
        assert!(s.verify(&z, &SymSet::empty()));
    }

    #[test]
    fn rejects_bad_input() {
        let z = EnumerableGroup::Integers;
        assert!(greedy_construct_a(&z, &int_set(&[1, -1]), 0).is_err());
    }
}
