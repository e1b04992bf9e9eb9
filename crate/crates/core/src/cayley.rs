//! Connection sets, Cayley graphs, complements and the `Δ(F)` graph.
//!
//! Conventions: `Cay(G, S)` has vertex set `G` with `g ~ h` iff `g h⁻¹ ∈ S`.
//! `Δ(F)` has vertex set `F` with `u ~ v` iff `u v⁻¹ ∈ F`.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::group::{FiniteGroup, Group};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CayleyError {
    #[error("subset must be non-empty")]
    EmptySubset,
    #[error("element index {0} is out of range")]
    OutOfRange(usize),
    #[error("set is not closed under inversion: contains {element} but not {inverse}")]
    NotSymmetric { element: String, inverse: String },
    #[error("set contains the identity")]
    ContainsIdentity,
}

/// A finite symmetric subset of a group not containing the identity.
///
/// Elements keep the order they were listed in (duplicates dropped); that
/// order fixes vertex indices of [`delta_graph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymSet<E> {
    elements: Vec<E>,
    lookup: BTreeSet<E>,
}

impl<E: Clone + Ord> SymSet<E> {
    /// Validates `e ∉ S` and `S = S⁻¹`; violations are rejected, never repaired.
    pub fn new<G>(group: &G, elements: impl IntoIterator<Item = E>) -> Result<Self, CayleyError>
    where
        G: Group<Elem = E>,
    {
        let mut lookup = BTreeSet::new();
        let mut listed = Vec::new();
        for x in elements {
            if lookup.insert(x.clone()) {
                listed.push(x);
            }
        }
        if lookup.contains(&group.identity()) {
            return Err(CayleyError::ContainsIdentity);
        }
        for x in &listed {
            let xi = group.inv(x);
            if !lookup.contains(&xi) {
                return Err(CayleyError::NotSymmetric {
                    element: group.label(x),
                    inverse: group.label(&xi),
                });
            }
        }
        Ok(SymSet { elements: listed, lookup })
    }

    pub fn empty() -> Self {
        SymSet { elements: Vec::new(), lookup: BTreeSet::new() }
    }

    pub fn contains(&self, x: &E) -> bool {
        self.lookup.contains(x)
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// A finite simple undirected graph with per-vertex adjacency bitsets.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<VertexSet>,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    pub fn edgeless(labels: Vec<String>) -> Self {
        let n = labels.len();
        Graph { labels, adj: vec![VertexSet::new(n); n] }
    }

    /// Edgeless graph labelled `0..n`.
    pub fn with_vertices(n: usize) -> Self {
        Self::edgeless((0..n).map(|i| i.to_string()).collect())
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::with_vertices(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::with_vertices(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Adds `uv`; self-loops are ignored to keep the graph simple.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Same vertices; distinct `u, v` adjacent iff they are not adjacent here.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut s = VertexSet::full(n);
                s.difference_with(&self.adj[v]);
                s.remove(v);
                s
            })
            .collect();
        Graph { labels: self.labels.clone(), adj }
    }

    /// Subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let mut g = Graph::edgeless(labels);
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut rest = set.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].intersection_len(set) == 0)
    }

    pub fn is_maximal_clique(&self, set: &VertexSet) -> bool {
        self.is_clique(set) && (0..self.n()).all(|v| set.contains(v) || !set.is_subset(&self.adj[v]))
    }

    pub fn is_maximal_independent(&self, set: &VertexSet) -> bool {
        self.is_independent(set)
            && (0..self.n()).all(|v| set.contains(v) || self.adj[v].intersection_len(set) > 0)
    }
}

fn check_subset(g: &FiniteGroup, a: &[usize]) -> Result<(), CayleyError> {
    if a.is_empty() {
        return Err(CayleyError::EmptySubset);
    }
    match a.iter().find(|&&x| x >= g.order()) {
        Some(&x) => Err(CayleyError::OutOfRange(x)),
        None => Ok(()),
    }
}

/// Membership mask of `A⁻¹A`.
fn quotient_mask(g: &FiniteGroup, a: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; g.order()];
    for &x in a {
        let xi = g.inverse(x);
        for &y in a {
            mask[g.product(xi, y)] = true;
        }
    }
    mask
}

/// `∂A = A⁻¹A \ {e}`.
pub fn boundary_set(g: &FiniteGroup, a: &[usize]) -> Result<SymSet<usize>, CayleyError> {
    check_subset(g, a)?;
    let mut mask = quotient_mask(g, a);
    mask[0] = false;
    SymSet::new(g, (0..g.order()).filter(|&x| mask[x]))
}

/// `F = G \ A⁻¹A`.
pub fn complement_set(g: &FiniteGroup, a: &[usize]) -> Result<SymSet<usize>, CayleyError> {
    check_subset(g, a)?;
    let mask = quotient_mask(g, a);
    SymSet::new(g, (0..g.order()).filter(|&x| !mask[x]))
}

/// `xA`.
pub fn translate(g: &FiniteGroup, x: usize, a: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = a.iter().map(|&y| g.product(x, y)).collect();
    out.sort_unstable();
    out
}

/// `Cay(G, S)` on all of `G`, vertex `i` = element `i`.
pub fn cayley_graph(g: &FiniteGroup, s: &SymSet<usize>) -> Graph {
    let mut graph = Graph::edgeless(g.names().to_vec());
    for h in 0..g.order() {
        for &x in s.elements() {
            // g h⁻¹ = x  ⟺  g = x h
            graph.add_edge(g.product(x, h), h);
        }
    }
    graph
}

/// `Δ(F)`: vertices are the elements of `F` in listed order.
pub fn delta_graph<G: Group>(group: &G, f: &SymSet<G::Elem>) -> Graph {
    let labels = f.elements().iter().map(|x| group.label(x)).collect();
    let mut graph = Graph::edgeless(labels);
    let inverses: Vec<G::Elem> = f.elements().iter().map(|v| group.inv(v)).collect();
    for (i, u) in f.elements().iter().enumerate() {
        for (j, vi) in inverses.iter().enumerate().skip(i + 1) {
            if f.contains(&group.mul(u, vi)) {
                graph.add_edge(i, j);
            }
        }
    }
    graph
}

/// Self-test: `Δ(G \ A⁻¹A)` equals the subgraph of `Cay(G, G \ A⁻¹A)`
/// induced on `G \ A⁻¹A`.
pub fn induced_subgraph_check(g: &FiniteGroup, a: &[usize]) -> Result<bool, CayleyError> {
    let f = complement_set(g, a)?;
    let cay = cayley_graph(g, &f);
    let delta = delta_graph(g, &f);
    Ok(cay.induced(f.elements()) == delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{EnumerableGroup, ElementCode};

    fn c(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n).unwrap()
    }

    fn s3() -> FiniteGroup {
        FiniteGroup::symmetric(3).unwrap()
    }

    fn idx(g: &FiniteGroup, names: &[&str]) -> Vec<usize> {
        names.iter().map(|s| g.resolve(s).unwrap()).collect()
    }

    #[test]
    fn boundary_examples() {
        let g = c(4);
        assert_eq!(boundary_set(&g, &[0, 1]).unwrap().elements(), &[1, 3]);
        assert!(boundary_set(&g, &[0]).unwrap().is_empty());
        assert_eq!(boundary_set(&g, &[0, 1, 2, 3]).unwrap().elements(), &[1, 2, 3]);
        assert_eq!(boundary_set(&g, &[]), Err(CayleyError::EmptySubset));
    }

    #[test]
    fn complement_examples() {
        let g = c(4);
        assert_eq!(complement_set(&g, &[0, 1]).unwrap().elements(), &[2]);
        assert!(complement_set(&g, &[0, 1, 2, 3]).unwrap().is_empty());
        let s = s3();
        let f = complement_set(&s, &idx(&s, &["e", "(12)"])).unwrap();
        assert_eq!(f.len(), 4);
        assert!(!f.contains(&s.resolve("(12)").unwrap()));
    }

    #[test]
    fn cayley_examples() {
        let g = c(4);
        let cyc = cayley_graph(&g, &boundary_set(&g, &[0, 1]).unwrap());
        assert_eq!(cyc.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(cayley_graph(&g, &SymSet::empty()).edge_count(), 0);
        let full = SymSet::new(&g, 1..4).unwrap();
        assert_eq!(cayley_graph(&g, &full).edges(), Graph::complete(4).edges());
        let two_k2 = cyc.complement();
        assert_eq!(two_k2.edges(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn symset_rejects() {
        let g = c(4);
        assert_eq!(SymSet::new(&g, [0, 1, 3]), Err(CayleyError::ContainsIdentity));
        assert!(matches!(SymSet::new(&g, [1]), Err(CayleyError::NotSymmetric { .. })));
    }

    #[test]
    fn delta_s3() {
        let s = s3();
        let f = SymSet::new(&s, idx(&s, &["(12)", "(123)", "(132)"])).unwrap();
        let d = delta_graph(&s, &f);
        assert_eq!(d.degree(0), 0);
        assert!(d.has_edge(1, 2));
        assert_eq!(d.edge_count(), 1);
    }

    #[test]
    fn delta_integers() {
        let z = EnumerableGroup::Integers;
        let f = SymSet::new(&z, [1, -1, 2, -2, 3, -3, 7, -7].map(ElementCode::Int)).unwrap();
        let d = delta_graph(&z, &f);
        assert_eq!(d.degree(6), 0, "7 is isolated");
        assert!(d.has_edge(0, 2) && d.has_edge(0, 4) && d.has_edge(2, 4), "{{1,2,3}} is a clique");
        assert_eq!(delta_graph(&z, &SymSet::empty()).n(), 0);
    }

    #[test]
    fn induced_examples() {
        assert!(induced_subgraph_check(&c(6), &[0, 1]).unwrap());
        let s = s3();
        assert!(induced_subgraph_check(&s, &idx(&s, &["e", "(12)", "(123)"])).unwrap());
    }
}
