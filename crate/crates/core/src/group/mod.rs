//! Groups: multiplication tables, enumerable infinite groups, and the catalog.

mod descriptor;
mod enumerable;
mod finite;

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use descriptor::{build_group, finite_catalog, BuiltGroup, GroupDescriptor};
pub use enumerable::{ElementCode, EnumerableGroup, Letter};
pub use finite::{FiniteGroup, TableError, MAX_FINITE_ORDER};

/// Order of a group element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Order::Finite(k) => Some(k),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("invalid group descriptor: {0}")]
    InvalidDescriptor(String),
    #[error(transparent)]
    TableInvalid(#[from] TableError),
    #[error("element {0} has infinite order")]
    OrderInfinite(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
}

/// Common interface of finite and enumerable groups.
///
/// `elements()` is an injective enumeration starting at the identity; it is
/// finite exactly when the group is.
pub trait Group {
    type Elem: Clone + Eq + Ord + fmt::Debug;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn order_of(&self, a: &Self::Elem) -> Order;
    fn elements(&self) -> Box<dyn Iterator<Item = Self::Elem> + '_>;
    fn label(&self, a: &Self::Elem) -> String;
    /// `Some(|G|)` for finite groups.
    fn cardinality(&self) -> Option<usize>;

    fn is_identity(&self, a: &Self::Elem) -> bool {
        *a == self.identity()
    }

    /// `a^k` for any integer `k`, by repeated squaring.
    fn pow(&self, a: &Self::Elem, k: i64) -> Self::Elem {
        let base = if k < 0 { self.inv(a) } else { a.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.identity();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        acc
    }
}

/// Element order of `a`.
pub fn element_order<G: Group>(g: &G, a: &G::Elem) -> Order {
    g.order_of(a)
}

/// `⟨a⟩` listed as `a, a², …, e`.
pub fn cyclic_subgroup<G: Group>(g: &G, a: &G::Elem) -> Result<Vec<G::Elem>, GroupError> {
    let Order::Finite(k) = g.order_of(a) else {
        return Err(GroupError::OrderInfinite(g.label(a)));
    };
    let mut out = Vec::with_capacity(k as usize);
    let mut x = a.clone();
    for _ in 0..k {
        out.push(x.clone());
        x = g.mul(&x, a);
    }
    Ok(out)
}

/// Closure of `gens` under multiplication, or `None` once it exceeds `limit`
/// elements. Every generator must have finite order for the result to be a
/// subgroup; with infinite-order generators the closure simply runs past the
/// limit.
pub fn generated_subgroup<G: Group>(
    g: &G,
    gens: &[G::Elem],
    limit: usize,
) -> Option<BTreeSet<G::Elem>> {
    let mut set = BTreeSet::new();
    set.insert(g.identity());
    let mut frontier = alloc::vec![g.identity()];
    while let Some(x) = frontier.pop() {
        for s in gens {
            let y = g.mul(&x, s);
            if set.insert(y.clone()) {
                if set.len() > limit {
                    return None;
                }
                frontier.push(y);
            }
        }
    }
    Some(set)
}

/// Whether a finite set of elements is a subgroup: contains `e` and is closed
/// under products (closure suffices for finite sets).
pub fn is_subgroup<G: Group>(g: &G, h: &BTreeSet<G::Elem>) -> bool {
    if !h.contains(&g.identity()) {
        return false;
    }
    h.iter()
        .all(|x| h.iter().all(|y| h.contains(&g.mul(x, y))))
}

/// `{g² : g ∈ G}` as sorted indices.
pub fn squares_set(g: &FiniteGroup) -> Vec<usize> {
    let set: BTreeSet<usize> = (0..g.order()).map(|a| g.product(a, a)).collect();
    set.into_iter().collect()
}

/// Elements of order exactly two.
pub fn involutions(g: &FiniteGroup) -> Vec<usize> {
    (1..g.order()).filter(|&a| g.product(a, a) == 0).collect()
}
