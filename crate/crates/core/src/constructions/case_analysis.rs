//! Picks a witness configuration for an infinite group from order data on a
//! finite enumeration prefix.
//!
//! Elements of infinite order go to the infinite-cyclic witness. Otherwise a
//! nontrivial odd-order `h` gives `H = ⟨h⟩`, and the first of
//! involution / non-cube / cube that applies is used. With no odd-order
//! element in sight the group is treated as a 2-group: exponent two gives an
//! involution witness over a Klein subgroup, anything else starts from a
//! cyclic subgroup of order four.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::witness::{witness_cube, witness_infinite_cyclic, witness_involution, witness_noncube, WitnessF};
use super::ConstructionError;
use crate::group::{cyclic_subgroup, generated_subgroup, Group, Order};

pub const DEFAULT_PREFIX: usize = 512;
pub const MAX_PREFIX: usize = 1 << 16;
/// Parameters of the infinite-cyclic witness.
pub const DEFAULT_N: u32 = 3;
pub const DEFAULT_M: u32 = 7;
/// Largest finite subgroup `K` generated while looking for a cube witness.
const SUBGROUP_LIMIT: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseBranch {
    /// An element of infinite order.
    InfiniteOrder,
    /// Odd-order `h`; some `f ∉ H` is an involution.
    OddInvolution,
    /// Odd-order `h`; `f ∉ H` with `f² ∈ H` of order `2m`, `m > 1`, replaced
    /// by `f^m` over `⟨f²⟩`.
    OddInvolutionSplit,
    OddNonCube,
    OddCube,
    /// `|H| = 3` and everything outside has order 3: cube over a larger
    /// finite subgroup.
    OddCubeEnlarged,
    ElementaryTwoGroup,
    TwoGroupNonCube,
    TwoGroupInvolution,
}

impl CaseBranch {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseBranch::InfiniteOrder => "infinite-order",
            CaseBranch::OddInvolution => "odd-involution",
            CaseBranch::OddInvolutionSplit => "odd-involution-split",
            CaseBranch::OddNonCube => "odd-noncube",
            CaseBranch::OddCube => "odd-cube",
            CaseBranch::OddCubeEnlarged => "odd-cube-enlarged",
            CaseBranch::ElementaryTwoGroup => "two-group-elementary",
            CaseBranch::TwoGroupNonCube => "two-group-noncube",
            CaseBranch::TwoGroupInvolution => "two-group-involution",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseReport<E> {
    pub branch: CaseBranch,
    pub witness: WitnessF<E>,
    /// Enumeration prefix that sufficed.
    pub prefix: usize,
}

/// Runs the case analysis on the first `prefix` enumerated elements.
pub fn case_analysis<G: Group>(g: &G, prefix: usize) -> Result<CaseReport<G::Elem>, ConstructionError> {
    if let Some(n) = g.cardinality() {
        return Err(ConstructionError::UnsupportedGroup(format!("group is finite (order {n})")));
    }
    let window: Vec<G::Elem> = g.elements().take(prefix).collect();
    let exhausted = || ConstructionError::SearchExhausted { prefix };
    let report = |branch, witness| Ok(CaseReport { branch, witness, prefix });

    let orders: Vec<Order> = window.iter().map(|x| g.order_of(x)).collect();
    if let Some(i) = orders.iter().position(|o| *o == Order::Infinite) {
        let w = witness_infinite_cyclic(g, &window[i], DEFAULT_N, DEFAULT_M)?;
        return report(CaseBranch::InfiniteOrder, w);
    }
    let finite: Vec<u64> = orders.iter().map(|o| o.finite().unwrap_or(0)).collect();

    if let Some(i) = finite.iter().position(|&k| k > 1 && k % 2 == 1) {
        let h = &window[i];
        let hs = subgroup_of(g, h)?;
        let outside: Vec<(usize, &G::Elem)> = window.iter().enumerate().filter(|(_, x)| !hs.contains(*x)).collect();

        if let Some((j, f)) = outside.iter().find(|(_, f)| hs.contains(&g.mul(f, f))) {
            let f2 = g.mul(f, f);
            if g.is_identity(&f2) {
                let w = witness_involution(g, &set_vec(&hs), f)?;
                return report(CaseBranch::OddInvolution, w);
            }
            let m = (finite[*j] / 2) as i64;
            let f_split = g.pow(f, m);
            let h_split = subgroup_of(g, &f2)?;
            let w = witness_involution(g, &set_vec(&h_split), &f_split)?;
            return report(CaseBranch::OddInvolutionSplit, w);
        }
        if let Some((_, f)) = outside.iter().find(|(j, _)| finite[*j] != 3) {
            let w = witness_noncube(g, &set_vec(&hs), f)?;
            return report(CaseBranch::OddNonCube, w);
        }
        if hs.len() > 3 {
            let (_, f) = outside.first().ok_or_else(exhausted)?;
            let w = witness_cube(g, &set_vec(&hs), f)?;
            return report(CaseBranch::OddCube, w);
        }
        for (_, f1) in &outside {
            let Some(k) = generated_subgroup(g, &[h.clone(), (*f1).clone()], SUBGROUP_LIMIT) else {
                continue;
            };
            if k.len() <= 3 {
                continue;
            }
            if let Some(f) = window.iter().find(|x| !k.contains(*x)) {
                let w = witness_cube(g, &set_vec(&k), f)?;
                return report(CaseBranch::OddCubeEnlarged, w);
            }
        }
        return Err(exhausted());
    }

    if finite.iter().all(|&k| k <= 2) {
        let mut nontrivial = window.iter().filter(|x| !g.is_identity(x));
        let (x, y) = (nontrivial.next().ok_or_else(exhausted)?, nontrivial.next().ok_or_else(exhausted)?);
        let klein: BTreeSet<G::Elem> = [g.identity(), x.clone(), y.clone(), g.mul(x, y)].into_iter().collect();
        let f = window.iter().find(|z| !klein.contains(*z)).ok_or_else(exhausted)?;
        let w = witness_involution(g, &set_vec(&klein), f)?;
        return report(CaseBranch::ElementaryTwoGroup, w);
    }

    let (i, &k) = finite.iter().enumerate().find(|(_, &k)| k > 2).expect("some element has order above 2");
    if !k.is_power_of_two() {
        return Err(ConstructionError::UnsupportedGroup(format!("element of order {k} in a 2-group branch")));
    }
    let x4 = g.pow(&window[i], (k / 4) as i64);
    let hs = subgroup_of(g, &x4)?;
    let outside: Vec<&G::Elem> = window.iter().filter(|x| !hs.contains(*x)).collect();
    if let Some(f) = outside.iter().find(|f| !hs.contains(&g.mul(f, f))) {
        let w = witness_noncube(g, &set_vec(&hs), f)?;
        return report(CaseBranch::TwoGroupNonCube, w);
    }
    if let Some(f) = outside.iter().find(|f| g.is_identity(&g.mul(f, f))) {
        let w = witness_involution(g, &set_vec(&hs), f)?;
        return report(CaseBranch::TwoGroupInvolution, w);
    }
    Err(exhausted())
}

/// [`case_analysis`] starting at [`DEFAULT_PREFIX`] and doubling the prefix on
/// [`ConstructionError::SearchExhausted`] up to [`MAX_PREFIX`].
pub fn case_analysis_with_retry<G: Group>(g: &G, start: Option<usize>) -> Result<CaseReport<G::Elem>, ConstructionError> {
    let mut prefix = start.unwrap_or(DEFAULT_PREFIX).max(1);
    loop {
        match case_analysis(g, prefix) {
            Err(ConstructionError::SearchExhausted { .. }) if prefix < MAX_PREFIX => prefix = (prefix * 2).min(MAX_PREFIX),
            other => return other,
        }
    }
}

fn subgroup_of<G: Group>(g: &G, x: &G::Elem) -> Result<BTreeSet<G::Elem>, ConstructionError> {
    let elems = cyclic_subgroup(g, x).map_err(|e| ConstructionError::PreconditionViolated(format!("{e}")))?;
    Ok(elems.into_iter().collect())
}

fn set_vec<E: Clone>(s: &BTreeSet<E>) -> Vec<E> {
    s.iter().cloned().collect()
}
