//! Finite connection sets `F` for which `Δ(F)` is not "well-cliqued":
//! it has maximal cliques of two different sizes, `ι(Δ) < ω(Δ)`.
//!
//! | case            | hypotheses                              | `F`                   | `ι` |
//! |-----------------|-----------------------------------------|-----------------------|-----|
//! | involution      | `|H| > 2`, `f ∉ H`, `f² = e`            | `{f} ∪ H*`            | 1   |
//! | non-cube        | `|H| > 2`, `f ∉ H`, `f² ∉ H`, `f³ ≠ e`  | `{f, f⁻¹} ∪ H*`       | 1   |
//! | cube            | `|H| > 3`, `f ∉ H`, `f³ = e`            | `{f, f⁻¹} ∪ H*`       | 2   |
//! | infinite cyclic | `s` of infinite order, `n > 2`, `m ≥ 2n+1` | `{s^{±m}} ∪ {s^{±1..±n}}` | 1 |
//!
//! In the first three cases `H*` is a clique, so `ω ≥ |H| - 1`; in the last,
//! `{s, …, s^{n-1}}` is, so `ω ≥ n - 1`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::ConstructionError;
use crate::cayley::{delta_graph, Graph, SymSet};
use crate::clique::{extremal_clique_numbers, ExtremalReport, Mode, DEFAULT_CAP};
use crate::group::{is_subgroup, Group, Order};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    Involution,
    NonCube,
    Cube,
    InfiniteCyclic,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Involution => "involution",
            CaseTag::NonCube => "noncube",
            CaseTag::Cube => "cube",
            CaseTag::InfiniteCyclic => "infinite-cyclic",
        }
    }

    pub fn parse(s: &str) -> Option<CaseTag> {
        match s {
            "involution" | "a" => Some(CaseTag::Involution),
            "noncube" | "b" => Some(CaseTag::NonCube),
            "cube" | "c" => Some(CaseTag::Cube),
            "infinite-cyclic" | "d" => Some(CaseTag::InfiniteCyclic),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessParams<E> {
    Subgroup { h: Vec<E>, f: E },
    InfiniteCyclic { s: E, n: u32, m: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessF<E> {
    pub case: CaseTag,
    pub params: WitnessParams<E>,
    pub f: SymSet<E>,
    pub delta: Graph,
    pub report: ExtremalReport,
    /// The vertex proven isolated in `Δ(F)` (all cases but `cube`).
    pub isolated_vertex: Option<E>,
}

impl<E> WitnessF<E> {
    pub fn iota(&self) -> usize {
        self.report.min_maximal_size
    }

    pub fn omega(&self) -> usize {
        self.report.max_size
    }
}

fn violated(msg: impl Into<alloc::string::String>) -> ConstructionError {
    ConstructionError::PreconditionViolated(msg.into())
}

fn claim(ok: bool, msg: impl FnOnce() -> alloc::string::String) -> Result<(), ConstructionError> {
    if ok {
        Ok(())
    } else {
        Err(ConstructionError::ClaimFailed(msg()))
    }
}

fn finite_subgroup<G: Group>(g: &G, h: &[G::Elem]) -> Result<BTreeSet<G::Elem>, ConstructionError> {
    let set: BTreeSet<G::Elem> = h.iter().cloned().collect();
    if !is_subgroup(g, &set) {
        return Err(violated("H is not a subgroup"));
    }
    Ok(set)
}

fn nonidentity<G: Group>(g: &G, h: &BTreeSet<G::Elem>) -> Vec<G::Elem> {
    h.iter().filter(|x| !g.is_identity(x)).cloned().collect()
}

fn build<G: Group>(
    g: &G,
    case: CaseTag,
    params: WitnessParams<G::Elem>,
    listed: Vec<G::Elem>,
    isolated: Option<G::Elem>,
) -> Result<WitnessF<G::Elem>, ConstructionError> {
    let f = SymSet::new(g, listed).map_err(ConstructionError::FNotValid)?;
    let delta = delta_graph(g, &f);
    let report = extremal_clique_numbers(&delta, Mode::Exhaustive, DEFAULT_CAP)?;
    if let Some(v) = &isolated {
        let idx = f.elements().iter().position(|x| x == v).expect("isolated vertex is in F");
        claim(delta.degree(idx) == 0, || format!("{} is not isolated in Δ(F)", g.label(v)))?;
    }
    claim(report.min_maximal_size < report.max_size, || {
        format!("ι = {} is not below ω = {}", report.min_maximal_size, report.max_size)
    })?;
    Ok(WitnessF { case, params, f, delta, report, isolated_vertex: isolated })
}

/// `F = {f} ∪ H*` for a finite subgroup `|H| > 2` and an involution `f ∉ H`.
pub fn witness_involution<G: Group>(g: &G, h: &[G::Elem], f: &G::Elem) -> Result<WitnessF<G::Elem>, ConstructionError> {
    let hs = finite_subgroup(g, h)?;
    if hs.len() <= 2 {
        return Err(violated(format!("|H| = {} must exceed 2", hs.len())));
    }
    if hs.contains(f) {
        return Err(violated("f lies in H"));
    }
    if !g.is_identity(&g.mul(f, f)) {
        return Err(violated("f² ≠ e"));
    }
    let mut listed = alloc::vec![f.clone()];
    listed.extend(nonidentity(g, &hs));
    let params = WitnessParams::Subgroup { h: hs.iter().cloned().collect(), f: f.clone() };
    let w = build(g, CaseTag::Involution, params, listed, Some(f.clone()))?;
    claim(w.iota() == 1, || format!("ι = {} ≠ 1", w.iota()))?;
    claim(w.omega() + 1 >= hs.len(), || format!("ω = {} < |H| - 1", w.omega()))?;
    Ok(w)
}

/// `F = {f, f⁻¹} ∪ H*` for `|H| > 2`, `f ∉ H`, `f² ∉ H`, `f³ ≠ e`.
pub fn witness_noncube<G: Group>(g: &G, h: &[G::Elem], f: &G::Elem) -> Result<WitnessF<G::Elem>, ConstructionError> {
    let hs = finite_subgroup(g, h)?;
    if hs.len() <= 2 {
        return Err(violated(format!("|H| = {} must exceed 2", hs.len())));
    }
    if hs.contains(f) {
        return Err(violated("f lies in H"));
    }
    let f2 = g.mul(f, f);
    if hs.contains(&f2) {
        return Err(violated("f² lies in H"));
    }
    if g.is_identity(&g.mul(&f2, f)) {
        return Err(violated("f³ = e"));
    }
    let mut listed = alloc::vec![f.clone(), g.inv(f)];
    listed.extend(nonidentity(g, &hs));
    let params = WitnessParams::Subgroup { h: hs.iter().cloned().collect(), f: f.clone() };
    let w = build(g, CaseTag::NonCube, params, listed, Some(f.clone()))?;
    claim(w.iota() == 1, || format!("ι = {} ≠ 1", w.iota()))?;
    claim(w.omega() + 1 >= hs.len(), || format!("ω = {} < |H| - 1", w.omega()))?;
    Ok(w)
}

/// `F = {f, f⁻¹} ∪ H*` for `|H| > 3`, `f ∉ H`, `f³ = e`; `{f, f⁻¹}` is a
/// maximal clique and no vertex is isolated, so `ι = 2`.
pub fn witness_cube<G: Group>(g: &G, h: &[G::Elem], f: &G::Elem) -> Result<WitnessF<G::Elem>, ConstructionError> {
    let hs = finite_subgroup(g, h)?;
    if hs.len() <= 3 {
        return Err(violated(format!("|H| = {} must exceed 3", hs.len())));
    }
    if hs.contains(f) {
        return Err(violated("f lies in H"));
    }
    let f2 = g.mul(f, f);
    if !g.is_identity(&g.mul(&f2, f)) {
        return Err(violated("f³ ≠ e"));
    }
    let fi = g.inv(f);
    let mut listed = alloc::vec![f.clone(), fi.clone()];
    listed.extend(nonidentity(g, &hs));
    let params = WitnessParams::Subgroup { h: hs.iter().cloned().collect(), f: f.clone() };
    let w = build(g, CaseTag::Cube, params, listed, None)?;
    let t = crate::bitset::VertexSet::from_elements(w.delta.n(), [0, 1]);
    claim(w.delta.is_maximal_clique(&t), || "{f, f⁻¹} is not a maximal clique".into())?;
    claim(w.iota() == 2, || format!("ι = {} ≠ 2", w.iota()))?;
    claim(w.omega() + 1 >= hs.len(), || format!("ω = {} < |H| - 1", w.omega()))?;
    Ok(w)
}

/// `F = {s^m, s^{-m}} ∪ {s^{±i} : 1 ≤ i ≤ n}` for `s` of infinite order,
/// `n > 2`, `m ≥ 2n + 1`.
pub fn witness_infinite_cyclic<G: Group>(
    g: &G,
    s: &G::Elem,
    n: u32,
    m: u32,
) -> Result<WitnessF<G::Elem>, ConstructionError> {
    if g.order_of(s) != Order::Infinite {
        return Err(violated(format!("{} has finite order", g.label(s))));
    }
    if n <= 2 {
        return Err(violated(format!("n = {n} must exceed 2")));
    }
    if m < 2 * n + 1 {
        return Err(violated(format!("m = {m} must be at least 2n + 1 = {}", 2 * n + 1)));
    }
    let mut listed = Vec::with_capacity(2 * n as usize + 2);
    for i in 1..=n as i64 {
        listed.push(g.pow(s, i));
        listed.push(g.pow(s, -i));
    }
    let sm = g.pow(s, m as i64);
    listed.push(sm.clone());
    listed.push(g.pow(s, -(m as i64)));
    let params = WitnessParams::InfiniteCyclic { s: s.clone(), n, m };
    let w = build(g, CaseTag::InfiniteCyclic, params, listed, Some(sm))?;
    claim(w.iota() == 1, || format!("ι = {} ≠ 1", w.iota()))?;
    claim(w.omega() as u32 + 1 >= n, || format!("ω = {} < n - 1", w.omega()))?;
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_subgroup, ElementCode, EnumerableGroup, FiniteGroup};

    #[test]
    fn involution_in_s3() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let h = cyclic_subgroup(&s3, &s3.resolve("(123)").unwrap()).unwrap();
        let f = s3.resolve("(12)").unwrap();
        let w = witness_involution(&s3, &h, &f).unwrap();
        assert_eq!(w.f.len(), 3);
        assert_eq!((w.iota(), w.omega()), (1, 2));
        assert!(matches!(witness_involution(&s3, &h, &h[0]), Err(ConstructionError::PreconditionViolated(_))));
    }

    #[test]
    fn cube_in_a4_like_s4() {
        let s4 = FiniteGroup::symmetric(4).unwrap();
        let klein: Vec<usize> = ["e", "(12)(34)", "(13)(24)", "(14)(23)"]
            .iter()
            .map(|x| s4.resolve(x).unwrap())
            .collect();
        let f = s4.resolve("(123)").unwrap();
        let w = witness_cube(&s4, &klein, &f).unwrap();
        assert_eq!(w.iota(), 2);
        assert!(w.omega() >= 3);
        let c3 = cyclic_subgroup(&s4, &f).unwrap();
        let g = s4.resolve("(124)").unwrap();
        assert!(matches!(witness_cube(&s4, &c3, &g), Err(ConstructionError::PreconditionViolated(_))));
        let t = s4.resolve("(12)").unwrap();
        assert!(matches!(witness_cube(&s4, &klein, &t), Err(ConstructionError::PreconditionViolated(_))));
    }

    #[test]
    fn infinite_cyclic_in_z() {
        let z = EnumerableGroup::Integers;
        let w = witness_infinite_cyclic(&z, &ElementCode::Int(1), 3, 7).unwrap();
        assert_eq!(w.f.len(), 8);
        assert_eq!(w.iota(), 1);
        assert_eq!(w.isolated_vertex, Some(ElementCode::Int(7)));
        assert!(witness_infinite_cyclic(&z, &ElementCode::Int(1), 3, 6).is_err());
        assert!(witness_infinite_cyclic(&z, &ElementCode::Int(1), 2, 7).is_err());
        assert!(witness_infinite_cyclic(&z, &ElementCode::Int(0), 3, 7).is_err());
    }

    #[test]
    fn noncube_rejects_cube_root_of_unity() {
        let p3 = EnumerableGroup::Pruefer(3);
        let h: Vec<ElementCode> = ["0", "1/3", "2/3"].iter().map(|s| p3.parse_code(s).unwrap()).collect();
        // f = 1/9 has f³ = 1/3 ≠ e, fine; an element with f³ = e lies in H.
        let w = witness_noncube(&p3, &h, &p3.parse_code("1/9").unwrap()).unwrap();
        assert_eq!(w.iota(), 1);
        let s4 = FiniteGroup::symmetric(4).unwrap();
        let klein: Vec<usize> = ["e", "(12)(34)", "(13)(24)", "(14)(23)"]
            .iter()
            .map(|x| s4.resolve(x).unwrap())
            .collect();
        let f = s4.resolve("(123)").unwrap();
        assert!(matches!(witness_noncube(&s4, &klein, &f), Err(ConstructionError::PreconditionViolated(_))));
    }
}
