//! JSON documents emitted by the CLI. Every shape here has a schema under
//! `schemas/`.

use serde_json::{json, Value};
use sfactor_core::constructions::{CaseReport, GreedyState, WitnessF, WitnessParams};
use sfactor_core::stability::{GroupStabilityReport, SIndexReport};
use sfactor_core::{ExtremalReport, FiniteGroup, Group, SymSet};

pub fn extremal_json(r: &ExtremalReport) -> Value {
    json!({
        "kind": r.kind.as_str(),
        "max_size": r.max_size,
        "min_maximal_size": r.min_maximal_size,
        "witness_max": r.witness_max,
        "witness_min": r.witness_min,
        "exhaustive": r.exhaustive,
        "count": r.count,
    })
}

fn labels<G: Group>(g: &G, xs: &[G::Elem]) -> Vec<String> {
    xs.iter().map(|x| g.label(x)).collect()
}

pub fn set_labels<G: Group>(g: &G, s: &SymSet<G::Elem>) -> Vec<String> {
    labels(g, s.elements())
}

pub fn witness_json<G: Group>(group: &str, g: &G, w: &WitnessF<G::Elem>) -> Value {
    let params = match &w.params {
        WitnessParams::Subgroup { h, f } => json!({ "H": labels(g, h), "H_order": h.len(), "f": g.label(f) }),
        WitnessParams::InfiniteCyclic { s, n, m } => json!({ "s": g.label(s), "n": n, "m": m }),
    };
    json!({
        "group": group,
        "case": w.case.as_str(),
        "params": params,
        "F": set_labels(g, &w.f),
        "iota": w.iota(),
        "omega": w.omega(),
        "isolated_vertex": w.isolated_vertex.as_ref().map(|v| g.label(v)),
        "delta_report": extremal_json(&w.report),
    })
}

pub fn case_json<G: Group>(group: &str, g: &G, r: &CaseReport<G::Elem>) -> Value {
    let mut doc = witness_json(group, g, &r.witness);
    doc["branch"] = json!(r.branch.as_str());
    doc["prefix"] = json!(r.prefix);
    doc
}

pub fn greedy_json<G: Group>(group: &str, g: &G, f: &SymSet<G::Elem>, s: &GreedyState<G::Elem>) -> Value {
    json!({
        "group": group,
        "F": set_labels(g, f),
        "steps": s.steps,
        "A": labels(g, &s.a),
        "covered": labels(g, &s.covered),
        "invariant_ok": s.verify(g, f),
    })
}

pub fn sindex_json(group: &str, g: &FiniteGroup, subset: &[usize], r: &SIndexReport) -> Value {
    json!({
        "group": group,
        "subset": labels(g, subset),
        "lower": r.lower,
        "upper": r.upper,
        "stable": r.stable,
        "witness_min": labels(g, &r.witness_min),
        "witness_max": labels(g, &r.witness_max),
        "count": r.count,
    })
}

/// `{"group", "verdict", "witness_A", "lower", "upper", "scanned",
/// "elapsed_ms"}` plus the two s-factors when unstable.
pub fn stability_json(group: &str, g: &FiniteGroup, r: &GroupStabilityReport, elapsed_ms: u64) -> Value {
    let w = r.witness.as_ref();
    json!({
        "group": group,
        "verdict": r.verdict.as_str(),
        "witness_A": w.map(|w| labels(g, &w.subset)),
        "lower": w.map(|w| w.lower),
        "upper": w.map(|w| w.upper),
        "small_sfactor": w.map(|w| labels(g, &w.small)),
        "large_sfactor": w.map(|w| labels(g, &w.large)),
        "scanned": r.subsets_scanned,
        "exhaustive": r.exhaustive,
        "elapsed_ms": elapsed_ms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use sfactor_core::constructions::witness_infinite_cyclic;
    use sfactor_core::{ElementCode, EnumerableGroup};

    #[test]
    fn witness_document() {
        let z = EnumerableGroup::Integers;
        let w = witness_infinite_cyclic(&z, &ElementCode::Int(1), 3, 7).unwrap();
        let doc = witness_json("z", &z, &w);
        assert_eq!(doc["iota"], 1);
        assert_eq!(doc["omega"], 3);
        assert_eq!(doc["isolated_vertex"], "7");
        assert_eq!(doc["params"], json!({"s": "1", "n": 3, "m": 7}));
        assert_eq!(doc["F"].as_array().unwrap().len(), 8);
    }
}
