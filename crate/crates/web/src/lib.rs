//! Browser bindings. Every export takes a graph as either a spec such as
//! `circulant:15:3,5` or a graph6 string, and returns JSON text. Failures come
//! back as `{"error": "..."}`.

use oddvt::census::GraphSpec;
use oddvt::factor::{uniform_odd_two_factor, FactorConfig};
use oddvt::graph::{parse_graph6, to_graph6};
use oddvt::hamilton::{contraction_procedure, hamilton_cycle, ProcedureConfig};
use oddvt::symmetry::{automorphism_group, is_vertex_transitive};
use oddvt::{Budget, Graph, Search};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest graph the page accepts.
pub const MAX_ORDER: usize = 45;

const ORACLE_WORK: u64 = 20_000_000;

// The browser has no monotonic clock for `Budget` deadlines, so searches
// inside orbits run without one.
fn factor_config() -> FactorConfig {
    FactorConfig {
        group_budget_ms: None,
        ..FactorConfig::default()
    }
}

fn load(input: &str) -> Result<Graph, String> {
    let input = input.trim();
    let g = match input.parse::<GraphSpec>() {
        Ok(GraphSpec::File { .. }) => return Err("file specs are not available here".into()),
        Ok(spec) => spec.build(),
        Err(_) if !input.contains(':') => parse_graph6(input),
        Err(e) => Err(e),
    }
    .map_err(|e| e.to_string())?;
    if g.order() > MAX_ORDER {
        return Err(format!("{} vertices; the limit is {MAX_ORDER}", g.order()));
    }
    Ok(g)
}

fn respond(result: Result<Value, String>) -> String {
    result.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

pub fn describe_value(input: &str) -> Result<Value, String> {
    let g = load(input)?;
    let group_order = automorphism_group(&g).ok().map(|a| a.order());
    Ok(json!({
        "graph6": to_graph6(&g),
        "n": g.order(),
        "edges": g.edges(),
        "degree": g.regular_degree(),
        "connected": g.is_connected(),
        "odd_order": g.order() % 2 == 1,
        "vertex_transitive": is_vertex_transitive(&g).ok(),
        "automorphism_group_order": group_order,
    }))
}

pub fn factor_value(input: &str) -> Result<Value, String> {
    let g = load(input)?;
    let attempt = uniform_odd_two_factor(&g, &factor_config(), &Budget::unlimited())
        .map_err(|e| e.to_string())?;
    let verdict = attempt.outcome.verdict();
    Ok(json!({
        "verdict": verdict,
        "certificate": attempt.outcome.found(),
        "notes": attempt.notes,
    }))
}

pub fn hamilton_value(input: &str) -> Result<Value, String> {
    let g = load(input)?;
    let cfg = ProcedureConfig { factor: factor_config() };
    let trace = contraction_procedure(&g, &cfg, &Budget::unlimited()).map_err(|e| e.to_string())?;
    let oracle = if g.order() <= oddvt::hamilton::ORACLE_BOUND {
        match hamilton_cycle(&g, &Budget::unlimited().with_work_limit(ORACLE_WORK)) {
            Ok(Search::Found(c)) => json!({ "verdict": "present", "cycle": c }),
            Ok(s) => json!({ "verdict": s.verdict() }),
            Err(e) => json!({ "verdict": "unknown", "error": e.to_string() }),
        }
    } else {
        Value::Null
    };
    Ok(json!({
        "edges": g.edges(),
        "n": g.order(),
        "procedure": trace,
        "oracle": oracle,
    }))
}

/// Order, edges and symmetry of a graph.
#[wasm_bindgen]
pub fn describe(input: &str) -> String {
    respond(describe_value(input))
}

/// A uniform odd 2-factor, or why none was found.
#[wasm_bindgen]
pub fn find_factor(input: &str) -> String {
    respond(factor_value(input))
}

/// The contraction trace with its lifted cycle, next to the exact oracle.
#[wasm_bindgen]
pub fn find_hamilton_cycle(input: &str) -> String {
    respond(hamilton_value(input))
}
