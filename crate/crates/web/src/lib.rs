//! WebAssembly bindings for the demo page in `www/`.
//!
//! The `*_json` functions hold the logic and run natively as well; the
//! exported wrappers only convert errors into JavaScript exceptions.

use serde_json::json;
use wasm_bindgen::prelude::*;

use edgegp::classes::{classify, gpe_auto};
use edgegp::edgelist::read_graphs;
use edgegp::generate::{generate, FamilySpec};
use edgegp::graph6::write_graph6;
use edgegp::Graph;

/// Largest graph the page will solve; the exact search grows quickly past this.
pub const MAX_DEMO_EDGES: usize = 60;

fn parse_one(text: &str) -> Result<Graph, String> {
    let mut graphs = read_graphs(text, None).map_err(|e| e.to_string())?;
    if graphs.len() != 1 {
        return Err(format!("expected one graph, got {}", graphs.len()));
    }
    Ok(graphs.remove(0))
}

/// Solves each component and returns the graph together with the witness.
pub fn compute_json(text: &str) -> Result<String, String> {
    let g = parse_one(text)?;
    if g.edge_count() > MAX_DEMO_EDGES {
        return Err(format!("the demo stops at {MAX_DEMO_EDGES} edges; use the command-line tool"));
    }
    let mut witness = Vec::new();
    let mut methods: Vec<String> = Vec::new();
    for comp in g.components() {
        let (h, origin) = g.induced_subgraph(&comp);
        if h.edge_count() == 0 {
            continue;
        }
        let r = gpe_auto(&h).map_err(|e| e.to_string())?;
        witness.extend(r.witness.iter().map(|&e| origin[e]));
        let method = r.method.to_string();
        if !methods.contains(&method) {
            methods.push(method);
        }
    }
    witness.sort_unstable();
    Ok(json!({
        "n": g.vertex_count(),
        "edges": g.edges(),
        "gpe": witness.len(),
        "witness": witness,
        "method": methods.join("+"),
        "components": g.components().len(),
        "graph6": write_graph6(&g),
    })
    .to_string())
}

pub fn classify_json(text: &str) -> Result<String, String> {
    let g = parse_one(text)?;
    let c = classify(&g).map_err(|e| e.to_string())?;
    serde_json::to_string(&c).map_err(|e| e.to_string())
}

/// Generates a family member as an edge list, e.g. `("chain_Gk", "3", 0)`.
pub fn generate_edgelist(family: &str, params: &str, seed: u64) -> Result<String, String> {
    let params: Vec<String> = params.split_whitespace().map(str::to_string).collect();
    let spec = FamilySpec::parse(family, &params, seed).map_err(|e| e.to_string())?;
    let g = generate(&spec).map_err(|e| e.to_string())?;
    Ok(edgegp::edgelist::write_edgelist(&g))
}

#[wasm_bindgen]
pub fn compute(text: &str) -> Result<String, JsError> {
    compute_json(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = classifyGraph)]
pub fn classify_graph(text: &str) -> Result<String, JsError> {
    classify_json(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = generateFamily)]
pub fn generate_family(family: &str, params: &str, seed: u64) -> Result<String, JsError> {
    generate_edgelist(family, params, seed).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn compute_cycle() {
        let v: Value = serde_json::from_str(&compute_json("0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n").unwrap()).unwrap();
        assert_eq!(v["gpe"], 4);
        assert_eq!(v["method"], "fastpath:cycle");
        assert_eq!(v["witness"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn compute_two_triangles() {
        let v: Value = serde_json::from_str(&compute_json("0 1\n1 2\n2 0\n3 4\n4 5\n5 3").unwrap()).unwrap();
        assert_eq!((v["gpe"].as_u64(), v["components"].as_u64()), (Some(6), Some(2)));
    }

    #[test]
    fn generated_graph_round_trips() {
        let text = generate_edgelist("chain_Gk", "3", 0).unwrap();
        let v: Value = serde_json::from_str(&compute_json(&text).unwrap()).unwrap();
        assert_eq!((v["n"].as_u64(), v["gpe"].as_u64()), (Some(10), Some(4)));
        assert!(generate_edgelist("cycle", "2", 0).is_err());
    }

    #[test]
    fn classify_reports_block_bounds() {
        let text = generate_edgelist("clique_pendant_paths", "4 2 1,2", 0).unwrap();
        let v: Value = serde_json::from_str(&classify_json(&text).unwrap()).unwrap();
        assert_eq!(v["block_bounds"]["s_prime"], 7);
        assert!(classify_json("0 1\n2 3").is_err());
    }

    #[test]
    fn rejects_garbage_and_large_inputs() {
        assert!(compute_json("0 x").is_err());
        let big = generate_edgelist("complete", "12", 0).unwrap();
        assert!(compute_json(&big).is_err());
    }
}
