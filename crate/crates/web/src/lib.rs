//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every entry point takes strings and returns a JSON string, either
//! `{"ok": true, ...}` or `{"ok": false, "error": "..."}`, so the same
//! functions run natively in tests.

use jlring::decomp::{to_irreducible_basis, to_standard_basis};
use jlring::{leq, moebius, segment_support_provider, Basis, DownSetPoset, Multisegment, TransferContext, VirtualRep};
use jlring_cli::{parse_expr, Scenario};
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

/// Down-sets larger than this are not drawn.
pub const MAX_DIAGRAM_SIZE: usize = 400;

fn scenario(text: &str) -> Result<Scenario, String> {
    if text.trim().is_empty() {
        Ok(Scenario::default())
    } else {
        Scenario::from_json(text).map_err(|e| e.to_string())
    }
}

fn respond(r: Result<Value, String>) -> String {
    match r {
        Ok(Value::Object(mut m)) => {
            m.insert("ok".into(), Value::Bool(true));
            Value::Object(m).to_string()
        }
        Ok(other) => json!({ "ok": true, "value": other }).to_string(),
        Err(e) => json!({ "ok": false, "error": e }).to_string(),
    }
}

fn parse(text: &str, sc: &Scenario) -> Result<VirtualRep, String> {
    parse_expr(text, sc.ctx()).map_err(|e| e.to_string())
}

fn single_key(x: &VirtualRep) -> Result<Multisegment, String> {
    match x.terms().iter().next() {
        Some((ms, 1)) if x.len() == 1 => Ok(ms.clone()),
        _ => Err("expected a single multisegment such as Std(rho[0..1])".into()),
    }
}

fn evaluate_value(op: &str, expr: &str, scenario_json: &str) -> Result<Value, String> {
    let sc = scenario(scenario_json)?;
    let x = parse(expr, &sc)?;
    let prov = segment_support_provider();
    let tc = TransferContext::new(sc.ctx().clone());
    let err = |e: jlring::Error| e.to_string();
    let standard = |x: &VirtualRep| match x.basis() {
        Basis::Standard => Ok(x.clone()),
        Basis::Irreducible => to_standard_basis(x, &prov).map_err(err),
    };
    let result = match op {
        "dual" => match x.basis() {
            Basis::Standard => x.aubert_graded().map_err(err)?.to_string(),
            Basis::Irreducible => {
                let y = standard(&x)?.aubert_graded().map_err(err)?;
                to_irreducible_basis(&y, &prov).map_err(err)?.to_string()
            }
        },
        "jl" => tc.jl(&standard(&x)?).map_err(err)?.to_string(),
        "lj" => tc.lj(&standard(&x)?).map_err(err)?.to_string(),
        "comul" => standard(&x)?.comult().map_err(err)?.to_string(),
        "decompose" => to_irreducible_basis(&x, &prov).map_err(err)?.to_string(),
        "express" => to_standard_basis(&x, &prov).map_err(err)?.to_string(),
        _ => return Err(format!("unknown operation `{op}`")),
    };
    Ok(json!({ "input": x.to_string(), "result": result }))
}

fn order_value(a: &str, b: &str, scenario_json: &str) -> Result<Value, String> {
    let sc = scenario(scenario_json)?;
    let ka = single_key(&parse(a, &sc)?)?;
    let kb = single_key(&parse(b, &sc)?)?;
    let (related, cert) = leq(&ka, &kb).map_err(|e| e.to_string())?;
    let steps: Vec<Value> = cert
        .iter()
        .flat_map(|c| &c.steps)
        .map(|s| json!({ "pair": [s.pair.0.to_string(), s.pair.1.to_string()], "result": s.result.to_string() }))
        .collect();
    Ok(json!({ "a": ka.to_string(), "b": kb.to_string(), "related": related, "certificate": steps }))
}

fn hasse_value(expr: &str, scenario_json: &str) -> Result<Value, String> {
    let sc = scenario(scenario_json)?;
    let top = single_key(&parse(expr, &sc)?)?;
    let poset = DownSetPoset::new(&top);
    if poset.len() > MAX_DIAGRAM_SIZE {
        return Err(format!("the down-set has {} elements; the limit is {MAX_DIAGRAM_SIZE}", poset.len()));
    }
    let n = poset.len();
    let elems = poset.elements();
    let nodes: Vec<Value> = elems
        .iter()
        .map(|m| {
            json!({
                "label": m.to_string(),
                "rank": m.rank(),
                "mobius": moebius(m, &top).expect("element of the down-set"),
            })
        })
        .collect();
    let mut edges = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let below = x != y && poset.le(x, y);
            if below && !(0..n).any(|z| z != x && z != y && poset.le(x, z) && poset.le(z, y)) {
                edges.push(json!([x, y]));
            }
        }
    }
    Ok(json!({ "top": top.to_string(), "nodes": nodes, "edges": edges }))
}

/// Applies `op` (dual, jl, lj, comul, decompose or express) to an expression.
#[wasm_bindgen]
pub fn evaluate(op: &str, expr: &str, scenario_json: &str) -> String {
    respond(evaluate_value(op, expr, scenario_json))
}

/// Decides `a <= b` and returns the chain of elementary operations.
#[wasm_bindgen]
pub fn order(a: &str, b: &str, scenario_json: &str) -> String {
    respond(order_value(a, b, scenario_json))
}

/// The down-set of a multisegment as a Hasse diagram, each node carrying the
/// Möbius value `μ(node, top)`.
#[wasm_bindgen]
pub fn hasse(expr: &str, scenario_json: &str) -> String {
    respond(hasse_value(expr, scenario_json))
}
