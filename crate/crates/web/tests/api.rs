use jlring_web::{evaluate, hasse, order};
use serde_json::Value;

fn call(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn evaluate_operations() {
    let v = call(evaluate("dual", "Std(rho[0..1])", ""));
    assert_eq!(v["ok"], true);
    assert_eq!(v["result"], "Std(rho[0..1]) - Std(rho[0..0],rho[1..1])");
    let v = call(evaluate("jl", "Std(rho'{0;3})", ""));
    assert_eq!(v["result"], "Std(rho[0..5])");
    let v = call(evaluate("lj", "Std(rho[0..0],rho[1..3])", ""));
    assert_eq!(v["result"], "0");
    let v = call(evaluate("decompose", "Std(rho[0..0],rho[1..1])", ""));
    assert_eq!(v["result"], "Irr(rho[0..1]) + Irr(rho[0..0],rho[1..1])");
}

#[test]
fn errors_are_reported() {
    let v = call(evaluate("dual", "Std(rho[0..1]", ""));
    assert_eq!(v["ok"], false);
    assert!(v["error"].as_str().unwrap().contains("column 14"));
    let v = call(evaluate("frob", "Std(rho[0..1])", ""));
    assert!(v["error"].as_str().unwrap().contains("unknown operation"));
    let v = call(evaluate("jl", "Std(rho'{0;1})", r#"{"d":2,"families":[{"name":"rho","p":1,"s":3}]}"#));
    assert!(v["error"].as_str().unwrap().contains("families[0].s"));
}

#[test]
fn order_with_certificate() {
    let v = call(order(
        "Std(rho[0..9],rho[1..6],rho[3..8],rho[4..5])",
        "Std(rho[0..5],rho[1..8],rho[3..6],rho[4..9])",
        "",
    ));
    assert_eq!(v["related"], true);
    assert_eq!(v["certificate"].as_array().unwrap().len(), 4);
    let v = call(order("Std(rho'{0;5},rho'{1;3},rho'{3;3},rho'{4;1})", "Std(rho'{0;3},rho'{1;4},rho'{3;2},rho'{4;3})", ""));
    assert_eq!(v["related"], false);
}

#[test]
fn hasse_diagram_of_a_segment_support() {
    // the down-set of three singletons is a Boolean lattice on two cuts
    let v = call(hasse("Std(rho[0..0],rho[1..1],rho[2..2])", ""));
    assert_eq!(v["ok"], true);
    let nodes = v["nodes"].as_array().unwrap();
    assert_eq!(nodes.len(), 4);
    assert_eq!(v["edges"].as_array().unwrap().len(), 4);
    let mu: Vec<i64> = nodes.iter().map(|n| n["mobius"].as_i64().unwrap()).collect();
    assert_eq!(mu.iter().sum::<i64>(), 0);
    assert_eq!(mu.iter().filter(|&&m| m == -1).count(), 2);
    let v = call(hasse("Std(rho[0..5],rho[1..8],rho[3..6],rho[4..9])", ""));
    assert_eq!(v["nodes"].as_array().unwrap().len(), 20);
}
