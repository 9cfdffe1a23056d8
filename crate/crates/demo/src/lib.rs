//! wasm-bindgen entry points for the static page in `www/`. Every function
//! returns a JSON string; errors surface as JavaScript exceptions.

use std::cell::RefCell;
use std::collections::HashMap;

use property_lab::builtins::{lookup, TABLE_VERTEX_LIMIT};
use property_lab::{analyze as analyze_report, classes as class_listing, witness as witness_report, LoadedProperty};
use sensitivity_core::graph::LabeledGraph;
use sensitivity_core::hypercube::{sensitive_coordinates, PropertyFunction};
use serde::Serialize;
use wasm_bindgen::prelude::*;

thread_local! {
    static TABLES: RefCell<HashMap<(String, usize), PropertyFunction>> = RefCell::new(HashMap::new());
}

fn fail(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

/// Builtins only, as truth tables, cached per `(name, n)`.
fn load(property: &str, n: usize) -> Result<LoadedProperty, JsError> {
    if !(2..=TABLE_VERTEX_LIMIT).contains(&n) {
        return Err(JsError::new(&format!("the demo supports 2 ≤ n ≤ {TABLE_VERTEX_LIMIT}")));
    }
    let b = lookup(property).map_err(fail)?;
    let key = (property.to_string(), n);
    let function = match TABLES.with(|t| t.borrow().get(&key).cloned()) {
        Some(f) => f,
        None => {
            let f = b.table(n).map_err(fail)?;
            TABLES.with(|t| t.borrow_mut().insert(key, f.clone()));
            f
        }
    };
    Ok(LoadedProperty {
        label: property.to_string(),
        function,
        n: Some(n),
        builtin: Some(b),
    })
}

fn json<T: Serialize>(value: &T) -> Result<String, JsError> {
    serde_json::to_string(value).map_err(fail)
}

#[derive(Serialize)]
struct Builtin {
    name: &'static str,
    description: &'static str,
    monotone: bool,
}

/// The builtin property registry.
#[wasm_bindgen]
pub fn properties() -> Result<String, JsError> {
    let list: Vec<Builtin> = property_lab::registry()
        .iter()
        .map(|b| Builtin { name: b.name, description: b.description, monotone: b.monotone })
        .collect();
    json(&list)
}

#[derive(Serialize)]
struct PointValue {
    value: bool,
    sensitive: Vec<u32>,
}

/// `f` and its sensitive edge slots at the graph with edge bitmask `graph_hex`.
#[wasm_bindgen]
pub fn evaluate(property: &str, n: usize, graph_hex: &str) -> Result<String, JsError> {
    let p = load(property, n)?;
    let g = LabeledGraph::from_hex(n, graph_hex).map_err(fail)?;
    let sensitive = sensitive_coordinates(&p.function, &g.point()).map_err(fail)?;
    json(&PointValue { value: p.function.value(g.bits()), sensitive })
}

#[wasm_bindgen]
pub fn analyze(property: &str, n: usize) -> Result<String, JsError> {
    json(&analyze_report(&load(property, n)?).map_err(fail)?)
}

/// Witness extraction with every trace.
#[wasm_bindgen]
pub fn witness(property: &str, n: usize) -> Result<String, JsError> {
    json(&witness_report(&load(property, n)?).map_err(fail)?)
}

#[wasm_bindgen]
pub fn classes(n: usize) -> Result<String, JsError> {
    json(&class_listing(n).map_err(fail)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: Result<String, JsError>) -> Value {
        serde_json::from_str(&s.unwrap_or_else(|_| panic!("call failed"))).unwrap()
    }

    #[test]
    fn entry_points_return_json() {
        assert_eq!(parse(properties()).as_array().unwrap().len(), 8);
        let v = parse(evaluate("has-edge", 4, "0"));
        assert_eq!(v["value"], false);
        assert_eq!(v["sensitive"].as_array().unwrap().len(), 6);
        assert_eq!(parse(analyze("degree-n-minus-1", 5))["sensitivity"]["value"], 4);
        assert_eq!(parse(classes(4))["count"], 11);
        let w = parse(witness("contains-triangle", 5));
        assert!(w["traces"].as_array().unwrap().len() >= 2);
    }
}
