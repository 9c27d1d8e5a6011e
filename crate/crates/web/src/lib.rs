use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use localbox::bounds::bounds_report;
use localbox::construct::{construct, Strategy, StrategyKind};
use localbox::interval::Coord;
use localbox::poset::{crown_local_realizer, crown_poset, verify_local_realizer};
use localbox::{generators, verify_representation, Graph};

fn fail(e: impl ToString) -> JsValue {
    JsValue::from_str(&e.to_string())
}

fn float(c: Coord) -> f64 {
    *c.numer() as f64 / *c.denom() as f64
}

fn family(name: &str, n: usize, seed: u64) -> Result<Graph, JsValue> {
    let g = match name {
        "roberts" => generators::roberts(n).map_err(fail)?,
        "cycle" if n >= 3 => generators::cycle(n),
        "path" => generators::path(n),
        "line" => generators::bounded_line_graph(n, seed).map_err(fail)?,
        "gnp" => generators::gnp(n, 0.3, seed).map_err(fail)?,
        "petersen" => generators::petersen(),
        _ => return Err(fail(format!("unknown family {name:?} for n = {n}"))),
    };
    Ok(g)
}

fn strategy(name: &str, g: &Graph, seed: u64) -> Result<Strategy, JsValue> {
    Ok(match name.parse::<StrategyKind>().map_err(fail)? {
        StrategyKind::Clawfree => Strategy::Clawfree,
        StrategyKind::Biclique => Strategy::Biclique,
        StrategyKind::Peel => Strategy::Peel { threshold: None },
        StrategyKind::Pairwise => Strategy::Pairwise {
            parts: 2,
            bound: g.max_degree(),
            tries: 100,
            seed,
        },
        StrategyKind::Product => Strategy::Product {
            limits: Default::default(),
        },
        StrategyKind::Auto => Strategy::Auto,
    })
}

/// Builds a family member, represents it with `strategy`, and returns the
/// layers and per-vertex frequencies as JSON.
#[wasm_bindgen]
pub fn represent(
    family_name: &str,
    n: usize,
    strategy_name: &str,
    seed: u64,
) -> Result<String, JsValue> {
    let g = family(family_name, n, seed)?;
    let rep = construct(&g, &strategy(strategy_name, &g, seed)?).map_err(fail)?;
    let report = verify_representation(&g, &rep).map_err(fail)?;
    let layers: Vec<Value> = rep
        .layers()
        .iter()
        .map(|l| {
            let span = l.span();
            let intervals: Vec<Value> = l
                .explicit()
                .iter()
                .map(|(&v, iv)| json!([v, float(iv.lo()), float(iv.hi())]))
                .collect();
            json!({
                "span": [float(span.lo()), float(span.hi())],
                "intervals": intervals,
                "non_universal": l.non_universal(),
            })
        })
        .collect();
    let out = json!({
        "n": g.n(),
        "m": g.m(),
        "delta": g.max_degree(),
        "edges": g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
        "strategy": rep.strategy(),
        "exact": report.exact,
        "max_frequency": report.max_frequency,
        "frequencies": report.per_vertex_frequency,
        "layers": layers,
    });
    Ok(out.to_string())
}

/// The frequency-3 local realizer of the crown on `2n` elements.
#[wasm_bindgen]
pub fn crown(n: usize) -> Result<String, JsValue> {
    let p = crown_poset(n).map_err(fail)?;
    let r = crown_local_realizer(n).map_err(fail)?;
    let report = verify_local_realizer(&p, &r).map_err(fail)?;
    let ples: Vec<&[usize]> = r.ples().iter().map(|p| p.elements()).collect();
    let out = json!({
        "n": n,
        "relations": p.relations(),
        "ples": ples,
        "valid": report.valid,
        "mu": report.mu,
        "mu_per_element": report.mu_per_element,
    });
    Ok(out.to_string())
}

/// Bounds report of a family member.
#[wasm_bindgen]
pub fn bounds(family_name: &str, n: usize, seed: u64) -> Result<String, JsValue> {
    let g = family(family_name, n, seed)?;
    let r = bounds_report(&g);
    let out = json!({
        "n": r.n,
        "m": r.m,
        "max_degree": r.max_degree,
        "greedy_chi": r.greedy_chi,
        "claw_free": r.claw_free,
        "bound_degree": r.bound_degree.map(|b| b.to_string()),
        "bound_clawfree": r.bound_clawfree,
        "bound_order": r.bound_order,
        "bound_size": r.bound_size,
    });
    Ok(out.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: Result<String, JsValue>) -> Value {
        serde_json::from_str(&s.unwrap()).unwrap()
    }

    #[test]
    fn roberts_is_frequency_one() {
        let v = parse(represent("roberts", 4, "biclique", 0));
        assert_eq!(v["exact"], true);
        assert_eq!(v["max_frequency"], 1);
        assert_eq!(v["n"], 8);
    }

    #[test]
    fn crown_json() {
        let v = parse(crown(3));
        assert_eq!(v["mu"], 3);
        assert_eq!(v["ples"].as_array().unwrap().len(), 5);
    }

    #[test]
    fn bounds_json() {
        let v = parse(bounds("cycle", 16, 0));
        assert_eq!(v["bound_order"], 96.0);
        assert_eq!(v["bound_degree"], "1024");
    }
}
