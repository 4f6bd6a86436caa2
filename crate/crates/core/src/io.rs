//! JSON input formats and number formatting.
//!
//! Graphon files: `{"family":"constant","c":0.7}`,
//! `{"family":"sbm","block_sizes":[...],"block_matrix":[[...]]}`,
//! `{"family":"separable"}` or `{"family":"grid","kernel":[[...]]}`.
//! Graph files: `{"n":3,"weights":[[...]]}`. A `from-graph` report is also
//! accepted wherever a graphon is expected.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graphon::{GraphonFamily, WeightedGraph};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub n: usize,
    pub weights: Vec<Vec<f64>>,
}

impl GraphSpec {
    pub fn to_graph(&self) -> Result<WeightedGraph> {
        if self.weights.len() != self.n {
            return Err(Error::BadParameters(format!(
                "n = {} but weights has {} rows",
                self.n,
                self.weights.len()
            )));
        }
        WeightedGraph::new(&self.weights)
    }

    pub fn from_graph(g: &WeightedGraph) -> Self {
        Self { n: g.n(), weights: g.rows() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Input {
    Graphon(GraphonFamily),
    Graph(GraphSpec),
}

pub fn parse_input(text: &str) -> Result<Input> {
    let value: Value = serde_json::from_str(text)?;
    parse_value(value)
}

fn parse_value(value: Value) -> Result<Input> {
    let Value::Object(map) = &value else {
        return Err(Error::Parse("input must be a JSON object".into()));
    };
    if map.contains_key("family") {
        return Ok(Input::Graphon(serde_json::from_value(value)?));
    }
    if map.contains_key("weights") {
        return Ok(Input::Graph(serde_json::from_value(value)?));
    }
    if let Some(graphon) = map.get("results").and_then(|r| r.get("graphon")) {
        return Ok(Input::Graphon(serde_json::from_value(graphon.clone())?));
    }
    Err(Error::Parse(
        "expected a graphon (\"family\"), a graph (\"n\", \"weights\") or a from-graph report".into(),
    ))
}

pub fn read_input(path: &Path) -> Result<Input> {
    parse_input(&fs::read_to_string(path)?)
}

/// Rounds to `digits` significant decimal digits.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits.saturating_sub(1), x).parse().unwrap_or(x)
}

/// Plain decimal with 12 significant digits, as used in CSV output.
pub fn format_sig12(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let x = round_sig(x, 12);
    let magnitude = if x == 0.0 { 0 } else { x.abs().log10().floor() as i32 };
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Two-column CSV with a header line.
pub fn write_csv(path: &Path, header: (&str, &str), rows: &[(String, f64)]) -> Result<()> {
    let mut out = format!("{},{}\n", header.0, header.1);
    for (key, value) in rows {
        out.push_str(key);
        out.push(',');
        out.push_str(&format_sig12(*value));
        out.push('\n');
    }
    fs::write(path, out)?;
    Ok(())
}
