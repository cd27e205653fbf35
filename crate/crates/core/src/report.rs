//! Deterministic JSON report envelopes and census rows.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::domain::DomainSpec;
use crate::geometry::ToricRegion;
use crate::lattice::PathGenerator;
use crate::rational::Rational;
use crate::VERSION;

pub const TOOL: &str = "toric-ech";

#[derive(Debug, Clone, Serialize)]
pub struct Envelope<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    /// Flag values, serialized as an object in the order given.
    #[serde(serialize_with = "ordered_map")]
    pub options: Vec<(String, String)>,
    pub inputs: Vec<DomainSpec>,
    pub result: T,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: &str, options: Vec<(String, String)>, inputs: Vec<DomainSpec>, result: T) -> Self {
        Envelope { tool: TOOL, version: VERSION, command: command.into(), options, inputs, result }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }
}

fn ordered_map<S: Serializer>(pairs: &[(String, String)], s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(pairs.len()))?;
    for (k, v) in pairs {
        map.serialize_entry(k, v)?;
    }
    map.end()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorRow {
    pub generator: String,
    pub x: u64,
    pub y: u64,
    pub index: i64,
    pub j0: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub action: Option<Rational>,
}

impl GeneratorRow {
    pub fn new(g: &PathGenerator, region: Option<&ToricRegion>) -> Self {
        let (x, y) = g.extents();
        GeneratorRow {
            generator: g.to_string(),
            x,
            y,
            index: g.index(),
            j0: g.j0(),
            action: region.map(|r| g.action(r).expect("flavor checked by caller")),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Census {
    pub flavor: crate::geometry::Flavor,
    pub count: usize,
    pub generators: Vec<GeneratorRow>,
}

/// Plain-text table of census rows.
pub fn table(rows: &[GeneratorRow]) -> String {
    let header = ["generator", "X", "Y", "index", "J0", "action"];
    let cells: Vec<[String; 6]> = rows
        .iter()
        .map(|r| {
            [
                r.generator.clone(),
                r.x.to_string(),
                r.y.to_string(),
                r.index.to_string(),
                r.j0.to_string(),
                r.action.as_ref().map_or("-".into(), |a| a.to_string()),
            ]
        })
        .collect();
    let mut width = header.map(str::len);
    for row in &cells {
        for (w, c) in width.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |row: &[String]| {
        let mut s = String::new();
        for (i, (c, w)) in row.iter().zip(width).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            if i == 0 {
                s.push_str(&format!("{c:<w$}"));
            } else {
                s.push_str(&format!("{c:>w$}"));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(&header.map(String::from));
    for row in &cells {
        out.push_str(&line(row));
    }
    out
}
