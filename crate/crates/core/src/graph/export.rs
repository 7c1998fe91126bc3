use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::analysis::GraphProperties;
use super::HomGraph;
use crate::caps::Caps;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Serialize)]
struct JsonVertex {
    id: usize,
    label: String,
    order: usize,
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    vertices: Vec<JsonVertex>,
    edges: Vec<[usize; 2]>,
    properties: &'a GraphProperties,
}

pub fn to_dot(g: &HomGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", g.label(v));
    }
    for (i, j) in g.graph().edges() {
        let _ = writeln!(out, "  {i} -- {j};");
    }
    out.push_str("}\n");
    out
}

pub fn to_json(g: &HomGraph, properties: &GraphProperties) -> String {
    let doc = JsonGraph {
        vertices: (0..g.vertex_count())
            .map(|v| JsonVertex {
                id: v,
                label: g.label(v),
                order: g.order(v),
            })
            .collect(),
        edges: g.graph().edges().into_iter().map(|(i, j)| [i, j]).collect(),
        properties,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("graph JSON serializes");
    s.push('\n');
    s
}

pub fn export_graph(g: &HomGraph, format: ExportFormat, caps: &Caps) -> Result<String> {
    Ok(match format {
        ExportFormat::Dot => to_dot(g),
        ExportFormat::Json => to_json(g, &GraphProperties::compute(g.graph(), caps)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::ModulePresentation;

    fn build(m: ModulePresentation) -> HomGraph {
        HomGraph::build(&m, &Caps::default()).unwrap()
    }

    #[test]
    fn dot_for_k2() {
        let g = build(ModulePresentation::zmod(2, 2, &[2]).unwrap());
        let dot = to_dot(&g);
        assert_eq!(dot, "graph G {\n  0 [label=\"0\"];\n  1 [label=\"<(2)>\"];\n  0 -- 1;\n}\n");
        assert_eq!(dot.matches(" -- ").count(), 1);
    }

    #[test]
    fn json_shapes() {
        let caps = Caps::default();
        let single = build(ModulePresentation::product_semisimple(2, 0, 1).unwrap());
        let v: serde_json::Value =
            serde_json::from_str(&export_graph(&single, ExportFormat::Json, &caps).unwrap()).unwrap();
        assert_eq!(v["edges"], serde_json::json!([]));
        assert_eq!(v["vertices"][0]["label"], "0");

        let k3 = build(ModulePresentation::zmod(2, 3, &[3]).unwrap());
        let v: serde_json::Value =
            serde_json::from_str(&export_graph(&k3, ExportFormat::Json, &caps).unwrap()).unwrap();
        assert_eq!(v["edges"], serde_json::json!([[0, 1], [0, 2], [1, 2]]));
        assert_eq!(v["vertices"][2]["order"], 4);
        assert_eq!(v["properties"]["complete"], true);
        assert_eq!(v["properties"]["diameter"], 1);
    }

    #[test]
    fn unknown_format() {
        assert!(matches!("svg".parse::<ExportFormat>(), Err(Error::UnknownFormat(_))));
    }
}
