//! DOT rendering of configurations. With a cycle in scope, vertices are
//! labeled `id:multiplicity`; the marked vertex, if any, is doubly
//! circled.

use std::fmt::Write;

use floplen::{CurveConfiguration, Cycle, Vertex};

pub fn render(
    name: &str,
    config: &CurveConfiguration,
    cycle: Option<&Cycle>,
    marked: Option<Vertex>,
) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{name}\" {{").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for &v in config.vertices() {
        let label = match cycle {
            Some(cycle) => format!("{v}:{}", cycle.coefficient(v)),
            None => v.to_string(),
        };
        let emphasis = if marked == Some(v) { ", peripheries=2" } else { "" };
        writeln!(out, "  {v} [label=\"{label}\"{emphasis}];").unwrap();
    }
    for (a, b) in config.edges() {
        writeln!(out, "  {a} -- {b};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
