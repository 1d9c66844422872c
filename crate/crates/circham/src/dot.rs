//! Graphviz (DOT) export.

use crate::cert::CycleCert;
use crate::instance::Instance;
use std::collections::HashSet;
use std::fmt::Write;

/// Renders the full digraph (all `3n` arcs) in DOT format. When a
/// certificate is given, its `n` cycle arcs carry a highlight attribute.
/// Output is deterministic: vertices ascending, steps in the order 2, 3, c.
pub fn to_dot(inst: &Instance, cert: Option<&CycleCert>) -> String {
    let n = inst.n();
    let mut cycle_arcs: HashSet<(i64, i64)> = HashSet::new();
    if let Some(cert) = cert {
        for (v, s) in cert.vertex_tour().into_iter().zip(cert.steps()) {
            cycle_arcs.insert((v, *s));
        }
    }

    let mut out = String::new();
    writeln!(out, "digraph \"{inst}\" {{").unwrap();
    for v in 0..n {
        for s in inst.steps() {
            let target = (v + s) % n;
            if cycle_arcs.contains(&(v, s)) {
                writeln!(out, "  {v} -> {target} [color=red penwidth=2];").unwrap();
            } else {
                writeln!(out, "  {v} -> {target};").unwrap();
            }
        }
    }
    writeln!(out, "}}").unwrap();
    out
}
