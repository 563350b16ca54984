//! Graphviz rendering of the ideal lattice.

use std::fmt::Write as _;

use crate::z::ZContext;

/// Hasse diagram of the ideal lattice, bottom to top. z-ideals get a double
/// border and z-primes are filled grey.
pub fn to_dot(ctx: &ZContext) -> String {
    let l = ctx.lattice();
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", l.table().name().replace('"', "\\\""));
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=box];");
    for (i, &a) in l.ideals().iter().enumerate() {
        let mut attrs = vec![format!("label=\"{a}\"")];
        if ctx.is_z_ideal(a) {
            attrs.push("peripheries=2".into());
        }
        if ctx.spec_z().contains(&a) {
            attrs.push("style=filled".into());
            attrs.push("fillcolor=gray80".into());
        }
        let _ = writeln!(out, "  n{i} [{}];", attrs.join(", "));
    }
    for (lo, hi) in l.covers() {
        let _ = writeln!(out, "  n{lo} -> n{hi};");
    }
    out.push_str("}\n");
    out
}
