//! Graphviz rendering of intervals.

use std::fmt::Write;

use crate::classify::{boolean_over_support_bruhat, boolean_over_support_weak};
use crate::order::{extract_interval, IntervalSpec, OrderKind};
use crate::words::canonical_word;

/// DOT digraph of the cover relation of `spec`, drawn bottom to top.
///
/// Nodes are named `p<one-line>` and labelled with the one-line notation
/// and the lexicographically smallest reduced word. Node and edge order is
/// sorted, so output is byte-stable. With `highlight_support`, elements
/// whose intervals above each support generator are all boolean (in the
/// interval's order) are drawn in red.
pub fn emit_hasse(spec: &IntervalSpec, highlight_support: bool) -> String {
    let poset = extract_interval(spec);
    let name = |i: usize| format!("p{}", poset.label(i).to_string().replace(',', "_"));

    let mut out = String::new();
    writeln!(out, "digraph interval {{").unwrap();
    writeln!(out, "  // {spec}").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    // labels are already sorted by (length, one-line)
    for (i, w) in poset.labels().iter().enumerate() {
        let highlighted = highlight_support
            && match spec.kind() {
                OrderKind::Bruhat => boolean_over_support_bruhat(w),
                OrderKind::Weak => boolean_over_support_weak(w),
            };
        let style = if highlighted {
            ", color=red, fontcolor=red"
        } else {
            ""
        };
        writeln!(
            out,
            "  {} [label=\"{}\\n{}\"{}];",
            name(i),
            w,
            canonical_word(w),
            style
        )
        .unwrap();
    }
    for (a, b) in poset.cover_edges() {
        writeln!(out, "  {} -> {};", name(a), name(b)).unwrap();
    }
    out.push_str("}\n");
    out
}
