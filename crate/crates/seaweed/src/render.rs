//! DOT and TikZ emission for meanders, block diagrams, and Hasse diagrams.
//!
//! Output is deterministic: vertices in label order, top arcs by left
//! endpoint before bottom arcs, covers in lexicographic order. The TikZ
//! variants draw arcs above and below one horizontal row of vertices,
//! the way meanders are usually drawn.

use std::fmt::Write;

use crate::meander::{Meander, Side};
use crate::poset::{ArrowKind, BlockDiagram, Poset};
use crate::weighted::WeightedMeander;

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Top => "top",
        Side::Bottom => "bottom",
    }
}

pub fn meander_dot(m: &Meander) -> String {
    let mut out = String::from("graph meander {\n  rankdir=LR;\n  node [shape=point];\n");
    write_rank_row(&mut out, m.n_vertices());
    for e in m.edges() {
        writeln!(
            out,
            "  v{} -- v{} [side={}];",
            e.lo,
            e.hi,
            side_name(e.side)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn weighted_dot(wm: &WeightedMeander) -> String {
    let mut out = String::from("graph weighted_meander {\n  rankdir=LR;\n  node [shape=point];\n");
    write_rank_row(&mut out, wm.base().n_vertices());
    for (e, w) in wm.weighted_edges() {
        writeln!(
            out,
            "  v{} -- v{} [side={}, label={w}];",
            e.lo,
            e.hi,
            side_name(e.side)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

fn write_rank_row(out: &mut String, n: usize) {
    out.push_str("  { rank=same;");
    for v in 1..=n {
        write!(out, " v{v};").unwrap();
    }
    out.push_str(" }\n");
}

pub fn blocks_dot(bd: &BlockDiagram) -> String {
    let mut out = String::from("digraph blocks {\n  rankdir=LR;\n  node [shape=circle];\n");
    for (i, &(lo, hi)) in bd.blocks().iter().enumerate() {
        let label: Vec<String> = (lo..=hi).map(|v| v.to_string()).collect();
        writeln!(out, "  b{} [label=\"{}\"];", i + 1, label.join(" ")).unwrap();
    }
    for (i, arrow) in bd.arrows().iter().enumerate() {
        match arrow {
            ArrowKind::Forward => writeln!(out, "  b{} -> b{};", i + 1, i + 2).unwrap(),
            ArrowKind::Backward => writeln!(out, "  b{} -> b{};", i + 2, i + 1).unwrap(),
            ArrowKind::None => {}
        }
    }
    out.push_str("}\n");
    out
}

pub fn hasse_dot(poset: &Poset) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n");
    let heights = poset.heights();
    let max_height = heights.iter().copied().max().unwrap_or(0);
    for h in 0..=max_height {
        let level: Vec<usize> = (1..=poset.len()).filter(|&p| heights[p - 1] == h).collect();
        if level.is_empty() {
            continue;
        }
        out.push_str("  { rank=same;");
        for p in level {
            write!(out, " n{p};").unwrap();
        }
        out.push_str(" }\n");
    }
    for (p, q) in poset.covers() {
        writeln!(out, "  n{p} -> n{q};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn meander_tikz(m: &Meander) -> String {
    let mut out = tikz_vertex_row(m.n_vertices());
    for e in m.edges() {
        out.push_str(&tikz_arc(&e, None));
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

pub fn weighted_tikz(wm: &WeightedMeander) -> String {
    let mut out = tikz_vertex_row(wm.base().n_vertices());
    for (e, w) in wm.weighted_edges() {
        out.push_str(&tikz_arc(&e, Some(w)));
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

fn tikz_vertex_row(n: usize) -> String {
    let mut out = String::from("\\begin{tikzpicture}[scale=1.3]\n");
    for v in 1..=n {
        writeln!(
            out,
            "  \\node[circle, fill, inner sep=2pt] (v{v}) at ({},0) {{}};",
            v - 1
        )
        .unwrap();
    }
    out
}

fn tikz_arc(e: &crate::meander::Edge, weight: Option<usize>) -> String {
    let bend = match e.side {
        Side::Top => "bend left=50",
        Side::Bottom => "bend right=50",
    };
    let label = match (weight, e.side) {
        (Some(w), Side::Top) => format!(" node[midway, above] {{${w}$}}"),
        (Some(w), Side::Bottom) => format!(" node[midway, below] {{${w}$}}"),
        (None, _) => String::new(),
    };
    format!("  \\draw (v{}) to[{bend}]{label} (v{});\n", e.lo, e.hi)
}

pub fn blocks_tikz(bd: &BlockDiagram) -> String {
    let mut out = String::from("\\begin{tikzpicture}\n");
    for (i, &(lo, hi)) in bd.blocks().iter().enumerate() {
        let label: Vec<String> = (lo..=hi).map(|v| format!("${v}$")).collect();
        writeln!(
            out,
            "  \\node[circle, draw, inner sep=2pt] (b{}) at ({},0) {{{}}};",
            i + 1,
            i,
            label.join("\\quad ")
        )
        .unwrap();
    }
    for (i, arrow) in bd.arrows().iter().enumerate() {
        match arrow {
            ArrowKind::Forward => {
                writeln!(
                    out,
                    "  \\draw[->] (b{}) to[bend right=50] (b{});",
                    i + 1,
                    i + 2
                )
                .unwrap();
            }
            ArrowKind::Backward => {
                writeln!(
                    out,
                    "  \\draw[<-] (b{}) to[bend left=50] (b{});",
                    i + 1,
                    i + 2
                )
                .unwrap();
            }
            ArrowKind::None => {}
        }
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

pub fn hasse_tikz(poset: &Poset) -> String {
    let mut out = String::from("\\begin{tikzpicture}\n");
    let heights = poset.heights();
    let max_height = heights.iter().copied().max().unwrap_or(0);
    for h in 0..=max_height {
        let level: Vec<usize> = (1..=poset.len()).filter(|&p| heights[p - 1] == h).collect();
        for (slot, p) in level.iter().enumerate() {
            writeln!(
                out,
                "  \\node[circle, fill, inner sep=1.5pt, label=right:{{${p}$}}] (n{p}) at ({slot},{h}) {{}};"
            )
            .unwrap();
        }
    }
    for (p, q) in poset.covers() {
        writeln!(out, "  \\draw (n{p}) -- (n{q});").unwrap();
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}
