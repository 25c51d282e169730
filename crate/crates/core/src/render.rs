// scaled-zx: exactly scaled stabilizer ZX-calculus
// Copyright 2026 The scaled-zx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Text renderings of diagrams: Graphviz DOT and TikZ.

use std::fmt::Write;

use crate::diagram::{Diagram, End, VertexKind};

fn end_name(end: End) -> String {
    match end {
        End::Vertex(v) => format!("v{}", v.0),
        End::Input(i) => format!("in{i}"),
        End::Output(j) => format!("out{j}"),
    }
}

fn label(kind: VertexKind) -> String {
    match kind.phase() {
        Some(p) if !p.is_zero() => p.to_string(),
        _ => String::new(),
    }
}

fn inputs(d: &Diagram) -> Vec<String> {
    (0..d.n_inputs()).map(|i| end_name(End::Input(i))).collect()
}

fn outputs(d: &Diagram) -> Vec<String> {
    (0..d.n_outputs()).map(|j| end_name(End::Output(j))).collect()
}

/// An undirected DOT graph. Z spiders are green, X spiders red, Hadamard
/// nodes yellow boxes and stars black stars; inputs sit on the left.
pub fn to_dot(d: &Diagram) -> String {
    let d = d.relabelled();
    let mut s = String::from("graph zx {\n");
    if d.num_vertices() + d.boundary().len() > 0 || d.free_loops() > 0 {
        s.push_str("  rankdir=LR;\n");
    }
    for (rank, ends) in [("source", inputs(&d)), ("sink", outputs(&d))] {
        if ends.is_empty() {
            continue;
        }
        for e in &ends {
            let _ = writeln!(s, "  {e} [shape=point, xlabel=\"{e}\"];");
        }
        let _ = writeln!(s, "  {{rank={rank}; {};}}", ends.join("; "));
    }
    for (v, kind) in d.vertices() {
        let style = match kind {
            VertexKind::ZSpider(_) => "shape=circle, style=filled, fillcolor=\"#ccffcc\"",
            VertexKind::XSpider(_) => "shape=circle, style=filled, fillcolor=\"#ff8888\"",
            VertexKind::Hadamard => "shape=square, style=filled, fillcolor=\"#ffff00\", width=0.2",
            VertexKind::Star => "shape=star, style=filled, fillcolor=black, width=0.3",
        };
        let _ = writeln!(s, "  {} [{style}, label=\"{}\"];", end_name(End::Vertex(v)), label(kind));
    }
    for (_, (a, b)) in d.edges() {
        let _ = writeln!(s, "  {} -- {};", end_name(a), end_name(b));
    }
    for i in 0..d.free_loops() {
        let _ = writeln!(s, "  loop{i} [shape=point]; loop{i} -- loop{i};");
    }
    s.push_str("}\n");
    s
}

/// A standalone `tikzpicture`. Vertices are laid out on a grid in id
/// order; inputs on the left, outputs on the right.
pub fn to_tikz(d: &Diagram) -> String {
    let d = d.relabelled();
    let mut s = String::from("\\begin{tikzpicture}\n");
    let pos = |end: End| -> (f64, f64) {
        match end {
            End::Input(i) => (0.0, -(i as f64)),
            End::Output(j) => (6.0, -(j as f64)),
            End::Vertex(v) => (1.0 + (v.0 % 4) as f64 * 1.25, -((v.0 / 4) as f64) - 0.5),
        }
    };
    for end in d.boundary() {
        let (x, y) = pos(end);
        let _ = writeln!(s, "  \\node[inner sep=0] ({}) at ({x:.2}, {y:.2}) {{}};", end_name(end));
    }
    for (v, kind) in d.vertices() {
        let style = match kind {
            VertexKind::ZSpider(_) => "circle, draw, fill=green!30",
            VertexKind::XSpider(_) => "circle, draw, fill=red!50",
            VertexKind::Hadamard => "rectangle, draw, fill=yellow",
            VertexKind::Star => "star, draw, fill=black, inner sep=1pt",
        };
        let text = label(kind).replace('π', "\\pi").replace('−', "-");
        let text = if text.is_empty() { text } else { format!("${text}$") };
        let (x, y) = pos(End::Vertex(v));
        let _ = writeln!(s, "  \\node[{style}] ({}) at ({x:.2}, {y:.2}) {{{text}}};", end_name(End::Vertex(v)));
    }
    for (_, (a, b)) in d.edges() {
        if a == b {
            let _ = writeln!(s, "  \\draw ({}) to[loop above] ();", end_name(a));
        } else {
            let _ = writeln!(s, "  \\draw ({}) -- ({});", end_name(a), end_name(b));
        }
    }
    s.push_str("\\end{tikzpicture}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bb84::bell_state;

    #[test]
    fn empty_graph_has_no_body() {
        assert_eq!(to_dot(&Diagram::empty()), "graph zx {\n}\n");
    }

    #[test]
    fn bell_state_dot() {
        let dot = to_dot(&bell_state());
        assert_eq!(dot.matches("shape=circle").count() + dot.matches("shape=star").count(), 3);
        assert!(dot.contains("out0 -- out1;"));
        assert!(dot.contains("v1 -- v2;"));
    }

    #[test]
    fn tikz_mentions_every_vertex() {
        let t = to_tikz(&bell_state());
        assert_eq!(t.matches("\\node[").count(), 5);
        assert!(t.starts_with("\\begin{tikzpicture}"));
    }
}
