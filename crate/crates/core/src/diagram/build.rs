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

//! Constructors for common diagrams.

use super::{Colour, Diagram, End, VertexId, VertexKind};
use crate::phase::Phase;

impl Diagram {
    /// `n` parallel bare wires.
    pub fn identity(n: usize) -> Diagram {
        let mut d = Diagram::new(n, n);
        for i in 0..n {
            d.add_edge(End::Input(i), End::Output(i));
        }
        d
    }

    /// A single spider with `n_in` input legs and `n_out` output legs.
    pub fn spider(colour: Colour, phase: Phase, n_in: usize, n_out: usize) -> Diagram {
        let mut d = Diagram::new(n_in, n_out);
        let v = d.add_vertex(VertexKind::spider(colour, phase));
        for i in 0..n_in {
            d.add_edge(End::Input(i), End::Vertex(v));
        }
        for j in 0..n_out {
            d.add_edge(End::Vertex(v), End::Output(j));
        }
        d
    }

    pub fn z_spider(phase: Phase, n_in: usize, n_out: usize) -> Diagram {
        Diagram::spider(Colour::Z, phase, n_in, n_out)
    }

    pub fn x_spider(phase: Phase, n_in: usize, n_out: usize) -> Diagram {
        Diagram::spider(Colour::X, phase, n_in, n_out)
    }

    /// One-output state `Z(α)`.
    pub fn z_state(phase: Phase) -> Diagram {
        Diagram::z_spider(phase, 0, 1)
    }

    /// One-output state `X(α)`.
    pub fn x_state(phase: Phase) -> Diagram {
        Diagram::x_spider(phase, 0, 1)
    }

    /// A Hadamard node on a single wire.
    pub fn hadamard_wire() -> Diagram {
        let mut d = Diagram::new(1, 1);
        let h = d.add_vertex(VertexKind::Hadamard);
        d.add_edge(End::Input(0), End::Vertex(h));
        d.add_edge(End::Vertex(h), End::Output(0));
        d
    }

    /// The star node alone, with value 1/2.
    pub fn star() -> Diagram {
        let mut d = Diagram::empty();
        d.add_star();
        d
    }

    /// `⟨Z(α)|X(β)⟩`: a degree-one Z spider joined to a degree-one X spider.
    pub fn pair(alpha: Phase, beta: Phase) -> Diagram {
        let mut d = Diagram::empty();
        d.add_pair(alpha, beta);
        d
    }

    /// A spider with no legs.
    pub fn scalar_node(colour: Colour, phase: Phase) -> Diagram {
        let mut d = Diagram::empty();
        d.add_vertex(VertexKind::spider(colour, phase));
        d
    }

    pub fn z_scalar(phase: Phase) -> Diagram {
        Diagram::scalar_node(Colour::Z, phase)
    }

    pub fn x_scalar(phase: Phase) -> Diagram {
        Diagram::scalar_node(Colour::X, phase)
    }

    /// A bare wire bent into two outputs.
    pub fn cup() -> Diagram {
        let mut d = Diagram::new(0, 2);
        d.add_edge(End::Output(0), End::Output(1));
        d
    }

    /// A bare wire bent into two inputs.
    pub fn cap() -> Diagram {
        let mut d = Diagram::new(2, 0);
        d.add_edge(End::Input(0), End::Input(1));
        d
    }

    /// A closed wire with no vertices.
    pub fn free_loop() -> Diagram {
        let mut d = Diagram::empty();
        d.set_free_loops(1);
        d
    }

    pub fn add_star(&mut self) -> VertexId {
        self.add_vertex(VertexKind::Star)
    }

    /// Adds a disconnected `⟨Z(α)|X(β)⟩`, returning the Z and X vertices.
    pub fn add_pair(&mut self, alpha: Phase, beta: Phase) -> (VertexId, VertexId) {
        let z = self.add_vertex(VertexKind::ZSpider(alpha));
        let x = self.add_vertex(VertexKind::XSpider(beta));
        self.add_edge(End::Vertex(z), End::Vertex(x));
        (z, x)
    }

    /// Adds a copy of `other` beside this diagram, with its boundary points
    /// appended after the existing ones. Returns the vertex renaming.
    pub fn absorb(&mut self, other: &Diagram) -> std::collections::BTreeMap<VertexId, VertexId> {
        let (n_in, n_out) = (self.n_inputs, self.n_outputs);
        self.n_inputs += other.n_inputs;
        self.n_outputs += other.n_outputs;
        self.loops += other.loops;
        let mut map = std::collections::BTreeMap::new();
        for (v, k) in other.vertices() {
            map.insert(v, self.add_vertex(k));
        }
        let shift = |end: End| match end {
            End::Vertex(v) => End::Vertex(map[&v]),
            End::Input(i) => End::Input(i + n_in),
            End::Output(j) => End::Output(j + n_out),
        };
        for (_, (a, b)) in other.edges() {
            let (a, b) = (shift(a), shift(b));
            self.add_edge(a, b);
        }
        map
    }
}
