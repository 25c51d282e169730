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

//! Apply rewrite rules step by step and replay the recorded derivation.

use scaled_zx::rewrite::{replay_derivation, Derivation, Rewriter, Site};
use scaled_zx::{interpret, Diagram, End, Phase, VertexKind};

fn main() {
    // Two Z(π/2) spiders in a row on one wire.
    let mut d = Diagram::new(1, 1);
    let a = d.add_vertex(VertexKind::ZSpider(Phase::HALF_PI));
    let b = d.add_vertex(VertexKind::ZSpider(Phase::HALF_PI));
    d.add_edge(End::Input(0), End::Vertex(a));
    let e = d.add_edge(End::Vertex(a), End::Vertex(b));
    d.add_edge(End::Vertex(b), End::Output(0));

    let mut rw = Rewriter::new(d.clone());
    rw.forward("spider", Site::vertices(&[a, b]).with_edges(&[e])).unwrap();
    // Colour change turns the Z(π) into an X(π) between two Hadamards.
    rw.forward("colour", Site::vertices(&[a])).unwrap();
    let der = rw.finish();

    print!("derivation:\n{}", der.steps_text());
    let text = der.steps_text();
    let parsed = Derivation { steps: Derivation::parse_steps(&text).unwrap(), ..der.clone() };
    let end = replay_derivation(&parsed).unwrap();
    assert_eq!(end, der.end);
    assert_eq!(interpret(&d).unwrap(), interpret(&end).unwrap());
    println!("replayed {} steps; the interpretation is unchanged", parsed.steps.len());
}
