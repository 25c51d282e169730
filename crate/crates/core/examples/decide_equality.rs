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

//! GS-LC normal forms and the equality decision.

use scaled_zx::normal::{decide_equal, gslc_normalize};
use scaled_zx::{Diagram, End, Phase, VertexKind};

fn main() {
    // H·Z(π/2)·H and X(π/2) are equal as matrices, scalar included.
    let mut hzh = Diagram::new(1, 1);
    let h1 = hzh.add_vertex(VertexKind::Hadamard);
    let z = hzh.add_vertex(VertexKind::ZSpider(Phase::HALF_PI));
    let h2 = hzh.add_vertex(VertexKind::Hadamard);
    hzh.add_edge(End::Input(0), End::Vertex(h1));
    hzh.add_edge(End::Vertex(h1), End::Vertex(z));
    hzh.add_edge(End::Vertex(z), End::Vertex(h2));
    hzh.add_edge(End::Vertex(h2), End::Output(0));
    let x = Diagram::x_spider(Phase::HALF_PI, 1, 1);

    let (form, der) = gslc_normalize(&hzh).unwrap();
    println!("normal form of H·Z(π/2)·H ({} steps):\n{form}\n", der.steps.len());

    let decision = decide_equal(&hzh, &x).unwrap();
    println!("H·Z(π/2)·H = X(π/2): {}", decision.equal);
    let decision = decide_equal(&hzh, &Diagram::x_spider(Phase::MINUS_HALF_PI, 1, 1)).unwrap();
    println!("H·Z(π/2)·H = X(−π/2): {}", decision.equal);
}
