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

//! Build diagrams in code and print their exact matrices.
//!
//! Run with `cargo run --example build_and_interpret`.

use scaled_zx::{interpret, Diagram, End, Phase, VertexKind};

fn main() {
    // A CNOT: a Z copy spider on the control, an X spider on the target,
    // and the pair ⟨Z(0)|X(0)⟩ = √2 that makes it exactly unitary.
    let mut cnot = Diagram::new(2, 2);
    let g = cnot.add_vertex(VertexKind::ZSpider(Phase::ZERO));
    let r = cnot.add_vertex(VertexKind::XSpider(Phase::ZERO));
    cnot.add_edge(End::Input(0), End::Vertex(g));
    cnot.add_edge(End::Vertex(g), End::Output(0));
    cnot.add_edge(End::Input(1), End::Vertex(r));
    cnot.add_edge(End::Vertex(r), End::Output(1));
    cnot.add_edge(End::Vertex(g), End::Vertex(r));
    cnot.add_pair(Phase::ZERO, Phase::ZERO);
    println!("CNOT:\n{}", interpret(&cnot).unwrap());

    // S gate followed by its adjoint is the identity.
    let s = Diagram::z_spider(Phase::HALF_PI, 1, 1);
    let id = s.compose(&s.adjoint()).unwrap();
    println!("S·S† = identity: {}", interpret(&id).unwrap() == interpret(&Diagram::identity(1)).unwrap());

    // Entries are exact elements of Z[1/2][ω]; decimals are for reading only.
    let h = Diagram::hadamard_wire();
    let m = interpret(&h).unwrap();
    print!("Hadamard, exact:\n{m}approximately:\n{}", m.approx_string());
}
