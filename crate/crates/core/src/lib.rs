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

//! An exactly scaled stabilizer ZX-calculus.
//!
//! Diagrams are built from Z and X spiders with phases in multiples of
//! π/2, Hadamard nodes and the star node of value 1/2. Every rewrite rule
//! keeps scalars exactly, and the normal forms decide equality of
//! diagrams, scalar factors included.

pub mod bb84;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod gen;
pub mod io;
pub mod normal;
pub mod phase;
pub mod render;
pub mod rewrite;
pub mod semantics;

pub use diagram::{Colour, Diagram, EdgeId, End, VertexId, VertexKind};
pub use phase::Phase;
pub use semantics::{interpret, scalar_value, ExactMatrix, ExactScalar, RingElement};
