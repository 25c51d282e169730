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

//! Structural validation.

use super::{Diagram, End, VertexKind};

/// Lists every broken invariant; an empty list means the diagram is valid.
///
/// Hadamard nodes may be adjacent to other Hadamard nodes, since colour
/// change produces such chains, but a Hadamard self-loop is rejected.
pub fn validate(d: &Diagram) -> Vec<String> {
    let mut out = Vec::new();
    for end in d.boundary() {
        let n = d.incident(end).len();
        if n != 1 {
            out.push(format!("boundary point {end} has {n} attachments, expected 1"));
        }
    }
    for (e, (a, b)) in d.edges() {
        for end in [a, b] {
            let ok = match end {
                End::Vertex(v) => d.contains_vertex(v),
                End::Input(i) => i < d.n_inputs(),
                End::Output(j) => j < d.n_outputs(),
            };
            if !ok {
                out.push(format!("edge {e} refers to missing end {end}"));
            }
        }
    }
    for (v, kind) in d.vertices() {
        let deg = d.degree(v);
        match kind {
            VertexKind::Hadamard => {
                if deg != 2 {
                    out.push(format!("Hadamard v{v} has degree {deg}, expected 2"));
                }
                if d.neighbours(v).contains(&End::Vertex(v)) {
                    out.push(format!("Hadamard v{v} has a self-loop"));
                }
            }
            VertexKind::Star if deg != 0 => {
                out.push(format!("star v{v} has degree {deg}, expected 0"));
            }
            _ => {}
        }
    }
    out
}

impl Diagram {
    pub fn is_valid(&self) -> bool {
        validate(self).is_empty()
    }

    /// `Ok(())` when valid, else the violations as an error.
    pub fn check(&self) -> Result<(), crate::error::DiagramError> {
        let v = validate(self);
        if v.is_empty() {
            Ok(())
        } else {
            Err(crate::error::DiagramError::Invalid(v))
        }
    }
}
