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

//! Single-qubit Clifford operators as Euler words.
//!
//! Every single-qubit Clifford unitary is `ω^k` times exactly one of 24
//! canonical words `Z(c)·X(b)·Z(a)`. The `a` part sits on a graph-state
//! node, then `X(b)` and `Z(c)` follow on the wire toward the boundary.

use std::fmt;
use std::sync::OnceLock;

use crate::diagram::{Colour, Diagram, VertexKind};
use crate::phase::Phase;
use crate::semantics::{interpret, ExactMatrix, RingElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliffordWord {
    pub a: Phase,
    pub b: Phase,
    pub c: Phase,
}

impl CliffordWord {
    pub const IDENTITY: CliffordWord = CliffordWord { a: Phase::ZERO, b: Phase::ZERO, c: Phase::ZERO };

    pub fn matrix(self) -> ExactMatrix {
        let z = |p| gate_matrix(VertexKind::ZSpider(p));
        let x = gate_matrix(VertexKind::XSpider(self.b));
        z(self.c).matmul(&x).matmul(&z(self.a))
    }

    /// Position of the word in the class table.
    pub fn index(self) -> usize {
        table().iter().position(|(w, _)| *w == self).expect("canonical word")
    }

    /// The word with `Z(α)` applied after it, with the global phase power.
    pub fn then_z(self, alpha: Phase) -> (CliffordWord, u8) {
        canonical(&gate_matrix(VertexKind::ZSpider(alpha)).matmul(&self.matrix())).expect("Clifford")
    }
}

impl fmt::Display for CliffordWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z({})·X({})·Z({})", self.c, self.b, self.a)
    }
}

/// The matrix of a spider or Hadamard node with one input and one output.
pub fn gate_matrix(kind: VertexKind) -> ExactMatrix {
    let d = match kind {
        VertexKind::Hadamard => Diagram::hadamard_wire(),
        k => Diagram::spider(k.colour().expect("a gate"), k.phase().unwrap(), 1, 1),
    };
    interpret(&d).expect("valid gate")
}

fn table() -> &'static [(CliffordWord, ExactMatrix)] {
    static TABLE: OnceLock<Vec<(CliffordWord, ExactMatrix)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut out: Vec<(CliffordWord, ExactMatrix)> = Vec::new();
        for b in Phase::ALL {
            for c in Phase::ALL {
                for a in Phase::ALL {
                    let w = CliffordWord { a, b, c };
                    let m = w.matrix();
                    if !out.iter().any(|(_, n)| phase_power(&m, n).is_some()) {
                        out.push((w, m));
                    }
                }
            }
        }
        assert_eq!(out.len(), 24);
        out
    })
}

/// All 24 canonical words in table order.
pub fn clifford_words() -> Vec<CliffordWord> {
    table().iter().map(|(w, _)| *w).collect()
}

/// `k` with `m = ω^k · n`.
fn phase_power(m: &ExactMatrix, n: &ExactMatrix) -> Option<u8> {
    (0..8u8).find(|&k| *m == n.scale(&RingElement::omega_pow(k as i64)))
}

/// The canonical word `w` and power `k` with `m = ω^k · w`, if `m` is a
/// Clifford unitary.
pub fn canonical(m: &ExactMatrix) -> Option<(CliffordWord, u8)> {
    if m.rows() != 2 || m.cols() != 2 {
        return None;
    }
    table().iter().find_map(|(w, n)| phase_power(m, n).map(|k| (*w, k)))
}

/// The gates of a word on the wire from the node outward, skipping
/// trivial ones.
pub fn wire_gates(w: CliffordWord) -> Vec<VertexKind> {
    let mut out = Vec::new();
    if !w.b.is_zero() {
        out.push(VertexKind::spider(Colour::X, w.b));
    }
    if !w.c.is_zero() {
        out.push(VertexKind::spider(Colour::Z, w.c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_four_classes() {
        let words = clifford_words();
        assert_eq!(words.len(), 24);
        assert_eq!(words[0], CliffordWord::IDENTITY);
        let h = canonical(&ExactMatrix::hadamard()).unwrap();
        assert_eq!(h.0.b, Phase::HALF_PI);
    }

    #[test]
    fn non_clifford_matrices_are_rejected() {
        assert!(canonical(&ExactMatrix::identity(4)).is_none());
        assert!(canonical(&ExactMatrix::zeros(2, 2)).is_none());
    }
}
