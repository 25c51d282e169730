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

//! Normal forms of non-zero stabilizer scalars.

use std::fmt;

use crate::diagram::{Colour, Diagram, VertexKind};
use crate::phase::Phase;
use crate::semantics::ExactScalar;

/// A disconnected scalar component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ScalarPiece {
    Star,
    /// `⟨Z(α)|X(β)⟩`.
    Pair(Phase, Phase),
    /// A spider with no legs.
    Node(Colour, Phase),
}

impl ScalarPiece {
    pub fn value(self) -> ExactScalar {
        crate::semantics::scalar_value(&self.diagram()).expect("pieces are scalars")
    }

    pub fn diagram(self) -> Diagram {
        let mut d = Diagram::empty();
        add_pieces(&mut d, &[self]);
        d
    }
}

impl fmt::Display for ScalarPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarPiece::Star => f.write_str("★"),
            ScalarPiece::Pair(a, b) => write!(f, "⟨Z({a})|X({b})⟩"),
            ScalarPiece::Node(c, p) => write!(f, "{}", VertexKind::spider(*c, *p)),
        }
    }
}

/// Adds the given scalar pieces as disconnected components.
pub fn add_pieces(d: &mut Diagram, pieces: &[ScalarPiece]) {
    for piece in pieces {
        match *piece {
            ScalarPiece::Star => {
                d.add_star();
            }
            ScalarPiece::Pair(a, b) => {
                d.add_pair(a, b);
            }
            ScalarPiece::Node(c, p) => {
                d.add_vertex(VertexKind::spider(c, p));
            }
        }
    }
}

/// The normal form of `√2^r · ω^s` with `s` taken mod 8.
///
/// It is a phase representative for `s`, which contributes a modulus of
/// its own, followed by pieces fixing the remaining power of `√2`:
/// `⟨Z(0)|X(0)⟩` for each positive unit, `★` for each negative pair of
/// units, and one extra `⟨Z(0)|X(0)⟩` with a `★` when the remaining power is
/// negative and odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ScalarNF {
    pub r: i64,
    pub s: u8,
}

const HALF: Phase = Phase::HALF_PI;
const MINUS_HALF: Phase = Phase::MINUS_HALF_PI;
const PI: Phase = Phase::PI;

impl ScalarNF {
    pub fn new(r: i64, s: i64) -> ScalarNF {
        ScalarNF { r, s: s.rem_euclid(8) as u8 }
    }

    pub fn from_scalar(value: ExactScalar) -> Option<ScalarNF> {
        match value {
            ExactScalar::Zero => None,
            ExactScalar::Value { r, s } => Some(ScalarNF::new(r, s as i64)),
        }
    }

    pub fn value(self) -> ExactScalar {
        ExactScalar::new(self.r, self.s as i64)
    }

    /// The phase representative of `ω^s` and the power of `√2` it carries.
    pub fn phase_representative(s: u8) -> (Vec<ScalarPiece>, i64) {
        use ScalarPiece::Pair;
        match s % 8 {
            0 => (vec![], 0),
            1 => (vec![Pair(HALF, HALF)], 2),
            2 => (vec![Pair(HALF, PI)], 1),
            3 => (vec![Pair(HALF, PI), Pair(HALF, HALF)], 3),
            4 => (vec![Pair(PI, PI)], 1),
            5 => (vec![Pair(MINUS_HALF, PI), Pair(MINUS_HALF, MINUS_HALF)], 3),
            6 => (vec![Pair(MINUS_HALF, PI)], 1),
            _ => (vec![Pair(MINUS_HALF, MINUS_HALF)], 2),
        }
    }

    /// Pieces for the positive real `√2^r`.
    pub fn modulus(r: i64) -> Vec<ScalarPiece> {
        let unit = ScalarPiece::Pair(Phase::ZERO, Phase::ZERO);
        if r >= 0 {
            vec![unit; r as usize]
        } else if r % 2 == 0 {
            vec![ScalarPiece::Star; (-r / 2) as usize]
        } else {
            let mut out = vec![unit];
            out.extend(vec![ScalarPiece::Star; ((1 - r) / 2) as usize]);
            out
        }
    }

    pub fn pieces(self) -> Vec<ScalarPiece> {
        let (mut out, carried) = ScalarNF::phase_representative(self.s);
        out.extend(ScalarNF::modulus(self.r - carried));
        out
    }

    pub fn diagram(self) -> Diagram {
        let mut d = Diagram::empty();
        add_pieces(&mut d, &self.pieces());
        d
    }
}

impl fmt::Display for ScalarNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces = self.pieces();
        if pieces.is_empty() {
            return f.write_str("1");
        }
        let text: Vec<String> = pieces.iter().map(|p| p.to_string()).collect();
        f.write_str(&text.join(" ⊗ "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::scalar_value;

    #[test]
    fn normal_forms_have_their_value() {
        for r in -7..=7 {
            for s in 0..8 {
                let nf = ScalarNF::new(r, s);
                assert_eq!(scalar_value(&nf.diagram()).unwrap(), ExactScalar::new(r, s), "r={r} s={s}");
            }
        }
    }
}
