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

//! The BB84 measurement statistics on a Bell pair, computed graphically.
//!
//! The Bell state `(|00⟩ + |11⟩)/√2` is a cup with the factor
//! `★ ⊗ ⟨Z(0)|X(0)⟩`. Each normalised measurement effect carries the same
//! factor. Amplitudes and probabilities are scalar diagrams, brought to
//! normal form with a replayable derivation.

use std::fmt;

use crate::diagram::{Diagram, End, VertexKind};
use crate::error::NormalError;
use crate::normal::{normalize_scalar_diagram, zero_normal_form, ScalarForm, ZeroNF};
use crate::phase::Phase;
use crate::rewrite::Derivation;
use crate::semantics::ExactScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `{|0⟩, |1⟩}`.
    Computational,
    /// `{|+⟩, |−⟩}`.
    Hadamard,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Computational => "Z",
            Basis::Hadamard => "X",
        })
    }
}

/// One measurement outcome: a basis and a bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Measurement {
    pub basis: Basis,
    pub outcome: u8,
}

impl Measurement {
    pub fn new(basis: Basis, outcome: u8) -> Measurement {
        Measurement { basis, outcome }
    }
}

impl fmt::Display for Measurement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match (self.basis, self.outcome) {
            (Basis::Computational, 0) => "0",
            (Basis::Computational, _) => "1",
            (Basis::Hadamard, 0) => "+",
            (Basis::Hadamard, _) => "-",
        };
        f.write_str(label)
    }
}

/// `★ ⊗ ⟨Z(0)|X(0)⟩ ⊗ cup`.
pub fn bell_state() -> Diagram {
    let mut d = Diagram::new(0, 2);
    d.add_edge(End::Output(0), End::Output(1));
    d.add_star();
    d.add_pair(Phase::ZERO, Phase::ZERO);
    d
}

/// The normalised effect `⟨m|` on one wire.
pub fn effect(m: Measurement) -> Diagram {
    let phase = if m.outcome == 0 { Phase::ZERO } else { Phase::PI };
    // ⟨0| and ⟨1| are red effects, ⟨+| and ⟨−| green ones.
    let kind = match m.basis {
        Basis::Computational => VertexKind::XSpider(phase),
        Basis::Hadamard => VertexKind::ZSpider(phase),
    };
    let mut d = Diagram::new(1, 0);
    let u = d.add_vertex(kind);
    d.add_edge(End::Input(0), End::Vertex(u));
    d.add_star();
    d.add_pair(Phase::ZERO, Phase::ZERO);
    d
}

/// `⟨a ⊗ b | Bell⟩` as a scalar diagram.
pub fn amplitude_diagram(alice: Measurement, bob: Measurement) -> Diagram {
    bell_state().compose(&effect(alice).tensor(&effect(bob))).expect("arities match")
}

/// The amplitude times its complex conjugate.
pub fn probability_diagram(alice: Measurement, bob: Measurement) -> Diagram {
    let a = amplitude_diagram(alice, bob);
    a.tensor(&a.adjoint())
}

/// The outcome of one scenario.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub alice: Measurement,
    pub bob: Measurement,
    pub amplitude: ScalarForm,
    pub amplitude_derivation: Derivation,
    /// Set when the amplitude is zero.
    pub zero: Option<ZeroNF>,
    pub probability: ScalarForm,
    pub probability_derivation: Derivation,
}

impl Scenario {
    pub fn probability_value(&self) -> ExactScalar {
        self.probability.value()
    }

    /// The probability as a fraction `1/2^k`, or `0`.
    pub fn probability_text(&self) -> String {
        match self.probability.value() {
            ExactScalar::Zero => "0".into(),
            ExactScalar::Value { r, s: 0 } if r <= 0 && r % 2 == 0 => format!("1/{}", 1u64 << (-r / 2)),
            other => other.to_string(),
        }
    }
}

/// Normalises the amplitude and the probability of one outcome pair.
pub fn run(alice: Measurement, bob: Measurement) -> Result<Scenario, NormalError> {
    let amp = amplitude_diagram(alice, bob);
    let (amplitude, mut amplitude_derivation) = normalize_scalar_diagram(&amp)?;
    let zero = if amplitude == ScalarForm::Zero {
        let (nf, der) = zero_normal_form(&amp)?;
        amplitude_derivation = der;
        Some(nf)
    } else {
        None
    };
    let (probability, probability_derivation) = normalize_scalar_diagram(&probability_diagram(alice, bob))?;
    Ok(Scenario { alice, bob, amplitude, amplitude_derivation, zero, probability, probability_derivation })
}

/// Both-computational outcomes followed by the four cross-basis ones.
pub fn scenarios() -> Vec<(Measurement, Measurement)> {
    let z = |o| Measurement::new(Basis::Computational, o);
    let x = |o| Measurement::new(Basis::Hadamard, o);
    let mut out = vec![(z(0), z(0)), (z(1), z(1)), (z(0), z(1)), (z(1), z(0))];
    for theta in 0..2 {
        for phi in 0..2 {
            out.push((z(theta), x(phi)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::{interpret, ExactMatrix, RingElement};

    #[test]
    fn bell_state_is_normalised() {
        let m = interpret(&bell_state()).unwrap();
        let h = RingElement::inv_sqrt2();
        let z = RingElement::zero();
        assert_eq!(m, ExactMatrix::new(4, 1, vec![h.clone(), z.clone(), z, h]));
    }
}
