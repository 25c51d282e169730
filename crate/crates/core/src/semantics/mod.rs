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

//! Exact semantics of diagrams.
//!
//! [`interpret`] contracts a diagram into an [`ExactMatrix`] over
//! ℤ[1/2][ω]. It is the oracle against which every rule and normal form
//! is checked.

mod contract;
mod matrix;
mod ring;
mod scalar;

pub use matrix::ExactMatrix;
pub use ring::{Dyadic, RingElement};
pub use scalar::ExactScalar;

use crate::diagram::{Diagram, VertexKind};
use crate::error::{DiagramError, SemanticsError};

/// The tensor of a single node with `degree` legs, as a column vector
/// indexed by the leg values (first leg most significant).
pub fn node_tensor(kind: VertexKind, degree: usize) -> Result<ExactMatrix, SemanticsError> {
    match kind {
        VertexKind::Hadamard if degree != 2 => {
            return Err(DiagramError::Invalid(vec![format!("Hadamard needs degree 2, got {degree}")]).into())
        }
        VertexKind::Star if degree != 0 => {
            return Err(DiagramError::Invalid(vec![format!("star needs degree 0, got {degree}")]).into())
        }
        _ => {}
    }
    let entries = (0..1usize << degree)
        .map(|idx| {
            let bits: Vec<usize> = (0..degree).map(|k| (idx >> (degree - 1 - k)) & 1).collect();
            contract::node_value(kind, &bits)
        })
        .collect();
    Ok(ExactMatrix::new(1 << degree, 1, entries))
}

/// `⟦d⟧`, a `2^outputs × 2^inputs` matrix.
pub fn interpret(d: &Diagram) -> Result<ExactMatrix, SemanticsError> {
    d.check()?;
    let entries = contract::contract(d);
    Ok(ExactMatrix::new(1 << d.n_outputs(), 1 << d.n_inputs(), entries))
}

/// The value of a scalar diagram as `√2^r·e^{isπ/4}` or zero.
pub fn scalar_value(d: &Diagram) -> Result<ExactScalar, SemanticsError> {
    if !d.is_scalar() {
        return Err(DiagramError::NotScalar { inputs: d.n_inputs(), outputs: d.n_outputs() }.into());
    }
    let m = interpret(d)?;
    ExactScalar::from_ring(m.get(0, 0))
}

/// True when the two diagrams have the same boundary and equal matrices.
pub fn semantically_equal(a: &Diagram, b: &Diagram) -> Result<bool, SemanticsError> {
    if a.n_inputs() != b.n_inputs() || a.n_outputs() != b.n_outputs() {
        return Ok(false);
    }
    Ok(interpret(a)? == interpret(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phase::Phase;

    fn value(d: &Diagram) -> ExactScalar {
        scalar_value(d).unwrap()
    }

    #[test]
    fn basic_scalars() {
        assert_eq!(value(&Diagram::empty()), ExactScalar::ONE);
        assert_eq!(value(&Diagram::free_loop()), ExactScalar::new(2, 0));
        assert_eq!(value(&Diagram::star()), ExactScalar::new(-2, 0));
        assert_eq!(value(&Diagram::pair(Phase::ZERO, Phase::ZERO)), ExactScalar::new(1, 0));
        let m = Phase::MINUS_HALF_PI;
        assert_eq!(value(&Diagram::pair(m, m)), ExactScalar::new(2, 7));
        assert_eq!(value(&Diagram::pair(Phase::HALF_PI, m)), ExactScalar::Zero);
        for a in Phase::ALL {
            let expected = ExactScalar::new(1, a.omega_power() as i64);
            assert_eq!(value(&Diagram::pair(a, Phase::PI)), expected);
        }
        let star_z = Diagram::star().tensor(&Diagram::z_scalar(Phase::ZERO));
        assert_eq!(value(&star_z), ExactScalar::ONE);
    }

    #[test]
    fn states() {
        let z = interpret(&Diagram::z_state(Phase::ZERO)).unwrap();
        assert_eq!(z.entries(), &[RingElement::one(), RingElement::one()]);
        let x = interpret(&Diagram::x_state(Phase::PI)).unwrap();
        assert_eq!(x.entries(), &[RingElement::zero(), RingElement::sqrt2()]);
    }

    #[test]
    fn bell_state() {
        let mut d = Diagram::star().tensor(&Diagram::pair(Phase::ZERO, Phase::ZERO));
        d = d.tensor(&Diagram::cup());
        let m = interpret(&d).unwrap();
        let h = RingElement::inv_sqrt2();
        assert_eq!(m.entries(), &[h.clone(), RingElement::zero(), RingElement::zero(), h]);
    }

    #[test]
    fn composition_is_matrix_product() {
        let a = Diagram::x_spider(Phase::HALF_PI, 1, 1);
        let both = a.compose(&a).unwrap();
        assert_eq!(interpret(&both).unwrap(), interpret(&Diagram::x_spider(Phase::PI, 1, 1)).unwrap());
        let s = Diagram::z_state(Phase::ZERO).compose(&Diagram::z_spider(Phase::ZERO, 1, 0)).unwrap();
        assert_eq!(s.num_vertices(), 2);
        assert_eq!(value(&s), ExactScalar::new(2, 0));
        let cap_cup = Diagram::cup().compose(&Diagram::cap()).unwrap();
        assert_eq!(cap_cup.free_loops(), 1);
    }

    #[test]
    fn hadamard_node() {
        assert_eq!(interpret(&Diagram::hadamard_wire()).unwrap(), ExactMatrix::hadamard());
        assert!(node_tensor(VertexKind::Hadamard, 3).is_err());
    }
}
