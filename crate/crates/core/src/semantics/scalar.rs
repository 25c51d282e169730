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

//! Canonical stabilizer scalars `√2^r · e^{isπ/4}`.

use std::fmt;
use std::ops::Mul;

use super::ring::RingElement;
use crate::error::SemanticsError;

/// Zero, or `√2^r · ω^s` with `s` taken mod 8.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExactScalar {
    Zero,
    Value { r: i64, s: u8 },
}

impl ExactScalar {
    pub const ONE: ExactScalar = ExactScalar::Value { r: 0, s: 0 };

    pub fn new(r: i64, s: i64) -> ExactScalar {
        ExactScalar::Value { r, s: s.rem_euclid(8) as u8 }
    }

    pub fn is_zero(self) -> bool {
        self == ExactScalar::Zero
    }

    pub fn conj(self) -> ExactScalar {
        match self {
            ExactScalar::Zero => ExactScalar::Zero,
            ExactScalar::Value { r, s } => ExactScalar::new(r, -(s as i64)),
        }
    }

    pub fn inverse(self) -> Option<ExactScalar> {
        match self {
            ExactScalar::Zero => None,
            ExactScalar::Value { r, s } => Some(ExactScalar::new(-r, -(s as i64))),
        }
    }

    /// The embedding into ℤ[1/2][ω].
    pub fn to_ring(self) -> RingElement {
        match self {
            ExactScalar::Zero => RingElement::zero(),
            ExactScalar::Value { r, s } => {
                let base = if r.rem_euclid(2) == 1 { RingElement::sqrt2() } else { RingElement::one() };
                base.mul_pow2(r.div_euclid(2)).mul_omega_pow(s as i64)
            }
        }
    }

    /// Recognizes ring elements of the form `√2^r · ω^s`.
    pub fn from_ring(x: &RingElement) -> Result<ExactScalar, SemanticsError> {
        if x.is_zero() {
            return Ok(ExactScalar::Zero);
        }
        for s in 0..8 {
            let y = x.mul_omega_pow(-s);
            let [a, b, c, d] = y.coeffs();
            if b.is_zero() && c.is_zero() && d.is_zero() {
                if let Some(k) = a.as_power_of_two() {
                    return Ok(ExactScalar::new(2 * k, s));
                }
            }
            if a.is_zero() && c.is_zero() && &(-d) == b {
                if let Some(k) = b.as_power_of_two() {
                    return Ok(ExactScalar::new(2 * k + 1, s));
                }
            }
        }
        Err(SemanticsError::NotStabilizerScalar(x.to_string()))
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: ExactScalar) -> ExactScalar {
        match (self, rhs) {
            (ExactScalar::Value { r: r1, s: s1 }, ExactScalar::Value { r: r2, s: s2 }) => {
                ExactScalar::new(r1 + r2, s1 as i64 + s2 as i64)
            }
            _ => ExactScalar::Zero,
        }
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactScalar::Zero => f.write_str("0"),
            ExactScalar::Value { r, s } => write!(f, "√2^{r}·e^(i{s}π/4)"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedding_round_trips() {
        for r in -7..8 {
            for s in 0..8 {
                let x = ExactScalar::new(r, s);
                let ring = x.to_ring();
                assert!(!ring.is_zero());
                assert_eq!(ExactScalar::from_ring(&ring).unwrap(), x);
            }
        }
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        for (r1, s1, r2, s2) in [(1, 3, -2, 7), (-3, 1, -1, 1), (0, 4, 5, 4)] {
            let a = ExactScalar::new(r1, s1);
            let b = ExactScalar::new(r2, s2);
            assert_eq!((a * b).to_ring(), &a.to_ring() * &b.to_ring());
        }
    }

    #[test]
    fn half_sqrt2() {
        let x = ExactScalar::new(-1, 0).to_ring();
        assert_eq!(x, RingElement::inv_sqrt2());
    }

    #[test]
    fn rejects_non_stabilizer_values() {
        assert!(ExactScalar::from_ring(&RingElement::from_ints(3, 0, 0, 0)).is_err());
        assert!(ExactScalar::from_ring(&RingElement::from_ints(1, 1, 0, 0)).is_err());
    }
}
