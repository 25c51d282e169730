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

//! Exact arithmetic in ℤ[1/2][ω] with ω = e^{iπ/4}.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A dyadic rational `numerator / 2^exponent` in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    numerator: BigInt,
    exponent: u32,
}

impl Dyadic {
    pub fn new(numerator: impl Into<BigInt>, exponent: u32) -> Dyadic {
        Dyadic { numerator: numerator.into(), exponent }.reduced()
    }

    pub fn zero() -> Dyadic {
        Dyadic { numerator: BigInt::zero(), exponent: 0 }
    }

    pub fn one() -> Dyadic {
        Dyadic { numerator: BigInt::one(), exponent: 0 }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Multiplies by `2^k` for any integer `k`.
    pub fn mul_pow2(&self, k: i64) -> Dyadic {
        if k >= 0 {
            let k = k as u32;
            if k >= self.exponent {
                Dyadic { numerator: &self.numerator << (k - self.exponent), exponent: 0 }.reduced()
            } else {
                Dyadic { numerator: self.numerator.clone(), exponent: self.exponent - k }
            }
        } else {
            Dyadic { numerator: self.numerator.clone(), exponent: self.exponent + (-k) as u32 }
                .reduced()
        }
    }

    /// `Some(k)` when the value is exactly `2^k`.
    pub fn as_power_of_two(&self) -> Option<i64> {
        if self.numerator.is_one() {
            Some(-(self.exponent as i64))
        } else if self.exponent == 0 && self.numerator.is_positive() {
            let tz = self.numerator.trailing_zeros()?;
            if self.numerator == BigInt::one() << tz {
                Some(tz as i64)
            } else {
                None
            }
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.numerator.to_f64().unwrap_or(f64::NAN) / 2f64.powi(self.exponent as i32)
    }

    fn reduced(mut self) -> Dyadic {
        if self.numerator.is_zero() {
            self.exponent = 0;
            return self;
        }
        let tz = self.numerator.trailing_zeros().unwrap_or(0).min(self.exponent as u64) as u32;
        if tz > 0 {
            self.numerator >>= tz;
            self.exponent -= tz;
        }
        self
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Dyadic {
        Dyadic::new(n, 0)
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let e = self.exponent.max(rhs.exponent);
        let a = &self.numerator << (e - self.exponent);
        let b = &rhs.numerator << (e - rhs.exponent);
        Dyadic { numerator: a + b, exponent: e }.reduced()
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() || rhs.is_zero() {
            return Dyadic::zero();
        }
        Dyadic {
            numerator: &self.numerator * &rhs.numerator,
            exponent: self.exponent + rhs.exponent,
        }
        .reduced()
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { numerator: -&self.numerator, exponent: self.exponent }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, BigInt::one() << self.exponent)
        }
    }
}

/// `a + bω + cω² + dω³` with dyadic coefficients, reduced by ω⁴ = −1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    coeffs: [Dyadic; 4],
}

impl RingElement {
    pub fn new(a: Dyadic, b: Dyadic, c: Dyadic, d: Dyadic) -> RingElement {
        RingElement { coeffs: [a, b, c, d] }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> RingElement {
        RingElement::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn zero() -> RingElement {
        RingElement::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> RingElement {
        RingElement::from_ints(1, 0, 0, 0)
    }

    /// ω^k for any integer k.
    pub fn omega_pow(k: i64) -> RingElement {
        let k = k.rem_euclid(8) as usize;
        let mut coeffs = [Dyadic::zero(), Dyadic::zero(), Dyadic::zero(), Dyadic::zero()];
        coeffs[k % 4] = if k < 4 { Dyadic::one() } else { -&Dyadic::one() };
        RingElement { coeffs }
    }

    /// √2 = ω − ω³.
    pub fn sqrt2() -> RingElement {
        RingElement::from_ints(0, 1, 0, -1)
    }

    /// 1/√2 = (ω − ω³)/2.
    pub fn inv_sqrt2() -> RingElement {
        RingElement::sqrt2().mul_pow2(-1)
    }

    pub fn coeffs(&self) -> &[Dyadic; 4] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Dyadic::is_zero)
    }

    pub fn mul_pow2(&self, k: i64) -> RingElement {
        RingElement { coeffs: self.coeffs.clone().map(|c| c.mul_pow2(k)) }
    }

    /// Multiplication by ω^k, a signed rotation of the coefficients.
    pub fn mul_omega_pow(&self, k: i64) -> RingElement {
        let k = k.rem_euclid(8) as usize;
        let mut out = [Dyadic::zero(), Dyadic::zero(), Dyadic::zero(), Dyadic::zero()];
        for (i, c) in self.coeffs.iter().enumerate() {
            let j = i + k;
            out[j % 4] = if (j / 4).is_multiple_of(2) { c.clone() } else { -c };
        }
        RingElement { coeffs: out }
    }

    /// Complex conjugation, ω ↦ ω⁷ = −ω³.
    pub fn conj(&self) -> RingElement {
        let [a, b, c, d] = &self.coeffs;
        RingElement { coeffs: [a.clone(), -d, -c, -b] }
    }

    /// Floating point approximation, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let [a, b, c, d] = self.coeffs.clone().map(|x| x.to_f64());
        (a + h * b - h * d, h * b + c + h * d)
    }
}

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        RingElement {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]),
        }
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        RingElement {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]),
        }
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement { coeffs: self.coeffs.clone().map(|c| -&c) }
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        let mut out = [Dyadic::zero(), Dyadic::zero(), Dyadic::zero(), Dyadic::zero()];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let p = x * y;
                let k = i + j;
                out[k % 4] = if k < 4 { &out[k % 4] + &p } else { &out[k % 4] - &p };
            }
        }
        RingElement { coeffs: out }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const UNITS: [&str; 4] = ["", "ω", "ω²", "ω³"];
        let mut first = true;
        for (c, unit) in self.coeffs.iter().zip(UNITS) {
            if c.is_zero() {
                continue;
            }
            let negative = c.numerator().is_negative();
            let magnitude = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            if unit.is_empty() || !magnitude.numerator().is_one() || magnitude.exponent() != 0 {
                write!(f, "{magnitude}")?;
            }
            f.write_str(unit)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_relations() {
        let w = RingElement::omega_pow(1);
        let w3 = RingElement::omega_pow(3);
        assert_eq!(&w * &w3, RingElement::from_ints(-1, 0, 0, 0));
        let s = RingElement::sqrt2();
        assert_eq!(&s * &s, RingElement::from_ints(2, 0, 0, 0));
        assert_eq!(&s * &RingElement::inv_sqrt2(), RingElement::one());
        for k in -9..9 {
            assert_eq!(RingElement::one().mul_omega_pow(k), RingElement::omega_pow(k));
            assert_eq!(&RingElement::omega_pow(k) * &w, RingElement::omega_pow(k + 1));
        }
    }

    #[test]
    fn dyadic_canonical_form() {
        let x = Dyadic::new(4, 3);
        assert_eq!(x, Dyadic::new(1, 1));
        assert_eq!(x.to_string(), "1/2");
        assert_eq!(Dyadic::new(0, 5).exponent(), 0);
        assert_eq!(&Dyadic::new(1, 1) + &Dyadic::new(1, 1), Dyadic::one());
        assert_eq!(Dyadic::new(8, 0).as_power_of_two(), Some(3));
        assert_eq!(Dyadic::new(1, 2).as_power_of_two(), Some(-2));
        assert_eq!(Dyadic::new(3, 2).as_power_of_two(), None);
    }

    #[test]
    fn conjugation_inverts_omega() {
        for k in 0..8 {
            let x = RingElement::omega_pow(k);
            assert_eq!(&x * &x.conj(), RingElement::one());
        }
    }

    #[test]
    fn display() {
        assert_eq!(RingElement::inv_sqrt2().to_string(), "1/2ω - 1/2ω³");
        assert_eq!(RingElement::zero().to_string(), "0");
        assert_eq!(RingElement::from_ints(-1, 0, 2, 0).to_string(), "-1 + 2ω²");
    }
}
