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

//! Dense exact matrices.

use std::fmt;

use super::ring::RingElement;

/// A `rows × cols` matrix over ℤ[1/2][ω], stored row-major.
///
/// Rows are indexed by outputs and columns by inputs, the first boundary
/// wire being the most significant bit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RingElement>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<RingElement>) -> ExactMatrix {
        assert_eq!(entries.len(), rows * cols, "entry count must match the shape");
        ExactMatrix { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> ExactMatrix {
        ExactMatrix::new(rows, cols, vec![RingElement::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = RingElement::one();
        }
        m
    }

    pub fn scalar(x: RingElement) -> ExactMatrix {
        ExactMatrix::new(1, 1, vec![x])
    }

    /// The 2×2 matrix from four entries given row by row.
    pub fn two_by_two(e: [RingElement; 4]) -> ExactMatrix {
        ExactMatrix::new(2, 2, e.to_vec())
    }

    /// The normalized Hadamard gate.
    pub fn hadamard() -> ExactMatrix {
        let h = RingElement::inv_sqrt2();
        ExactMatrix::two_by_two([h.clone(), h.clone(), h.clone(), -&h])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &RingElement {
        &self.entries[row * self.cols + col]
    }

    pub fn entries(&self) -> &[RingElement] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RingElement::is_zero)
    }

    /// The product `self · rhs`.
    pub fn matmul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        out
    }

    /// Kronecker product with `self` as the more significant factor.
    pub fn kron(&self, rhs: &ExactMatrix) -> ExactMatrix {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let a = self.get(i / rhs.rows, j / rhs.cols);
                let b = rhs.get(i % rhs.rows, j % rhs.cols);
                entries.push(a * b);
            }
        }
        ExactMatrix::new(rows, cols, entries)
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        ExactMatrix::new(self.cols, self.rows, entries)
    }

    pub fn conj_transpose(&self) -> ExactMatrix {
        let t = self.transpose();
        ExactMatrix::new(t.rows, t.cols, t.entries.iter().map(RingElement::conj).collect())
    }

    pub fn scale(&self, x: &RingElement) -> ExactMatrix {
        ExactMatrix::new(self.rows, self.cols, self.entries.iter().map(|e| e * x).collect())
    }

    /// The `n`-fold Kronecker power.
    pub fn kron_power(&self, n: usize) -> ExactMatrix {
        (0..n).fold(ExactMatrix::identity(1), |acc, _| acc.kron(self))
    }

    /// Human-readable decimal rendering, never used for comparisons.
    pub fn approx_string(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| {
                    let (re, im) = self.get(i, j).to_complex();
                    format!("{re:.15}{}{:.15}i", if im < 0.0 { "-" } else { "+" }, im.abs())
                })
                .collect();
            out.push_str(&format!("[{}]\n", row.join(", ")));
        }
        out
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hadamard_is_an_involution() {
        let h = ExactMatrix::hadamard();
        assert_eq!(h.matmul(&h), ExactMatrix::identity(2));
        assert_eq!(h.conj_transpose(), h);
    }

    #[test]
    fn kron_shapes() {
        let h = ExactMatrix::hadamard();
        let k = h.kron(&ExactMatrix::identity(2));
        assert_eq!((k.rows(), k.cols()), (4, 4));
        assert_eq!(k.get(2, 0), &RingElement::inv_sqrt2());
        assert_eq!(h.kron_power(0), ExactMatrix::identity(1));
    }
}
