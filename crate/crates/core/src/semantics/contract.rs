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

//! Exact tensor-network contraction.

use std::collections::{BTreeMap, BTreeSet};

use super::ring::RingElement;
use crate::diagram::{Diagram, End, VertexKind};

/// A dense tensor over binary variables; `vars[0]` is the most significant
/// bit of the data index.
#[derive(Clone, Debug)]
struct Tensor {
    vars: Vec<u32>,
    data: Vec<RingElement>,
}

impl Tensor {
    fn scalar(x: RingElement) -> Tensor {
        Tensor { vars: Vec::new(), data: vec![x] }
    }

    fn value_at(&self, assignment: &BTreeMap<u32, usize>) -> &RingElement {
        let mut idx = 0;
        for v in &self.vars {
            idx = (idx << 1) | assignment[v];
        }
        &self.data[idx]
    }
}

/// Value of a node for the given bits on its legs.
pub(crate) fn node_value(kind: VertexKind, bits: &[usize]) -> RingElement {
    match kind {
        VertexKind::ZSpider(p) => {
            let mut x = RingElement::zero();
            if bits.iter().all(|&b| b == 0) {
                x = &x + &RingElement::one();
            }
            if bits.iter().all(|&b| b == 1) {
                x = &x + &RingElement::omega_pow(p.omega_power() as i64);
            }
            x
        }
        VertexKind::XSpider(p) => {
            let parity = bits.iter().sum::<usize>() % 2;
            let sign = if parity == 0 { 0 } else { 4 };
            let n = bits.len() as i64;
            let top = &RingElement::one() + &RingElement::omega_pow(p.omega_power() as i64 + sign);
            // 1/√2^n = 2^{-n/2} times one more 1/√2 when n is odd.
            let mut x = top.mul_pow2(-(n / 2));
            if n % 2 == 1 {
                x = &x * &RingElement::inv_sqrt2();
            }
            x
        }
        VertexKind::Hadamard => {
            let h = RingElement::inv_sqrt2();
            if bits.len() == 2 && bits[0] == 1 && bits[1] == 1 {
                -&h
            } else {
                h
            }
        }
        VertexKind::Star => RingElement::one().mul_pow2(-1),
    }
}

fn vertex_tensor(kind: VertexKind, legs: &[u32]) -> Tensor {
    let mut vars: Vec<u32> = legs.to_vec();
    vars.sort();
    vars.dedup();
    let size = 1usize << vars.len();
    let mut data = Vec::with_capacity(size);
    let mut bits = vec![0usize; legs.len()];
    for idx in 0..size {
        for (k, leg) in legs.iter().enumerate() {
            let pos = vars.iter().position(|v| v == leg).expect("leg var present");
            bits[k] = (idx >> (vars.len() - 1 - pos)) & 1;
        }
        data.push(node_value(kind, &bits));
    }
    Tensor { vars, data }
}

fn contract_pair(a: &Tensor, b: &Tensor, keep: &BTreeSet<u32>) -> Tensor {
    let mut all: Vec<u32> = a.vars.iter().chain(b.vars.iter()).copied().collect();
    all.sort();
    all.dedup();
    let out_vars: Vec<u32> = all.iter().copied().filter(|v| keep.contains(v)).collect();
    let mut data = vec![RingElement::zero(); 1 << out_vars.len()];
    let pos_of = |v: u32| all.iter().position(|&x| x == v).expect("var present");
    let a_pos: Vec<usize> = a.vars.iter().map(|&v| pos_of(v)).collect();
    let b_pos: Vec<usize> = b.vars.iter().map(|&v| pos_of(v)).collect();
    let o_pos: Vec<usize> = out_vars.iter().map(|&v| pos_of(v)).collect();
    let n = all.len();
    let pick = |idx: usize, positions: &[usize]| {
        positions.iter().fold(0usize, |acc, &p| (acc << 1) | ((idx >> (n - 1 - p)) & 1))
    };
    for idx in 0..(1usize << n) {
        let x = &a.data[pick(idx, &a_pos)];
        if x.is_zero() {
            continue;
        }
        let y = &b.data[pick(idx, &b_pos)];
        if y.is_zero() {
            continue;
        }
        let o = pick(idx, &o_pos);
        data[o] = &data[o] + &(x * y);
    }
    Tensor { vars: out_vars, data }
}

/// Contracts the network; returns entries indexed by `(outputs, inputs)`.
pub(crate) fn contract(d: &Diagram) -> Vec<RingElement> {
    let mut tensors: Vec<Tensor> = Vec::new();
    for (v, kind) in d.vertices() {
        let legs: Vec<u32> = d.incident(End::Vertex(v)).iter().map(|e| e.0).collect();
        tensors.push(vertex_tensor(kind, &legs));
    }
    let factor = RingElement::one().mul_pow2(d.free_loops() as i64);
    let open: Vec<u32> = d
        .boundary()
        .into_iter()
        .map(|end| d.incident(end)[0].0)
        .collect();
    let open_set: BTreeSet<u32> = open.iter().copied().collect();

    // Each step contracts the pair whose result is smallest.
    while tensors.len() > 1 {
        let mut best: Option<(usize, usize, usize, bool)> = None;
        for i in 0..tensors.len() {
            for j in (i + 1)..tensors.len() {
                let shares = tensors[i].vars.iter().any(|v| tensors[j].vars.contains(v));
                let keep = result_vars(&tensors, i, j, &open_set);
                let cost = keep.len();
                let better = match best {
                    None => true,
                    Some((_, _, c, s)) => (shares && !s) || (shares == s && cost < c),
                };
                if better {
                    best = Some((i, j, cost, shares));
                }
            }
        }
        let (i, j, _, _) = best.expect("at least two tensors");
        let keep = result_vars(&tensors, i, j, &open_set);
        let b = tensors.remove(j);
        let a = tensors.remove(i);
        tensors.push(contract_pair(&a, &b, &keep));
    }
    let mut result = tensors.pop().unwrap_or_else(|| Tensor::scalar(RingElement::one()));
    if result.vars.iter().any(|v| !open_set.contains(v)) {
        let keep: BTreeSet<u32> = result.vars.iter().copied().filter(|v| open_set.contains(v)).collect();
        result = contract_pair(&result, &Tensor::scalar(RingElement::one()), &keep);
    }
    if d.free_loops() > 0 {
        result.data = result.data.iter().map(|x| x * &factor).collect();
    }

    // Outputs index rows, inputs index columns; first wire most significant.
    let (n_in, n_out) = (d.n_inputs(), d.n_outputs());
    let order: Vec<u32> = open[n_in..].iter().chain(open[..n_in].iter()).copied().collect();
    let total = n_in + n_out;
    let mut entries = Vec::with_capacity(1 << total);
    for idx in 0..(1usize << total) {
        let mut assignment: BTreeMap<u32, usize> = BTreeMap::new();
        let mut consistent = true;
        for (k, var) in order.iter().enumerate() {
            let bit = (idx >> (total - 1 - k)) & 1;
            match assignment.get(var) {
                Some(&b) if b != bit => consistent = false,
                _ => {
                    assignment.insert(*var, bit);
                }
            }
        }
        entries.push(if consistent { result.value_at(&assignment).clone() } else { RingElement::zero() });
    }
    entries
}

fn result_vars(tensors: &[Tensor], i: usize, j: usize, open: &BTreeSet<u32>) -> BTreeSet<u32> {
    let mut keep = BTreeSet::new();
    for v in tensors[i].vars.iter().chain(tensors[j].vars.iter()) {
        let elsewhere = tensors
            .iter()
            .enumerate()
            .any(|(k, t)| k != i && k != j && t.vars.contains(v));
        if open.contains(v) || elsewhere {
            keep.insert(*v);
        }
    }
    keep
}
