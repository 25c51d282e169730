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

//! Composition, tensor product and the dualities.

use std::collections::BTreeMap;

use super::{Diagram, End, VertexKind};
use crate::error::DiagramError;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Real(End),
    Junction(usize),
}

impl Diagram {
    /// Sequential composition: the outputs of `self` are plugged into the
    /// inputs of `next`. Denotes `⟦next⟧ · ⟦self⟧`.
    pub fn compose(&self, next: &Diagram) -> Result<Diagram, DiagramError> {
        if self.n_outputs != next.n_inputs {
            return Err(DiagramError::BoundaryMismatch {
                outputs: self.n_outputs,
                inputs: next.n_inputs,
            });
        }
        let mut out = Diagram::new(self.n_inputs, next.n_outputs);
        out.loops = self.loops + next.loops;
        let mut first_map = BTreeMap::new();
        for (v, k) in self.vertices() {
            first_map.insert(v, out.add_vertex(k));
        }
        let mut second_map = BTreeMap::new();
        for (v, k) in next.vertices() {
            second_map.insert(v, out.add_vertex(k));
        }
        let mut pending: Vec<Option<(Slot, Slot)>> = Vec::new();
        for (_, (a, b)) in self.edges() {
            let f = |end: End| match end {
                End::Vertex(v) => Slot::Real(End::Vertex(first_map[&v])),
                End::Input(i) => Slot::Real(End::Input(i)),
                End::Output(j) => Slot::Junction(j),
            };
            pending.push(Some((f(a), f(b))));
        }
        for (_, (a, b)) in next.edges() {
            let f = |end: End| match end {
                End::Vertex(v) => Slot::Real(End::Vertex(second_map[&v])),
                End::Input(j) => Slot::Junction(j),
                End::Output(k) => Slot::Real(End::Output(k)),
            };
            pending.push(Some((f(a), f(b))));
        }
        for j in 0..self.n_outputs {
            let junction = Slot::Junction(j);
            let hits: Vec<usize> = pending
                .iter()
                .enumerate()
                .filter(|(_, e)| matches!(e, Some((a, b)) if *a == junction || *b == junction))
                .map(|(i, _)| i)
                .collect();
            match hits.as_slice() {
                [single] => {
                    let (a, b) = pending[*single].expect("present");
                    if a == junction && b == junction {
                        out.loops += 1;
                    }
                    pending[*single] = None;
                }
                [first, second] => {
                    let (a1, b1) = pending[*first].expect("present");
                    let (a2, b2) = pending[*second].expect("present");
                    let x = if a1 == junction { b1 } else { a1 };
                    let y = if a2 == junction { b2 } else { a2 };
                    pending[*first] = Some((x, y));
                    pending[*second] = None;
                }
                _ => {}
            }
        }
        for (a, b) in pending.into_iter().flatten() {
            match (a, b) {
                (Slot::Real(a), Slot::Real(b)) => {
                    out.add_edge(a, b);
                }
                _ => unreachable!("every junction is contracted"),
            }
        }
        Ok(out)
    }

    /// Parallel composition; the boundary of `self` comes first.
    pub fn tensor(&self, right: &Diagram) -> Diagram {
        let mut out = self.clone();
        out.absorb(right);
        out
    }

    /// Tensor product of a list of diagrams, left to right.
    pub fn tensor_all<'a>(parts: impl IntoIterator<Item = &'a Diagram>) -> Diagram {
        parts.into_iter().fold(Diagram::empty(), |acc, d| acc.tensor(d))
    }

    /// The Hermitian adjoint: inputs and outputs swap and phases negate.
    pub fn adjoint(&self) -> Diagram {
        let mut out = self.flipped();
        for (v, k) in self.vertices() {
            if let Some(p) = k.phase() {
                out.set_kind(v, k.with_phase(-p));
            }
        }
        out
    }

    /// Upside-down reflection: inputs and outputs swap, phases are kept.
    pub fn flipped(&self) -> Diagram {
        let swap = |end: End| match end {
            End::Input(i) => End::Output(i),
            End::Output(i) => End::Input(i),
            v => v,
        };
        let mut out = self.map_ends(swap);
        std::mem::swap(&mut out.n_inputs, &mut out.n_outputs);
        out
    }

    /// Exchanges Z and X spiders, keeping phases.
    pub fn colour_swap(&self) -> Diagram {
        let mut out = self.clone();
        for (v, k) in self.vertices() {
            out.set_kind(v, k.colour_swapped());
        }
        out
    }

    /// Rebuilds the diagram with vertex and edge ids renumbered from zero.
    pub fn relabelled(&self) -> Diagram {
        let mut out = Diagram::new(self.n_inputs, self.n_outputs);
        out.loops = self.loops;
        let mut map = BTreeMap::new();
        for (v, k) in self.vertices() {
            map.insert(v, out.add_vertex(k));
        }
        for (_, (a, b)) in self.edges() {
            let f = |end: End| match end {
                End::Vertex(v) => End::Vertex(map[&v]),
                other => other,
            };
            out.add_edge(f(a), f(b));
        }
        out
    }

    fn map_ends(&self, f: impl Fn(End) -> End) -> Diagram {
        let mut out = self.clone();
        out.edges = self.edges.iter().map(|(e, (a, b))| (*e, (f(*a), f(*b)))).collect();
        out.incidence = self.incidence.iter().map(|(end, list)| (f(*end), list.clone())).collect();
        out
    }

    /// Counts vertices of each kind, for quick summaries.
    pub fn kind_counts(&self) -> BTreeMap<VertexKind, usize> {
        let mut counts = BTreeMap::new();
        for (_, k) in self.vertices() {
            *counts.entry(k).or_insert(0) += 1;
        }
        counts
    }
}
