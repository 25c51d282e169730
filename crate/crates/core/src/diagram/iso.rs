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

//! Isomorphism of diagrams with the boundary held fixed.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{Diagram, End, VertexId, VertexKind};

type Signature = (VertexKind, usize, usize, Vec<End>);

struct Index {
    adjacency: BTreeMap<VertexId, BTreeMap<End, usize>>,
    signature: BTreeMap<VertexId, Signature>,
}

impl Index {
    fn new(d: &Diagram) -> Index {
        let mut adjacency: BTreeMap<VertexId, BTreeMap<End, usize>> = BTreeMap::new();
        for v in d.vertex_ids() {
            adjacency.insert(v, BTreeMap::new());
        }
        for (_, (a, b)) in d.edges() {
            if let End::Vertex(v) = a {
                *adjacency.get_mut(&v).unwrap().entry(b).or_insert(0) += 1;
            }
            if let (End::Vertex(v), true) = (b, a != b) {
                *adjacency.get_mut(&v).unwrap().entry(a).or_insert(0) += 1;
            }
        }
        let signature = d
            .vertices()
            .map(|(v, k)| {
                let adj = &adjacency[&v];
                let self_loops = adj.get(&End::Vertex(v)).copied().unwrap_or(0);
                let mut boundary: Vec<End> = Vec::new();
                for (end, n) in adj {
                    if end.is_boundary() {
                        boundary.extend(std::iter::repeat_n(*end, *n));
                    }
                }
                (v, (k, d.degree(v), self_loops, boundary))
            })
            .collect();
        Index { adjacency, signature }
    }

    fn mult(&self, v: VertexId, other: End) -> usize {
        self.adjacency[&v].get(&other).copied().unwrap_or(0)
    }
}

/// Equality up to renaming of vertices and edges, with inputs, outputs and
/// the number of free loops fixed.
pub fn is_isomorphic(a: &Diagram, b: &Diagram) -> bool {
    if a.n_inputs() != b.n_inputs()
        || a.n_outputs() != b.n_outputs()
        || a.free_loops() != b.free_loops()
        || a.num_vertices() != b.num_vertices()
        || a.num_edges() != b.num_edges()
        || a.kind_counts() != b.kind_counts()
    {
        return false;
    }
    let bare = |d: &Diagram| {
        let mut v: Vec<(End, End)> = d
            .edges()
            .filter(|(_, (x, y))| x.is_boundary() && y.is_boundary())
            .map(|(_, (x, y))| (x.min(y), x.max(y)))
            .collect();
        v.sort();
        v
    };
    if bare(a) != bare(b) {
        return false;
    }
    let ia = Index::new(a);
    let ib = Index::new(b);
    let mut sigs_a: Vec<&Signature> = ia.signature.values().collect();
    let mut sigs_b: Vec<&Signature> = ib.signature.values().collect();
    sigs_a.sort();
    sigs_b.sort();
    if sigs_a != sigs_b {
        return false;
    }
    let order = search_order(a, &ia);
    let mut state = Search {
        ia: &ia,
        ib: &ib,
        order,
        forward: BTreeMap::new(),
        backward: BTreeMap::new(),
    };
    state.extend(0)
}

fn search_order(d: &Diagram, index: &Index) -> Vec<VertexId> {
    let mut seen = BTreeSet::new();
    let mut order = Vec::new();
    let mut roots: Vec<VertexId> = Vec::new();
    for end in d.boundary() {
        for &e in d.incident(end) {
            if let Some(End::Vertex(v)) = d.other_end(e, end) {
                roots.push(v);
            }
        }
    }
    roots.extend(d.vertex_ids());
    for root in roots {
        if !seen.insert(root) {
            continue;
        }
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for end in index.adjacency[&v].keys() {
                if let End::Vertex(w) = end {
                    if seen.insert(*w) {
                        queue.push_back(*w);
                    }
                }
            }
        }
    }
    order
}

struct Search<'a> {
    ia: &'a Index,
    ib: &'a Index,
    order: Vec<VertexId>,
    forward: BTreeMap<VertexId, VertexId>,
    backward: BTreeMap<VertexId, VertexId>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        for w in self.candidates(v) {
            if self.consistent(v, w) {
                self.forward.insert(v, w);
                self.backward.insert(w, v);
                if self.extend(depth + 1) {
                    return true;
                }
                self.forward.remove(&v);
                self.backward.remove(&w);
            }
        }
        false
    }

    fn candidates(&self, v: VertexId) -> Vec<VertexId> {
        let sig = &self.ia.signature[&v];
        let anchor = self.ia.adjacency[&v].keys().find_map(|end| match end {
            End::Vertex(u) if *u != v => self.forward.get(u).copied(),
            _ => None,
        });
        let pool: Vec<VertexId> = match anchor {
            Some(mu) => self.ib.adjacency[&mu]
                .keys()
                .filter_map(|end| end.vertex())
                .collect(),
            None => self.ib.signature.keys().copied().collect(),
        };
        pool.into_iter()
            .filter(|w| !self.backward.contains_key(w) && &self.ib.signature[w] == sig)
            .collect()
    }

    fn consistent(&self, v: VertexId, w: VertexId) -> bool {
        for (end, n) in &self.ia.adjacency[&v] {
            if let End::Vertex(u) = end {
                if *u == v {
                    continue;
                }
                if let Some(mu) = self.forward.get(u) {
                    if self.ib.mult(w, End::Vertex(*mu)) != *n {
                        return false;
                    }
                }
            }
        }
        for (end, n) in &self.ib.adjacency[&w] {
            if let End::Vertex(x) = end {
                if *x == w {
                    continue;
                }
                if let Some(u) = self.backward.get(x) {
                    if self.ia.mult(v, End::Vertex(*u)) != *n {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phase::Phase;

    #[test]
    fn relabelled_diagrams_are_isomorphic() {
        let mut d = Diagram::new(1, 1);
        let z = d.add_vertex(VertexKind::ZSpider(Phase::HALF_PI));
        let x = d.add_vertex(VertexKind::XSpider(Phase::ZERO));
        d.add_edge(End::Input(0), End::Vertex(z));
        d.add_edge(End::Vertex(z), End::Vertex(x));
        d.add_edge(End::Vertex(z), End::Vertex(x));
        d.add_edge(End::Vertex(x), End::Output(0));
        let mut e = Diagram::new(1, 1);
        let x2 = e.add_vertex(VertexKind::XSpider(Phase::ZERO));
        let z2 = e.add_vertex(VertexKind::ZSpider(Phase::HALF_PI));
        e.add_edge(End::Vertex(x2), End::Output(0));
        e.add_edge(End::Vertex(x2), End::Vertex(z2));
        e.add_edge(End::Vertex(z2), End::Vertex(x2));
        e.add_edge(End::Input(0), End::Vertex(z2));
        assert!(is_isomorphic(&d, &e));
        assert!(!is_isomorphic(&d, &d.flipped()));
    }

    #[test]
    fn multiplicity_matters() {
        let a = Diagram::pair(Phase::ZERO, Phase::ZERO);
        let mut b = a.clone();
        let (z, x) = (b.vertex_ids()[0], b.vertex_ids()[1]);
        b.add_edge(End::Vertex(z), End::Vertex(x));
        assert!(!is_isomorphic(&a, &b));
    }
}
