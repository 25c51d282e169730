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

//! Graph states with local Cliffords, and the equality decision.
//!
//! A non-zero diagram is rewritten into one Z node per boundary point,
//! joined by Hadamard edges, with a canonical Clifford word on each leg
//! and a scalar in normal form. The form is not unique: local
//! complementation at a node changes the graph and the words without
//! changing the diagram's value. The normalizer therefore searches the
//! whole orbit under local complementation and replays the path to its
//! least element.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use super::clifford::{canonical, clifford_words, gate_matrix, wire_gates, CliffordWord};
use super::pipeline::{clear_zero, read_pieces, reduce_pieces, ScalarForm, ZeroNF};
use super::scalar::add_pieces;
use super::simplify::{fail, piece_vertices, simplify, Goal};
use crate::diagram::{is_isomorphic, Colour, Diagram, EdgeId, End, VertexId, VertexKind};
use crate::error::NormalError;
use crate::phase::Phase;
use crate::rewrite::graph_lemmas::{boundary_chain, h_neighbours};
use crate::rewrite::{Derivation, Direction, RuleBook, Rewriter, Site};

/// Orbits larger than this are not searched.
const MAX_ORBIT: usize = 1 << 20;

/// A graph state on the boundary points with a local Clifford on each
/// leg and an exact scalar.
///
/// Qubit `i` is the `i`-th boundary point, inputs first. A zero scalar
/// stands for the zero normal form, with no graph and identity words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GslcForm {
    pub n_inputs: usize,
    pub n_outputs: usize,
    /// Pairs `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub words: Vec<CliffordWord>,
    pub scalar: ScalarForm,
}

impl GslcForm {
    pub fn qubits(&self) -> usize {
        self.n_inputs + self.n_outputs
    }

    pub fn is_zero(&self) -> bool {
        self.scalar == ScalarForm::Zero
    }

    /// The diagram this form denotes.
    pub fn diagram(&self) -> Diagram {
        if self.is_zero() {
            return ZeroNF { n_inputs: self.n_inputs, n_outputs: self.n_outputs }.diagram();
        }
        let mut d = Diagram::new(self.n_inputs, self.n_outputs);
        let mut nodes = Vec::new();
        for (end, word) in d.boundary().into_iter().zip(&self.words) {
            let u = d.add_vertex(VertexKind::ZSpider(word.a));
            let mut prev = End::Vertex(u);
            for kind in wire_gates(*word) {
                let g = d.add_vertex(kind);
                d.add_edge(prev, End::Vertex(g));
                prev = End::Vertex(g);
            }
            d.add_edge(prev, end);
            nodes.push(u);
        }
        for &(i, j) in &self.edges {
            let h = d.add_vertex(VertexKind::Hadamard);
            d.add_edge(End::Vertex(nodes[i]), End::Vertex(h));
            d.add_edge(End::Vertex(h), End::Vertex(nodes[j]));
        }
        if let ScalarForm::NonZero(nf) = self.scalar {
            add_pieces(&mut d, &nf.pieces());
        }
        d
    }
}

/// Text form, one item per line:
///
/// ```text
/// gslc <inputs> <outputs>
/// edge <i> <j>          (one line per edge)
/// local <i> <word>      (one line per qubit)
/// scalar <pieces>       (or the single line "zero")
/// ```
impl fmt::Display for GslcForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gslc {} {}", self.n_inputs, self.n_outputs)?;
        if self.is_zero() {
            return write!(f, "zero");
        }
        for (i, j) in &self.edges {
            writeln!(f, "edge {i} {j}")?;
        }
        for (i, w) in self.words.iter().enumerate() {
            writeln!(f, "local {i} {w}")?;
        }
        write!(f, "scalar {}", self.scalar)
    }
}

/// Where the graph state sits inside a diagram.
struct Layout {
    nodes: Vec<VertexId>,
    edges: Vec<(usize, usize)>,
    words: Vec<CliffordWord>,
}

/// The leg of a graph node: its only edge that is not a Hadamard edge.
fn leg_of(d: &Diagram, node: VertexId) -> Option<EdgeId> {
    d.incident(End::Vertex(node))
        .iter()
        .copied()
        .find(|&e| !matches!(d.other_end(e, End::Vertex(node)), Some(End::Vertex(h)) if d.kind(h) == Some(VertexKind::Hadamard)))
}

fn stuck(msg: &str) -> NormalError {
    NormalError::Stuck(msg.to_string())
}

/// Reads a diagram in graph-state form; every gate chain must already be
/// canonical.
fn read_layout(d: &Diagram) -> Result<Layout, NormalError> {
    let boundary = d.boundary();
    let mut nodes = Vec::new();
    let mut words = Vec::new();
    let mut used = BTreeSet::new();
    for &end in &boundary {
        let mut edge = *d.incident(end).first().ok_or_else(|| stuck("unattached boundary point"))?;
        let mut from = end;
        let node = loop {
            let Some(End::Vertex(v)) = d.other_end(edge, from) else {
                return Err(stuck("a wire joins two boundary points"));
            };
            let kind = d.kind(v).unwrap();
            if kind.colour() == Some(Colour::Z) && h_neighbours(d, v, Some(edge)).is_ok() {
                break v;
            }
            let inc = d.incident(End::Vertex(v));
            if !kind.is_spider() || inc.len() != 2 || inc[0] == inc[1] {
                return Err(stuck("unexpected node on a boundary leg"));
            }
            let next = if inc[0] == edge { inc[1] } else { inc[0] };
            from = End::Vertex(v);
            edge = next;
        };
        if !used.insert(node) {
            return Err(stuck("a graph node has two boundary legs"));
        }
        let (gates, _) = boundary_chain(d, node, edge).map_err(|e| stuck(&e))?;
        let kinds: Vec<VertexKind> = gates.iter().map(|&g| d.kind(g).unwrap()).collect();
        let a = d.kind(node).unwrap().phase().unwrap();
        let word = match kinds[..] {
            [] => CliffordWord { a, b: Phase::ZERO, c: Phase::ZERO },
            [VertexKind::XSpider(b)] => CliffordWord { a, b, c: Phase::ZERO },
            [VertexKind::ZSpider(c)] => CliffordWord { a, b: Phase::ZERO, c },
            [VertexKind::XSpider(b), VertexKind::ZSpider(c)] => CliffordWord { a, b, c },
            _ => return Err(stuck("a boundary leg is not in canonical form")),
        };
        if !clifford_words().contains(&word) || wire_gates(word) != kinds {
            return Err(stuck("a boundary leg is not in canonical form"));
        }
        used.extend(gates);
        nodes.push(node);
        words.push(word);
    }
    let mut edges = Vec::new();
    let mut hs = 0;
    for (i, &u) in nodes.iter().enumerate() {
        let leg = leg_of(d, u).ok_or_else(|| stuck("graph node without a leg"))?;
        for (_, w) in h_neighbours(d, u, Some(leg)).map_err(|e| stuck(&e))? {
            let j = nodes.iter().position(|&x| x == w).ok_or_else(|| stuck("graph edge to an interior node"))?;
            if i < j {
                edges.push((i, j));
                hs += 1;
            }
        }
    }
    edges.sort();
    let pieces = piece_vertices(d);
    if used.len() + hs + pieces.len() != d.num_vertices() {
        return Err(stuck("interior nodes are left"));
    }
    Ok(Layout { nodes, edges, words })
}

/// Word tables for local complementation: the word times `X(π/2)` at the
/// node, and times `Z(−π/2)`.
fn step_tables() -> &'static (Vec<u8>, Vec<u8>) {
    static TABLES: OnceLock<(Vec<u8>, Vec<u8>)> = OnceLock::new();
    TABLES.get_or_init(|| {
        let after = |g: VertexKind| -> Vec<u8> {
            clifford_words()
                .iter()
                .map(|w| canonical(&w.matrix().matmul(&gate_matrix(g))).expect("Clifford").0.index() as u8)
                .collect()
        };
        (after(VertexKind::XSpider(Phase::HALF_PI)), after(VertexKind::ZSpider(Phase::MINUS_HALF_PI)))
    })
}

/// A graph as a bit string, the first pair in the most significant bit,
/// followed by the word indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Key {
    graph: u64,
    words: Vec<u8>,
}

struct Orbit {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl Orbit {
    fn new(n: usize) -> Result<Orbit, NormalError> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        if pairs.len() > 64 {
            return Err(stuck("too many boundary points for the orbit search"));
        }
        Ok(Orbit { n, pairs })
    }

    fn bit(&self, i: usize, j: usize) -> u64 {
        let p = self.pairs.iter().position(|&q| q == (i.min(j), i.max(j))).unwrap();
        1u64 << (self.pairs.len() - 1 - p)
    }

    fn key(&self, layout: &Layout) -> Key {
        let graph = layout.edges.iter().fold(0, |g, &(i, j)| g | self.bit(i, j));
        Key { graph, words: layout.words.iter().map(|w| w.index() as u8).collect() }
    }

    fn neighbours(&self, graph: u64, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&w| w != v && graph & self.bit(v, w) != 0).collect()
    }

    /// Local complementation at `v` with the compensating Cliffords.
    fn step(&self, key: &Key, v: usize) -> Key {
        let (after_x, after_z) = step_tables();
        let ns = self.neighbours(key.graph, v);
        let mut out = key.clone();
        for (i, &a) in ns.iter().enumerate() {
            for &b in &ns[i + 1..] {
                out.graph ^= self.bit(a, b);
            }
        }
        out.words[v] = after_x[key.words[v] as usize];
        for &w in &ns {
            out.words[w] = after_z[key.words[w] as usize];
        }
        out
    }

    /// Breadth-first search of the orbit; the path to its least element.
    fn least(&self, start: &Key) -> Result<(Key, Vec<usize>), NormalError> {
        let mut parent: HashMap<Key, Option<(Key, usize)>> = HashMap::new();
        parent.insert(start.clone(), None);
        let mut queue = VecDeque::from([start.clone()]);
        let mut best = start.clone();
        while let Some(k) = queue.pop_front() {
            if k < best {
                best = k.clone();
            }
            for v in 0..self.n {
                let next = self.step(&k, v);
                if !parent.contains_key(&next) {
                    if parent.len() >= MAX_ORBIT {
                        return Err(stuck("local complementation orbit is too large"));
                    }
                    parent.insert(next.clone(), Some((k.clone(), v)));
                    queue.push_back(next);
                }
            }
        }
        let mut path = Vec::new();
        let mut at = best.clone();
        while let Some(Some((prev, v))) = parent.get(&at) {
            path.push(*v);
            at = prev.clone();
        }
        path.reverse();
        Ok((best, path))
    }
}

/// Canonicalizes the gates on a node's leg when they are not canonical.
fn settle_leg(rw: &mut Rewriter, node: VertexId) -> Result<(), NormalError> {
    let d = rw.diagram();
    let e = leg_of(d, node).ok_or_else(|| stuck("graph node without a leg"))?;
    let site = Site::vertices(&[node]).with_edges(&[e]);
    let rule = RuleBook::standard().get("lc-chain").map_err(fail)?;
    let next = rule.rewrite(d, &site, Direction::Forward).map_err(|e| stuck(&e))?;
    if &next != d {
        rw.forward("lc-chain", site).map_err(fail)?;
    }
    Ok(())
}

/// Rewrites a diagram into its canonical graph-state form.
pub fn gslc_normalize(d: &Diagram) -> Result<(GslcForm, Derivation), NormalError> {
    let (n_inputs, n_outputs) = (d.n_inputs(), d.n_outputs());
    let mut rw = Rewriter::new(d.clone());
    simplify(&mut rw, Goal::Gslc)?;
    if let Some(w) = reduce_pieces(&mut rw)? {
        clear_zero(&mut rw, w)?;
        let form = GslcForm {
            n_inputs,
            n_outputs,
            edges: Vec::new(),
            words: vec![CliffordWord::IDENTITY; n_inputs + n_outputs],
            scalar: ScalarForm::Zero,
        };
        return finish(rw, form);
    }
    let layout = read_layout(rw.diagram())?;
    let orbit = Orbit::new(layout.nodes.len())?;
    let (best, path) = orbit.least(&orbit.key(&layout))?;
    for v in path {
        let current = read_layout(rw.diagram())?;
        let node = current.nodes[v];
        let e = leg_of(rw.diagram(), node).ok_or_else(|| stuck("graph node without a leg"))?;
        rw.forward("local-comp", Site::vertices(&[node]).with_edges(&[e])).map_err(fail)?;
        settle_leg(&mut rw, node)?;
        for (i, j) in current.edges {
            if i == v {
                settle_leg(&mut rw, current.nodes[j])?;
            } else if j == v {
                settle_leg(&mut rw, current.nodes[i])?;
            }
        }
    }
    if reduce_pieces(&mut rw)?.is_some() {
        return Err(stuck("a non-zero diagram produced a zero scalar"));
    }
    let layout = read_layout(rw.diagram())?;
    if orbit.key(&layout) != best {
        return Err(stuck("replayed local complementations missed the least form"));
    }
    let form = GslcForm {
        n_inputs,
        n_outputs,
        edges: layout.edges,
        words: layout.words,
        scalar: ScalarForm::NonZero(read_pieces(rw.diagram())?),
    };
    finish(rw, form)
}

fn finish(rw: Rewriter, form: GslcForm) -> Result<(GslcForm, Derivation), NormalError> {
    if !is_isomorphic(rw.diagram(), &form.diagram()) {
        return Err(stuck("the rewritten diagram does not match its normal form"));
    }
    Ok((form, rw.finish()))
}

/// The outcome of an equality decision, with both normalizations.
#[derive(Clone, Debug)]
pub struct Decision {
    pub equal: bool,
    pub left: GslcForm,
    pub right: GslcForm,
    /// Rewrites the first diagram into `left`.
    pub left_derivation: Derivation,
    /// Rewrites the second diagram into `right`.
    pub right_derivation: Derivation,
}

/// Decides whether two diagrams denote the same matrix by comparing their
/// normal forms. When they are equal both derivations end in the same
/// diagram.
pub fn decide_equal(d1: &Diagram, d2: &Diagram) -> Result<Decision, NormalError> {
    let (left, left_derivation) = gslc_normalize(d1)?;
    let (right, right_derivation) = gslc_normalize(d2)?;
    Ok(Decision { equal: left == right, left, right, left_derivation, right_derivation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Orbits under local complementation are exactly the stabilizer
    /// states: 6, 60 and 1080 of them on one, two and three qubits.
    #[test]
    fn orbits_match_stabilizer_state_counts() {
        for (n, want) in [(1usize, 6usize), (2, 60), (3, 1080)] {
            let orbit = Orbit::new(n).unwrap();
            let mut seen: HashSet<Key> = HashSet::new();
            let mut count = 0;
            for graph in 0..(1u64 << orbit.pairs.len()) {
                for w in 0..24usize.pow(n as u32) {
                    let words = (0..n).map(|i| ((w / 24usize.pow(i as u32)) % 24) as u8).collect();
                    let start = Key { graph, words };
                    if seen.contains(&start) {
                        continue;
                    }
                    count += 1;
                    let mut stack = vec![start.clone()];
                    seen.insert(start);
                    while let Some(k) = stack.pop() {
                        for v in 0..n {
                            let next = orbit.step(&k, v);
                            if seen.insert(next.clone()) {
                                stack.push(next);
                            }
                        }
                    }
                }
            }
            assert_eq!(count, want, "{n} qubits");
        }
    }
}
