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

//! The diagram data model.
//!
//! A [`Diagram`] is an open multigraph. Internal vertices carry a
//! [`VertexKind`]; edges join two [`End`]s, each either a vertex or a
//! boundary point. Boundary points are not vertices, so a bare wire is an
//! edge between two boundary points. Closed wires without any vertex are
//! kept as a counter, since an edge needs two ends.

mod build;
mod iso;
mod ops;
mod validate;

use std::collections::BTreeMap;
use std::fmt;

use crate::phase::Phase;

pub use iso::is_isomorphic;
pub use validate::validate;

/// Opaque vertex identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub u32);

/// Opaque edge identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Spider colour. `Z` is green, `X` is red.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colour {
    Z,
    X,
}

impl Colour {
    pub fn flipped(self) -> Colour {
        match self {
            Colour::Z => Colour::X,
            Colour::X => Colour::Z,
        }
    }

    pub fn index(self) -> u32 {
        match self {
            Colour::Z => 0,
            Colour::X => 1,
        }
    }

    pub fn from_index(i: u32) -> Option<Colour> {
        match i {
            0 => Some(Colour::Z),
            1 => Some(Colour::X),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    ZSpider(Phase),
    XSpider(Phase),
    Hadamard,
    Star,
}

impl VertexKind {
    pub fn spider(colour: Colour, phase: Phase) -> VertexKind {
        match colour {
            Colour::Z => VertexKind::ZSpider(phase),
            Colour::X => VertexKind::XSpider(phase),
        }
    }

    pub fn colour(self) -> Option<Colour> {
        match self {
            VertexKind::ZSpider(_) => Some(Colour::Z),
            VertexKind::XSpider(_) => Some(Colour::X),
            _ => None,
        }
    }

    pub fn phase(self) -> Option<Phase> {
        match self {
            VertexKind::ZSpider(p) | VertexKind::XSpider(p) => Some(p),
            _ => None,
        }
    }

    pub fn is_spider(self) -> bool {
        self.colour().is_some()
    }

    /// Same kind with the phase replaced; non-spiders are unchanged.
    pub fn with_phase(self, phase: Phase) -> VertexKind {
        match self {
            VertexKind::ZSpider(_) => VertexKind::ZSpider(phase),
            VertexKind::XSpider(_) => VertexKind::XSpider(phase),
            other => other,
        }
    }

    pub fn colour_swapped(self) -> VertexKind {
        match self {
            VertexKind::ZSpider(p) => VertexKind::XSpider(p),
            VertexKind::XSpider(p) => VertexKind::ZSpider(p),
            other => other,
        }
    }
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexKind::ZSpider(p) => write!(f, "Z({p})"),
            VertexKind::XSpider(p) => write!(f, "X({p})"),
            VertexKind::Hadamard => f.write_str("H"),
            VertexKind::Star => f.write_str("★"),
        }
    }
}

/// One end of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    Vertex(VertexId),
    Input(usize),
    Output(usize),
}

impl End {
    pub fn vertex(self) -> Option<VertexId> {
        match self {
            End::Vertex(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_boundary(self) -> bool {
        !matches!(self, End::Vertex(_))
    }
}

impl fmt::Display for End {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            End::Vertex(v) => write!(f, "v{v}"),
            End::Input(i) => write!(f, "in{i}"),
            End::Output(i) => write!(f, "out{i}"),
        }
    }
}

/// An open ZX-diagram.
///
/// `==` compares vertices, edges and boundary by id. Use
/// [`is_isomorphic`] for equality up to relabelling.
#[derive(Clone, Debug)]
pub struct Diagram {
    vertices: BTreeMap<VertexId, VertexKind>,
    edges: BTreeMap<EdgeId, (End, End)>,
    // Every end with its incident edges; a self-loop is listed twice.
    incidence: BTreeMap<End, Vec<EdgeId>>,
    n_inputs: usize,
    n_outputs: usize,
    loops: usize,
    next_vertex: u32,
    next_edge: u32,
}

impl PartialEq for Diagram {
    fn eq(&self, other: &Diagram) -> bool {
        self.vertices == other.vertices
            && self.edges == other.edges
            && self.n_inputs == other.n_inputs
            && self.n_outputs == other.n_outputs
            && self.loops == other.loops
    }
}

impl Eq for Diagram {}

impl Default for Diagram {
    fn default() -> Self {
        Diagram::new(0, 0)
    }
}

impl Diagram {
    /// A diagram with the given boundary and nothing else. Boundary points
    /// still need attaching before the diagram validates.
    pub fn new(n_inputs: usize, n_outputs: usize) -> Diagram {
        Diagram {
            vertices: BTreeMap::new(),
            edges: BTreeMap::new(),
            incidence: BTreeMap::new(),
            n_inputs,
            n_outputs,
            loops: 0,
            next_vertex: 0,
            next_edge: 0,
        }
    }

    /// The empty diagram, denoting the scalar 1.
    pub fn empty() -> Diagram {
        Diagram::new(0, 0)
    }

    pub fn n_inputs(&self) -> usize {
        self.n_inputs
    }

    pub fn n_outputs(&self) -> usize {
        self.n_outputs
    }

    pub fn is_scalar(&self) -> bool {
        self.n_inputs == 0 && self.n_outputs == 0
    }

    /// Number of closed wires carrying no vertex.
    pub fn free_loops(&self) -> usize {
        self.loops
    }

    pub fn set_free_loops(&mut self, n: usize) {
        self.loops = n;
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = (VertexId, VertexKind)> + '_ {
        self.vertices.iter().map(|(v, k)| (*v, *k))
    }

    pub fn vertex_ids(&self) -> Vec<VertexId> {
        self.vertices.keys().copied().collect()
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, (End, End))> + '_ {
        self.edges.iter().map(|(e, ends)| (*e, *ends))
    }

    pub fn edge_ids(&self) -> Vec<EdgeId> {
        self.edges.keys().copied().collect()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains_key(&v)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains_key(&e)
    }

    pub fn kind(&self, v: VertexId) -> Option<VertexKind> {
        self.vertices.get(&v).copied()
    }

    pub fn edge(&self, e: EdgeId) -> Option<(End, End)> {
        self.edges.get(&e).copied()
    }

    /// Boundary points in order: inputs, then outputs.
    pub fn boundary(&self) -> Vec<End> {
        (0..self.n_inputs)
            .map(End::Input)
            .chain((0..self.n_outputs).map(End::Output))
            .collect()
    }

    /// Incident edges of an end; self-loops appear twice.
    pub fn incident(&self, end: End) -> &[EdgeId] {
        self.incidence.get(&end).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incident(End::Vertex(v)).len()
    }

    /// The end of `e` opposite to `from`.
    pub fn other_end(&self, e: EdgeId, from: End) -> Option<End> {
        let (a, b) = self.edge(e)?;
        if a == from {
            Some(b)
        } else if b == from {
            Some(a)
        } else {
            None
        }
    }

    /// Neighbouring ends with multiplicity, one entry per incident edge end.
    pub fn neighbours(&self, v: VertexId) -> Vec<End> {
        let me = End::Vertex(v);
        self.incident(me)
            .iter()
            .map(|&e| self.other_end(e, me).expect("incidence is consistent"))
            .collect()
    }

    /// Edges joining the two ends. A self-loop is listed once.
    pub fn edges_between(&self, a: End, b: End) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self
            .incident(a)
            .iter()
            .copied()
            .filter(|&e| self.other_end(e, a) == Some(b))
            .collect();
        out.dedup();
        out
    }

    pub fn is_self_loop(&self, e: EdgeId) -> bool {
        matches!(self.edge(e), Some((a, b)) if a == b)
    }

    /// Appends a new input boundary point; it still needs an edge.
    pub fn add_input(&mut self) -> End {
        self.n_inputs += 1;
        End::Input(self.n_inputs - 1)
    }

    /// Appends a new output boundary point; it still needs an edge.
    pub fn add_output(&mut self) -> End {
        self.n_outputs += 1;
        End::Output(self.n_outputs - 1)
    }

    pub fn add_vertex(&mut self, kind: VertexKind) -> VertexId {
        let v = VertexId(self.next_vertex);
        self.next_vertex += 1;
        self.vertices.insert(v, kind);
        self.incidence.insert(End::Vertex(v), Vec::new());
        v
    }

    pub fn set_kind(&mut self, v: VertexId, kind: VertexKind) {
        if let Some(k) = self.vertices.get_mut(&v) {
            *k = kind;
        }
    }

    /// Removes a vertex together with its incident edges.
    pub fn remove_vertex(&mut self, v: VertexId) {
        let mut incident = self.incident(End::Vertex(v)).to_vec();
        incident.dedup();
        for e in incident {
            self.remove_edge(e);
        }
        self.vertices.remove(&v);
        self.incidence.remove(&End::Vertex(v));
    }

    pub fn add_edge(&mut self, a: End, b: End) -> EdgeId {
        let e = EdgeId(self.next_edge);
        self.next_edge += 1;
        self.edges.insert(e, (a, b));
        self.incidence.entry(a).or_default().push(e);
        self.incidence.entry(b).or_default().push(e);
        e
    }

    pub fn remove_edge(&mut self, e: EdgeId) {
        if let Some((a, b)) = self.edges.remove(&e) {
            for end in [a, b] {
                if let Some(list) = self.incidence.get_mut(&end) {
                    if let Some(pos) = list.iter().position(|&x| x == e) {
                        list.remove(pos);
                    }
                    if list.is_empty() && end.is_boundary() {
                        self.incidence.remove(&end);
                    }
                }
            }
        }
    }

    /// Re-attaches the end `from` of edge `e` to `to`, keeping the edge id.
    /// For a self-loop only one of its two ends moves.
    pub fn move_edge_end(&mut self, e: EdgeId, from: End, to: End) {
        let Some(&(a, b)) = self.edges.get(&e) else { return };
        let new = if a == from {
            (to, b)
        } else if b == from {
            (a, to)
        } else {
            return;
        };
        self.edges.insert(e, new);
        if let Some(list) = self.incidence.get_mut(&from) {
            if let Some(pos) = list.iter().position(|&x| x == e) {
                list.remove(pos);
            }
            if list.is_empty() && from.is_boundary() {
                self.incidence.remove(&from);
            }
        }
        self.incidence.entry(to).or_default().push(e);
    }

    /// Removes a vertex of degree 2 and joins its two neighbours directly.
    /// A vertex whose two legs form one self-loop leaves a closed wire.
    pub fn splice_out(&mut self, v: VertexId) {
        let me = End::Vertex(v);
        let inc = self.incident(me).to_vec();
        assert_eq!(inc.len(), 2, "splice_out needs a degree-2 vertex");
        if inc[0] == inc[1] {
            self.remove_vertex(v);
            self.loops += 1;
            return;
        }
        let a = self.other_end(inc[0], me).expect("consistent");
        let b = self.other_end(inc[1], me).expect("consistent");
        self.remove_vertex(v);
        self.add_edge(a, b);
    }

    /// Inserts a new vertex in the middle of edge `e`, returning the vertex
    /// and the two new edges (towards the first and the second end of `e`).
    pub fn insert_on_edge(&mut self, e: EdgeId, kind: VertexKind) -> (VertexId, EdgeId, EdgeId) {
        let (a, b) = self.edge(e).expect("edge exists");
        self.remove_edge(e);
        let v = self.add_vertex(kind);
        let ea = self.add_edge(a, End::Vertex(v));
        let eb = self.add_edge(End::Vertex(v), b);
        (v, ea, eb)
    }

    /// Connected components of vertices. Boundary points join components
    /// but are not listed; `touches_boundary` reports them.
    pub fn components(&self) -> Vec<Component> {
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for &start in self.vertices.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut stack = vec![End::Vertex(start)];
            let mut visited = std::collections::BTreeSet::new();
            visited.insert(End::Vertex(start));
            let mut vertices = Vec::new();
            let mut boundary = Vec::new();
            while let Some(end) = stack.pop() {
                match end {
                    End::Vertex(v) => vertices.push(v),
                    b => boundary.push(b),
                }
                for &e in self.incident(end) {
                    let other = self.other_end(e, end).expect("consistent");
                    if visited.insert(other) {
                        stack.push(other);
                    }
                }
            }
            vertices.sort();
            boundary.sort();
            seen.extend(vertices.iter().copied());
            out.push(Component { vertices, boundary });
        }
        out
    }
}

/// A connected set of vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<VertexId>,
    pub boundary: Vec<End>,
}

impl Component {
    pub fn touches_boundary(&self) -> bool {
        !self.boundary.is_empty()
    }
}
