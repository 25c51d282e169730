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

//! Pattern helpers shared by the rules.

use crate::diagram::{Colour, Diagram, EdgeId, End, VertexId, VertexKind};
use crate::normal::add_pieces;
use crate::phase::Phase;
use crate::semantics::ExactScalar;

use super::Site;

pub(crate) type Res<T> = Result<T, String>;

pub(crate) fn ensure(cond: bool, msg: &str) -> Res<()> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

pub(crate) fn spider(d: &Diagram, v: VertexId) -> Res<(Colour, Phase)> {
    match d.kind(v) {
        Some(k) if k.is_spider() => Ok((k.colour().unwrap(), k.phase().unwrap())),
        Some(k) => Err(format!("v{v} is {k}, not a spider")),
        None => Err(format!("v{v} does not exist")),
    }
}

pub(crate) fn spider_of(d: &Diagram, v: VertexId, colour: Colour) -> Res<Phase> {
    let (c, p) = spider(d, v)?;
    ensure(c == colour, &format!("v{v} has the wrong colour"))?;
    Ok(p)
}

pub(crate) fn hadamard(d: &Diagram, v: VertexId) -> Res<()> {
    ensure(d.kind(v) == Some(VertexKind::Hadamard), &format!("v{v} is not a Hadamard node"))
}

pub(crate) fn star(d: &Diagram, v: VertexId) -> Res<()> {
    ensure(d.kind(v) == Some(VertexKind::Star), &format!("v{v} is not a star"))
}

pub(crate) fn vertex(site: &Site, i: usize) -> Res<VertexId> {
    site.vertices.get(i).copied().ok_or_else(|| format!("site needs at least {} vertices", i + 1))
}

pub(crate) fn edge(site: &Site, i: usize) -> Res<EdgeId> {
    site.edges.get(i).copied().ok_or_else(|| format!("site needs at least {} edges", i + 1))
}

pub(crate) fn param(site: &Site, i: usize) -> Res<i64> {
    site.params.get(i).copied().ok_or_else(|| format!("site needs at least {} parameters", i + 1))
}

pub(crate) fn param_or(site: &Site, i: usize, default: i64) -> i64 {
    site.params.get(i).copied().unwrap_or(default)
}

pub(crate) fn colour_param(site: &Site, i: usize) -> Res<Colour> {
    let c = param_or(site, i, 0);
    Colour::from_index(c as u32).filter(|_| c >= 0).ok_or_else(|| format!("bad colour parameter {c}"))
}

pub(crate) fn distinct(vs: &[VertexId]) -> Res<()> {
    let mut sorted = vs.to_vec();
    sorted.sort();
    sorted.dedup();
    ensure(sorted.len() == vs.len(), "site vertices must be distinct")
}

pub(crate) fn joins(d: &Diagram, e: EdgeId, a: VertexId, b: VertexId) -> Res<()> {
    let ends = d.edge(e).ok_or_else(|| format!("edge {e} does not exist"))?;
    let (x, y) = (End::Vertex(a), End::Vertex(b));
    ensure(ends == (x, y) || ends == (y, x), &format!("edge {e} does not join v{a} and v{b}"))
}

/// Number of edges between two distinct vertices.
pub(crate) fn multiplicity(d: &Diagram, a: VertexId, b: VertexId) -> usize {
    d.incident(End::Vertex(a))
        .iter()
        .filter(|&&e| d.other_end(e, End::Vertex(a)) == Some(End::Vertex(b)))
        .count()
}

/// The other end of a degree-two vertex, seen from `from`.
pub(crate) fn through(d: &Diagram, v: VertexId, from: End) -> Option<End> {
    let inc = d.incident(End::Vertex(v));
    if inc.len() != 2 {
        return None;
    }
    let me = End::Vertex(v);
    let a = d.other_end(inc[0], me)?;
    let b = d.other_end(inc[1], me)?;
    if a == from {
        Some(b)
    } else if b == from {
        Some(a)
    } else {
        None
    }
}

/// Leg occurrences of `v` not in `internal`; each internal edge removes one
/// occurrence per listing.
pub(crate) fn outer_legs(d: &Diagram, v: VertexId, internal: &[EdgeId]) -> Vec<EdgeId> {
    let mut legs = d.incident(End::Vertex(v)).to_vec();
    for e in internal {
        if let Some(pos) = legs.iter().position(|x| x == e) {
            legs.remove(pos);
        }
    }
    legs
}

/// Checks that `a` and `b` form an isolated two-node scalar: each has
/// degree one and they are joined. Returns their kinds.
pub(crate) fn scalar_pair(d: &Diagram, a: VertexId, b: VertexId) -> Res<(VertexKind, VertexKind)> {
    ensure(a != b, "a pair needs two vertices")?;
    let (ka, kb) = (spider_kind(d, a)?, spider_kind(d, b)?);
    ensure(d.degree(a) == 1 && d.degree(b) == 1, "pair nodes must have degree one")?;
    ensure(multiplicity(d, a, b) == 1, "pair nodes must be joined")?;
    Ok((ka, kb))
}

fn spider_kind(d: &Diagram, v: VertexId) -> Res<VertexKind> {
    spider(d, v)?;
    Ok(d.kind(v).unwrap())
}

/// `⟨Z(α)|X(β)⟩` listed as `[z, x]`.
pub(crate) fn check_pair(d: &Diagram, z: VertexId, x: VertexId, alpha: Phase, beta: Phase) -> Res<()> {
    let (kz, kx) = scalar_pair(d, z, x)?;
    ensure(
        kz == VertexKind::ZSpider(alpha) && kx == VertexKind::XSpider(beta),
        &format!("expected ⟨Z({alpha})|X({beta})⟩ at v{z}, v{x}"),
    )
}

/// Every isolated Z–X pair as `(z, x, α, β)`, ordered by vertex id.
pub(crate) fn pairs(d: &Diagram) -> Vec<(VertexId, VertexId, Phase, Phase)> {
    let mut out = Vec::new();
    for (z, k) in d.vertices() {
        let VertexKind::ZSpider(alpha) = k else { continue };
        if d.degree(z) != 1 {
            continue;
        }
        if let Some(End::Vertex(x)) = d.neighbours(z).first().copied() {
            if let Some(VertexKind::XSpider(beta)) = d.kind(x) {
                if d.degree(x) == 1 {
                    out.push((z, x, alpha, beta));
                }
            }
        }
    }
    out
}

/// The first pair `⟨Z(α)|X(β)⟩` avoiding the given vertices.
pub(crate) fn find_pair(d: &Diagram, alpha: Phase, beta: Phase, avoid: &[VertexId]) -> Option<(VertexId, VertexId)> {
    pairs(d)
        .into_iter()
        .find(|&(z, x, a, b)| a == alpha && b == beta && !avoid.contains(&z) && !avoid.contains(&x))
        .map(|(z, x, _, _)| (z, x))
}

/// Adds the normal-form diagram of a non-zero scalar.
pub(crate) fn add_scalar(d: &mut Diagram, value: ExactScalar) {
    if let ExactScalar::Value { r, s } = value {
        add_pieces(d, &crate::normal::ScalarNF::new(r, s as i64).pieces());
    }
}

/// Attaches `n` new boundary wires to `v`: the first half as inputs, the
/// rest as outputs.
pub(crate) fn legs(d: &mut Diagram, v: VertexId, n: usize) {
    for i in 0..n {
        let end = if i < n / 2 { d.add_input() } else { d.add_output() };
        d.add_edge(end, End::Vertex(v));
    }
}

/// All spiders, as `(vertex, colour, phase)`.
pub(crate) fn spiders(d: &Diagram) -> Vec<(VertexId, Colour, Phase)> {
    d.vertices()
        .filter_map(|(v, k)| Some((v, k.colour()?, k.phase()?)))
        .collect()
}

/// `⟨c(α)|¬c(β)⟩` listed as `[a, b]` with `a` of colour `c`.
pub(crate) fn check_pair_in(d: &Diagram, c: Colour, a: VertexId, b: VertexId, alpha: Phase, beta: Phase) -> Res<()> {
    match c {
        Colour::Z => check_pair(d, a, b, alpha, beta),
        Colour::X => check_pair(d, b, a, beta, alpha),
    }
}

/// The first pair `⟨c(α)|¬c(β)⟩` avoiding the given vertices, as `(a, b)`
/// with `a` of colour `c`.
pub(crate) fn find_pair_in(d: &Diagram, c: Colour, alpha: Phase, beta: Phase, avoid: &[VertexId]) -> Option<(VertexId, VertexId)> {
    match c {
        Colour::Z => find_pair(d, alpha, beta, avoid),
        Colour::X => find_pair(d, beta, alpha, avoid).map(|(z, x)| (x, z)),
    }
}

/// Adds `⟨c(α)|¬c(β)⟩`.
pub(crate) fn add_pair_in(d: &mut Diagram, c: Colour, alpha: Phase, beta: Phase) -> (VertexId, VertexId) {
    match c {
        Colour::Z => d.add_pair(alpha, beta),
        Colour::X => {
            let (z, x) = d.add_pair(beta, alpha);
            (x, z)
        }
    }
}
