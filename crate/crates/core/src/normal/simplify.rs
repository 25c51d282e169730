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

//! The graph-like simplification shared by all normal forms.
//!
//! Components that are already scalar pieces (a star, a spider without
//! legs, or a two-spider pair of different colours) are left alone. The
//! rest is turned into Z spiders joined by Hadamard edges, after which
//! every spider without a boundary leg is eliminated by local
//! complementation or pivoting. What remains is a graph state on the
//! boundary nodes, next to scalar pieces.

use std::collections::BTreeSet;

use crate::diagram::{Colour, Diagram, EdgeId, End, VertexId, VertexKind};
use crate::error::NormalError;
use crate::rewrite::graph_lemmas::{h_edges, h_neighbours};
use crate::rewrite::{Rewriter, Site};

const Z: i64 = 0;

/// True when the component of `v` is already a scalar piece.
pub(crate) fn piece_vertices(d: &Diagram) -> BTreeSet<VertexId> {
    let mut out = BTreeSet::new();
    for comp in d.components() {
        if comp.touches_boundary() {
            continue;
        }
        let vs = &comp.vertices;
        let kinds: Vec<VertexKind> = vs.iter().map(|&v| d.kind(v).unwrap()).collect();
        let piece = match vs.len() {
            1 => kinds[0] == VertexKind::Star || (kinds[0].is_spider() && d.degree(vs[0]) == 0),
            2 => {
                kinds[0].is_spider()
                    && kinds[1].is_spider()
                    && kinds[0].colour() != kinds[1].colour()
                    && d.degree(vs[0]) == 1
                    && d.degree(vs[1]) == 1
            }
            _ => false,
        };
        if piece {
            out.extend(vs.iter().copied());
        }
    }
    out
}

/// Legs of `v` that reach the boundary, directly or through one Hadamard
/// node, as `(edge at v, hadamard)`.
pub(crate) fn boundary_legs(d: &Diagram, v: VertexId) -> Vec<(EdgeId, Option<VertexId>)> {
    let mut out = Vec::new();
    for &e in d.incident(End::Vertex(v)) {
        match d.other_end(e, End::Vertex(v)) {
            Some(End::Vertex(h)) if d.kind(h) == Some(VertexKind::Hadamard) => {
                if let Some(far) = crate::rewrite::graph_lemmas::through_end(d, h, e) {
                    if far.is_boundary() {
                        out.push((e, Some(h)));
                    }
                }
            }
            Some(b) if b.is_boundary() => out.push((e, None)),
            _ => {}
        }
    }
    out
}

fn interior(d: &Diagram, v: VertexId) -> bool {
    d.degree(v) > 0 && h_neighbours(d, v, None).is_ok()
}

pub(crate) fn fail(e: crate::error::RewriteError) -> NormalError {
    NormalError::Rewrite(e)
}

/// What the simplifier should produce.
#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Goal {
    /// Graph-like with interior spiders eliminated.
    Reduced,
    /// Additionally one boundary leg per node, with canonical gates on it.
    Gslc,
}

pub(crate) fn simplify(rw: &mut Rewriter, goal: Goal) -> Result<(), NormalError> {
    loop {
        if local_step(rw)? || eliminate_step(rw)? {
            continue;
        }
        if goal == Goal::Gslc && split_step(rw)? {
            continue;
        }
        break;
    }
    // The canonical gates are not graph-like, so this comes last.
    if goal == Goal::Gslc {
        while chain_step(rw)? {}
    }
    Ok(())
}

/// One local clean-up step; false when none applies.
fn local_step(rw: &mut Rewriter) -> Result<bool, NormalError> {
    let d = rw.diagram().clone();
    if d.free_loops() > 0 {
        let created = rw.backward("cup", Site::default().with_params(&[Z, 1])).map_err(fail)?;
        let u = created[0];
        let e = rw.diagram().incident(End::Vertex(u))[0];
        rw.forward("loop", Site::vertices(&[u]).with_edges(&[e])).map_err(fail)?;
        return Ok(true);
    }
    let pieces = piece_vertices(&d);
    let active: Vec<(VertexId, VertexKind)> = d.vertices().filter(|(v, _)| !pieces.contains(v)).collect();
    for &(v, k) in &active {
        if k.colour() == Some(Colour::X) {
            rw.forward("colour", Site::vertices(&[v])).map_err(fail)?;
            return Ok(true);
        }
    }
    for (e, (a, b)) in d.edges() {
        match (a, b) {
            (End::Vertex(a), End::Vertex(b)) => {
                let (ka, kb) = (d.kind(a).unwrap(), d.kind(b).unwrap());
                if a != b && ka == VertexKind::Hadamard && kb == VertexKind::Hadamard {
                    rw.forward("h-cancel", Site::vertices(&[a, b]).with_edges(&[e])).map_err(fail)?;
                    return Ok(true);
                }
                if pieces.contains(&a) || ka.colour() != Some(Colour::Z) || kb.colour() != Some(Colour::Z) {
                    continue;
                }
                if a == b {
                    rw.forward("loop", Site::vertices(&[a]).with_edges(&[e])).map_err(fail)?;
                } else {
                    rw.forward("spider", Site::vertices(&[a.min(b), a.max(b)]).with_edges(&[e])).map_err(fail)?;
                }
                return Ok(true);
            }
            (a, b) if a.is_boundary() && b.is_boundary() => {
                rw.backward("cup", Site::default().with_edges(&[e]).with_params(&[Z])).map_err(fail)?;
                return Ok(true);
            }
            _ => {}
        }
    }
    for &(h, k) in &active {
        if k != VertexKind::Hadamard {
            continue;
        }
        let ns = d.neighbours(h);
        match (ns[0], ns[1]) {
            (End::Vertex(u), End::Vertex(w)) if u == w => {
                rw.forward("h-loop", Site::vertices(&[u, h])).map_err(fail)?;
                return Ok(true);
            }
            (End::Vertex(u), End::Vertex(w)) => {
                let hs = h_edges(&d, u, w);
                if hs.len() >= 2 {
                    rw.forward("h-hopf", Site::vertices(&[u.min(w), u.max(w), hs[0], hs[1]])).map_err(fail)?;
                    return Ok(true);
                }
            }
            (a, b) if a.is_boundary() && b.is_boundary() => {
                let e = d.incident(End::Vertex(h))[0];
                rw.backward("cup", Site::default().with_edges(&[e]).with_params(&[Z])).map_err(fail)?;
                return Ok(true);
            }
            _ => {}
        }
    }
    Ok(false)
}

/// Removes one interior spider, or prepares a neighbour so that the next
/// round can. False when no interior spider with neighbours is left.
fn eliminate_step(rw: &mut Rewriter) -> Result<bool, NormalError> {
    let d = rw.diagram().clone();
    let pieces = piece_vertices(&d);
    let zs: Vec<(VertexId, crate::phase::Phase)> = d
        .vertices()
        .filter(|(v, _)| !pieces.contains(v))
        .filter_map(|(v, k)| match k {
            VertexKind::ZSpider(p) => Some((v, p)),
            _ => None,
        })
        .collect();
    for &(u, p) in &zs {
        if p.is_proper_clifford() && interior(&d, u) {
            rw.forward("lcomp", Site::vertices(&[u])).map_err(fail)?;
            return Ok(true);
        }
    }
    for &(u, p) in &zs {
        if !p.is_pauli() || !interior(&d, u) {
            continue;
        }
        let ns = h_neighbours(&d, u, None).expect("interior");
        for &(h, w) in &ns {
            if interior(&d, w) && d.kind(w).and_then(|k| k.phase()).is_some_and(|q| q.is_pauli()) {
                rw.forward("pivot", Site::vertices(&[u, w, h])).map_err(fail)?;
                return Ok(true);
            }
        }
        // Every neighbour has a boundary leg: move those legs one step out.
        let (_, w) = ns[0];
        for (e, h) in boundary_legs(&d, w) {
            match h {
                None => {
                    let created = rw.backward("h-cancel", Site::default().with_edges(&[e])).map_err(fail)?;
                    let mid = rw.diagram().edges_between(End::Vertex(created[0]), End::Vertex(created[1]))[0];
                    rw.backward("cup", Site::default().with_edges(&[mid]).with_params(&[Z])).map_err(fail)?;
                }
                Some(h) => {
                    let outer = rw.diagram().incident(End::Vertex(h)).iter().copied().find(|&x| x != e).unwrap();
                    rw.backward("cup", Site::default().with_edges(&[outer]).with_params(&[Z])).map_err(fail)?;
                }
            }
        }
        return Ok(true);
    }
    Ok(false)
}

/// Gives a node with several boundary legs a new neighbour per extra leg.
fn split_step(rw: &mut Rewriter) -> Result<bool, NormalError> {
    let d = rw.diagram().clone();
    let pieces = piece_vertices(&d);
    for (v, k) in d.vertices() {
        if pieces.contains(&v) || k.colour() != Some(Colour::Z) {
            continue;
        }
        let legs = boundary_legs(&d, v);
        if legs.len() < 2 {
            continue;
        }
        let (e, h) = legs[1];
        let created = rw.backward("spider", Site::vertices(&[v]).with_edges(&[e]).with_params(&[0])).map_err(fail)?;
        let w = created[0];
        let link = rw.diagram().edges_between(End::Vertex(v), End::Vertex(w))[0];
        let hs = rw.backward("h-cancel", Site::default().with_edges(&[link])).map_err(fail)?;
        let mid = rw.diagram().edges_between(End::Vertex(hs[0]), End::Vertex(hs[1]))[0];
        rw.backward("cup", Site::default().with_edges(&[mid]).with_params(&[Z])).map_err(fail)?;
        rw.forward("cup", Site::vertices(&[w])).map_err(fail)?;
        if let Some(h) = h {
            let cur = rw.diagram();
            let inner = if cur.edges_between(End::Vertex(h), End::Vertex(hs[0])).is_empty() { hs[1] } else { hs[0] };
            let e = cur.edges_between(End::Vertex(h), End::Vertex(inner))[0];
            let (a, b) = (h.min(inner), h.max(inner));
            rw.forward("h-cancel", Site::vertices(&[a, b]).with_edges(&[e])).map_err(fail)?;
        }
        return Ok(true);
    }
    Ok(false)
}

/// Normalizes the gates on one boundary leg.
fn chain_step(rw: &mut Rewriter) -> Result<bool, NormalError> {
    let d = rw.diagram().clone();
    let pieces = piece_vertices(&d);
    let rule = crate::rewrite::RuleBook::standard().get("lc-chain").map_err(fail)?;
    for (v, k) in d.vertices() {
        if pieces.contains(&v) || k.colour() != Some(Colour::Z) {
            continue;
        }
        for (e, _) in boundary_legs(&d, v) {
            let site = Site::vertices(&[v]).with_edges(&[e]);
            if let Ok(next) = rule.rewrite(&d, &site, crate::rewrite::Direction::Forward) {
                if next != d {
                    rw.forward("lc-chain", site).map_err(fail)?;
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}
