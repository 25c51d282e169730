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

//! Lemmas on graph-like diagrams: Z spiders joined by Hadamard edges.
//!
//! A Hadamard edge is a Hadamard node whose two legs end on spiders. Each
//! carries a factor `1/√2` relative to the controlled-Z convention, so the
//! scalars below count the Hadamard nodes removed and added.
//!
//! Except for `h-cancel` these are stated for Z spiders and forward only.

use std::collections::BTreeSet;

use super::util::*;
use super::{Direction, Instance, Origin, Rule, Site};
use crate::diagram::{Colour, Diagram, EdgeId, End, VertexId, VertexKind};
use crate::normal::clifford::{canonical, gate_matrix, wire_gates};
use crate::phase::Phase;
use crate::semantics::{ExactMatrix, ExactScalar};

pub(crate) fn lemmas() -> Vec<Box<dyn Rule>> {
    vec![
        Box::new(HCancel),
        Box::new(HLoop),
        Box::new(HHopf),
        Box::new(LocalComplementation),
        Box::new(Pivot),
        Box::new(LcChain),
        Box::new(LocalComp),
    ]
}

const ZERO: Phase = Phase::ZERO;
const PI: Phase = Phase::PI;
const HALF: Phase = Phase::HALF_PI;
const MINUS_HALF: Phase = Phase::MINUS_HALF_PI;

fn forward_only(direction: Direction) -> Res<()> {
    ensure(direction == Direction::Forward, "this lemma is applied forward only")
}

fn z_spider(d: &Diagram, v: VertexId) -> Res<Phase> {
    spider_of(d, v, Colour::Z)
}

/// The Hadamard edge `h` seen from `u`: its other end, if `h` is a
/// Hadamard node between `u` and another Z spider.
pub(crate) fn h_partner(d: &Diagram, u: VertexId, h: VertexId) -> Option<VertexId> {
    if d.kind(h) != Some(VertexKind::Hadamard) {
        return None;
    }
    let w = through(d, h, End::Vertex(u))?.vertex()?;
    (w != u && z_spider(d, w).is_ok()).then_some(w)
}

/// The far end of a degree-two node `h` entered along edge `e`.
pub(crate) fn through_end(d: &Diagram, h: VertexId, e: EdgeId) -> Option<End> {
    let inc = d.incident(End::Vertex(h));
    if inc.len() != 2 || inc[0] == inc[1] {
        return None;
    }
    let other = if inc[0] == e { inc[1] } else if inc[1] == e { inc[0] } else { return None };
    d.other_end(other, End::Vertex(h))
}

/// Hadamard edges of `u` as `(h, neighbour)`, ignoring `skip`. Fails
/// unless every other leg is a Hadamard edge to a distinct Z spider.
pub(crate) fn h_neighbours(d: &Diagram, u: VertexId, skip: Option<EdgeId>) -> Res<Vec<(VertexId, VertexId)>> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for &e in d.incident(End::Vertex(u)) {
        if Some(e) == skip {
            continue;
        }
        let h = d.other_end(e, End::Vertex(u)).and_then(End::vertex).ok_or("a leg reaches the boundary")?;
        let w = h_partner(d, u, h).ok_or("every leg must be a Hadamard edge to another Z spider")?;
        ensure(seen.insert(w), "neighbours must be joined once")?;
        out.push((h, w));
    }
    Ok(out)
}

/// Hadamard edges directly between `a` and `b`.
pub(crate) fn h_edges(d: &Diagram, a: VertexId, b: VertexId) -> Vec<VertexId> {
    let mut out: Vec<VertexId> = d
        .neighbours(a)
        .into_iter()
        .filter_map(End::vertex)
        .filter(|&h| h_partner(d, a, h) == Some(b))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Pairs whose Hadamard edge is toggled must have at most one.
fn check_toggle(d: &Diagram, pairs: &[(VertexId, VertexId)]) -> Res<()> {
    for &(a, b) in pairs {
        ensure(h_edges(d, a, b).len() <= 1, "toggled pairs may share at most one Hadamard edge")?;
    }
    Ok(())
}

/// Toggles the Hadamard edge between `a` and `b`; true when one was added.
fn toggle(d: &mut Diagram, a: VertexId, b: VertexId) -> bool {
    match h_edges(d, a, b).first() {
        Some(&h) => {
            d.remove_vertex(h);
            false
        }
        None => {
            let h = d.add_vertex(VertexKind::Hadamard);
            d.add_edge(End::Vertex(a), End::Vertex(h));
            d.add_edge(End::Vertex(h), End::Vertex(b));
            true
        }
    }
}

/// Toggles all the given pairs and returns `(added, removed)`.
fn toggle_all(d: &mut Diagram, pairs: &[(VertexId, VertexId)]) -> (i64, i64) {
    let (mut added, mut removed) = (0, 0);
    for &(a, b) in pairs {
        if toggle(d, a, b) {
            added += 1;
        } else {
            removed += 1;
        }
    }
    (added, removed)
}

fn add_phase(d: &mut Diagram, v: VertexId, alpha: Phase) {
    let p = d.kind(v).and_then(|k| k.phase()).expect("a spider");
    d.set_kind(v, VertexKind::ZSpider(p + alpha));
}

fn all_pairs(vs: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    let mut out = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            out.push((a, b));
        }
    }
    out
}

fn cross(xs: &[VertexId], ys: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    xs.iter().flat_map(|&x| ys.iter().map(move |&y| (x, y))).collect()
}

fn inst(label: String, diagram: Diagram, site: Site) -> Instance {
    Instance { label, diagram, site, direction: Direction::Forward }
}

fn h_link(d: &mut Diagram, a: VertexId, b: VertexId) -> VertexId {
    let h = d.add_vertex(VertexKind::Hadamard);
    d.add_edge(End::Vertex(a), End::Vertex(h));
    d.add_edge(End::Vertex(h), End::Vertex(b));
    h
}

/// Z spiders, one per phase in `phases`, each with one boundary leg.
fn open_nodes(d: &mut Diagram, phases: &[Phase]) -> Vec<VertexId> {
    phases
        .iter()
        .map(|&p| {
            let w = d.add_vertex(VertexKind::ZSpider(p));
            let o = d.add_output();
            d.add_edge(End::Vertex(w), o);
            w
        })
        .collect()
}

/// Deterministic phase patterns used by the instance generators.
fn phase_pattern(n: usize, seed: usize) -> Vec<Phase> {
    (0..n).map(|i| Phase::new(((seed * 7 + i * 3) % 4) as i64)).collect()
}

/// Every subset of `pairs`, as bit masks.
fn subsets(pairs: &[(VertexId, VertexId)]) -> impl Iterator<Item = Vec<(VertexId, VertexId)>> + '_ {
    (0..1u32 << pairs.len()).map(move |m| {
        pairs.iter().enumerate().filter(|(i, _)| m & (1 << i) != 0).map(|(_, p)| *p).collect()
    })
}

// ---------------------------------------------------------------------------

/// Two adjacent Hadamard nodes cancel.
/// Forward site `v=[h1,h2] e=[e]`; backward site `e=[e]`.
struct HCancel;

impl Rule for HCancel {
    fn id(&self) -> &'static str {
        "h-cancel"
    }
    fn origin(&self) -> Origin {
        Origin::Lemma
    }
    fn summary(&self) -> &'static str {
        "two adjacent Hadamard nodes cancel"
    }

    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site> {
        match direction {
            Direction::Forward => d
                .edges()
                .filter_map(|(e, (a, b))| {
                    let (a, b) = (a.vertex()?, b.vertex()?);
                    let is_h = |v| d.kind(v) == Some(VertexKind::Hadamard);
                    (a != b && is_h(a) && is_h(b)).then(|| Site::vertices(&[a, b]).with_edges(&[e]))
                })
                .collect(),
            Direction::Backward => d.edge_ids().into_iter().map(|e| Site::default().with_edges(&[e])).collect(),
        }
    }

    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String> {
        let e = edge(site, 0)?;
        let mut out = d.clone();
        match direction {
            Direction::Forward => {
                let (h1, h2) = (vertex(site, 0)?, vertex(site, 1)?);
                ensure(h1 != h2, "two Hadamard nodes needed")?;
                hadamard(d, h1)?;
                hadamard(d, h2)?;
                joins(d, e, h1, h2)?;
                if multiplicity(d, h1, h2) == 2 {
                    out.remove_vertex(h1);
                    out.remove_vertex(h2);
                    out.set_free_loops(d.free_loops() + 1);
                } else {
                    let t1 = through(d, h1, End::Vertex(h2)).ok_or("bad Hadamard node")?;
                    let t2 = through(d, h2, End::Vertex(h1)).ok_or("bad Hadamard node")?;
                    out.remove_vertex(h1);
                    out.remove_vertex(h2);
                    out.add_edge(t1, t2);
                }
            }
            Direction::Backward => {
                ensure(d.contains_edge(e), "edge does not exist")?;
                let (_, _, eb) = out.insert_on_edge(e, VertexKind::Hadamard);
                out.insert_on_edge(eb, VertexKind::Hadamard);
            }
        }
        Ok(out)
    }

    fn instances(&self, _max_legs: usize) -> Vec<Instance> {
        let mut out = Vec::new();
        let mut d = Diagram::hadamard_wire();
        let e = d.edge_ids()[1];
        d.insert_on_edge(e, VertexKind::Hadamard);
        let hs = d.vertex_ids();
        let mid = d.edges_between(End::Vertex(hs[0]), End::Vertex(hs[1]))[0];
        out.push(inst("wire".into(), d, Site::vertices(&[hs[0], hs[1]]).with_edges(&[mid])));
        let mut d = Diagram::empty();
        let a = d.add_vertex(VertexKind::Hadamard);
        let b = d.add_vertex(VertexKind::Hadamard);
        let e = d.add_edge(End::Vertex(a), End::Vertex(b));
        d.add_edge(End::Vertex(a), End::Vertex(b));
        out.push(inst("closed".into(), d, Site::vertices(&[a, b]).with_edges(&[e])));
        let mut d = Diagram::empty();
        let z = d.add_vertex(VertexKind::ZSpider(HALF));
        let a = d.add_vertex(VertexKind::Hadamard);
        let b = d.add_vertex(VertexKind::Hadamard);
        d.add_edge(End::Vertex(z), End::Vertex(a));
        let e = d.add_edge(End::Vertex(a), End::Vertex(b));
        d.add_edge(End::Vertex(b), End::Vertex(z));
        out.push(inst("loop on a spider".into(), d, Site::vertices(&[a, b]).with_edges(&[e])));
        let d = Diagram::identity(1);
        let e = d.edge_ids()[0];
        out.push(Instance {
            label: "insert".into(),
            diagram: d,
            site: Site::default().with_edges(&[e]),
            direction: Direction::Backward,
        });
        out
    }
}

// ---------------------------------------------------------------------------

/// A Hadamard self-loop on `Z(α)` is removed, giving `Z(α+π)` and `1/√2`.
/// Site `v=[u,h]`.
struct HLoop;

impl Rule for HLoop {
    fn colour_symmetric(&self) -> bool {
        false
    }
    fn id(&self) -> &'static str {
        "h-loop"
    }
    fn origin(&self) -> Origin {
        Origin::Checked
    }
    fn summary(&self) -> &'static str {
        "a Hadamard self-loop on Z(α) becomes Z(α+π) times 1/√2"
    }

    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site> {
        if direction == Direction::Backward {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (h, k) in d.vertices() {
            if k != VertexKind::Hadamard {
                continue;
            }
            let ns = d.neighbours(h);
            if let [End::Vertex(u), End::Vertex(w)] = ns[..] {
                if u == w && z_spider(d, u).is_ok() {
                    out.push(Site::vertices(&[u, h]));
                }
            }
        }
        out
    }

    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String> {
        forward_only(direction)?;
        let (u, h) = (vertex(site, 0)?, vertex(site, 1)?);
        let alpha = z_spider(d, u)?;
        hadamard(d, h)?;
        ensure(multiplicity(d, u, h) == 2, "the Hadamard node must form a loop on the spider")?;
        let mut out = d.clone();
        out.remove_vertex(h);
        out.set_kind(u, VertexKind::ZSpider(alpha + PI));
        add_scalar(&mut out, ExactScalar::new(-1, 0));
        Ok(out)
    }

    fn instances(&self, max_legs: usize) -> Vec<Instance> {
        let mut out = Vec::new();
        for alpha in Phase::ALL {
            for m in 0..=max_legs.saturating_sub(2) {
                let mut d = Diagram::empty();
                let u = d.add_vertex(VertexKind::ZSpider(alpha));
                legs(&mut d, u, m);
                let h = h_link(&mut d, u, u);
                out.push(inst(format!("α={alpha} legs={m}"), d, Site::vertices(&[u, h])));
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------

/// Two Hadamard edges between the same Z spiders are removed, leaving `★`.
/// Site `v=[u,w,h1,h2]`.
struct HHopf;

impl Rule for HHopf {
    fn colour_symmetric(&self) -> bool {
        false
    }
    fn id(&self) -> &'static str {
        "h-hopf"
    }
    fn origin(&self) -> Origin {
        Origin::Checked
    }
    fn summary(&self) -> &'static str {
        "two parallel Hadamard edges between Z spiders disconnect, leaving ★"
    }

    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site> {
        if direction == Direction::Backward {
            return Vec::new();
        }
        let mut out = Vec::new();
        let zs: Vec<VertexId> = spiders(d).into_iter().filter(|t| t.1 == Colour::Z).map(|t| t.0).collect();
        for (i, &u) in zs.iter().enumerate() {
            for &w in &zs[i + 1..] {
                let hs = h_edges(d, u, w);
                if hs.len() >= 2 {
                    out.push(Site::vertices(&[u, w, hs[0], hs[1]]));
                }
            }
        }
        out
    }

    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String> {
        forward_only(direction)?;
        let (u, w, h1, h2) = (vertex(site, 0)?, vertex(site, 1)?, vertex(site, 2)?, vertex(site, 3)?);
        distinct(&[u, w, h1, h2])?;
        z_spider(d, u)?;
        z_spider(d, w)?;
        for h in [h1, h2] {
            ensure(h_partner(d, u, h) == Some(w), "expected a Hadamard edge between the spiders")?;
        }
        let mut out = d.clone();
        out.remove_vertex(h1);
        out.remove_vertex(h2);
        out.add_star();
        Ok(out)
    }

    fn instances(&self, max_legs: usize) -> Vec<Instance> {
        let mut out = Vec::new();
        for (i, alpha) in Phase::ALL.into_iter().enumerate() {
            for beta in Phase::ALL {
                let mut d = Diagram::empty();
                let u = d.add_vertex(VertexKind::ZSpider(alpha));
                let w = d.add_vertex(VertexKind::ZSpider(beta));
                legs(&mut d, u, i % max_legs.max(1));
                legs(&mut d, w, 1);
                let h1 = h_link(&mut d, u, w);
                let h2 = h_link(&mut d, u, w);
                if i == 3 {
                    h_link(&mut d, u, w);
                }
                out.push(inst(format!("α={alpha} β={beta}"), d, Site::vertices(&[u, w, h1, h2])));
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------

/// An interior `Z(±π/2)` spider whose legs are all Hadamard edges is
/// removed by complementing the graph on its neighbours, which each gain
/// `∓π/2`. Site `v=[u]`.
struct LocalComplementation;

impl Rule for LocalComplementation {
    fn colour_symmetric(&self) -> bool {
        false
    }
    fn id(&self) -> &'static str {
        "lcomp"
    }
    fn origin(&self) -> Origin {
        Origin::Checked
    }
    fn summary(&self) -> &'static str {
        "removes an interior ±π/2 spider by local complementation"
    }

    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site> {
        if direction == Direction::Backward {
            return Vec::new();
        }
        spiders(d)
            .into_iter()
            .filter(|&(u, c, p)| c == Colour::Z && p.is_proper_clifford() && h_neighbours(d, u, None).is_ok())
            .map(|(u, _, _)| Site::vertices(&[u]))
            .filter(|s| self.rewrite(d, s, Direction::Forward).is_ok())
            .collect()
    }

    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String> {
        forward_only(direction)?;
        let u = vertex(site, 0)?;
        let alpha = z_spider(d, u)?;
        ensure(alpha.is_proper_clifford(), "the spider must have phase ±π/2")?;
        let ns = h_neighbours(d, u, None)?;
        let ws: Vec<VertexId> = ns.iter().map(|t| t.1).collect();
        let pairs = all_pairs(&ws);
        check_toggle(d, &pairs)?;
        let mut out = d.clone();
        for &(h, _) in &ns {
            out.remove_vertex(h);
        }
        out.remove_vertex(u);
        let (added, removed) = toggle_all(&mut out, &pairs);
        for &w in &ws {
            add_phase(&mut out, w, -alpha);
        }
        let r = 1 - ns.len() as i64 - removed + added;
        let s = if alpha == HALF { 1 } else { 7 };
        add_scalar(&mut out, ExactScalar::new(r, s));
        Ok(out)
    }

    fn instances(&self, _max_legs: usize) -> Vec<Instance> {
        let mut out = Vec::new();
        for alpha in [HALF, MINUS_HALF] {
            for k in 0..=3 {
                for seed in 0..2 {
                    let mut base = Diagram::empty();
                    let u = base.add_vertex(VertexKind::ZSpider(alpha));
                    let ws = open_nodes(&mut base, &phase_pattern(k, seed));
                    for &w in &ws {
                        h_link(&mut base, u, w);
                    }
                    for existing in subsets(&all_pairs(&ws)) {
                        let mut d = base.clone();
                        for (a, b) in &existing {
                            h_link(&mut d, *a, *b);
                        }
                        let label = format!("α={alpha} k={k} seed={seed} edges={}", existing.len());
                        out.push(inst(label, d, Site::vertices(&[u])));
                    }
                }
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------

/// Two interior Pauli spiders joined by a Hadamard edge are removed by
/// pivoting. Site `v=[u,v,h]`.
struct Pivot;

impl Rule for Pivot {
    fn colour_symmetric(&self) -> bool {
        false
    }
    fn id(&self) -> &'static str {
        "pivot"
    }
    fn origin(&self) -> Origin {
        Origin::Checked
    }
    fn summary(&self) -> &'static str {
        "removes two adjacent interior Pauli spiders by pivoting"
    }

    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site> {
        if direction == Direction::Backward {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (u, c, p) in spiders(d) {
            if c != Colour::Z || !p.is_pauli() {
                continue;
            }
            let Ok(ns) = h_neighbours(d, u, None) else { continue };
            for (h, w) in ns {
                if w > u {
                    let site = Site::vertices(&[u, w, h]);
                    if self.rewrite(d, &site, direction).is_ok() {
                        out.push(site);
                    }
                }
            }
        }
        out
    }

    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String> {
        forward_only(direction)?;
        let (u, v, h) = (vertex(site, 0)?, vertex(site, 1)?, vertex(site, 2)?);
        distinct(&[u, v, h])?;
        let (a, b) = (z_spider(d, u)?, z_spider(d, v)?);
        ensure(a.is_pauli() && b.is_pauli(), "both spiders must have phase 0 or π")?;
        ensure(h_partner(d, u, h) == Some(v), "the spiders must share the Hadamard edge")?;
        let nu = h_neighbours(d, u, None)?;
        let nv = h_neighbours(d, v, None)?;
        let su: BTreeSet<VertexId> = nu.iter().map(|t| t.1).filter(|&w| w != v).collect();
        let sv: BTreeSet<VertexId> = nv.iter().map(|t| t.1).filter(|&w| w != u).collect();
        let only_u: Vec<VertexId> = su.difference(&sv).copied().collect();
        let only_v: Vec<VertexId> = sv.difference(&su).copied().collect();
        let common: Vec<VertexId> = su.intersection(&sv).copied().collect();
        let mut pairs = cross(&only_u, &only_v);
        pairs.extend(cross(&only_u, &common));
        pairs.extend(cross(&only_v, &common));
        check_toggle(d, &pairs)?;
        let mut out = d.clone();
        let hs: BTreeSet<VertexId> = nu.iter().chain(&nv).map(|t| t.0).collect();
        for &x in &hs {
            out.remove_vertex(x);
        }
        out.remove_vertex(u);
        out.remove_vertex(v);
        let (added, removed) = toggle_all(&mut out, &pairs);
        for &w in &only_u {
            add_phase(&mut out, w, b);
        }
        for &w in &only_v {
            add_phase(&mut out, w, a);
        }
        for &w in &common {
            add_phase(&mut out, w, a + b + PI);
        }
        let r = 2 - hs.len() as i64 - removed + added;
        let s = if a == PI && b == PI { 4 } else { 0 };
        add_scalar(&mut out, ExactScalar::new(r, s));
        Ok(out)
    }

    fn instances(&self, _max_legs: usize) -> Vec<Instance> {
        let mut out = Vec::new();
        for a in [ZERO, PI] {
            for b in [ZERO, PI] {
                for (nu, nv, nc) in [(0, 0, 0), (1, 0, 0), (0, 1, 1), (1, 1, 0), (1, 1, 1), (2, 1, 0), (0, 0, 2)] {
                    let mut base = Diagram::empty();
                    let u = base.add_vertex(VertexKind::ZSpider(a));
                    let v = base.add_vertex(VertexKind::ZSpider(b));
                    let h = h_link(&mut base, u, v);
                    let phases = phase_pattern(nu + nv + nc, nu + 2 * nv);
                    let ws = open_nodes(&mut base, &phases);
                    for (i, &w) in ws.iter().enumerate() {
                        if i < nu || i >= nu + nv {
                            h_link(&mut base, u, w);
                        }
                        if i >= nu {
                            h_link(&mut base, v, w);
                        }
                    }
                    for existing in subsets(&all_pairs(&ws)) {
                        let mut d = base.clone();
                        for (x, y) in &existing {
                            h_link(&mut d, *x, *y);
                        }
                        let label = format!("a={a} b={b} U={nu} V={nv} C={nc} edges={}", existing.len());
                        out.push(inst(label, d, Site::vertices(&[u, v, h])));
                    }
                }
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------

/// The walk from `node` along leg `e` through single-qubit gates to the
/// boundary: the gates in order and the final boundary end.
pub(crate) fn boundary_chain(d: &Diagram, node: VertexId, e: EdgeId) -> Res<(Vec<VertexId>, End)> {
    let mut gates = Vec::new();
    let mut from = End::Vertex(node);
    let mut at = d.other_end(e, from).ok_or("the edge is not a leg of the node")?;
    ensure(d.edge(e).map(|(a, b)| a == from || b == from) == Some(true), "the edge is not a leg of the node")?;
    while let End::Vertex(g) = at {
        ensure(g != node && !gates.contains(&g), "the leg does not reach the boundary")?;
        ensure(d.degree(g) == 2, "the leg does not reach the boundary")?;
        gates.push(g);
        let next = through(d, g, from).ok_or("the leg does not reach the boundary")?;
        from = End::Vertex(g);
        at = next;
    }
    Ok((gates, at))
}

/// The matrix of the gates listed from the node outward.
fn chain_matrix(d: &Diagram, gates: &[VertexId]) -> ExactMatrix {
    gates.iter().fold(ExactMatrix::identity(2), |m, &g| gate_matrix(d.kind(g).unwrap()).matmul(&m))
}

/// Replaces `node`'s phase and the gates on its boundary leg `e` by the
/// canonical Euler word of their product, emitting the global phase.
/// Site `v=[node] e=[e]`.
struct LcChain;

impl Rule for LcChain {
    fn colour_symmetric(&self) -> bool {
        false
    }
    fn id(&self) -> &'static str {
        "lc-chain"
    }
    fn origin(&self) -> Origin {
        Origin::Checked
    }
    fn summary(&self) -> &'static str {
        "normalizes the node phase and the single-qubit gates on its boundary leg"
    }

    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site> {
        if direction == Direction::Backward {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (u, c, _) in spiders(d) {
            if c != Colour::Z {
                continue;
            }
            let mut es = d.incident(End::Vertex(u)).to_vec();
            es.dedup();
            for e in es {
                let site = Site::vertices(&[u]).with_edges(&[e]);
                if let Ok(next) = self.rewrite(d, &site, direction) {
                    if next != *d {
                        out.push(site);
                    }
                }
            }
        }
        out
    }

    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String> {
        forward_only(direction)?;
        let (u, e) = (vertex(site, 0)?, edge(site, 0)?);
        let a = z_spider(d, u)?;
        ensure(!d.is_self_loop(e), "the leg does not reach the boundary")?;
        let (gates, end) = boundary_chain(d, u, e)?;
        for &g in &gates {
            let k = d.kind(g).unwrap();
            ensure(k == VertexKind::Hadamard || k.is_spider(), "unexpected node on the leg")?;
        }
        let m = chain_matrix(d, &gates).matmul(&gate_matrix(VertexKind::ZSpider(a)));
        let (word, k) = canonical(&m).ok_or("the leg is not a Clifford unitary")?;
        let current: Vec<VertexKind> = gates.iter().map(|&g| d.kind(g).unwrap()).collect();
        if word.a == a && current == wire_gates(word) {
            return Ok(d.clone());
        }
        let mut out = d.clone();
        for &g in &gates {
            out.remove_vertex(g);
        }
        if gates.is_empty() {
            out.remove_edge(e);
        }
        out.set_kind(u, VertexKind::ZSpider(word.a));
        let mut prev = End::Vertex(u);
        for kind in wire_gates(word) {
            let g = out.add_vertex(kind);
            out.add_edge(prev, End::Vertex(g));
            prev = End::Vertex(g);
        }
        out.add_edge(prev, end);
        add_scalar(&mut out, ExactScalar::new(0, k as i64));
        Ok(out)
    }

    fn instances(&self, _max_legs: usize) -> Vec<Instance> {
        let mut kinds = vec![VertexKind::Hadamard];
        for p in Phase::ALL {
            kinds.push(VertexKind::ZSpider(p));
            kinds.push(VertexKind::XSpider(p));
        }
        let mut chains: Vec<Vec<VertexKind>> = vec![vec![]];
        chains.extend(kinds.iter().map(|&k| vec![k]));
        for &k1 in &kinds {
            for &k2 in &kinds {
                chains.push(vec![k1, k2]);
            }
        }
        chains.push(vec![VertexKind::Hadamard, VertexKind::XSpider(HALF), VertexKind::ZSpider(MINUS_HALF)]);
        let mut out = Vec::new();
        for (i, chain) in chains.iter().enumerate() {
            for a in Phase::ALL {
                let mut d = Diagram::new(1, 1);
                let u = d.add_vertex(VertexKind::ZSpider(a));
                if i % 3 == 0 {
                    d.add_edge(End::Input(0), End::Vertex(u));
                } else {
                    let w = d.add_vertex(VertexKind::ZSpider(Phase::new(i as i64)));
                    h_link(&mut d, u, w);
                    d.add_edge(End::Input(0), End::Vertex(w));
                }
                let mut prev = End::Vertex(u);
                let mut first = None;
                for &k in chain {
                    let g = d.add_vertex(k);
                    let e = d.add_edge(prev, End::Vertex(g));
                    first.get_or_insert(e);
                    prev = End::Vertex(g);
                }
                let last = d.add_edge(prev, End::Output(0));
                let e = first.unwrap_or(last);
                out.push(inst(format!("a={a} chain={i}"), d, Site::vertices(&[u]).with_edges(&[e])));
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------

/// Local complementation of a graph state at a boundary node `v`:
/// complements the Hadamard edges among its neighbours, adds `−π/2` to
/// each neighbour and puts `X(π/2)` on the boundary leg `e` next to `v`.
/// A phase on `v` moves onto the leg past the new gate. Site `v=[v] e=[e]`.
struct LocalComp;

impl Rule for LocalComp {
    fn colour_symmetric(&self) -> bool {
        false
    }
    fn id(&self) -> &'static str {
        "local-comp"
    }
    fn origin(&self) -> Origin {
        Origin::Checked
    }
    fn summary(&self) -> &'static str {
        "local complementation of a graph state at a boundary node"
    }

    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site> {
        if direction == Direction::Backward {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (u, c, _) in spiders(d) {
            if c != Colour::Z {
                continue;
            }
            let mut es = d.incident(End::Vertex(u)).to_vec();
            es.dedup();
            for e in es {
                let site = Site::vertices(&[u]).with_edges(&[e]);
                if self.rewrite(d, &site, direction).is_ok() {
                    out.push(site);
                }
            }
        }
        out
    }

    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String> {
        forward_only(direction)?;
        let (u, e) = (vertex(site, 0)?, edge(site, 0)?);
        let a = z_spider(d, u)?;
        ensure(!d.is_self_loop(e), "the leg does not reach the boundary")?;
        boundary_chain(d, u, e)?;
        let ns = h_neighbours(d, u, Some(e))?;
        let ws: Vec<VertexId> = ns.iter().map(|t| t.1).collect();
        let pairs = all_pairs(&ws);
        check_toggle(d, &pairs)?;
        let mut out = d.clone();
        let (added, removed) = toggle_all(&mut out, &pairs);
        for &w in &ws {
            add_phase(&mut out, w, MINUS_HALF);
        }
        out.set_kind(u, VertexKind::ZSpider(ZERO));
        let (_, ea, eb) = out.insert_on_edge(e, VertexKind::XSpider(HALF));
        let rest = if out.edge(ea).is_some_and(|(p, q)| p == End::Vertex(u) || q == End::Vertex(u)) { eb } else { ea };
        if !a.is_zero() {
            out.insert_on_edge(rest, VertexKind::ZSpider(a));
        }
        add_scalar(&mut out, ExactScalar::new(added - removed, 0));
        Ok(out)
    }

    fn instances(&self, _max_legs: usize) -> Vec<Instance> {
        let mut out = Vec::new();
        for a in [ZERO, HALF] {
            for k in 0..=3 {
                for seed in 0..2 {
                    let mut base = Diagram::empty();
                    let u = base.add_vertex(VertexKind::ZSpider(a));
                    let o = base.add_output();
                    // Both orientations of the leg edge.
                    let e = if seed == 0 { base.add_edge(End::Vertex(u), o) } else { base.add_edge(o, End::Vertex(u)) };
                    let ws = open_nodes(&mut base, &phase_pattern(k, seed + 1));
                    for &w in &ws {
                        h_link(&mut base, u, w);
                    }
                    for existing in subsets(&all_pairs(&ws)) {
                        let mut d = base.clone();
                        for (x, y) in &existing {
                            h_link(&mut d, *x, *y);
                        }
                        let label = format!("a={a} k={k} seed={seed} edges={}", existing.len());
                        out.push(inst(label, d, Site::vertices(&[u]).with_edges(&[e])));
                    }
                }
            }
        }
        out
    }
}
