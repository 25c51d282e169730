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

//! The axioms of the scaled calculus.
//!
//! Every rule is stated for a pattern colour `c` (site parameter), so the
//! colour-swapped rule is the same rule with `c` toggled. Scalar side
//! diagrams are part of the pattern: a rule that needs `⟨Z(0)|X(0)⟩` on
//! one side finds it among the isolated pairs of the diagram, and a rule
//! that produces one adds it.

use std::collections::BTreeSet;

use super::util::*;
use super::{Direction, Instance, Origin, Rule, Site};
use crate::diagram::{Colour, Diagram, EdgeId, End, VertexId, VertexKind};
use crate::phase::Phase;

pub(crate) fn primitives() -> Vec<Box<dyn Rule>> {
    vec![
        Box::new(SpiderFusion),
        Box::new(LoopRemoval),
        Box::new(Cup),
        Box::new(Bialgebra { scaled: true }),
        Box::new(Copy { scaled: true }),
        Box::new(ColourChange),
        Box::new(PiCopy),
        Box::new(PiCommutation),
        Box::new(Euler),
        Box::new(Hopf),
        Box::new(StarRule),
        Box::new(ZeroRule),
        Box::new(ZeroScalar),
    ]
}

pub(crate) fn negative_controls() -> Vec<Box<dyn Rule>> {
    vec![Box::new(Copy { scaled: false }), Box::new(Bialgebra { scaled: false })]
}

const COLOURS: [Colour; 2] = [Colour::Z, Colour::X];
const ZERO: Phase = Phase::ZERO;
const PI: Phase = Phase::PI;
const HALF: Phase = Phase::HALF_PI;
const MINUS_HALF: Phase = Phase::MINUS_HALF_PI;

fn inst(label: String, diagram: Diagram, site: Site, direction: Direction) -> Instance {
    Instance { label, diagram, site, direction }
}

fn v(d: &mut Diagram, colour: Colour, phase: Phase) -> VertexId {
    d.add_vertex(VertexKind::spider(colour, phase))
}

fn link(d: &mut Diagram, a: VertexId, b: VertexId) -> EdgeId {
    d.add_edge(End::Vertex(a), End::Vertex(b))
}

/// Checks `n` unit pairs `⟨c(0)|¬c(0)⟩` listed in the site from `from`.
fn take_unit_pairs(d: &Diagram, c: Colour, site: &Site, from: usize, n: usize) -> Res<Vec<VertexId>> {
    let mut out = Vec::new();
    for k in 0..n {
        let a = vertex(site, from + 2 * k)?;
        let b = vertex(site, from + 2 * k + 1)?;
        check_pair_in(d, c, a, b, ZERO, ZERO)?;
        out.push(a);
        out.push(b);
    }
    Ok(out)
}

/// The first `n` disjoint unit pairs avoiding `avoid`.
fn find_unit_pairs(d: &Diagram, c: Colour, n: usize, avoid: &[VertexId]) -> Option<Vec<VertexId>> {
    let mut used = avoid.to_vec();
    let mut out = Vec::new();
    for _ in 0..n {
        let (a, b) = find_pair_in(d, c, ZERO, ZERO, &used)?;
        used.extend([a, b]);
        out.extend([a, b]);
    }
    Some(out)
}

fn add_unit_pairs(d: &mut Diagram, c: Colour, n: usize) {
    for _ in 0..n {
        add_pair_in(d, c, ZERO, ZERO);
    }
}

/// Moves every listed leg occurrence of `from` onto `to`.
fn move_legs(d: &mut Diagram, legs: &[EdgeId], from: VertexId, to: VertexId) {
    for &e in legs {
        d.move_edge_end(e, End::Vertex(from), End::Vertex(to));
    }
}

/// Puts a new vertex on every leg occurrence of `u` except `skip`; a
/// self-loop receives one vertex per end.
fn decorate_legs(d: &mut Diagram, u: VertexId, kind: VertexKind, skip: Option<EdgeId>) {
    let mut edges: Vec<EdgeId> = d.incident(End::Vertex(u)).to_vec();
    edges.dedup();
    let edges: BTreeSet<EdgeId> = edges.into_iter().filter(|e| Some(*e) != skip).collect();
    for e in edges {
        if d.is_self_loop(e) {
            d.remove_edge(e);
            let a = d.add_vertex(kind);
            let b = d.add_vertex(kind);
            link(d, u, a);
            link(d, a, b);
            link(d, b, u);
        } else {
            d.insert_on_edge(e, kind);
        }
    }
}

// ---------------------------------------------------------------------------

/// Adjacent spiders of one colour fuse and their phases add.
///
/// Forward site `v=[u,w] e=[e]`: `w` merges into `u` along `e`.
/// Backward site `v=[u] e=[legs..] p=[β, modes..]`: a new spider of phase
/// `β` splits off `u`, taking the listed legs; mode 1 moves only one end
/// of a self-loop.
struct SpiderFusion;

impl Rule for SpiderFusion {
    fn id(&self) -> &'static str {
        "spider"
    }
    fn origin(&self) -> Origin {
        Origin::Primitive
    }
    fn summary(&self) -> &'static str {
        "adjacent spiders of one colour fuse; their phases add"
    }

    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site> {
        match direction {
            Direction::Forward => {
                let mut seen = BTreeSet::new();
                let mut out = Vec::new();
                for (e, (a, b)) in d.edges() {
                    let (Some(a), Some(b)) = (a.vertex(), b.vertex()) else { continue };
                    if a == b || !seen.insert((a.min(b), a.max(b))) {
                        continue;
                    }
                    if let (Ok((ca, _)), Ok((cb, _))) = (spider(d, a), spider(d, b)) {
                        if ca == cb {
                            out.push(Site::vertices(&[a.min(b), a.max(b)]).with_edges(&[e]));
                        }
                    }
                }
                out
            }
            Direction::Backward => spiders(d)
                .into_iter()
                .map(|(u, _, _)| Site::vertices(&[u]).with_params(&[0]))
                .collect(),
        }
    }

    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String> {
        let mut out = d.clone();
        match direction {
            Direction::Forward => {
                let (u, w, e) = (vertex(site, 0)?, vertex(site, 1)?, edge(site, 0)?);
                ensure(u != w, "cannot fuse a spider with itself")?;
                let (cu, pu) = spider(d, u)?;
                let (cw, pw) = spider(d, w)?;
                ensure(cu == cw, "spiders have different colours")?;
                joins(d, e, u, w)?;
                out.remove_edge(e);
                let legs = out.incident(End::Vertex(w)).to_vec();
                move_legs(&mut out, &legs, w, u);
                out.remove_vertex(w);
                out.set_kind(u, VertexKind::spider(cu, pu + pw));
            }
            Direction::Backward => {
                let u = vertex(site, 0)?;
                let (c, p) = spider(d, u)?;
                let beta = Phase::new(param_or(site, 0, 0));
                let w = out.add_vertex(VertexKind::spider(c, beta));
                out.set_kind(u, VertexKind::spider(c, p - beta));
                let mut listed = BTreeSet::new();
                for (i, &e) in site.edges.iter().enumerate() {
                    ensure(listed.insert(e), "legs must be listed once")?;
                    let (a, b) = d.edge(e).ok_or_else(|| format!("edge {e} does not exist"))?;
                    ensure(a == End::Vertex(u) || b == End::Vertex(u), "listed edge is not a leg")?;
                    let ends = if a == b && param_or(site, i + 1, 0) == 0 { 2 } else { 1 };
                    for _ in 0..ends {
                        out.move_edge_end(e, End::Vertex(u), End::Vertex(w));
                    }
                }
                link(&mut out, u, w);
            }
        }
        Ok(out)
    }

    fn instances(&self, max_legs: usize) -> Vec<Instance> {
        let mut out = Vec::new();
        let c = Colour::Z;
        for alpha in Phase::ALL {
            for beta in Phase::ALL {
                for m in 0..max_legs {
                    for n in 0..max_legs {
                        for k in 1..=2 {
                            let mut d = Diagram::empty();
                            let a = v(&mut d, c, alpha);
                            let b = v(&mut d, c, beta);
                            legs(&mut d, a, m);
                            let e = link(&mut d, a, b);
                            for _ in 1..k {
                                link(&mut d, a, b);
                            }
                            legs(&mut d, b, n);
                            let site = Site::vertices(&[a, b]).with_edges(&[e]);
                            let label = format!("α={alpha} β={beta} legs={m}+{n} edges={k}");
                            out.push(inst(label, d, site, Direction::Forward));
                        }
                    }
                }
            }
        }
        for alpha in Phase::ALL {
            for beta in Phase::ALL {
                for m in 0..=max_legs {
                    for mask in 0..(1u32 << m) {
                        let mut d = Diagram::empty();
                        let a = v(&mut d, c, alpha);
                        legs(&mut d, a, m);
                        let moved: Vec<EdgeId> = d
                            .incident(End::Vertex(a))
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| mask & (1 << i) != 0)
                            .map(|(_, e)| *e)
                            .collect();
                        let site = Site::vertices(&[a]).with_edges(&moved).with_params(&[beta.quarter_turns() as i64]);
                        let label = format!("unfuse α={alpha} β={beta} legs={m} moved={mask:b}");
                        out.push(inst(label, d, site, Direction::Backward));
                    }
                }
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------

/// A self-loop on a spider can be removed.
struct LoopRemoval;

impl Rule for LoopRemoval {
    fn id(&self) -> &'static str {
        "loop"
    }
    fn origin(&self) -> Origin {
        Origin::Primitive
    }
    fn summary(&self) -> &'static str {
        "a self-loop on a spider is removed"
    }

    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site> {
        let mut out = Vec::new();
        for (u, _, _) in spiders(d) {
            match direction {
                Direction::Forward => {
                    let mut loops: Vec<EdgeId> =
                        d.incident(End::Vertex(u)).iter().copied().filter(|&e| d.is_self_loop(e)).collect();
                    loops.dedup();
                    if let Some(&e) = loops.first() {
                        out.push(Site::vertices(&[u]).with_edges(&[e]));
                    }
                }
                Direction::Backward => out.push(Site::vertices(&[u])),
            }
        }
        out
    }

    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String> {
        let u = vertex(site, 0)?;
        spider(d, u)?;
        let mut out = d.clone();
        match direction {
            Direction::Forward => {
                let e = edge(site, 0)?;
                joins(d, e, u, u)?;
                out.remove_edge(e);
            }
            Direction::Backward => {
                link(&mut out, u, u);
            }
        }
        Ok(out)
    }

    fn instances(&self, max_legs: usize) -> Vec<Instance> {
        let mut out = Vec::new();
        for alpha in Phase::ALL {
            for m in 0..=max_legs.saturating_sub(2) {
                for k in 1..=2 {
                    let mut d = Diagram::empty();
                    let a = v(&mut d, Colour::Z, alpha);
                    legs(&mut d, a, m);
                    let e = link(&mut d, a, a);
                    for _ in 1..k {
                        link(&mut d, a, a);
                    }
                    let label = format!("α={alpha} legs={m} loops={k}");
                    out.push(inst(label, d.clone(), Site::vertices(&[a]).with_edges(&[e]), Direction::Forward));
                }
                let mut d = Diagram::empty();
                let a = v(&mut d, Colour::Z, alpha);
                legs(&mut d, a, m);
                out.push(inst(format!("add loop α={alpha} legs={m}"), d, Site::vertices(&[a]), Direction::Backward));
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------

/// A phase-free spider of degree two is a plain wire.
///
/// Forward site `v=[u]`. Backward site `e=[e] p=[c]` puts a spider of
/// colour `c` on edge `e`; `p=[c,1]` with no edge turns a free loop into
/// a spider with a self-loop.
struct Cup;

impl Rule for Cup {
    fn id(&self) -> &'static str {
        "cup"
    }
    fn origin(&self) -> Origin {
        Origin::Primitive
    }
    fn summary(&self) -> &'static str {
        "a phase-free spider with two legs is a plain wire"
    }
    fn colour_param(&self) -> Option<usize> {
        Some(0)
    }

    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site> {
        match direction {
            Direction::Forward => spiders(d)
                .into_iter()
                .filter(|&(u, _, p)| p.is_zero() && d.degree(u) == 2)
                .map(|(u, _, _)| Site::vertices(&[u]))
                .collect(),
            Direction::Backward => {
                let mut out = Vec::new();
                for c in COLOURS {
                    for e in d.edge_ids() {
                        out.push(Site::default().with_edges(&[e]).with_params(&[c.index() as i64]));
                    }
                    if d.free_loops() > 0 {
                        out.push(Site::default().with_params(&[c.index() as i64, 1]));
                    }
                }
                out
            }
        }
    }

    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String> {
        let mut out = d.clone();
        match direction {
            Direction::Forward => {
                let u = vertex(site, 0)?;
                let (_, p) = spider(d, u)?;
                ensure(p.is_zero() && d.degree(u) == 2, "needs a phase-free spider of degree two")?;
                out.splice_out(u);
            }
            Direction::Backward => {
                let c = colour_param(site, 0)?;
                if param_or(site, 1, 0) == 1 {
                    ensure(site.edges.is_empty(), "the loop form takes no edge")?;
                    ensure(d.free_loops() > 0, "no free loop to open")?;
                    out.set_free_loops(d.free_loops() - 1);
                    let u = v(&mut out, c, ZERO);
                    link(&mut out, u, u);
                } else {
                    let e = edge(site, 0)?;
                    ensure(d.contains_edge(e), "edge does not exist")?;
                    out.insert_on_edge(e, VertexKind::spider(c, ZERO));
                }
            }
        }
        Ok(out)
    }

    fn instances(&self, _max_legs: usize) -> Vec<Instance> {
        let c = Colour::Z;
        let mut out = Vec::new();
        let d = Diagram::spider(c, ZERO, 1, 1);
        let u = d.vertex_ids()[0];
        out.push(inst("through wire".into(), d.clone(), Site::vertices(&[u]), Direction::Forward));
        let d = Diagram::spider(c, ZERO, 0, 2);
        let u = d.vertex_ids()[0];
        out.push(inst("bent wire".into(), d, Site::vertices(&[u]), Direction::Forward));
        let mut d = Diagram::empty();
        let u = v(&mut d, c, ZERO);
        link(&mut d, u, u);
        out.push(inst("closed wire".into(), d, Site::vertices(&[u]), Direction::Forward));
        let d = Diagram::identity(1);
        let e = d.edge_ids()[0];
        out.push(inst("bare wire".into(), d, Site::default().with_edges(&[e]).with_params(&[0]), Direction::Backward));
        let d = Diagram::free_loop();
        out.push(inst("free loop".into(), d, Site::default().with_params(&[0, 1]), Direction::Backward));
        for alpha in Phase::ALL {
            let d = Diagram::z_state(alpha);
            let e = d.edge_ids()[0];
            out.push(inst(
                format!("on a leg of Z({alpha})"),
                d,
                Site::default().with_edges(&[e]).with_params(&[0]),
                Direction::Backward,
            ));
        }
        out
    }
}

// ---------------------------------------------------------------------------

/// Four phase-free spiders of degree three forming a 2×2 bipartite graph,
/// times `⟨Z(0)|X(0)⟩`, equal two spiders joined by one edge.
///
/// Forward site `v=[z1,z2,x1,x2,pz,px] e=[e11,e12,e21,e22] p=[c]` with
/// `eij` joining `zi` and `xj`; the `z` vertices have colour `c`.
/// Backward site `v=[a,b] e=[e] p=[c]`, `a` of colour `¬c` holding the
/// legs of the `z` vertices and `b` of colour `c`.
struct Bialgebra {
    scaled: bool,
}

impl Bialgebra {
    fn pair_count(&self) -> usize {
        usize::from(self.scaled)
    }
}

impl Rule for Bialgebra {
    fn id(&self) -> &'static str {
        if self.scaled {
            "bialgebra"
        } else {
            "bialgebra-unscaled"
        }
    }
    fn origin(&self) -> Origin {
        if self.scaled {
            Origin::Primitive
        } else {
            Origin::NegativeControl
        }
    }
    fn summary(&self) -> &'static str {
        "the bialgebra law, with one ⟨Z(0)|X(0)⟩ on the four-spider side"
    }
    fn colour_param(&self) -> Option<usize> {
        Some(0)
    }

    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site> {
        let mut out = Vec::new();
        for c in COLOURS {
            let cp = c.index() as i64;
            let is = |v: VertexId, col: Colour| {
                d.kind(v) == Some(VertexKind::spider(col, ZERO)) && d.degree(v) == 3
            };
            match direction {
                Direction::Forward => {
                    for (z1, _, _) in spiders(d) {
                        if !is(z1, c) {
                            continue;
                        }
                        let xs: Vec<VertexId> = d
                            .neighbours(z1)
                            .into_iter()
                            .filter_map(End::vertex)
                            .filter(|&x| is(x, c.flipped()) && multiplicity(d, z1, x) == 1)
                            .collect();
                        for (i, &x1) in xs.iter().enumerate() {
                            for &x2 in &xs[i + 1..] {
                                let z2s: Vec<VertexId> = d
                                    .neighbours(x1)
                                    .into_iter()
                                    .filter_map(End::vertex)
                                    .filter(|&z2| {
                                        z2 > z1
                                            && is(z2, c)
                                            && multiplicity(d, z2, x1) == 1
                                            && multiplicity(d, z2, x2) == 1
                                    })
                                    .collect();
                                for z2 in z2s {
                                    let core = [z1, z2, x1, x2];
                                    let Some(pairs) = find_unit_pairs(d, c, self.pair_count(), &core) else {
                                        continue;
                                    };
                                    let e = |a: VertexId, b: VertexId| d.edges_between(End::Vertex(a), End::Vertex(b))[0];
                                    let mut vs = core.to_vec();
                                    vs.extend(pairs);
                                    out.push(
                                        Site::vertices(&vs)
                                            .with_edges(&[e(z1, x1), e(z1, x2), e(z2, x1), e(z2, x2)])
                                            .with_params(&[cp]),
                                    );
                                }
                            }
                        }
                    }
                }
                Direction::Backward => {
                    for (e, (a, b)) in d.edges() {
                        let (Some(a), Some(b)) = (a.vertex(), b.vertex()) else { continue };
                        for (a, b) in [(a, b), (b, a)] {
                            if a != b && is(a, c.flipped()) && is(b, c) {
                                out.push(Site::vertices(&[a, b]).with_edges(&[e]).with_params(&[cp]));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String> {
        let c = colour_param(site, 0)?;
        let mut out = d.clone();
        match direction {
            Direction::Forward => {
                let zs = [vertex(site, 0)?, vertex(site, 1)?];
                let xs = [vertex(site, 2)?, vertex(site, 3)?];
                let mut all = vec![zs[0], zs[1], xs[0], xs[1]];
                let pairs = take_unit_pairs(d, c, site, 4, self.pair_count())?;
                all.extend(&pairs);
                distinct(&all)?;
                for (col, vs) in [(c, zs), (c.flipped(), xs)] {
                    for u in vs {
                        ensure(d.kind(u) == Some(VertexKind::spider(col, ZERO)), "expected a phase-free spider")?;
                        ensure(d.degree(u) == 3, "expected degree three")?;
                    }
                }
                let es = [edge(site, 0)?, edge(site, 1)?, edge(site, 2)?, edge(site, 3)?];
                let distinct_edges: BTreeSet<EdgeId> = es.iter().copied().collect();
                ensure(distinct_edges.len() == 4, "the four edges must differ")?;
                joins(d, es[0], zs[0], xs[0])?;
                joins(d, es[1], zs[0], xs[1])?;
                joins(d, es[2], zs[1], xs[0])?;
                joins(d, es[3], zs[1], xs[1])?;
                for e in es {
                    out.remove_edge(e);
                }
                let a = v(&mut out, c.flipped(), ZERO);
                let b = v(&mut out, c, ZERO);
                for z in zs {
                    let l = out.incident(End::Vertex(z)).to_vec();
                    move_legs(&mut out, &l, z, a);
                }
                for x in xs {
                    let l = out.incident(End::Vertex(x)).to_vec();
                    move_legs(&mut out, &l, x, b);
                }
                for u in all {
                    out.remove_vertex(u);
                }
                link(&mut out, a, b);
            }
            Direction::Backward => {
                let (a, b, e) = (vertex(site, 0)?, vertex(site, 1)?, edge(site, 0)?);
                ensure(a != b, "needs two spiders")?;
                ensure(d.kind(a) == Some(VertexKind::spider(c.flipped(), ZERO)), "bad first spider")?;
                ensure(d.kind(b) == Some(VertexKind::spider(c, ZERO)), "bad second spider")?;
                ensure(d.degree(a) == 3 && d.degree(b) == 3, "expected degree three")?;
                joins(d, e, a, b)?;
                out.remove_edge(e);
                let z1 = v(&mut out, c, ZERO);
                let z2 = v(&mut out, c, ZERO);
                let x1 = v(&mut out, c.flipped(), ZERO);
                let x2 = v(&mut out, c.flipped(), ZERO);
                let la = out.incident(End::Vertex(a)).to_vec();
                out.move_edge_end(la[0], End::Vertex(a), End::Vertex(z1));
                out.move_edge_end(la[1], End::Vertex(a), End::Vertex(z2));
                let lb = out.incident(End::Vertex(b)).to_vec();
                out.move_edge_end(lb[0], End::Vertex(b), End::Vertex(x1));
                out.move_edge_end(lb[1], End::Vertex(b), End::Vertex(x2));
                out.remove_vertex(a);
                out.remove_vertex(b);
                for (z, x) in [(z1, x1), (z1, x2), (z2, x1), (z2, x2)] {
                    link(&mut out, z, x);
                }
                add_unit_pairs(&mut out, c, self.pair_count());
            }
        }
        Ok(out)
    }

    fn instances(&self, _max_legs: usize) -> Vec<Instance> {
        let c = Colour::Z;
        let mut out = Vec::new();
        for joined in [false, true] {
            let mut d = Diagram::empty();
            let z1 = v(&mut d, c, ZERO);
            let z2 = v(&mut d, c, ZERO);
            let x1 = v(&mut d, c.flipped(), ZERO);
            let x2 = v(&mut d, c.flipped(), ZERO);
            let es = [link(&mut d, z1, x1), link(&mut d, z1, x2), link(&mut d, z2, x1), link(&mut d, z2, x2)];
            if joined {
                link(&mut d, z1, z2);
            } else {
                legs(&mut d, z1, 1);
                let i = d.add_input();
                d.add_edge(i, End::Vertex(z2));
            }
            legs(&mut d, x1, 1);
            legs(&mut d, x2, 1);
            let mut vs = vec![z1, z2, x1, x2];
            if self.scaled {
                let (pz, px) = d.add_pair(ZERO, ZERO);
                vs.extend([pz, px]);
            }
            let site = Site::vertices(&vs).with_edges(&es).with_params(&[0]);
            out.push(inst(format!("K2,2 joined={joined}"), d, site, Direction::Forward));
        }
        let mut d = Diagram::empty();
        let a = v(&mut d, c.flipped(), ZERO);
        let b = v(&mut d, c, ZERO);
        let e = link(&mut d, a, b);
        legs(&mut d, a, 2);
        legs(&mut d, b, 2);
        out.push(inst("two spiders".into(), d, Site::vertices(&[a, b]).with_edges(&[e]).with_params(&[0]), Direction::Backward));
        out
    }
}

// ---------------------------------------------------------------------------

/// A phase-free state of colour `¬c` plugged into a phase-free spider of
/// colour `c` with three legs, times `⟨Z(0)|X(0)⟩`, equals two such states.
///
/// Forward site `v=[s,z,pz,px] e=[e] p=[c]`. Backward site `v=[s1,s2] p=[c]`.
struct Copy {
    scaled: bool,
}

impl Rule for Copy {
    fn id(&self) -> &'static str {
        if self.scaled {
            "copy"
        } else {
            "copy-unscaled"
        }
    }
    fn origin(&self) -> Origin {
        if self.scaled {
            Origin::Primitive
        } else {
            Origin::NegativeControl
        }
    }
    fn summary(&self) -> &'static str {
        "a phase-free state is copied through a spider of the other colour, with one ⟨Z(0)|X(0)⟩"
    }
    fn colour_param(&self) -> Option<usize> {
        Some(0)
    }

    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site> {
        let n_pairs = usize::from(self.scaled);
        let mut out = Vec::new();
        for c in COLOURS {
            let cp = c.index() as i64;
            let states: Vec<VertexId> = spiders(d)
                .into_iter()
                .filter(|&(s, col, p)| col == c.flipped() && p.is_zero() && d.degree(s) == 1)
                .map(|(s, _, _)| s)
                .collect();
            match direction {
                Direction::Forward => {
                    for &s in &states {
                        let e = d.incident(End::Vertex(s))[0];
                        let Some(End::Vertex(z)) = d.other_end(e, End::Vertex(s)) else { continue };
                        if d.kind(z) != Some(VertexKind::spider(c, ZERO)) || d.degree(z) != 3 {
                            continue;
                        }
                        if let Some(pairs) = find_unit_pairs(d, c, n_pairs, &[s, z]) {
                            let mut vs = vec![s, z];
                            vs.extend(pairs);
                            out.push(Site::vertices(&vs).with_edges(&[e]).with_params(&[cp]));
                        }
                    }
                }
                Direction::Backward => {
                    for (i, &s1) in states.iter().enumerate() {
                        for &s2 in &states[i + 1..] {
                            out.push(Site::vertices(&[s1, s2]).with_params(&[cp]));
                        }
                    }
                }
            }
        }
        out
    }

    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String> {
        let c = colour_param(site, 0)?;
        let state = VertexKind::spider(c.flipped(), ZERO);
        let is_state = |s: VertexId| d.kind(s) == Some(state) && d.degree(s) == 1;
        let mut out = d.clone();
        match direction {
            Direction::Forward => {
                let (s, z, e) = (vertex(site, 0)?, vertex(site, 1)?, edge(site, 0)?);
                let pairs = take_unit_pairs(d, c, site, 2, usize::from(self.scaled))?;
                let mut all = vec![s, z];
                all.extend(&pairs);
                distinct(&all)?;
                ensure(is_state(s), "expected a phase-free state of the other colour")?;
                ensure(d.kind(z) == Some(VertexKind::spider(c, ZERO)) && d.degree(z) == 3, "expected a phase-free spider with three legs")?;
                joins(d, e, s, z)?;
                out.remove_edge(e);
                for leg in out.incident(End::Vertex(z)).to_vec() {
                    let t = out.add_vertex(state);
                    out.move_edge_end(leg, End::Vertex(z), End::Vertex(t));
                }
                for u in all {
                    out.remove_vertex(u);
                }
            }
            Direction::Backward => {
                let (s1, s2) = (vertex(site, 0)?, vertex(site, 1)?);
                distinct(&[s1, s2])?;
                ensure(is_state(s1) && is_state(s2), "expected two phase-free states of the other colour")?;
                let z = v(&mut out, c, ZERO);
                for s in [s1, s2] {
                    let leg = out.incident(End::Vertex(s))[0];
                    out.move_edge_end(leg, End::Vertex(s), End::Vertex(z));
                }
                out.remove_vertex(s1);
                out.remove_vertex(s2);
                let s = out.add_vertex(state);
                link(&mut out, z, s);
                add_unit_pairs(&mut out, c, usize::from(self.scaled));
            }
        }
        Ok(out)
    }

    fn instances(&self, _max_legs: usize) -> Vec<Instance> {
        let c = Colour::Z;
        let mut out = Vec::new();
        for looped in [false, true] {
            let mut d = Diagram::empty();
            let s = v(&mut d, c.flipped(), ZERO);
            let z = v(&mut d, c, ZERO);
            let e = link(&mut d, s, z);
            if looped {
                link(&mut d, z, z);
            } else {
                legs(&mut d, z, 2);
            }
            let mut vs = vec![s, z];
            if self.scaled {
                let (pz, px) = d.add_pair(ZERO, ZERO);
                vs.extend([pz, px]);
            }
            out.push(inst(format!("copy looped={looped}"), d, Site::vertices(&vs).with_edges(&[e]).with_params(&[0]), Direction::Forward));
        }
        let mut d = Diagram::empty();
        let s1 = v(&mut d, c.flipped(), ZERO);
        let s2 = v(&mut d, c.flipped(), ZERO);
        legs(&mut d, s1, 1);
        legs(&mut d, s2, 1);
        out.push(inst("two states".into(), d, Site::vertices(&[s1, s2]).with_params(&[0]), Direction::Backward));
        out
    }
}

// ---------------------------------------------------------------------------

/// A spider equals the spider of the other colour with a Hadamard node on
/// every leg. Site `v=[u]` in both directions.
struct ColourChange;

impl Rule for ColourChange {
    fn id(&self) -> &'static str {
        "colour"
    }
    fn origin(&self) -> Origin {
        Origin::Primitive
    }
    fn summary(&self) -> &'static str {
        "a spider changes colour when a Hadamard node is put on each leg"
    }

    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site> {
        spiders(d)
            .into_iter()
            .filter(|&(u, _, _)| direction == Direction::Forward || colour_back_legs(d, u).is_ok())
            .map(|(u, _, _)| Site::vertices(&[u]))
            .collect()
    }

    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String> {
        let u = vertex(site, 0)?;
        let (c, p) = spider(d, u)?;
        let mut out = d.clone();
        out.set_kind(u, VertexKind::spider(c.flipped(), p));
        match direction {
            Direction::Forward => decorate_legs(&mut out, u, VertexKind::Hadamard, None),
            Direction::Backward => {
                for h in colour_back_legs(d, u)? {
                    out.splice_out(h);
                }
            }
        }
        Ok(out)
    }

    fn instances(&self, max_legs: usize) -> Vec<Instance> {
        let mut out = Vec::new();
        for alpha in Phase::ALL {
            for m in 0..=max_legs {
                let mut d = Diagram::empty();
                let u = v(&mut d, Colour::Z, alpha);
                legs(&mut d, u, m);
                out.push(inst(format!("α={alpha} legs={m}"), d, Site::vertices(&[u]), Direction::Forward));
                let mut d = Diagram::empty();
                let u = v(&mut d, Colour::Z, alpha);
                for i in 0..m {
                    let h = d.add_vertex(VertexKind::Hadamard);
                    link(&mut d, u, h);
                    let end = if i % 2 == 0 { d.add_output() } else { d.add_input() };
                    d.add_edge(End::Vertex(h), end);
                }
                out.push(inst(format!("back α={alpha} legs={m}"), d, Site::vertices(&[u]), Direction::Backward));
            }
            let mut d = Diagram::empty();
            let u = v(&mut d, Colour::Z, alpha);
            link(&mut d, u, u);
            legs(&mut d, u, 1);
            out.push(inst(format!("self-loop α={alpha}"), d, Site::vertices(&[u]), Direction::Forward));
        }
        out
    }
}

/// Hadamard nodes on the legs of `u`, one per leg and all distinct.
fn colour_back_legs(d: &Diagram, u: VertexId) -> Res<Vec<VertexId>> {
    let mut hs = Vec::new();
    for end in d.neighbours(u) {
        let h = end.vertex().ok_or("a leg reaches the boundary")?;
        hadamard(d, h)?;
        ensure(!hs.contains(&h), "two legs share a Hadamard node")?;
        hs.push(h);
    }
    Ok(hs)
}

// ---------------------------------------------------------------------------

/// A π spider of colour `¬c` on one leg of a phase-free spider of colour
/// `c` moves to all the other legs.
///
/// Forward site `v=[z,p] e=[e] p=[c]`, `e` joining `z` and the π node `p`.
/// Backward site `v=[z] e=[l] p=[c]`: every leg of `z` except `l` carries
/// a π node; they are replaced by one π node on `l`.
struct PiCopy;

impl Rule for PiCopy {
    fn id(&self) -> &'static str {
        "pi-copy"
    }
    fn origin(&self) -> Origin {
        Origin::Primitive
    }
    fn summary(&self) -> &'static str {
        "a π spider is copied through a phase-free spider of the other colour"
    }
    fn colour_param(&self) -> Option<usize> {
        Some(0)
    }

    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site> {
        let mut out = Vec::new();
        for c in COLOURS {
            let cp = c.index() as i64;
            for (z, col, p) in spiders(d) {
                if col != c || !p.is_zero() {
                    continue;
                }
                let mut legs_z = d.incident(End::Vertex(z)).to_vec();
                legs_z.dedup();
                for e in legs_z {
                    let Some(End::Vertex(t)) = d.other_end(e, End::Vertex(z)) else {
                        if direction == Direction::Backward {
                            let site = Site::vertices(&[z]).with_edges(&[e]).with_params(&[cp]);
                            if self.rewrite(d, &site, direction).is_ok() {
                                out.push(site);
                            }
                        }
                        continue;
                    };
                    let site = match direction {
                        Direction::Forward => Site::vertices(&[z, t]).with_edges(&[e]).with_params(&[cp]),
                        Direction::Backward => Site::vertices(&[z]).with_edges(&[e]).with_params(&[cp]),
                    };
                    if self.rewrite(d, &site, direction).is_ok() {
                        out.push(site);
                    }
                }
            }
        }
        out
    }

    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String> {
        let c = colour_param(site, 0)?;
        let z = vertex(site, 0)?;
        ensure(d.kind(z) == Some(VertexKind::spider(c, ZERO)), "expected a phase-free spider")?;
        let pi = VertexKind::spider(c.flipped(), PI);
        let mut out = d.clone();
        match direction {
            Direction::Forward => {
                let (p, e) = (vertex(site, 1)?, edge(site, 0)?);
                ensure(z != p, "distinct vertices needed")?;
                ensure(d.kind(p) == Some(pi) && d.degree(p) == 2, "expected a π spider with two legs")?;
                joins(d, e, z, p)?;
                ensure(multiplicity(d, z, p) == 1, "the π spider must sit on one leg")?;
                let t = through(d, p, End::Vertex(z)).ok_or("bad π spider")?;
                out.remove_vertex(p);
                let kept = out.add_edge(End::Vertex(z), t);
                decorate_legs(&mut out, z, pi, Some(kept));
            }
            Direction::Backward => {
                let l = edge(site, 0)?;
                let (a, b) = d.edge(l).ok_or("edge does not exist")?;
                ensure(a != b && (a == End::Vertex(z) || b == End::Vertex(z)), "target must be a leg of the spider")?;
                let target = d.other_end(l, End::Vertex(z)).unwrap();
                let mut ps = Vec::new();
                for &leg in outer_legs(d, z, &[l]).iter() {
                    let p = d.other_end(leg, End::Vertex(z)).and_then(End::vertex).ok_or("a leg reaches the boundary")?;
                    ensure(d.kind(p) == Some(pi) && d.degree(p) == 2, "every other leg needs a π spider")?;
                    ensure(!ps.contains(&p) && End::Vertex(p) != target, "π spiders must be distinct")?;
                    ps.push(p);
                }
                for p in ps {
                    out.splice_out(p);
                }
                out.insert_on_edge(l, pi);
            }
        }
        Ok(out)
    }

    fn instances(&self, max_legs: usize) -> Vec<Instance> {
        let c = Colour::Z;
        let pi = VertexKind::spider(c.flipped(), PI);
        let mut out = Vec::new();
        for m in 0..max_legs {
            let mut d = Diagram::empty();
            let z = v(&mut d, c, ZERO);
            let p = d.add_vertex(pi);
            let e = link(&mut d, z, p);
            legs(&mut d, p, 1);
            legs(&mut d, z, m);
            out.push(inst(format!("legs={m}"), d, Site::vertices(&[z, p]).with_edges(&[e]).with_params(&[0]), Direction::Forward));

            let mut d = Diagram::empty();
            let z = v(&mut d, c, ZERO);
            let o = d.add_output();
            let l = d.add_edge(End::Vertex(z), o);
            for _ in 0..m {
                let p = d.add_vertex(pi);
                link(&mut d, z, p);
                legs(&mut d, p, 1);
            }
            out.push(inst(format!("back legs={m}"), d, Site::vertices(&[z]).with_edges(&[l]).with_params(&[0]), Direction::Backward));
        }
        let mut d = Diagram::empty();
        let z = v(&mut d, c, ZERO);
        let p = d.add_vertex(pi);
        let e = link(&mut d, z, p);
        legs(&mut d, p, 1);
        link(&mut d, z, z);
        out.push(inst("self-loop".into(), d, Site::vertices(&[z, p]).with_edges(&[e]).with_params(&[0]), Direction::Forward));
        out
    }
}

// ---------------------------------------------------------------------------

/// A π spider of colour `¬c` passes through a phase spider `α` of colour
/// `c` on a wire, negating `α`; `⟨Z(0)|X(0)⟩` on the left becomes the
/// phase scalar `⟨Z(α)|X(π)⟩` on the right.
///
/// Forward site `v=[p,q,pz,px] e=[e] p=[c]` with `p` the π node and `q`
/// the phase node. Backward site `v=[q,p,sz,sx] e=[e] p=[c]` with `q` the
/// phase node `γ`, `p` the π node and `(sz,sx)` the scalar for `α = −γ`.
struct PiCommutation;

impl Rule for PiCommutation {
    fn id(&self) -> &'static str {
        "pi-commute"
    }
    fn origin(&self) -> Origin {
        Origin::Primitive
    }
    fn summary(&self) -> &'static str {
        "a π spider commutes past a phase spider, negating its phase and emitting ⟨Z(α)|X(π)⟩"
    }
    fn colour_param(&self) -> Option<usize> {
        Some(0)
    }

    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site> {
        let mut out = Vec::new();
        for c in COLOURS {
            let cp = c.index() as i64;
            for (e, (a, b)) in d.edges() {
                let (Some(a), Some(b)) = (a.vertex(), b.vertex()) else { continue };
                for (x, y) in [(a, b), (b, a)] {
                    let (first, second) = match direction {
                        Direction::Forward => (x, y),
                        Direction::Backward => (y, x),
                    };
                    // first = π node, second = phase node
                    if d.kind(first) != Some(VertexKind::spider(c.flipped(), PI)) {
                        continue;
                    }
                    let Ok(alpha) = spider_of(d, second, c) else { continue };
                    let (want_a, want_b) = match direction {
                        Direction::Forward => (ZERO, ZERO),
                        Direction::Backward => (-alpha, PI),
                    };
                    let Some((sz, sx)) = find_pair_in(d, c, want_a, want_b, &[first, second]) else { continue };
                    let vs = match direction {
                        Direction::Forward => [first, second, sz, sx],
                        Direction::Backward => [second, first, sz, sx],
                    };
                    let site = Site::vertices(&vs).with_edges(&[e]).with_params(&[cp]);
                    if self.rewrite(d, &site, direction).is_ok() {
                        out.push(site);
                    }
                }
            }
        }
        out
    }

    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String> {
        let c = colour_param(site, 0)?;
        let e = edge(site, 0)?;
        let (sz, sx) = (vertex(site, 2)?, vertex(site, 3)?);
        let (p, q) = match direction {
            Direction::Forward => (vertex(site, 0)?, vertex(site, 1)?),
            Direction::Backward => (vertex(site, 1)?, vertex(site, 0)?),
        };
        distinct(&[p, q, sz, sx])?;
        ensure(d.kind(p) == Some(VertexKind::spider(c.flipped(), PI)), "expected a π spider")?;
        let alpha = spider_of(d, q, c)?;
        ensure(d.degree(p) == 2 && d.degree(q) == 2, "both nodes must sit on a wire")?;
        joins(d, e, p, q)?;
        ensure(multiplicity(d, p, q) == 1, "the nodes must be joined once")?;
        let mut out = d.clone();
        out.remove_vertex(sz);
        out.remove_vertex(sx);
        match direction {
            Direction::Forward => {
                check_pair_in(d, c, sz, sx, ZERO, ZERO)?;
                add_pair_in(&mut out, c, alpha, PI);
            }
            Direction::Backward => {
                check_pair_in(d, c, sz, sx, -alpha, PI)?;
                add_pair_in(&mut out, c, ZERO, ZERO);
            }
        }
        out.set_kind(p, VertexKind::spider(c, -alpha));
        out.set_kind(q, VertexKind::spider(c.flipped(), PI));
        Ok(out)
    }

    fn instances(&self, _max_legs: usize) -> Vec<Instance> {
        let c = Colour::Z;
        let mut out = Vec::new();
        for alpha in Phase::ALL {
            let mut d = Diagram::new(1, 1);
            let p = v(&mut d, c.flipped(), PI);
            let q = v(&mut d, c, alpha);
            d.add_edge(End::Input(0), End::Vertex(p));
            let e = link(&mut d, p, q);
            d.add_edge(End::Vertex(q), End::Output(0));
            let mut fwd = d.clone();
            let (sz, sx) = fwd.add_pair(ZERO, ZERO);
            out.push(inst(format!("α={alpha}"), fwd, Site::vertices(&[p, q, sz, sx]).with_edges(&[e]).with_params(&[0]), Direction::Forward));
            let mut bwd = d;
            let (sz, sx) = bwd.add_pair(-alpha, PI);
            out.push(inst(format!("back γ={alpha}"), bwd, Site::vertices(&[q, p, sz, sx]).with_edges(&[e]).with_params(&[0]), Direction::Backward));
        }
        out
    }
}

// ---------------------------------------------------------------------------

/// A Hadamard node times two `⟨Z(0)|X(0)⟩` equals the chain
/// `Z(π/2)–X(π/2)–Z(π/2)` times `⟨Z(−π/2)|X(−π/2)⟩`.
///
/// Forward site `v=[h,pz1,px1,pz2,px2] p=[c]`. Backward site
/// `v=[a,m,b,sz,sx] e=[e1,e2] p=[c]`, the chain `a–m–b` joined by `e1`, `e2`.
struct Euler;

impl Rule for Euler {
    fn id(&self) -> &'static str {
        "euler"
    }
    fn origin(&self) -> Origin {
        Origin::Primitive
    }
    fn summary(&self) -> &'static str {
        "H·⟨Z(0)|X(0)⟩² equals Z(π/2)X(π/2)Z(π/2)·⟨Z(−π/2)|X(−π/2)⟩"
    }
    fn colour_param(&self) -> Option<usize> {
        Some(0)
    }

    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site> {
        let mut out = Vec::new();
        for c in COLOURS {
            let cp = c.index() as i64;
            match direction {
                Direction::Forward => {
                    for (h, k) in d.vertices() {
                        if k != VertexKind::Hadamard {
                            continue;
                        }
                        if let Some(pairs) = find_unit_pairs(d, c, 2, &[h]) {
                            let mut vs = vec![h];
                            vs.extend(pairs);
                            out.push(Site::vertices(&vs).with_params(&[cp]));
                        }
                    }
                }
                Direction::Backward => {
                    for (m, col, p) in spiders(d) {
                        if col != c.flipped() || p != HALF || d.degree(m) != 2 {
                            continue;
                        }
                        let inc = d.incident(End::Vertex(m)).to_vec();
                        let ends: Vec<Option<VertexId>> =
                            inc.iter().map(|&e| d.other_end(e, End::Vertex(m)).and_then(End::vertex)).collect();
                        let (Some(a), Some(b)) = (ends[0], ends[1]) else { continue };
                        if a > b {
                            continue;
                        }
                        let Some((sz, sx)) = find_pair_in(d, c, MINUS_HALF, MINUS_HALF, &[a, m, b]) else { continue };
                        let site = Site::vertices(&[a, m, b, sz, sx]).with_edges(&[inc[0], inc[1]]).with_params(&[cp]);
                        if self.rewrite(d, &site, direction).is_ok() {
                            out.push(site);
                        }
                    }
                }
            }
        }
        out
    }

    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String> {
        let c = colour_param(site, 0)?;
        let mut out = d.clone();
        match direction {
            Direction::Forward => {
                let h = vertex(site, 0)?;
                hadamard(d, h)?;
                let pairs = take_unit_pairs(d, c, site, 1, 2)?;
                let mut all = vec![h];
                all.extend(&pairs);
                distinct(&all)?;
                let inc = d.incident(End::Vertex(h)).to_vec();
                let t1 = d.other_end(inc[0], End::Vertex(h)).unwrap();
                let t2 = d.other_end(inc[1], End::Vertex(h)).unwrap();
                for u in all {
                    out.remove_vertex(u);
                }
                let a = v(&mut out, c, HALF);
                let m = v(&mut out, c.flipped(), HALF);
                let b = v(&mut out, c, HALF);
                out.add_edge(t1, End::Vertex(a));
                link(&mut out, a, m);
                link(&mut out, m, b);
                out.add_edge(End::Vertex(b), t2);
                add_pair_in(&mut out, c, MINUS_HALF, MINUS_HALF);
            }
            Direction::Backward => {
                let (a, m, b) = (vertex(site, 0)?, vertex(site, 1)?, vertex(site, 2)?);
                let (sz, sx) = (vertex(site, 3)?, vertex(site, 4)?);
                distinct(&[a, m, b, sz, sx])?;
                for (u, col) in [(a, c), (m, c.flipped()), (b, c)] {
                    ensure(d.kind(u) == Some(VertexKind::spider(col, HALF)), "expected a π/2 spider")?;
                    ensure(d.degree(u) == 2, "chain nodes must have degree two")?;
                }
                joins(d, edge(site, 0)?, a, m)?;
                joins(d, edge(site, 1)?, m, b)?;
                check_pair_in(d, c, sz, sx, MINUS_HALF, MINUS_HALF)?;
                let t1 = through(d, a, End::Vertex(m)).ok_or("bad chain")?;
                let t2 = through(d, b, End::Vertex(m)).ok_or("bad chain")?;
                for t in [t1, t2] {
                    ensure(![a, m, b].map(End::Vertex).contains(&t), "the chain must be open")?;
                }
                for u in [a, m, b, sz, sx] {
                    out.remove_vertex(u);
                }
                let h = out.add_vertex(VertexKind::Hadamard);
                out.add_edge(t1, End::Vertex(h));
                out.add_edge(End::Vertex(h), t2);
                add_unit_pairs(&mut out, c, 2);
            }
        }
        Ok(out)
    }

    fn instances(&self, _max_legs: usize) -> Vec<Instance> {
        let mut out = Vec::new();
        let mut d = Diagram::hadamard_wire();
        let h = d.vertex_ids()[0];
        let (a, b) = d.add_pair(ZERO, ZERO);
        let (x, y) = d.add_pair(ZERO, ZERO);
        out.push(inst("wire".into(), d, Site::vertices(&[h, a, b, x, y]).with_params(&[0]), Direction::Forward));
        let mut d = Diagram::empty();
        let u = v(&mut d, Colour::Z, HALF);
        let h = d.add_vertex(VertexKind::Hadamard);
        link(&mut d, u, h);
        link(&mut d, h, u);
        let (a, b) = d.add_pair(ZERO, ZERO);
        let (x, y) = d.add_pair(ZERO, ZERO);
        out.push(inst("Hadamard loop".into(), d, Site::vertices(&[h, a, b, x, y]).with_params(&[0]), Direction::Forward));
        let mut d = Diagram::new(1, 1);
        let a = v(&mut d, Colour::Z, HALF);
        let m = v(&mut d, Colour::X, HALF);
        let b = v(&mut d, Colour::Z, HALF);
        d.add_edge(End::Input(0), End::Vertex(a));
        let e1 = link(&mut d, a, m);
        let e2 = link(&mut d, m, b);
        d.add_edge(End::Vertex(b), End::Output(0));
        let (sz, sx) = d.add_pair(MINUS_HALF, MINUS_HALF);
        out.push(inst("chain".into(), d, Site::vertices(&[a, m, b, sz, sx]).with_edges(&[e1, e2]).with_params(&[0]), Direction::Backward));
        out
    }
}

// ---------------------------------------------------------------------------

/// Two parallel edges between spiders of different colours disconnect,
/// consuming two `⟨Z(0)|X(0)⟩`.
///
/// Forward site `v=[u,w,pz1,px1,pz2,px2] e=[e1,e2] p=[c]`, `u` of colour
/// `c`. Backward site `v=[u,w] p=[c]`.
struct Hopf;

impl Rule for Hopf {
    fn id(&self) -> &'static str {
        "hopf"
    }
    fn origin(&self) -> Origin {
        Origin::DerivedPrimitive
    }
    fn summary(&self) -> &'static str {
        "a double edge between spiders of different colours disconnects, with ⟨Z(0)|X(0)⟩² on the connected side"
    }
    fn colour_param(&self) -> Option<usize> {
        Some(0)
    }

    /// Sites are listed with `u` green only: the red-first site of the same
    /// edges is the same rewrite.
    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site> {
        let mut out = Vec::new();
        {
            let c = Colour::Z;
            let cp = c.index() as i64;
            for (u, cu, _) in spiders(d) {
                if cu != c {
                    continue;
                }
                for (w, cw, _) in spiders(d) {
                    if cw != c.flipped() {
                        continue;
                    }
                    match direction {
                        Direction::Forward => {
                            let es = d.edges_between(End::Vertex(u), End::Vertex(w));
                            if es.len() < 2 {
                                continue;
                            }
                            if let Some(pairs) = find_unit_pairs(d, c, 2, &[u, w]) {
                                let mut vs = vec![u, w];
                                vs.extend(pairs);
                                out.push(Site::vertices(&vs).with_edges(&es[..2]).with_params(&[cp]));
                            }
                        }
                        Direction::Backward => out.push(Site::vertices(&[u, w]).with_params(&[cp])),
                    }
                }
            }
        }
        out
    }

    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String> {
        let c = colour_param(site, 0)?;
        let (u, w) = (vertex(site, 0)?, vertex(site, 1)?);
        spider_of(d, u, c)?;
        spider_of(d, w, c.flipped())?;
        let mut out = d.clone();
        match direction {
            Direction::Forward => {
                let pairs = take_unit_pairs(d, c, site, 2, 2)?;
                let mut all = vec![u, w];
                all.extend(&pairs);
                distinct(&all)?;
                let (e1, e2) = (edge(site, 0)?, edge(site, 1)?);
                ensure(e1 != e2, "two different edges needed")?;
                joins(d, e1, u, w)?;
                joins(d, e2, u, w)?;
                out.remove_edge(e1);
                out.remove_edge(e2);
                for p in pairs {
                    out.remove_vertex(p);
                }
            }
            Direction::Backward => {
                link(&mut out, u, w);
                link(&mut out, u, w);
                add_unit_pairs(&mut out, c, 2);
            }
        }
        Ok(out)
    }

    fn instances(&self, max_legs: usize) -> Vec<Instance> {
        let mut out = Vec::new();
        let legs_each = max_legs.saturating_sub(2);
        for alpha in Phase::ALL {
            for beta in Phase::ALL {
                for m in 0..=legs_each {
                    let mut d = Diagram::empty();
                    let u = v(&mut d, Colour::Z, alpha);
                    let w = v(&mut d, Colour::X, beta);
                    legs(&mut d, u, m);
                    legs(&mut d, w, legs_each - m);
                    let bwd = d.clone();
                    let e1 = link(&mut d, u, w);
                    let e2 = link(&mut d, u, w);
                    let (a, b) = d.add_pair(ZERO, ZERO);
                    let (x, y) = d.add_pair(ZERO, ZERO);
                    let label = format!("α={alpha} β={beta} legs={m}+{}", legs_each - m);
                    out.push(inst(label.clone(), d, Site::vertices(&[u, w, a, b, x, y]).with_edges(&[e1, e2]).with_params(&[0]), Direction::Forward));
                    out.push(inst(format!("back {label}"), bwd, Site::vertices(&[u, w]).with_params(&[0]), Direction::Backward));
                }
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------

/// The star node times a phase-free scalar spider is the empty diagram.
/// Forward site `v=[s,z] p=[c]`; backward site `p=[c]`.
struct StarRule;

impl Rule for StarRule {
    fn id(&self) -> &'static str {
        "star"
    }
    fn origin(&self) -> Origin {
        Origin::Primitive
    }
    fn summary(&self) -> &'static str {
        "★ times a phase-free scalar spider is the empty diagram"
    }
    fn colour_param(&self) -> Option<usize> {
        Some(0)
    }

    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site> {
        let mut out = Vec::new();
        for c in COLOURS {
            let cp = c.index() as i64;
            match direction {
                Direction::Forward => {
                    let stars: Vec<VertexId> =
                        d.vertices().filter(|(_, k)| *k == VertexKind::Star).map(|(s, _)| s).collect();
                    let node = spiders(d)
                        .into_iter()
                        .find(|&(z, col, p)| col == c && p.is_zero() && d.degree(z) == 0);
                    if let (Some(&s), Some((z, _, _))) = (stars.first(), node) {
                        out.push(Site::vertices(&[s, z]).with_params(&[cp]));
                    }
                }
                Direction::Backward => out.push(Site::default().with_params(&[cp])),
            }
        }
        out
    }

    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String> {
        let c = colour_param(site, 0)?;
        let mut out = d.clone();
        match direction {
            Direction::Forward => {
                let (s, z) = (vertex(site, 0)?, vertex(site, 1)?);
                star(d, s)?;
                ensure(d.kind(z) == Some(VertexKind::spider(c, ZERO)) && d.degree(z) == 0, "expected a phase-free scalar spider")?;
                out.remove_vertex(s);
                out.remove_vertex(z);
            }
            Direction::Backward => {
                out.add_star();
                v(&mut out, c, ZERO);
            }
        }
        Ok(out)
    }

    fn instances(&self, _max_legs: usize) -> Vec<Instance> {
        let mut d = Diagram::empty();
        let s = d.add_star();
        let z = v(&mut d, Colour::Z, ZERO);
        vec![
            inst("★ ⊗ Z(0)".into(), d, Site::vertices(&[s, z]).with_params(&[0]), Direction::Forward),
            inst("empty".into(), Diagram::empty(), Site::default().with_params(&[0]), Direction::Backward),
        ]
    }
}

// ---------------------------------------------------------------------------

/// Next to a scalar spider `π` of colour `c`, any edge between two
/// spiders may be deleted or added, and any spider may change colour.
///
/// Site `v=[w,u,x] e=[e] p=[0,c]` deletes edge `e` between `u` and `x`
/// (backward adds an edge); `v=[w,u] p=[1,c]` flips the colour of `u`.
struct ZeroRule;

impl Rule for ZeroRule {
    fn id(&self) -> &'static str {
        "zero"
    }
    fn origin(&self) -> Origin {
        Origin::Primitive
    }
    fn summary(&self) -> &'static str {
        "beside a scalar π spider, edges between spiders may be cut and spiders may change colour"
    }
    fn colour_param(&self) -> Option<usize> {
        Some(1)
    }

    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site> {
        let mut out = Vec::new();
        for c in COLOURS {
            let cp = c.index() as i64;
            let Some((w, _, _)) = spiders(d)
                .into_iter()
                .find(|&(w, col, p)| col == c && p == PI && d.degree(w) == 0)
            else {
                continue;
            };
            let others: Vec<VertexId> = spiders(d).into_iter().map(|(u, _, _)| u).filter(|&u| u != w).collect();
            match direction {
                Direction::Forward => {
                    for (e, (a, b)) in d.edges() {
                        if let (Some(a), Some(b)) = (a.vertex(), b.vertex()) {
                            if others.contains(&a) && others.contains(&b) {
                                out.push(Site::vertices(&[w, a, b]).with_edges(&[e]).with_params(&[0, cp]));
                            }
                        }
                    }
                }
                Direction::Backward => {
                    for (i, &a) in others.iter().enumerate() {
                        for &b in &others[i..] {
                            out.push(Site::vertices(&[w, a, b]).with_params(&[0, cp]));
                        }
                    }
                }
            }
            for &u in &others {
                out.push(Site::vertices(&[w, u]).with_params(&[1, cp]));
            }
        }
        out
    }

    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String> {
        let kind = param(site, 0)?;
        let c = colour_param(site, 1)?;
        let w = vertex(site, 0)?;
        ensure(d.kind(w) == Some(VertexKind::spider(c, PI)) && d.degree(w) == 0, "expected a scalar π spider")?;
        let u = vertex(site, 1)?;
        ensure(u != w, "the π scalar must stay untouched")?;
        let (cu, pu) = spider(d, u)?;
        let mut out = d.clone();
        match kind {
            0 => {
                let x = vertex(site, 2)?;
                ensure(x != w, "the π scalar must stay untouched")?;
                spider(d, x)?;
                match direction {
                    Direction::Forward => {
                        let e = edge(site, 0)?;
                        joins(d, e, u, x)?;
                        out.remove_edge(e);
                    }
                    Direction::Backward => {
                        link(&mut out, u, x);
                    }
                }
            }
            1 => out.set_kind(u, VertexKind::spider(cu.flipped(), pu)),
            _ => return Err("unknown zero-rule form".into()),
        }
        Ok(out)
    }

    fn instances(&self, max_legs: usize) -> Vec<Instance> {
        let mut out = Vec::new();
        let c = Colour::Z;
        for alpha in Phase::ALL {
            for beta in Phase::ALL {
                let mut d = Diagram::empty();
                let w = v(&mut d, c, PI);
                let u = v(&mut d, Colour::Z, alpha);
                let x = v(&mut d, Colour::X, beta);
                legs(&mut d, u, 1);
                legs(&mut d, x, 1);
                let bwd = d.clone();
                let e = link(&mut d, u, x);
                out.push(inst(format!("cut α={alpha} β={beta}"), d, Site::vertices(&[w, u, x]).with_edges(&[e]).with_params(&[0, 0]), Direction::Forward));
                out.push(inst(format!("join α={alpha} β={beta}"), bwd, Site::vertices(&[w, u, x]).with_params(&[0, 0]), Direction::Backward));
            }
            for m in 0..=max_legs {
                let mut d = Diagram::empty();
                let w = v(&mut d, c, PI);
                let u = v(&mut d, Colour::X, alpha);
                legs(&mut d, u, m);
                out.push(inst(format!("flip α={alpha} legs={m}"), d, Site::vertices(&[w, u]).with_params(&[1, 0]), Direction::Forward));
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------

/// A scalar `π` spider absorbs any scalar spider of its colour.
/// Forward site `v=[w,z] p=[c]`; backward site `v=[w] p=[c,α]`.
struct ZeroScalar;

impl Rule for ZeroScalar {
    fn id(&self) -> &'static str {
        "zero-scalar"
    }
    fn origin(&self) -> Origin {
        Origin::Primitive
    }
    fn summary(&self) -> &'static str {
        "a scalar π spider absorbs any scalar spider of the same colour"
    }
    fn colour_param(&self) -> Option<usize> {
        Some(0)
    }

    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site> {
        let mut out = Vec::new();
        for c in COLOURS {
            let cp = c.index() as i64;
            let scalars: Vec<(VertexId, Phase)> = spiders(d)
                .into_iter()
                .filter(|&(z, col, _)| col == c && d.degree(z) == 0)
                .map(|(z, _, p)| (z, p))
                .collect();
            for &(w, p) in &scalars {
                if p != PI {
                    continue;
                }
                match direction {
                    Direction::Forward => {
                        for &(z, _) in &scalars {
                            if z != w {
                                out.push(Site::vertices(&[w, z]).with_params(&[cp]));
                            }
                        }
                    }
                    Direction::Backward => {
                        for a in Phase::ALL {
                            out.push(Site::vertices(&[w]).with_params(&[cp, a.quarter_turns() as i64]));
                        }
                    }
                }
                break;
            }
        }
        out
    }

    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String> {
        let c = colour_param(site, 0)?;
        let w = vertex(site, 0)?;
        ensure(d.kind(w) == Some(VertexKind::spider(c, PI)) && d.degree(w) == 0, "expected a scalar π spider")?;
        let mut out = d.clone();
        match direction {
            Direction::Forward => {
                let z = vertex(site, 1)?;
                ensure(z != w, "the π scalar cannot absorb itself")?;
                spider_of(d, z, c)?;
                ensure(d.degree(z) == 0, "expected a scalar spider")?;
                out.remove_vertex(z);
            }
            Direction::Backward => {
                let alpha = Phase::new(param_or(site, 1, 0));
                v(&mut out, c, alpha);
            }
        }
        Ok(out)
    }

    fn instances(&self, _max_legs: usize) -> Vec<Instance> {
        let mut out = Vec::new();
        for alpha in Phase::ALL {
            let mut d = Diagram::empty();
            let w = v(&mut d, Colour::Z, PI);
            let bwd = d.clone();
            let z = v(&mut d, Colour::Z, alpha);
            out.push(inst(format!("α={alpha}"), d, Site::vertices(&[w, z]).with_params(&[0]), Direction::Forward));
            out.push(inst(format!("back α={alpha}"), bwd, Site::vertices(&[w]).with_params(&[0, alpha.quarter_turns() as i64]), Direction::Backward));
        }
        out
    }
}
