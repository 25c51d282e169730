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

//! Lemmas about scalar pieces.
//!
//! Most lemmas here rewrite one multiset of disconnected scalar pieces
//! into another. Their sites list the vertices of the matched pieces in
//! order (two per pair) followed by the case index as the only parameter.
//! Each lemma is closed under colour duality; the duals are extra cases.

use super::util::*;
use super::{Direction, Instance, Origin, Rule, Site};
use crate::diagram::{Colour, Diagram, VertexId, VertexKind};
use crate::normal::{add_pieces, ScalarPiece};
use crate::phase::Phase;

use ScalarPiece::{Node, Pair, Star};

const ZERO: Phase = Phase::ZERO;
const HALF: Phase = Phase::HALF_PI;
const PI: Phase = Phase::PI;
const MINUS_HALF: Phase = Phase::MINUS_HALF_PI;
const UNIT: ScalarPiece = Pair(ZERO, ZERO);
const W_PLUS: ScalarPiece = Pair(HALF, HALF);
const W_MINUS: ScalarPiece = Pair(MINUS_HALF, MINUS_HALF);

const LEMMAS: [(&str, &str); 12] = [
    ("innerprod-wlog", "⟨Z(α)|X(β)⟩ = ⟨Z(β)|X(α)⟩"),
    ("halfscalar", "★ ⊗ ⟨Z(0)|X(0)⟩² is the empty diagram"),
    ("pi-remove", "⟨Z(0)|X(π)⟩ = ⟨Z(0)|X(0)⟩"),
    ("pi-multiplication", "⟨Z(α)|X(π)⟩ ⊗ ⟨Z(β)|X(π)⟩ = ⟨Z(α+β)|X(π)⟩ ⊗ ⟨Z(0)|X(0)⟩"),
    ("overlap-ket-zero", "⟨Z(α)|X(0)⟩ = ⟨Z(0)|X(0)⟩"),
    ("scalar-pi2-inverse", "⟨Z(π/2)|X(π/2)⟩ ⊗ ⟨Z(−π/2)|X(−π/2)⟩ = ⟨Z(0)|X(0)⟩⁴"),
    ("omega-inverses", "⟨Z(π/2)|X(π/2)⟩ ⊗ ⟨Z(−π/2)|X(−π/2)⟩ ⊗ ★² is the empty diagram"),
    ("unique-zero", "⟨Z(π/2)|X(−π/2)⟩ is a scalar π spider, up to a non-zero factor"),
    ("scalar-pi2-equality", "⟨Z(0)|X(0)⟩ ⊗ ⟨Z(−π/2)|X(−π/2)⟩ = ⟨Z(−π/2)|X(π)⟩ ⊗ ⟨Z(π/2)|X(π/2)⟩"),
    ("omega-dagger-squared", "⟨Z(−π/2)|X(−π/2)⟩² = ⟨Z(−π/2)|X(π)⟩ ⊗ ⟨Z(0)|X(0)⟩³"),
    ("minus-omega", "⟨Z(π)|X(π)⟩ ⊗ ⟨Z(π/2)|X(π/2)⟩ = ⟨Z(−π/2)|X(π)⟩ ⊗ ⟨Z(−π/2)|X(−π/2)⟩"),
    ("single-node", "a scalar Z spider with phase other than π as scalar pieces"),
];

pub(crate) fn lemmas() -> Vec<Box<dyn Rule>> {
    let mut out: Vec<Box<dyn Rule>> = LEMMAS
        .iter()
        .map(|&(id, summary)| Box::new(ScalarLemma { id, summary, cases: cases(id) }) as Box<dyn Rule>)
        .collect();
    out.push(Box::new(YStates));
    out
}

/// The case index of a scalar lemma whose `direction` side is `from`,
/// and the pieces it produces.
pub(crate) fn find_case(id: &str, direction: Direction, from: &[ScalarPiece]) -> Option<(usize, Vec<ScalarPiece>)> {
    cases(id).into_iter().enumerate().find_map(|(i, (l, r))| {
        let (a, b) = if direction == Direction::Forward { (l, r) } else { (r, l) };
        (a == from).then_some((i, b))
    })
}

/// All cases of a scalar lemma, colour duals included.
fn cases(id: &str) -> Vec<Case> {
    let all = Phase::ALL;
    let base: Vec<Case> = match id {
        "innerprod-wlog" => {
            let mut out = Vec::new();
            for a in all {
                for b in all {
                    if a != b {
                        out.push((vec![Pair(a, b)], vec![Pair(b, a)]));
                    }
                }
            }
            out
        }
        "halfscalar" => vec![(vec![Star, UNIT, UNIT], vec![])],
        "pi-remove" => vec![(vec![Pair(ZERO, PI)], vec![UNIT])],
        "pi-multiplication" => {
            let mut out = Vec::new();
            for a in all {
                for b in all {
                    out.push((vec![Pair(a, PI), Pair(b, PI)], vec![Pair(a + b, PI), UNIT]));
                }
            }
            out
        }
        "overlap-ket-zero" => all.iter().filter(|a| !a.is_zero()).map(|&a| (vec![Pair(a, ZERO)], vec![UNIT])).collect(),
        "scalar-pi2-inverse" => vec![(vec![W_PLUS, W_MINUS], vec![UNIT; 4])],
        "omega-inverses" => vec![(vec![W_PLUS, W_MINUS, Star, Star], vec![])],
        "unique-zero" => vec![
            (vec![Pair(HALF, MINUS_HALF)], vec![Node(Colour::Z, PI), W_MINUS, Star]),
            (vec![Pair(MINUS_HALF, HALF)], vec![Node(Colour::Z, PI), W_PLUS, Star]),
        ],
        "scalar-pi2-equality" => vec![
            (vec![UNIT, W_MINUS], vec![Pair(MINUS_HALF, PI), W_PLUS]),
            (vec![UNIT, W_PLUS], vec![Pair(HALF, PI), W_MINUS]),
        ],
        "omega-dagger-squared" => vec![
            (vec![W_MINUS, W_MINUS], vec![Pair(MINUS_HALF, PI), UNIT, UNIT, UNIT]),
            (vec![W_PLUS, W_PLUS], vec![Pair(HALF, PI), UNIT, UNIT, UNIT]),
        ],
        "minus-omega" => vec![
            (vec![Pair(PI, PI), W_PLUS], vec![Pair(MINUS_HALF, PI), W_MINUS]),
            (vec![Pair(PI, PI), W_MINUS], vec![Pair(HALF, PI), W_PLUS]),
        ],
        "single-node" => vec![
            (vec![Node(Colour::Z, ZERO)], vec![UNIT, UNIT]),
            (vec![Node(Colour::Z, HALF)], vec![Star, UNIT, W_PLUS]),
            (vec![Node(Colour::Z, MINUS_HALF)], vec![Star, UNIT, W_MINUS]),
        ],
        _ => Vec::new(),
    };
    with_duals(base)
}

fn dual(piece: ScalarPiece) -> ScalarPiece {
    match piece {
        Star => Star,
        Pair(a, b) => Pair(b, a),
        Node(c, p) => Node(c.flipped(), p),
    }
}

type Case = (Vec<ScalarPiece>, Vec<ScalarPiece>);

fn with_duals(cases: Vec<Case>) -> Vec<Case> {
    let mut out = cases.clone();
    for (l, r) in cases {
        let d = (l.into_iter().map(dual).collect(), r.into_iter().map(dual).collect());
        if !out.contains(&d) {
            out.push(d);
        }
    }
    out
}

fn piece_size(p: ScalarPiece) -> usize {
    match p {
        Pair(..) => 2,
        _ => 1,
    }
}

fn is_piece(d: &Diagram, vs: &[VertexId], piece: ScalarPiece) -> bool {
    match piece {
        Star => d.kind(vs[0]) == Some(VertexKind::Star),
        Node(c, p) => d.kind(vs[0]) == Some(VertexKind::spider(c, p)) && d.degree(vs[0]) == 0,
        Pair(a, b) => check_pair(d, vs[0], vs[1], a, b).is_ok(),
    }
}

/// Checks that `vs` lists the given pieces in order and returns the
/// number of vertices used.
pub(crate) fn check_pieces(d: &Diagram, vs: &[VertexId], pieces: &[ScalarPiece]) -> Res<usize> {
    let mut at = 0;
    for &p in pieces {
        let n = piece_size(p);
        ensure(vs.len() >= at + n, "site lists too few vertices")?;
        ensure(is_piece(d, &vs[at..at + n], p), &format!("expected {p}"))?;
        at += n;
    }
    distinct(&vs[..at])?;
    Ok(at)
}

/// First-fit search for disjoint copies of `pieces`.
pub(crate) fn find_pieces(d: &Diagram, pieces: &[ScalarPiece], avoid: &[VertexId]) -> Option<Vec<VertexId>> {
    let mut used = avoid.to_vec();
    let mut out = Vec::new();
    for &p in pieces {
        let found: Vec<VertexId> = match p {
            Star => vec![d.vertices().find(|&(v, k)| k == VertexKind::Star && !used.contains(&v))?.0],
            Node(c, ph) => vec![d
                .vertices()
                .find(|&(v, k)| k == VertexKind::spider(c, ph) && d.degree(v) == 0 && !used.contains(&v))?
                .0],
            Pair(a, b) => {
                let (z, x) = find_pair(d, a, b, &used)?;
                vec![z, x]
            }
        };
        used.extend(&found);
        out.extend(found);
    }
    Some(out)
}

fn pieces_diagram(pieces: &[ScalarPiece]) -> (Diagram, Vec<VertexId>) {
    let mut d = Diagram::empty();
    add_pieces(&mut d, pieces);
    let vs = d.vertex_ids();
    (d, vs)
}

struct ScalarLemma {
    id: &'static str,
    summary: &'static str,
    cases: Vec<Case>,
}

impl ScalarLemma {
    fn sides(&self, case: usize, direction: Direction) -> Res<(&[ScalarPiece], &[ScalarPiece])> {
        let (l, r) = self.cases.get(case).ok_or_else(|| format!("unknown case {case}"))?;
        Ok(match direction {
            Direction::Forward => (l, r),
            Direction::Backward => (r, l),
        })
    }
}

impl Rule for ScalarLemma {
    fn colour_symmetric(&self) -> bool {
        false
    }
    fn id(&self) -> &'static str {
        self.id
    }
    fn origin(&self) -> Origin {
        Origin::Lemma
    }
    fn summary(&self) -> &'static str {
        self.summary
    }

    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site> {
        let mut out = Vec::new();
        for case in 0..self.cases.len() {
            let (from, _) = self.sides(case, direction).unwrap();
            if let Some(vs) = find_pieces(d, from, &[]) {
                out.push(Site::vertices(&vs).with_params(&[case as i64]));
            }
        }
        out
    }

    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String> {
        let case = usize::try_from(param(site, 0)?).map_err(|_| "bad case index")?;
        let (from, to) = self.sides(case, direction)?;
        let n = check_pieces(d, &site.vertices, from)?;
        ensure(n == site.vertices.len(), "site lists extra vertices")?;
        let mut out = d.clone();
        for &v in &site.vertices {
            out.remove_vertex(v);
        }
        add_pieces(&mut out, to);
        Ok(out)
    }

    fn instances(&self, _max_legs: usize) -> Vec<Instance> {
        let mut out = Vec::new();
        for (case, (l, r)) in self.cases.iter().enumerate() {
            for (direction, side) in [(Direction::Forward, l), (Direction::Backward, r)] {
                let (d, vs) = pieces_diagram(side);
                let label = format!("case {case} {}", if direction == Direction::Forward { "lhs" } else { "rhs" });
                out.push(Instance { label, diagram: d, site: Site::vertices(&vs).with_params(&[case as i64]), direction });
            }
        }
        out
    }
}

/// Y-basis states: `X(−π/2)` with one leg is `Z(π/2)` times
/// `⟨Z(−π/2)|X(−π/2)⟩ ⊗ ★`, and the conjugate and colour-dual forms.
///
/// Site `v=[u, pieces..] p=[case]`; the pieces are listed only on the
/// backward side.
struct YStates;

impl YStates {
    fn cases() -> [(VertexKind, VertexKind, [ScalarPiece; 2]); 4] {
        [
            (VertexKind::XSpider(MINUS_HALF), VertexKind::ZSpider(HALF), [W_MINUS, Star]),
            (VertexKind::XSpider(HALF), VertexKind::ZSpider(MINUS_HALF), [W_PLUS, Star]),
            (VertexKind::ZSpider(MINUS_HALF), VertexKind::XSpider(HALF), [W_MINUS, Star]),
            (VertexKind::ZSpider(HALF), VertexKind::XSpider(MINUS_HALF), [W_PLUS, Star]),
        ]
    }
}

impl Rule for YStates {
    fn colour_symmetric(&self) -> bool {
        false
    }
    fn id(&self) -> &'static str {
        "y-states"
    }
    fn origin(&self) -> Origin {
        Origin::Lemma
    }
    fn summary(&self) -> &'static str {
        "a π/2 state of one colour is a −π/2 state of the other, times a phase"
    }

    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site> {
        let mut out = Vec::new();
        for (case, (from, to, pieces)) in YStates::cases().into_iter().enumerate() {
            let want = if direction == Direction::Forward { from } else { to };
            for (u, k) in d.vertices() {
                if k != want || d.degree(u) != 1 {
                    continue;
                }
                let mut vs = vec![u];
                if direction == Direction::Backward {
                    let Some(found) = find_pieces(d, &pieces, &[u]) else { continue };
                    vs.extend(found);
                }
                out.push(Site::vertices(&vs).with_params(&[case as i64]));
            }
        }
        out
    }

    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String> {
        let case = usize::try_from(param(site, 0)?).map_err(|_| "bad case index")?;
        let (from, to, pieces) = *YStates::cases().get(case).ok_or("unknown case")?;
        let (from, to) = if direction == Direction::Forward { (from, to) } else { (to, from) };
        let u = vertex(site, 0)?;
        ensure(d.kind(u) == Some(from) && d.degree(u) == 1, &format!("expected {from} with one leg"))?;
        let mut out = d.clone();
        out.set_kind(u, to);
        match direction {
            Direction::Forward => {
                ensure(site.vertices.len() == 1, "site lists extra vertices")?;
                add_pieces(&mut out, &pieces);
            }
            Direction::Backward => {
                let n = check_pieces(d, &site.vertices[1..], &pieces)?;
                ensure(n + 1 == site.vertices.len(), "site lists extra vertices")?;
                ensure(!site.vertices[1..].contains(&u), "the state is not a piece")?;
                for &v in &site.vertices[1..] {
                    out.remove_vertex(v);
                }
            }
        }
        Ok(out)
    }

    fn instances(&self, _max_legs: usize) -> Vec<Instance> {
        let mut out = Vec::new();
        for (case, (from, to, pieces)) in YStates::cases().into_iter().enumerate() {
            let mut d = Diagram::new(0, 1);
            let u = d.add_vertex(from);
            d.add_edge(crate::diagram::End::Vertex(u), crate::diagram::End::Output(0));
            out.push(Instance {
                label: format!("{from} state"),
                diagram: d,
                site: Site::vertices(&[u]).with_params(&[case as i64]),
                direction: Direction::Forward,
            });
            let mut d = Diagram::new(0, 1);
            let u = d.add_vertex(to);
            d.add_edge(crate::diagram::End::Vertex(u), crate::diagram::End::Output(0));
            let before = d.vertex_ids();
            add_pieces(&mut d, &pieces);
            let mut vs = vec![u];
            vs.extend(d.vertex_ids().into_iter().filter(|v| !before.contains(v)));
            out.push(Instance {
                label: format!("{to} state with phase"),
                diagram: d,
                site: Site::vertices(&vs).with_params(&[case as i64]),
                direction: Direction::Backward,
            });
        }
        out
    }
}
