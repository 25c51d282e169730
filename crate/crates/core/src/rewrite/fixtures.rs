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

//! Replayable derivations of the lemmas from the axioms.
//!
//! Each fixture starts at one side of a lemma and ends at the other. The
//! steps use axioms and lemmas proven by earlier fixtures only, so the
//! list below is in dependency order.

use super::scalar_lemmas::{find_case, find_pieces};
use super::{replay_derivation, Derivation, Direction, RuleBook, Rewriter, Site};
use crate::diagram::{is_isomorphic, Colour, Diagram, EdgeId, End, VertexId, VertexKind};
use crate::normal::{add_pieces, ScalarPiece};
use crate::phase::Phase;
use crate::rewrite::Origin;
use crate::semantics::semantically_equal;

use Direction::{Backward, Forward};
use ScalarPiece::{Node, Pair, Star};

const ZERO: Phase = Phase::ZERO;
const HALF: Phase = Phase::HALF_PI;
const PI: Phase = Phase::PI;
const MINUS_HALF: Phase = Phase::MINUS_HALF_PI;
const UNIT: ScalarPiece = Pair(ZERO, ZERO);
const W_PLUS: ScalarPiece = Pair(HALF, HALF);
const W_MINUS: ScalarPiece = Pair(MINUS_HALF, MINUS_HALF);
const Z: i64 = 0;
const X: i64 = 1;

type Res<T> = Result<T, String>;

/// A stored derivation of one instance of a lemma.
#[derive(Clone, Debug)]
pub struct Fixture {
    /// Unique name, e.g. `pi-multiplication α=π/2 β=π`.
    pub name: String,
    /// Id of the rule the derivation proves.
    pub lemma: &'static str,
    pub derivation: Derivation,
    /// The other side of the lemma.
    pub target: Diagram,
}

impl Fixture {
    /// Replays the derivation and checks that it ends at the target and
    /// that both ends have the same interpretation.
    pub fn check(&self) -> Res<()> {
        let end = replay_derivation(&self.derivation).map_err(|e| e.to_string())?;
        if end != self.derivation.end {
            return Err("replay does not reach the recorded end".into());
        }
        if !is_isomorphic(&end, &self.target) {
            return Err("the derivation does not end at the target".into());
        }
        let book = RuleBook::standard();
        for step in &self.derivation.steps {
            let rule = book.get(&step.rule).map_err(|e| e.to_string())?;
            if rule.origin() == Origin::Checked {
                return Err(format!("step uses {}, which has no derivation", step.rule));
            }
        }
        match semantically_equal(&self.derivation.start, &end) {
            Ok(true) => Ok(()),
            Ok(false) => Err("the two ends have different interpretations".into()),
            Err(e) => Err(e.to_string()),
        }
    }
}

fn pieces(ps: &[ScalarPiece]) -> Diagram {
    let mut d = Diagram::empty();
    add_pieces(&mut d, ps);
    d
}

fn between(d: &Diagram, a: VertexId, b: VertexId) -> Res<EdgeId> {
    d.edges_between(End::Vertex(a), End::Vertex(b)).first().copied().ok_or_else(|| format!("no edge {a:?}-{b:?}"))
}

fn neighbour(d: &Diagram, v: VertexId, skip: &[VertexId]) -> Res<VertexId> {
    d.neighbours(v)
        .into_iter()
        .filter_map(End::vertex)
        .find(|w| !skip.contains(w))
        .ok_or_else(|| format!("{v:?} has no neighbour"))
}

fn q(p: Phase) -> i64 {
    p.quarter_turns() as i64
}

/// A recorder with helpers for the steps used below.
struct Script(Rewriter);

impl Script {
    fn new(d: Diagram) -> Script {
        Script(Rewriter::new(d))
    }

    fn d(&self) -> &Diagram {
        self.0.diagram()
    }

    fn step(&mut self, rule: &str, direction: Direction, site: Site) -> Res<Vec<VertexId>> {
        self.0.apply(rule, direction, site).map_err(|e| e.to_string())
    }

    /// Applies a scalar lemma to the first matching pieces.
    fn lemma(&mut self, id: &str, direction: Direction, from: &[ScalarPiece]) -> Res<Vec<VertexId>> {
        let (case, _) = find_case(id, direction, from).ok_or_else(|| format!("{id} has no such case"))?;
        let vs = find_pieces(self.d(), from, &[]).ok_or_else(|| format!("pieces for {id} not found"))?;
        self.step(id, direction, Site::vertices(&vs).with_params(&[case as i64]))
    }

    /// Splits a spider of phase `beta` off `u`, moving no legs.
    fn unfuse(&mut self, u: VertexId, beta: Phase) -> Res<VertexId> {
        Ok(self.step("spider", Backward, Site::vertices(&[u]).with_params(&[q(beta)]))?[0])
    }

    fn fuse(&mut self, u: VertexId, w: VertexId) -> Res<()> {
        let e = between(self.d(), u, w)?;
        self.step("spider", Forward, Site::vertices(&[u, w]).with_edges(&[e]))?;
        Ok(())
    }

    fn halfscalar(&mut self, direction: Direction) -> Res<()> {
        self.lemma("halfscalar", direction, if direction == Forward { &[Star, UNIT, UNIT] } else { &[] })?;
        Ok(())
    }

    /// Vertices of the first unit pair `⟨c(0)|¬c(0)⟩`, colour `c` first.
    fn unit(&self, c: i64) -> Res<Vec<VertexId>> {
        let vs = find_pieces(self.d(), &[UNIT], &[]).ok_or("no unit pair")?;
        Ok(if c == Z { vs } else { vec![vs[1], vs[0]] })
    }

    fn finish(self, name: String, lemma: &'static str, target: Diagram) -> Fixture {
        Fixture { name, lemma, derivation: self.0.finish(), target }
    }
}

/// In–H–H–out is a plain wire.
fn h_cancel() -> Res<Fixture> {
    let mut d = Diagram::new(1, 1);
    let h1 = d.add_vertex(VertexKind::Hadamard);
    let h2 = d.add_vertex(VertexKind::Hadamard);
    d.add_edge(End::Input(0), End::Vertex(h1));
    d.add_edge(End::Vertex(h1), End::Vertex(h2));
    d.add_edge(End::Vertex(h2), End::Output(0));
    let mut s = Script::new(d);
    let e = between(s.d(), h1, h2)?;
    let z = s.step("cup", Backward, Site::default().with_edges(&[e]).with_params(&[Z]))?[0];
    s.step("colour", Backward, Site::vertices(&[z]))?;
    s.step("cup", Forward, Site::vertices(&[z]))?;
    Ok(s.finish("h-cancel".into(), "h-cancel", Diagram::identity(1)))
}

/// `★ ⊗ ⟨Z(0)|X(0)⟩²` is empty.
fn halfscalar() -> Res<Fixture> {
    let mut s = Script::new(pieces(&[Star, UNIT, UNIT]));
    let created = s.step("star", Backward, Site::default().with_params(&[Z]))?;
    let g = created[1];
    s.step("loop", Backward, Site::vertices(&[g]))?;
    let e = between(s.d(), g, g)?;
    let x = s.step("cup", Backward, Site::default().with_edges(&[e]).with_params(&[X]))?[0];
    let es = s.d().edges_between(End::Vertex(g), End::Vertex(x));
    let units = find_pieces(s.d(), &[UNIT, UNIT], &[]).ok_or("no units")?;
    let mut vs = vec![g, x];
    vs.extend(units);
    s.step("hopf", Forward, Site::vertices(&vs).with_edges(&es).with_params(&[Z]))?;
    let stars: Vec<VertexId> = s.d().vertices().filter(|(_, k)| *k == VertexKind::Star).map(|(v, _)| v).collect();
    s.step("star", Forward, Site::vertices(&[stars[0], g]).with_params(&[Z]))?;
    s.step("colour", Forward, Site::vertices(&[x]))?;
    s.step("star", Forward, Site::vertices(&[stars[1], x]).with_params(&[Z]))?;
    Ok(s.finish("halfscalar".into(), "halfscalar", Diagram::empty()))
}

/// `⟨Z(α)|X(β)⟩ = ⟨Z(β)|X(α)⟩`.
fn innerprod_wlog(a: Phase, b: Phase) -> Res<Fixture> {
    let mut d = Diagram::empty();
    let (z, x) = d.add_pair(a, b);
    let mut s = Script::new(d);
    s.step("colour", Forward, Site::vertices(&[z]))?;
    s.step("colour", Forward, Site::vertices(&[x]))?;
    let h1 = neighbour(s.d(), z, &[])?;
    let h2 = neighbour(s.d(), h1, &[z])?;
    let e = between(s.d(), h1, h2)?;
    s.step("h-cancel", Forward, Site::vertices(&[h1, h2]).with_edges(&[e]))?;
    Ok(s.finish(format!("innerprod-wlog α={a} β={b}"), "innerprod-wlog", pieces(&[Pair(b, a)])))
}

/// `⟨Z(0)|X(π)⟩ = ⟨Z(0)|X(0)⟩`.
fn pi_remove() -> Res<Fixture> {
    let mut d = Diagram::empty();
    let (z, x) = d.add_pair(ZERO, PI);
    let mut s = Script::new(d);
    s.unfuse(x, ZERO)?;
    let e = between(s.d(), z, x)?;
    s.step("pi-copy", Forward, Site::vertices(&[z, x]).with_edges(&[e]).with_params(&[Z]))?;
    Ok(s.finish("pi-remove".into(), "pi-remove", pieces(&[UNIT])))
}

/// `⟨Z(α)|X(π)⟩ ⊗ ⟨Z(β)|X(π)⟩ = ⟨Z(α+β)|X(π)⟩ ⊗ ⟨Z(0)|X(0)⟩`.
fn pi_multiplication(a: Phase, b: Phase) -> Res<Fixture> {
    let mut d = Diagram::empty();
    let (z1, x1) = d.add_pair(a, PI);
    let (z2, x2) = d.add_pair(b, PI);
    let mut s = Script::new(d);
    let s1 = s.unfuse(x1, ZERO)?;
    let s2 = s.unfuse(x2, ZERO)?;
    let created = s.step("copy", Backward, Site::vertices(&[s1, s2]).with_params(&[Z]))?;
    let (c, st) = (created[0], created[1]);
    let l = between(s.d(), c, st)?;
    s.step("pi-copy", Backward, Site::vertices(&[c]).with_edges(&[l]).with_params(&[Z]))?;
    s.fuse(c, z1)?;
    s.fuse(c, z2)?;
    let p = neighbour(s.d(), c, &[])?;
    s.fuse(p, st)?;
    let target = pieces(&[Pair(a + b, PI), UNIT]);
    Ok(s.finish(format!("pi-multiplication α={a} β={b}"), "pi-multiplication", target))
}

/// `⟨Z(α)|X(0)⟩ = ⟨Z(0)|X(0)⟩`.
fn overlap(a: Phase) -> Res<Fixture> {
    let mut d = Diagram::empty();
    let (z0, s1) = d.add_pair(a, ZERO);
    let mut s = Script::new(d);
    s.halfscalar(Backward)?;
    s.lemma("pi-remove", Backward, &[UNIT])?;
    // ⟨Z(0)|X(π)⟩ ⊗ ⟨Z(0)|X(0)⟩ into ⟨Z(−α)|X(π)⟩ ⊗ ⟨Z(α)|X(π)⟩.
    let case = pi_mult_case(&[Pair(-a, PI), Pair(a, PI)])?;
    let vs = find_pieces(s.d(), &[Pair(ZERO, PI), UNIT], &[]).ok_or("pieces")?;
    let created = s.step("pi-multiplication", Backward, Site::vertices(&vs).with_params(&[case]))?;
    let (z3, x3) = (created[2], created[3]);
    let s2 = s.unfuse(x3, ZERO)?;
    let created = s.step("copy", Backward, Site::vertices(&[s1, s2]).with_params(&[Z]))?;
    let (c, st) = (created[0], created[1]);
    s.fuse(c, z0)?;
    let mut vs = vec![x3, c];
    vs.extend(s.unit(Z)?);
    let e = between(s.d(), x3, c)?;
    s.step("pi-commute", Forward, Site::vertices(&vs).with_edges(&[e]).with_params(&[Z]))?;
    s.fuse(z3, x3)?;
    s.fuse(c, st)?;
    s.lemma("pi-remove", Forward, &[Pair(ZERO, PI)])?;
    s.lemma("pi-multiplication", Forward, &[Pair(-a, PI), Pair(a, PI)])?;
    s.lemma("pi-remove", Forward, &[Pair(ZERO, PI)])?;
    s.halfscalar(Forward)?;
    Ok(s.finish(format!("overlap-ket-zero α={a}"), "overlap-ket-zero", pieces(&[UNIT])))
}

/// The case of pi-multiplication whose left side is `want`.
fn pi_mult_case(want: &[ScalarPiece]) -> Res<i64> {
    let (case, _) = find_case("pi-multiplication", Forward, want).ok_or("no pi-multiplication case")?;
    Ok(case as i64)
}

/// `X(−π/2)` state is `Z(π/2)` state ⊗ `⟨Z(−π/2)|X(−π/2)⟩ ⊗ ★`.
fn y_states() -> Res<Fixture> {
    let mut d = Diagram::new(0, 1);
    let u = d.add_vertex(VertexKind::XSpider(MINUS_HALF));
    d.add_edge(End::Vertex(u), End::Output(0));
    let mut s = Script::new(d);
    s.step("colour", Forward, Site::vertices(&[u]))?;
    let h = neighbour(s.d(), u, &[])?;
    s.halfscalar(Backward)?;
    let mut vs = vec![h];
    vs.extend(find_pieces(s.d(), &[UNIT, UNIT], &[]).ok_or("no units")?);
    let chain = s.step("euler", Forward, Site::vertices(&vs).with_params(&[Z]))?;
    let (a, m, b) = (chain[0], chain[1], chain[2]);
    s.fuse(u, a)?;
    s.unfuse(m, HALF)?;
    s.halfscalar(Backward)?;
    let mut vs = vec![u, m];
    vs.extend(s.unit(X)?);
    let e = between(s.d(), u, m)?;
    s.step("copy", Forward, Site::vertices(&vs).with_edges(&[e]).with_params(&[X]))?;
    let t = neighbour(s.d(), b, &[])?;
    s.fuse(b, t)?;
    s.lemma("innerprod-wlog", Forward, &[Pair(ZERO, HALF)])?;
    s.lemma("overlap-ket-zero", Forward, &[Pair(HALF, ZERO)])?;
    s.halfscalar(Forward)?;
    let mut target = Diagram::new(0, 1);
    let v = target.add_vertex(VertexKind::ZSpider(HALF));
    target.add_edge(End::Vertex(v), End::Output(0));
    add_pieces(&mut target, &[W_MINUS, Star]);
    Ok(s.finish("y-states".into(), "y-states", target))
}

/// `⟨Z(π/2)|X(π/2)⟩ ⊗ ⟨Z(−π/2)|X(−π/2)⟩ = ⟨Z(0)|X(0)⟩⁴`.
fn scalar_pi2_inverse() -> Res<Fixture> {
    let mut d = Diagram::empty();
    let (z, x) = d.add_pair(HALF, HALF);
    let (wz, wx) = d.add_pair(MINUS_HALF, MINUS_HALF);
    let mut s = Script::new(d);
    let st = s.unfuse(x, ZERO)?;
    let e = between(s.d(), x, st)?;
    let y = s.step("cup", Backward, Site::default().with_edges(&[e]).with_params(&[Z]))?[0];
    let e = between(s.d(), y, st)?;
    let y2 = s.step("spider", Backward, Site::vertices(&[y]).with_edges(&[e]).with_params(&[q(MINUS_HALF)]))?[0];
    let z2 = s.unfuse(z, ZERO)?;
    let es = [between(s.d(), z, x)?, between(s.d(), x, y)?];
    s.step("euler", Backward, Site::vertices(&[z, x, y, wz, wx]).with_edges(&es).with_params(&[Z]))?;
    s.step("colour", Backward, Site::vertices(&[z2]))?;
    s.unfuse(y2, MINUS_HALF)?;
    let mut vs = vec![z2, y2];
    vs.extend(s.unit(Z)?);
    let e = between(s.d(), z2, y2)?;
    s.step("copy", Forward, Site::vertices(&vs).with_edges(&[e]).with_params(&[Z]))?;
    let t = neighbour(s.d(), st, &[])?;
    s.fuse(st, t)?;
    s.step("colour", Forward, Site::vertices(&[st]))?;
    s.lemma("overlap-ket-zero", Forward, &[Pair(MINUS_HALF, ZERO)])?;
    s.halfscalar(Backward)?;
    let star = s.d().vertices().find(|(_, k)| *k == VertexKind::Star).ok_or("no star")?.0;
    s.step("star", Forward, Site::vertices(&[star, st]).with_params(&[Z]))?;
    Ok(s.finish("scalar-pi2-inverse".into(), "scalar-pi2-inverse", pieces(&[UNIT; 4])))
}

/// `⟨Z(π/2)|X(π/2)⟩ ⊗ ⟨Z(−π/2)|X(−π/2)⟩ ⊗ ★²` is empty.
fn omega_inverses() -> Res<Fixture> {
    let mut s = Script::new(pieces(&[W_PLUS, W_MINUS, Star, Star]));
    s.lemma("scalar-pi2-inverse", Forward, &[W_PLUS, W_MINUS])?;
    s.halfscalar(Forward)?;
    s.halfscalar(Forward)?;
    Ok(s.finish("omega-inverses".into(), "omega-inverses", Diagram::empty()))
}

/// `⟨Z(0)|X(0)⟩ ⊗ ⟨Z(−π/2)|X(−π/2)⟩ = ⟨Z(−π/2)|X(π)⟩ ⊗ ⟨Z(π/2)|X(π/2)⟩`.
fn scalar_pi2_equality() -> Res<Fixture> {
    let mut d = Diagram::empty();
    let (uz, ux) = d.add_pair(ZERO, ZERO);
    let (z, x) = d.add_pair(MINUS_HALF, MINUS_HALF);
    let mut s = Script::new(d);
    s.unfuse(x, HALF)?;
    let w = s.unfuse(z, ZERO)?;
    let e = between(s.d(), x, z)?;
    s.step("pi-commute", Forward, Site::vertices(&[x, z, uz, ux]).with_edges(&[e]).with_params(&[Z]))?;
    let e = between(s.d(), w, z)?;
    s.step("pi-copy", Forward, Site::vertices(&[w, z]).with_edges(&[e]).with_params(&[Z]))?;
    s.fuse(w, x)?;
    let target = pieces(&[Pair(MINUS_HALF, PI), W_PLUS]);
    Ok(s.finish("scalar-pi2-equality".into(), "scalar-pi2-equality", target))
}

/// `⟨Z(−π/2)|X(−π/2)⟩² = ⟨Z(−π/2)|X(π)⟩ ⊗ ⟨Z(0)|X(0)⟩³`.
fn omega_dagger_squared() -> Res<Fixture> {
    let mut s = Script::new(pieces(&[W_MINUS, W_MINUS]));
    s.halfscalar(Backward)?;
    s.lemma("scalar-pi2-equality", Forward, &[UNIT, W_MINUS])?;
    s.lemma("scalar-pi2-inverse", Forward, &[W_PLUS, W_MINUS])?;
    s.halfscalar(Forward)?;
    let target = pieces(&[Pair(MINUS_HALF, PI), UNIT, UNIT, UNIT]);
    Ok(s.finish("omega-dagger-squared".into(), "omega-dagger-squared", target))
}

/// `⟨Z(π)|X(π)⟩ ⊗ ⟨Z(π/2)|X(π/2)⟩ = ⟨Z(−π/2)|X(π)⟩ ⊗ ⟨Z(−π/2)|X(−π/2)⟩`.
fn minus_omega() -> Res<Fixture> {
    let mut s = Script::new(pieces(&[Pair(PI, PI), W_PLUS]));
    s.halfscalar(Backward)?;
    let case = pi_mult_case(&[Pair(MINUS_HALF, PI), Pair(MINUS_HALF, PI)])?;
    let vs = find_pieces(s.d(), &[Pair(PI, PI), UNIT], &[]).ok_or("pieces")?;
    s.step("pi-multiplication", Backward, Site::vertices(&vs).with_params(&[case]))?;
    s.lemma("scalar-pi2-equality", Backward, &[Pair(MINUS_HALF, PI), W_PLUS])?;
    s.halfscalar(Forward)?;
    let target = pieces(&[Pair(MINUS_HALF, PI), W_MINUS]);
    Ok(s.finish("minus-omega".into(), "minus-omega", target))
}

/// `⟨Z(±π/2)|X(∓π/2)⟩` contains a scalar `Z(π)`.
fn unique_zero(a: Phase) -> Res<Fixture> {
    let mut d = Diagram::empty();
    let (z, x) = d.add_pair(a, -a);
    let mut s = Script::new(d);
    let (case, w) = if a == HALF { (0, W_MINUS) } else { (1, W_PLUS) };
    s.step("y-states", Forward, Site::vertices(&[x]).with_params(&[case]))?;
    s.fuse(z, x)?;
    let target = pieces(&[Node(Colour::Z, PI), w, Star]);
    Ok(s.finish(format!("unique-zero α={a}"), "unique-zero", target))
}

/// A scalar `Z(α)` as pieces, for α other than π.
fn single_node(a: Phase) -> Res<Fixture> {
    let mut d = Diagram::empty();
    let z = d.add_vertex(VertexKind::ZSpider(a));
    let mut s = Script::new(d);
    let target = if a == ZERO {
        s.halfscalar(Backward)?;
        let star = s.d().vertices().find(|(_, k)| *k == VertexKind::Star).ok_or("no star")?.0;
        s.step("star", Forward, Site::vertices(&[star, z]).with_params(&[Z]))?;
        pieces(&[UNIT, UNIT])
    } else {
        let w = s.unfuse(z, a)?;
        let (case, piece) = if a == HALF { (3, W_PLUS) } else { (2, W_MINUS) };
        s.step("y-states", Forward, Site::vertices(&[w]).with_params(&[case]))?;
        s.lemma("innerprod-wlog", Forward, &[Pair(ZERO, -a)])?;
        s.lemma("overlap-ket-zero", Forward, &[Pair(-a, ZERO)])?;
        pieces(&[Star, UNIT, piece])
    };
    Ok(s.finish(format!("single-node α={a}"), "single-node", target))
}

/// Every fixture, in dependency order.
pub fn fixtures() -> Vec<Fixture> {
    let mut out: Vec<Res<Fixture>> = vec![h_cancel(), halfscalar()];
    for a in Phase::ALL {
        for b in Phase::ALL {
            if a != b {
                out.push(innerprod_wlog(a, b));
            }
        }
    }
    out.push(pi_remove());
    for a in Phase::ALL {
        for b in Phase::ALL {
            out.push(pi_multiplication(a, b));
        }
    }
    for a in [HALF, PI, MINUS_HALF] {
        out.push(overlap(a));
    }
    out.extend([y_states(), scalar_pi2_inverse(), omega_inverses(), scalar_pi2_equality()]);
    out.extend([omega_dagger_squared(), minus_omega(), unique_zero(HALF), unique_zero(MINUS_HALF)]);
    for a in [ZERO, HALF, MINUS_HALF] {
        out.push(single_node(a));
    }
    out.into_iter().map(|f| f.expect("fixture scripts are fixed")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_checks() {
        for f in fixtures() {
            f.check().unwrap_or_else(|e| panic!("{}: {e}", f.name));
        }
    }

    #[test]
    fn fixtures_only_use_earlier_lemmas() {
        let mut proven = std::collections::BTreeSet::new();
        let book = RuleBook::standard();
        for f in fixtures() {
            for step in &f.derivation.steps {
                let origin = book.get(&step.rule).unwrap().origin();
                assert!(
                    origin != Origin::Lemma || proven.contains(step.rule.as_str()),
                    "{} uses {} before it is proven",
                    f.name,
                    step.rule
                );
            }
            proven.insert(f.lemma);
        }
    }
}
