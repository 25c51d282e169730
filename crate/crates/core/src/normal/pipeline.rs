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

//! Scalar normalization and zero recognition.

use std::fmt;

use super::scalar::{ScalarNF, ScalarPiece};
use super::simplify::{fail, piece_vertices, simplify, Goal};
use crate::diagram::{is_isomorphic, Colour, Diagram, End, VertexId, VertexKind};
use crate::error::{DiagramError, NormalError};
use crate::phase::Phase;
use crate::rewrite::scalar_lemmas::{find_case, find_pieces};
use crate::rewrite::{Derivation, Direction, Rewriter, Site};
use crate::semantics::ExactScalar;

use ScalarPiece::{Node, Pair, Star};

const ZERO: Phase = Phase::ZERO;
const HALF: Phase = Phase::HALF_PI;
const PI: Phase = Phase::PI;
const MINUS_HALF: Phase = Phase::MINUS_HALF_PI;
const UNIT: ScalarPiece = Pair(ZERO, ZERO);
const W_PLUS: ScalarPiece = Pair(HALF, HALF);
const W_MINUS: ScalarPiece = Pair(MINUS_HALF, MINUS_HALF);
const Z: i64 = 0;

/// The zero normal form: a scalar `Z(π)` and one phase-free Z spider on
/// every boundary wire.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ZeroNF {
    pub n_inputs: usize,
    pub n_outputs: usize,
}

impl ZeroNF {
    pub fn diagram(self) -> Diagram {
        let mut d = Diagram::new(self.n_inputs, self.n_outputs);
        d.add_vertex(VertexKind::ZSpider(PI));
        for end in d.boundary() {
            let u = d.add_vertex(VertexKind::ZSpider(ZERO));
            d.add_edge(End::Vertex(u), end);
        }
        d
    }
}

impl fmt::Display for ZeroNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zero({}, {})", self.n_inputs, self.n_outputs)
    }
}

/// The normal form of a scalar diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScalarForm {
    NonZero(ScalarNF),
    Zero,
}

impl ScalarForm {
    pub fn value(self) -> ExactScalar {
        match self {
            ScalarForm::NonZero(nf) => nf.value(),
            ScalarForm::Zero => ExactScalar::Zero,
        }
    }

    pub fn diagram(self) -> Diagram {
        match self {
            ScalarForm::NonZero(nf) => nf.diagram(),
            ScalarForm::Zero => ZeroNF { n_inputs: 0, n_outputs: 0 }.diagram(),
        }
    }
}

impl fmt::Display for ScalarForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarForm::NonZero(nf) => nf.fmt(f),
            ScalarForm::Zero => f.write_str("zero(0, 0)"),
        }
    }
}

/// The canonical diagram of an exact scalar.
pub fn scalar_normal_form(s: ExactScalar) -> ScalarForm {
    match ScalarNF::from_scalar(s) {
        Some(nf) => ScalarForm::NonZero(nf),
        None => ScalarForm::Zero,
    }
}

fn require_scalar(d: &Diagram) -> Result<(), NormalError> {
    if d.is_scalar() {
        Ok(())
    } else {
        Err(DiagramError::NotScalar { inputs: d.n_inputs(), outputs: d.n_outputs() }.into())
    }
}

/// Rewrites a scalar diagram into disconnected components of at most two
/// spiders each, next to stars.
pub fn decompose_scalar(d: &Diagram) -> Result<Derivation, NormalError> {
    require_scalar(d)?;
    let mut rw = Rewriter::new(d.clone());
    simplify(&mut rw, Goal::Reduced)?;
    Ok(rw.finish())
}

/// Rewrites a scalar diagram into its normal form.
pub fn normalize_scalar_diagram(d: &Diagram) -> Result<(ScalarForm, Derivation), NormalError> {
    require_scalar(d)?;
    let mut rw = Rewriter::new(d.clone());
    simplify(&mut rw, Goal::Reduced)?;
    let form = match reduce_pieces(&mut rw)? {
        Some(witness) => {
            clear_zero(&mut rw, witness)?;
            ScalarForm::Zero
        }
        None => ScalarForm::NonZero(read_pieces(rw.diagram())?),
    };
    if !is_isomorphic(rw.diagram(), &form.diagram()) {
        return Err(NormalError::Stuck(format!("scalar pieces did not reach {form}")));
    }
    Ok((form, rw.finish()))
}

/// Decides whether a diagram denotes a zero matrix by rewriting until a
/// scalar `Z(π)` appears or the scalar part is a non-zero normal form.
pub fn is_zero(d: &Diagram) -> Result<bool, NormalError> {
    Ok(find_zero(d)?.is_some())
}

/// Rewrites `d` until it contains a scalar `Z(π)`; `None` if `d` is not zero.
pub fn find_zero(d: &Diagram) -> Result<Option<(Rewriter, VertexId)>, NormalError> {
    let mut rw = Rewriter::new(d.clone());
    if let Some(w) = witness(rw.diagram()) {
        return Ok(Some((rw, w)));
    }
    simplify(&mut rw, Goal::Reduced)?;
    Ok(reduce_pieces(&mut rw)?.map(|w| (rw, w)))
}

/// Rewrites a zero diagram into the zero normal form of its arity.
pub fn zero_normal_form(d: &Diagram) -> Result<(ZeroNF, Derivation), NormalError> {
    let (mut rw, w) = find_zero(d)?.ok_or(NormalError::NotZero)?;
    clear_zero(&mut rw, w)?;
    let nf = ZeroNF { n_inputs: d.n_inputs(), n_outputs: d.n_outputs() };
    if !is_isomorphic(rw.diagram(), &nf.diagram()) {
        return Err(NormalError::Stuck(format!("zero diagram did not reach {nf}")));
    }
    Ok((nf, rw.finish()))
}

/// A scalar `Z(π)` spider.
fn witness(d: &Diagram) -> Option<VertexId> {
    d.vertices().find(|&(v, k)| k == VertexKind::ZSpider(PI) && d.degree(v) == 0).map(|(v, _)| v)
}

/// The scalar pieces of `d`, ordered by their first vertex.
pub(crate) fn inventory(d: &Diagram) -> Vec<ScalarPiece> {
    let pieces = piece_vertices(d);
    let mut out = Vec::new();
    for &v in &pieces {
        let k = d.kind(v).expect("piece vertex");
        match k {
            VertexKind::Star => out.push(Star),
            VertexKind::ZSpider(a) if d.degree(v) == 1 => {
                let x = d.neighbours(v)[0].vertex().expect("pair");
                out.push(Pair(a, d.kind(x).and_then(|k| k.phase()).expect("pair")));
            }
            _ if d.degree(v) == 0 => out.push(Node(k.colour().expect("spider"), k.phase().expect("spider"))),
            _ => {}
        }
    }
    out
}

fn lemma(rw: &mut Rewriter, id: &str, direction: Direction, from: &[ScalarPiece]) -> Result<Vec<VertexId>, NormalError> {
    let (case, _) = find_case(id, direction, from)
        .ok_or_else(|| NormalError::Stuck(format!("{id} has no case for the given pieces")))?;
    let vs = find_pieces(rw.diagram(), from, &[])
        .ok_or_else(|| NormalError::Stuck(format!("pieces for {id} are missing")))?;
    rw.apply(id, direction, Site::vertices(&vs).with_params(&[case as i64])).map_err(fail)
}

/// Brings the scalar pieces into normal form. Returns a scalar `Z(π)` as
/// soon as one is found, in which case the scalar is zero.
pub(crate) fn reduce_pieces(rw: &mut Rewriter) -> Result<Option<VertexId>, NormalError> {
    // Single X nodes become Z nodes.
    loop {
        let d = rw.diagram();
        let x = d
            .vertices()
            .find(|&(v, k)| k.colour() == Some(Colour::X) && d.degree(v) == 0)
            .map(|(v, _)| v);
        match x {
            Some(x) => rw.forward("colour", Site::vertices(&[x])).map_err(fail)?,
            None => break,
        };
    }
    if let Some(w) = witness(rw.diagram()) {
        return Ok(Some(w));
    }
    for zero in [Pair(HALF, MINUS_HALF), Pair(MINUS_HALF, HALF)] {
        if inventory(rw.diagram()).contains(&zero) {
            lemma(rw, "unique-zero", Direction::Forward, &[zero])?;
            return Ok(witness(rw.diagram()));
        }
    }
    for piece in inventory(rw.diagram()) {
        if let Node(Colour::Z, _) = piece {
            lemma(rw, "single-node", Direction::Forward, &[piece])?;
        }
    }
    // Orient every pair as a unit, a phase `⟨Z(α)|X(π)⟩` or `⟨Z(±π/2)|X(±π/2)⟩`.
    for piece in inventory(rw.diagram()) {
        let Pair(a, b) = piece else { continue };
        if a.is_zero() && b.is_proper_clifford() {
            lemma(rw, "innerprod-wlog", Direction::Forward, &[piece])?;
            lemma(rw, "overlap-ket-zero", Direction::Forward, &[Pair(b, a)])?;
        } else if !a.is_zero() && b.is_zero() {
            lemma(rw, "overlap-ket-zero", Direction::Forward, &[piece])?;
        } else if a.is_zero() && b == PI {
            lemma(rw, "pi-remove", Direction::Forward, &[piece])?;
        } else if a == PI && b.is_proper_clifford() {
            lemma(rw, "innerprod-wlog", Direction::Forward, &[piece])?;
        }
    }
    loop {
        let inv = inventory(rw.diagram());
        let phases: Vec<Phase> = inv
            .iter()
            .filter_map(|p| match *p {
                Pair(a, b) if b == PI && !a.is_zero() => Some(a),
                _ => None,
            })
            .collect();
        if let [a, b, ..] = phases[..] {
            lemma(rw, "pi-multiplication", Direction::Forward, &[Pair(a, PI), Pair(b, PI)])?;
            if (a + b).is_zero() {
                lemma(rw, "pi-remove", Direction::Forward, &[Pair(ZERO, PI)])?;
            }
            continue;
        }
        let plus = inv.iter().filter(|&&p| p == W_PLUS).count();
        let minus = inv.iter().filter(|&&p| p == W_MINUS).count();
        if plus > 0 && minus > 0 {
            lemma(rw, "scalar-pi2-inverse", Direction::Forward, &[W_PLUS, W_MINUS])?;
        } else if minus >= 2 {
            lemma(rw, "omega-dagger-squared", Direction::Forward, &[W_MINUS, W_MINUS])?;
        } else if plus >= 2 {
            lemma(rw, "omega-dagger-squared", Direction::Forward, &[W_PLUS, W_PLUS])?;
        } else {
            let phase = phases.first().copied();
            let w = if plus > 0 { Some(W_PLUS) } else if minus > 0 { Some(W_MINUS) } else { None };
            match (phase, w) {
                (Some(p), Some(W_MINUS)) if p == HALF => {
                    lemma(rw, "scalar-pi2-equality", Direction::Backward, &[Pair(HALF, PI), W_MINUS])?;
                }
                (Some(p), Some(W_PLUS)) if p == MINUS_HALF => {
                    lemma(rw, "scalar-pi2-equality", Direction::Backward, &[Pair(MINUS_HALF, PI), W_PLUS])?;
                }
                (Some(PI), Some(w)) => {
                    lemma(rw, "minus-omega", Direction::Forward, &[Pair(PI, PI), w])?;
                }
                _ => break,
            }
        }
    }
    loop {
        let inv = inventory(rw.diagram());
        let units = inv.iter().filter(|&&p| p == UNIT).count();
        if units < 2 || !inv.contains(&Star) {
            break;
        }
        lemma(rw, "halfscalar", Direction::Forward, &[Star, UNIT, UNIT])?;
    }
    Ok(None)
}

/// Reads the normal form off fully reduced scalar pieces.
pub(crate) fn read_pieces(d: &Diagram) -> Result<ScalarNF, NormalError> {
    let pieces = inventory(d);
    let (mut r, mut s) = (0i64, 0i64);
    for p in &pieces {
        match p.value() {
            ExactScalar::Value { r: a, s: b } => {
                r += a;
                s += b as i64;
            }
            ExactScalar::Zero => return Err(NormalError::Stuck(format!("zero piece {p} left over"))),
        }
    }
    let nf = ScalarNF::new(r, s);
    let mut want = nf.pieces();
    let mut have = pieces;
    want.sort();
    have.sort();
    if want != have {
        return Err(NormalError::Stuck(format!("scalar pieces are not in normal form {nf}")));
    }
    Ok(nf)
}

/// Given a scalar `Z(π)` at `w`, rewrites everything else into the zero
/// normal form.
pub(crate) fn clear_zero(rw: &mut Rewriter, w: VertexId) -> Result<(), NormalError> {
    // Hadamard nodes go first, each with two units borrowed from a star.
    loop {
        let d = rw.diagram();
        let Some((h, _)) = d.vertices().find(|&(_, k)| k == VertexKind::Hadamard) else { break };
        let created = lemma(rw, "halfscalar", Direction::Backward, &[])?;
        let units: Vec<VertexId> = created.into_iter().filter(|&v| rw.diagram().kind(v) != Some(VertexKind::Star)).collect();
        let mut vs = vec![h];
        vs.extend(units);
        rw.forward("euler", Site::vertices(&vs).with_params(&[Z])).map_err(fail)?;
    }
    while rw.diagram().free_loops() > 0 {
        let created = rw.backward("cup", Site::default().with_params(&[Z, 1])).map_err(fail)?;
        let u = created[0];
        let e = rw.diagram().incident(End::Vertex(u))[0];
        rw.forward("loop", Site::vertices(&[u]).with_edges(&[e])).map_err(fail)?;
    }
    let xs: Vec<VertexId> =
        rw.diagram().vertices().filter(|(_, k)| k.colour() == Some(Colour::X)).map(|(v, _)| v).collect();
    for u in xs {
        rw.forward("zero", Site::vertices(&[w, u]).with_params(&[1, Z])).map_err(fail)?;
    }
    // Cut every edge between spiders.
    let edges: Vec<_> = rw.diagram().edges().collect();
    for (e, (a, b)) in edges {
        match (a, b) {
            (End::Vertex(a), End::Vertex(b)) if a == b => {
                rw.forward("loop", Site::vertices(&[a]).with_edges(&[e])).map_err(fail)?;
            }
            (End::Vertex(a), End::Vertex(b)) => {
                rw.forward("zero", Site::vertices(&[w, a, b]).with_edges(&[e]).with_params(&[0, Z])).map_err(fail)?;
            }
            (a, b) if a.is_boundary() && b.is_boundary() => {
                rw.backward("cup", Site::default().with_edges(&[e]).with_params(&[Z])).map_err(fail)?;
            }
            _ => {}
        }
    }
    // Give every boundary wire its own phase-free spider, then drop the rest.
    let holders: Vec<VertexId> = rw.diagram().vertices().map(|(v, _)| v).filter(|&v| rw.diagram().degree(v) > 0).collect();
    for u in holders {
        for e in rw.diagram().incident(End::Vertex(u)).to_vec() {
            let created = rw.backward("spider", Site::vertices(&[u]).with_edges(&[e]).with_params(&[0])).map_err(fail)?;
            let link = rw.diagram().edges_between(End::Vertex(u), End::Vertex(created[0]))[0];
            rw.forward("zero", Site::vertices(&[w, u, created[0]]).with_edges(&[link]).with_params(&[0, Z]))
                .map_err(fail)?;
        }
    }
    let scalars: Vec<VertexId> = rw
        .diagram()
        .vertices()
        .filter(|&(v, k)| v != w && k.is_spider() && rw.diagram().degree(v) == 0)
        .map(|(v, _)| v)
        .collect();
    for z in scalars {
        rw.forward("zero-scalar", Site::vertices(&[w, z]).with_params(&[Z])).map_err(fail)?;
    }
    let stars: Vec<VertexId> =
        rw.diagram().vertices().filter(|&(_, k)| k == VertexKind::Star).map(|(v, _)| v).collect();
    for s in stars {
        let z = rw.backward("zero-scalar", Site::vertices(&[w]).with_params(&[Z, 0])).map_err(fail)?[0];
        rw.forward("star", Site::vertices(&[s, z]).with_params(&[Z])).map_err(fail)?;
    }
    Ok(())
}
