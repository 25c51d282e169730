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

//! Rewrite rules, rule application and derivations.
//!
//! A rule rewrites a [`Diagram`] at a [`Site`]: a list of vertices, a list
//! of edges and a list of integer parameters whose meaning is fixed per
//! rule. Every rule can be applied forward and most backward. Applying a
//! rule returns a new diagram; applications are recorded as [`Step`]s of a
//! [`Derivation`], which can be replayed and checked.

mod derivation;
pub mod fixtures;
pub(crate) mod graph_lemmas;
mod primitive;
pub(crate) mod scalar_lemmas;
pub mod soundness;
mod util;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::diagram::{Diagram, EdgeId, VertexId};
use crate::error::RewriteError;

pub use derivation::{replay_derivation, Derivation, Rewriter, Step};

/// Which side of a rule is matched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn reversed(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        })
    }
}

impl FromStr for Direction {
    type Err = String;
    fn from_str(s: &str) -> Result<Direction, String> {
        match s {
            "forward" | "fwd" => Ok(Direction::Forward),
            "backward" | "bwd" => Ok(Direction::Backward),
            other => Err(format!("unknown direction {other:?}")),
        }
    }
}

/// A binding of a rule's pattern into a diagram.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Site {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub params: Vec<i64>,
}

impl Site {
    pub fn new(vertices: Vec<VertexId>, edges: Vec<EdgeId>, params: Vec<i64>) -> Site {
        Site { vertices, edges, params }
    }

    pub fn vertices(vertices: &[VertexId]) -> Site {
        Site { vertices: vertices.to_vec(), ..Site::default() }
    }

    pub fn with_edges(mut self, edges: &[EdgeId]) -> Site {
        self.edges = edges.to_vec();
        self
    }

    pub fn with_params(mut self, params: &[i64]) -> Site {
        self.params = params.to_vec();
        self
    }
}

/// Text form `v=1,2 e=3 p=0,1`; an empty site is `-`.
impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: Vec<String>| xs.join(",");
        let mut parts = Vec::new();
        if !self.vertices.is_empty() {
            parts.push(format!("v={}", join(self.vertices.iter().map(|v| v.0.to_string()).collect())));
        }
        if !self.edges.is_empty() {
            parts.push(format!("e={}", join(self.edges.iter().map(|e| e.0.to_string()).collect())));
        }
        if !self.params.is_empty() {
            parts.push(format!("p={}", join(self.params.iter().map(|p| p.to_string()).collect())));
        }
        if parts.is_empty() {
            f.write_str("-")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

impl FromStr for Site {
    type Err = String;
    fn from_str(s: &str) -> Result<Site, String> {
        let mut site = Site::default();
        let s = s.trim();
        if s == "-" {
            return Ok(site);
        }
        for part in s.split_whitespace() {
            let (key, list) = part.split_once('=').ok_or_else(|| format!("bad site field {part:?}"))?;
            let values = list
                .split(',')
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<i64>().map_err(|e| format!("bad number {x:?}: {e}")))
                .collect::<Result<Vec<i64>, String>>()?;
            let as_u32 = |xs: &[i64]| {
                xs.iter()
                    .map(|&x| u32::try_from(x).map_err(|_| format!("bad id {x}")))
                    .collect::<Result<Vec<u32>, String>>()
            };
            match key {
                "v" => site.vertices = as_u32(&values)?.into_iter().map(VertexId).collect(),
                "e" => site.edges = as_u32(&values)?.into_iter().map(EdgeId).collect(),
                "p" => site.params = values,
                other => return Err(format!("unknown site field {other:?}")),
            }
        }
        Ok(site)
    }
}

/// Where a rule comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    /// One of the axioms of the calculus.
    Primitive,
    /// An axiom kept for convenience although other axioms derive it.
    DerivedPrimitive,
    /// A lemma with a replayable derivation from earlier rules.
    Lemma,
    /// A lemma used by the normal forms and checked by the soundness sweep.
    Checked,
    /// A deliberately unsound rule used to test the soundness sweep.
    NegativeControl,
}

/// An instantiation used by the soundness sweep: applying the rule to
/// `diagram` at `site` in `direction` must preserve the interpretation.
#[derive(Clone, Debug)]
pub struct Instance {
    pub label: String,
    pub diagram: Diagram,
    pub site: Site,
    pub direction: Direction,
}

pub trait Rule: Send + Sync {
    fn id(&self) -> &'static str;

    fn origin(&self) -> Origin;

    /// One line describing the rule.
    fn summary(&self) -> &'static str;

    /// All sites where the chosen side matches, in a deterministic order.
    fn matches(&self, d: &Diagram, direction: Direction) -> Vec<Site>;

    /// Rewrites `d` at `site`. The error explains why the site does not fit.
    fn rewrite(&self, d: &Diagram, site: &Site, direction: Direction) -> Result<Diagram, String>;

    /// Base instantiations with spider legs bounded by `max_legs`. The
    /// soundness sweep adds colour-swapped and upside-down variants.
    fn instances(&self, max_legs: usize) -> Vec<Instance>;

    /// Index of the site parameter holding the pattern colour, toggled for
    /// the colour-swapped variant. `None` when the site has no colour.
    fn colour_param(&self) -> Option<usize> {
        None
    }

    /// False for rules stated for one colour only.
    fn colour_symmetric(&self) -> bool {
        true
    }
}

/// Applies a rule, recording the step.
pub fn apply_rule(
    d: &Diagram,
    rule: &dyn Rule,
    site: &Site,
    direction: Direction,
) -> Result<(Diagram, Step), RewriteError> {
    let out = rule.rewrite(d, site, direction).map_err(|reason| RewriteError::StaleSite {
        rule: rule.id().to_string(),
        direction: direction.to_string(),
        site: site.to_string(),
        reason,
    })?;
    Ok((out, Step { rule: rule.id().to_string(), direction, site: site.clone() }))
}

/// All sites of `rule` in `d`.
pub fn match_rule(d: &Diagram, rule: &dyn Rule, direction: Direction) -> Vec<Site> {
    rule.matches(d, direction)
}

/// The axioms: exactly the rules of the calculus, in a fixed order.
pub fn rule_registry() -> Vec<Box<dyn Rule>> {
    primitive::primitives()
}

/// Lemmas derived from the axioms, used by the normalization procedures.
pub fn lemma_registry() -> Vec<Box<dyn Rule>> {
    let mut out = scalar_lemmas::lemmas();
    out.extend(graph_lemmas::lemmas());
    out
}

/// Unsound variants of the copy and bialgebra rules without their scalars.
pub fn negative_controls() -> Vec<Box<dyn Rule>> {
    primitive::negative_controls()
}

/// Lookup table over axioms and lemmas.
pub struct RuleBook {
    rules: Vec<Box<dyn Rule>>,
    index: BTreeMap<&'static str, usize>,
}

impl RuleBook {
    fn build() -> RuleBook {
        let mut rules = rule_registry();
        rules.extend(lemma_registry());
        let index = rules.iter().enumerate().map(|(i, r)| (r.id(), i)).collect();
        RuleBook { rules, index }
    }

    /// The shared book of all axioms and lemmas.
    pub fn standard() -> &'static RuleBook {
        static BOOK: OnceLock<RuleBook> = OnceLock::new();
        BOOK.get_or_init(RuleBook::build)
    }

    pub fn get(&self, id: &str) -> Result<&dyn Rule, RewriteError> {
        self.index
            .get(id)
            .map(|&i| self.rules[i].as_ref())
            .ok_or_else(|| RewriteError::UnknownRule(id.to_string()))
    }

    pub fn rules(&self) -> impl Iterator<Item = &dyn Rule> {
        self.rules.iter().map(|r| r.as_ref())
    }

    pub fn apply(&self, d: &Diagram, step: &Step) -> Result<Diagram, RewriteError> {
        let rule = self.get(&step.rule)?;
        apply_rule(d, rule, &step.site, step.direction).map(|(out, _)| out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn site_text_round_trip() {
        let s = Site::new(vec![VertexId(3), VertexId(10)], vec![EdgeId(7)], vec![-1, 2]);
        assert_eq!(s.to_string(), "v=3,10 e=7 p=-1,2");
        assert_eq!(s.to_string().parse::<Site>().unwrap(), s);
        assert_eq!(Site::default().to_string(), "-");
        assert_eq!("-".parse::<Site>().unwrap(), Site::default());
    }
}
