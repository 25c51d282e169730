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

//! Derivations: recorded sequences of rule applications.

use std::collections::BTreeSet;
use std::fmt;

use super::{Direction, RuleBook, Site};
use crate::diagram::{Diagram, EdgeId, VertexId};
use crate::error::{ParseError, RewriteError};

/// One rule application.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub rule: String,
    pub direction: Direction,
    pub site: Site,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.rule, self.direction, self.site)
    }
}

impl Step {
    /// Parses one line of the derivation text format.
    pub fn parse(line: &str) -> Result<Step, String> {
        let mut parts = line.trim().splitn(3, ' ');
        let rule = parts.next().filter(|s| !s.is_empty()).ok_or("missing rule id")?;
        let direction = parts.next().ok_or("missing direction")?.parse()?;
        let site = parts.next().ok_or("missing site")?.parse()?;
        Ok(Step { rule: rule.to_string(), direction, site })
    }
}

/// A graphical proof that `start` equals `end`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub start: Diagram,
    pub steps: Vec<Step>,
    pub end: Diagram,
}

impl Derivation {
    /// The trivial derivation of `d` from itself.
    pub fn identity(d: Diagram) -> Derivation {
        Derivation { start: d.clone(), steps: Vec::new(), end: d }
    }

    /// The steps in the line-oriented text format, one per line.
    pub fn steps_text(&self) -> String {
        self.steps.iter().map(|s| format!("{s}\n")).collect()
    }

    /// Parses the text format. Blank lines and lines starting with `#`
    /// are ignored.
    pub fn parse_steps(text: &str) -> Result<Vec<Step>, ParseError> {
        text.lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .map(|(i, l)| Step::parse(l).map_err(|message| ParseError::Derivation { line: i + 1, message }))
            .collect()
    }

    /// Replays the steps and checks that they end at `end`.
    pub fn verify(&self) -> Result<(), RewriteError> {
        let last = replay_derivation(self)?;
        if last == self.end {
            Ok(())
        } else {
            Err(RewriteError::EndMismatch)
        }
    }

    /// Appends `next`, which must start where `self` ends.
    pub fn then(mut self, next: Derivation) -> Derivation {
        debug_assert!(self.end == next.start);
        self.steps.extend(next.steps);
        self.end = next.end;
        self
    }
}

/// Replays every step from `der.start` and returns the final diagram.
pub fn replay_derivation(der: &Derivation) -> Result<Diagram, RewriteError> {
    let book = RuleBook::standard();
    let mut d = der.start.clone();
    for (index, step) in der.steps.iter().enumerate() {
        d = book
            .apply(&d, step)
            .map_err(|e| RewriteError::Replay { index, source: Box::new(e) })?;
    }
    Ok(d)
}

/// Applies rules one at a time while recording a derivation.
#[derive(Clone, Debug)]
pub struct Rewriter {
    start: Diagram,
    current: Diagram,
    steps: Vec<Step>,
}

impl Rewriter {
    pub fn new(d: Diagram) -> Rewriter {
        Rewriter { start: d.clone(), current: d, steps: Vec::new() }
    }

    pub fn diagram(&self) -> &Diagram {
        &self.current
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Applies a rule and returns the vertices it created, oldest first.
    pub fn apply(&mut self, rule: &str, direction: Direction, site: Site) -> Result<Vec<VertexId>, RewriteError> {
        let book = RuleBook::standard();
        let step = Step { rule: rule.to_string(), direction, site };
        let next = book.apply(&self.current, &step)?;
        let before: BTreeSet<VertexId> = self.current.vertex_ids().into_iter().collect();
        let created = next.vertex_ids().into_iter().filter(|v| !before.contains(v)).collect();
        self.current = next;
        self.steps.push(step);
        Ok(created)
    }

    pub fn forward(&mut self, rule: &str, site: Site) -> Result<Vec<VertexId>, RewriteError> {
        self.apply(rule, Direction::Forward, site)
    }

    pub fn backward(&mut self, rule: &str, site: Site) -> Result<Vec<VertexId>, RewriteError> {
        self.apply(rule, Direction::Backward, site)
    }

    /// Edges present now that were not present before the last `mark`.
    pub fn edges_since(&self, before: &BTreeSet<EdgeId>) -> Vec<EdgeId> {
        self.current.edge_ids().into_iter().filter(|e| !before.contains(e)).collect()
    }

    pub fn finish(self) -> Derivation {
        Derivation { start: self.start, steps: self.steps, end: self.current }
    }
}
