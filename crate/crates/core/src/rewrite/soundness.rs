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

//! Exhaustive semantic checking of the rule book.
//!
//! Every rule supplies small instantiations of both of its sides. The
//! sweep applies the rule to each of them, and to the colour-swapped and
//! upside-down variants, and compares the exact interpretations before
//! and after.

use std::fmt;

use rayon::prelude::*;

use super::{lemma_registry, negative_controls, rule_registry, Direction, Instance, Origin, Rule};
use crate::diagram::Diagram;
use crate::semantics::interpret;

/// Outcome of the sweep for one rule.
#[derive(Clone, Debug)]
pub struct RuleReport {
    pub id: &'static str,
    pub origin: Origin,
    /// Number of base instantiations of the left-hand side. Instances of
    /// the right-hand side check the same equations again and are only
    /// counted in `checks`.
    pub instantiations: usize,
    /// Number of checked applications, variants included.
    pub checks: usize,
    /// Descriptions of failed checks.
    pub failures: Vec<String>,
}

impl RuleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub max_legs: usize,
    pub rules: Vec<RuleReport>,
}

impl SweepReport {
    /// True when every sound rule passed and every negative control failed.
    pub fn ok(&self) -> bool {
        self.rules.iter().all(|r| r.passed() != (r.origin == Origin::NegativeControl))
    }

    pub fn get(&self, id: &str) -> Option<&RuleReport> {
        self.rules.iter().find(|r| r.id == id)
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<22} {:<17} {:>8} {:>7}  result", "rule", "origin", "base", "checks")?;
        for r in &self.rules {
            let result = match (r.passed(), r.origin == Origin::NegativeControl) {
                (true, false) => "sound".to_string(),
                (false, true) => format!("rejected ({} failures, as expected)", r.failures.len()),
                (true, true) => "NOT REJECTED".to_string(),
                (false, false) => format!("FAILED ({})", r.failures.len()),
            };
            writeln!(f, "{:<22} {:<17} {:>8} {:>7}  {result}", r.id, format!("{:?}", r.origin), r.instantiations, r.checks)?;
            if r.origin != Origin::NegativeControl {
                for failure in r.failures.iter().take(5) {
                    writeln!(f, "    {failure}")?;
                }
            }
        }
        Ok(())
    }
}

/// The variants of one base instance that are checked.
fn variants(rule: &dyn Rule, inst: &Instance) -> Vec<(String, Diagram, super::Site)> {
    let mut out = vec![("".to_string(), inst.diagram.clone(), inst.site.clone())];
    let swapped_site = match rule.colour_param() {
        Some(i) => {
            let mut s = inst.site.clone();
            if s.params.len() <= i {
                s.params.resize(i + 1, 0);
            }
            s.params[i] = 1 - s.params[i];
            Some(s)
        }
        None if rule.colour_symmetric() => Some(inst.site.clone()),
        None => None,
    };
    if let Some(site) = swapped_site {
        out.push((" [colour-swapped]".into(), inst.diagram.colour_swap(), site.clone()));
        out.push((" [colour-swapped, flipped]".into(), inst.diagram.colour_swap().flipped(), site));
    }
    out.push((" [flipped]".into(), inst.diagram.flipped(), inst.site.clone()));
    out
}

fn check(rule: &dyn Rule, inst: &Instance) -> (usize, Vec<String>) {
    let mut failures = Vec::new();
    let vs = variants(rule, inst);
    for (tag, d, site) in &vs {
        let what = format!("{} {} {site}{tag}", inst.label, inst.direction);
        let after = match rule.rewrite(d, site, inst.direction) {
            Ok(after) => after,
            Err(reason) => {
                failures.push(format!("{what}: did not apply: {reason}"));
                continue;
            }
        };
        match (interpret(d), interpret(&after)) {
            (Ok(a), Ok(b)) if a == b => {}
            (Ok(a), Ok(b)) => failures.push(format!("{what}: {} became {}", a.approx_string(), b.approx_string())),
            (Err(e), _) => failures.push(format!("{what}: bad instance: {e}")),
            (_, Err(e)) => failures.push(format!("{what}: bad result: {e}")),
        }
    }
    (vs.len(), failures)
}

/// Checks one rule on all its instantiations.
pub fn check_rule(rule: &dyn Rule, max_legs: usize) -> RuleReport {
    let instances = rule.instances(max_legs);
    let results: Vec<(usize, Vec<String>)> = instances.par_iter().map(|i| check(rule, i)).collect();
    RuleReport {
        id: rule.id(),
        origin: rule.origin(),
        instantiations: instances.iter().filter(|i| i.direction == Direction::Forward).count(),
        checks: results.iter().map(|r| r.0).sum(),
        failures: results.into_iter().flat_map(|r| r.1).collect(),
    }
}

/// Checks the axioms and lemmas, and the negative controls when asked.
pub fn soundness_sweep(max_legs: usize, include_negative_controls: bool) -> SweepReport {
    let mut rules = rule_registry();
    rules.extend(lemma_registry());
    if include_negative_controls {
        rules.extend(negative_controls());
    }
    let reports = rules.par_iter().map(|r| check_rule(r.as_ref(), max_legs)).collect();
    SweepReport { max_legs, rules: reports }
}
