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

//! Seeded random diagrams for tests and benchmarks.
//!
//! Every generator takes an explicit RNG. [`seed_from_env`] reads the
//! `ZX_SEED` variable so that whole corpora can be reproduced.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{Colour, Diagram, End, VertexId, VertexKind};
use crate::phase::Phase;
use crate::rewrite::{Direction, RuleBook, Site};

pub type ZxRng = ChaCha8Rng;

/// `ZX_SEED` if set and numeric, else `default`.
pub fn seed_from_env(default: u64) -> u64 {
    std::env::var("ZX_SEED").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(default)
}

pub fn rng(seed: u64) -> ZxRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_phase(rng: &mut ZxRng) -> Phase {
    Phase::new(rng.gen_range(0..4))
}

fn random_colour(rng: &mut ZxRng) -> Colour {
    if rng.gen_bool(0.5) {
        Colour::Z
    } else {
        Colour::X
    }
}

/// Stars, scalar spiders and two-spider pairs, `1..=max_components` of them.
pub fn random_scalar_diagram(rng: &mut ZxRng, max_components: usize) -> Diagram {
    let mut d = Diagram::empty();
    for _ in 0..rng.gen_range(1..=max_components.max(1)) {
        match rng.gen_range(0..4) {
            0 => {
                d.add_star();
            }
            1 => {
                d.add_vertex(VertexKind::spider(random_colour(rng), random_phase(rng)));
            }
            _ => {
                let (a, b) = (random_phase(rng), random_phase(rng));
                d.add_pair(a, b);
            }
        }
    }
    d
}

/// A connected-ish random diagram with the given boundary and at most
/// `max_vertices` vertices, including Hadamard nodes and stars.
pub fn random_diagram(rng: &mut ZxRng, n_inputs: usize, n_outputs: usize, max_vertices: usize) -> Diagram {
    let mut d = Diagram::new(n_inputs, n_outputs);
    let budget = max_vertices.max(1);
    let n_spiders = rng.gen_range(1..=budget.div_ceil(2).max(1));
    let spiders: Vec<VertexId> =
        (0..n_spiders).map(|_| d.add_vertex(VertexKind::spider(random_colour(rng), random_phase(rng)))).collect();
    for end in d.boundary() {
        let &u = spiders.choose(rng).expect("at least one spider");
        d.add_edge(end, End::Vertex(u));
    }
    // A spanning path keeps most diagrams connected.
    for w in spiders.windows(2) {
        d.add_edge(End::Vertex(w[0]), End::Vertex(w[1]));
    }
    for _ in 0..rng.gen_range(0..=n_spiders) {
        let a = *spiders.choose(rng).unwrap();
        let b = *spiders.choose(rng).unwrap();
        if a != b || rng.gen_bool(0.2) {
            d.add_edge(End::Vertex(a), End::Vertex(b));
        }
    }
    for e in d.edge_ids() {
        if d.num_vertices() >= budget {
            break;
        }
        if rng.gen_bool(0.3) {
            d.insert_on_edge(e, VertexKind::Hadamard);
        }
    }
    while d.num_vertices() < budget && rng.gen_bool(0.25) {
        d.add_star();
    }
    d
}

/// A random diagram with a zero scalar factor.
pub fn random_zero_diagram(rng: &mut ZxRng, max_boundary: usize, max_vertices: usize) -> Diagram {
    let n_inputs = rng.gen_range(0..=max_boundary);
    let n_outputs = rng.gen_range(0..=max_boundary - n_inputs);
    let mut d = random_diagram(rng, n_inputs, n_outputs, max_vertices.saturating_sub(2).max(1));
    match rng.gen_range(0..4) {
        0 => {
            d.add_vertex(VertexKind::ZSpider(Phase::PI));
        }
        1 => {
            d.add_vertex(VertexKind::XSpider(Phase::PI));
        }
        2 => {
            d.add_pair(Phase::HALF_PI, Phase::MINUS_HALF_PI);
        }
        _ => {
            d.add_pair(Phase::MINUS_HALF_PI, Phase::HALF_PI);
        }
    }
    d
}

/// Applies up to `steps` random rewrites, keeping the diagram below
/// `max_vertices`. The result equals `d` by soundness of the rules.
pub fn random_rewrites(rng: &mut ZxRng, d: &Diagram, steps: usize, max_vertices: usize) -> Diagram {
    let book = RuleBook::standard();
    let rules: Vec<_> = book.rules().collect();
    let mut cur = d.clone();
    let mut done = 0;
    for _ in 0..steps * 8 {
        if done == steps {
            break;
        }
        let rule = rules.choose(rng).unwrap();
        let direction = if rng.gen_bool(0.5) { Direction::Forward } else { Direction::Backward };
        let sites: Vec<Site> = rule.matches(&cur, direction);
        let Some(site) = sites.choose(rng) else { continue };
        if let Ok(next) = rule.rewrite(&cur, site, direction) {
            if next.num_vertices() <= max_vertices && next.is_valid() {
                cur = next;
                done += 1;
            }
        }
    }
    cur
}

/// A pair of diagrams with equal boundary. Roughly half the pairs are
/// rewrites of each other; the rest are independent or differ in one phase.
pub fn random_pair(rng: &mut ZxRng, max_boundary: usize, max_vertices: usize) -> (Diagram, Diagram) {
    let n_inputs = rng.gen_range(0..=max_boundary);
    let n_outputs = rng.gen_range(0..=max_boundary - n_inputs);
    let a = random_diagram(rng, n_inputs, n_outputs, max_vertices);
    let b = match rng.gen_range(0..4) {
        0 | 1 => random_rewrites(rng, &a, 3, max_vertices),
        2 => {
            let mut b = a.clone();
            let spiders: Vec<(VertexId, VertexKind)> = b.vertices().filter(|(_, k)| k.is_spider()).collect();
            if let Some(&(v, k)) = spiders.choose(rng) {
                let p = k.phase().unwrap() + Phase::new(rng.gen_range(1..4));
                b.set_kind(v, k.with_phase(p));
            }
            b
        }
        _ => random_diagram(rng, n_inputs, n_outputs, max_vertices),
    };
    (a, b)
}
