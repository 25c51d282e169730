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

use proptest::prelude::*;

use scaled_zx::diagram::is_isomorphic;
use scaled_zx::gen;
use scaled_zx::io::{parse_diagram, to_json};
use scaled_zx::normal::{normalize_scalar_diagram, scalar_normal_form};
use scaled_zx::rewrite::{Derivation, Rewriter, RuleBook};
use scaled_zx::{interpret, scalar_value, Diagram};

fn diagram(seed: u64, max_vertices: usize) -> Diagram {
    let mut rng = gen::rng(seed);
    let n_in = (seed % 3) as usize;
    let n_out = ((seed / 3) % 2) as usize;
    gen::random_diagram(&mut rng, n_in, n_out, max_vertices)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn files_round_trip(seed in any::<u64>()) {
        let d = diagram(seed, 10);
        let text = to_json(&d);
        let back = parse_diagram(&text).unwrap();
        prop_assert!(is_isomorphic(&d, &back));
        prop_assert_eq!(to_json(&back), text);
    }

    #[test]
    fn random_rewrites_keep_the_matrix(seed in any::<u64>()) {
        let d = diagram(seed, 8);
        let mut rng = gen::rng(seed ^ 0x5eed);
        let e = gen::random_rewrites(&mut rng, &d, 4, 12);
        prop_assert_eq!(interpret(&d).unwrap(), interpret(&e).unwrap());
    }

    #[test]
    fn derivation_text_round_trips(seed in any::<u64>()) {
        let d = diagram(seed, 8);
        let book = RuleBook::standard();
        let mut rw = Rewriter::new(d);
        for rule in ["spider", "colour", "h-cancel", "loop"] {
            let site = book.get(rule).unwrap().matches(rw.diagram(), scaled_zx::rewrite::Direction::Forward).into_iter().next();
            if let Some(site) = site {
                rw.forward(rule, site).unwrap();
            }
        }
        let der = rw.finish();
        let steps = Derivation::parse_steps(&der.steps_text()).unwrap();
        prop_assert_eq!(&steps, &der.steps);
        let parsed = Derivation { steps, ..der };
        prop_assert!(parsed.verify().is_ok());
    }

    #[test]
    fn scalar_normal_forms_multiply(a in any::<u64>(), b in any::<u64>()) {
        let mut rng = gen::rng(a);
        let x = gen::random_scalar_diagram(&mut rng, 6);
        let mut rng = gen::rng(b);
        let y = gen::random_scalar_diagram(&mut rng, 6);
        let (form, _) = normalize_scalar_diagram(&x.tensor(&y)).unwrap();
        let product = scalar_value(&x).unwrap() * scalar_value(&y).unwrap();
        prop_assert_eq!(form, scalar_normal_form(product));
    }

    #[test]
    fn adjoint_is_the_conjugate_transpose(seed in any::<u64>()) {
        let d = diagram(seed, 8);
        prop_assert_eq!(interpret(&d.adjoint()).unwrap(), interpret(&d).unwrap().conj_transpose());
    }
}
