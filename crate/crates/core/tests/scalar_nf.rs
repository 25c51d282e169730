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

use scaled_zx::gen;
use scaled_zx::normal::{normalize_scalar_diagram, scalar_normal_form};
use scaled_zx::rewrite::replay_derivation;
use scaled_zx::scalar_value;

#[test]
fn random_scalars_reach_their_normal_form() {
    let mut rng = gen::rng(7);
    for i in 0..300 {
        let d = gen::random_scalar_diagram(&mut rng, 12);
        let value = scalar_value(&d).unwrap();
        let (form, der) = normalize_scalar_diagram(&d).unwrap_or_else(|e| panic!("#{i}: {e}"));
        assert_eq!(form, scalar_normal_form(value), "#{i}");
        replay_derivation(&der).unwrap();
    }
}

#[test]
fn connected_scalars_reach_their_normal_form() {
    let mut rng = gen::rng(11);
    for i in 0..300 {
        let d = gen::random_diagram(&mut rng, 0, 0, 12);
        let value = scalar_value(&d).unwrap();
        let (form, der) = normalize_scalar_diagram(&d).unwrap_or_else(|e| panic!("#{i}: {e}"));
        assert_eq!(form, scalar_normal_form(value), "#{i}");
        replay_derivation(&der).unwrap();
    }
}

#[test]
fn zero_diagrams_reach_the_zero_normal_form() {
    use scaled_zx::interpret;
    use scaled_zx::normal::zero_normal_form;
    let mut rng = gen::rng(5);
    for i in 0..300 {
        let d = gen::random_zero_diagram(&mut rng, 3, 10);
        let (nf, der) = zero_normal_form(&d).unwrap_or_else(|e| panic!("#{i}: {e}"));
        assert_eq!((nf.n_inputs, nf.n_outputs), (d.n_inputs(), d.n_outputs()));
        replay_derivation(&der).unwrap();
        assert!(interpret(&nf.diagram()).unwrap().is_zero());
    }
}
