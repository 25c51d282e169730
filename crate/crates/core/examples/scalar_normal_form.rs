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

//! Normalize random scalar diagrams and compare with their exact values.

use scaled_zx::gen;
use scaled_zx::normal::{normalize_scalar_diagram, scalar_normal_form};
use scaled_zx::scalar_value;

fn main() {
    let mut rng = gen::rng(gen::seed_from_env(42));
    for _ in 0..8 {
        let d = gen::random_diagram(&mut rng, 0, 0, 10);
        let value = scalar_value(&d).unwrap();
        let (form, der) = normalize_scalar_diagram(&d).unwrap();
        assert_eq!(form, scalar_normal_form(value));
        println!("{:>2} vertices  value {value:<18} normal form {form}  ({} steps)", d.num_vertices(), der.steps.len());
    }
}
