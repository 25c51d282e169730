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

//! Recognize zero diagrams and rewrite them into the zero normal form.

use scaled_zx::gen;
use scaled_zx::normal::{is_zero, zero_normal_form};
use scaled_zx::rewrite::replay_derivation;
use scaled_zx::{Diagram, Phase};

fn main() {
    let pair = Diagram::pair(Phase::HALF_PI, Phase::MINUS_HALF_PI);
    println!("⟨Z(π/2)|X(−π/2)⟩ is zero: {}", is_zero(&pair).unwrap());

    let mut rng = gen::rng(gen::seed_from_env(7));
    for _ in 0..5 {
        let d = gen::random_zero_diagram(&mut rng, 3, 10);
        let (nf, der) = zero_normal_form(&d).unwrap();
        replay_derivation(&der).unwrap();
        println!("{} inputs, {} outputs, {:>2} vertices -> {nf} in {} steps", d.n_inputs(), d.n_outputs(), d.num_vertices(), der.steps.len());
    }
}
