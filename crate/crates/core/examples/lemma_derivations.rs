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

//! The stored derivations of the scalar lemmas, replayed and checked.

use scaled_zx::rewrite::fixtures::fixtures;

fn main() {
    let all = fixtures();
    for f in &all {
        let status = match f.check() {
            Ok(()) => "ok".to_string(),
            Err(e) => format!("FAILED: {e}"),
        };
        println!("{:<40} {:>3} steps  {status}", f.name, f.derivation.steps.len());
    }
    if let Some(f) = all.iter().find(|f| f.lemma == "y-states") {
        print!("\n{}:\n{}", f.name, f.derivation.steps_text());
    }
}
