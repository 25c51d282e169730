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

//! Measurement statistics of BB84 on a Bell pair, computed by rewriting.

use scaled_zx::bb84;

fn main() {
    for (alice, bob) in bb84::scenarios() {
        let s = bb84::run(alice, bob).unwrap();
        let amplitude = s.zero.map(|nf| nf.to_string()).unwrap_or_else(|| s.amplitude.to_string());
        println!(
            "Alice {alice} ({}), Bob {bob} ({}): amplitude {amplitude}, probability {}",
            alice.basis,
            bob.basis,
            s.probability_text()
        );
    }
}
