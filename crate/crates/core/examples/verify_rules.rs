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

//! Check every rule against the exact semantics on all small instances,
//! including the deliberately unscaled copy and bialgebra rules.

use scaled_zx::rewrite::soundness::soundness_sweep;

fn main() {
    let legs = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let report = soundness_sweep(legs, true);
    print!("{report}");
    println!("overall: {}", if report.ok() { "ok" } else { "FAILED" });
}
