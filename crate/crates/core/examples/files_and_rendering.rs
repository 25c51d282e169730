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

//! Read a diagram file, write it back and render it as DOT and TikZ.
//!
//! `cargo run --example files_and_rendering -- path/to/diagram.json`

use scaled_zx::io::{read_diagram, to_json};
use scaled_zx::render::{to_dot, to_tikz};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/bell.json").to_string());
    let d = read_diagram(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    print!("{}", to_json(&d));
    print!("{}", to_dot(&d));
    print!("{}", to_tikz(&d));
}
