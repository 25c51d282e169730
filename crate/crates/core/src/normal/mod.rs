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

//! Normal forms: scalars, zero diagrams and graph-state forms.

pub mod clifford;
mod gslc;
mod pipeline;
mod scalar;
mod simplify;

pub use gslc::{decide_equal, gslc_normalize, Decision, GslcForm};
pub use pipeline::{
    decompose_scalar, find_zero, is_zero, normalize_scalar_diagram, scalar_normal_form, zero_normal_form, ScalarForm, ZeroNF,
};
pub use scalar::{add_pieces, ScalarNF, ScalarPiece};
