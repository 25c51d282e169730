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
use scaled_zx::interpret;
use scaled_zx::normal::{decide_equal, gslc_normalize};
use scaled_zx::rewrite::replay_derivation;

#[test]
fn normal_forms_keep_the_value() {
    let mut rng = gen::rng(3);
    for i in 0..300 {
        let n_in = i % 2;
        let n_out = (i / 2) % 3;
        let d = gen::random_diagram(&mut rng, n_in, n_out, 10);
        let (form, der) = gslc_normalize(&d).unwrap_or_else(|e| panic!("#{i}: {e}"));
        assert_eq!(replay_derivation(&der).unwrap(), der.end);
        assert_eq!(interpret(&form.diagram()).unwrap(), interpret(&d).unwrap(), "#{i}");
    }
}

#[test]
fn decisions_agree_with_the_oracle() {
    let mut rng = gen::rng(9);
    let mut equal = 0;
    for i in 0..300 {
        let (a, b) = gen::random_pair(&mut rng, 3, 10);
        let want = interpret(&a).unwrap() == interpret(&b).unwrap();
        let got = decide_equal(&a, &b).unwrap_or_else(|e| panic!("#{i}: {e}"));
        assert_eq!(got.equal, want, "#{i}\n{}\n{}", got.left, got.right);
        equal += want as usize;
    }
    assert!(equal > 50, "only {equal} equal pairs");
}
