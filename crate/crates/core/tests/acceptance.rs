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

//! End-to-end acceptance checks. Prints one PASS or FAIL line per
//! criterion and exits non-zero if any fails. `ZX_SEED` changes the seeds
//! of the random corpora.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use scaled_zx::bb84;
use scaled_zx::diagram::is_isomorphic;
use scaled_zx::gen;
use scaled_zx::normal::{
    decide_equal, find_zero, normalize_scalar_diagram, scalar_normal_form, zero_normal_form, ScalarForm,
};
use scaled_zx::rewrite::fixtures::fixtures;
use scaled_zx::rewrite::replay_derivation;
use scaled_zx::rewrite::soundness::soundness_sweep;
use scaled_zx::{interpret, scalar_value, Diagram, ExactScalar, Phase, VertexKind};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rule_soundness() -> Outcome {
    let start = Instant::now();
    let sweep = soundness_sweep(3, true);
    let elapsed = start.elapsed();
    ensure(sweep.ok(), || format!("sweep failed:\n{sweep}"))?;
    ensure(elapsed < Duration::from_secs(60), || format!("sweep took {elapsed:?}"))?;
    let checks: usize = sweep.rules.iter().map(|r| r.checks).sum();
    Ok(format!("{} rules, {checks} checks, negative controls rejected, {elapsed:.2?}", sweep.rules.len()))
}

fn normalizes_to_empty(d: &Diagram) -> Result<(), String> {
    let (form, der) = normalize_scalar_diagram(d).map_err(|e| e.to_string())?;
    replay_derivation(&der).map_err(|e| e.to_string())?;
    ensure(der.end.num_vertices() == 0, || format!("normal form {form} is not empty"))
}

fn star_semantics() -> Outcome {
    let star = Diagram::star();
    let v = scalar_value(&star).map_err(|e| e.to_string())?;
    ensure(v == ExactScalar::new(-2, 0), || format!("star is {v}"))?;
    normalizes_to_empty(&star.tensor(&Diagram::z_scalar(Phase::ZERO)))?;
    let unit = Diagram::pair(Phase::ZERO, Phase::ZERO);
    normalizes_to_empty(&Diagram::tensor_all([&star, &unit, &unit]))?;
    Ok("★ = 1/2; ★ ⊗ Z(0) and ★ ⊗ ⟨Z(0)|X(0)⟩² reach the empty diagram".into())
}

fn scalar_completeness() -> Outcome {
    let mut rng = gen::rng(gen::seed_from_env(1));
    let mut seen: BTreeMap<String, ScalarForm> = BTreeMap::new();
    for i in 0..1000 {
        let d = gen::random_scalar_diagram(&mut rng, 12);
        let value = scalar_value(&d).map_err(|e| e.to_string())?;
        let (form, der) = normalize_scalar_diagram(&d).map_err(|e| format!("#{i}: {e}"))?;
        ensure(form == scalar_normal_form(value), || format!("#{i}: {form} for {value}"))?;
        ensure(is_isomorphic(&der.end, &form.diagram()), || format!("#{i}: end is not the normal form"))?;
        let first = *seen.entry(value.to_string()).or_insert(form);
        ensure(first == form, || format!("#{i}: two normal forms for {value}"))?;
    }
    Ok(format!("1000 diagrams, {} distinct values, all normal forms agree", seen.len()))
}

fn scalar_table() -> Outcome {
    let value = |a, b| scalar_value(&Diagram::pair(a, b)).unwrap();
    ensure(value(Phase::ZERO, Phase::ZERO) == ExactScalar::new(1, 0), || "⟨Z(0)|X(0)⟩ ≠ √2".into())?;
    for a in Phase::ALL {
        let want = ExactScalar::new(1, 2 * a.quarter_turns() as i64);
        ensure(value(a, Phase::PI) == want, || format!("⟨Z({a})|X(π)⟩ ≠ {want}"))?;
    }
    let w = value(Phase::MINUS_HALF_PI, Phase::MINUS_HALF_PI);
    ensure(w == ExactScalar::new(2, -1), || format!("⟨Z(−π/2)|X(−π/2)⟩ = {w}"))?;
    let zeros = [
        Diagram::z_scalar(Phase::PI),
        Diagram::x_scalar(Phase::PI),
        Diagram::pair(Phase::HALF_PI, Phase::MINUS_HALF_PI),
        Diagram::pair(Phase::MINUS_HALF_PI, Phase::HALF_PI),
    ];
    for d in &zeros {
        ensure(scalar_value(d).unwrap().is_zero(), || "a zero scalar is not zero".into())?;
        let (rw, w) = find_zero(d).map_err(|e| e.to_string())?.ok_or("no Z(π) found")?;
        let der = rw.finish();
        let end = replay_derivation(&der).map_err(|e| e.to_string())?;
        ensure(end.kind(w) == Some(VertexKind::ZSpider(Phase::PI)) && end.degree(w) == 0, || "no scalar Z(π)".into())?;
    }
    Ok("⟨Z(0)|X(0)⟩, ⟨Z(α)|X(π)⟩, ⟨Z(−π/2)|X(−π/2)⟩ exact; four zero scalars rewrite to Z(π)".into())
}

fn zero_completeness() -> Outcome {
    let mut rng = gen::rng(gen::seed_from_env(2));
    let mut steps = 0;
    for i in 0..500 {
        let d = gen::random_zero_diagram(&mut rng, 3, 10);
        let (nf, der) = zero_normal_form(&d).map_err(|e| format!("#{i}: {e}"))?;
        let end = replay_derivation(&der).map_err(|e| format!("#{i}: {e}"))?;
        ensure(is_isomorphic(&end, &nf.diagram()), || format!("#{i}: replay does not reach {nf}"))?;
        ensure((nf.n_inputs, nf.n_outputs) == (d.n_inputs(), d.n_outputs()), || format!("#{i}: arity"))?;
        ensure(interpret(&d).map_err(|e| e.to_string())?.is_zero(), || format!("#{i}: oracle says non-zero"))?;
        steps += der.steps.len();
    }
    Ok(format!("500 zero diagrams reach their zero normal form ({steps} steps in total)"))
}

fn equality_decision() -> Outcome {
    let mut rng = gen::rng(gen::seed_from_env(3));
    let mut times = Vec::with_capacity(1000);
    let mut equal = 0;
    for i in 0..1000 {
        let (a, b) = gen::random_pair(&mut rng, 3, 10);
        let want = interpret(&a).unwrap() == interpret(&b).unwrap();
        let start = Instant::now();
        let got = decide_equal(&a, &b).map_err(|e| format!("#{i}: {e}"))?;
        times.push(start.elapsed());
        ensure(got.equal == want, || format!("#{i}: decided {} but the oracle says {want}", got.equal))?;
        equal += want as usize;
    }
    times.sort();
    let median = times[times.len() / 2];
    ensure(median < Duration::from_millis(100), || format!("median {median:?}"))?;
    Ok(format!("1000 pairs ({equal} equal) agree with the oracle; median {median:.2?}"))
}

fn bb84_reproduction() -> Outcome {
    let mut lines = Vec::new();
    for (alice, bob) in bb84::scenarios() {
        let s = bb84::run(alice, bob).map_err(|e| e.to_string())?;
        let want = match (alice.basis == bob.basis, alice.outcome == bob.outcome) {
            (true, true) => ExactScalar::new(-2, 0),
            (true, false) => ExactScalar::Zero,
            (false, _) => ExactScalar::new(-4, 0),
        };
        ensure(s.probability.value() == want, || format!("⟨{alice}{bob}| has probability {}", s.probability))?;
        ensure(s.zero.is_some() == want.is_zero(), || format!("⟨{alice}{bob}|: zero normal form missing"))?;
        for der in [&s.amplitude_derivation, &s.probability_derivation] {
            der.verify().map_err(|e| format!("⟨{alice}{bob}|: {e}"))?;
        }
        lines.push(format!("{alice}{bob}={}", s.probability_text()));
    }
    Ok(lines.join(" "))
}

fn lemma_fixtures() -> Outcome {
    let all = fixtures();
    for f in &all {
        f.check().map_err(|e| format!("{}: {e}", f.name))?;
    }
    let required = [
        "innerprod-wlog",
        "pi-multiplication",
        "overlap-ket-zero",
        "y-states",
        "omega-inverses",
        "unique-zero",
        "scalar-pi2-equality",
        "omega-dagger-squared",
        "minus-omega",
        "pi-remove",
        "scalar-pi2-inverse",
        "halfscalar",
    ];
    for id in required {
        ensure(all.iter().any(|f| f.lemma == id), || format!("no fixture for {id}"))?;
    }
    Ok(format!("{} derivations replay and match the oracle", all.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("rule soundness sweep", rule_soundness),
        ("star semantics", star_semantics),
        ("scalar completeness", scalar_completeness),
        ("scalar table and zero scalars", scalar_table),
        ("zero completeness", zero_completeness),
        ("equality decision", equality_decision),
        ("BB84", bb84_reproduction),
        ("lemma derivations", lemma_fixtures),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
