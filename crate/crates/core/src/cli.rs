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

//! The `zx` command-line tool.
//!
//! Exit codes: 0 success or equal, 1 not equal or a failed check, 2 usage
//! error, 3 invalid input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::bb84;
use crate::diagram::Diagram;
use crate::io::parse_diagram;
use crate::normal::{decide_equal, gslc_normalize, normalize_scalar_diagram, zero_normal_form};
use crate::render::{to_dot, to_tikz};
use crate::rewrite::soundness::soundness_sweep;
use crate::rewrite::Derivation;
use crate::semantics::interpret;

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNEQUAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "zx", version, about = "Exactly scaled stabilizer ZX-calculus")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the exact matrix of a diagram.
    Interpret {
        file: PathBuf,
        /// Also print decimal approximations (not authoritative).
        #[arg(long)]
        approx: bool,
    },
    /// Rewrite a diagram into a normal form and print the derivation.
    Normalize {
        #[arg(long, value_enum)]
        kind: Kind,
        file: PathBuf,
    },
    /// Decide whether two diagrams are equal; exit code 0 if so, 1 if not.
    Eq { a: PathBuf, b: PathBuf },
    /// Check every rule on all small instantiations against the semantics.
    VerifyRules {
        /// Maximum number of spider legs in the instantiations.
        #[arg(long, default_value_t = 3)]
        legs: usize,
        #[arg(long)]
        include_negative_controls: bool,
    },
    /// Run a worked example.
    Demo {
        #[arg(value_enum)]
        name: DemoName,
    },
    /// Render a diagram as DOT or TikZ.
    Render {
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        file: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Scalar,
    Zero,
    Gslc,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DemoName {
    Bb84,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Dot,
    Tikz,
}

#[derive(Debug, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

/// The output of one command.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub result: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub derivations: Vec<(String, String)>,
}

impl Report {
    fn new(command: &str) -> Report {
        Report { command: command.into(), inputs: Vec::new(), result: String::new(), derivations: Vec::new() }
    }

    fn derivation(&mut self, title: &str, der: &Derivation) {
        self.derivations.push((format!("{title} ({} steps)", der.steps.len()), der.steps_text()));
    }

    fn text(&self) -> String {
        let mut s = format!("# zx {}\n", self.command);
        for i in &self.inputs {
            s.push_str(&format!("# input {} sha256:{}\n", i.path, i.sha256));
        }
        s.push_str(&self.result);
        for (title, steps) in &self.derivations {
            s.push_str(&format!("# derivation: {title}\n{steps}"));
        }
        s
    }
}

struct Failure(i32, String);

fn load(path: &Path, report: &mut Report) -> Result<Diagram, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure(EXIT_INVALID, format!("{}: {e}", path.display())))?;
    report.inputs.push(InputDigest { path: path.display().to_string(), sha256: format!("{:x}", Sha256::digest(&bytes)) });
    let text = String::from_utf8(bytes).map_err(|e| Failure(EXIT_INVALID, format!("{}: {e}", path.display())))?;
    parse_diagram(&text).map_err(|e| Failure(EXIT_INVALID, format!("{}: {e}", path.display())))
}

fn invalid(e: impl std::fmt::Display) -> Failure {
    Failure(EXIT_INVALID, e.to_string())
}

fn execute(command: Command) -> Result<(Report, i32), Failure> {
    let mut code = EXIT_OK;
    let report = match command {
        Command::Interpret { file, approx } => {
            let mut r = Report::new("interpret");
            let d = load(&file, &mut r)?;
            let m = interpret(&d).map_err(invalid)?;
            r.result = format!("{}x{} matrix, exact:\n{m}", m.rows(), m.cols());
            if approx {
                r.result.push_str(&format!("approximate (not authoritative):\n{}", m.approx_string()));
            }
            r
        }
        Command::Normalize { kind, file } => {
            let mut r = Report::new("normalize");
            let d = load(&file, &mut r)?;
            let (text, der) = match kind {
                Kind::Scalar => {
                    let (form, der) = normalize_scalar_diagram(&d).map_err(invalid)?;
                    (format!("scalar {form}\nvalue {}\n", form.value()), der)
                }
                Kind::Zero => {
                    let (nf, der) = zero_normal_form(&d).map_err(invalid)?;
                    (format!("{nf}\n"), der)
                }
                Kind::Gslc => {
                    let (form, der) = gslc_normalize(&d).map_err(invalid)?;
                    (format!("{form}\n"), der)
                }
            };
            r.result = text;
            r.derivation("input to normal form", &der);
            r
        }
        Command::Eq { a, b } => {
            let mut r = Report::new("eq");
            let da = load(&a, &mut r)?;
            let db = load(&b, &mut r)?;
            let decision = decide_equal(&da, &db).map_err(invalid)?;
            r.result = format!(
                "{}\n# left normal form\n{}\n# right normal form\n{}\n",
                if decision.equal { "equal" } else { "not equal" },
                decision.left,
                decision.right
            );
            r.derivation("left to normal form", &decision.left_derivation);
            r.derivation("right to normal form", &decision.right_derivation);
            if !decision.equal {
                code = EXIT_UNEQUAL;
            }
            r
        }
        Command::VerifyRules { legs, include_negative_controls } => {
            let mut r = Report::new("verify-rules");
            let sweep = soundness_sweep(legs, include_negative_controls);
            r.result = format!("spider legs ≤ {legs}\n{sweep}");
            if !sweep.ok() {
                code = EXIT_UNEQUAL;
            }
            r
        }
        Command::Demo { name: DemoName::Bb84 } => {
            let mut r = Report::new("demo bb84");
            let mut text = String::from("Bell state ★ ⊗ ⟨Z(0)|X(0)⟩ ⊗ cup; outcomes are post-selected effects.\n");
            for (alice, bob) in bb84::scenarios() {
                let s = bb84::run(alice, bob).map_err(invalid)?;
                let amplitude = match s.zero {
                    Some(nf) => nf.to_string(),
                    None => s.amplitude.to_string(),
                };
                text.push_str(&format!(
                    "⟨{alice}{bob}|  amplitude {amplitude}  probability {} = {}\n",
                    s.probability,
                    s.probability_text()
                ));
                r.derivation(&format!("amplitude ⟨{alice}{bob}|"), &s.amplitude_derivation);
                r.derivation(&format!("probability ⟨{alice}{bob}|"), &s.probability_derivation);
            }
            r.result = text;
            r
        }
        Command::Render { format, file } => {
            let mut r = Report::new("render");
            let d = load(&file, &mut r)?;
            r.result = match format {
                Format::Dot => to_dot(&d),
                Format::Tikz => to_tikz(&d),
            };
            r
        }
    };
    Ok((report, code))
}

/// Runs the tool on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{e}");
            return code;
        }
    };
    let render_only = matches!(cli.command, Command::Render { .. });
    match execute(cli.command) {
        Ok((report, code)) => {
            let text = if cli.json {
                let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
                s.push('\n');
                s
            } else if render_only {
                report.result
            } else {
                report.text()
            };
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Failure(code, message)) => {
            let _ = writeln!(err, "zx: {message}");
            code
        }
    }
}
