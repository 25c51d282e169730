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

//! Error types.

use thiserror::Error;

/// Failures while reading diagram files, derivation text or phase literals.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("invalid phase literal {0:?}; expected one of \"0\", \"pi/2\", \"pi\", \"-pi/2\"")]
    Phase(String),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("unknown node kind {0:?}")]
    Kind(String),
    #[error("node {0:?} is declared twice")]
    DuplicateNode(String),
    #[error("name {0:?} is used both as a node id and as a wire")]
    NameClash(String),
    #[error("edge {index} refers to unknown endpoint {name:?}")]
    Endpoint { index: usize, name: String },
    #[error("node {0:?}: spiders need a phase and other nodes must not have one")]
    PhaseField(String),
    #[error("line {line}: {message}")]
    Derivation { line: usize, message: String },
}

/// Structural failures on diagrams.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("boundary mismatch: {outputs} outputs cannot be glued to {inputs} inputs")]
    BoundaryMismatch { outputs: usize, inputs: usize },
    #[error("invalid diagram: {}", .0.join("; "))]
    Invalid(Vec<String>),
    #[error("diagram has a boundary ({inputs} inputs, {outputs} outputs) but a scalar was expected")]
    NotScalar { inputs: usize, outputs: usize },
}

/// Failures of rule matching and application.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error("unknown rule {0:?}")]
    UnknownRule(String),
    #[error("rule {rule} ({direction}) does not apply at {site}: {reason}")]
    StaleSite { rule: String, direction: String, site: String, reason: String },
    #[error("step {index} failed: {source}")]
    Replay { index: usize, source: Box<RewriteError> },
    #[error("replayed diagram differs from the recorded end diagram")]
    EndMismatch,
}

/// Failures of the exact semantics.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemanticsError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("value {0} is not of the form √2^r·e^(isπ/4)")]
    NotStabilizerScalar(String),
}

/// Failures of the normalization procedures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NormalError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error("the diagram is not zero")]
    NotZero,
    #[error("normalization got stuck: {0}")]
    Stuck(String),
}

/// Failures while loading a diagram file.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LoadError {
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Invalid(#[from] DiagramError),
}
