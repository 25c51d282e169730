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

//! The JSON diagram file format.
//!
//! ```json
//! {
//!   "inputs": ["a"],
//!   "outputs": ["b"],
//!   "nodes": [{"id": "h", "kind": "H"}, {"id": "z", "kind": "Z", "phase": "pi/2"}],
//!   "edges": [["a", "h"], ["h", "z"], ["z", "b"]]
//! }
//! ```
//!
//! Endpoints are node ids or wire names. `kind` is one of `Z`, `X`, `H`
//! and `star`; spiders carry one of the phases `0`, `pi/2`, `pi` and
//! `-pi/2`. An optional `loops` field counts free loops.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, End, VertexKind};
use crate::error::{LoadError, ParseError};
use crate::phase::Phase;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramFile {
    #[serde(default)]
    pub inputs: Vec<String>,
    #[serde(default)]
    pub outputs: Vec<String>,
    #[serde(default)]
    pub nodes: Vec<NodeEntry>,
    #[serde(default)]
    pub edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub loops: usize,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeEntry {
    pub id: String,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phase: Option<String>,
}

impl DiagramFile {
    pub fn parse(text: &str) -> Result<DiagramFile, ParseError> {
        serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn to_diagram(&self) -> Result<Diagram, LoadError> {
        let mut d = Diagram::new(self.inputs.len(), self.outputs.len());
        d.set_free_loops(self.loops);
        let mut names: BTreeMap<&str, End> = BTreeMap::new();
        for (i, w) in self.inputs.iter().enumerate() {
            if names.insert(w, End::Input(i)).is_some() {
                return Err(ParseError::NameClash(w.clone()).into());
            }
        }
        for (j, w) in self.outputs.iter().enumerate() {
            if names.insert(w, End::Output(j)).is_some() {
                return Err(ParseError::NameClash(w.clone()).into());
            }
        }
        for node in &self.nodes {
            let kind = node_kind(node)?;
            if let Some(old) = names.get(node.id.as_str()) {
                return Err(match old {
                    End::Vertex(_) => ParseError::DuplicateNode(node.id.clone()),
                    _ => ParseError::NameClash(node.id.clone()),
                }
                .into());
            }
            let v = d.add_vertex(kind);
            names.insert(&node.id, End::Vertex(v));
        }
        for (index, [a, b]) in self.edges.iter().enumerate() {
            let end = |name: &String| {
                names.get(name.as_str()).copied().ok_or_else(|| ParseError::Endpoint { index, name: name.clone() })
            };
            d.add_edge(end(a)?, end(b)?);
        }
        d.check()?;
        Ok(d)
    }

    /// Names nodes `v0, v1, ..` in id order and wires `in0, .., out0, ..`.
    pub fn from_diagram(d: &Diagram) -> DiagramFile {
        let d = d.relabelled();
        let name = |end: End| match end {
            End::Vertex(v) => format!("v{}", v.0),
            End::Input(i) => format!("in{i}"),
            End::Output(j) => format!("out{j}"),
        };
        let nodes = d
            .vertices()
            .map(|(v, k)| {
                let (kind, phase) = match k {
                    VertexKind::ZSpider(p) => ("Z", Some(p)),
                    VertexKind::XSpider(p) => ("X", Some(p)),
                    VertexKind::Hadamard => ("H", None),
                    VertexKind::Star => ("star", None),
                };
                NodeEntry { id: name(End::Vertex(v)), kind: kind.into(), phase: phase.map(|p| p.file_str().into()) }
            })
            .collect();
        DiagramFile {
            inputs: (0..d.n_inputs()).map(|i| name(End::Input(i))).collect(),
            outputs: (0..d.n_outputs()).map(|j| name(End::Output(j))).collect(),
            nodes,
            edges: d.edges().map(|(_, (a, b))| [name(a), name(b)]).collect(),
            loops: d.free_loops(),
        }
    }
}

fn node_kind(node: &NodeEntry) -> Result<VertexKind, ParseError> {
    let phase = || -> Result<Phase, ParseError> {
        node.phase.as_deref().ok_or_else(|| ParseError::PhaseField(node.id.clone()))?.parse()
    };
    let kind = match node.kind.as_str() {
        "Z" => VertexKind::ZSpider(phase()?),
        "X" => VertexKind::XSpider(phase()?),
        "H" => VertexKind::Hadamard,
        "star" => VertexKind::Star,
        other => return Err(ParseError::Kind(other.to_string())),
    };
    if !kind.is_spider() && node.phase.is_some() {
        return Err(ParseError::PhaseField(node.id.clone()));
    }
    Ok(kind)
}

pub fn parse_diagram(text: &str) -> Result<Diagram, LoadError> {
    DiagramFile::parse(text)?.to_diagram()
}

pub fn to_json(d: &Diagram) -> String {
    DiagramFile::from_diagram(d).to_json()
}

pub fn read_diagram(path: impl AsRef<Path>) -> Result<Diagram, LoadError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| LoadError::Io(format!("{}: {e}", path.display())))?;
    parse_diagram(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::is_isomorphic;

    #[test]
    fn bell_state_round_trip() {
        let text = r#"{"inputs": [], "outputs": ["a", "b"],
            "nodes": [{"id": "z", "kind": "Z", "phase": "0"}],
            "edges": [["z", "a"], ["z", "b"]]}"#;
        let d = parse_diagram(text).unwrap();
        assert_eq!((d.n_inputs(), d.n_outputs(), d.num_vertices()), (0, 2, 1));
        let again = parse_diagram(&to_json(&d)).unwrap();
        assert!(is_isomorphic(&d, &again));
        assert_eq!(to_json(&again), to_json(&d));
    }

    #[test]
    fn rejects_bad_input() {
        let bad = [
            (r#"{"nodes": [{"id": "z", "kind": "Z", "phase": "pi/4"}]}"#, "phase"),
            (r#"{"nodes": [{"id": "z", "kind": "Y", "phase": "0"}]}"#, "kind"),
            (r#"{"nodes": [{"id": "h", "kind": "H", "phase": "0"}]}"#, "spiders need"),
            (r#"{"nodes": [{"id": "z", "kind": "Z"}]}"#, "spiders need"),
            (r#"{"outputs": ["a"], "nodes": [{"id": "a", "kind": "star"}]}"#, "both"),
            (r#"{"edges": [["p", "q"]]}"#, "unknown endpoint"),
            (r#"{"outputs": ["a"]}"#, "attachments"),
            (r#"{"nodes": [], "extra": 1}"#, "JSON"),
        ];
        for (text, want) in bad {
            let err = parse_diagram(text).unwrap_err().to_string();
            assert!(err.contains(want), "{text}: {err}");
        }
    }

    #[test]
    fn plain_wire_and_loops() {
        let d = parse_diagram(r#"{"inputs": ["a"], "outputs": ["b"], "edges": [["a", "b"]], "loops": 2}"#).unwrap();
        assert_eq!(d.free_loops(), 2);
        assert_eq!(parse_diagram(&to_json(&d)).unwrap().free_loops(), 2);
    }
}
