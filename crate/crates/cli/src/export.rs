//! JSON and Graphviz renderings of an enumerated lattice.

use std::fmt::Write as _;

use dyck_heyting::{Error, Family, HeytingPath, LatticeSnapshot, Params, Result};
use serde::{Deserialize, Serialize};

pub const FORMAT_TAG: &str = "dyck-heyting/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportDocument {
    pub format: String,
    pub family: String,
    pub params: ExportParams,
    pub elements: Vec<ExportElement>,
    /// `[lower, upper]` id pairs.
    pub covers: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportParams {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportElement {
    pub id: usize,
    pub heights: Vec<usize>,
    pub word: String,
    pub regular: bool,
    pub join_irreducible: bool,
}

fn word_of<P: HeytingPath>(p: &P) -> String {
    p.word_steps().iter().map(|s| s.letter()).collect()
}

impl ExportDocument {
    pub fn from_snapshot<P: HeytingPath>(snap: &LatticeSnapshot<P>) -> Self {
        let params = snap.params();
        let elements = snap
            .elements()
            .iter()
            .enumerate()
            .map(|(id, p)| ExportElement {
                id,
                heights: p.heights().to_vec(),
                word: word_of(p),
                regular: p.is_regular(),
                join_irreducible: p.is_join_irreducible(),
            })
            .collect();
        ExportDocument {
            format: FORMAT_TAG.to_string(),
            family: params.family().to_string(),
            params: ExportParams { n: params.n(), m: params.m() },
            elements,
            covers: snap.covers().iter().map(|&(lo, hi)| [lo, hi]).collect(),
        }
    }

    pub fn params(&self) -> Result<Params> {
        let n = self.params.n;
        match (self.family.parse::<Family>()?, self.params.m) {
            (Family::A, None) => Ok(Params::A { n }),
            (Family::B, None) => Ok(Params::B { n }),
            (Family::Mono, Some(m)) => Ok(Params::Mono { n, m }),
            _ => Err(invalid("params do not match the family")),
        }
    }

    /// Rebuilds the snapshot, rejecting any field that disagrees with it.
    pub fn to_snapshot<P: HeytingPath>(&self) -> Result<LatticeSnapshot<P>> {
        if self.format != FORMAT_TAG {
            return Err(invalid("unsupported format tag"));
        }
        if self.elements.iter().enumerate().any(|(i, e)| e.id != i) {
            return Err(invalid("element ids must be 0, 1, 2, ... in order"));
        }
        let heights = self.elements.iter().map(|e| e.heights.clone()).collect();
        let covers = self.covers.iter().map(|&[lo, hi]| (lo, hi)).collect();
        let snap = LatticeSnapshot::<P>::from_parts(self.params()?, heights, covers)?;
        if ExportDocument::from_snapshot(&snap) != *self {
            return Err(invalid("words or flags disagree with the heights"));
        }
        Ok(snap)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s)
            .map_err(|e| Error::Parse { input: "JSON document".into(), reason: e.to_string() })
    }
}

fn invalid(reason: &str) -> Error {
    Error::Parse { input: "JSON document".into(), reason: reason.into() }
}

/// Hasse diagram as a Graphviz digraph, drawn bottom to top with regular
/// elements filled.
pub fn to_dot<P: HeytingPath>(snap: &LatticeSnapshot<P>) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", snap.params()).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    for (id, p) in snap.elements().iter().enumerate() {
        let style = if p.is_regular() { ", style=filled, fillcolor=palegreen" } else { "" };
        writeln!(out, "  {id} [label=\"{p}\"{style}];").unwrap();
    }
    for (lo, hi) in snap.covers() {
        writeln!(out, "  {lo} -> {hi};").unwrap();
    }
    out.push_str("}\n");
    out
}
