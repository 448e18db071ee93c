//! Instance documents, generators, Graphviz export and report rendering.
//!
//! An instance is a TOML document:
//!
//! ```toml
//! format_version = 1
//! name = "C3"
//! elements = ["0", "m", "1"]
//! leq = [["0", "m"], ["m", "1"]]
//! mul = [["m", "m", "m"], ["0", "m", "0"]]
//! ```
//!
//! `leq` may list any relation whose reflexive-transitive closure is a
//! partial order. `mul` may omit entries forced by the unit (`x·1 = x`) and by
//! commutativity. Alternatively `generator = "zn:12"` replaces the tables.

mod dot;
mod generators;
mod render;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{FiniteLattice, FinitePoset, LatticeError};
use crate::quantale::{Quantale, QuantaleError};

pub use dot::{export_dot, DotView};
pub use generators::generate;
pub use render::render_analysis;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid `{field}`: {message}")]
    Validation { field: String, message: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid parameter for `{generator}`: {message}")]
    InvalidParameter { generator: String, message: String },
    #[error("unsupported format version {0}")]
    UnsupportedVersion(u32),
}

impl IoError {
    fn validation(field: impl Into<String>, message: impl ToString) -> Self {
        IoError::Validation {
            field: field.into(),
            message: message.to_string(),
        }
    }
}

/// The serialized form of a quantale.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub leq: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub mul: Vec<[String; 3]>,
}

/// Parses and validates an instance document.
pub fn parse_instance(text: &str) -> Result<Quantale, IoError> {
    load(&parse_document(text)?)
}

pub fn parse_document(text: &str) -> Result<InstanceDocument, IoError> {
    toml::from_str(text).map_err(|e| {
        let offset = e.span().map_or(0, |s| s.start);
        let before = &text[..offset.min(text.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        IoError::Parse {
            line,
            column,
            message: e.message().trim().to_string(),
        }
    })
}

/// Reads either a generator string or a path to a document.
pub fn load_instance(source: &str) -> Result<Quantale, IoError> {
    match std::fs::read_to_string(source) {
        Ok(text) => parse_instance(&text),
        Err(_) => generate(source),
    }
}

/// Builds the quantale a document describes.
pub fn load(doc: &InstanceDocument) -> Result<Quantale, IoError> {
    if doc.format_version != FORMAT_VERSION {
        return Err(IoError::UnsupportedVersion(doc.format_version));
    }
    if let Some(g) = &doc.generator {
        if !doc.elements.is_empty() || !doc.leq.is_empty() || !doc.mul.is_empty() {
            return Err(IoError::validation("generator", "a generator excludes explicit tables"));
        }
        return generate(g);
    }
    if doc.elements.is_empty() {
        return Err(IoError::validation("elements", "no elements declared"));
    }
    let index = |field: String, label: &str| {
        doc.elements
            .iter()
            .position(|e| e == label)
            .ok_or_else(|| IoError::validation(field, format!("unknown element `{label}`")))
    };
    let pairs = doc
        .leq
        .iter()
        .enumerate()
        .map(|(k, [a, b])| Ok((index(format!("leq[{k}]"), a)?, index(format!("leq[{k}]"), b)?)))
        .collect::<Result<Vec<_>, IoError>>()?;
    let lattice = FinitePoset::from_relation(doc.elements.clone(), &pairs)
        .and_then(FiniteLattice::from_poset)
        .map_err(|e: LatticeError| {
            let field = if matches!(e, LatticeError::DuplicateLabel(_)) {
                "elements"
            } else {
                "leq"
            };
            IoError::validation(field, e)
        })?;
    let n = lattice.len();
    let mut table: Vec<Option<usize>> = vec![None; n * n];
    for (k, [x, y, z]) in doc.mul.iter().enumerate() {
        let field = format!("mul[{k}]");
        let (x, y, z) = (
            index(field.clone(), x)?,
            index(field.clone(), y)?,
            index(field.clone(), z)?,
        );
        match table[x * n + y] {
            Some(prev) if prev != z => {
                return Err(IoError::validation(
                    field,
                    format!(
                        "conflicts with an earlier entry for {} · {}",
                        doc.elements[x], doc.elements[y]
                    ),
                ));
            }
            _ => table[x * n + y] = Some(z),
        }
    }
    let top = lattice.top();
    for x in 0..n {
        table[x * n + top].get_or_insert(x);
        table[top * n + x].get_or_insert(x);
    }
    for x in 0..n {
        for y in 0..n {
            if table[x * n + y].is_none() {
                table[x * n + y] = table[y * n + x];
            }
        }
    }
    let rows = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    table[x * n + y].ok_or_else(|| {
                        IoError::validation(
                            "mul",
                            format!("missing entry for {} · {}", doc.elements[x], doc.elements[y]),
                        )
                    })
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Quantale::new(lattice, rows).map_err(|e: QuantaleError| IoError::validation("mul", e))
}

/// An explicit document for `q`: covering pairs for the order and the
/// products `x·y` for index pairs `x ≤ y` below the top.
pub fn to_document(q: &Quantale, name: Option<&str>) -> InstanceDocument {
    let label = |a: usize| q.label(a).to_string();
    let leq = q
        .lattice()
        .hasse_edges()
        .into_iter()
        .map(|(a, b)| [label(a), label(b)])
        .collect();
    let mut mul = Vec::new();
    for x in q.elements().filter(|&x| x != q.top()) {
        for y in (x..q.len()).filter(|&y| y != q.top()) {
            mul.push([label(x), label(y), label(q.mul(x, y))]);
        }
    }
    InstanceDocument {
        format_version: FORMAT_VERSION,
        name: name.map(str::to_string),
        generator: None,
        elements: q.labels().to_vec(),
        leq,
        mul,
    }
}

/// Serializes `q` as an explicit instance document.
pub fn emit(q: &Quantale, name: Option<&str>) -> String {
    toml::to_string(&to_document(q, name)).expect("instance documents serialize")
}
