//! Named collections of validated quantales.

use super::enumerate::{enumerate_quantales, EnumerationError};
use crate::io::{generate, IoError};
use crate::quantale::Quantale;

/// A corpus member with its provenance. `factors` lists the factors when the
/// member was built as a product, for the product-transfer checks.
#[derive(Debug, Clone)]
pub struct CorpusMember {
    pub name: String,
    /// The generator string, file path or enumeration tag it came from.
    pub source: String,
    pub quantale: Quantale,
    pub factors: Vec<Quantale>,
}

impl CorpusMember {
    pub fn new(name: impl Into<String>, source: impl Into<String>, quantale: Quantale) -> Self {
        CorpusMember {
            name: name.into(),
            source: source.into(),
            quantale,
            factors: Vec::new(),
        }
    }

    /// Expands `spec`; `product:` generators keep their factors.
    pub fn from_generator(name: impl Into<String>, spec: &str) -> Result<Self, IoError> {
        let quantale = generate(spec)?;
        let factors = match spec.trim().strip_prefix("product:") {
            Some(rest) => rest.split(';').map(generate).collect::<Result<_, _>>()?,
            None => Vec::new(),
        };
        Ok(CorpusMember {
            name: name.into(),
            source: spec.trim().to_string(),
            quantale,
            factors,
        })
    }
}

#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub members: Vec<CorpusMember>,
}

/// The default fixtures: name and generator.
pub const FIXTURES: &[(&str, &str)] = &[
    ("Q1", "chain:1"),
    ("C2", "chain:2"),
    ("C3", "chain:3,frame"),
    ("B4", "boolean:2"),
    ("W5", "downsets:z<x,z<y"),
    ("D12", "zn:12"),
    ("D4", "zn:4"),
    ("D8", "zn:8"),
    ("D30", "zn:30"),
    ("D36", "zn:36"),
    ("C3xC3", "product:chain:3,frame;chain:3,frame"),
    ("D12xC3", "product:zn:12;chain:3,frame"),
];

impl Corpus {
    pub fn fixtures() -> Self {
        let members = FIXTURES
            .iter()
            .map(|&(name, spec)| CorpusMember::from_generator(name, spec).expect("fixture generators are valid"))
            .collect();
        Corpus { members }
    }

    /// Every quantale on at most `max_size` elements, up to isomorphism.
    pub fn enumerated(max_size: usize) -> Result<Self, EnumerationError> {
        let members = enumerate_quantales(max_size)?
            .into_iter()
            .map(|e| CorpusMember::new(e.name, format!("enumerated:{max_size}"), e.quantale))
            .collect();
        Ok(Corpus { members })
    }

    pub fn single(member: CorpusMember) -> Self {
        Corpus { members: vec![member] }
    }

    pub fn extend(&mut self, other: Corpus) {
        self.members.extend(other.members);
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&CorpusMember> {
        self.members.iter().find(|m| m.name == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_named_and_sized() {
        let c = Corpus::fixtures();
        let sizes: Vec<(&str, usize)> = c.members.iter().map(|m| (m.name.as_str(), m.quantale.len())).collect();
        assert_eq!(
            sizes,
            [
                ("Q1", 1),
                ("C2", 2),
                ("C3", 3),
                ("B4", 4),
                ("W5", 5),
                ("D12", 6),
                ("D4", 3),
                ("D8", 4),
                ("D30", 8),
                ("D36", 9),
                ("C3xC3", 9),
                ("D12xC3", 18)
            ]
        );
        assert_eq!(c.get("D12xC3").unwrap().factors.len(), 2);
        assert!(c.get("D12").unwrap().factors.is_empty());
    }
}
