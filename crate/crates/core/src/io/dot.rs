//! Hasse diagrams in Graphviz DOT, drawn bottom to top.

use std::fmt::Write;

use crate::quantale::Quantale;
use crate::reticulation::{reticulate, ReticulationError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DotView {
    /// The carrier order.
    Lattice,
    /// `Spec(A)` as a subposet; maximal elements are drawn doubled.
    Spec,
    /// `L(A)`, nodes labelled by class.
    Reticulation,
}

impl std::str::FromStr for DotView {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lattice" => Ok(DotView::Lattice),
            "spec" => Ok(DotView::Spec),
            "reticulation" => Ok(DotView::Reticulation),
            other => Err(format!(
                "unknown view `{other}` (expected lattice, spec or reticulation)"
            )),
        }
    }
}

pub fn export_dot(q: &Quantale, view: DotView, name: &str) -> Result<String, ReticulationError> {
    let (labels, edges, doubled): (Vec<String>, Vec<(usize, usize)>, Vec<bool>) = match view {
        DotView::Lattice => (q.labels().to_vec(), q.lattice().hasse_edges(), vec![false; q.len()]),
        DotView::Spec => {
            let spec = q.m_primes();
            let lt = |a: usize, b: usize| a != b && q.leq(spec[a], spec[b]);
            let edges = (0..spec.len())
                .flat_map(|a| (0..spec.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| lt(a, b) && !(0..spec.len()).any(|c| lt(a, c) && lt(c, b)))
                .collect();
            let labels = spec.iter().map(|&p| q.label(p).to_string()).collect();
            let doubled = spec.iter().map(|p| q.maximals().contains(p)).collect();
            (labels, edges, doubled)
        }
        DotView::Reticulation => {
            let r = reticulate(q)?;
            let l = r.lattice();
            (l.labels().to_vec(), l.hasse_edges(), vec![false; l.len()])
        }
    };
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for (i, label) in labels.iter().enumerate() {
        let shape = if doubled[i] { ", shape=doublecircle" } else { "" };
        writeln!(out, "  n{i} [label={}{shape}];", quote(label)).unwrap();
    }
    for (a, b) in edges {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::generate;

    fn count(dot: &str, pat: &str) -> usize {
        dot.lines().filter(|l| l.contains(pat)).count()
    }

    #[test]
    fn c3_lattice_view() {
        let dot = export_dot(&generate("chain:3,frame").unwrap(), DotView::Lattice, "C3").unwrap();
        assert_eq!(count(&dot, "[label="), 3);
        assert_eq!(count(&dot, "->"), 2);
        assert!(dot.contains("rankdir=BT"));
    }

    #[test]
    fn d12_views() {
        let d = generate("zn:12").unwrap();
        let spec = export_dot(&d, DotView::Spec, "D12").unwrap();
        assert_eq!(count(&spec, "doublecircle"), 2);
        assert_eq!(count(&spec, "->"), 0);
        let ret = export_dot(&d, DotView::Reticulation, "D12").unwrap();
        assert_eq!(count(&ret, "[label="), 4);
        assert_eq!(count(&ret, "->"), 4);
    }

    #[test]
    fn c3_spec_has_one_edge() {
        let dot = export_dot(&generate("chain:3").unwrap(), DotView::Spec, "C3").unwrap();
        assert_eq!(count(&dot, "->"), 1);
        assert_eq!(count(&dot, "doublecircle"), 1);
    }
}
