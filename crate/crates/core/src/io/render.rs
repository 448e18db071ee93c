use std::fmt::Write;

use crate::properties::PropertyReport;
use crate::quantale::Quantale;

/// Plain-text rendering of an analysis: structure, multiplication table,
/// verdicts and decomposition.
pub fn render_analysis(name: &str, q: &Quantale, report: &PropertyReport) -> String {
    let mut out = String::new();
    let set = |xs: &[String]| format!("{{{}}}", xs.join(", "));
    let kind = if report.frame { "frame" } else { "quantale" };
    writeln!(out, "{name}: {kind} on {} elements", report.size).unwrap();
    writeln!(out, "elements: {}", report.elements.join(" ")).unwrap();
    let covers: Vec<String> = q
        .lattice()
        .hasse_edges()
        .into_iter()
        .map(|(a, b)| format!("{} < {}", q.label(a), q.label(b)))
        .collect();
    writeln!(out, "covers: {}", covers.join(", ")).unwrap();
    writeln!(out, "multiplication:").unwrap();
    let width = q.labels().iter().map(|l| l.chars().count()).max().unwrap_or(1);
    let pad = |s: &str| format!("{s:>width$}");
    let header: Vec<String> = q.labels().iter().map(|l| pad(l)).collect();
    writeln!(out, "  {} | {}", pad("·"), header.join(" ")).unwrap();
    writeln!(
        out,
        "  {}-+-{}",
        "-".repeat(width),
        "-".repeat(header.join(" ").chars().count())
    )
    .unwrap();
    for x in q.elements() {
        let row: Vec<String> = q.elements().map(|y| pad(q.label(q.mul(x, y)))).collect();
        writeln!(out, "  {} | {}", pad(q.label(x)), row.join(" ")).unwrap();
    }
    writeln!(out, "Spec(A) = {}", set(&report.spec)).unwrap();
    writeln!(out, "Max(A) = {}", set(&report.max)).unwrap();
    let rho: Vec<String> = report.radical.iter().map(|(a, r)| format!("{a} ↦ {r}")).collect();
    writeln!(out, "ρ: {}", rho.join(", ")).unwrap();
    writeln!(out, "R(A) = {}", set(&report.radical_frame)).unwrap();
    writeln!(out, "B(A) = {}", set(&report.boolean_center)).unwrap();
    match &report.jacobson_radical {
        Some(r) => writeln!(out, "r(A) = {r}").unwrap(),
        None => writeln!(out, "r(A) undefined (one-point quantale)").unwrap(),
    }
    let classes: Vec<String> = report.reticulation.iter().map(|c| set(c)).collect();
    writeln!(out, "L(A): {} classes: {}", classes.len(), classes.join(" ")).unwrap();
    writeln!(out, "verdicts:").unwrap();
    for v in &report.verdicts {
        let value = match v.holds {
            Some(true) => "true",
            Some(false) => "false",
            None => "trivial",
        };
        match &v.witness {
            Some(w) => writeln!(out, "  {:<17} {value:<7} ({w})", v.property).unwrap(),
            None => writeln!(out, "  {:<17} {value}", v.property).unwrap(),
        }
    }
    match &report.decomposition {
        Some(factors) => {
            writeln!(out, "decomposition into {} local factors:", factors.len()).unwrap();
            for f in factors {
                writeln!(
                    out,
                    "  [{}) = {}  Max = {}",
                    f.idempotent,
                    set(&f.elements),
                    set(&f.maximal)
                )
                .unwrap();
            }
        }
        None => match &report.decomposition_failure {
            Some(why) => writeln!(out, "decomposition: none ({why})").unwrap(),
            None => writeln!(out, "decomposition: none").unwrap(),
        },
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::generate;
    use crate::properties::analyze;

    #[test]
    fn d12_text_report() {
        let d = generate("zn:12").unwrap();
        let text = render_analysis("zn:12", &d, &analyze(&d).unwrap());
        assert!(text.contains("Spec(A) = {2, 3}"));
        assert!(text.contains("B(A) = {1, 3, 4, 12}"));
        assert!(text.contains("decomposition into 2 local factors"));
        assert!(text
            .lines()
            .any(|l| l.trim_start().starts_with("lp") && l.contains("true")));
    }
}
