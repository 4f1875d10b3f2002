use std::fmt::Write;

use super::{CensusReport, Status};

/// Text table with columns case, shape, dim H_0, verdict, rule, citation.
pub fn render_text(r: &CensusReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "census: dim H = {}, scenario {}", r.n, r.scenario);
    for b in &r.branches {
        let gs: Vec<String> = b.grouplikes.iter().map(|g| g.to_string()).collect();
        let _ = writeln!(out, "\n== {} (|G(H)| ∈ {{{}}})", b.label, gs.join(", "));
        let _ = writeln!(out, "hypotheses: {}", b.context.flags());
        if !b.citation.is_empty() {
            let _ = writeln!(out, "branch: {}", b.citation);
        }
        let rows: Vec<[String; 6]> = b
            .candidates
            .iter()
            .map(|c| {
                let (rule, citation, bound) = match c.attributed.and_then(|id| c.verdict(id)) {
                    Some(v) => (v.rule.to_string(), v.citation.clone(), v.bound_computed),
                    None => ("-".into(), "-".into(), None),
                };
                let verdict = match (c.status, bound) {
                    (Status::Eliminated, Some(b)) => format!("Eliminated ({b} > {})", r.n),
                    (Status::Eliminated, None) => "Eliminated".into(),
                    _ => "Survives".into(),
                };
                [c.case.clone().map_or("-".into(), |s| format!("({s})")), c.shape.clone(), c.dim_h0.to_string(), verdict, rule, citation]
            })
            .collect();
        let header = ["case", "shape", "dim H_0", "verdict", "rule", "citation"].map(String::from);
        let mut widths = [0usize; 5];
        for row in std::iter::once(&header).chain(&rows) {
            for (w, cell) in widths.iter_mut().zip(row.iter()) {
                *w = (*w).max(cell.chars().count());
            }
        }
        for row in std::iter::once(&header).chain(&rows) {
            let mut line = String::new();
            for (w, cell) in widths.iter().zip(row.iter()) {
                let pad = w - cell.chars().count();
                let _ = write!(line, "{cell}{}  ", " ".repeat(pad));
            }
            line.push_str(&row[5]);
            let _ = writeln!(out, "{}", line.trim_end());
        }
        let surv = b.survivors().count();
        let _ = writeln!(out, "{} candidate(s), {} eliminated, {} surviving", b.candidates.len(), b.candidates.len() - surv, surv);
    }
    let _ = writeln!(out, "\n{}", r.conclusion);
    out
}
