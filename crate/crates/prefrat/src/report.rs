//! Rendering of subspaces and verification rows.

use std::fmt::Write as _;

use prefrat_core::exactalg::Subspace;

use crate::verify::{Row, Summary};

/// The canonical basis of `s` as a matrix of rows.
pub fn matrix(s: &Subspace) -> Vec<Vec<u8>> {
    s.basis().to_vec()
}

/// `v` as a combination of basis labels, e.g. `2*e0 + c`.
pub fn vector_text(labels: &[String], v: &[u8]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(labels)
        .filter(|(&c, _)| c != 0)
        .map(|(&c, l)| if c == 1 { l.clone() } else { format!("{c}*{l}") })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// `span(…)` of the canonical basis, or `0`.
pub fn subspace_text(labels: &[String], rows: &[Vec<u8>]) -> String {
    if rows.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = rows.iter().map(|v| vector_text(labels, v)).collect();
    format!("span({})", parts.join(", "))
}

/// Text table: one line per row plus a summary line.
///
/// `labels` maps an algebra name to its basis labels.
pub fn rows_text<'a>(rows: &[Row], labels: impl Fn(&str) -> Option<&'a [String]>) -> String {
    let mut out = String::new();
    for r in rows {
        let u = match labels(&r.algebra) {
            Some(l) => subspace_text(l, &r.u),
            None => format!("{:?}", r.u),
        };
        let _ = write!(out, "{:<20} {:<20} {:<22} U={u}", r.status.label(), r.algebra, r.check);
        if !r.detail.is_empty() && r.status != crate::verify::Status::Pass {
            let _ = write!(out, "  ({})", r.detail);
        }
        out.push('\n');
        if let Some(l) = labels(&r.algebra) {
            for w in &r.witnesses {
                let _ = writeln!(out, "    witness {}", subspace_text(l, w));
            }
        }
    }
    let s = Summary::of(rows);
    let _ = writeln!(
        out,
        "{} rows: {} passed, {} failed, {} skipped (hypothesis), {} skipped (resource)",
        rows.len(),
        s.pass,
        s.fail,
        s.skipped_hypothesis,
        s.skipped_resource
    );
    out
}

/// Pretty JSON array of rows with a trailing newline.
pub fn rows_json(rows: &[Row]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
    s.push('\n');
    s
}
