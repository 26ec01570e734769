//! Plain-text table rendering. All output is deterministic: every
//! collection is iterated in sorted order.

use std::fmt::Write;

use num_bigint::BigInt;

use betti_bounds::betti::BettiTable;
use betti_bounds::simplices::EmptySimplexBoundReport;

/// `1, 2, 3` — comma-joined integer entries.
pub fn join(entries: &[BigInt]) -> String {
    entries
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// `1 2 5` — a sorted vertex set on one line.
pub fn vertex_set(vertices: &[u32]) -> String {
    vertices
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Render rows with a header, right-aligning every column.
fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|cell| cell.len()).collect();
    for row in rows {
        for (idx, cell) in row.iter().enumerate() {
            widths[idx] = widths[idx].max(cell.len());
        }
    }
    let mut out = String::new();
    let render_row = |out: &mut String, cells: &[String]| {
        for (idx, cell) in cells.iter().enumerate() {
            if idx > 0 {
                out.push_str("  ");
            }
            let _ = write!(out, "{cell:>width$}", width = widths[idx]);
        }
        out.push('\n');
    };
    let header_cells: Vec<String> = header.iter().map(|cell| cell.to_string()).collect();
    render_row(&mut out, &header_cells);
    for row in rows {
        render_row(&mut out, row);
    }
    out
}

/// A Betti table as sorted `(i, j, beta)` rows.
pub fn betti_table(table: &BettiTable) -> String {
    let rows: Vec<Vec<String>> = table
        .iter()
        .map(|(i, j, value)| vec![i.to_string(), j.to_string(), value.to_string()])
        .collect();
    aligned(&["i", "j", "beta"], &rows)
}

/// The full empty-simplex report: per-degree bounds, cumulative bounds,
/// total, and the guaranteed-empty dimension range.
pub fn report(report: &EmptySimplexBoundReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "d = {}", report.d());
    let _ = writeln!(
        out,
        "g = {}  (u = {})",
        join(report.g().entries()),
        report.g().u()
    );
    let _ = writeln!(out, "bounds on empty simplices by generator degree:");
    let degree_rows: Vec<Vec<String>> = report
        .per_degree()
        .iter()
        .map(|(j, bound)| {
            vec![
                j.to_string(),
                (j.saturating_sub(1)).to_string(),
                bound.to_string(),
            ]
        })
        .collect();
    out.push_str(&aligned(&["degree j", "dim j-1", "bound"], &degree_rows));
    let _ = writeln!(out, "cumulative bounds N(k), empty simplices of dimension <= k:");
    let cumulative_rows: Vec<Vec<String>> = report
        .cumulative()
        .iter()
        .map(|(k, bound)| vec![k.to_string(), bound.to_string()])
        .collect();
    out.push_str(&aligned(&["k", "bound"], &cumulative_rows));
    let _ = writeln!(out, "total: {}", report.total());
    if let Some((lo, hi)) = report.vanishing_range() {
        let _ = writeln!(out, "no empty simplices of dimension {lo} through {hi}");
    }
    out
}

/// Side-by-side actual vs bound rows for `compare`.
pub fn comparison(
    degree_rows: &[(u32, BigInt, BigInt)],
    cumulative_rows: &[(u32, BigInt, BigInt)],
    actual_total: &BigInt,
    total_bound: &BigInt,
) -> String {
    let status = |actual: &BigInt, bound: &BigInt| {
        if actual > bound {
            "VIOLATED"
        } else if actual == bound {
            "attained"
        } else {
            "satisfied"
        }
    };
    let mut rows: Vec<Vec<String>> = degree_rows
        .iter()
        .map(|(j, actual, bound)| {
            vec![
                format!("degree {j}"),
                actual.to_string(),
                bound.to_string(),
                status(actual, bound).to_string(),
            ]
        })
        .collect();
    rows.extend(cumulative_rows.iter().map(|(k, actual, bound)| {
        vec![
            format!("N({k})"),
            actual.to_string(),
            bound.to_string(),
            status(actual, bound).to_string(),
        ]
    }));
    rows.push(vec![
        "total".to_string(),
        actual_total.to_string(),
        total_bound.to_string(),
        status(actual_total, total_bound).to_string(),
    ]);
    aligned(&["quantity", "actual", "bound", "status"], &rows)
}
