use grooming_core::bounds::{MTable, MValue};

/// Cell text: exact values plain, open cells as `≥lo`, conjectured as `v?`.
pub fn cell_text(value: MValue) -> String {
    match value {
        MValue::Exact(v) => v.to_string(),
        MValue::Interval {
            conjectured: Some(v), ..
        } => format!("{v}?"),
        MValue::Interval { lo, hi, .. } if lo == hi => lo.to_string(),
        MValue::Interval { lo, .. } => format!("≥{lo}"),
    }
}

/// Renders the table with one row per `C` and one column per `Δ`, followed
/// by a legend for the markers that occur.
pub fn emit_table(table: &MTable) -> String {
    let rows: Vec<(usize, Vec<String>)> = table
        .capacities
        .clone()
        .zip(&table.cells)
        .map(|(c, row)| (c, row.iter().map(|&v| cell_text(v)).collect()))
        .collect();
    let width = rows
        .iter()
        .flat_map(|(_, r)| r.iter().map(|s| s.chars().count()))
        .chain(table.degrees.clone().map(|d| d.to_string().len()))
        .max()
        .unwrap_or(1);
    let label = 4;

    let mut out = format!("{:<label$}", "C\\Δ");
    for d in table.degrees.clone() {
        out.push_str(&format!(" {d:>width$}"));
    }
    out.push('\n');
    for (c, row) in &rows {
        out.push_str(&format!("{c:<label$}"));
        for s in row {
            let pad = width - s.chars().count();
            out.push_str(&format!(" {}{s}", " ".repeat(pad)));
        }
        out.push('\n');
    }
    let cells = || rows.iter().flat_map(|(_, r)| r.iter());
    if cells().any(|s| s.starts_with('≥')) {
        out.push_str("≥k: lower bound k, upper bound Δ\n");
    }
    if cells().any(|s| s.ends_with('?')) {
        out.push_str("k?: conjectured value, not proved\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn marked_cells() {
        let t = MTable::known(1..=6, 1..=6);
        assert_eq!(cell_text(t.get(3, 3).unwrap()), "3");
        assert_eq!(cell_text(t.get(4, 3).unwrap()), "2?");
        assert_eq!(cell_text(t.get(5, 6).unwrap()), "≥4");
        let text = emit_table(&t);
        assert_eq!(text.lines().count(), 1 + 6 + 2);
        let widths: Vec<usize> = text.lines().take(7).map(|l| l.chars().count()).collect();
        assert!(widths.windows(2).all(|w| w[0] == w[1]), "{text}");
    }
}
