use std::fmt::Write;

use hgpoly_core::betti::BettiTable;

/// Macaulay2-style layout: columns are homological degrees `i`, rows are
/// `j - i`, zeros print as `.`.
pub fn betti_table(table: &BettiTable) -> String {
    let pd = table.graded.keys().map(|&(i, _)| i).max().unwrap_or(0);
    let reg = table.graded.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
    let mut cells: Vec<Vec<String>> = Vec::new();
    cells.push((0..=pd).map(|i| i.to_string()).collect());
    cells.push(
        (0..=pd)
            .map(|i| table.graded.iter().filter(|(&(ii, _), _)| ii == i).map(|(_, &b)| b).sum::<u64>().to_string())
            .collect(),
    );
    for r in 0..=reg {
        cells.push(
            (0..=pd)
                .map(|i| match table.graded_at(i, i + r) {
                    0 => ".".to_string(),
                    b => b.to_string(),
                })
                .collect(),
        );
    }
    let widths: Vec<usize> = (0..=pd).map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(1)).collect();
    let labels: Vec<String> = std::iter::once(String::new())
        .chain(std::iter::once("total:".to_string()))
        .chain((0..=reg).map(|r| format!("{r}:")))
        .collect();
    let label_width = labels.iter().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for (label, row) in labels.iter().zip(&cells) {
        let _ = write!(out, "{label:>label_width$}");
        for (cell, w) in row.iter().zip(&widths) {
            let _ = write!(out, " {cell:>w$}");
        }
        out.push('\n');
    }
    out
}
