//! Cayley-table files: the order `n` on the first data line, then `n` rows
//! of `n` element indices. Element 0 must be the identity. Lines starting
//! with `#` before the data are comments.

use std::fmt::Write as _;
use std::path::Path;

use sigmanil::Group;

use crate::error::CliError;

pub fn parse(path: &Path, text: &str) -> Result<Group, CliError> {
    let bad = |m: String| CliError::Table(path.to_path_buf(), m);
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .skip_while(|(_, l)| l.is_empty() || l.starts_with('#'));
    let (ln, first) = lines.next().ok_or_else(|| bad("empty file".into()))?;
    let n: usize = first
        .parse()
        .map_err(|_| bad(format!("line {ln}: expected the order, found '{first}'")))?;
    if n == 0 {
        return Err(bad("order must be positive".into()));
    }
    let mut rows = Vec::with_capacity(n);
    for (ln, line) in lines.filter(|(_, l)| !l.is_empty()) {
        if rows.len() == n {
            return Err(bad(format!("line {ln}: more than {n} rows")));
        }
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| bad(format!("line {ln}: non-numeric entry")))?;
        if row.len() != n {
            return Err(bad(format!("line {ln}: expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(bad(format!("expected {n} rows, found {}", rows.len())));
    }
    if rows[0].iter().enumerate().any(|(j, &x)| x != j) || rows.iter().enumerate().any(|(i, r)| r[0] != i) {
        return Err(bad("element 0 is not the identity".into()));
    }
    Group::from_cayley_table(n, &rows).map_err(|e| bad(e.to_string()))
}

pub fn read(path: &Path) -> Result<Group, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    parse(path, &text)
}

pub fn render(g: &Group) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", g.order());
    for row in g.table() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

pub fn write(path: &Path, g: &Group) -> Result<(), CliError> {
    std::fs::write(path, render(g)).map_err(|e| CliError::Io(path.to_path_buf(), e))
}
