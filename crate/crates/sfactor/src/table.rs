//! Plain-text multiplication tables.
//!
//! ```text
//! 3
//! # e a b
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! ```
//!
//! The first line is the order `n`, an optional `#` line names the elements,
//! and `n` rows of `n` zero-based indices follow (row `a`, column `b` holds
//! `ab`). Element 0 must be the identity. CRLF line endings are accepted.

use std::fmt::Write as _;
use std::path::Path;

use sfactor_core::group::{TableError, MAX_FINITE_ORDER};
use sfactor_core::FiniteGroup;

#[derive(Debug, thiserror::Error)]
pub enum TableFileError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid group table: {0}")]
    Invalid(#[from] TableError),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

fn parse_err(line: usize, message: impl Into<String>) -> TableFileError {
    TableFileError::Parse { line, message: message.into() }
}

pub fn parse_group_table(text: &str) -> Result<FiniteGroup, TableFileError> {
    let mut lines = text
        .lines()
        .map(|l| l.trim_end_matches('\r'))
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());

    let (first, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| parse_err(first, format!("expected the group order, found `{}`", header.trim())))?;
    if n == 0 {
        return Err(TableError::Empty.into());
    }
    if n > MAX_FINITE_ORDER {
        return Err(TableError::TooLarge(n).into());
    }

    let mut names = None;
    let mut rows = Vec::with_capacity(n);
    for (no, line) in lines {
        let line = line.trim();
        if let Some(rest) = line.strip_prefix('#') {
            if names.is_some() || !rows.is_empty() {
                return Err(parse_err(no, "the name line must come right after the order"));
            }
            names = Some(rest.split_whitespace().map(str::to_string).collect::<Vec<_>>());
            continue;
        }
        if rows.len() == n {
            return Err(parse_err(no, format!("more than {n} rows")));
        }
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| parse_err(no, format!("`{t}` is not an index"))))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(parse_err(no, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(parse_err(text.lines().count().max(1), format!("expected {n} rows, found {}", rows.len())));
    }
    Ok(FiniteGroup::from_rows(&rows, names)?)
}

pub fn read_group_table(path: &Path) -> Result<FiniteGroup, TableFileError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| TableFileError::Io { path: path.display().to_string(), source })?;
    parse_group_table(&text)
}

/// Serializes a group in the format [`parse_group_table`] reads, names
/// included.
pub fn write_group_table(g: &FiniteGroup) -> String {
    let mut out = format!("{}\n#", g.order());
    for name in g.names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    for row in g.rows() {
        let mut first = true;
        for x in row {
            if !first {
                out.push(' ');
            }
            first = false;
            write!(out, "{x}").unwrap();
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_c2() {
        assert_eq!(parse_group_table("1\n0\n").unwrap().order(), 1);
        let c2 = parse_group_table("2\r\n0 1\r\n1 0\r\n").unwrap();
        assert_eq!(c2.rows(), FiniteGroup::cyclic(2).unwrap().rows());
    }

    #[test]
    fn names_line() {
        let g = parse_group_table("3\n# e a b\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
        assert_eq!(g.resolve("b"), Some(2));
        assert_eq!(g.resolve("1"), Some(1));
    }

    #[test]
    fn round_trip() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let back = parse_group_table(&write_group_table(&s3)).unwrap();
        assert_eq!(back.rows(), s3.rows());
        assert_eq!(back.names(), s3.names());
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse_group_table(""), Err(TableFileError::Parse { .. })));
        assert!(matches!(parse_group_table("x\n"), Err(TableFileError::Parse { line: 1, .. })));
        assert!(matches!(parse_group_table("2\n0 1\n"), Err(TableFileError::Parse { .. })));
        assert!(matches!(parse_group_table("2\n0 1\n1\n"), Err(TableFileError::Parse { line: 3, .. })));
        assert!(matches!(parse_group_table("2\n0 1\n1 0\n0 1\n"), Err(TableFileError::Parse { line: 4, .. })));
        assert!(matches!(parse_group_table("2\n0 1\n1 q\n"), Err(TableFileError::Parse { line: 3, .. })));
        assert!(matches!(parse_group_table("2\n0 1\n1 1\n"), Err(TableFileError::Invalid(_))));
    }

    #[test]
    fn non_associative_latin_square() {
        let text = "6\n0 1 2 3 4 5\n1 4 0 5 3 2\n2 0 1 4 5 3\n3 2 5 1 0 4\n4 5 3 0 2 1\n5 3 4 2 1 0\n";
        match parse_group_table(text) {
            Err(TableFileError::Invalid(TableError::NotAssociative { .. })) => {}
            other => panic!("{other:?}"),
        }
    }
}
