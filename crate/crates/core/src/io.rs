//! Reading and writing brace tables.
//!
//! The text format is deliberately plain: a header line `brace <n>`, the `n`
//! rows of the additive table, exactly one blank line, then the `n` rows of
//! the multiplicative table. Entries are separated by whitespace; `#` starts
//! a comment running to the end of the line, and a line holding only a
//! comment is ignored entirely. Writing always produces the single-space,
//! trailing-newline form, so canonical files round-trip byte for byte.

use crate::brace::{BraceError, SkewBrace};
use crate::group::Elem;
use std::fmt::Write as _;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid brace: {0}")]
    Invalid(#[from] BraceError),
}

fn parse_err(line: usize, message: impl Into<String>) -> IoError {
    IoError::Parse { line, message: message.into() }
}

/// Serialises a brace in the canonical text form.
pub fn format_brace(b: &SkewBrace) -> String {
    let n = b.order();
    let mut out = String::with_capacity(2 * n * n * 3 + 16);
    writeln!(out, "brace {n}").unwrap();
    fn table(out: &mut String, rows: Vec<Vec<Elem>>) {
        for row in rows {
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    out.push(' ');
                }
                write!(out, "{v}").unwrap();
            }
            out.push('\n');
        }
    }
    table(&mut out, b.add().rows());
    out.push('\n');
    table(&mut out, b.mul().rows());
    out
}

enum Line<'a> {
    Blank,
    Text(&'a str),
}

fn read_table<'a, I: Iterator<Item = (usize, Line<'a>)>>(
    iter: &mut I,
    n: usize,
    last_line: usize,
    name: &str,
) -> Result<Vec<Vec<Elem>>, IoError> {
    let mut rows = Vec::with_capacity(n);
    while rows.len() < n {
        match iter.next() {
            Some((l, Line::Text(s))) => {
                let mut row = Vec::with_capacity(n);
                for tok in s.split_whitespace() {
                    let v: Elem = tok
                        .parse()
                        .map_err(|_| parse_err(l, format!("expected a number, found {tok:?}")))?;
                    if v as usize >= n {
                        return Err(parse_err(l, format!("entry {v} out of range for order {n}")));
                    }
                    row.push(v);
                }
                if row.len() != n {
                    return Err(parse_err(
                        l,
                        format!("{name} row has {} entries, expected {n}", row.len()),
                    ));
                }
                rows.push(row);
            }
            Some((l, Line::Blank)) => {
                return Err(parse_err(l, format!("blank line inside the {name} table")));
            }
            None => {
                return Err(parse_err(
                    last_line,
                    format!("unexpected end of file inside the {name} table"),
                ));
            }
        }
    }
    Ok(rows)
}

/// Parses the text form and validates the result as a skew brace.
pub fn parse_brace(text: &str) -> Result<SkewBrace, IoError> {
    // Strip comments up front; a line left empty by a comment vanishes, a
    // genuinely empty line stays visible as a separator.
    let mut lines: Vec<(usize, Line)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let had_comment = raw.contains('#');
        let content = raw.split('#').next().unwrap_or("").trim();
        match (content.is_empty(), had_comment) {
            (true, true) => {}
            (true, false) => lines.push((idx + 1, Line::Blank)),
            (false, _) => lines.push((idx + 1, Line::Text(content))),
        }
    }
    let last_line = text.lines().count() + 1;
    let mut iter = lines.into_iter().peekable();

    // Leading blank lines are harmless.
    while matches!(iter.peek(), Some((_, Line::Blank))) {
        iter.next();
    }
    let n = match iter.next() {
        Some((l, Line::Text(s))) => match s.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["brace", count] => match count.parse::<usize>() {
                Ok(0) => return Err(parse_err(l, "order must be positive")),
                Ok(n) => n,
                Err(_) => return Err(parse_err(l, format!("expected a number, found {count:?}"))),
            },
            _ => return Err(parse_err(l, "expected header `brace <n>`")),
        },
        _ => return Err(parse_err(last_line, "missing header line `brace <n>`")),
    };

    let add_rows = read_table(&mut iter, n, last_line, "additive")?;
    match iter.next() {
        Some((_, Line::Blank)) => {}
        Some((l, Line::Text(_))) => {
            return Err(parse_err(l, "expected a blank line between the two tables"));
        }
        None => {
            return Err(parse_err(last_line, "unexpected end of file before the multiplicative table"))
        }
    }
    while matches!(iter.peek(), Some((_, Line::Blank))) {
        iter.next();
    }
    let mul_rows = read_table(&mut iter, n, last_line, "multiplicative")?;
    if let Some((l, _)) = iter.find(|(_, l)| matches!(l, Line::Text(_))) {
        return Err(parse_err(l, "unexpected content after the multiplicative table"));
    }

    Ok(SkewBrace::validate(&add_rows, &mul_rows)?)
}

/// Reads and validates one brace file.
pub fn read_brace_file(path: impl AsRef<Path>) -> Result<SkewBrace, IoError> {
    let text = std::fs::read_to_string(path)?;
    parse_brace(&text)
}

/// Writes one brace in canonical text form.
pub fn write_brace_file(path: impl AsRef<Path>, b: &SkewBrace) -> Result<(), IoError> {
    std::fs::write(path, format_brace(b))?;
    Ok(())
}

/// Directory name holding all braces of one order.
pub fn catalog_dir_name(order: usize) -> String {
    format!("order{order:02}")
}

/// File name of the brace with the given 1-based index.
pub fn brace_file_name(index: usize) -> String {
    format!("brace_{index:04}.brace")
}

/// Writes a whole catalog under `root/order<NN>/brace_<idx>.brace`, indices
/// starting at 1 in the order given. Returns the directory written.
pub fn write_catalog(
    root: impl AsRef<Path>,
    order: usize,
    braces: &[SkewBrace],
) -> Result<std::path::PathBuf, IoError> {
    let dir = root.as_ref().join(catalog_dir_name(order));
    std::fs::create_dir_all(&dir)?;
    for (i, b) in braces.iter().enumerate() {
        write_brace_file(dir.join(brace_file_name(i + 1)), b)?;
    }
    Ok(dir)
}

/// Reads every `.brace` file under `root/order<NN>`, in file-name order.
pub fn read_catalog(root: impl AsRef<Path>, order: usize) -> Result<Vec<SkewBrace>, IoError> {
    let dir = root.as_ref().join(catalog_dir_name(order));
    let mut names: Vec<std::path::PathBuf> = std::fs::read_dir(&dir)?
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|e| e == "brace"))
        .collect();
    names.sort();
    names.into_iter().map(read_brace_file).collect()
}
