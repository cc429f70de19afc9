//! The `.qam` matrix format: a `qam n=<n> rows=<r>` header, then one row per
//! line over `{0,1,w,W}`. Lines starting with `#` and blank lines are skipped.

use std::path::Path;

use crate::code::AdditiveCode;
use crate::error::{Error, Result};
use crate::field::Gf4Vector;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn header_field(tok: Option<&str>, key: &str, line: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("header lacks {key}=")))?;
    tok.strip_prefix(key)
        .and_then(|v| v.strip_prefix('='))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| parse_err(line, format!("expected {key}=<count>, found {tok:?}")))
}

pub fn parse_qam(text: &str) -> Result<AdditiveCode> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("qam") {
        return Err(parse_err(hline, "header must start with \"qam\""));
    }
    let n = header_field(toks.next(), "n", hline)?;
    let r = header_field(toks.next(), "rows", hline)?;
    if let Some(extra) = toks.next() {
        return Err(parse_err(
            hline,
            format!("unexpected header token {extra:?}"),
        ));
    }
    let mut rows = Vec::with_capacity(r);
    for (line, text) in lines {
        let row: Gf4Vector = text
            .parse()
            .map_err(|c| parse_err(line, format!("unexpected symbol {c:?}")))?;
        if row.len() != n {
            return Err(parse_err(
                line,
                format!("row has {} symbols, header says {n}", row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != r {
        return Err(parse_err(
            hline,
            format!("header says {r} rows, found {}", rows.len()),
        ));
    }
    AdditiveCode::new(rows)
}

/// Header and rows only; `parse_qam` inverts it exactly.
pub fn format_qam(code: &AdditiveCode) -> String {
    let mut out = format!("qam n={} rows={}\n", code.n(), code.num_rows());
    for r in code.rows() {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}

/// [`format_qam`] preceded by `#` comment lines.
pub fn format_qam_with_comments(code: &AdditiveCode, comments: &[String]) -> String {
    let mut out: String = comments.iter().map(|c| format!("# {c}\n")).collect();
    out.push_str(&format_qam(code));
    out
}

pub fn read_qam(path: impl AsRef<Path>) -> Result<AdditiveCode> {
    parse_qam(&std::fs::read_to_string(path)?)
}

pub fn write_qam(path: impl AsRef<Path>, code: &AdditiveCode) -> Result<()> {
    std::fs::write(path, format_qam(code))?;
    Ok(())
}
