//! Shared parsing for the row-per-line text format.

use std::str::FromStr;

use crate::error::{Error, Result};

/// Reads the header line `TAG a b ...` with exactly `count` parameters.
pub(crate) fn header<'a>(
    lines: &mut impl Iterator<Item = &'a str>,
    tag: &str,
    count: usize,
) -> Result<Vec<usize>> {
    let line = lines
        .next()
        .ok_or_else(|| Error::Parse("missing header".into()))?;
    let mut words = line.split_whitespace();
    if words.next() != Some(tag) {
        return Err(Error::Parse(format!("expected header `{tag} ...`, got `{line}`")));
    }
    let params = words
        .map(|w| w.parse::<usize>().map_err(|_| Error::Parse(format!("bad header value `{w}`"))))
        .collect::<Result<Vec<_>>>()?;
    if params.len() != count {
        return Err(Error::Parse(format!(
            "header `{tag}` takes {count} values, got {}",
            params.len()
        )));
    }
    Ok(params)
}

/// Reads exactly `count` rows; an empty line is an empty row.
pub(crate) fn rows<'a, T: FromStr>(
    lines: impl Iterator<Item = &'a str>,
    count: usize,
) -> Result<Vec<Vec<T>>> {
    let mut out = Vec::with_capacity(count);
    let mut lines = lines.peekable();
    for i in 0..count {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing row {}", i + 1)))?;
        let row = line
            .split_whitespace()
            .map(|w| w.parse::<T>().map_err(|_| Error::Parse(format!("bad entry `{w}` in row {}", i + 1))))
            .collect::<Result<Vec<T>>>()?;
        out.push(row);
    }
    if lines.any(|l| !l.trim().is_empty()) {
        return Err(Error::Parse("trailing rows".into()));
    }
    Ok(out)
}

pub(crate) fn join<T: ToString>(row: &[T]) -> String {
    row.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub(crate) fn render<T: ToString>(header: &str, rows: &[Vec<T>]) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for row in rows {
        out.push_str(&join(row));
        out.push('\n');
    }
    out
}
