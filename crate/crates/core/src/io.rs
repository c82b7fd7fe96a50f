//! Whitespace-separated edge-list files (KONECT layout).
//!
//! Lines starting with `%` or `#` are comments. Each data line holds two
//! integer vertex ids; any further columns (weights, timestamps) are ignored.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Graph, LoadReport};

pub fn parse_edge_list<R: BufRead>(reader: R, origin: &Path) -> Result<Vec<(u64, u64)>> {
    let mut pairs = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::io(origin, e))?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let id = |fields: &mut std::str::SplitWhitespace<'_>| -> Result<u64> {
            let tok = fields.next().ok_or_else(|| Error::Parse {
                path: origin.to_path_buf(),
                line: lineno + 1,
                reason: "expected two vertex ids".into(),
            })?;
            tok.parse::<u64>().map_err(|_| Error::Parse {
                path: origin.to_path_buf(),
                line: lineno + 1,
                reason: format!("`{tok}` is not a nonnegative integer vertex id"),
            })
        };
        let u = id(&mut fields)?;
        let v = id(&mut fields)?;
        pairs.push((u, v));
    }
    Ok(pairs)
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<(Graph, LoadReport)> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let pairs = parse_edge_list(BufReader::new(file), path)?;
    Ok(Graph::from_edge_list(&pairs))
}

/// Writes `% n <n> m <m>` followed by one `u v` line per edge, using the
/// graph's original labels.
pub fn write_edge_list_to<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    writeln!(out, "% n {} m {}", g.vertex_count(), g.edge_count())?;
    for &(u, v) in g.edges() {
        writeln!(out, "{} {}", g.label(u), g.label(v))?;
    }
    out.flush()
}

pub fn write_edge_list(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    write_edge_list_to(g, BufWriter::new(file)).map_err(|e| Error::io(path, e))
}
