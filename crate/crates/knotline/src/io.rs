//! Reading and writing the text formats.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use knotline_core::analytic::{ZeroError, ZeroList};
use knotline_core::arith::{ExprError, Flags, KnotExpr, TableEntry};
use knotline_core::wilson::{Derivation, ScriptError};
use knotline_core::{parse_diagram, DiagramError, KnotDiagram};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Diagram { path: PathBuf, source: DiagramError },
    #[error("{}: {source}", path.display())]
    Script { path: PathBuf, source: ScriptError },
    #[error("{}: {source}", path.display())]
    Zeros { path: PathBuf, source: ZeroError },
    #[error("table row {row}: {message}")]
    TableRow { row: usize, message: String },
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub fn read_text(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn read_diagram(path: &Path) -> Result<KnotDiagram, Error> {
    parse_diagram(&read_text(path)?).map_err(|source| Error::Diagram {
        path: path.to_owned(),
        source,
    })
}

pub fn read_script(path: &Path) -> Result<Derivation, Error> {
    Derivation::parse(&read_text(path)?).map_err(|source| Error::Script {
        path: path.to_owned(),
        source,
    })
}

pub fn read_zeros(path: &Path) -> Result<ZeroList, Error> {
    ZeroList::parse(&read_text(path)?).map_err(|source| Error::Zeros {
        path: path.to_owned(),
        source,
    })
}

/// Column names of the table CSV.
pub const TABLE_HEADER: [&str; 5] = ["position", "knot", "related", "flags", "replaced"];

fn parse_knot(s: &str, row: usize) -> Result<KnotExpr, Error> {
    s.parse().map_err(|e: ExprError| Error::TableRow {
        row,
        message: e.to_string(),
    })
}

/// Parses table CSV; `replaced` lists knots separated by `;`.
pub fn parse_table(text: &str) -> Result<Vec<TableEntry>, Error> {
    let mut reader = csv::ReaderBuilder::new()
        .flexible(false)
        .from_reader(text.as_bytes());
    let header: Vec<String> = reader.headers()?.iter().map(str::to_owned).collect();
    if header != TABLE_HEADER {
        return Err(Error::TableRow {
            row: 0,
            message: format!("expected header {}", TABLE_HEADER.join(",")),
        });
    }
    let mut out = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let row = i + 1;
        let record = record?;
        let bad = |message: String| Error::TableRow { row, message };
        let position = record[0]
            .trim()
            .parse()
            .map_err(|_| bad("bad position".into()))?;
        let knot = parse_knot(record[1].trim(), row)?;
        let related = record[2]
            .trim()
            .parse()
            .map_err(|_| bad("bad related number".into()))?;
        let flags = Flags::parse(&record[3])
            .ok_or_else(|| bad(format!("unknown flags `{}`", &record[3])))?;
        let replaced = record[4]
            .split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| parse_knot(s, row))
            .collect::<Result<_, _>>()?;
        out.push(TableEntry {
            position,
            knot,
            related,
            flags,
            replaced,
        });
    }
    Ok(out)
}

pub fn read_table(path: &Path) -> Result<Vec<TableEntry>, Error> {
    parse_table(&read_text(path)?)
}

/// Writes rows in the same CSV layout [`parse_table`] reads.
pub fn write_table<'a, W: Write>(
    out: W,
    rows: impl IntoIterator<Item = &'a TableEntry>,
) -> Result<(), Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(TABLE_HEADER)?;
    for e in rows {
        let replaced: Vec<String> = e.replaced.iter().map(ToString::to_string).collect();
        w.write_record([
            e.position.to_string(),
            e.knot.to_string(),
            e.related.to_string(),
            e.flags.to_string(),
            replaced.join(";"),
        ])?;
    }
    w.flush().map_err(|source| Error::Io {
        path: PathBuf::from("<output>"),
        source,
    })?;
    Ok(())
}
