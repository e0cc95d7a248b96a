//! Location of the bundled data directory.

use std::path::PathBuf;

/// Environment variable overriding the data directory.
pub const DATA_ENV: &str = "KNOTLINE_DATA";

/// The corpus knots shipped with derivation scripts, with their expected `m`.
pub const CORPUS: [(&str, i64); 6] = [
    ("fig1", 0),
    ("fig2a", -1),
    ("fig2b", 1),
    ("fig3", 3),
    ("fig4", -4),
    ("fig5", -9),
];

/// `$KNOTLINE_DATA` if set, otherwise the `data/` directory of this crate.
pub fn data_dir() -> PathBuf {
    std::env::var_os(DATA_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/data")))
}

pub fn corpus_path(name: &str) -> PathBuf {
    data_dir().join("corpus").join(format!("{name}.knot"))
}

pub fn script_path(name: &str) -> PathBuf {
    data_dir().join("scripts").join(format!("{name}.script"))
}

pub fn golden_table_path() -> PathBuf {
    data_dir().join("tables").join("golden.csv")
}

pub fn zeros_path() -> PathBuf {
    data_dir().join("zeros").join("zeros100.txt")
}
