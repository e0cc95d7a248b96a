//! File formats, bundled data and report emitters around `knotline-core`.

pub mod data;
pub mod io;
pub mod report;

pub use io::Error;
