//! Knot diagrams, the Wilson-word calculus, the knot classification
//! arithmetic and the numerics used to check the analytic identities.
#![no_std]

extern crate alloc;

pub mod analytic;
pub mod arith;
pub mod diagram;
pub mod kz;
pub mod wilson;

pub use diagram::{parse_diagram, Crossing, DiagramError, Kind, KnotDiagram, Strand};
pub use wilson::{check_derivation, encode_wilson, invariant_m, reduce};
