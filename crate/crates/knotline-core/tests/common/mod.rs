//! Corpus diagrams and scripts shared by the integration tests.

#![allow(dead_code)]

use knotline_core::wilson::Derivation;
use knotline_core::{parse_diagram, KnotDiagram};

macro_rules! corpus {
    ($($name:literal => $m:expr),* $(,)?) => {
        /// `(name, diagram text, script text, expected m)`.
        pub const CORPUS: &[(&str, &str, &str, i64)] = &[$((
            $name,
            include_str!(concat!("../../../knotline/data/corpus/", $name, ".knot")),
            include_str!(concat!("../../../knotline/data/scripts/", $name, ".script")),
            $m,
        )),*];
    };
}

corpus! {
    "fig1" => 0,
    "fig2a" => -1,
    "fig2b" => 1,
    "fig3" => 3,
    "fig4" => -4,
    "fig5" => -9,
}

pub const UNKNOT: &str = include_str!("../../../knotline/data/corpus/unknot.knot");

pub fn diagram(text: &str) -> KnotDiagram {
    parse_diagram(text).expect("corpus diagram parses")
}

pub fn script(text: &str) -> Derivation {
    Derivation::parse(text).expect("corpus script parses")
}

/// Every corpus diagram including the unknot.
pub fn all_diagrams() -> Vec<(&'static str, KnotDiagram)> {
    let mut out = vec![("unknot", diagram(UNKNOT))];
    out.extend(
        CORPUS
            .iter()
            .map(|(name, text, _, _)| (*name, diagram(text))),
    );
    out
}
