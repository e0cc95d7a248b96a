//! CSV and JSON emitters for the numeric checks.
//!
//! Floats are printed in Rust's shortest round-trip form, so equal inputs
//! give byte-identical output.

use std::io::Write;

use knotline_core::analytic::{
    fluctuation, smooth_count, AnalyticError, DensityTerms, PrimeTable, ZeroList,
};
use knotline_core::kz::{CasimirTensor, MonodromyMatrix};
use num_complex::Complex64;
use rayon::prelude::*;
use serde_json::json;

use crate::io::Error;

/// One line of the zero-count comparison.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CountRow {
    pub t: f64,
    pub smooth: f64,
    pub fluctuation: f64,
    pub tail: f64,
    pub count: usize,
}

impl CountRow {
    pub fn estimate(&self) -> f64 {
        self.smooth + self.fluctuation
    }
}

/// Evaluates each height in parallel; rows keep the input order.
pub fn count_rows(
    heights: &[f64],
    primes: &PrimeTable,
    zeros: &ZeroList,
) -> Result<Vec<CountRow>, AnalyticError> {
    heights
        .par_iter()
        .map(|&t| {
            let smooth = smooth_count(t)?;
            let f = fluctuation(t, primes);
            Ok(CountRow {
                t,
                smooth,
                fluctuation: f.value,
                tail: f.tail,
                count: zeros.count_up_to(t),
            })
        })
        .collect()
}

pub fn write_count_csv<W: Write>(out: W, rows: &[CountRow]) -> Result<(), Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["T", "smooth", "fluctuation", "tail", "estimate", "count"])?;
    for r in rows {
        w.write_record([
            r.t.to_string(),
            r.smooth.to_string(),
            r.fluctuation.to_string(),
            r.tail.to_string(),
            r.estimate().to_string(),
            r.count.to_string(),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn write_amplitudes_csv<W: Write>(out: W, d: &DensityTerms) -> Result<(), Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["p", "amplitude"])?;
    w.write_record(["average".to_string(), d.average.to_string()])?;
    for (p, a) in &d.amplitudes {
        w.write_record([p.to_string(), a.to_string()])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

fn entries(get: impl Fn(usize, usize) -> Complex64) -> Vec<(usize, usize, Complex64)> {
    (0..4)
        .flat_map(|r| (0..4).map(move |c| (r, c)))
        .map(|(r, c)| (r, c, get(r, c)))
        .collect()
}

/// Matrix entries of `t` and `R` followed by their spectra.
pub fn write_monodromy_csv<W: Write>(
    out: W,
    t: &CasimirTensor,
    r: &MonodromyMatrix,
) -> Result<(), Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["object", "row", "col", "re", "im"])?;
    let tm = t.matrix();
    let rm = r.matrix();
    for (name, cells) in [
        ("t", entries(|i, j| tm[(i, j)])),
        ("R", entries(|i, j| rm[(i, j)])),
    ] {
        for (i, j, z) in cells {
            w.write_record([
                name.to_string(),
                i.to_string(),
                j.to_string(),
                z.re.to_string(),
                z.im.to_string(),
            ])?;
        }
    }
    for (i, ev) in t.eigenvalues().iter().enumerate() {
        w.write_record([
            "t-eigenvalue".to_string(),
            i.to_string(),
            String::new(),
            ev.to_string(),
            "0".into(),
        ])?;
    }
    for (i, ph) in r.eigenphases().iter().enumerate() {
        w.write_record([
            "R-eigenphase".to_string(),
            i.to_string(),
            String::new(),
            ph.to_string(),
            "0".into(),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn monodromy_json(t: &CasimirTensor, r: &MonodromyMatrix) -> serde_json::Value {
    let tm = t.matrix();
    let rm = r.matrix();
    let grid = |get: &dyn Fn(usize, usize) -> Complex64| {
        (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| [get(i, j).re, get(i, j).im])
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
    };
    json!({
        "level": t.level(),
        "casimir": grid(&|i, j| tm[(i, j)]),
        "casimir_eigenvalues": t.eigenvalues(),
        "monodromy": grid(&|i, j| rm[(i, j)]),
        "monodromy_eigenphases": r.eigenphases(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use knotline_core::kz::{build_casimir, monodromy};

    #[test]
    fn count_csv_is_reproducible() {
        let primes = PrimeTable::sieve(1000);
        let zeros = ZeroList::parse("14.134725\n21.022040\n").unwrap();
        let render = || {
            let rows = count_rows(&[20.0, 30.0], &primes, &zeros).unwrap();
            let mut buf = Vec::new();
            write_count_csv(&mut buf, &rows).unwrap();
            buf
        };
        let first = render();
        assert_eq!(first, render());
        assert!(String::from_utf8(first)
            .unwrap()
            .lines()
            .nth(1)
            .unwrap()
            .ends_with(",1"));
    }

    #[test]
    fn monodromy_dump_shapes() {
        let t = build_casimir(1).unwrap();
        let r = monodromy(1).unwrap();
        let mut buf = Vec::new();
        write_monodromy_csv(&mut buf, &t, &r).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 1 + 32 + 8);
        let j = monodromy_json(&t, &r);
        assert_eq!(j["casimir"].as_array().unwrap().len(), 4);
    }
}
