//! Closed form against brute force over a grid, written as CSV.

use std::io::Write;

use clap::ValueEnum;
use rayon::prelude::*;

use seidel_core::closedform::{energy_formula_c3, l_of, spectrum_c3, u_of};
use seidel_core::{eig_symmetric, C3Params, LinalgError, SeidelMatrix};

use crate::verify::Range;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Energy,
    Spectrum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Complete 3-uniform bipartite hypergraphs.
    C3,
}

pub const ENERGY_HEADER: [&str; 7] = ["m", "n", "L", "U", "closed_form_energy", "brute_force_energy", "difference"];
pub const SPECTRUM_HEADER: [&str; 5] = ["m", "n", "closed_form_spectrum", "brute_force_spectrum", "max_abs_difference"];

fn join(values: &[f64]) -> String {
    values.iter().map(f64::to_string).collect::<Vec<_>>().join(";")
}

fn row(quantity: Quantity, p: C3Params, eig_tol: f64) -> Result<Vec<String>, LinalgError> {
    let spec = eig_symmetric(SeidelMatrix::of(&p.hypergraph()).real(), eig_tol)?;
    let head = [p.m.to_string(), p.n.to_string()];
    Ok(match quantity {
        Quantity::Energy => {
            let closed = energy_formula_c3(p);
            let brute = spec.energy();
            let mut r = head.to_vec();
            r.extend([
                l_of(p).to_string(),
                u_of(p).to_string(),
                closed.to_string(),
                brute.to_string(),
                (brute - closed).to_string(),
            ]);
            r
        }
        Quantity::Spectrum => {
            let closed = spectrum_c3(p).values();
            let diff = spec.max_abs_diff(&closed).unwrap_or(f64::INFINITY);
            let mut r = head.to_vec();
            r.extend([join(&closed), join(spec.values()), diff.to_string()]);
            r
        }
    })
}

/// Computes one row per `(m, n)` in grid order. Both ranges must start at
/// 2 or above.
pub fn sweep_rows(
    quantity: Quantity,
    _family: Family,
    m_range: Range,
    n_range: Range,
    eig_tol: f64,
) -> Result<Vec<Vec<String>>, SweepError> {
    if m_range.lo < 2 || n_range.lo < 2 {
        return Err(SweepError::Range(format!("ranges must start at 2 or above (got m {m_range}, n {n_range})")));
    }
    let cells: Vec<C3Params> =
        (m_range.lo..=m_range.hi).flat_map(|m| (n_range.lo..=n_range.hi).map(move |n| C3Params { m, n })).collect();
    Ok(cells.par_iter().map(|&p| row(quantity, p, eig_tol)).collect::<Result<_, _>>()?)
}

pub fn write_rows<W: Write>(quantity: Quantity, rows: &[Vec<String>], out: W) -> Result<(), SweepError> {
    let mut w = csv::Writer::from_writer(out);
    match quantity {
        Quantity::Energy => w.write_record(ENERGY_HEADER)?,
        Quantity::Spectrum => w.write_record(SPECTRUM_HEADER)?,
    }
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_sweep<W: Write>(
    quantity: Quantity,
    family: Family,
    m_range: Range,
    n_range: Range,
    eig_tol: f64,
    out: W,
) -> Result<usize, SweepError> {
    let rows = sweep_rows(quantity, family, m_range, n_range, eig_tol)?;
    write_rows(quantity, &rows, out)?;
    Ok(rows.len())
}

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error("{0}")]
    Range(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
