//! Ephemeris and mean-element files.

use std::io::{Read, Write};

use brouwer::propagator::MeanState;
use brouwer::CartesianState;

use crate::error::{CliError, Result};

pub const EPHEMERIS_HEADER: [&str; 7] = ["t", "x", "y", "z", "X", "Y", "Z"];
pub const MEAN_HEADER: [&str; 9] = ["t", "L", "G", "H", "lambda", "ex", "ey", "ix", "iy"];

/// Seventeen significant digits, enough to restore the double exactly.
pub fn format_value(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EphemerisRow {
    pub t: f64,
    pub state: CartesianState,
}

impl EphemerisRow {
    fn values(&self) -> [f64; 7] {
        let [x, y, z] = self.state.position;
        let [vx, vy, vz] = self.state.velocity;
        [self.t, x, y, z, vx, vy, vz]
    }
}

pub fn write_ephemeris<W: Write>(out: W, rows: &[EphemerisRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(EPHEMERIS_HEADER)?;
    for row in rows {
        w.write_record(row.values().map(format_value))?;
    }
    w.flush().map_err(|source| CliError::Io {
        path: "ephemeris".into(),
        source,
    })?;
    Ok(())
}

pub fn read_ephemeris<R: Read>(input: R) -> Result<Vec<EphemerisRow>> {
    let mut r = csv::Reader::from_reader(input);
    let header = r.headers()?.clone();
    if header.iter().ne(EPHEMERIS_HEADER) {
        return Err(CliError::Row {
            row: 0,
            reason: format!("header must be {}", EPHEMERIS_HEADER.join(",")),
        });
    }
    r.records()
        .enumerate()
        .map(|(k, rec)| {
            let rec = rec?;
            let row = k + 1;
            let v: Vec<f64> = rec
                .iter()
                .map(|f| {
                    f.trim().parse::<f64>().map_err(|e| CliError::Row {
                        row,
                        reason: format!("`{f}`: {e}"),
                    })
                })
                .collect::<Result<_>>()?;
            if v.len() != 7 {
                return Err(CliError::Row {
                    row,
                    reason: format!("expected 7 fields, found {}", v.len()),
                });
            }
            Ok(EphemerisRow {
                t: v[0],
                state: CartesianState::new([v[1], v[2], v[3]], [v[4], v[5], v[6]]),
            })
        })
        .collect()
}

pub fn write_mean_elements<W: Write>(out: W, rows: &[MeanState]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(MEAN_HEADER)?;
    for m in rows {
        let e = &m.elements;
        let [ex, ey] = e.eccentricity_vector;
        let [ix, iy] = e.inclination_vector;
        let values = [m.epoch, e.big_l, e.big_g, e.big_h, e.lambda, ex, ey, ix, iy];
        w.write_record(values.map(format_value))?;
    }
    w.flush().map_err(|source| CliError::Io {
        path: "mean elements".into(),
        source,
    })?;
    Ok(())
}
