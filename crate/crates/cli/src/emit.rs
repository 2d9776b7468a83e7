use std::io::Write;

use crate::error::{CliError, Result};
use crate::grid::{GridSlice, GridSpec};

/// `x,y,u` rows, row-major in `y`, with a header.
pub fn write_csv<W: Write>(w: W, s: &GridSlice, g: &GridSpec) -> Result<()> {
    if s.values.is_empty() {
        return Err(CliError::EmptyGrid("slice has no samples".into()));
    }
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["x", "y", "u"])?;
    for j in 0..s.ny {
        for i in 0..s.nx {
            out.serialize((g.x(i), g.y(j), s.values[j * s.nx + i]))?;
        }
    }
    out.flush()?;
    Ok(())
}

pub fn write_json<W: Write, T: serde::Serialize>(w: W, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(w, value)?;
    Ok(())
}
