use serde::{Deserialize, Serialize};

use crate::grid::{GridSlice, GridSpec};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Maximum {
    pub x: f64,
    pub y: f64,
    pub height: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LumpReport {
    pub t: f64,
    pub count: usize,
    pub floor: f64,
    pub maxima: Vec<Maximum>,
}

pub const DEFAULT_FLOOR_FRACTION: f64 = 0.1;

/// Interior samples strictly above all 8 neighbours and above `floor`
/// (default: 10% of the slice maximum), sorted by height.
pub fn detect_lumps(s: &GridSlice, g: &GridSpec, floor: Option<f64>) -> LumpReport {
    let at = |i: usize, j: usize| s.values[j * s.nx + i];
    let top = s.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let floor = floor.unwrap_or(DEFAULT_FLOOR_FRACTION * top);
    let mut maxima = Vec::new();
    for j in 1..s.ny - 1 {
        for i in 1..s.nx - 1 {
            let v = at(i, j);
            if v <= floor {
                continue;
            }
            let strict = (-1i64..=1)
                .flat_map(|dj| (-1i64..=1).map(move |di| (di, dj)))
                .filter(|&d| d != (0, 0))
                .all(|(di, dj)| v > at((i as i64 + di) as usize, (j as i64 + dj) as usize));
            if strict {
                maxima.push(Maximum { x: g.x(i), y: g.y(j), height: v });
            }
        }
    }
    maxima.sort_by(|a, b| b.height.total_cmp(&a.height));
    LumpReport { t: s.t, count: maxima.len(), floor, maxima }
}
