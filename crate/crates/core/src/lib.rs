//! Polynomial theta functions of cuspidal rational curves and the real,
//! regular KP1 lump solutions they produce.

pub mod algebra;
pub mod curves;
pub mod degeneration;
pub mod error;
pub mod fixtures;
pub mod groebner;
pub mod linalg;
pub mod tau;
pub mod theta;

pub use error::{Error, Result};
