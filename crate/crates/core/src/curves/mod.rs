//! Singular rational curves: semigroups, charts, dualizing differentials.

pub mod basis;
pub mod differential;
pub mod semigroup;
pub mod spec;

pub use basis::{
    basis_from_override, bicuspidal_override, check_rosenlicht, cusp_differential_basis, curve_differential_basis,
    node_differential, BasisElement, BasisJson, CurveBasis,
};
pub use differential::{Chart, ChartPoint, Differential, DifferentialJson};
pub use semigroup::{weierstrass_partition, Partition, Semigroup};
pub use spec::{CurveSpec, Singularity};
