//! Classical and quantum bounds on probability sums built from orbits of
//! the standard three-dimensional representation of S4.
//!
//! The math is generic over the scalar type; the aliases at the bottom fix
//! it to `f64`, which is what the checks and the CLI use.

pub mod bounds;
pub mod cg;
pub mod error;
pub mod linalg;
pub mod model;
pub mod permgroup;
pub mod reference;
pub mod rep3;
pub mod scalar;
pub mod scan;
pub mod verify;

pub use bounds::{
    classical_bound, cycle_decomposition, cycle_lower_bound, quantum_bound, sum_probabilities,
    BoundReport, ClassicalBound, CycleBound, CycleDecomposition, CycleVertex, OrbitSet,
};
pub use cg::{CgMatrix, Irrep, IrrepSpectrum, SpectrumRecord};
pub use error::{Error, Result};
pub use model::Model;
pub use permgroup::{ConjugacyClass, CosetCoord, GroupTable, Perm, Permutation};
pub use rep3::{OrbitBasis, Representation, WordOrder};
pub use scalar::Real;
pub use scan::{check_listed_pairs, scan_all, ListCheck, ScanReport};
pub use verify::{run_checks, Check};

pub type Vector3 = linalg::Vec3<f64>;
pub type Matrix3 = linalg::Mat3<f64>;
pub type Matrix9 = linalg::Mat9<f64>;
pub type Tensor9 = cg::Tensor9<f64>;
pub type S4Model = Model<f64>;
pub type Spectrum = IrrepSpectrum<f64>;
pub type Report = BoundReport<f64>;
