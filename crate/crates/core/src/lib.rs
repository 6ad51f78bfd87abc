//! Shannon entropies of atomic structure factors.
//!
//! The structure factor `F(k)` is the spherically averaged Fourier transform
//! of the charge density and the reciprocal form factor `B(s)` that of the
//! momentum density. This crate evaluates both, and their two-electron
//! analogues, for hydrogenic atoms, the 1D harmonic oscillator and a
//! split-shell model of the helium isoelectronic series, then computes their
//! Shannon entropies, information distances and correlation measures.
//!
//! Everything is generic over the scalar type; the aliases below fix `f64`.
//!
//! ```
//! use offdiag_core::{entropy::EntropyOptions, Hydrogenic, Model, Report};
//!
//! let model: Model = Hydrogenic::new(1.0).unwrap().into();
//! let report = Report::compute(&model, &EntropyOptions::default()).unwrap();
//! assert!((report.sum_fb().value - 16.4818684172).abs() < 1e-8);
//! ```

pub mod distribution;
pub mod entropy;
pub mod error;
pub mod factors;
pub mod models;
pub mod quadrature;
pub mod scalar;
pub mod variational;
pub mod verify;

pub use error::{Error, Result};

pub type Hydrogenic = models::HydrogenicAtom<f64>;
pub type Oscillator = models::HarmonicOscillator1D<f64>;
pub type SplitShell = models::SplitShellModel<f64>;
pub type Model = models::AtomicModel<f64>;
pub type Spec = quadrature::QuadratureSpec<f64>;
pub type Factor1D = factors::StructureFactor1D<f64>;
pub type Factor2D = factors::StructureFactor2D<f64>;
pub type Report = entropy::EntropyReport<f64>;
pub type Energy = variational::EnergyBreakdown<f64>;
pub type Optimum = variational::OptimizationResult<f64>;
