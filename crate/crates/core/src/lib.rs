//! Joint spectra of Lie algebras of complex matrices.
//!
//! ```
//! use liespectra::fixtures;
//! use liespectra::spectra::joint_spectrum;
//! use liespectra::weights::weight_table;
//! use liespectra::LieRep;
//!
//! let rep = LieRep::<f64>::with_default_tolerances(fixtures::heisenberg_3())?;
//! let spectrum = joint_spectrum(&rep)?;
//! let weights = weight_table(&rep)?;
//! assert!(spectrum.weights_match());
//! assert_eq!(weights.total_multiplicity(), rep.dim_e());
//! # Ok::<(), liespectra::Error>(())
//! ```

pub mod error;
pub mod fixtures;
pub mod koszul;
pub mod lie;
pub mod linalg;
pub mod module_ops;
pub mod report;
pub mod scalar;
pub mod spectra;
pub mod tolerance;
pub mod weights;

pub use error::{Error, Result};
pub use lie::{Character, CharacterSet, IdealFlag, LieRep};
pub use linalg::{Matrix, Subspace};
pub use scalar::Real;
pub use tolerance::ToleranceProfile;

pub type CScalar = num_complex::Complex<f64>;
pub type CMatrix = Matrix<f64>;
