//! Exact feasibility search for connected graphs whose spectrum is
//! `{s, 1, -t}`, together with the tools that eliminate the survivors and
//! certify concrete three-eigenvalue graphs.
//!
//! The arithmetic layers ([`arith`], [`surd`], [`graph`]) are generic over a
//! signed machine integer ([`Scalar`]); the search stages work on [`Int`].

pub mod arith;
pub mod cone;
pub mod error;
pub mod gold;
pub mod graph;
pub mod multiplicity;
pub mod pipeline;
pub mod refinement;
pub mod scalar;
pub mod spectral;
pub mod surd;
pub mod toggles;
pub mod valency;

pub use error::{Result, SearchError};
pub use scalar::Scalar;

/// Integer type of the search stages. Every intermediate of the full sweep
/// fits comfortably; overflow is checked, never wrapped.
pub type Int = i64;
pub type Rational = num_rational::Ratio<Int>;
pub type Class = arith::SqClass<Int>;
pub type Surd = surd::SurdSum<Int>;
pub type Eigenvalue = surd::AlgebraicEigenvalue<Int>;

pub use multiplicity::{Candidate, MultiplicityArray, Status};
pub use pipeline::SearchConfig;
pub use spectral::SpectralParams;
pub use toggles::Toggles;
pub use valency::ValencyArray;
