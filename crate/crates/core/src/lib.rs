//! Exact toughness, spectra and connectivity for regular graph families.
//!
//! The crate builds the classical strongly regular families (lattice,
//! triangular, Kneser, generalized-quadrangle complements) together with a
//! few extremal constructions, and provides
//!
//! * a dense Jacobi eigensolver with spectrum grouping and strongly regular
//!   parameter checks ([`spectral`]),
//! * max-flow vertex/edge connectivity and branch-and-bound independence
//!   numbers ([`connectivity`]),
//! * an exact toughness solver with certificates and minimizer enumeration,
//!   plus the known spectral lower bounds ([`toughness`]),
//! * a verification suite that checks the closed-form toughness values of
//!   every family against the solver ([`verify`]).

mod bitset;
pub mod connectivity;
mod error;
pub mod families;
pub mod family_spec;
pub mod gq;
mod graph;
mod rational;
pub mod spectral;
pub mod toughness;
pub mod verify;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{isomorphic_small, Graph};
pub use rational::Rational;
