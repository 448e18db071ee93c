//! A workbench for finite commutative unital quantales.
//!
//! The crate builds and validates quantales, computes their m-prime and
//! maximal spectra, radicals, radical frames, Boolean centers and
//! reticulations, decides lifting and normality properties, and runs a
//! catalogue of equivalence checks over fixture corpora and exhaustively
//! enumerated small instances.

pub mod io;
pub mod lattice;
pub mod properties;
pub mod quantale;
pub mod reticulation;
pub mod suite;
pub mod verdict;

pub use lattice::{DistLattice, FiniteLattice, FinitePoset, LatticeError, LatticeIdeal, LatticeMorphism};
pub use quantale::{Quantale, QuantaleError, QuantaleMorphism};
pub use verdict::Verdict;
