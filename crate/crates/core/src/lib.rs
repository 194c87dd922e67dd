//! Finite hypermagmas and the categories of mosaics and hypergroups built
//! from them.
//!
//! Objects are small finite tables ([`Hypermagma`]); the library decides
//! axioms ([`axioms`]), enumerates hom-sets ([`hom`]), builds limits,
//! colimits and unitizations ([`univ`]), the three tensor-like products and
//! internal homs ([`monoidal`]), a zoo of examples and exhaustive searches
//! ([`zoo`]), and the mosaic of a pointed simple matroid ([`matroid`]).

// Index loops mirror the table notation of the underlying algebra.
#![allow(clippy::needless_range_loop)]

pub mod axioms;
pub mod error;
pub mod format;
pub mod hom;
pub mod magma;
pub mod matroid;
pub mod monoidal;
pub mod subset;
pub mod suite;
pub mod univ;
pub mod zoo;

pub use axioms::{analyze, AxiomReport, Classification};
pub use error::{Error, Result};
pub use hom::{CategoryTag, Morphism};
pub use magma::{find_isomorphism, Carrier, Hypermagma};
pub use subset::Subset;
