//! Combinatorics and K-type spectra of classical nilpotent orbit closures.
//!
//! The crate computes, for nilpotent orbits of symplectic and orthogonal
//! groups given by column sizes:
//!
//! * the Norm set generated by fundamental degenerations ([`degeneration`]);
//! * the candidate composition-factor parameters of the orbit-closure model
//!   and their distinguished characters ([`parameters`]);
//! * diminutive K-type multiplicity tables via generating functions, with
//!   executable checks of the column-lemma and degeneration-sum identities
//!   and a normality detector ([`kmult`]);
//! * full K-type multiplicities through symmetrized character formulas,
//!   assembled from shipped unipotent fixtures ([`charformula`]), evaluated
//!   with an exact Freudenthal weight-multiplicity engine ([`liecore`]).

pub mod charformula;
pub mod degeneration;
pub mod error;
pub mod kmult;
pub mod liecore;
pub mod orbits;
pub mod parameters;

pub use error::{Error, Result};
