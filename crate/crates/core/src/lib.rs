//! Exact arithmetic for the Temperley-Lieb algebra `TL_n(q)` and the blob
//! algebra `b_n(m)`, realized as diagram algebras.
//!
//! The crate provides, over the generic field `K = Q(q,Q)` and over the
//! cyclotomic specializations `q -> zeta_l`, `Q -> zeta_l^m`:
//!
//! * planar diagram bases with exact structure constants,
//! * the tableau combinatorics indexing the cellular structures,
//! * Jucys-Murphy elements, their triangular action and the seminormal form,
//! * KLR idempotents `e(i)` with the homogeneous generators `y_r`, `psi_r`,
//! * the graded cellular basis `psi_{st}` together with verification
//!   routines that machine-check every defining relation.
//!
//! Everything is computed over exact coefficient fields; no floating point
//! is used anywhere.

pub mod algebra;
pub mod coeffs;
pub mod diagrams;
pub mod error;
pub mod graded;
pub mod jm;
pub mod klr;
pub mod report;
pub mod tabcomb;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
