//! Exact scalar arithmetic: Laurent polynomials in `q` and `Q`, the
//! rational function field `K = Q(q,Q)`, quantum integers, residues mod
//! `l`, and the cyclotomic specializations `q -> zeta_l`, `Q -> zeta_l^m`.
//!
//! All values are immutable after construction and safe to share across
//! threads.

mod cyclo;
mod field;
mod laurent;
mod ratfun;
mod residue;
pub(crate) mod upoly;

pub use cyclo::CycloNumber;
pub use field::{separation_ok, specialize, CoeffField, CycloField, GenericField, Scalar};
pub use laurent::LaurentPoly;
pub use ratfun::RationalFunction;
pub use residue::{seq_string, Residue, ResidueSeq};
