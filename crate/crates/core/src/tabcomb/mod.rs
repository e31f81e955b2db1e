//! Combinatorics of one-line bipartitions, standard bitableaux, two-column
//! tableaux, the Bratteli-walk order, hook moves, reduced expressions,
//! contents, residues and degrees.

mod bitableau;
mod twocol;
mod walk;

pub use bitableau::{Bitableau, OneLineBipartition};
pub use twocol::{TwoColShape, TwoColTableau};
pub use walk::Walk;

use crate::coeffs::{CoeffField, Residue, ResidueSeq};

/// `k0` with `2 k0 = m (mod l)` — the first-entry residue parameter.
pub fn k0(l: u64, m: i64) -> i64 {
    (m.rem_euclid(l as i64) * ((l as i64 + 1) / 2)).rem_euclid(l as i64)
}

/// Degree walk shared by the blob and Temperley-Lieb tableaux: starting
/// from the residue sequence of the maximal tableau, each transposition of
/// the reduced expression contributes `-a_{i_k, i_{k+1}}` read off the
/// current sequence, which is then updated by the swap.
pub(crate) fn degree_from_walk(start: ResidueSeq, applied: &[usize]) -> i64 {
    let mut seq = start;
    let mut deg = 0i64;
    for &k in applied {
        // positions k, k+1 (1-based)
        let a = seq[k - 1];
        let b = seq[k];
        deg -= a.cartan(b);
        seq.swap(k - 1, k);
    }
    deg
}

/// Residue of the blob node `(1, c, d)`: `k0 + (c-1)` in the first
/// component, `-k0 + (c-1)` in the second, mod `l`.
pub fn blob_node_residue(l: u64, m: i64, c: usize, comp: u8) -> Residue {
    let k0 = k0(l, m);
    let c = c as i64;
    match comp {
        1 => Residue::new(l, k0 + (c - 1)),
        2 => Residue::new(l, -k0 + (c - 1)),
        _ => unreachable!("component is 1 or 2"),
    }
}

/// Residue of the two-column node `(row i, col j)`: `j - i` mod `l`.
pub fn tl_node_residue(l: u64, row: usize, col: usize) -> Residue {
    Residue::new(l, col as i64 - row as i64)
}

/// Generic content of the blob node `(1, c, d)`: `q^{2(c-1)} Q^{+-1}`.
pub fn blob_node_content<F: CoeffField>(field: &F, c: usize, comp: u8) -> F::Elem {
    let e = 2 * (c as i64 - 1);
    match comp {
        1 => field.qq(e, 1),
        2 => field.qq(e, -1),
        _ => unreachable!(),
    }
}
