use std::fmt;

use super::bitableau::Bitableau;
use crate::{Error, Result};

/// A walk on the Bratteli diagram: the lattice path `(k, t(k))` of a
/// standard bitableau, together with its inward/outward sign sequence.
/// Sign `+` moves away from the central axis, `-` moves toward it (or
/// starts a decorated line from the axis).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Walk {
    values: Vec<i64>, // t(0..=n)
}

impl Walk {
    pub fn of(t: &Bitableau) -> Walk {
        Walk { values: t.seq_vec() }
    }

    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn value(&self, k: usize) -> i64 {
        self.values[k]
    }

    /// Sign at step `k` (1-based): `+` when the step leaves the axis or
    /// increases the distance to it, `-` otherwise.
    pub fn sign(&self, k: usize) -> char {
        let p = self.values[k - 1];
        let c = self.values[k];
        let outward = if p == 0 { c > 0 } else { c.abs() > p.abs() };
        if outward {
            '+'
        } else {
            '-'
        }
    }

    pub fn sign_string(&self) -> String {
        (1..=self.n()).map(|k| self.sign(k)).collect()
    }

    /// Rebuild the walk (hence the bitableau) from a sign string; the
    /// inverse of `sign_string`.
    pub fn from_signs(signs: &str) -> Result<Walk> {
        let mut values = vec![0i64];
        for (i, ch) in signs.chars().enumerate() {
            let p = *values.last().unwrap();
            let v = match (ch, p.signum()) {
                ('+', 0) => 1,
                ('-', 0) => -1,
                ('+', 1) => p + 1,
                ('-', 1) => p - 1,
                ('+', -1) => p - 1,
                ('-', -1) => p + 1,
                _ => {
                    return Err(Error::InvalidParams(format!(
                        "bad sign character at position {i}"
                    )))
                }
            };
            values.push(v);
        }
        Ok(Walk { values })
    }

    pub fn to_bitableau(&self) -> Bitableau {
        let n = self.n();
        let comp2: Vec<usize> = (1..=n)
            .filter(|&k| self.values[k] == self.values[k - 1] - 1)
            .collect();
        Bitableau::new(n, &comp2).unwrap()
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sign_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tabcomb::OneLineBipartition;

    #[test]
    fn walk_bijection_roundtrip() {
        // Bitableau -> Walk -> Bitableau is the identity for all n <= 6
        for n in 0..=6 {
            for t in Bitableau::all_of_size(n) {
                let w = Walk::of(&t);
                assert_eq!(w.to_bitableau(), t);
                let w2 = Walk::from_signs(&w.sign_string()).unwrap();
                assert_eq!(w2, w);
            }
        }
    }

    #[test]
    fn pascal_walk_counts() {
        // the number of walks ending at (n, f) equals C(n, b)
        for n in 0..=8usize {
            use std::collections::HashMap;
            let mut ends: HashMap<i64, u64> = HashMap::new();
            for t in Bitableau::all_of_size(n) {
                *ends.entry(t.seq(n)).or_insert(0) += 1;
            }
            for shape in OneLineBipartition::all(n) {
                let mut c = 1u64;
                for i in 0..shape.b {
                    c = c * (n as u64 - i as u64) / (i as u64 + 1);
                }
                assert_eq!(ends.get(&shape.f()).copied().unwrap_or(0), c);
            }
        }
    }

    #[test]
    fn max_tableau_sign_pattern() {
        // ((6),(2)): zigzag twice (four inward signs) then outward
        let t = Bitableau::max_tableau(OneLineBipartition { a: 6, b: 2 });
        assert_eq!(Walk::of(&t).sign_string(), "----++++");
        // ((2),(6)): zigzag twice, one more inward start, then outward
        let t = Bitableau::max_tableau(OneLineBipartition { a: 2, b: 6 });
        assert_eq!(Walk::of(&t).sign_string(), "-----+++");
    }
}
