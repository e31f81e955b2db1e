use std::fmt;

/// Element of `I = Z/lZ`, the residue set of the KLR presentation.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Residue {
    l: u64,
    v: u64,
}

impl Residue {
    pub fn new(l: u64, v: i64) -> Self {
        Residue { l, v: v.rem_euclid(l as i64) as u64 }
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn order(&self) -> u64 {
        self.l
    }

    pub fn add(self, k: i64) -> Self {
        Residue::new(self.l, self.v as i64 + k)
    }

    pub fn neg(self) -> Self {
        Residue::new(self.l, -(self.v as i64))
    }

    /// Cartan pairing of the cyclic quiver: `2` on the diagonal, `-1` for
    /// neighbours mod `l`, `0` otherwise.
    pub fn cartan(self, other: Residue) -> i64 {
        assert_eq!(self.l, other.l);
        if self == other {
            2
        } else if self == other.add(1) || self == other.add(-1) {
            -1
        } else {
            0
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

/// A length-`n` residue sequence.
pub type ResidueSeq = Vec<Residue>;

/// Compact display of a residue sequence, e.g. `(4,1,0)`.
pub fn seq_string(seq: &[Residue]) -> String {
    let inner: Vec<String> = seq.iter().map(|r| r.to_string()).collect();
    format!("({})", inner.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_values() {
        let l = 5;
        let r = |v| Residue::new(l, v);
        assert_eq!(r(2).cartan(r(2)), 2);
        assert_eq!(r(2).cartan(r(3)), -1);
        assert_eq!(r(2).cartan(r(1)), -1);
        assert_eq!(r(2).cartan(r(4)), 0);
        assert_eq!(r(0).cartan(r(4)), -1); // wrap-around
        // the Cartan value only depends on i - j mod l
        for i in 0..l as i64 {
            for j in 0..l as i64 {
                for s in 0..l as i64 {
                    assert_eq!(
                        Residue::new(l, i).cartan(Residue::new(l, j)),
                        Residue::new(l, i + s).cartan(Residue::new(l, j + s))
                    );
                }
            }
        }
    }

    #[test]
    fn l_three_neighbours() {
        let l = 3;
        let r = |v| Residue::new(l, v);
        // at l = 3 every distinct pair is adjacent
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 2 } else { -1 };
                assert_eq!(r(i).cartan(r(j)), expect);
            }
        }
    }
}
