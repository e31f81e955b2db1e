use std::fmt;

use crate::coeffs::ResidueSeq;
use crate::{Error, Result};

/// A two-column partition of `n`, recorded by its column lengths
/// `col1 >= col2` (so the partition itself is `(2^col2, 1^(col1-col2))`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TwoColShape {
    pub col1: usize,
    pub col2: usize,
}

impl TwoColShape {
    pub fn n(&self) -> usize {
        self.col1 + self.col2
    }

    /// Number of through lines of the corresponding diagrams.
    pub fn verticals(&self) -> usize {
        self.col1 - self.col2
    }

    pub fn all(n: usize) -> Vec<Self> {
        // from dominance-greatest (fewest verticals) to least
        let mut out = Vec::new();
        let mut c2 = n / 2;
        loop {
            out.push(TwoColShape { col1: n - c2, col2: c2 });
            if c2 == 0 {
                break;
            }
            c2 -= 1;
        }
        out
    }

    /// Dominance on two-column shapes of equal `n`: fewer verticals means
    /// strictly greater.
    pub fn geq(&self, other: &Self) -> bool {
        debug_assert_eq!(self.n(), other.n());
        self.verticals() <= other.verticals()
    }

    pub fn gt(&self, other: &Self) -> bool {
        self.geq(other) && self != other
    }
}

/// A standard two-column tableau: the set of entries in column 2, subject
/// to the ballot condition (every prefix holds at least as many column-1
/// entries as column-2 entries).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoColTableau {
    n: usize,
    col2: u32,
}

impl TwoColTableau {
    pub fn new(n: usize, col2_entries: &[usize]) -> Result<Self> {
        assert!(n <= 31);
        let mut mask = 0u32;
        for &k in col2_entries {
            if k == 0 || k > n {
                return Err(Error::IndexOutOfRange(format!("entry {k} not in 1..={n}")));
            }
            mask |= 1 << (k - 1);
        }
        let t = TwoColTableau { n, col2: mask };
        for j in 1..=n {
            if t.seq(j) < 0 {
                return Err(Error::InvalidParams(format!(
                    "column sets violate standardness at prefix {j}"
                )));
            }
        }
        Ok(t)
    }

    pub(crate) fn from_mask(n: usize, col2: u32) -> Self {
        let t = TwoColTableau { n, col2 };
        debug_assert!((1..=n).all(|j| t.seq(j) >= 0), "non-ballot mask");
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> TwoColShape {
        let c2 = self.col2.count_ones() as usize;
        TwoColShape { col1: self.n - c2, col2: c2 }
    }

    pub fn column_of(&self, k: usize) -> u8 {
        if self.col2 & (1 << (k - 1)) != 0 {
            2
        } else {
            1
        }
    }

    /// Row of entry `k` (1-based position within its column).
    pub fn row_of(&self, k: usize) -> usize {
        let col = self.column_of(k);
        (1..=k).filter(|&j| self.column_of(j) == col).count()
    }

    pub fn col2_entries(&self) -> Vec<usize> {
        (1..=self.n).filter(|&k| self.column_of(k) == 2).collect()
    }

    pub fn col1_entries(&self) -> Vec<usize> {
        (1..=self.n).filter(|&k| self.column_of(k) == 1).collect()
    }

    /// Nonnegative walk value after `j` entries.
    pub fn seq(&self, j: usize) -> i64 {
        let mask = if j == 0 { 0 } else { self.col2 & ((1u32 << j) - 1) };
        j as i64 - 2 * mask.count_ones() as i64
    }

    /// Dominance order on standard tableaux of the same shape, via the
    /// pointwise comparison of walk sequences.
    pub fn dom_geq(&self, other: &TwoColTableau) -> Result<bool> {
        if self.n != other.n || self.shape() != other.shape() {
            return Err(Error::ShapeMismatch("two-column tableaux".into()));
        }
        Ok((1..=self.n).all(|j| self.seq(j) <= other.seq(j)))
    }

    pub fn dom_gt(&self, other: &TwoColTableau) -> Result<bool> {
        Ok(self != other && self.dom_geq(other)?)
    }

    /// The dominance-greatest standard tableau of a shape (row filling).
    pub fn max_tableau(shape: TwoColShape) -> TwoColTableau {
        let mut col2 = 0u32;
        for i in 1..=shape.col2 {
            col2 |= 1 << (2 * i - 1); // entry 2i in column 2
        }
        TwoColTableau { n: shape.n(), col2 }
    }

    pub fn all_of_shape(shape: TwoColShape) -> Vec<TwoColTableau> {
        let n = shape.n();
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != shape.col2 {
                continue;
            }
            let t = TwoColTableau { n, col2: mask };
            if (1..=n).all(|j| t.seq(j) >= 0) {
                out.push(t);
            }
        }
        out
    }

    pub fn all_of_size(n: usize) -> Vec<TwoColTableau> {
        TwoColShape::all(n).into_iter().flat_map(Self::all_of_shape).collect()
    }

    pub fn apply_transposition(&self, k: usize) -> Option<TwoColTableau> {
        debug_assert!(k >= 1 && k < self.n);
        let b1 = self.col2 & (1 << (k - 1)) != 0;
        let b2 = self.col2 & (1 << k) != 0;
        if b1 == b2 {
            return None;
        }
        let mut mask = self.col2;
        mask ^= 1 << (k - 1);
        mask ^= 1 << k;
        let t = TwoColTableau { n: self.n, col2: mask };
        if (1..=self.n).all(|j| t.seq(j) >= 0) {
            Some(t)
        } else {
            None
        }
    }

    pub fn has_hook(&self, k: usize) -> bool {
        k >= 1 && k < self.n && self.seq(k - 1) == self.seq(k + 1)
    }

    /// Hook-shrinking reduced expression from the maximal tableau,
    /// smallest admissible index first.
    pub fn reduced_expression(&self) -> Vec<usize> {
        let mut current = Self::max_tableau(self.shape());
        let mut word = Vec::new();
        let mut guard = 0usize;
        while current != *self {
            guard += 1;
            assert!(guard <= self.n * self.n + 1, "reduced expression search stuck");
            let mut moved = false;
            for k in 1..self.n {
                if !current.has_hook(k) {
                    continue;
                }
                if let Some(next) = current.apply_transposition(k) {
                    if current.dom_gt(&next).unwrap() && next.dom_geq(self).unwrap() {
                        word.push(k);
                        current = next;
                        moved = true;
                        break;
                    }
                }
            }
            assert!(moved, "no admissible hook move toward the target");
        }
        word
    }

    pub fn all_reduced_expressions(&self) -> Vec<Vec<usize>> {
        fn go(
            current: &TwoColTableau,
            target: &TwoColTableau,
            acc: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if current == target {
                out.push(acc.clone());
                return;
            }
            for k in 1..current.n() {
                if !current.has_hook(k) {
                    continue;
                }
                if let Some(next) = current.apply_transposition(k) {
                    if current.dom_gt(&next).unwrap() && next.dom_geq(target).unwrap() {
                        acc.push(k);
                        go(&next, target, acc, out);
                        acc.pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        let mut acc = Vec::new();
        go(&Self::max_tableau(self.shape()), self, &mut acc, &mut out);
        out
    }

    /// Residue sequence: entry `k` in column `j`, row `i` has residue
    /// `j - i` mod `l`.
    pub fn residues(&self, l: u64) -> ResidueSeq {
        (1..=self.n)
            .map(|k| super::tl_node_residue(l, self.row_of(k), self.column_of(k) as usize))
            .collect()
    }

    /// Degree by the residue-swap walk; the maximal tableau has degree 0.
    pub fn degree(&self, l: u64) -> i64 {
        let start = Self::max_tableau(self.shape()).residues(l);
        super::degree_from_walk(start, &self.reduced_expression())
    }
}

impl fmt::Display for TwoColTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c1: Vec<String> = self.col1_entries().iter().map(|k| k.to_string()).collect();
        let c2: Vec<String> = self.col2_entries().iter().map(|k| k.to_string()).collect();
        write!(f, "[{};{}]", c1.join(" "), c2.join(" "))
    }
}

impl fmt::Debug for TwoColTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tabcomb::Bitableau;

    #[test]
    fn counts_are_ballot_numbers() {
        // total number of standard two-column tableaux of size n is C(n, floor(n/2))
        let counts: Vec<usize> = (0..=6).map(|n| TwoColTableau::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 6, 10, 20]);
    }

    #[test]
    fn tl3_tableaux() {
        // shape (2,1): exactly two standard tableaux
        let shape = TwoColShape { col1: 2, col2: 1 };
        let all = TwoColTableau::all_of_shape(shape);
        assert_eq!(all.len(), 2);
        let s = TwoColTableau::new(3, &[2]).unwrap();
        let t = TwoColTableau::new(3, &[3]).unwrap();
        assert!(all.contains(&s) && all.contains(&t));
        assert_eq!(TwoColTableau::max_tableau(shape), s);
        assert!(s.dom_gt(&t).unwrap());
        // residues at l = 3
        let rs = |x: &TwoColTableau| -> Vec<u64> { x.residues(3).iter().map(|r| r.value()).collect() };
        assert_eq!(rs(&s), vec![0, 1, 2]);
        assert_eq!(rs(&t), vec![0, 2, 1]);
        let tl = TwoColTableau::new(3, &[]).unwrap(); // column tableau of (1,1,1)
        assert_eq!(rs(&tl), vec![0, 2, 1]);
        // degrees at l = 3
        assert_eq!(s.degree(3), 0);
        assert_eq!(t.degree(3), 1);
        assert_eq!(tl.degree(3), 0);
    }

    #[test]
    fn order_tilde_compatibility() {
        // s >= t implies tilde(s) dominates tilde(t); exhaustive n <= 5
        for n in 0..=5 {
            for s in Bitableau::all_of_size(n) {
                for t in Bitableau::all_of_size(n) {
                    if s.shape() != t.shape() {
                        continue;
                    }
                    if s.order_geq(&t).unwrap() {
                        assert!(s.tilde().dom_geq(&t.tilde()).unwrap(), "{s} vs {t}");
                    }
                    // conversely dom_geq is exactly the abs-value comparison
                    let absle = (1..=n).all(|j| s.seq(j).abs() <= t.seq(j).abs());
                    assert_eq!(s.tilde().dom_geq(&t.tilde()).unwrap(), absle);
                }
            }
        }
    }

    #[test]
    fn hook_move_covering() {
        // if s > t, s_k s = t, s !~ t then s_k tilde(s) = tilde(t) and
        // tilde(s) strictly dominates tilde(t); exhaustive n <= 5
        for n in 2..=5 {
            for s in Bitableau::all_of_size(n) {
                for k in 1..n {
                    if let Some(t) = s.apply_transposition(k) {
                        if s.order_gt(&t).unwrap_or(false) && !s.tilde_equivalent(&t) {
                            let ts = s.tilde();
                            let tt = t.tilde();
                            assert_eq!(ts.apply_transposition(k), Some(tt));
                            assert!(ts.dom_gt(&tt).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn reduced_expressions_reproduce() {
        for n in 0..=6 {
            for t in TwoColTableau::all_of_size(n) {
                let word = t.reduced_expression();
                let mut cur = TwoColTableau::max_tableau(t.shape());
                for k in &word {
                    cur = cur.apply_transposition(*k).unwrap();
                }
                assert_eq!(cur, t);
            }
        }
    }
}
