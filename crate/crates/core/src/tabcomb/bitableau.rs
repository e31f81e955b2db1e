use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coeffs::{CoeffField, ResidueSeq};
use crate::{Error, Result};

use super::twocol::TwoColTableau;

/// A one-line bipartition `((a),(b))` of `n = a + b`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct OneLineBipartition {
    pub a: usize,
    pub b: usize,
}

impl OneLineBipartition {
    pub fn n(&self) -> usize {
        self.a + self.b
    }

    /// `f(lambda) = a - b`, the coordinate on the Bratteli axis.
    pub fn f(&self) -> i64 {
        self.a as i64 - self.b as i64
    }

    pub fn from_f(n: usize, f: i64) -> Result<Self> {
        let ni = n as i64;
        if f.abs() > ni || (ni - f) % 2 != 0 {
            return Err(Error::InvalidParams(format!("f = {f} not in Lambda_{n}")));
        }
        Ok(OneLineBipartition { a: ((ni + f) / 2) as usize, b: ((ni - f) / 2) as usize })
    }

    /// All shapes of `n`, listed from `Lambda`-greatest to least.
    pub fn all(n: usize) -> Vec<Self> {
        let mut fs: Vec<i64> = (0..=n as i64)
            .flat_map(|k| if k == 0 { vec![0] } else { vec![-k, k] })
            .filter(|f| (n as i64 - f) % 2 == 0 && f.abs() <= n as i64)
            .collect();
        fs.dedup();
        fs.iter().map(|&f| Self::from_f(n, f).unwrap()).collect()
    }

    /// Total order on `Lambda_n`: greater means strictly closer to the
    /// central axis, ties broken toward the negative side.
    pub fn lambda_geq(x: i64, y: i64) -> bool {
        x.abs() < y.abs() || (x.abs() == y.abs() && x <= y)
    }

    pub fn geq(&self, other: &Self) -> bool {
        Self::lambda_geq(self.f(), other.f())
    }

    pub fn gt(&self, other: &Self) -> bool {
        self.geq(other) && self != other
    }
}

/// A standard bitableau of a one-line bipartition: entries `1..=n`, each
/// placed in component 1 or 2, increasing along each row. Any subset
/// assignment is standard, so the type is just `n` plus the set of entries
/// lying in the second component.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bitableau {
    n: usize,
    comp2: u32,
}

impl Bitableau {
    pub fn new(n: usize, comp2_entries: &[usize]) -> Result<Self> {
        assert!(n <= 31, "n too large for the mask representation");
        let mut mask = 0u32;
        for &k in comp2_entries {
            if k == 0 || k > n {
                return Err(Error::IndexOutOfRange(format!("entry {k} not in 1..={n}")));
            }
            mask |= 1 << (k - 1);
        }
        Ok(Bitableau { n, comp2: mask })
    }

    pub fn n(&self) -> usize {
        self.a + self.b
    }

    /// `f(lambda) = a - b`, the coordinate on the Bratteli axis.
    pub fn f(&self) -> i64 {
        self.a as i64 - self.b as i64
    }

    pub fn from_f(n: usize, f: i64) -> Result<Self> {
        let ni = n as i64;
        if f.abs() > ni || (ni - f) % 2 != 0 {
            return Err(Error::InvalidParams(format!("f = {f} not in Lambda_{n}")));
        }
        Ok(OneLineBipartition { a: ((ni + f) / 2) as usize, b: ((ni - f) / 2) as usize })
    }

    /// All shapes of `n`, listed from `Lambda`-greatest to least.
    pub fn all(n: usize) -> Vec<Self> {
        let mut fs: Vec<i64> = (0..=n as i64)
            .flat_map(|k| if k == 0 { vec![0] } else { vec![-k, k] })
            .filter(|f| (n as i64 - f) % 2 == 0 && f.abs() <= n as i64)
            .collect();
        fs.dedup();
        fs.iter().map(|&f| Self::from_f(n, f).unwrap()).collect()
    }

    /// Total order on `Lambda_n`: greater means strictly closer to the
    /// central axis, ties broken toward the negative side.
    pub fn lambda_geq(x: i64, y: i64) -> bool {
        x.abs() < y.abs() || (x.abs() == y.abs() && x <= y)
    }

    pub fn geq(&self, other: &Self) -> bool {
        Self::lambda_geq(self.f(), other.f())
    }

    pub fn gt(&self, other: &Self) -> bool {
        self.geq(other) && self != other
    }
}

/// A standard bitableau of a one-line bipartition: entries `1..=n`, each
/// placed in component 1 or 2, increasing along each row. Any subset
/// assignment is standard, so the type is just `n` plus the set of entries
/// lying in the second component.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bitableau {
    n: usize,
    comp2: u32,
}

impl Bitableau {
    pub fn new(n: usize, comp2_entries: &[usize]) -> Result<Self> {
        assert!(n <= 31, "n too large for the mask representation");
        let mut mask = 0u32;
        for &k in comp2_entries {
            if k == 0 || k > n {
                return Err(Error::IndexOutOfRange(format!("entry {k} not in 1..={n}")));
            }
            mask |= 1 << (k - 1);
        }
        Ok(Bitableau { n, comp2: mask })
    }

    pub(crate) fn from_mask(n: usize, comp2: u32) -> Self {
        debug_assert!(comp2 < (1u32 << n));
        Bitableau { n, comp2 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> OneLineBipartition {
        let b = self.comp2.count_ones() as usize;
        OneLineBipartition { a: self.n - b, b }
    }

    pub fn component_of(&self, k: usize) -> u8 {
        debug_assert!(k >= 1 && k <= self.n);
        if self.comp2 & (1 << (k - 1)) != 0 {
            2
        } else {
            1
        }
    }

    /// Position (1-based column) of entry `k` within its component.
    pub fn position_of(&self, k: usize) -> usize {
        let comp = self.component_of(k);
        (1..=k).filter(|&j| self.component_of(j) == comp).count()
    }

    pub fn entries_of_component(&self, comp: u8) -> Vec<usize> {
        (1..=self.n).filter(|&k| self.component_of(k) == comp).collect()
    }

    /// The integer sequence `t(0) = 0`, `t(j) = t(j-1) +- 1` with `+` when
    /// `j` lies in the first component.
    pub fn seq(&self, j: usize) -> i64 {
        debug_assert!(j <= self.n);
        let mask = if j == 0 { 0 } else { self.comp2 & ((1u32 << j) - 1) };
        j as i64 - 2 * mask.count_ones() as i64
    }

    pub fn seq_vec(&self) -> Vec<i64> {
        (0..=self.n).map(|j| self.seq(j)).collect()
    }

    /// The Bratteli-walk order: `self >= other` iff `|self(j)| <= |other(j)|`
    /// for all `j`, with `self(j) <= other(j)` whenever the absolute values
    /// agree. Requires equal shapes.
    pub fn order_geq(&self, other: &Bitableau) -> Result<bool> {
        if self.n != other.n || self.shape() != other.shape() {
            return Err(Error::ShapeMismatch(format!(
                "comparing {self} and {other}"
            )));
        }
        for j in 1..=self.n {
            let s = self.seq(j);
            let t = other.seq(j);
            if s.abs() > t.abs() || (s.abs() == t.abs() && s > t) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn order_gt(&self, other: &Bitableau) -> Result<bool> {
        Ok(self != other && self.order_geq(other)?)
    }

    /// The `>=`-maximal standard bitableau of a shape: even numbers up to
    /// `2*min(a,b)` in the first component, odd numbers below `2*min(a,b)`
    /// in the second, the rest filling the remaining boxes.
    pub fn max_tableau(shape: OneLineBipartition) -> Bitableau {
        let n = shape.n();
        let m = shape.a.min(shape.b);
        let mut comp2 = 0u32;
        for k in 1..=n {
            let in2 = if k <= 2 * m {
                k % 2 == 1
            } else {
                // remaining boxes: second component only when b > a
                shape.b > shape.a
            };
            if in2 {
                comp2 |= 1 << (k - 1);
            }
        }
        Bitableau { n, comp2 }
    }

    /// All standard bitableaux of the shape.
    pub fn all_of_shape(shape: OneLineBipartition) -> Vec<Bitableau> {
        let n = shape.n();
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize == shape.b {
                out.push(Bitableau { n, comp2: mask });
            }
        }
        out
    }

    /// All standard bitableaux of all shapes of `n`.
    pub fn all_of_size(n: usize) -> Vec<Bitableau> {
        (0u32..(1 << n)).map(|mask| Bitableau { n, comp2: mask }).collect()
    }

    /// Apply the simple transposition `s_k = (k, k+1)`; `None` if the
    /// result is not standard (both entries in the same component).
    pub fn apply_transposition(&self, k: usize) -> Option<Bitableau> {
        debug_assert!(k >= 1 && k < self.n);
        let b1 = self.comp2 & (1 << (k - 1)) != 0;
        let b2 = self.comp2 & (1 << k) != 0;
        if b1 == b2 {
            return None;
        }
        let mut mask = self.comp2;
        mask ^= 1 << (k - 1);
        mask ^= 1 << k;
        Some(Bitableau { n: self.n, comp2: mask })
    }

    /// `self` has a hook at position `k` iff `t(k-1) = t(k+1)`.
    pub fn has_hook(&self, k: usize) -> bool {
        k >= 1 && k < self.n && self.seq(k - 1) == self.seq(k + 1)
    }

    /// `self ~ other`: equal absolute walk sequences.
    pub fn tilde_equivalent(&self, other: &Bitableau) -> bool {
        self.n == other.n && (1..=self.n).all(|j| self.seq(j).abs() == other.seq(j).abs())
    }

    /// The two-column tableau underlying this bitableau: `k` goes to the
    /// second column exactly when `|t(k)| < |t(k-1)|`.
    pub fn tilde(&self) -> TwoColTableau {
        let mut col2 = 0u32;
        for k in 1..=self.n {
            if self.seq(k).abs() < self.seq(k - 1).abs() {
                col2 |= 1 << (k - 1);
            }
        }
        TwoColTableau::from_mask(self.n, col2)
    }

    /// Hook-shrinking reduced expression: the list of transposition indices
    /// which, applied in order to the maximal tableau of the shape, yield
    /// `self`, strictly descending in the order at every step. Among the
    /// admissible moves the smallest position is chosen, making the output
    /// deterministic.
    pub fn reduced_expression(&self) -> Vec<usize> {
        let shape = self.shape();
        let mut current = Self::max_tableau(shape);
        let mut word = Vec::new();
        let mut guard = 0usize;
        while current != *self {
            guard += 1;
            assert!(
                guard <= self.n * self.n + 1,
                "reduced expression search did not terminate"
            );
            let mut moved = false;
            for k in 1..self.n {
                if !current.has_hook(k) {
                    continue;
                }
                if let Some(next) = current.apply_transposition(k) {
                    if current.order_gt(&next).unwrap() && next.order_geq(self).unwrap() {
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

    /// All hook-shrinking expressions from the maximal tableau to `self`
    /// (used to verify independence of the graded basis from this choice).
    pub fn all_reduced_expressions(&self) -> Vec<Vec<usize>> {
        fn go(current: &Bitableau, target: &Bitableau, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if current == target {
                out.push(acc.clone());
                return;
            }
            for k in 1..current.n() {
                if !current.has_hook(k) {
                    continue;
                }
                if let Some(next) = current.apply_transposition(k) {
                    if current.order_gt(&next).unwrap() && next.order_geq(target).unwrap() {
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

    /// Generic content of entry `k`: `q^{2(c-1)} Q` in the first component,
    /// `q^{2(c-1)} Q^{-1}` in the second, where `c` is the column.
    pub fn content<F: CoeffField>(&self, field: &F, k: usize) -> F::Elem {
        super::blob_node_content(field, self.position_of(k), self.component_of(k))
    }

    /// Residue sequence at parameters `(l, m)`.
    pub fn residues(&self, l: u64, m: i64) -> ResidueSeq {
        (1..=self.n)
            .map(|k| super::blob_node_residue(l, m, self.position_of(k), self.component_of(k)))
            .collect()
    }

    /// Homogeneous degree of the cellular-basis column labelled by `self`,
    /// computed by the residue-swap walk along the reduced expression.
    /// The maximal tableau has degree 0.
    pub fn degree(&self, l: u64, m: i64) -> i64 {
        let start = Self::max_tableau(self.shape()).residues(l, m);
        super::degree_from_walk(start, &self.reduced_expression())
    }

    /// Serialize as `[[entries of comp 1],[entries of comp 2]]`.
    pub fn to_lists(&self) -> (Vec<usize>, Vec<usize>) {
        (self.entries_of_component(1), self.entries_of_component(2))
    }
}

impl fmt::Display for Bitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (c1, c2) = self.to_lists();
        let s1: Vec<String> = c1.iter().map(|k| k.to_string()).collect();
        let s2: Vec<String> = c2.iter().map(|k| k.to_string()).collect();
        write!(f, "({}|{})", s1.join(" "), s2.join(" "))
    }
}

impl fmt::Debug for Bitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bt(n: usize, comp2: &[usize]) -> Bitableau {
        Bitableau::new(n, comp2).unwrap()
    }

    #[test]
    fn order_example() {
        // shape ((6),(3)): s = (2 4 5 6 8 9 | 1 3 7) dominates
        // t = (1 4 5 6 7 9 | 2 3 8)
        let s = bt(9, &[1, 3, 7]);
        let t = bt(9, &[2, 3, 8]);
        assert!(s.order_geq(&t).unwrap());
        assert!(!t.order_geq(&s).unwrap());
        // reflexivity
        assert!(t.order_geq(&t).unwrap());
    }

    #[test]
    fn order_rejects_shape_mismatch() {
        let s = bt(3, &[1]);
        let t = bt(3, &[1, 2]);
        assert!(s.order_geq(&t).is_err());
    }

    #[test]
    fn max_tableau_values() {
        // ((1),(2)) -> (2 | 1 3)
        assert_eq!(Bitableau::max_tableau(OneLineBipartition { a: 1, b: 2 }), bt(3, &[1, 3]));
        // ((3),(0)) -> (1 2 3 | )
        assert_eq!(Bitableau::max_tableau(OneLineBipartition { a: 3, b: 0 }), bt(3, &[]));
        // ((2),(1)) -> (2 3 | 1)
        assert_eq!(Bitableau::max_tableau(OneLineBipartition { a: 2, b: 1 }), bt(3, &[1]));
    }

    #[test]
    fn max_tableau_is_maximum() {
        // brute force over every shape with n <= 6
        for n in 0..=6 {
            for shape in OneLineBipartition::all(n) {
                let max = Bitableau::max_tableau(shape);
                for t in Bitableau::all_of_shape(shape) {
                    assert!(max.order_geq(&t).unwrap(), "{max} vs {t}");
                }
            }
        }
    }

    #[test]
    fn max_tableau_walk_sign_pattern() {
        // ((6),(2)): the walk zigzags twice then moves outward
        let shape = OneLineBipartition { a: 6, b: 2 };
        let t = Bitableau::max_tableau(shape);
        assert_eq!(t.seq_vec(), vec![0, -1, 0, -1, 0, 1, 2, 3, 4]);
    }

    #[test]
    fn sequence_invariants() {
        for t in Bitableau::all_of_size(5) {
            assert_eq!(t.seq(0), 0);
            for j in 1..=5 {
                assert_eq!((t.seq(j) - t.seq(j - 1)).abs(), 1);
            }
            assert_eq!(t.seq(5), t.shape().f());
        }
    }

    #[test]
    fn reduced_expression_paper_example() {
        // shape ((4),(2)), t = (1 2 3 6 | 4 5): applied order [1,3,2,4,3]
        let t = bt(6, &[4, 5]);
        assert_eq!(t.reduced_expression(), vec![1, 3, 2, 4, 3]);
        // the chain visits exactly the six displayed bitableaux
        let chain: Vec<Bitableau> = {
            let mut cur = Bitableau::max_tableau(t.shape());
            let mut v = vec![cur];
            for k in t.reduced_expression() {
                cur = cur.apply_transposition(k).unwrap();
                v.push(cur);
            }
            v
        };
        let expected = [
            bt(6, &[1, 3]),
            bt(6, &[2, 3]),
            bt(6, &[2, 4]),
            bt(6, &[3, 4]),
            bt(6, &[3, 5]),
            bt(6, &[4, 5]),
        ];
        assert_eq!(chain, expected);
        for w in chain.windows(2) {
            assert!(w[0].order_gt(&w[1]).unwrap());
        }
    }

    #[test]
    fn reduced_expression_trivial_and_roundtrip() {
        for n in 0..=6 {
            for t in Bitableau::all_of_size(n) {
                let word = t.reduced_expression();
                if t == Bitableau::max_tableau(t.shape()) {
                    assert!(word.is_empty());
                }
                // reapplying the word to the maximal tableau reproduces t
                let mut cur = Bitableau::max_tableau(t.shape());
                for k in &word {
                    cur = cur.apply_transposition(*k).unwrap();
                }
                assert_eq!(cur, t);
            }
        }
    }

    #[test]
    fn tilde_basic() {
        // all entries in component 1: single column
        let t = bt(4, &[]);
        let tc = t.tilde();
        assert_eq!(tc.col2_entries(), Vec::<usize>::new());
        // tilde is constant on ~-classes for n <= 5
        for n in 0..=5 {
            let all = Bitableau::all_of_size(n);
            for s in &all {
                for t in &all {
                    if s.shape() == t.shape() {
                        assert_eq!(s.tilde_equivalent(t), s.tilde() == t.tilde());
                    }
                }
            }
        }
        // tilde of the ((1),(2)) maximum is standard (ballot) by construction
        let m = Bitableau::max_tableau(OneLineBipartition { a: 1, b: 2 });
        let tc = m.tilde();
        assert_eq!(tc.col2_entries(), vec![2]);
    }

    #[test]
    fn contents_at_small_shape() {
        // maximal tableau of ((1),(2)): contents (Q^{-1}, Q, q^2 Q^{-1})
        use crate::coeffs::{GenericField, RationalFunction};
        let t = Bitableau::max_tableau(OneLineBipartition { a: 1, b: 2 });
        let f = GenericField;
        assert_eq!(t.content(&f, 1), RationalFunction::qq(0, -1));
        assert_eq!(t.content(&f, 2), RationalFunction::qq(0, 1));
        assert_eq!(t.content(&f, 3), RationalFunction::qq(2, -1));
        // entry 1 always has content Q or Q^{-1}
        for t in Bitableau::all_of_size(4) {
            let c = t.content(&f, 1);
            assert!(c == RationalFunction::qq(0, 1) || c == RationalFunction::qq(0, -1));
        }
    }

    #[test]
    fn contents_separate() {
        // in the generic field, c_s(k) != c_t(k) whenever s,t place k in
        // different nodes; exhaustively for n <= 4
        use crate::coeffs::GenericField;
        let f = GenericField;
        for n in 1..=4 {
            let all = Bitableau::all_of_size(n);
            for s in &all {
                for t in &all {
                    for k in 1..=n {
                        let same_node = s.component_of(k) == t.component_of(k)
                            && s.position_of(k) == t.position_of(k);
                        assert_eq!(same_node, s.content(&f, k) == t.content(&f, k));
                    }
                }
            }
        }
    }

    #[test]
    fn residue_table_b3() {
        // l = 5, m = 2 (k0 = 1)
        let rs = |t: &Bitableau| -> Vec<u64> {
            t.residues(5, 2).iter().map(|r| r.value()).collect()
        };
        assert_eq!(rs(&bt(3, &[1, 3])), vec![4, 1, 0]); // t^lambda
        assert_eq!(rs(&bt(3, &[1, 2])), vec![4, 0, 1]); // s
        assert_eq!(rs(&bt(3, &[2, 3])), vec![1, 4, 0]); // t
        assert_eq!(rs(&bt(3, &[1])), vec![4, 1, 2]); // t^mu
        assert_eq!(rs(&bt(3, &[2])), vec![1, 4, 2]); // v
        assert_eq!(rs(&bt(3, &[3])), vec![1, 2, 4]); // u
        assert_eq!(rs(&bt(3, &[1, 2, 3])), vec![4, 0, 1]); // t^nu
        assert_eq!(rs(&bt(3, &[])), vec![1, 2, 3]); // t^kappa
    }

    #[test]
    fn degree_table_b3() {
        // l = 5, m = 2: degrees from the known table
        assert_eq!(bt(3, &[1, 3]).degree(5, 2), 0); // t^lambda
        assert_eq!(bt(3, &[1, 2]).degree(5, 2), 1); // s
        assert_eq!(bt(3, &[2, 3]).degree(5, 2), 0); // t
        assert_eq!(bt(3, &[1]).degree(5, 2), 0); // t^mu
        assert_eq!(bt(3, &[2]).degree(5, 2), 0); // v
        assert_eq!(bt(3, &[3]).degree(5, 2), 0); // u
        assert_eq!(bt(3, &[1, 2, 3]).degree(5, 2), 0); // t^nu
        assert_eq!(bt(3, &[]).degree(5, 2), 0); // t^kappa
        // deg(max tableau) = 0 for every shape
        for n in 0..=6 {
            for shape in OneLineBipartition::all(n) {
                assert_eq!(Bitableau::max_tableau(shape).degree(5, 2), 0);
            }
        }
    }

    #[test]
    fn pascal_counting() {
        // b_{n,f} = C(n, b) satisfies the Pascal recursion and the square
        // sum identity sum b^2 = C(2n, n) for n <= 8
        fn b(n: usize, f: i64) -> u64 {
            match OneLineBipartition::from_f(n, f) {
                Ok(sh) => {
                    let mut c = 1u64;
                    for i in 0..sh.b {
                        c = c * (n as u64 - i as u64) / (i as u64 + 1);
                    }
                    c
                }
                Err(_) => 0,
            }
        }
        fn binom(n: u64, k: u64) -> u64 {
            let mut c = 1u64;
            for i in 0..k {
                c = c * (n - i) / (i + 1);
            }
            c
        }
        for n in 1..=8usize {
            let mut sq = 0u64;
            for f in (-(n as i64)..=n as i64).step_by(2) {
                assert_eq!(b(n, f), b(n - 1, f + 1) + b(n - 1, f - 1), "n={n} f={f}");
                sq += b(n, f) * b(n, f);
            }
            assert_eq!(sq, binom(2 * n as u64, n as u64));
        }
    }

    #[test]
    fn small_shape_brute_force_max() {
        // shape ((1),(2)): the unique maximum among all 3 bitableaux
        let shape = OneLineBipartition { a: 1, b: 2 };
        let all = Bitableau::all_of_shape(shape);
        assert_eq!(all.len(), 3);
        let maxes: Vec<_> = all
            .iter()
            .filter(|s| all.iter().all(|t| s.order_geq(t).unwrap()))
            .collect();
        assert_eq!(maxes.len(), 1);
        assert_eq!(*maxes[0], bt(3, &[1, 3])); // (2 | 1 3)
    }
}
