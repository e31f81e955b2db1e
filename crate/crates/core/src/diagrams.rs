//! Planar `(n,n)`-bridges and blob-decorated diagrams: canonical encoding,
//! concatenation with loop and blob bookkeeping, generators, enumeration
//! and the diagram/tableau bijections.
//!
//! Points are numbered `1..=n` along the top edge (left to right) and
//! `n+1..=2n` along the bottom edge (left to right). A line is "through"
//! (vertical) when it joins the two edges, otherwise it is a horizontal
//! arc on one edge.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::tabcomb::{Bitableau, TwoColTableau, Walk};
use crate::{Error, Result};

/// An undecorated planar `(n,n)`-bridge (Temperley-Lieb diagram).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TlDiagram {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

/// A blob diagram: a bridge with blobs on some of its left-exposed lines.
/// Decorations are recorded by the smallest point of the decorated pair.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlobDiagram {
    n: usize,
    pairs: Vec<(usize, usize)>,
    blobs: Vec<usize>,
}

/// Result of a blob concatenation: the normalized diagram together with
/// the numbers of undecorated and decorated internal loops removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Concatenation {
    pub diagram: BlobDiagram,
    pub undecorated_loops: usize,
    pub decorated_loops: usize,
}

fn canonicalize_pairs(mut pairs: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    for p in pairs.iter_mut() {
        if p.0 > p.1 {
            *p = (p.1, p.0);
        }
    }
    pairs.sort_unstable();
    pairs
}

/// Circular position used for the planarity test: top left-to-right, then
/// bottom right-to-left.
fn circ(n: usize, p: usize) -> usize {
    if p <= n {
        p - 1
    } else {
        3 * n - p
    }
}

fn check_matching(n: usize, pairs: &[(usize, usize)]) -> Result<()> {
    if pairs.len() != n {
        return Err(Error::InvalidDiagram(format!(
            "expected {n} pairs, got {}",
            pairs.len()
        )));
    }
    let mut seen = vec![false; 2 * n + 1];
    for &(a, b) in pairs {
        for p in [a, b] {
            if p == 0 || p > 2 * n || seen[p] {
                return Err(Error::InvalidDiagram(format!("bad or repeated point {p}")));
            }
            seen[p] = true;
        }
    }
    Ok(())
}

fn check_planar(n: usize, pairs: &[(usize, usize)]) -> Result<()> {
    let cp: Vec<(usize, usize)> = pairs
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (circ(n, a), circ(n, b));
            if x < y {
                (x, y)
            } else {
                (y, x)
            }
        })
        .collect();
    for i in 0..cp.len() {
        for j in i + 1..cp.len() {
            let (a, b) = cp[i];
            let (c, d) = cp[j];
            let crossing = (a < c && c < b && b < d) || (c < a && a < d && d < b);
            if crossing {
                return Err(Error::InvalidDiagram(format!(
                    "lines {:?} and {:?} cross",
                    pairs[i], pairs[j]
                )));
            }
        }
    }
    Ok(())
}

/// Non-crossing perfect matchings of the given linearly-ordered points.
fn noncrossing_matchings(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if points.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let first = points[0];
    for idx in (1..points.len()).step_by(2) {
        let inner = &points[1..idx];
        let outer = &points[idx + 1..];
        for mi in noncrossing_matchings(inner) {
            for mo in noncrossing_matchings(outer) {
                let mut m = vec![(first, points[idx])];
                m.extend_from_slice(&mi);
                m.extend_from_slice(&mo);
                out.push(m);
            }
        }
    }
    out
}

impl TlDiagram {
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let pairs = canonicalize_pairs(pairs);
        check_matching(n, &pairs)?;
        check_planar(n, &pairs)?;
        Ok(TlDiagram { n, pairs })
    }

    pub fn identity(n: usize) -> Self {
        TlDiagram { n, pairs: (1..=n).map(|i| (i, n + i)).collect() }
    }

    /// The generator `U_i`: a cup at top positions `i, i+1` over a cap at
    /// the same bottom positions.
    pub fn u(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i + 1 > n {
            return Err(Error::IndexOutOfRange(format!(
                "U_{i} needs 1 <= i <= {}",
                n.saturating_sub(1)
            )));
        }
        let mut pairs = vec![(i, i + 1), (n + i, n + i + 1)];
        for j in 1..=n {
            if j != i && j != i + 1 {
                pairs.push((j, n + j));
            }
        }
        Ok(TlDiagram { n, pairs: canonicalize_pairs(pairs) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn is_through(&self, pair: (usize, usize)) -> bool {
        pair.0 <= self.n && pair.1 > self.n
    }

    pub fn through_count(&self) -> usize {
        self.pairs.iter().filter(|p| self.is_through(**p)).count()
    }

    /// All `(n,n)`-bridges, enumerated deterministically.
    pub fn all(n: usize) -> Vec<TlDiagram> {
        if n == 0 {
            return vec![TlDiagram { n: 0, pairs: Vec::new() }];
        }
        let pts: Vec<usize> = (0..2 * n).collect();
        let uncirc = |c: usize| -> usize {
            if c < n {
                c + 1
            } else {
                3 * n - c
            }
        };
        let mut out: Vec<TlDiagram> = noncrossing_matchings(&pts)
            .into_iter()
            .map(|m| {
                let pairs = canonicalize_pairs(
                    m.into_iter().map(|(a, b)| (uncirc(a), uncirc(b))).collect(),
                );
                TlDiagram { n, pairs }
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Stack `self` over `other`, trace strands, count closed loops.
    pub fn concat(&self, other: &TlDiagram) -> Result<(TlDiagram, usize)> {
        let a = BlobDiagram::from_tl(self.clone());
        let b = BlobDiagram::from_tl(other.clone());
        let c = a.concat(&b)?;
        debug_assert_eq!(c.decorated_loops, 0);
        Ok((c.diagram.forget_blobs(), c.undecorated_loops + c.decorated_loops))
    }

    /// The pair of standard two-column tableaux: `k` is in the second
    /// column of the top (bottom) tableau iff point `k` is a right
    /// endpoint of a horizontal line on that edge.
    pub fn to_tableaux(&self) -> (TwoColTableau, TwoColTableau) {
        let mut top2 = Vec::new();
        let mut bot2 = Vec::new();
        for &(a, b) in &self.pairs {
            if b <= self.n {
                top2.push(b);
            } else if a > self.n {
                bot2.push(b - self.n);
            }
        }
        (
            TwoColTableau::new(self.n, &top2).expect("top half is ballot"),
            TwoColTableau::new(self.n, &bot2).expect("bottom half is ballot"),
        )
    }

    /// The unique bridge with the given top and bottom tableaux.
    pub fn from_tableaux(top: &TwoColTableau, bot: &TwoColTableau) -> Result<TlDiagram> {
        if top.shape() != bot.shape() {
            return Err(Error::ShapeMismatch(format!("{top} vs {bot}")));
        }
        let n = top.n();
        let build_half = |t: &TwoColTableau| -> (Vec<(usize, usize)>, Vec<usize>) {
            let mut arcs = Vec::new();
            let mut dangling: Vec<usize> = Vec::new();
            for k in 1..=n {
                if t.column_of(k) == 1 {
                    dangling.push(k);
                } else {
                    let a = dangling.pop().expect("ballot sequence");
                    arcs.push((a, k));
                }
            }
            (arcs, dangling)
        };
        let (top_arcs, top_dang) = build_half(top);
        let (bot_arcs, bot_dang) = build_half(bot);
        let mut pairs = top_arcs;
        pairs.extend(bot_arcs.into_iter().map(|(a, b)| (n + a, n + b)));
        pairs.extend(top_dang.into_iter().zip(bot_dang).map(|(a, b)| (a, n + b)));
        TlDiagram::new(n, pairs)
    }
}

impl BlobDiagram {
    pub fn new(n: usize, pairs: Vec<(usize, usize)>, blobs: Vec<usize>) -> Result<Self> {
        let pairs = canonicalize_pairs(pairs);
        check_matching(n, &pairs)?;
        check_planar(n, &pairs)?;
        let mut blobs = blobs;
        blobs.sort_unstable();
        blobs.dedup();
        let d = BlobDiagram { n, pairs, blobs };
        d.check_decorations()?;
        Ok(d)
    }

    pub fn from_tl(t: TlDiagram) -> Self {
        BlobDiagram { n: t.n, pairs: t.pairs, blobs: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_tl(TlDiagram::identity(n))
    }

    /// Blob generator: the identity with a blob on its first line.
    pub fn e(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::IndexOutOfRange("e needs n >= 1".into()));
        }
        let mut d = Self::identity(n);
        d.blobs = vec![1];
        Ok(d)
    }

    pub fn u(n: usize, i: usize) -> Result<Self> {
        Ok(Self::from_tl(TlDiagram::u(n, i)?))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn blobs(&self) -> &[usize] {
        &self.blobs
    }

    pub fn is_through(&self, pair: (usize, usize)) -> bool {
        pair.0 <= self.n && pair.1 > self.n
    }

    pub fn through_count(&self) -> usize {
        self.pairs.iter().filter(|p| self.is_through(**p)).count()
    }

    fn leftmost_through(&self) -> Option<(usize, usize)> {
        self.pairs.iter().copied().filter(|p| self.is_through(*p)).min()
    }

    pub fn is_decorated(&self, pair: (usize, usize)) -> bool {
        self.blobs.binary_search(&pair.0).is_ok()
    }

    /// Whether the leftmost through line carries a blob.
    pub fn leftmost_through_decorated(&self) -> bool {
        self.leftmost_through().map_or(false, |p| self.is_decorated(p))
    }

    /// A line may carry a blob iff it can be exposed to the left wall:
    /// the leftmost through line always can; a horizontal arc can iff it
    /// lies strictly left of the leftmost through line on its edge and is
    /// not nested inside another arc of that edge.
    pub fn is_decorable(&self, pair: (usize, usize)) -> bool {
        let lt = self.leftmost_through();
        if self.is_through(pair) {
            return Some(pair) == lt;
        }
        let (a, b) = pair;
        let top_edge = b <= self.n;
        if let Some((t0, b0)) = lt {
            let limit = if top_edge { t0 } else { b0 };
            if b >= limit {
                return false;
            }
        }
        !self.pairs.iter().any(|&(c, d)| {
            let arc = !self.is_through((c, d));
            arc && ((d <= self.n) == top_edge) && c < a && b < d
        })
    }

    pub fn decorable_lines(&self) -> Vec<(usize, usize)> {
        self.pairs.iter().copied().filter(|p| self.is_decorable(*p)).collect()
    }

    fn check_decorations(&self) -> Result<()> {
        for &s in &self.blobs {
            let pair = self
                .pairs
                .iter()
                .copied()
                .find(|&(a, _)| a == s)
                .ok_or_else(|| {
                    Error::InvalidDiagram(format!("blob index {s} is not a pair minimum"))
                })?;
            if !self.is_decorable(pair) {
                return Err(Error::InvalidDiagram(format!(
                    "line {pair:?} is not left-exposed, cannot carry a blob"
                )));
            }
        }
        Ok(())
    }

    /// Delete all decorations.
    pub fn forget_blobs(&self) -> TlDiagram {
        TlDiagram { n: self.n, pairs: self.pairs.clone() }
    }

    /// Top-bottom reflection (the `*` anti-automorphism on diagrams).
    pub fn flip(&self) -> BlobDiagram {
        let n = self.n;
        let map = |p: usize| if p <= n { p + n } else { p - n };
        let mut blobs = Vec::new();
        for &s in &self.blobs {
            let &(a, b) = self
                .pairs
                .iter()
                .find(|&&(a, _)| a == s)
                .expect("blob on existing pair");
            blobs.push(map(a).min(map(b)));
        }
        blobs.sort_unstable();
        let pairs =
            canonicalize_pairs(self.pairs.iter().map(|&(a, b)| (map(a), map(b))).collect());
        BlobDiagram { n, pairs, blobs }
    }

    /// All blob diagrams on `n` points.
    pub fn all(n: usize) -> Vec<BlobDiagram> {
        let mut out = Vec::new();
        for tl in TlDiagram::all(n) {
            let base = BlobDiagram::from_tl(tl);
            let dec = base.decorable_lines();
            for mask in 0u32..(1 << dec.len()) {
                let mut blobs: Vec<usize> = dec
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, p)| p.0)
                    .collect();
                blobs.sort_unstable();
                let mut d = base.clone();
                d.blobs = blobs;
                out.push(d);
            }
        }
        out.sort();
        out
    }

    /// Concatenate `self` on top of `other`: trace strands through the
    /// middle edge, collapse repeated blobs, and count removed loops by
    /// decoration.
    pub fn concat(&self, other: &BlobDiagram) -> Result<Concatenation> {
        if self.n != other.n {
            return Err(Error::AlgebraMismatch(format!(
                "concatenating diagrams on {} and {} points",
                self.n, other.n
            )));
        }
        let n = self.n;
        // Node ids: final top 0..n, middle (shared edge) n..2n, final
        // bottom 2n..3n. Middle nodes carry exactly two segments.
        #[derive(Clone, Copy)]
        struct Seg {
            to: usize,
            decorated: bool,
        }
        let mut adj: Vec<Vec<Seg>> = vec![Vec::new(); 3 * n];
        let map_self = |p: usize| if p <= n { p - 1 } else { n + (p - n - 1) };
        let map_other = |p: usize| if p <= n { n + (p - 1) } else { 2 * n + (p - n - 1) };
        for &(a, b) in &self.pairs {
            let dec = self.is_decorated((a, b));
            let (x, y) = (map_self(a), map_self(b));
            adj[x].push(Seg { to: y, decorated: dec });
            adj[y].push(Seg { to: x, decorated: dec });
        }
        for &(a, b) in &other.pairs {
            let dec = other.is_decorated((a, b));
            let (x, y) = (map_other(a), map_other(b));
            adj[x].push(Seg { to: y, decorated: dec });
            adj[y].push(Seg { to: x, decorated: dec });
        }
        let step = |prev: usize, cur: usize| -> (usize, bool) {
            let segs = &adj[cur];
            debug_assert_eq!(segs.len(), 2);
            if segs[0].to == prev {
                (segs[1].to, segs[1].decorated)
            } else {
                (segs[0].to, segs[0].decorated)
            }
        };
        let mut visited = vec![false; 3 * n];
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let mut blob_points: Vec<usize> = Vec::new();
        let unmap = |node: usize| -> usize {
            if node < n {
                node + 1
            } else {
                n + (node - 2 * n) + 1
            }
        };
        for start in (0..n).chain(2 * n..3 * n) {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            let mut decorated = adj[start][0].decorated;
            let mut prev = start;
            let mut cur = adj[start][0].to;
            while n <= cur && cur < 2 * n {
                visited[cur] = true;
                let (next, dec) = step(prev, cur);
                decorated |= dec;
                prev = cur;
                cur = next;
            }
            visited[cur] = true;
            let (p, q) = (unmap(start), unmap(cur));
            let pair = if p < q { (p, q) } else { (q, p) };
            pairs.push(pair);
            if decorated {
                blob_points.push(pair.0);
            }
        }
        // remaining middle nodes form closed internal loops
        let mut undecorated_loops = 0;
        let mut decorated_loops = 0;
        for start in n..2 * n {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            let mut decorated = adj[start][0].decorated;
            let mut prev = start;
            let mut cur = adj[start][0].to;
            while cur != start {
                visited[cur] = true;
                let (next, dec) = step(prev, cur);
                decorated |= dec;
                prev = cur;
                cur = next;
            }
            if decorated {
                decorated_loops += 1;
            } else {
                undecorated_loops += 1;
            }
        }
        blob_points.sort_unstable();
        let diagram = BlobDiagram::new(n, pairs, blob_points)?;
        Ok(Concatenation { diagram, undecorated_loops, decorated_loops })
    }

    /// The Bratteli coordinate of the diagram's cell: `f = +-(number of
    /// through lines)`, negative exactly when the leftmost through line
    /// carries a blob.
    pub fn shape_f(&self) -> i64 {
        let v = self.through_count() as i64;
        if self.leftmost_through_decorated() {
            -v
        } else {
            v
        }
    }

    /// Coverage of each top resp. bottom node: a node is covered when its
    /// line is decorated or lies under a decorated line (a strictly
    /// containing same-edge arc, or the decorated leftmost through line
    /// for everything to its right).
    fn covered_nodes(&self) -> (Vec<bool>, Vec<bool>) {
        let n = self.n;
        let lt = self.leftmost_through();
        let lt_dec = self.leftmost_through_decorated();
        let line_covered = |pair: (usize, usize)| -> bool {
            if self.is_decorated(pair) {
                return true;
            }
            let through = self.is_through(pair);
            if !through {
                let (a, b) = pair;
                let top_edge = b <= n;
                let contained = self.pairs.iter().any(|&(c, d)| {
                    self.is_decorated((c, d))
                        && !self.is_through((c, d))
                        && ((d <= n) == top_edge)
                        && c < a
                        && b < d
                });
                if contained {
                    return true;
                }
            }
            if lt_dec {
                let (t0, b0) = lt.unwrap();
                if pair == (t0, b0) {
                    return false;
                }
                if through {
                    return pair.0 > t0;
                }
                let (a, b) = pair;
                return if b <= n { a > t0 } else { a > b0 };
            }
            false
        };
        let mut top = vec![false; n + 1];
        let mut bot = vec![false; n + 1];
        for &pair in &self.pairs {
            let cov = line_covered(pair);
            for p in [pair.0, pair.1] {
                if p <= n {
                    top[p] = cov;
                } else {
                    bot[p - n] = cov;
                }
            }
        }
        (top, bot)
    }

    /// The pair `(t_top, t_bot)` of standard one-line bitableaux encoding
    /// the diagram.
    pub fn to_bitableaux(&self) -> (Bitableau, Bitableau) {
        let n = self.n;
        let (cov_top, cov_bot) = self.covered_nodes();
        let negative = self.through_count() > 0 && self.leftmost_through_decorated();
        let mut comp_top = Vec::new(); // comp2 in the positive case, comp1 otherwise
        let mut comp_bot = Vec::new();
        for &(a, b) in &self.pairs {
            if self.is_through((a, b)) {
                continue;
            }
            let top_edge = b <= n;
            let (l, r, cov, out) = if top_edge {
                (a, b, &cov_top, &mut comp_top)
            } else {
                (a - n, b - n, &cov_bot, &mut comp_bot)
            };
            if !negative {
                // second component: uncovered right or covered left endpoint
                if !cov[r] {
                    out.push(r);
                }
                if cov[l] {
                    out.push(l);
                }
            } else {
                // first component: uncovered left or covered right endpoint
                if !cov[l] {
                    out.push(l);
                }
                if cov[r] {
                    out.push(r);
                }
            }
        }
        if negative {
            let complement =
                |v: &[usize]| -> Vec<usize> { (1..=n).filter(|k| !v.contains(k)).collect() };
            (
                Bitableau::new(n, &complement(&comp_top)).unwrap(),
                Bitableau::new(n, &complement(&comp_bot)).unwrap(),
            )
        } else {
            (
                Bitableau::new(n, &comp_top).unwrap(),
                Bitableau::new(n, &comp_bot).unwrap(),
            )
        }
    }

    /// The unique blob diagram with the given top and bottom bitableaux,
    /// built through the inward/outward walk construction.
    pub fn from_bitableaux(top: &Bitableau, bot: &Bitableau) -> Result<BlobDiagram> {
        if top.n() != bot.n() || top.shape() != bot.shape() {
            return Err(Error::ShapeMismatch(format!("{top} vs {bot}")));
        }
        let n = top.n();
        // arcs carry a decoration flag; dangling verticals likewise
        let build_half = |t: &Bitableau| -> (Vec<(usize, usize, bool)>, Vec<(usize, bool)>) {
            let mut arcs = Vec::new();
            let mut dangling: Vec<(usize, bool)> = Vec::new();
            for k in 1..=n {
                let p = t.seq(k - 1);
                let c = t.seq(k);
                let outward = if p == 0 { c > 0 } else { c.abs() > p.abs() };
                if outward {
                    dangling.push((k, false));
                } else if p == 0 {
                    // inward start from the axis: new decorated vertical
                    dangling.push((k, true));
                } else {
                    // join the rightmost dangling vertical to point k
                    let (a, dec) = dangling.pop().expect("walk stays admissible");
                    arcs.push((a, k, dec));
                }
            }
            (arcs, dangling)
        };
        let (top_arcs, top_dang) = build_half(top);
        let (bot_arcs, bot_dang) = build_half(bot);
        debug_assert_eq!(top_dang.len(), bot_dang.len());
        let mut pairs = Vec::new();
        let mut blobs = Vec::new();
        for (a, b, dec) in top_arcs {
            pairs.push((a, b));
            if dec {
                blobs.push(a);
            }
        }
        for (a, b, dec) in bot_arcs {
            pairs.push((n + a, n + b));
            if dec {
                blobs.push(n + a);
            }
        }
        for ((a, d1), (b, d2)) in top_dang.into_iter().zip(bot_dang) {
            pairs.push((a, n + b));
            if d1 || d2 {
                blobs.push(a);
            }
        }
        BlobDiagram::new(n, pairs, blobs)
    }

    /// Walk of the top half (equals the walk of `t_top`).
    pub fn top_walk(&self) -> Walk {
        Walk::of(&self.to_bitableaux().0)
    }
}

/// JSON schema shared by both diagram kinds:
/// `{"n": int, "pairs": [[p,q],...], "blobs": [smallest-point,...]}`.
#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    n: usize,
    pairs: Vec<(usize, usize)>,
    #[serde(default)]
    blobs: Vec<usize>,
}

impl Serialize for BlobDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramRepr { n: self.n, pairs: self.pairs.clone(), blobs: self.blobs.clone() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BlobDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = DiagramRepr::deserialize(d)?;
        BlobDiagram::new(r.n, r.pairs, r.blobs).map_err(serde::de::Error::custom)
    }
}

impl Serialize for TlDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramRepr { n: self.n, pairs: self.pairs.clone(), blobs: Vec::new() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TlDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = DiagramRepr::deserialize(d)?;
        TlDiagram::new(r.n, r.pairs).map_err(serde::de::Error::custom)
    }
}

/// Compact one-line rendering: top arcs, bottom arcs (primed points) and
/// through lines, with `*` marking blobs. Deterministic; used in reports
/// and golden files.
impl fmt::Display for BlobDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for &(a, b) in &self.pairs {
            let star = if self.is_decorated((a, b)) { "*" } else { "" };
            let s = if b <= self.n {
                format!("({a} {b}){star}")
            } else if a > self.n {
                format!("({}' {}'){star}", a - self.n, b - self.n)
            } else {
                format!("{a}-{}'{star}", b - self.n)
            };
            parts.push(s);
        }
        write!(f, "[{}]", parts.join(" "))
    }
}

impl fmt::Debug for BlobDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TlDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", BlobDiagram::from_tl(self.clone()))
    }
}

impl fmt::Debug for TlDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Multi-row ASCII picture of a blob diagram: nested top arcs above,
/// bottom arcs below, `|` for straight through lines and `a~b'` footnotes
/// for slanted ones; `*` marks a blob.
pub fn ascii_render(d: &BlobDiagram) -> String {
    let n = d.n();
    let col = |p: usize| 2 * (p - 1);
    let width = if n == 0 { 2 } else { 2 * n - 1 };
    let header: String = (1..=n).map(|i| format!("{:<2}", i % 10)).collect();
    let mut out = vec![header.trim_end().to_string()];

    let arc_rows = |arcs: &[(usize, usize, bool)]| -> Vec<String> {
        let mut rows: Vec<Vec<char>> = Vec::new();
        for &(a, b, dec) in arcs {
            let depth = arcs.iter().filter(|&&(c, d2, _)| c < a && b < d2).count();
            while rows.len() <= depth {
                rows.push(vec![' '; width]);
            }
            let row = &mut rows[depth];
            row[col(a)] = '\\';
            row[col(b)] = '/';
            for x in col(a) + 1..col(b) {
                if row[x] == ' ' {
                    row[x] = '_';
                }
            }
            if dec {
                row[(col(a) + col(b)) / 2] = '*';
            }
        }
        rows.into_iter()
            .map(|r| r.into_iter().collect::<String>().trim_end().to_string())
            .collect()
    };

    let mut top_arcs = Vec::new();
    let mut bot_arcs = Vec::new();
    let mut thru = Vec::new();
    for &(a, b) in d.pairs() {
        let dec = d.is_decorated((a, b));
        if b <= n {
            top_arcs.push((a, b, dec));
        } else if a > n {
            bot_arcs.push((a - n, b - n, dec));
        } else {
            thru.push((a, b - n, dec));
        }
    }
    out.extend(arc_rows(&top_arcs));
    let mut mid = vec![' '; width];
    let mut slanted = Vec::new();
    for &(a, b, dec) in &thru {
        if a == b {
            mid[col(a)] = if dec { '*' } else { '|' };
        } else {
            slanted.push(format!("{}~{}'{}", a, b, if dec { "*" } else { "" }));
        }
    }
    let mid: String = mid.into_iter().collect();
    if !mid.trim().is_empty() {
        out.push(mid.trim_end().to_string());
    }
    if !slanted.is_empty() {
        out.push(format!("thru: {}", slanted.join(" ")));
    }
    let mut brows = arc_rows(&bot_arcs);
    brows.reverse();
    for r in brows {
        let m: String = r
            .chars()
            .map(|c| match c {
                '\\' => '/',
                '/' => '\\',
                '_' => '-',
                x => x,
            })
            .collect();
        out.push(m);
    }
    let footer: String = (1..=n).map(|i| format!("{:<3}", format!("{}'", i % 10))).collect();
    out.push(footer.trim_end().to_string());
    out.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tabcomb::OneLineBipartition;

    #[test]
    fn catalan_counts() {
        let catalan = [1usize, 1, 2, 5, 14, 42, 132, 429];
        for (n, &c) in catalan.iter().enumerate() {
            assert_eq!(TlDiagram::all(n).len(), c, "n = {n}");
        }
    }

    #[test]
    fn blob_counts() {
        // |B(n)| = C(2n, n)
        let central = [1usize, 2, 6, 20, 70, 252];
        for (n, &c) in central.iter().enumerate() {
            assert_eq!(BlobDiagram::all(n).len(), c, "n = {n}");
        }
    }

    #[test]
    fn generators() {
        let id = BlobDiagram::identity(3);
        assert_eq!(id.pairs(), &[(1, 4), (2, 5), (3, 6)]);
        assert!(id.blobs().is_empty());
        let e = BlobDiagram::e(3).unwrap();
        assert_eq!(e.pairs(), id.pairs());
        assert_eq!(e.blobs(), &[1]);
        let u2 = BlobDiagram::u(3, 2).unwrap();
        assert_eq!(u2.pairs(), &[(1, 4), (2, 3), (5, 6)]);
        assert!(TlDiagram::u(3, 3).is_err());
        assert!(TlDiagram::u(3, 0).is_err());
    }

    #[test]
    fn concat_tl_loops() {
        let u1 = TlDiagram::u(3, 1).unwrap();
        let id = TlDiagram::identity(3);
        // identity . d -> (d, 0)
        let (d, loops) = id.concat(&u1).unwrap();
        assert_eq!(d, u1);
        assert_eq!(loops, 0);
        // U_i . U_i -> (U_i, 1)
        let (d, loops) = u1.concat(&u1).unwrap();
        assert_eq!(d, u1);
        assert_eq!(loops, 1);
        // U_1 U_2 U_1 = U_1 with no loops
        let u2 = TlDiagram::u(3, 2).unwrap();
        let (d, l1) = u1.concat(&u2).unwrap();
        let (d, l2) = d.concat(&u1).unwrap();
        assert_eq!(d, u1);
        assert_eq!(l1 + l2, 0);
    }

    #[test]
    fn seven_point_product() {
        // a 7-point product whose result closes exactly one loop
        let x = TlDiagram::new(
            7,
            vec![(1, 12), (2, 7), (3, 4), (5, 6), (8, 11), (9, 10), (13, 14)],
        )
        .unwrap();
        let y = TlDiagram::new(
            7,
            vec![(1, 2), (3, 4), (5, 10), (6, 11), (7, 12), (8, 9), (13, 14)],
        )
        .unwrap();
        let expected = TlDiagram::new(
            7,
            vec![(1, 10), (2, 7), (3, 4), (5, 6), (8, 9), (11, 12), (13, 14)],
        )
        .unwrap();
        let (d, loops) = x.concat(&y).unwrap();
        assert_eq!(d, expected);
        assert_eq!(loops, 1);
    }

    #[test]
    fn concat_blob_rules() {
        // e . e -> (e, 0, 0)
        let e = BlobDiagram::e(3).unwrap();
        let c = e.concat(&e).unwrap();
        assert_eq!(c.diagram, e);
        assert_eq!((c.undecorated_loops, c.decorated_loops), (0, 0));
        // U_1 e U_1 -> U_1 with one decorated loop
        let u1 = BlobDiagram::u(3, 1).unwrap();
        let c1 = u1.concat(&e).unwrap();
        assert_eq!((c1.undecorated_loops, c1.decorated_loops), (0, 0));
        let c2 = c1.diagram.concat(&u1).unwrap();
        assert_eq!(c2.diagram, u1);
        assert_eq!((c2.undecorated_loops, c2.decorated_loops), (0, 1));
    }

    #[test]
    fn max_cell_diagram_squares() {
        // m_{t t} for shape ((1),(1)) is the decorated cup over the
        // decorated cap; its square is itself with one decorated loop
        let t = Bitableau::new(2, &[1]).unwrap();
        let m = BlobDiagram::from_bitableaux(&t, &t).unwrap();
        assert_eq!(m.pairs(), &[(1, 2), (3, 4)]);
        assert_eq!(m.blobs(), &[1, 3]);
        let c = m.concat(&m).unwrap();
        assert_eq!(c.diagram, m);
        assert_eq!((c.undecorated_loops, c.decorated_loops), (0, 1));
    }

    #[test]
    fn eleven_point_bijection() {
        // decorated 11-point diagram and its bitableau pair
        let d = BlobDiagram::new(
            11,
            vec![
                (1, 4),
                (2, 3),
                (5, 10),
                (6, 7),
                (8, 9),
                (11, 16),
                (12, 13),
                (14, 15),
                (17, 18),
                (19, 22),
                (20, 21),
            ],
            vec![1, 5, 11, 12, 14],
        )
        .unwrap();
        let (top, bot) = d.to_bitableaux();
        let t_top = Bitableau::new(11, &[1, 2, 5, 6, 8, 11]).unwrap();
        let t_bot = Bitableau::new(11, &[1, 3, 5, 6, 8, 9]).unwrap();
        assert_eq!(top, t_top);
        assert_eq!(bot, t_bot);
        assert_eq!(BlobDiagram::from_bitableaux(&t_top, &t_bot).unwrap(), d);
        // forgetting blobs leaves the underlying 11-point bridge
        assert_eq!(d.forget_blobs().pairs(), d.pairs());
    }

    #[test]
    fn identity_bijection() {
        for n in 1..=5 {
            let id = BlobDiagram::identity(n);
            let (top, bot) = id.to_bitableaux();
            let max = Bitableau::max_tableau(OneLineBipartition { a: n, b: 0 });
            assert_eq!(top, max);
            assert_eq!(bot, max);
            assert_eq!(BlobDiagram::from_bitableaux(&max, &max).unwrap(), id);
        }
    }

    #[test]
    fn bijection_roundtrip() {
        for n in 0..=5 {
            for d in BlobDiagram::all(n) {
                let (top, bot) = d.to_bitableaux();
                assert_eq!(top.shape(), bot.shape());
                let d2 = BlobDiagram::from_bitableaux(&top, &bot)
                    .unwrap_or_else(|e| panic!("rebuild failed for {d}: {e}"));
                assert_eq!(d2, d, "roundtrip failed for {d}");
            }
        }
    }

    #[test]
    fn tl_bijection_roundtrip() {
        for n in 0..=6 {
            for d in TlDiagram::all(n) {
                let (top, bot) = d.to_tableaux();
                assert_eq!(TlDiagram::from_tableaux(&top, &bot).unwrap(), d);
            }
        }
    }

    #[test]
    fn seven_point_result_tableaux() {
        // result diagram above: top arcs {2,7},{3,4},{5,6}; bottom arcs
        // {1,2},{4,5},{6,7}; through 1 -> 3'
        let d = TlDiagram::new(
            7,
            vec![(1, 10), (2, 7), (3, 4), (5, 6), (8, 9), (11, 12), (13, 14)],
        )
        .unwrap();
        let (top, bot) = d.to_tableaux();
        assert_eq!(top, TwoColTableau::new(7, &[4, 6, 7]).unwrap());
        assert_eq!(bot, TwoColTableau::new(7, &[2, 5, 7]).unwrap());
    }

    #[test]
    fn forget_blobs_is_tilde() {
        // deleting decorations realizes the tilde map on both labels
        for n in 0..=4 {
            for s in Bitableau::all_of_size(n) {
                for t in Bitableau::all_of_size(n) {
                    if s.shape() != t.shape() {
                        continue;
                    }
                    let m = BlobDiagram::from_bitableaux(&s, &t).unwrap();
                    let beta = TlDiagram::from_tableaux(&s.tilde(), &t.tilde()).unwrap();
                    assert_eq!(m.forget_blobs(), beta, "s={s} t={t}");
                }
            }
        }
    }

    #[test]
    fn star_flip() {
        for d in BlobDiagram::all(3) {
            let f = d.flip();
            assert_eq!(f.flip(), d);
            let (top, bot) = d.to_bitableaux();
            let (ftop, fbot) = f.to_bitableaux();
            assert_eq!((ftop, fbot), (bot, top));
        }
    }

    #[test]
    fn planarity_and_decoration_rejections() {
        // crossing through lines
        assert!(TlDiagram::new(2, vec![(1, 4), (2, 3)]).is_err());
        // bottom arc is outermost on its edge: fine
        assert!(BlobDiagram::new(2, vec![(1, 2), (3, 4)], vec![3]).is_ok());
        // blob on a non-leftmost vertical
        assert!(BlobDiagram::new(2, vec![(1, 3), (2, 4)], vec![2]).is_err());
        // blob on an arc right of the leftmost vertical
        assert!(BlobDiagram::new(3, vec![(1, 4), (2, 3), (5, 6)], vec![2]).is_err());
        // blob on an arc nested inside another top arc
        assert!(BlobDiagram::new(4, vec![(1, 4), (2, 3), (5, 8), (6, 7)], vec![2]).is_err());
        // the outermost arc may carry the blob
        assert!(BlobDiagram::new(4, vec![(1, 4), (2, 3), (5, 8), (6, 7)], vec![1]).is_ok());
    }

    #[test]
    fn concat_preserves_validity() {
        for n in [2usize, 3] {
            let all = BlobDiagram::all(n);
            for x in &all {
                for y in &all {
                    let c = x.concat(y).unwrap();
                    assert_eq!(c.diagram.n(), n);
                }
            }
        }
    }

    #[test]
    fn half_diagram_counts() {
        // the number of top halves with f = a - b equals C(n, b), n <= 8
        use std::collections::HashMap;
        for n in 0..=8usize {
            let mut counts: HashMap<i64, u64> = HashMap::new();
            for t in Bitableau::all_of_size(n) {
                *counts.entry(t.shape().f()).or_insert(0) += 1;
            }
            for shape in OneLineBipartition::all(n) {
                let mut c = 1u64;
                for i in 0..shape.b {
                    c = c * (n as u64 - i as u64) / (i as u64 + 1);
                }
                assert_eq!(counts.get(&shape.f()).copied().unwrap_or(0), c);
            }
        }
    }

    #[test]
    fn json_schema() {
        let e = BlobDiagram::e(2).unwrap();
        let j = serde_json::to_string(&e).unwrap();
        assert_eq!(j, r#"{"n":2,"pairs":[[1,3],[2,4]],"blobs":[1]}"#);
        let back: BlobDiagram = serde_json::from_str(&j).unwrap();
        assert_eq!(back, e);
        // invalid decorations are rejected on the way in
        let bad: std::result::Result<BlobDiagram, _> =
            serde_json::from_str(r#"{"n":2,"pairs":[[1,3],[2,4]],"blobs":[2]}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn ascii_smoke() {
        let e = BlobDiagram::e(3).unwrap();
        let art = ascii_render(&e);
        assert!(art.contains('*'));
        let u1 = BlobDiagram::u(4, 1).unwrap();
        let art = ascii_render(&u1);
        assert!(art.contains('\\') && art.contains('/'));
    }
}
