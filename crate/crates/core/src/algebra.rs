//! The diagram algebras themselves: formal linear combinations of
//! canonical diagrams over a coefficient field, multiplication by
//! concatenation with loop evaluation, the `*` anti-automorphism, and the
//! cellular structure (cell ideals, cell modules, Gram forms).

use std::collections::BTreeMap;
use std::fmt;

use crate::coeffs::{CoeffField, CycloField, GenericField, Residue, Scalar};
use crate::diagrams::BlobDiagram;
use crate::tabcomb::{Bitableau, OneLineBipartition, TwoColShape, TwoColTableau};
use crate::{Error, Result};

/// Which diagram algebra we are working in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlgebraKind {
    Tl,
    Blob,
}

/// An algebra handle: kind, rank and coefficient field. Immutable;
/// elements refer to it for multiplication.
#[derive(Clone, Debug)]
pub struct Algebra<F: CoeffField> {
    pub kind: AlgebraKind,
    pub n: usize,
    pub field: F,
}

impl Algebra<GenericField> {
    pub fn tl_generic(n: usize) -> Self {
        Algebra { kind: AlgebraKind::Tl, n, field: GenericField }
    }

    pub fn blob_generic(n: usize) -> Self {
        Algebra { kind: AlgebraKind::Blob, n, field: GenericField }
    }
}

impl Algebra<CycloField> {
    pub fn tl_cyclo(n: usize, l: u64) -> Result<Self> {
        Ok(Algebra { kind: AlgebraKind::Tl, n, field: CycloField::new(l, 0)? })
    }

    /// The blob algebra at the specialization `(l, m)`. Requires `[m] != 0`
    /// there (so that `y_e` and `U_0 = -[m]e` make sense); the stronger
    /// separation conditions are demanded later, by the layers that
    /// genuinely need them.
    pub fn blob_cyclo(n: usize, l: u64, m: i64) -> Result<Self> {
        let field = CycloField::new(l, m)?;
        if field.gauss(m).is_zero() {
            return Err(Error::InvalidParams(format!(
                "[m] vanishes at (l,m) = ({l},{m}); the blob parameter y_e is undefined"
            )));
        }
        Ok(Algebra { kind: AlgebraKind::Blob, n, field })
    }
}

impl<F: CoeffField> Algebra<F> {
    /// Scalar attached to an undecorated internal loop: `-[2]`.
    pub fn undecorated_loop_factor(&self) -> F::Elem {
        -self.field.gauss(2)
    }

    /// Scalar attached to a decorated internal loop: `y_e`.
    pub fn decorated_loop_factor(&self) -> F::Elem {
        match self.kind {
            AlgebraKind::Blob => self.field.y_e(),
            AlgebraKind::Tl => unreachable!("decorated loops cannot arise in TL"),
        }
    }

    pub fn one(&self) -> Element<F> {
        Element::from_diagram(self, BlobDiagram::identity(self.n), self.field.one())
    }

    pub fn zero(&self) -> Element<F> {
        Element { terms: BTreeMap::new() }
    }

    /// The generator `U_i` as an element.
    pub fn u_elem(&self, i: usize) -> Result<Element<F>> {
        Ok(Element::from_diagram(self, BlobDiagram::u(self.n, i)?, self.field.one()))
    }

    /// The blob generator `e`.
    pub fn e_elem(&self) -> Result<Element<F>> {
        if self.kind != AlgebraKind::Blob {
            return Err(Error::AlgebraMismatch("e lives in the blob algebra".into()));
        }
        Ok(Element::from_diagram(self, BlobDiagram::e(self.n)?, self.field.one()))
    }

    /// The rescaled blob generator `U_0 = -[m] e`.
    pub fn u0_elem(&self) -> Result<Element<F>> {
        let m_gauss = match self.kind {
            AlgebraKind::Blob => self.big_m_gauss(),
            AlgebraKind::Tl => {
                return Err(Error::AlgebraMismatch("U_0 lives in the blob algebra".into()))
            }
        };
        Ok(self.e_elem()?.scale(&-m_gauss))
    }

    /// The quantum integer `[m]` with `q^m` read as `Q`.
    pub fn big_m_gauss(&self) -> F::Elem {
        // [m] = (Q - Q^{-1}) / (q - q^{-1})
        let num = self.field.qq(0, 1) - self.field.qq(0, -1);
        let den = (self.field.qq(1, 0) - self.field.qq(-1, 0))
            .inv()
            .expect("q - q^{-1} is invertible in both fields (l >= 3)");
        num * den
    }

    /// Every generator together with its display name (for cellularity
    /// checks and cell-module action matrices).
    pub fn generators(&self) -> Vec<(String, Element<F>)> {
        let mut out = Vec::new();
        if self.kind == AlgebraKind::Blob && self.n >= 1 {
            out.push(("e".to_string(), self.e_elem().unwrap()));
        }
        for i in 1..self.n {
            out.push((format!("U{i}"), self.u_elem(i).unwrap()));
        }
        out
    }

    /// Basis diagrams in canonical order.
    pub fn basis(&self) -> Vec<BlobDiagram> {
        match self.kind {
            AlgebraKind::Tl => crate::diagrams::TlDiagram::all(self.n)
                .into_iter()
                .map(BlobDiagram::from_tl)
                .collect(),
            AlgebraKind::Blob => BlobDiagram::all(self.n),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis().len()
    }
}

/// A finite formal linear combination of basis diagrams; zero coefficients
/// are never stored.
#[derive(Clone)]
pub struct Element<F: CoeffField> {
    terms: BTreeMap<BlobDiagram, F::Elem>,
}

impl<F: CoeffField> PartialEq for Element<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<F: CoeffField> Eq for Element<F> {}

impl<F: CoeffField> Element<F> {
    pub fn from_diagram(_alg: &Algebra<F>, d: BlobDiagram, c: F::Elem) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(d, c);
        }
        Element { terms }
    }

    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BlobDiagram, &F::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &BlobDiagram) -> Option<&F::Elem> {
        self.terms.get(d)
    }

    pub fn add_term(&mut self, d: BlobDiagram, c: F::Elem) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(d) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Element<F>) -> Element<F> {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Element<F> {
        Element {
            terms: self.terms.iter().map(|(d, c)| (d.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Element<F>) -> Element<F> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &F::Elem) -> Element<F> {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self
                .terms
                .iter()
                .map(|(d, x)| (d.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    /// Bilinear extension of diagram concatenation, with each removed
    /// undecorated loop contributing `-[2]` and each decorated loop the
    /// blob parameter `y_e`.
    pub fn mul(&self, alg: &Algebra<F>, other: &Element<F>) -> Element<F> {
        let mut out = Element::zero();
        let minus_two = alg.undecorated_loop_factor();
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                let cat = d1.concat(d2).expect("same rank inside one algebra");
                let mut c = c1.clone() * c2.clone();
                for _ in 0..cat.undecorated_loops {
                    c = c * minus_two.clone();
                }
                if cat.decorated_loops > 0 {
                    let ye = alg.decorated_loop_factor();
                    for _ in 0..cat.decorated_loops {
                        c = c * ye.clone();
                    }
                }
                out.add_term(cat.diagram, c);
            }
        }
        out
    }

    /// The `*` anti-automorphism: top-bottom flip of every diagram.
    pub fn star(&self) -> Element<F> {
        let mut out = Element::zero();
        for (d, c) in &self.terms {
            out.add_term(d.flip(), c.clone());
        }
        out
    }

    /// Keep only diagrams whose cell shape is NOT strictly greater than
    /// `shape` — i.e. reduce modulo the cell ideal of `shape`.
    pub fn reduce_mod_cell_ideal(&self, alg: &Algebra<F>, shape: CellShape) -> Element<F> {
        let mut out = Element::zero();
        for (d, c) in &self.terms {
            let ds = CellShape::of_diagram(alg.kind, d);
            if !ds.gt(&shape) {
                out.add_term(d.clone(), c.clone());
            }
        }
        out
    }

    pub fn pow(&self, alg: &Algebra<F>, k: usize) -> Element<F> {
        let mut out = alg.one();
        for _ in 0..k {
            out = out.mul(alg, self);
        }
        out
    }
}

impl<F: CoeffField> fmt::Display for Element<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(d, c)| format!("({c})·{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<F: CoeffField> fmt::Debug for Element<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The shape of a cell: the Bratteli coordinate `f` for the blob algebra,
/// the number of through lines for TL.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum CellShape {
    Blob(i64),
    Tl(usize),
}

impl CellShape {
    pub fn of_diagram(kind: AlgebraKind, d: &BlobDiagram) -> CellShape {
        match kind {
            AlgebraKind::Blob => CellShape::Blob(d.shape_f()),
            AlgebraKind::Tl => CellShape::Tl(d.through_count()),
        }
    }

    /// Strictly-greater in the cell order of the relevant algebra.
    pub fn gt(&self, other: &CellShape) -> bool {
        match (self, other) {
            (CellShape::Blob(x), CellShape::Blob(y)) => {
                x != y && OneLineBipartition::lambda_geq(*x, *y)
            }
            (CellShape::Tl(x), CellShape::Tl(y)) => x < y,
            _ => panic!("mixed cell shapes"),
        }
    }

    pub fn geq(&self, other: &CellShape) -> bool {
        self == other || self.gt(other)
    }

    /// All shapes for the given kind and rank, greatest first.
    pub fn all(kind: AlgebraKind, n: usize) -> Vec<CellShape> {
        match kind {
            AlgebraKind::Blob => OneLineBipartition::all(n)
                .into_iter()
                .map(|s| CellShape::Blob(s.f()))
                .collect(),
            AlgebraKind::Tl => TwoColShape::all(n)
                .into_iter()
                .map(|s| CellShape::Tl(s.verticals()))
                .collect(),
        }
    }
}

impl fmt::Display for CellShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellShape::Blob(x) => write!(f, "f={x}"),
            CellShape::Tl(v) => write!(f, "v={v}"),
        }
    }
}

/// A cellular-basis row/column label: a standard bitableau for the blob
/// algebra, a standard two-column tableau for TL.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tab {
    B(Bitableau),
    T(TwoColTableau),
}

impl Tab {
    pub fn n(&self) -> usize {
        match self {
            Tab::B(t) => t.n(),
            Tab::T(t) => t.n(),
        }
    }

    pub fn shape(&self) -> CellShape {
        match self {
            Tab::B(t) => CellShape::Blob(t.shape().f()),
            Tab::T(t) => CellShape::Tl(t.shape().verticals()),
        }
    }

    pub fn order_geq(&self, other: &Tab) -> Result<bool> {
        match (self, other) {
            (Tab::B(s), Tab::B(t)) => s.order_geq(t),
            (Tab::T(s), Tab::T(t)) => s.dom_geq(t),
            _ => Err(Error::AlgebraMismatch("mixed tableau kinds".into())),
        }
    }

    pub fn order_gt(&self, other: &Tab) -> Result<bool> {
        Ok(self != other && self.order_geq(other)?)
    }

    pub fn max_of_shape(kind: AlgebraKind, n: usize, shape: CellShape) -> Tab {
        match (kind, shape) {
            (AlgebraKind::Blob, CellShape::Blob(f)) => {
                Tab::B(Bitableau::max_tableau(OneLineBipartition::from_f(n, f).unwrap()))
            }
            (AlgebraKind::Tl, CellShape::Tl(v)) => {
                let c2 = (n - v) / 2;
                Tab::T(TwoColTableau::max_tableau(TwoColShape { col1: n - c2, col2: c2 }))
            }
            _ => panic!("mixed kinds"),
        }
    }

    pub fn all_of_shape(kind: AlgebraKind, n: usize, shape: CellShape) -> Vec<Tab> {
        match (kind, shape) {
            (AlgebraKind::Blob, CellShape::Blob(f)) => {
                Bitableau::all_of_shape(OneLineBipartition::from_f(n, f).unwrap())
                    .into_iter()
                    .map(Tab::B)
                    .collect()
            }
            (AlgebraKind::Tl, CellShape::Tl(v)) => {
                let c2 = (n - v) / 2;
                TwoColTableau::all_of_shape(TwoColShape { col1: n - c2, col2: c2 })
                    .into_iter()
                    .map(Tab::T)
                    .collect()
            }
            _ => panic!("mixed kinds"),
        }
    }

    pub fn all_of_size(kind: AlgebraKind, n: usize) -> Vec<Tab> {
        CellShape::all(kind, n)
            .into_iter()
            .flat_map(|s| Self::all_of_shape(kind, n, s))
            .collect()
    }

    pub fn reduced_expression(&self) -> Vec<usize> {
        match self {
            Tab::B(t) => t.reduced_expression(),
            Tab::T(t) => t.reduced_expression(),
        }
    }

    pub fn all_reduced_expressions(&self) -> Vec<Vec<usize>> {
        match self {
            Tab::B(t) => t.all_reduced_expressions(),
            Tab::T(t) => t.all_reduced_expressions(),
        }
    }

    pub fn apply_transposition(&self, k: usize) -> Option<Tab> {
        match self {
            Tab::B(t) => t.apply_transposition(k).map(Tab::B),
            Tab::T(t) => t.apply_transposition(k).map(Tab::T),
        }
    }

    pub fn residues(&self, l: u64, m: i64) -> Vec<Residue> {
        match self {
            Tab::B(t) => t.residues(l, m),
            Tab::T(t) => t.residues(l),
        }
    }

    pub fn degree(&self, l: u64, m: i64) -> i64 {
        match self {
            Tab::B(t) => t.degree(l, m),
            Tab::T(t) => t.degree(l),
        }
    }

    /// The cellular basis diagram `m_{s,t}` (blob) or `beta_{s,t}` (TL).
    pub fn diagram(s: &Tab, t: &Tab) -> Result<BlobDiagram> {
        match (s, t) {
            (Tab::B(a), Tab::B(b)) => BlobDiagram::from_bitableaux(a, b),
            (Tab::T(a), Tab::T(b)) => {
                Ok(BlobDiagram::from_tl(crate::diagrams::TlDiagram::from_tableaux(a, b)?))
            }
            _ => Err(Error::AlgebraMismatch("mixed tableau kinds".into())),
        }
    }

    pub fn diagram_labels(kind: AlgebraKind, d: &BlobDiagram) -> (Tab, Tab) {
        match kind {
            AlgebraKind::Blob => {
                let (a, b) = d.to_bitableaux();
                (Tab::B(a), Tab::B(b))
            }
            AlgebraKind::Tl => {
                let (a, b) = d.forget_blobs().to_tableaux();
                (Tab::T(a), Tab::T(b))
            }
        }
    }
}

impl fmt::Display for Tab {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tab::B(t) => write!(f, "{t}"),
            Tab::T(t) => write!(f, "{t}"),
        }
    }
}

impl fmt::Debug for Tab {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Expansion of an element lying in the span of one cell: coefficients
/// indexed by label pairs of that shape.
pub fn expand_in_cell<F: CoeffField>(
    alg: &Algebra<F>,
    x: &Element<F>,
    shape: CellShape,
) -> Result<Vec<(Tab, Tab, F::Elem)>> {
    let mut out = Vec::new();
    for (d, c) in x.terms() {
        let ds = CellShape::of_diagram(alg.kind, d);
        if ds != shape {
            return Err(Error::Internal(format!(
                "element not supported on cell {shape}: found {d} in {ds}"
            )));
        }
        let (s, t) = Tab::diagram_labels(alg.kind, d);
        out.push((s, t, c.clone()));
    }
    Ok(out)
}

/// The Gram matrix of the cell module of `shape`, with entries read off
/// from `m_{t^λ, s} · m_{t, t^λ} = <s, t> m_{t^λ, t^λ} (mod ideal)`.
pub fn gram_matrix<F: CoeffField>(
    alg: &Algebra<F>,
    shape: CellShape,
) -> Result<(Vec<Tab>, Vec<Vec<F::Elem>>)> {
    let tabs = Tab::all_of_shape(alg.kind, alg.n, shape);
    let tmax = Tab::max_of_shape(alg.kind, alg.n, shape);
    let mut rows = Vec::new();
    for s in &tabs {
        let left = Element::from_diagram(alg, Tab::diagram(&tmax, s)?, alg.field.one());
        let mut row = Vec::new();
        for t in &tabs {
            let right = Element::from_diagram(alg, Tab::diagram(t, &tmax)?, alg.field.one());
            let prod = left.mul(alg, &right).reduce_mod_cell_ideal(alg, shape);
            // the reduced product is a multiple of m_{t^λ t^λ}
            let mut val = alg.field.zero();
            let anchor = Tab::diagram(&tmax, &tmax)?;
            for (d, c) in prod.terms() {
                if *d == anchor {
                    val = c.clone();
                } else {
                    return Err(Error::Internal(format!(
                        "Gram product not a multiple of the anchor: extra term {d}"
                    )));
                }
            }
            row.push(val);
        }
        rows.push(row);
    }
    Ok((tabs, rows))
}

/// Left action matrices of the generators on the cell module of `shape`:
/// columns indexed by the standard labels, `g · m_{t, t^max}` expanded
/// modulo the cell ideal.
pub struct CellModule<F: CoeffField> {
    pub shape: CellShape,
    pub basis: Vec<Tab>,
    /// For each generator `(name, matrix)`, `matrix[j][i]` is the
    /// coefficient of basis element `i` in `g · basis[j]`.
    pub actions: Vec<(String, Vec<Vec<F::Elem>>)>,
}

pub fn cell_module<F: CoeffField>(alg: &Algebra<F>, shape: CellShape) -> Result<CellModule<F>> {
    let basis = Tab::all_of_shape(alg.kind, alg.n, shape);
    let tmax = Tab::max_of_shape(alg.kind, alg.n, shape);
    let mut actions = Vec::new();
    for (name, g) in alg.generators() {
        let mut matrix = Vec::new();
        for t in &basis {
            let m = Element::from_diagram(alg, Tab::diagram(t, &tmax)?, alg.field.one());
            let gm = g.mul(alg, &m).reduce_mod_cell_ideal(alg, shape);
            let mut col = vec![alg.field.zero(); basis.len()];
            for (u, v, c) in expand_in_cell(alg, &gm, shape)? {
                if v != tmax {
                    return Err(Error::Internal(format!(
                        "left action moved the column label: {v}"
                    )));
                }
                let idx = basis.iter().position(|x| *x == u).unwrap();
                col[idx] = c;
            }
            matrix.push(col);
        }
        actions.push((name, matrix));
    }
    Ok(CellModule { shape, basis, actions })
}

/// Exact element-level verification of the defining presentation
/// relations in the diagram algebra.
pub fn verify_presentation_relations<F: CoeffField>(alg: &Algebra<F>) -> crate::report::Report {
    use crate::report::Report;
    let mut rep = Report::new();
    let minus_two = -alg.field.gauss(2);
    for i in 1..alg.n {
        let ui = alg.u_elem(i).unwrap();
        rep.check(
            format!("U{i}^2 = -[2]·U{i}"),
            ui.mul(alg, &ui) == ui.scale(&minus_two),
            String::new(),
        );
        for j in 1..alg.n {
            let uj = alg.u_elem(j).unwrap();
            if (i as i64 - j as i64).abs() == 1 {
                rep.check(
                    format!("U{i}·U{j}·U{i} = U{i}"),
                    ui.mul(alg, &uj).mul(alg, &ui) == ui,
                    String::new(),
                );
            } else if (i as i64 - j as i64).abs() > 1 {
                rep.check(
                    format!("U{i}·U{j} = U{j}·U{i}"),
                    ui.mul(alg, &uj) == uj.mul(alg, &ui),
                    String::new(),
                );
            }
        }
    }
    if alg.kind == AlgebraKind::Blob && alg.n >= 1 {
        let e = alg.e_elem().unwrap();
        rep.check("e^2 = e", e.mul(alg, &e) == e, String::new());
        if alg.n >= 2 {
            let u1 = alg.u_elem(1).unwrap();
            let ye = alg.field.y_e();
            rep.check(
                "U1·e·U1 = y_e·U1",
                u1.mul(alg, &e).mul(alg, &u1) == u1.scale(&ye),
                String::new(),
            );
        }
        for i in 2..alg.n {
            let ui = alg.u_elem(i).unwrap();
            rep.check(
                format!("U{i}·e = e·U{i}"),
                ui.mul(alg, &e) == e.mul(alg, &ui),
                String::new(),
            );
        }
        // the rescaled generator: U_0^2 = -[m]·U_0
        let u0 = alg.u0_elem().unwrap();
        let m_gauss = alg.big_m_gauss();
        rep.check(
            "U0^2 = -[m]·U0",
            u0.mul(alg, &u0) == u0.scale(&-m_gauss),
            String::new(),
        );
    }
    if rep.results.is_empty() {
        rep.check("presentation relations (vacuous at this rank)", true, String::new());
    }
    rep
}

/// Left-action matrix of an arbitrary element on the cell module of
/// `shape`: `matrix[j][i]` is the coefficient of basis label `i` in
/// `x · m_{basis[j], tmax}` reduced modulo the cell ideal.
pub fn action_matrix<F: CoeffField>(
    alg: &Algebra<F>,
    shape: CellShape,
    x: &Element<F>,
) -> Result<(Vec<Tab>, Vec<Vec<F::Elem>>)> {
    let basis = Tab::all_of_shape(alg.kind, alg.n, shape);
    let tmax = Tab::max_of_shape(alg.kind, alg.n, shape);
    let mut matrix = Vec::new();
    for t in &basis {
        let m = Element::from_diagram(alg, Tab::diagram(t, &tmax)?, alg.field.one());
        let xm = x.mul(alg, &m).reduce_mod_cell_ideal(alg, shape);
        let mut col = vec![alg.field.zero(); basis.len()];
        for (u, v, c) in expand_in_cell(alg, &xm, shape)? {
            if v != tmax {
                return Err(Error::Internal("left action moved the column label".into()));
            }
            let idx = basis.iter().position(|y| *y == u).unwrap();
            col[idx] = c;
        }
        matrix.push(col);
    }
    Ok((basis, matrix))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::RationalFunction;

    fn rf(p: crate::coeffs::LaurentPoly) -> RationalFunction {
        RationalFunction::from_poly(p)
    }

    #[test]
    fn dims() {
        assert_eq!(Algebra::tl_generic(3).dim(), 5);
        assert_eq!(Algebra::blob_generic(3).dim(), 20);
    }

    #[test]
    fn identity_and_squares() {
        let alg = Algebra::blob_generic(3);
        let one = alg.one();
        let u1 = alg.u_elem(1).unwrap();
        assert_eq!(one.mul(&alg, &u1), u1);
        assert_eq!(u1.mul(&alg, &one), u1);
        // U_1^2 = -[2] U_1
        let sq = u1.mul(&alg, &u1);
        assert_eq!(sq, u1.scale(&-RationalFunction::gauss(2)));
        // e^2 = e
        let e = alg.e_elem().unwrap();
        assert_eq!(e.mul(&alg, &e), e);
        // U_1 e U_1 = y_e U_1
        let ueu = u1.mul(&alg, &e).mul(&alg, &u1);
        assert_eq!(ueu, u1.scale(&RationalFunction::y_e()));
        // U_0^2 = -[m] U_0 where U_0 = -[m] e
        let u0 = alg.u0_elem().unwrap();
        let expect = u0.scale(&-RationalFunction::gauss_big_q());
        assert_eq!(u0.mul(&alg, &u0), expect);
    }

    #[test]
    fn star_properties() {
        let alg = Algebra::blob_generic(3);
        let u1 = alg.u_elem(1).unwrap();
        let u2 = alg.u_elem(2).unwrap();
        let e = alg.e_elem().unwrap();
        assert_eq!(u1.star(), u1);
        assert_eq!(e.star(), e);
        // (xy)* = y* x*
        let x = u1.add(&e.scale(&rf(crate::coeffs::LaurentPoly::qq(1, 0))));
        let y = u2.add(&alg.one());
        assert_eq!(x.mul(&alg, &y).star(), y.star().mul(&alg, &x.star()));
        // involution
        let xy = x.mul(&alg, &y);
        assert_eq!(xy.star().star(), xy);
    }

    #[test]
    fn star_on_cell_basis() {
        // star(m_{s,t}) = m_{t,s} for all pairs, n <= 4
        for n in 1..=4usize {
            let alg = Algebra::blob_generic(n);
            for shape in CellShape::all(alg.kind, n) {
                for s in Tab::all_of_shape(alg.kind, n, shape) {
                    for t in Tab::all_of_shape(alg.kind, n, shape) {
                        let m = Element::from_diagram(
                            &alg,
                            Tab::diagram(&s, &t).unwrap(),
                            alg.field.one(),
                        );
                        let expect = Element::from_diagram(
                            &alg,
                            Tab::diagram(&t, &s).unwrap(),
                            alg.field.one(),
                        );
                        assert_eq!(m.star(), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn mul_associative_spot() {
        let alg = Algebra::blob_generic(3);
        let basis = alg.basis();
        // deterministic pseudo-random triples
        let pick = |i: usize| Element::from_diagram(&alg, basis[i % basis.len()].clone(), alg.field.one());
        for i in 0..6 {
            let (a, b, c) = (pick(3 * i + 1), pick(5 * i + 2), pick(7 * i + 3));
            let left = a.mul(&alg, &b).mul(&alg, &c);
            let right = a.mul(&alg, &b.mul(&alg, &c));
            assert_eq!(left, right);
        }
    }

    #[test]
    fn cell_ideal_reduction() {
        let alg = Algebra::blob_generic(2);
        // L_1-like element: -(Q - Q^{-1}) e + Q
        let e = alg.e_elem().unwrap();
        let l1 = e
            .scale(&-(RationalFunction::qq(0, 1) - RationalFunction::qq(0, -1)))
            .add(&alg.one().scale(&RationalFunction::qq(0, 1)));
        // m_{t t} for shape ((1),(1)) is the decorated cup/cap
        let t = Tab::B(Bitableau::new(2, &[1]).unwrap());
        let m = Element::from_diagram(&alg, Tab::diagram(&t, &t).unwrap(), alg.field.one());
        let shape = CellShape::Blob(0);
        let red = l1.mul(&alg, &m).reduce_mod_cell_ideal(&alg, shape);
        // eigenvalue is the content Q^{-1} of entry 1 of the maximal tableau
        assert_eq!(red, m.scale(&RationalFunction::qq(0, -1)));
        // an element already in the cell is untouched
        assert_eq!(m.reduce_mod_cell_ideal(&alg, shape), m);
        // the filtration kills ideal elements multiplied by anything
        let ideal_elem = Element::from_diagram(
            &alg,
            Tab::diagram(
                &Tab::B(Bitableau::new(2, &[]).unwrap()),
                &Tab::B(Bitableau::new(2, &[]).unwrap()),
            )
            .unwrap(),
            alg.field.one(),
        );
        // shape f=2 is NOT greater than f=0... the other way: f=0 > f=2
        assert!(CellShape::Blob(0).gt(&CellShape::Blob(2)));
        let prod = ideal_elem.mul(&alg, &m);
        // anything in the f=0 ideal stays in shapes > f=2
        for (d, _) in prod.reduce_mod_cell_ideal(&alg, CellShape::Blob(2)).terms() {
            assert!(!CellShape::of_diagram(alg.kind, d).gt(&CellShape::Blob(2)));
        }
    }

    #[test]
    fn gram_small() {
        // shape ((n),(0)): 1x1 matrix [1]
        let alg = Algebra::blob_generic(3);
        let (tabs, g) = gram_matrix(&alg, CellShape::Blob(3)).unwrap();
        assert_eq!(tabs.len(), 1);
        assert!(g[0][0] == RationalFunction::one());
        // b_2, shape ((1),(1)): diagonal entry y_e at the maximal tableau
        let alg = Algebra::blob_generic(2);
        let (tabs, g) = gram_matrix(&alg, CellShape::Blob(0)).unwrap();
        let tmax = Tab::max_of_shape(alg.kind, 2, CellShape::Blob(0));
        let idx = tabs.iter().position(|t| *t == tmax).unwrap();
        assert_eq!(g[idx][idx], RationalFunction::y_e());
    }

    #[test]
    fn gram_symmetry() {
        for n in 1..=4usize {
            for alg in [Algebra::blob_generic(n), Algebra::tl_generic(n)] {
                for shape in CellShape::all(alg.kind, n) {
                    let (_, g) = gram_matrix(&alg, shape).unwrap();
                    for i in 0..g.len() {
                        for j in 0..g.len() {
                            assert_eq!(g[i][j], g[j][i]);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn gram_bilinear_identity() {
        // m_{a,s} m_{t,b} = <s,t> m_{a,b} mod ideal, for all a, b in a
        // small cell
        let alg = Algebra::blob_generic(3);
        let shape = CellShape::Blob(1);
        let tabs = Tab::all_of_shape(alg.kind, 3, shape);
        let (gt, g) = gram_matrix(&alg, shape).unwrap();
        for a in &tabs {
            for b in &tabs {
                for (i, s) in gt.iter().enumerate() {
                    for (j, t) in gt.iter().enumerate() {
                        let left = Element::from_diagram(
                            &alg,
                            Tab::diagram(a, s).unwrap(),
                            alg.field.one(),
                        );
                        let right = Element::from_diagram(
                            &alg,
                            Tab::diagram(t, b).unwrap(),
                            alg.field.one(),
                        );
                        let prod =
                            left.mul(&alg, &right).reduce_mod_cell_ideal(&alg, shape);
                        let expect = Element::from_diagram(
                            &alg,
                            Tab::diagram(a, b).unwrap(),
                            g[i][j].clone(),
                        );
                        assert_eq!(prod, expect, "a={a} s={s} t={t} b={b}");
                    }
                }
            }
        }
    }

    #[test]
    fn cell_module_dims() {
        // dim C^λ = C(n, b) for all shapes, n <= 6
        for n in 1..=6usize {
            let alg = Algebra::blob_generic(n);
            for shape in OneLineBipartition::all(n) {
                let cm = cell_module(&alg, CellShape::Blob(shape.f())).unwrap();
                let mut c = 1u64;
                for i in 0..shape.b {
                    c = c * (n as u64 - i as u64) / (i as u64 + 1);
                }
                assert_eq!(cm.basis.len() as u64, c);
            }
        }
    }

    #[test]
    fn cell_module_satisfies_relations() {
        // generators satisfy the defining relations in every cell module,
        // n <= 4 (checked via matrix products over the generic field)
        for n in 2..=4usize {
            let alg = Algebra::blob_generic(n);
            for shape in CellShape::all(alg.kind, n) {
                let cm = cell_module(&alg, shape).unwrap();
                let dim = cm.basis.len();
                let get = |name: &str| -> Vec<Vec<RationalFunction>> {
                    cm.actions.iter().find(|(g, _)| g == name).unwrap().1.clone()
                };
                let matmul = |a: &Vec<Vec<RationalFunction>>,
                              b: &Vec<Vec<RationalFunction>>|
                 -> Vec<Vec<RationalFunction>> {
                    // column-major composition: (a∘b)[j] = a * b[j]
                    (0..dim)
                        .map(|j| {
                            let mut col = vec![RationalFunction::zero(); dim];
                            for (k, bkj) in b[j].iter().enumerate() {
                                if bkj.is_zero() {
                                    continue;
                                }
                                for (i, aik) in a[k].iter().enumerate() {
                                    col[i] = col[i].clone()
                                        + aik.clone() * bkj.clone();
                                }
                            }
                            col
                        })
                        .collect()
                };
                let scale_mat = |a: &Vec<Vec<RationalFunction>>, c: &RationalFunction| {
                    a.iter()
                        .map(|col| col.iter().map(|x| x.clone() * c.clone()).collect())
                        .collect::<Vec<Vec<RationalFunction>>>()
                };
                let e = get("e");
                // e^2 = e
                assert_eq!(matmul(&e, &e), e);
                for i in 1..n {
                    let ui = get(&format!("U{i}"));
                    // U_i^2 = -[2] U_i
                    assert_eq!(
                        matmul(&ui, &ui),
                        scale_mat(&ui, &-RationalFunction::gauss(2))
                    );
                    for j in 1..n {
                        let uj = get(&format!("U{j}"));
                        if (i as i64 - j as i64).abs() == 1 {
                            // U_i U_j U_i = U_i
                            assert_eq!(matmul(&matmul(&ui, &uj), &ui), ui);
                        } else if (i as i64 - j as i64).abs() > 1 {
                            assert_eq!(matmul(&ui, &uj), matmul(&uj, &ui));
                        }
                    }
                    if i >= 2 {
                        // U_i e = e U_i
                        assert_eq!(matmul(&ui, &e), matmul(&e, &ui));
                    }
                }
                // U_1 e U_1 = y_e U_1
                let u1 = get("U1");
                assert_eq!(
                    matmul(&matmul(&u1, &e), &u1),
                    scale_mat(&u1, &RationalFunction::y_e())
                );
            }
        }
    }

    #[test]
    fn cellularity_axiom_coefficients_independent_of_column() {
        // for each generator g and row label s, the coefficients in
        // g·m_{s,t} mod ideal do not depend on t; exhaustive n <= 3 here
        // (n = 4 runs in the acceptance suite)
        for n in 2..=3usize {
            for alg in [Algebra::blob_generic(n), Algebra::tl_generic(n)] {
                for shape in CellShape::all(alg.kind, n) {
                    let tabs = Tab::all_of_shape(alg.kind, n, shape);
                    for (_, g) in alg.generators() {
                        for s in &tabs {
                            let mut reference: Option<Vec<(Tab, RationalFunction)>> = None;
                            for t in &tabs {
                                let m = Element::from_diagram(
                                    &alg,
                                    Tab::diagram(s, t).unwrap(),
                                    alg.field.one(),
                                );
                                let gm =
                                    g.mul(&alg, &m).reduce_mod_cell_ideal(&alg, shape);
                                let mut coeffs: Vec<(Tab, RationalFunction)> =
                                    expand_in_cell(&alg, &gm, shape)
                                        .unwrap()
                                        .into_iter()
                                        .map(|(u, v, c)| {
                                            assert_eq!(v, *t, "column label moved");
                                            (u, c)
                                        })
                                        .collect();
                                coeffs.sort_by(|a, b| a.0.cmp(&b.0));
                                match &reference {
                                    None => reference = Some(coeffs),
                                    Some(r) => assert_eq!(r, &coeffs),
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
