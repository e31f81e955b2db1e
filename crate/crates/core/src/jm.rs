//! Jucys-Murphy elements of the two quotients, their commutation rules and
//! triangular action on the cellular basis, and the seminormal layer
//! (`F_t`, `f_{st}`, `gamma_t`) over the generic field.

use std::collections::BTreeMap;

use crate::algebra::{expand_in_cell, Algebra, AlgebraKind, CellShape, Element, Tab};
use crate::coeffs::{CoeffField, GenericField, RationalFunction};
use crate::report::Report;
use crate::{Error, Result};

/// The commuting family `L_1, ..., L_n`.
pub struct JmFamily<F: CoeffField> {
    pub elements: Vec<Element<F>>,
}

impl<F: CoeffField> JmFamily<F> {
    pub fn get(&self, k: usize) -> &Element<F> {
        &self.elements[k - 1]
    }
}

/// Build `L_k`. In the blob algebra
/// `L_k = (U_{k-1}+q)...(U_1+q) ((q-q^{-1})U_0 + Q) (U_1+q)...(U_{k-1}+q)`;
/// in TL `L_1 = 1` and `L_{k+1} = (U_k + q^{-1}) L_k (U_k + q^{-1})`,
/// the image of the Hecke recursion under `T_i -> -qU_i - 1`.
pub fn jm_element<F: CoeffField>(alg: &Algebra<F>, k: usize) -> Result<Element<F>> {
    if k == 0 || k > alg.n {
        return Err(Error::IndexOutOfRange(format!("L_{k} needs 1 <= k <= {}", alg.n)));
    }
    Ok(jm_family(alg)?.elements.swap_remove(k - 1))
}

pub fn jm_family<F: CoeffField>(alg: &Algebra<F>) -> Result<JmFamily<F>> {
    let q = alg.field.q();
    let mut elements = Vec::with_capacity(alg.n);
    let l1 = match alg.kind {
        AlgebraKind::Blob => {
            // (q - q^{-1}) U_0 + Q, with U_0 = -[m] e
            let u0 = alg.u0_elem()?;
            let coeff = alg.field.qq(1, 0) - alg.field.qq(-1, 0);
            u0.scale(&coeff).add(&alg.one().scale(&alg.field.big_q()))
        }
        AlgebraKind::Tl => alg.one(),
    };
    elements.push(l1);
    for k in 1..alg.n {
        let prev = elements.last().unwrap();
        let conj = match alg.kind {
            AlgebraKind::Blob => alg.u_elem(k)?.add(&alg.one().scale(&q)),
            AlgebraKind::Tl => {
                let qinv = alg.field.qq(-1, 0);
                alg.u_elem(k)?.add(&alg.one().scale(&qinv))
            }
        };
        elements.push(conj.mul(alg, prev).mul(alg, &conj));
    }
    Ok(JmFamily { elements })
}

/// Contents `c_t(k)`: for the blob algebra the closed formula
/// `q^{2(c-1)} Q^{+-1}`; for TL calibrated from the triangular action of
/// `L_k` on the cell modules (the diagonal coefficient), so that no sign
/// or normalization convention has to be guessed.
pub struct ContentTable<F: CoeffField> {
    map: BTreeMap<(Tab, usize), F::Elem>,
}

impl<F: CoeffField> ContentTable<F> {
    pub fn get(&self, t: &Tab, k: usize) -> &F::Elem {
        &self.map[&(*t, k)]
    }

    /// Distinct content values occurring at position `k` over all labels.
    pub fn values_at(&self, k: usize) -> Vec<F::Elem> {
        let mut out: Vec<F::Elem> = Vec::new();
        for ((_, pos), c) in &self.map {
            if *pos == k && !out.contains(c) {
                out.push(c.clone());
            }
        }
        out
    }

    pub fn labels(&self) -> Vec<Tab> {
        let mut out: Vec<Tab> = Vec::new();
        for (t, _) in self.map.keys() {
            if !out.contains(t) {
                out.push(*t);
            }
        }
        out
    }
}

pub fn content_table<F: CoeffField>(
    alg: &Algebra<F>,
    jm: &JmFamily<F>,
) -> Result<ContentTable<F>> {
    let mut map = BTreeMap::new();
    match alg.kind {
        AlgebraKind::Blob => {
            for t in Tab::all_of_size(alg.kind, alg.n) {
                let Tab::B(bt) = t else { unreachable!() };
                for k in 1..=alg.n {
                    map.insert((t, k), bt.content(&alg.field, k));
                }
            }
        }
        AlgebraKind::Tl => {
            for shape in CellShape::all(alg.kind, alg.n) {
                let tmax = Tab::max_of_shape(alg.kind, alg.n, shape);
                for t in Tab::all_of_shape(alg.kind, alg.n, shape) {
                    let m = Element::from_diagram(
                        alg,
                        Tab::diagram(&t, &tmax)?,
                        alg.field.one(),
                    );
                    for k in 1..=alg.n {
                        let red = jm.get(k).mul(alg, &m).reduce_mod_cell_ideal(alg, shape);
                        let mut diag = alg.field.zero();
                        for (u, v, c) in expand_in_cell(alg, &red, shape)? {
                            if u == t && v == tmax {
                                diag = c;
                            }
                        }
                        map.insert((t, k), diag);
                    }
                }
            }
        }
    }
    Ok(ContentTable { map })
}

/// Exact checks of the commutation rules between the `L_k` and the `U_i`,
/// plus pairwise commutativity and `*`-symmetry.
pub fn verify_commutation<F: CoeffField>(alg: &Algebra<F>) -> Result<Report> {
    let jm = jm_family(alg)?;
    let mut rep = Report::new();
    let q = alg.field.q();
    let qinv = alg.field.qq(-1, 0);
    for j in 1..=alg.n {
        for k in j + 1..=alg.n {
            let a = jm.get(j).mul(alg, jm.get(k));
            let b = jm.get(k).mul(alg, jm.get(j));
            rep.check(format!("L{j}·L{k} = L{k}·L{j}"), a == b, String::new());
        }
    }
    for k in 1..=alg.n {
        let s = jm.get(k).star();
        rep.check(format!("L{k}* = L{k}"), s == *jm.get(k), String::new());
        for i in 1..alg.n {
            if k == i || k == i + 1 {
                continue;
            }
            let u = alg.u_elem(i)?;
            let a = jm.get(k).mul(alg, &u);
            let b = u.mul(alg, jm.get(k));
            rep.check(format!("L{k}·U{i} = U{i}·L{k}"), a == b, String::new());
        }
    }
    for k in 1..alg.n {
        let u = alg.u_elem(k)?;
        let u_plus_q = u.add(&alg.one().scale(&q));
        let u_plus_qinv = u.add(&alg.one().scale(&qinv));
        match alg.kind {
            AlgebraKind::Blob => {
                // (U_k + q^{-1}) L_{k+1} = L_k (U_k + q)
                let a = u_plus_qinv.mul(alg, jm.get(k + 1));
                let b = jm.get(k).mul(alg, &u_plus_q);
                rep.check(
                    format!("(U{k}+q⁻¹)·L{} = L{k}·(U{k}+q)", k + 1),
                    a == b,
                    String::new(),
                );
                // L_{k+1} (U_k + q^{-1}) = (U_k + q) L_k
                let a = jm.get(k + 1).mul(alg, &u_plus_qinv);
                let b = u_plus_q.mul(alg, jm.get(k));
                rep.check(
                    format!("L{}·(U{k}+q⁻¹) = (U{k}+q)·L{k}", k + 1),
                    a == b,
                    String::new(),
                );
            }
            AlgebraKind::Tl => {
                // image of the same Hecke rules under T_i -> -qU_i - 1:
                // (U_k + q^{-1}) L_k = L_{k+1} (U_k + q)
                let a = u_plus_qinv.mul(alg, jm.get(k));
                let b = jm.get(k + 1).mul(alg, &u_plus_q);
                rep.check(
                    format!("(U{k}+q⁻¹)·L{k} = L{}·(U{k}+q)", k + 1),
                    a == b,
                    String::new(),
                );
                let a = jm.get(k).mul(alg, &u_plus_qinv);
                let b = u_plus_q.mul(alg, jm.get(k + 1));
                rep.check(
                    format!("L{k}·(U{k}+q⁻¹) = (U{k}+q)·L{}", k + 1),
                    a == b,
                    String::new(),
                );
            }
        }
    }
    if rep.results.is_empty() {
        rep.check("commutation (vacuous at this rank)", true, String::new());
    }
    Ok(rep)
}

/// Triangularity of the Jucys-Murphy action: for every shape, every pair
/// `(s,t)` and every `k`,
/// `L_k m_{s,t} = c_s(k) m_{s,t} + (terms m_{u,t} with u > s)  mod ideal`.
pub fn verify_triangularity<F: CoeffField>(alg: &Algebra<F>) -> Result<Report> {
    let jm = jm_family(alg)?;
    let contents = content_table(alg, &jm)?;
    let mut rep = Report::new();
    for shape in CellShape::all(alg.kind, alg.n) {
        let tabs = Tab::all_of_shape(alg.kind, alg.n, shape);
        let tmax = Tab::max_of_shape(alg.kind, alg.n, shape);
        let mut ok = true;
        let mut detail = String::new();
        'outer: for s in &tabs {
            for t in &tabs {
                let m =
                    Element::from_diagram(alg, Tab::diagram(s, t)?, alg.field.one());
                for k in 1..=alg.n {
                    let red = jm.get(k).mul(alg, &m).reduce_mod_cell_ideal(alg, shape);
                    for (u, v, c) in expand_in_cell(alg, &red, shape)? {
                        if v != *t {
                            ok = false;
                            detail = format!("column label moved: {v} for (s,t)=({s},{t})");
                            break 'outer;
                        }
                        if u == *s {
                            if c != *contents.get(s, k) {
                                ok = false;
                                detail = format!(
                                    "diagonal of L{k} on ({s},{t}) is {c}, expected {}",
                                    contents.get(s, k)
                                );
                                break 'outer;
                            }
                        } else if !u.order_gt(s)? {
                            ok = false;
                            detail =
                                format!("off-diagonal label {u} does not dominate {s} (L{k})");
                            break 'outer;
                        }
                    }
                    // maximal row: pure eigenvalue, no upper terms
                    if s == &tmax && t == &tmax {
                        let pure = m.scale(contents.get(s, k));
                        if red != pure {
                            ok = false;
                            detail = format!("L{k} on the maximal pair is not a pure eigenvalue");
                            break 'outer;
                        }
                    }
                }
            }
        }
        rep.check(format!("triangularity on cell {shape}"), ok, detail);
    }
    Ok(rep)
}

/// Sparse left/right regular action of the Jucys-Murphy family, used to
/// apply interpolation factors to single basis vectors without ever
/// multiplying two large algebra elements.
struct JmAction {
    basis: Vec<crate::diagrams::BlobDiagram>,
    index: BTreeMap<crate::diagrams::BlobDiagram, usize>,
    /// `left[k-1][j]` = expansion of `L_k * basis[j]`.
    left: Vec<Vec<Vec<(usize, RationalFunction)>>>,
    /// `right[k-1][j]` = expansion of `basis[j] * L_k`.
    right: Vec<Vec<Vec<(usize, RationalFunction)>>>,
}

type Vect = Vec<RationalFunction>;

impl JmAction {
    fn build(alg: &Algebra<GenericField>, jm: &JmFamily<GenericField>) -> Self {
        let basis = alg.basis();
        let index: BTreeMap<_, _> = basis.iter().cloned().zip(0..).collect();
        let expand = |x: &Element<GenericField>| -> Vec<(usize, RationalFunction)> {
            x.terms().map(|(d, c)| (index[d], c.clone())).collect()
        };
        let mut left = Vec::new();
        let mut right = Vec::new();
        for k in 1..=alg.n {
            let lk = jm.get(k);
            let mut lcols = Vec::with_capacity(basis.len());
            let mut rcols = Vec::with_capacity(basis.len());
            for d in &basis {
                let e = Element::from_diagram(alg, d.clone(), alg.field.one());
                lcols.push(expand(&lk.mul(alg, &e)));
                rcols.push(expand(&e.mul(alg, lk)));
            }
            left.push(lcols);
            right.push(rcols);
        }
        JmAction { basis, index, left, right }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn unit_vector(&self, d: &crate::diagrams::BlobDiagram) -> Vect {
        let mut v = vec![RationalFunction::zero(); self.dim()];
        v[self.index[d]] = RationalFunction::one();
        v
    }

    /// `v := (L_k·v - c·v) / (ct - c)` (left) .
    fn apply_left_factor(&self, v: &Vect, k: usize, c: &RationalFunction, ct: &RationalFunction) -> Vect {
        let mut out = vec![RationalFunction::zero(); self.dim()];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, a) in &self.left[k - 1][j] {
                out[*i] = out[*i].clone() + a.clone() * x.clone();
            }
            out[j] = out[j].clone() - c.clone() * x.clone();
        }
        let s = (ct.clone() - c.clone()).inv().expect("separated contents");
        for x in out.iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * s.clone();
            }
        }
        out
    }

    fn apply_right_factor(&self, v: &Vect, k: usize, c: &RationalFunction, ct: &RationalFunction) -> Vect {
        let mut out = vec![RationalFunction::zero(); self.dim()];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, a) in &self.right[k - 1][j] {
                out[*i] = out[*i].clone() + a.clone() * x.clone();
            }
            out[j] = out[j].clone() - c.clone() * x.clone();
        }
        let s = (ct.clone() - c.clone()).inv().expect("separated contents");
        for x in out.iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * s.clone();
            }
        }
        out
    }

    fn to_element(&self, _alg: &Algebra<GenericField>, v: &Vect) -> Element<GenericField> {
        let mut out = Element::zero();
        for (j, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.add_term(self.basis[j].clone(), c.clone());
            }
        }
        out
    }
}

/// The seminormal layer over `K`: the interpolation elements `F_t`, the
/// basis `f_{st} = F_s m_{st} F_t` and the scalars `gamma_t` with
/// `f_tt^2 = gamma_t f_tt`.
pub struct SeminormalData {
    pub alg: Algebra<GenericField>,
    pub tabs: Vec<Tab>,
    action: JmAction,
    gamma: BTreeMap<Tab, RationalFunction>,
    contents: ContentTable<GenericField>,
}

impl SeminormalData {
    pub fn gamma(&self, t: &Tab) -> &RationalFunction {
        &self.gamma[t]
    }

    pub fn content(&self, t: &Tab, k: usize) -> &RationalFunction {
        self.contents.get(t, k)
    }

    fn f_pair_vec(&self, s: &Tab, t: &Tab) -> Result<Vect> {
        let seed = Tab::diagram(s, t)?;
        let mut v = self.action.unit_vector(&seed);
        for k in 1..=self.alg.n {
            let cs = self.contents.get(s, k).clone();
            for c in self.contents.values_at(k) {
                if c != cs {
                    v = self.action.apply_left_factor(&v, k, &c, &cs);
                }
            }
            let ct = self.contents.get(t, k).clone();
            for c in self.contents.values_at(k) {
                if c != ct {
                    v = self.action.apply_right_factor(&v, k, &c, &ct);
                }
            }
        }
        Ok(v)
    }

    /// `f_{st} = F_s m_{st} F_t`.
    pub fn f_pair(&self, s: &Tab, t: &Tab) -> Result<Element<GenericField>> {
        Ok(self.action.to_element(&self.alg, &self.f_pair_vec(s, t)?))
    }

    /// The interpolation element `F_t` itself (the factors applied to 1).
    pub fn f_of(&self, t: &Tab) -> Element<GenericField> {
        let mut v = self.action.unit_vector(&crate::diagrams::BlobDiagram::identity(self.alg.n));
        for k in 1..=self.alg.n {
            let ct = self.contents.get(t, k).clone();
            for c in self.contents.values_at(k) {
                if c != ct {
                    v = self.action.apply_left_factor(&v, k, &c, &ct);
                }
            }
        }
        self.action.to_element(&self.alg, &v)
    }

    /// `f_tt / gamma_t`, the orthogonal idempotent attached to `t`.
    pub fn idempotent(&self, t: &Tab) -> Result<Element<GenericField>> {
        Ok(self.f_pair(t, t)?.scale(&self.gamma[t].inv().unwrap()))
    }
}

pub fn seminormal(alg: &Algebra<GenericField>) -> Result<SeminormalData> {
    let jm = jm_family(alg)?;
    let contents = content_table(alg, &jm)?;
    let tabs = Tab::all_of_size(alg.kind, alg.n);
    // separation: distinct labels must have distinct content vectors
    for (i, s) in tabs.iter().enumerate() {
        for t in tabs.iter().skip(i + 1) {
            if (1..=alg.n).all(|k| contents.get(s, k) == contents.get(t, k)) {
                return Err(Error::SeparationFailure(format!(
                    "labels {s} and {t} share all contents"
                )));
            }
        }
    }
    let action = JmAction::build(alg, &jm);
    let mut data = SeminormalData {
        alg: alg.clone(),
        tabs: tabs.clone(),
        action,
        gamma: BTreeMap::new(),
        contents,
    };
    // gamma_t from f_tt^2 = gamma_t f_tt, extracted at an anchor diagram
    // and cross-checked at a second one
    for t in &tabs {
        let v = data.f_pair_vec(t, t)?;
        let w = data.action.to_element(alg, &v);
        let ratio_at = |d0: &crate::diagrams::BlobDiagram, c0: &RationalFunction| {
            let mut acc = RationalFunction::zero();
            let minus_two = -alg.field.gauss(2);
            let ye = alg.field.y_e();
            for (d1, c1) in w.terms() {
                for (d2, c2) in w.terms() {
                    let cat = d1.concat(d2).expect("same rank");
                    if cat.diagram != *d0 {
                        continue;
                    }
                    let mut c = c1.clone() * c2.clone();
                    for _ in 0..cat.undecorated_loops {
                        c = c * minus_two.clone();
                    }
                    for _ in 0..cat.decorated_loops {
                        c = c * ye.clone();
                    }
                    acc = acc + c;
                }
            }
            acc * c0.inv().expect("anchor coefficient nonzero")
        };
        let mut it = w.terms();
        let (d0, c0) = it
            .next()
            .ok_or_else(|| Error::Internal(format!("f_tt vanished for {t}")))?;
        let g = ratio_at(d0, c0);
        if let Some((d1, c1)) = it.next() {
            if ratio_at(d1, c1) != g {
                return Err(Error::Internal(format!(
                    "f_tt^2 is not a scalar multiple of f_tt for {t}"
                )));
            }
        }
        if g.is_zero() {
            return Err(Error::Internal(format!("gamma vanished for {t}")));
        }
        data.gamma.insert(*t, g);
    }
    Ok(data)
}

/// Order on same-shape pairs extended to all pairs: strictly greater shape
/// wins; within a shape both coordinates must weakly dominate.
pub fn pair_gt(u: &Tab, v: &Tab, s: &Tab, t: &Tab) -> bool {
    let su = u.shape();
    let ss = s.shape();
    if su != ss {
        return su.gt(&ss);
    }
    u.order_geq(s).unwrap() && v.order_geq(t).unwrap() && (u != s || v != t)
}
