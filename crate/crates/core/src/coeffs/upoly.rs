//! Dense univariate/bivariate polynomial helpers over the rationals,
//! used to compute canonical forms (gcd reduction) of rational functions
//! in `q` and `Q`. Gcds run over the integers with primitive polynomial
//! remainder sequences, so coefficient growth stays tame.

use num::bigint::BigInt;
use num::integer::Integer;
use num::{BigRational, One, Signed, Zero};

/// Dense univariate polynomial over `Q`, ascending coefficients, no
/// trailing zeros.
pub type UniPoly = Vec<BigRational>;

pub fn u_trim(p: &mut UniPoly) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

pub fn u_is_zero(p: &UniPoly) -> bool {
    p.is_empty()
}

pub fn u_one() -> UniPoly {
    vec![BigRational::one()]
}

pub fn u_add(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    u_trim(&mut out);
    out
}

pub fn u_neg(a: &UniPoly) -> UniPoly {
    a.iter().map(|c| -c.clone()).collect()
}

pub fn u_sub(a: &UniPoly, b: &UniPoly) -> UniPoly {
    u_add(a, &u_neg(b))
}

pub fn u_mul(a: &UniPoly, b: &UniPoly) -> UniPoly {
    if u_is_zero(a) || u_is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca.clone() * cb.clone();
        }
    }
    u_trim(&mut out);
    out
}

pub fn u_scale(a: &UniPoly, c: &BigRational) -> UniPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x.clone() * c.clone()).collect()
}

/// Division with remainder in `Q[x]`; returns `(quot, rem)`.
pub fn u_divmod(a: &UniPoly, b: &UniPoly) -> (UniPoly, UniPoly) {
    assert!(!u_is_zero(b), "division by zero polynomial");
    let mut rem = a.clone();
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while !u_is_zero(&rem) && rem.len() - 1 >= db {
        let dr = rem.len() - 1;
        let c = rem.last().unwrap().clone() / lb.clone();
        let shift = dr - db;
        quot[shift] = c.clone();
        for (j, cb) in b.iter().enumerate() {
            let v = rem[shift + j].clone() - c.clone() * cb.clone();
            rem[shift + j] = v;
        }
        u_trim(&mut rem);
        if dr == db {
            break;
        }
    }
    u_trim(&mut quot);
    (quot, rem)
}

/// Exact division (panics if the division is not exact).
pub fn u_div_exact(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let (q, r) = u_divmod(a, b);
    assert!(u_is_zero(&r), "inexact univariate division");
    q
}

// ---- integer univariate layer (for fast gcds) ----

type ZPoly = Vec<BigInt>;

fn z_trim(p: &mut ZPoly) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn z_content(p: &ZPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn z_primitive(mut p: ZPoly) -> ZPoly {
    let g = z_content(&p);
    if g.is_zero() || g.is_one() {
        return p;
    }
    for c in p.iter_mut() {
        *c = &*c / &g;
    }
    p
}

/// Pseudo-remainder: `lead(b)^(da-db+1) * a mod b` over `Z[x]`.
fn z_prem(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let mut rem = a.clone();
    while !rem.is_empty() && rem.len() - 1 >= db {
        let dr = rem.len() - 1;
        let lr = rem.last().unwrap().clone();
        let shift = dr - db;
        for c in rem.iter_mut() {
            *c = &*c * &lb;
        }
        for (j, cb) in b.iter().enumerate() {
            rem[shift + j] = &rem[shift + j] - &(&lr * cb);
        }
        z_trim(&mut rem);
        if dr == db {
            break;
        }
    }
    rem
}

fn rat_to_z(p: &UniPoly) -> ZPoly {
    // scale by the lcm of denominators; the scalar is irrelevant for gcds
    let mut l = BigInt::one();
    for c in p {
        l = l.lcm(c.denom());
    }
    p.iter().map(|c| c.numer() * (&l / c.denom())).collect()
}

fn z_to_monic_rat(p: &ZPoly) -> UniPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let lead = p.last().unwrap().clone();
    p.iter().map(|c| BigRational::new(c.clone(), lead.clone())).collect()
}

/// Monic gcd in `Q[x]`, computed by a primitive PRS over `Z[x]`.
pub fn u_gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
    if u_is_zero(a) {
        return if u_is_zero(b) {
            Vec::new()
        } else {
            z_to_monic_rat(&rat_to_z(b))
        };
    }
    if u_is_zero(b) {
        return z_to_monic_rat(&rat_to_z(a));
    }
    let mut x = z_primitive(rat_to_z(a));
    let mut y = z_primitive(rat_to_z(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = z_primitive(z_prem(&x, &y));
        x = y;
        y = r;
    }
    z_to_monic_rat(&x)
}

/// Dense bivariate polynomial: entry `i` is the `Q`-coefficient of `q^i`.
/// No trailing zero entries; zero poly is the empty vector.
pub type BiPoly = Vec<UniPoly>;

pub fn b_trim(p: &mut BiPoly) {
    while p.last().map_or(false, |c| u_is_zero(c)) {
        p.pop();
    }
}

pub fn b_is_zero(p: &BiPoly) -> bool {
    p.is_empty()
}

#[cfg_attr(not(test), allow(dead_code))]
pub fn b_mul(a: &BiPoly, b: &BiPoly) -> BiPoly {
    if b_is_zero(a) || b_is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![Vec::new(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if u_is_zero(ca) {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] = u_add(&out[i + j], &u_mul(ca, cb));
        }
    }
    b_trim(&mut out);
    out
}

// ---- integer bivariate layer ----

type BiZ = Vec<ZPoly>;

fn bi_rat_to_z(p: &BiPoly) -> BiZ {
    let mut l = BigInt::one();
    for c in p {
        for x in c {
            l = l.lcm(x.denom());
        }
    }
    p.iter()
        .map(|c| c.iter().map(|x| x.numer() * (&l / x.denom())).collect())
        .collect()
}

fn bz_trim(p: &mut BiZ) {
    while p.last().map_or(false, |c| c.is_empty()) {
        p.pop();
    }
}

/// Content in `Z[Q]` (primitive, positive leading coefficient).
fn bz_content(p: &BiZ) -> ZPoly {
    let mut g: ZPoly = Vec::new();
    for c in p {
        if c.is_empty() {
            continue;
        }
        g = zz_gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

/// Primitive gcd over `Z[x]` of integer polys.
fn zz_gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() {
        let mut r = z_primitive(b.clone());
        if r.last().map_or(false, |c| c.is_negative()) {
            for c in r.iter_mut() {
                *c = -&*c;
            }
        }
        return r;
    }
    if b.is_empty() {
        return zz_gcd(&Vec::new(), a);
    }
    let ca = z_content(a);
    let cb = z_content(b);
    let cg = ca.gcd(&cb);
    let mut x = z_primitive(a.clone());
    let mut y = z_primitive(b.clone());
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = z_primitive(z_prem(&x, &y));
        x = y;
        y = r;
    }
    if x.last().map_or(false, |c| c.is_negative()) {
        for c in x.iter_mut() {
            *c = -&*c;
        }
    }
    for c in x.iter_mut() {
        *c = &*c * &cg;
    }
    x
}

/// Exact division of integer univariate polys when `b | a` over `Q[x]`
/// and the quotient is integer (true in the primitive PRS uses below).
fn z_div_exact(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let ar: UniPoly = a.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    let br: UniPoly = b.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    let q = u_div_exact(&ar, &br);
    q.iter()
        .map(|c| {
            assert!(c.denom().is_one(), "non-integer quotient");
            c.numer().clone()
        })
        .collect()
}

fn bz_primitive(p: BiZ) -> BiZ {
    let c = bz_content(&p);
    if c.len() == 1 && c[0].is_one() {
        return p;
    }
    p.into_iter()
        .map(|x| if x.is_empty() { x } else { z_div_exact(&x, &c) })
        .collect()
}

/// Pseudo-remainder in `(Z[Q])[q]`.
fn bz_prem(a: &BiZ, b: &BiZ) -> BiZ {
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let mut rem = a.clone();
    let zp_mul = |x: &ZPoly, y: &ZPoly| -> ZPoly {
        if x.is_empty() || y.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); x.len() + y.len() - 1];
        for (i, cx) in x.iter().enumerate() {
            if cx.is_zero() {
                continue;
            }
            for (j, cy) in y.iter().enumerate() {
                out[i + j] = &out[i + j] + &(cx * cy);
            }
        }
        z_trim(&mut out);
        out
    };
    let zp_sub = |x: &ZPoly, y: &ZPoly| -> ZPoly {
        let mut out = vec![BigInt::zero(); x.len().max(y.len())];
        for (i, c) in x.iter().enumerate() {
            out[i] = c.clone();
        }
        for (i, c) in y.iter().enumerate() {
            out[i] = &out[i] - c;
        }
        z_trim(&mut out);
        out
    };
    while !rem.is_empty() && rem.len() - 1 >= db {
        let dr = rem.len() - 1;
        let lr = rem.last().unwrap().clone();
        let shift = dr - db;
        for c in rem.iter_mut() {
            *c = zp_mul(c, &lb);
        }
        for (j, cb) in b.iter().enumerate() {
            rem[shift + j] = zp_sub(&rem[shift + j], &zp_mul(&lr, cb));
        }
        bz_trim(&mut rem);
        if dr == db {
            break;
        }
    }
    rem
}

/// Gcd in `Q[q,Q]` via content extraction and a primitive PRS in `q`,
/// normalized so that the leading coefficient (in `q`, then `Q`) is 1.
pub fn b_gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    if b_is_zero(a) {
        return normalize_lead(b.clone());
    }
    if b_is_zero(b) {
        return normalize_lead(a.clone());
    }
    let az = bi_rat_to_z(a);
    let bz = bi_rat_to_z(b);
    let ca = bz_content(&az);
    let cb = bz_content(&bz);
    let cg = zz_gcd(&ca, &cb);
    let mut x = bz_primitive(az);
    let mut y = bz_primitive(bz);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = bz_prem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { bz_primitive(r) };
    }
    // gcd = cg * primitive part of x
    let g: BiPoly = x
        .iter()
        .map(|c| {
            let zz: ZPoly = if c.is_empty() {
                Vec::new()
            } else {
                let mut out = vec![BigInt::zero(); c.len() + cg.len() - 1];
                for (i, cx) in c.iter().enumerate() {
                    for (j, cy) in cg.iter().enumerate() {
                        out[i + j] = &out[i + j] + &(cx * cy);
                    }
                }
                out
            };
            zz.iter().map(|v| BigRational::from_integer(v.clone())).collect()
        })
        .collect();
    normalize_lead(g)
}

/// Scale so the leading coefficient (highest `q`-power, then highest
/// `Q`-power) equals 1.
pub fn normalize_lead(mut g: BiPoly) -> BiPoly {
    b_trim(&mut g);
    if b_is_zero(&g) {
        return g;
    }
    let lead = g.last().unwrap().last().unwrap().clone();
    if lead.is_one() {
        return g;
    }
    let inv = lead.recip();
    for c in g.iter_mut() {
        *c = u_scale(c, &inv);
    }
    g
}

/// Univariate rational function over `Q`, reduced; the coefficient field
/// for exact bivariate division.
#[derive(Clone)]
struct URat {
    num: UniPoly,
    den: UniPoly,
}

impl URat {
    fn from_poly(p: UniPoly) -> Self {
        URat { num: p, den: u_one() }
    }
    fn is_zero(&self) -> bool {
        u_is_zero(&self.num)
    }
    fn reduce(mut self) -> Self {
        if self.is_zero() {
            return URat { num: Vec::new(), den: u_one() };
        }
        let g = u_gcd(&self.num, &self.den);
        if g.len() > 1 {
            self.num = u_div_exact(&self.num, &g);
            self.den = u_div_exact(&self.den, &g);
        }
        let lead = self.den.last().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            self.num = u_scale(&self.num, &inv);
            self.den = u_scale(&self.den, &inv);
        }
        self
    }
    fn mul(&self, o: &URat) -> Self {
        URat { num: u_mul(&self.num, &o.num), den: u_mul(&self.den, &o.den) }.reduce()
    }
    fn sub(&self, o: &URat) -> Self {
        URat {
            num: u_sub(&u_mul(&self.num, &o.den), &u_mul(&o.num, &self.den)),
            den: u_mul(&self.den, &o.den),
        }
        .reduce()
    }
    fn div(&self, o: &URat) -> Self {
        assert!(!o.is_zero());
        URat { num: u_mul(&self.num, &o.den), den: u_mul(&self.den, &o.num) }.reduce()
    }
}

/// Exact division `a / b` in `Q[q,Q]`; panics if not exact (callers only
/// divide by a true divisor such as a gcd).
pub fn b_div_exact(a: &BiPoly, b: &BiPoly) -> BiPoly {
    assert!(!b_is_zero(b), "division by zero");
    if b_is_zero(a) {
        return Vec::new();
    }
    if b.len() == 1 && b[0].len() == 1 {
        // constant divisor
        let inv = b[0][0].clone().recip();
        let mut out: BiPoly = a.iter().map(|c| u_scale(c, &inv)).collect();
        b_trim(&mut out);
        return out;
    }
    let mut rem: Vec<URat> = a.iter().map(|c| URat::from_poly(c.clone())).collect();
    let bb: Vec<URat> = b.iter().map(|c| URat::from_poly(c.clone())).collect();
    let db = bb.len() - 1;
    let lb = bb.last().unwrap().clone();
    assert!(rem.len() > db, "inexact bivariate division (degree)");
    let mut quot: Vec<URat> = vec![URat::from_poly(Vec::new()); rem.len() - db];
    let trim = |v: &mut Vec<URat>| {
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
    };
    loop {
        trim(&mut rem);
        if rem.len() <= db {
            break;
        }
        let dr = rem.len() - 1;
        let c = rem.last().unwrap().div(&lb);
        let shift = dr - db;
        quot[shift] = c.clone();
        for (j, cb) in bb.iter().enumerate() {
            rem[shift + j] = rem[shift + j].sub(&c.mul(cb));
        }
    }
    trim(&mut rem);
    assert!(rem.is_empty(), "inexact bivariate division (remainder)");
    let mut out: BiPoly = quot
        .into_iter()
        .map(|c| {
            assert!(c.den == u_one(), "quotient not polynomial");
            c.num
        })
        .collect();
    b_trim(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn bivariate_gcd_and_division() {
        // a = (q + Q) * (q - 1), b = (q + Q) * (Q^2 + 1)
        let q_plus_big: BiPoly = vec![vec![r(0), r(1)], vec![r(1)]]; // Q + q
        let q_minus_one: BiPoly = vec![vec![r(-1)], vec![r(1)]];
        let qq_sq: BiPoly = vec![vec![r(1), r(0), r(1)]];
        let a = b_mul(&q_plus_big, &q_minus_one);
        let b = b_mul(&q_plus_big, &qq_sq);
        let g = b_gcd(&a, &b);
        assert_eq!(g, normalize_lead(q_plus_big.clone()));
        let qa = b_div_exact(&a, &g);
        assert_eq!(b_mul(&qa, &g), a);
        let qb = b_div_exact(&b, &g);
        assert_eq!(b_mul(&qb, &g), b);
    }

    #[test]
    fn coprime_gcd_is_one() {
        let a: BiPoly = vec![vec![r(1)], vec![r(2)]]; // 1 + 2q
        let b: BiPoly = vec![vec![r(3), r(1)]]; // 3 + Q
        let g = b_gcd(&a, &b);
        assert_eq!(g, vec![vec![r(1)]]);
    }

    #[test]
    fn u_gcd_monic() {
        // (x^2 - 1, x^2 + 2x + 1) -> x + 1
        let a = vec![r(-1), r(0), r(1)];
        let b = vec![r(1), r(2), r(1)];
        assert_eq!(u_gcd(&a, &b), vec![r(1), r(1)]);
    }
}
