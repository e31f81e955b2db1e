use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num::BigRational;

use super::cyclo::CycloNumber;
use super::laurent::LaurentPoly;
use super::ratfun::RationalFunction;
use crate::{Error, Result};

/// Exact field element usable as a diagram-algebra coefficient.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
}

impl Scalar for RationalFunction {
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        RationalFunction::inv(self)
    }
}

impl Scalar for CycloNumber {
    fn is_zero(&self) -> bool {
        CycloNumber::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        CycloNumber::inv(self)
    }
}

/// A coefficient field for the diagram algebras: either the generic
/// function field `K = Q(q,Q)` or a cyclotomic specialization
/// `q -> zeta_l`, `Q -> zeta_l^m`.
pub trait CoeffField: Clone + fmt::Debug + Send + Sync {
    type Elem: Scalar;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn from_rational(&self, c: BigRational) -> Self::Elem;

    /// `q^a * Q^b` in this field.
    fn qq(&self, a: i64, b: i64) -> Self::Elem;

    /// Quantum integer `[k]`.
    fn gauss(&self, k: i64) -> Self::Elem;

    /// The blob loop parameter `y_e = -[m-1]/[m]`.
    fn y_e(&self) -> Self::Elem;

    /// Short human-readable name for reports.
    fn name(&self) -> String;

    fn q(&self) -> Self::Elem {
        self.qq(1, 0)
    }

    fn big_q(&self) -> Self::Elem {
        self.qq(0, 1)
    }
}

/// The generic field `K = Q(q, Q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenericField;

impl CoeffField for GenericField {
    type Elem = RationalFunction;

    fn zero(&self) -> RationalFunction {
        RationalFunction::zero()
    }
    fn one(&self) -> RationalFunction {
        RationalFunction::one()
    }
    fn from_int(&self, n: i64) -> RationalFunction {
        RationalFunction::from_int(n)
    }
    fn from_rational(&self, c: BigRational) -> RationalFunction {
        RationalFunction::from_rational(c)
    }
    fn qq(&self, a: i64, b: i64) -> RationalFunction {
        RationalFunction::qq(a, b)
    }
    fn gauss(&self, k: i64) -> RationalFunction {
        RationalFunction::gauss(k)
    }
    fn y_e(&self) -> RationalFunction {
        RationalFunction::y_e()
    }
    fn name(&self) -> String {
        "Q(q,Q)".into()
    }
}

/// The cyclotomic field `F = Q(zeta_l)` with `q = zeta_l` and
/// `Q = zeta_l^m`. `l` must be odd and at least 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycloField {
    pub l: u64,
    pub m: i64,
}

impl CycloField {
    pub fn new(l: u64, m: i64) -> Result<Self> {
        if l < 3 || l % 2 == 0 {
            return Err(Error::InvalidParams(format!(
                "l must be odd and >= 3, got l = {l}"
            )));
        }
        Ok(CycloField { l, m })
    }

    /// `k0` with `2*k0 = m (mod l)`; unique since `l` is odd.
    pub fn k0(&self) -> i64 {
        (self.m.rem_euclid(self.l as i64) * ((self.l as i64 + 1) / 2)).rem_euclid(self.l as i64)
    }
}

impl CoeffField for CycloField {
    type Elem = CycloNumber;

    fn zero(&self) -> CycloNumber {
        CycloNumber::zero(self.l)
    }
    fn one(&self) -> CycloNumber {
        CycloNumber::one(self.l)
    }
    fn from_int(&self, n: i64) -> CycloNumber {
        CycloNumber::from_int(self.l, n)
    }
    fn from_rational(&self, c: BigRational) -> CycloNumber {
        CycloNumber::from_rational(self.l, c)
    }
    fn qq(&self, a: i64, b: i64) -> CycloNumber {
        CycloNumber::zeta_pow(self.l, a + self.m * b)
    }
    fn gauss(&self, k: i64) -> CycloNumber {
        CycloNumber::gauss(self.l, k)
    }
    fn y_e(&self) -> CycloNumber {
        // -[m-1]/[m]; [m] is nonzero whenever l does not divide m.
        let num = -self.gauss(self.m - 1);
        let den = self
            .gauss(self.m)
            .inv()
            .expect("[m] = 0 at this specialization; blob parameters invalid");
        num * den
    }
    fn name(&self) -> String {
        format!("Q(zeta_{}) with Q=zeta^{}", self.l, self.m)
    }
}

/// Exact evaluation of `x` at `q = zeta_l, Q = zeta_l^m`. Fails with
/// `DenominatorVanishes` when `x` has a pole at the specialization point.
pub fn specialize(x: &RationalFunction, l: u64, m: i64) -> Result<CycloNumber> {
    let eval = |p: &LaurentPoly| -> CycloNumber {
        let mut s = CycloNumber::zero(l);
        for (e, c) in p.exponents_at(m) {
            s = s + CycloNumber::monomial(l, e, c);
        }
        s
    };
    let den = eval(x.denominator());
    if den.is_zero() {
        return Err(Error::DenominatorVanishes(format!(
            "{x} at (zeta_{l}, zeta_{l}^{m})"
        )));
    }
    let num = eval(x.numerator());
    Ok(num * den.inv().unwrap())
}

/// The four separation conditions on the parameters after specialization:
/// `q^4 != 1`, `Q != Q^{-1}`, `Q != q^2 Q^{-1}`, `Q^{-1} != q^2 Q`.
/// These gate the quotient construction for the blob algebra.
pub fn separation_ok(l: u64, m: i64) -> bool {
    if l < 3 || l % 2 == 0 {
        return false;
    }
    let li = l as i64;
    let zeta_pow_is_one = |e: i64| e.rem_euclid(li) == 0;
    // q^4 = zeta^4; l odd and >= 3 means zeta^4 != 1 automatically, kept
    // explicit for clarity.
    if zeta_pow_is_one(4) {
        return false;
    }
    // Q^2 != 1  <=>  l does not divide 2m  <=>  l does not divide m
    if zeta_pow_is_one(2 * m) {
        return false;
    }
    // Q^2 != q^2  <=>  l does not divide 2(m-1)
    if zeta_pow_is_one(2 * (m - 1)) {
        return false;
    }
    // Q^2 != q^{-2}  <=>  l does not divide 2(m+1)
    if zeta_pow_is_one(2 * (m + 1)) {
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_in_both_fields() {
        // [2] = q + q^{-1} generically
        assert_eq!(
            GenericField.gauss(2),
            RationalFunction::qq(1, 0) + RationalFunction::qq(-1, 0)
        );
        // [0] = 0
        assert!(GenericField.gauss(0).is_zero());
        // [5] = 0 at a primitive 5th root of unity (quantum characteristic)
        let f = CycloField::new(5, 2).unwrap();
        assert!(f.gauss(5).is_zero());
        for k in 1..5 {
            assert!(!f.gauss(k).is_zero());
        }
    }

    #[test]
    fn separation_values() {
        assert!(separation_ok(5, 2));
        assert!(!separation_ok(3, 0));
        assert!(separation_ok(7, 3));
        assert!(!separation_ok(3, 1)); // m = 1 mod l fails Q != q^2 Q^{-1}
        assert!(!separation_ok(5, 4)); // m = -1 mod l
        assert!(!separation_ok(4, 1)); // even l rejected
    }

    #[test]
    fn specialize_values() {
        // Q - q^m specializes to 0
        let x = RationalFunction::qq(0, 1) - RationalFunction::qq(2, 0);
        assert!(specialize(&x, 5, 2).unwrap().is_zero());
        // y_e at (5,2) equals -1/(zeta + zeta^{-1})
        let y = specialize(&RationalFunction::y_e(), 5, 2).unwrap();
        let expect = -CycloNumber::gauss(5, 2).inv().unwrap();
        assert_eq!(y, expect);
        // 1/(Q - Q^{-1}) is finite and nonzero at (5,2)
        let z = RationalFunction::new(
            LaurentPoly::one(),
            LaurentPoly::qq(0, 1) - LaurentPoly::qq(0, -1),
        )
        .unwrap();
        let v = specialize(&z, 5, 2).unwrap();
        assert!(!v.is_zero());
        // a genuine pole raises the error
        let w = RationalFunction::new(LaurentPoly::one(), LaurentPoly::gauss(5)).unwrap();
        assert!(matches!(specialize(&w, 5, 2), Err(Error::DenominatorVanishes(_))));
    }

    #[test]
    fn specialization_consistency() {
        // k0 solves 2*k0 = m mod l
        let f = CycloField::new(5, 2).unwrap();
        assert_eq!(f.k0(), 1);
        let f = CycloField::new(7, 3).unwrap();
        assert_eq!((2 * f.k0()).rem_euclid(7), 3);
        // qq agrees with specialize on monomials
        for (a, b) in [(1, 0), (0, 1), (2, -1), (-3, 2)] {
            let gen = RationalFunction::qq(a, b);
            let f = CycloField::new(5, 2).unwrap();
            assert_eq!(specialize(&gen, 5, 2).unwrap(), f.qq(a, b));
        }
    }
}
