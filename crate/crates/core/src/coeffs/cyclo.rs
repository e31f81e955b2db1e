use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num::{BigRational, One, Zero};

use super::upoly::{u_divmod, u_is_zero, u_mul, u_sub, u_trim, UniPoly};

/// Coefficients of the `l`-th cyclotomic polynomial, ascending.
fn cyclotomic_poly(l: u64) -> UniPoly {
    // Phi_l = (x^l - 1) / prod_{d | l, d < l} Phi_d, by exact division.
    static CACHE: OnceLock<Mutex<HashMap<u64, UniPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&l) {
        return p.clone();
    }
    let mut num: UniPoly = vec![BigRational::zero(); l as usize + 1];
    num[0] = -BigRational::one();
    num[l as usize] = BigRational::one();
    for d in 1..l {
        if l % d == 0 {
            let phi_d = cyclotomic_poly(d);
            let (q, r) = u_divmod(&num, &phi_d);
            assert!(u_is_zero(&r));
            num = q;
        }
    }
    cache.lock().unwrap().insert(l, num.clone());
    num
}

/// Element of the cyclotomic field `F = Q(zeta_l)`, stored as a polynomial
/// in `zeta_l` of degree `< phi(l)`, reduced modulo the `l`-th cyclotomic
/// polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloNumber {
    l: u64,
    coeffs: UniPoly,
}

impl CycloNumber {
    pub fn order(&self) -> u64 {
        self.l
    }

    pub fn zero(l: u64) -> Self {
        CycloNumber { l, coeffs: Vec::new() }
    }

    pub fn one(l: u64) -> Self {
        Self::from_rational(l, BigRational::one())
    }

    pub fn from_rational(l: u64, c: BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(l);
        }
        CycloNumber { l, coeffs: vec![c] }
    }

    pub fn from_int(l: u64, n: i64) -> Self {
        Self::from_rational(l, BigRational::from_integer(n.into()))
    }

    /// `zeta_l^k` for any integer `k`.
    pub fn zeta_pow(l: u64, k: i64) -> Self {
        let e = k.rem_euclid(l as i64) as usize;
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = BigRational::one();
        CycloNumber { l, coeffs }.reduce()
    }

    /// `c * zeta^e`, then reduced.
    pub fn monomial(l: u64, e: i64, c: BigRational) -> Self {
        Self::zeta_pow(l, e) * Self::from_rational(l, c)
    }

    /// Quantum integer `[k]` at `q = zeta_l`.
    pub fn gauss(l: u64, k: i64) -> Self {
        let mut s = Self::zero(l);
        let a = k.abs();
        for j in 0..a {
            s = s + Self::zeta_pow(l, a - 1 - 2 * j);
        }
        if k < 0 {
            s = -s;
        }
        s
    }

    fn reduce(mut self) -> Self {
        let phi = cyclotomic_poly(self.l);
        if self.coeffs.len() >= phi.len() {
            let (_, r) = u_divmod(&self.coeffs, &phi);
            self.coeffs = r;
        }
        u_trim(&mut self.coeffs);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in
    /// `Q[x]` modulo the (irreducible) cyclotomic polynomial.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let phi = cyclotomic_poly(self.l);
        // Bezout: s*self + t*phi = gcd = const
        let (mut r0, mut r1) = (phi.clone(), self.coeffs.clone());
        let (mut s0, mut s1): (UniPoly, UniPoly) = (Vec::new(), vec![BigRational::one()]);
        while !u_is_zero(&r1) {
            let (q, r) = u_divmod(&r0, &r1);
            let s = u_sub(&s0, &u_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 is a nonzero constant since phi is irreducible over Q.
        assert_eq!(r0.len(), 1, "cyclotomic modulus not coprime to element");
        let c = r0[0].clone().recip();
        let coeffs = s0.iter().map(|x| x.clone() * c.clone()).collect();
        Some(CycloNumber { l: self.l, coeffs }.reduce())
    }

    pub fn coeff_vector(&self) -> &UniPoly {
        &self.coeffs
    }
}

impl Add for CycloNumber {
    type Output = CycloNumber;
    fn add(self, o: CycloNumber) -> CycloNumber {
        assert_eq!(self.l, o.l, "mixed cyclotomic orders");
        CycloNumber { l: self.l, coeffs: super::upoly::u_add(&self.coeffs, &o.coeffs) }
    }
}

impl Sub for CycloNumber {
    type Output = CycloNumber;
    fn sub(self, o: CycloNumber) -> CycloNumber {
        assert_eq!(self.l, o.l, "mixed cyclotomic orders");
        CycloNumber { l: self.l, coeffs: u_sub(&self.coeffs, &o.coeffs) }
    }
}

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber { l: self.l, coeffs: super::upoly::u_neg(&self.coeffs) }
    }
}

impl Mul for CycloNumber {
    type Output = CycloNumber;
    fn mul(self, o: CycloNumber) -> CycloNumber {
        assert_eq!(self.l, o.l, "mixed cyclotomic orders");
        CycloNumber { l: self.l, coeffs: u_mul(&self.coeffs, &o.coeffs) }.reduce()
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cyclo({};[", self.l)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "])")
    }
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        let p3 = cyclotomic_poly(3);
        assert_eq!(p3.len(), 3); // x^2 + x + 1
        let p5 = cyclotomic_poly(5);
        assert_eq!(p5.len(), 5);
        let p9 = cyclotomic_poly(9); // x^6 + x^3 + 1
        assert_eq!(p9.len(), 7);
        assert!(p9[3].is_one() && p9[6].is_one() && p9[0].is_one());
    }

    #[test]
    fn root_of_unity_identities() {
        for l in [3u64, 5, 7, 9] {
            // zeta^l = 1
            assert!(CycloNumber::zeta_pow(l, l as i64).is_one());
            // 1 + zeta + ... + zeta^{l-1} = 0
            let mut s = CycloNumber::zero(l);
            for k in 0..l {
                s = s + CycloNumber::zeta_pow(l, k as i64);
            }
            assert!(s.is_zero());
        }
    }

    #[test]
    fn quantum_characteristic() {
        for l in [3u64, 5, 7] {
            assert!(CycloNumber::gauss(l, l as i64).is_zero(), "[l] = 0 at zeta_l");
            for k in 1..l {
                assert!(!CycloNumber::gauss(l, k as i64).is_zero(), "[{k}] != 0 at zeta_{l}");
            }
        }
    }

    #[test]
    fn inverses() {
        let x = CycloNumber::gauss(5, 2); // zeta + zeta^{-1}
        let xi = x.clone().inv().unwrap();
        assert!((x * xi).is_one());
        assert!(CycloNumber::zero(5).inv().is_none());
    }
}
