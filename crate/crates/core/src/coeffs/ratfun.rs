use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigRational, One, Zero};

use super::laurent::LaurentPoly;
use super::upoly::{b_div_exact, b_gcd, b_trim, BiPoly};

/// Element of the generic coefficient field `K = Q(q, Q)`, stored as a
/// reduced fraction of Laurent polynomials in canonical form, so equality
/// is decidable structurally.
///
/// Canonical form: the denominator is a genuine polynomial with minimal
/// exponents 0 in both variables, leading coefficient 1 (lexicographic
/// order on `(deg_q, deg_Q)`), and the polynomial parts of numerator and
/// denominator are coprime. Arithmetic keeps fractions reduced with
/// pairwise gcds, never forming the full cross products.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

fn laurent_to_bipoly(p: &LaurentPoly) -> BiPoly {
    // caller must have shifted to nonnegative exponents
    let mut out: BiPoly = Vec::new();
    for ((a, b), c) in p.terms() {
        let (a, b) = (a as usize, b as usize);
        if out.len() <= a {
            out.resize(a + 1, Vec::new());
        }
        if out[a].len() <= b {
            out[a].resize(b + 1, BigRational::zero());
        }
        out[a][b] = c;
    }
    for c in out.iter_mut() {
        super::upoly::u_trim(c);
    }
    let mut out = out;
    b_trim(&mut out);
    out
}

fn bipoly_to_laurent(p: &BiPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (a, c) in p.iter().enumerate() {
        for (b, v) in c.iter().enumerate() {
            if !v.is_zero() {
                out = out + LaurentPoly::monomial(a as i64, b as i64, v.clone());
            }
        }
    }
    out
}

/// Monic gcd of the polynomial parts of two Laurent polynomials (their
/// monomial shifts are units and are ignored). Returns `1` quickly when
/// either input is a monomial.
fn gcd_pp(x: &LaurentPoly, y: &LaurentPoly) -> LaurentPoly {
    if x.is_zero() || y.is_zero() {
        return LaurentPoly::one();
    }
    if x.num_terms() == 1 || y.num_terms() == 1 {
        return LaurentPoly::one();
    }
    let (xa, xb) = x.min_exps();
    let (ya, yb) = y.min_exps();
    let g = b_gcd(
        &laurent_to_bipoly(&x.shift(-xa, -xb)),
        &laurent_to_bipoly(&y.shift(-ya, -yb)),
    );
    bipoly_to_laurent(&g)
}

/// Exact division of the polynomial part: `x / g` where `g` divides the
/// polynomial part of `x`; the monomial shift of `x` is preserved.
fn div_pp(x: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    if g == &LaurentPoly::one() {
        return x.clone();
    }
    let (xa, xb) = x.min_exps();
    let q = b_div_exact(&laurent_to_bipoly(&x.shift(-xa, -xb)), &laurent_to_bipoly(g));
    bipoly_to_laurent(&q).shift(xa, xb)
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RationalFunction { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFunction { num: p, den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(n))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(LaurentPoly::monomial(0, 0, c))
    }

    /// `q^a * Q^b`.
    pub fn qq(a: i64, b: i64) -> Self {
        Self::from_poly(LaurentPoly::qq(a, b))
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> crate::Result<Self> {
        if den.is_zero() {
            return Err(crate::Error::InvalidParams("zero denominator".into()));
        }
        Ok(Self::reduced(num, den))
    }

    /// Build the canonical reduced form from an arbitrary fraction.
    fn reduced(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd_pp(&num, &den);
        let num = div_pp(&num, &g);
        let den = div_pp(&den, &g);
        Self::finish(num, den)
    }

    /// Normalize a fraction whose parts are already coprime: absorb the
    /// denominator's monomial shift and leading coefficient.
    fn finish(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (da, db) = den.min_exps();
        let den = den.shift(-da, -db);
        let mut num = num.shift(-da, -db);
        let lead = den.leading().expect("nonzero denominator").1;
        let den = if lead.is_one() {
            den
        } else {
            let inv = lead.recip();
            num = num.scale(&inv);
            den.scale(&inv)
        };
        RationalFunction { num, den }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den == LaurentPoly::one() && self.num == LaurentPoly::one()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::finish(self.den.clone(), self.num.clone()))
    }

    /// `[k]` as an element of `K`.
    pub fn gauss(k: i64) -> Self {
        Self::from_poly(LaurentPoly::gauss(k))
    }

    /// The generic quantum integer `[m]` with `q^m` replaced by `Q`:
    /// `(Q - Q^{-1}) / (q - q^{-1})`.
    pub fn gauss_big_q() -> Self {
        Self::reduced(LaurentPoly::big_q_minus_inv(), LaurentPoly::q_minus_inv())
    }

    /// `[m-1]` with `q^m -> Q`: `(Q q^{-1} - Q^{-1} q) / (q - q^{-1})`.
    pub fn gauss_big_q_minus_one() -> Self {
        Self::reduced(
            LaurentPoly::qq(-1, 1) - LaurentPoly::qq(1, -1),
            LaurentPoly::q_minus_inv(),
        )
    }

    /// The blob loop parameter `y_e = -[m-1]/[m]` over `K`.
    pub fn y_e() -> Self {
        Self::reduced(
            -(LaurentPoly::qq(-1, 1) - LaurentPoly::qq(1, -1)),
            LaurentPoly::big_q_minus_inv(),
        )
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return o;
        }
        if o.is_zero() {
            return self;
        }
        if self.den == o.den {
            let num = self.num + o.num;
            if num.is_zero() {
                return RationalFunction::zero();
            }
            let g = gcd_pp(&num, &self.den);
            return RationalFunction::finish(div_pp(&num, &g), div_pp(&self.den, &g));
        }
        // num/den reduced on both sides: any common factor of the sum and
        // the joined denominator divides the denominator gcd
        let g = gcd_pp(&self.den, &o.den);
        let da = div_pp(&self.den, &g);
        let db = div_pp(&o.den, &g);
        let num = &self.num * &db + &o.num * &da;
        if num.is_zero() {
            return RationalFunction::zero();
        }
        let h = gcd_pp(&num, &g);
        let num = div_pp(&num, &h);
        let den = &(&da * &db) * &div_pp(&g, &h);
        RationalFunction::finish(num, den)
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: RationalFunction) -> RationalFunction {
        self + (-o)
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -self.num, den: self.den }
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: RationalFunction) -> RationalFunction {
        if self.is_zero() || o.is_zero() {
            return RationalFunction::zero();
        }
        // cross-reduce before multiplying, so products stay small
        let g1 = gcd_pp(&self.num, &o.den);
        let g2 = gcd_pp(&o.num, &self.den);
        let num = &div_pp(&self.num, &g1) * &div_pp(&o.num, &g2);
        let den = &div_pp(&self.den, &g2) * &div_pp(&o.den, &g1);
        RationalFunction::finish(num, den)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == LaurentPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_equality() {
        // (q^2 - 1)/(q - 1) == q + 1
        let a = RationalFunction::new(
            LaurentPoly::qq(2, 0) - LaurentPoly::one(),
            LaurentPoly::qq(1, 0) - LaurentPoly::one(),
        )
        .unwrap();
        let b = RationalFunction::from_poly(LaurentPoly::qq(1, 0) + LaurentPoly::one());
        assert_eq!(a, b);
    }

    #[test]
    fn laurent_normalization() {
        // q^{-1}/(Q^{-1}) == Q/q
        let a = RationalFunction::new(LaurentPoly::qq(-1, 0), LaurentPoly::qq(0, -1)).unwrap();
        let b = RationalFunction::new(LaurentPoly::qq(0, 1), LaurentPoly::qq(1, 0)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, RationalFunction::qq(-1, 1));
    }

    #[test]
    fn field_ops() {
        let x = RationalFunction::gauss_big_q(); // [m]
        let y = RationalFunction::y_e();
        // y_e * [m] = -[m-1]
        let prod = y * x;
        assert_eq!(prod, -RationalFunction::gauss_big_q_minus_one());
        // inverse
        let z = RationalFunction::gauss(2);
        let zi = z.clone().inv().unwrap();
        assert!((z * zi).is_one());
    }

    #[test]
    fn add_reduction() {
        // 1/(q-1) + 1/(q+1) = 2q/(q^2-1)
        let a = RationalFunction::new(
            LaurentPoly::one(),
            LaurentPoly::qq(1, 0) - LaurentPoly::one(),
        )
        .unwrap();
        let b = RationalFunction::new(
            LaurentPoly::one(),
            LaurentPoly::qq(1, 0) + LaurentPoly::one(),
        )
        .unwrap();
        let s = a.clone() + b;
        let expect = RationalFunction::new(
            LaurentPoly::from_int(2) * LaurentPoly::qq(1, 0),
            LaurentPoly::qq(2, 0) - LaurentPoly::one(),
        )
        .unwrap();
        assert_eq!(s, expect);
        // x - x = 0 with distinct denominators en route
        let t = s.clone() - s;
        assert!(t.is_zero());
        // a + (-a) with equal denominators
        assert!((a.clone() + (-a)).is_zero());
    }

    #[test]
    fn mul_cancellation() {
        // ((q-1)/(Q+1)) * ((Q+1)/(q-1)) = 1
        let a = RationalFunction::new(
            LaurentPoly::qq(1, 0) - LaurentPoly::one(),
            LaurentPoly::qq(0, 1) + LaurentPoly::one(),
        )
        .unwrap();
        let b = a.clone().inv().unwrap();
        assert!((a * b).is_one());
    }
}
