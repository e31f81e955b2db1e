use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::integer::Integer;
use num::{BigRational, One, Signed, Zero};

/// Laurent polynomial in the two variables `q` and `Q` with rational
/// coefficients. Stored as a rational content times a primitive integer
/// polynomial (terms sorted by exponent pair, integer gcd 1, positive
/// leading entry), so that ring operations run over integers and equality
/// is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    scale: BigRational,
    terms: Vec<((i64, i64), BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::qq(0, 0)
    }

    fn normalize(mut scale: BigRational, mut terms: Vec<((i64, i64), BigInt)>) -> Self {
        terms.retain(|(_, c)| !c.is_zero());
        if terms.is_empty() || scale.is_zero() {
            return Self::zero();
        }
        let mut content = BigInt::zero();
        for (_, c) in &terms {
            content = content.gcd(c);
            if content.is_one() {
                break;
            }
        }
        if terms.last().unwrap().1.is_negative() {
            content = -content;
        }
        if !content.is_one() {
            for (_, c) in terms.iter_mut() {
                *c = &*c / &content;
            }
            scale *= BigRational::from_integer(content);
        }
        LaurentPoly { scale, terms }
    }

    /// `c * q^a * Q^b`.
    pub fn monomial(a: i64, b: i64, c: BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { scale: c, terms: vec![((a, b), BigInt::one())] }
    }

    pub fn qq(a: i64, b: i64) -> Self {
        Self::monomial(a, b, BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(0, 0, BigRational::from_integer(n.into()))
    }

    /// The quantum integer `[k] = q^{k-1} + q^{k-3} + ... + q^{-k+1}`,
    /// extended to negative `k` by `[-k] = -[k]`.
    pub fn gauss(k: i64) -> Self {
        let a = k.abs();
        let terms: Vec<((i64, i64), BigInt)> =
            (0..a).map(|j| ((-a + 1 + 2 * j, 0), BigInt::one())).collect();
        let scale = if k < 0 {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        Self::normalize(scale, terms)
    }

    /// `Q - Q^{-1}`.
    pub fn big_q_minus_inv() -> Self {
        Self::qq(0, 1) - Self::qq(0, -1)
    }

    /// `q - q^{-1}`.
    pub fn q_minus_inv() -> Self {
        Self::qq(1, 0) - Self::qq(-1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms as `(exponents, rational coefficient)`, ascending exponents.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), BigRational)> + '_ {
        self.terms
            .iter()
            .map(|(e, c)| (*e, self.scale.clone() * BigRational::from_integer(c.clone())))
    }

    /// Minimal exponents appearing in `q` resp. `Q` (0 for the zero poly).
    pub fn min_exps(&self) -> (i64, i64) {
        if self.terms.is_empty() {
            return (0, 0);
        }
        let mut ma = i64::MAX;
        let mut mb = i64::MAX;
        for ((a, b), _) in &self.terms {
            ma = ma.min(*a);
            mb = mb.min(*b);
        }
        (ma, mb)
    }

    /// Multiply by `q^a Q^b`.
    pub fn shift(&self, a: i64, b: i64) -> Self {
        if a == 0 && b == 0 {
            return self.clone();
        }
        LaurentPoly {
            scale: self.scale.clone(),
            terms: self
                .terms
                .iter()
                .map(|((x, y), c)| ((x + a, y + b), c.clone()))
                .collect(),
        }
    }

    /// Leading term in the lexicographic order on `(deg_q, deg_Q)`.
    pub fn leading(&self) -> Option<((i64, i64), BigRational)> {
        self.terms
            .last()
            .map(|(e, c)| (*e, self.scale.clone() * BigRational::from_integer(c.clone())))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { scale: self.scale.clone() * c.clone(), terms: self.terms.clone() }
    }

    /// Substitute `q -> zeta, Q -> zeta^m`: the exponent list
    /// `(a + m*b, coefficient)` for downstream cyclotomic reduction.
    pub fn exponents_at(&self, m: i64) -> Vec<(i64, BigRational)> {
        self.terms().map(|((a, b), c)| (a + m * b, c)).collect()
    }
}

fn merge_add(
    a: &[((i64, i64), BigInt)],
    fa: &BigInt,
    b: &[((i64, i64), BigInt)],
    fb: &BigInt,
) -> Vec<((i64, i64), BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push((a[i].0, &a[i].1 * fa));
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((b[j].0, &b[j].1 * fb));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = &a[i].1 * fa + &b[j].1 * fb;
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    for t in &a[i..] {
        out.push((t.0, &t.1 * fa));
    }
    for t in &b[j..] {
        out.push((t.0, &t.1 * fb));
    }
    out
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // common scale: gcd(numerators) / lcm(denominators)
        let (pa, qa) = (self.scale.numer(), self.scale.denom());
        let (pb, qb) = (rhs.scale.numer(), rhs.scale.denom());
        let g = pa.gcd(pb);
        let l = qa.lcm(qb);
        let fa = (pa / &g) * (&l / qa);
        let fb = (pb / &g) * (&l / qb);
        let terms = merge_add(&self.terms, &fa, &rhs.terms, &fb);
        LaurentPoly::normalize(BigRational::new(g, l), terms)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &(-rhs)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        if self.is_zero() {
            return self;
        }
        LaurentPoly { scale: -self.scale, terms: self.terms }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut prods: Vec<((i64, i64), BigInt)> =
            Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                prods.push(((a1 + a2, b1 + b2), c1 * c2));
            }
        }
        prods.sort_unstable_by_key(|(e, _)| *e);
        let mut terms: Vec<((i64, i64), BigInt)> = Vec::with_capacity(prods.len());
        for (e, c) in prods {
            match terms.last_mut() {
                Some((le, lc)) if *le == e => {
                    *lc += c;
                }
                _ => terms.push((e, c)),
            }
        }
        LaurentPoly::normalize(self.scale.clone() * rhs.scale.clone(), terms)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        let collected: Vec<((i64, i64), BigRational)> = self.terms().collect();
        for ((a, b), c) in collected.into_iter().rev() {
            let cs = format_coeff(&c, first);
            write!(f, "{cs}")?;
            let mono = match (a, b) {
                (0, 0) => String::new(),
                (a, 0) => format!("q^{a}"),
                (0, b) => format!("Q^{b}"),
                (a, b) => format!("q^{a}*Q^{b}"),
            };
            if !mono.is_empty() {
                if c.abs() != BigRational::one() {
                    write!(f, "*")?;
                }
                write!(f, "{mono}")?;
            } else if c.abs() == BigRational::one() {
                write!(f, "1")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn format_coeff(c: &BigRational, first: bool) -> String {
    let sign = if c.is_negative() {
        if first {
            "-".to_string()
        } else {
            " - ".to_string()
        }
    } else if first {
        String::new()
    } else {
        " + ".to_string()
    };
    let a = c.abs();
    if a == BigRational::one() {
        sign
    } else {
        format!("{sign}{a}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_expansion() {
        // [2] = q + q^{-1}
        assert_eq!(LaurentPoly::gauss(2), LaurentPoly::qq(1, 0) + LaurentPoly::qq(-1, 0));
        // [0] = 0
        assert!(LaurentPoly::gauss(0).is_zero());
        // [3] = q^2 + 1 + q^{-2}
        let three = LaurentPoly::qq(2, 0) + LaurentPoly::qq(0, 0) + LaurentPoly::qq(-2, 0);
        assert_eq!(LaurentPoly::gauss(3), three);
        // [-k] = -[k]
        assert_eq!(LaurentPoly::gauss(-3), -LaurentPoly::gauss(3));
    }

    #[test]
    fn gauss_telescopes() {
        // [k](q - q^{-1}) = q^k - q^{-k}
        for k in -10..=10i64 {
            let lhs = LaurentPoly::gauss(k) * LaurentPoly::q_minus_inv();
            let rhs = LaurentPoly::qq(k, 0) - LaurentPoly::qq(-k, 0);
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    #[test]
    fn normalization_is_canonical() {
        // (2/3)(q + Q) built two different ways
        let a = LaurentPoly::monomial(1, 0, BigRational::new(2.into(), 3.into()))
            + LaurentPoly::monomial(0, 1, BigRational::new(2.into(), 3.into()));
        let b = (LaurentPoly::qq(1, 0) + LaurentPoly::qq(0, 1))
            .scale(&BigRational::new(2.into(), 3.into()));
        assert_eq!(a, b);
        // cancellation to zero
        let z = a.clone() - b;
        assert!(z.is_zero());
        assert_eq!(z, LaurentPoly::zero());
    }
}
