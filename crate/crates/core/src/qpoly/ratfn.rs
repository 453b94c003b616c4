use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::LaurentPoly;
use crate::error::{Error, Result};

/// An element of `Q(q)`, stored as a quotient of integer Laurent polynomials.
///
/// The representation is normalized: the denominator is an honest polynomial
/// with a positive nonzero constant term, numerator and denominator are coprime
/// over `Q[q]`, and their combined integer content is one. Equal rational
/// functions therefore have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRatFn", into = "RawRatFn")]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct RawRatFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl TryFrom<RawRatFn> for RationalFn {
    type Error = Error;
    fn try_from(raw: RawRatFn) -> Result<Self> {
        RationalFn::new(raw.num, raw.den)
    }
}

impl From<RationalFn> for RawRatFn {
    fn from(r: RationalFn) -> Self {
        RawRatFn { num: r.num, den: r.den }
    }
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(normalize(num, den))
    }

    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn q() -> Self {
        LaurentPoly::q().into()
    }

    pub fn from_int(c: i64) -> Self {
        LaurentPoly::constant(c).into()
    }

    pub fn from_rational(r: &BigRational) -> Self {
        normalize(
            LaurentPoly::constant(r.numer().clone()),
            LaurentPoly::constant(r.denom().clone()),
        )
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial this equals, if the denominator is a unit.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(normalize(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn invert_q(&self) -> Self {
        normalize(self.num.invert_q(), self.den.invert_q())
    }

    pub fn substitute_power(&self, k: i64) -> Self {
        normalize(self.num.substitute_power(k), self.den.substitute_power(k))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, q0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q0)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(q0)? / d)
    }

    pub fn eval_int(&self, q0: i64) -> Result<BigRational> {
        self.eval(&BigRational::from_integer(q0.into()))
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }
}

impl From<i64> for RationalFn {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

fn normalize(num: LaurentPoly, den: LaurentPoly) -> RationalFn {
    assert!(!den.is_zero(), "zero denominator");
    if num.is_zero() {
        return RationalFn::zero();
    }
    if den.num_terms() == 1 {
        // Monomial denominators absorb into the Laurent numerator.
        let (e, c) = den.terms().next().map(|(e, c)| (e, c.clone())).unwrap();
        let num = num.shift(-e);
        let g = num.content().gcd(&c);
        let (mut n, mut d) = (num.div_exact_int(&g), c / &g);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        return RationalFn { num: n, den: LaurentPoly::constant(d) };
    }
    let (nshift, n) = num.to_dense();
    let (dshift, d) = den.to_dense();
    let g = poly_gcd(&n, &d);
    let n = poly_div_exact(&n, &g);
    let d = poly_div_exact(&d, &g);
    let c = content(&n).gcd(&content(&d));
    let mut n: Vec<BigInt> = n.iter().map(|x| x / &c).collect();
    let mut d: Vec<BigInt> = d.iter().map(|x| x / &c).collect();
    if d[0].is_negative() {
        n.iter_mut().for_each(|x| *x = -&*x);
        d.iter_mut().for_each(|x| *x = -&*x);
    }
    RationalFn {
        num: LaurentPoly::from_dense(nshift - dshift, &n),
        den: LaurentPoly::from_dense(0, &d),
    }
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let v = trim(v);
    if v.is_empty() {
        return v;
    }
    let c = content(&v);
    let sign = if v.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    let c = c * sign;
    v.into_iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b` over `Z[q]` (dense ascending coefficients).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (i, bi) in b.iter().enumerate() {
            r[dr - db + i] -= &lr * bi;
        }
        r = trim(r);
    }
    r
}

/// Primitive gcd over `Z[q]`, positive leading coefficient.
fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut x = primitive(a.to_vec());
    let mut y = primitive(b.to_vec());
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = primitive(pseudo_rem(&x, &y));
        x = y;
        y = r;
    }
    if x.is_empty() {
        vec![BigInt::one()]
    } else {
        x
    }
}

/// Exact division `a / b` over `Z[q]`; panics if `b` does not divide `a`.
fn poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let a = trim(a.to_vec());
    let b = trim(b.to_vec());
    if b.len() == 1 {
        return a.iter().map(|x| x / &b[0]).collect();
    }
    let mut r = a;
    let db = b.len() - 1;
    let mut quot = vec![BigInt::zero(); r.len().saturating_sub(db)];
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let (qc, rem) = r[dr].div_rem(&b[db]);
        assert!(rem.is_zero(), "inexact polynomial division");
        for (i, bi) in b.iter().enumerate() {
            r[dr - db + i] -= &qc * bi;
        }
        quot[dr - db] = qc;
        r = trim(r);
    }
    assert!(r.is_empty(), "inexact polynomial division");
    quot
}

impl<'a> Add<&'a RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &'a RationalFn) -> RationalFn {
        if self.den == rhs.den {
            if self.den.is_one() {
                return RationalFn { num: &self.num + &rhs.num, den: LaurentPoly::one() };
            }
            return normalize(&self.num + &rhs.num, self.den.clone());
        }
        normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &'a RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &'a RationalFn) -> RationalFn {
        if self.is_zero() || rhs.is_zero() {
            return RationalFn::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFn { num: &self.num * &rhs.num, den: LaurentPoly::one() };
        }
        normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    /// Panics on division by zero; use [`RationalFn::checked_div`] to handle it.
    fn div(self, rhs: &'a RationalFn) -> RationalFn {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: RationalFn) -> RationalFn {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::iter::Sum for RationalFn {
    fn sum<I: Iterator<Item = RationalFn>>(iter: I) -> Self {
        iter.fold(RationalFn::zero(), |acc, x| &acc + &x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn cancellation() {
        let one_minus_q = poly(&[(0, 1), (1, -1)]);
        let r = RationalFn::new(LaurentPoly::one(), one_minus_q.clone()).unwrap();
        assert!((&r * &RationalFn::from(one_minus_q)).is_one());

        let num = poly(&[(0, 1), (2, -1)]);
        let den = poly(&[(0, 1), (1, -1)]);
        let r = RationalFn::new(num, den).unwrap();
        assert_eq!(r.as_laurent(), Some(poly(&[(0, 1), (1, 1)])));
    }

    #[test]
    fn remark_sign_flip() {
        // (-1)^k / (1 - q^k) composed with (-1)^{k-1} is 1 / (q^k - 1).
        for k in 1..=5i64 {
            let a = RationalFn::new(
                LaurentPoly::constant(if k % 2 == 0 { 1 } else { -1 }),
                poly(&[(0, 1), (k, -1)]),
            )
            .unwrap();
            let b = RationalFn::from_int(if (k - 1) % 2 == 0 { 1 } else { -1 });
            let expected = RationalFn::new(LaurentPoly::one(), poly(&[(0, -1), (k, 1)])).unwrap();
            assert_eq!(&a * &b, expected);
        }
    }

    #[test]
    fn normal_form_is_canonical() {
        // q/(q^2 - q) == 1/(q - 1) == -1/(1 - q)
        let a = RationalFn::new(poly(&[(1, 1)]), poly(&[(2, 1), (1, -1)])).unwrap();
        let b = RationalFn::new(LaurentPoly::one(), poly(&[(1, 1), (0, -1)])).unwrap();
        let c = RationalFn::new(LaurentPoly::constant(-1), poly(&[(0, 1), (1, -1)])).unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert!(c.denom().trailing_coeff().unwrap().is_positive());
        // 2/(4 + 4q) == 1/(2 + 2q)
        let d = RationalFn::new(LaurentPoly::constant(2), poly(&[(0, 4), (1, 4)])).unwrap();
        let e = RationalFn::new(LaurentPoly::one(), poly(&[(0, 2), (1, 2)])).unwrap();
        assert_eq!(d, e);
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            RationalFn::new(LaurentPoly::one(), LaurentPoly::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(RationalFn::one().checked_div(&RationalFn::zero()), Err(Error::DivisionByZero));
        assert_eq!(RationalFn::zero().recip(), Err(Error::DivisionByZero));
    }

    #[test]
    fn json_shape() {
        let r = RationalFn::new(LaurentPoly::one(), poly(&[(0, 1), (1, -1)])).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"num":{"0":1},"den":{"0":1,"1":-1}}"#);
        let back: RationalFn = serde_json::from_str(r#"{"num":{"1":2},"den":{"1":2,"2":-2}}"#).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn rational_constants() {
        let half = RationalFn::from_rational(&BigRational::new(1.into(), 2.into()));
        let two = RationalFn::from_int(2);
        assert!((&half * &two).is_one());
        assert_eq!(half.eval_int(7).unwrap(), BigRational::new(1.into(), 2.into()));
    }
}
