use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An element of `Q(ζ_p)` for a prime `p`, in the power basis `1, ζ, …, ζ^{p-2}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    p: u32,
    coords: Vec<BigRational>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl Cyclotomic {
    pub fn zero(p: u32) -> Self {
        assert!(p >= 2);
        Self { p, coords: vec![BigRational::zero(); (p - 1) as usize] }
    }

    pub fn one(p: u32) -> Self {
        Self::rational(p, BigRational::one())
    }

    pub fn rational(p: u32, r: BigRational) -> Self {
        let mut z = Self::zero(p);
        z.coords[0] = r;
        z
    }

    pub fn integer(p: u32, c: i64) -> Self {
        Self::rational(p, BigRational::from_integer(c.into()))
    }

    /// `ζ_p^a`.
    pub fn zeta_pow(p: u32, a: i64) -> Self {
        let mut counts = vec![0i64; p as usize];
        counts[a.rem_euclid(p as i64) as usize] = 1;
        Self::from_exponent_counts(p, &counts)
    }

    /// `Σ_a counts[a] · ζ^a` for `a` in `0..p`.
    pub fn from_exponent_counts(p: u32, counts: &[i64]) -> Self {
        assert_eq!(counts.len(), p as usize);
        Self::from_exponent_coeffs(p, counts.iter().map(|&c| BigRational::from_integer(c.into())))
    }

    fn from_exponent_coeffs(p: u32, coeffs: impl Iterator<Item = BigRational>) -> Self {
        let c: Vec<BigRational> = coeffs.collect();
        let top = c[(p - 1) as usize].clone();
        Self {
            p,
            coords: c[..(p - 1) as usize].iter().map(|x| x - &top).collect(),
        }
    }

    fn exponent_coeffs(&self) -> Vec<BigRational> {
        let mut v = self.coords.clone();
        v.push(BigRational::zero());
        v
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coords[0].clone())
    }

    /// True when every coordinate is an integer, i.e. the element lies in `Z[ζ_p]`.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// Complex conjugation `ζ -> ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let e = self.exponent_coeffs();
        let p = self.p as usize;
        Self::from_exponent_coeffs(self.p, (0..p).map(|a| e[(p - a) % p].clone()))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self { p: self.p, coords: self.coords.iter().map(|c| c * r).collect() }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.p, other.p, "cyclotomic conductors differ");
    }
}

/// `ϑ(a) = ζ_p^a`, the standard nontrivial character of `F_p^+`.
pub fn cyclo_theta(p: u32, a: u32) -> Result<Cyclotomic> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if a >= p {
        return Err(Error::Invalid(format!("{a} is not a residue mod {p}")));
    }
    Ok(Cyclotomic::zeta_pow(p, a as i64))
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.check(rhs);
        Cyclotomic {
            p: self.p,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { p: self.p, coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.check(rhs);
        let p = self.p as usize;
        let mut acc = vec![BigRational::zero(); p];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    acc[(i + j) % p] += a * b;
                }
            }
        }
        Cyclotomic::from_exponent_coeffs(self.p, acc.into_iter())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        let parts: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})z{}", self.p),
                _ => format!("({c})z{}^{i}", self.p),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl From<&Cyclotomic> for serde_json::Value {
    fn from(z: &Cyclotomic) -> Self {
        match z.to_rational() {
            Some(r) if r.is_integer() => rational_json(&r),
            Some(r) => rational_json(&r),
            None => serde_json::json!({
                "p": z.p,
                "coords": z.coords.iter().map(rational_json).collect::<Vec<_>>(),
            }),
        }
    }
}

/// Integers as JSON numbers when they fit, other rationals as `"a/b"` strings.
pub fn rational_json(r: &BigRational) -> serde_json::Value {
    use num_traits::ToPrimitive;
    if r.is_integer() {
        if let Some(v) = r.numer().to_i64() {
            return serde_json::Value::from(v);
        }
    }
    serde_json::Value::from(r.to_string())
}

#[cfg(test)]
pub(crate) fn big(c: i64) -> BigRational {
    BigRational::from_integer(num_bigint::BigInt::from(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_examples() {
        assert_eq!(cyclo_theta(2, 0).unwrap(), Cyclotomic::one(2));
        assert_eq!(cyclo_theta(2, 1).unwrap(), Cyclotomic::integer(2, -1));
        let s = (0..3).map(|a| cyclo_theta(3, a).unwrap()).fold(Cyclotomic::zero(3), |x, y| x + y);
        assert!(s.is_zero());
        assert_eq!(cyclo_theta(4, 1), Err(Error::NotPrime(4)));
    }

    #[test]
    fn theta_is_additive_and_sums_vanish() {
        for p in [2u32, 3, 5, 7, 11, 13] {
            for a in 0..p {
                for b in 0..p {
                    let lhs = cyclo_theta(p, a).unwrap() * cyclo_theta(p, b).unwrap();
                    assert_eq!(lhs, cyclo_theta(p, (a + b) % p).unwrap());
                }
            }
            let total = (0..p).fold(Cyclotomic::zero(p), |acc, a| acc + cyclo_theta(p, a).unwrap());
            assert!(total.is_zero(), "p = {p}");
        }
    }

    #[test]
    fn conjugation_inverts() {
        for p in [3u32, 5, 7] {
            for a in 0..p {
                let z = cyclo_theta(p, a).unwrap();
                assert_eq!(&z * &z.conj(), Cyclotomic::one(p));
            }
        }
    }

    #[test]
    fn exponent_counts_reduce() {
        // 3 + 2ζ + ζ^2 in Q(ζ_3) = 2 + ζ
        let z = Cyclotomic::from_exponent_counts(3, &[3, 2, 1]);
        assert_eq!(z.coords(), &[big(2), big(1)]);
    }
}
