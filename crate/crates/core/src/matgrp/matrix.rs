use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partcomb::Partition;
use crate::qpoly::is_prime;

pub const MAX_DIM: usize = 8;

/// Primes whose residues fit the `u8` storage with room for products.
pub const MAX_PRIME: u32 = 251;

pub fn check_field(n: usize, p: u32) -> Result<()> {
    if !is_prime(p as u64) || p > MAX_PRIME {
        return Err(Error::NotPrime(p as u64));
    }
    if n == 0 || n > MAX_DIM {
        return Err(Error::Invalid(format!("dimension {n} outside 1..={MAX_DIM}")));
    }
    Ok(())
}

pub fn inv_mod(a: u32, p: u32) -> Option<u32> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let qt = r0 / r1;
        (r0, r1) = (r1, r0 - qt * r1);
        (t0, t1) = (t1, t0 - qt * t1);
    }
    Some(t0.rem_euclid(p as i64) as u32)
}

/// An `n × n` matrix over `F_p`, stored inline.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqMatrix {
    n: u8,
    p: u8,
    e: [u8; MAX_DIM * MAX_DIM],
}

impl FqMatrix {
    pub fn zero(n: usize, p: u32) -> Self {
        debug_assert!(n <= MAX_DIM && p <= MAX_PRIME);
        Self { n: n as u8, p: p as u8, e: [0; MAX_DIM * MAX_DIM] }
    }

    pub fn identity(n: usize, p: u32) -> Self {
        let mut m = Self::zero(n, p);
        for i in 0..n {
            m.e[i * MAX_DIM + i] = 1;
        }
        m
    }

    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        check_field(n, p)?;
        let mut m = Self::zero(n, p);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::SizeMismatch(row.len(), n));
            }
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x.rem_euclid(p as i64) as u32);
            }
        }
        Ok(m)
    }

    /// `Id + a·e_{ij}` (0-based indices).
    pub fn elementary(n: usize, p: u32, i: usize, j: usize, a: u32) -> Self {
        let mut m = Self::identity(n, p);
        let v = (m.get(i, j) + a) % p;
        m.set(i, j, v);
        m
    }

    /// Direct sum of unipotent Jordan blocks of the given sizes, in order.
    pub fn jordan_blocks(p: u32, sizes: &[usize]) -> Self {
        let n: usize = sizes.iter().sum();
        let mut m = Self::identity(n, p);
        let mut start = 0;
        for &s in sizes {
            for i in start..start + s - 1 {
                m.set(i, i + 1, 1);
            }
            start += s;
        }
        m
    }

    /// The class representative `u_μ`: Jordan blocks in decreasing size.
    pub fn unipotent_rep(p: u32, mu: &Partition) -> Self {
        Self::jordan_blocks(p, mu.parts())
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn p(&self) -> u32 {
        self.p as u32
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.e[i * MAX_DIM + j] as u32
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.e[i * MAX_DIM + j] = (v % self.p as u32) as u8;
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.n()).map(|i| (0..self.n()).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!((self.n, self.p), (other.n, other.p));
        let n = self.n();
        let p = self.p();
        let mut out = Self::zero(n, p);
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u32;
                for k in 0..n {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.e[i * MAX_DIM + j] = (acc % p) as u8;
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.n();
        let p = self.p();
        let mut out = Self::zero(n, p);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.get(i, j) + p - other.get(i, j));
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::identity(self.n(), self.p()), |acc, _| acc.mul(self))
    }

    /// `self · v` for a column vector.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p();
        (0..self.n())
            .map(|i| (0..self.n()).map(|j| self.get(i, j) * v[j]).sum::<u32>() % p)
            .collect()
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<u32>> = self.rows();
        super::subspace::row_reduce(rows, self.p()).len()
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.n();
        let p = self.p();
        let mut a = self.rows();
        let mut inv = Self::identity(n, p).rows();
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r][col] != 0)?;
            a.swap(col, piv);
            inv.swap(col, piv);
            let s = inv_mod(a[col][col], p).expect("nonzero pivot");
            for j in 0..n {
                a[col][j] = a[col][j] * s % p;
                inv[col][j] = inv[col][j] * s % p;
            }
            for r in 0..n {
                if r != col && a[r][col] != 0 {
                    let f = a[r][col];
                    for j in 0..n {
                        a[r][j] = (a[r][j] + p * p - f * a[col][j]) % p;
                        inv[r][j] = (inv[r][j] + p * p - f * inv[col][j]) % p;
                    }
                }
            }
        }
        let mut out = Self::zero(n, p);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, inv[i][j]);
            }
        }
        Some(out)
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n()
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &Self, g_inv: &Self) -> Self {
        g.mul(self).mul(g_inv)
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| self.get(i, i) == 1 && (0..i).all(|j| self.get(i, j) == 0))
    }

    pub fn is_unipotent(&self) -> bool {
        let n = self.n();
        let nil = self.sub(&Self::identity(n, self.p()));
        nil.pow(n).e.iter().all(|&x| x == 0)
    }
}

/// The partition of Jordan block sizes, from kernel dimensions of `(u − 1)^i`.
pub fn jordan_type(u: &FqMatrix) -> Result<Partition> {
    let n = u.n();
    let nil = u.sub(&FqMatrix::identity(n, u.p()));
    let mut dims = vec![0usize];
    let mut power = FqMatrix::identity(n, u.p());
    for _ in 0..n {
        power = power.mul(&nil);
        dims.push(n - power.rank());
    }
    if dims[n] != n {
        return Err(Error::NotUnipotent);
    }
    let conj: Vec<usize> = dims.windows(2).map(|w| w[1] - w[0]).filter(|&d| d > 0).collect();
    Ok(Partition::new(conj)?.conjugate())
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}{:?}", self.p, self.rows())
    }
}

impl fmt::Display for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RawMatrix {
    p: u32,
    rows: Vec<Vec<i64>>,
}

impl Serialize for FqMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows = self.rows().into_iter().map(|r| r.into_iter().map(i64::from).collect()).collect();
        RawMatrix { p: self.p(), rows }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FqMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawMatrix::deserialize(d)?;
        FqMatrix::from_rows(raw.p, &raw.rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partcomb::partitions;

    #[test]
    fn inverses() {
        for p in [2, 3, 5, 7] {
            for a in 1..p {
                assert_eq!(a * inv_mod(a, p).unwrap() % p, 1);
            }
            assert_eq!(inv_mod(0, p), None);
        }
        let g = FqMatrix::from_rows(3, &[vec![1, 2, 0], vec![0, 1, 1], vec![2, 0, 1]]).unwrap();
        let gi = g.inverse().unwrap();
        assert_eq!(g.mul(&gi), FqMatrix::identity(3, 3));
        let s = FqMatrix::from_rows(2, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert!(s.inverse().is_none());
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn jordan_types() {
        for p in [2, 3] {
            for n in 1..=6 {
                assert_eq!(jordan_type(&FqMatrix::identity(n, p)).unwrap(), Partition::column(n));
                for mu in partitions(n) {
                    assert_eq!(jordan_type(&FqMatrix::unipotent_rep(p, &mu)).unwrap(), mu);
                }
            }
        }
        let swap3 = FqMatrix::from_rows(3, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(!swap3.is_unipotent());
        assert_eq!(jordan_type(&swap3), Err(Error::NotUnipotent));
        // in characteristic 2 a transposition is a single unipotent block
        let swap2 = FqMatrix::from_rows(2, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(jordan_type(&swap2).unwrap(), Partition::row(2));
    }

    #[test]
    fn json_round_trip() {
        let g = FqMatrix::from_rows(3, &[vec![1, 2], vec![0, 1]]).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"p":3,"rows":[[1,2],[0,1]]}"#);
        assert_eq!(serde_json::from_str::<FqMatrix>(&s).unwrap(), g);
        assert!(serde_json::from_str::<FqMatrix>(r#"{"p":4,"rows":[[1]]}"#).is_err());
    }
}
