use std::collections::HashSet;

use num_bigint::BigUint;
use rayon::prelude::*;

use super::matrix::{check_field, FqMatrix};
use crate::error::{Error, Result};
use crate::partcomb::Partition;

pub const DEFAULT_BUDGET: u64 = 30_000_000;

/// The group-order budget: `GGG_BUDGET` if set and parseable, else 3×10^7.
pub fn default_budget() -> u64 {
    std::env::var("GGG_BUDGET").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_BUDGET)
}

pub fn check_budget(count: Option<u128>, budget: u64) -> Result<u128> {
    match count {
        Some(c) if c <= budget as u128 => Ok(c),
        Some(c) => Err(Error::BudgetExceeded { count: c, budget }),
        None => Err(Error::BudgetExceeded { count: u128::MAX, budget }),
    }
}

pub fn gl_order_big(n: usize, p: u32) -> BigUint {
    let q = BigUint::from(p);
    let qn = q.pow(n as u32);
    (0..n).map(|i| &qn - q.pow(i as u32)).product()
}

pub fn gl_order(n: usize, p: u32) -> Option<u128> {
    let q = p as u128;
    let qn = q.checked_pow(n as u32)?;
    (0..n).try_fold(1u128, |acc, i| acc.checked_mul(qn - q.pow(i as u32)))
}

pub fn ut_order(n: usize, p: u32) -> BigUint {
    BigUint::from(p).pow((n * (n - 1) / 2) as u32)
}

fn vector(index: usize, n: usize, p: u32) -> Vec<u32> {
    let mut k = index;
    (0..n)
        .map(|_| {
            let d = (k % p as usize) as u32;
            k /= p as usize;
            d
        })
        .collect()
}

fn encode(v: &[u32], p: u32) -> usize {
    v.iter().rev().fold(0usize, |acc, &d| acc * p as usize + d as usize)
}

struct GlWalker {
    n: usize,
    p: u32,
    vectors: Vec<Vec<u32>>,
}

impl GlWalker {
    fn new(n: usize, p: u32) -> Self {
        let total = (p as usize).pow(n as u32);
        Self { n, p, vectors: (0..total).map(|k| vector(k, n, p)).collect() }
    }

    fn extend_span(&self, span: &[usize], v: usize) -> Vec<usize> {
        let p = self.p;
        let mut out = Vec::with_capacity(span.len() * p as usize);
        for c in 0..p {
            for &s in span {
                let w: Vec<u32> =
                    self.vectors[s].iter().zip(&self.vectors[v]).map(|(a, b)| (a + c * b) % p).collect();
                out.push(encode(&w, p));
            }
        }
        out
    }

    fn walk<T>(&self, row: usize, rows: &mut Vec<usize>, span: &[usize], acc: T, f: &impl Fn(T, &FqMatrix) -> T) -> T {
        if row == self.n {
            let mut m = FqMatrix::zero(self.n, self.p);
            for (i, &r) in rows.iter().enumerate() {
                for (j, &x) in self.vectors[r].iter().enumerate() {
                    m.set(i, j, x);
                }
            }
            return f(acc, &m);
        }
        let mut in_span = vec![false; self.vectors.len()];
        for &s in span {
            in_span[s] = true;
        }
        let mut acc = acc;
        for v in 0..self.vectors.len() {
            if in_span[v] {
                continue;
            }
            let next = self.extend_span(span, v);
            rows.push(v);
            acc = self.walk(row + 1, rows, &next, acc, f);
            rows.pop();
        }
        acc
    }
}

/// Folds `f` over `GL_n(F_p)` in parallel chunks keyed by the first row and
/// combines with `reduce`; exact `reduce` makes the result thread-count independent.
pub fn gl_fold<T, F, R>(n: usize, p: u32, budget: u64, identity: impl Fn() -> T + Sync, f: F, reduce: R) -> Result<T>
where
    T: Send,
    F: Fn(T, &FqMatrix) -> T + Sync,
    R: Fn(T, T) -> T + Sync,
{
    check_field(n, p)?;
    check_budget(gl_order(n, p), budget)?;
    let walker = GlWalker::new(n, p);
    let zero = [0usize];
    Ok((1..walker.vectors.len())
        .into_par_iter()
        .map(|first| {
            let span = walker.extend_span(&zero, first);
            walker.walk(1, &mut vec![first], &span, identity(), &f)
        })
        .reduce(&identity, &reduce))
}

/// Calls `f` on every element of `GL_n(F_p)` in a fixed order.
pub fn for_each_gl(n: usize, p: u32, budget: u64, mut f: impl FnMut(&FqMatrix)) -> Result<()> {
    check_field(n, p)?;
    check_budget(gl_order(n, p), budget)?;
    let walker = GlWalker::new(n, p);
    let cell = std::cell::RefCell::new(&mut f);
    walker.walk(0, &mut Vec::new(), &[0], (), &|(), g| (cell.borrow_mut())(g));
    Ok(())
}

/// `|C_{GL_n(F_p)}(u_μ)| = q^{Σ μ′_i²} Π_i Π_{k ≤ m_i} (1 − q^{−k})`.
pub fn centralizer_order(mu: &Partition, p: u32) -> BigUint {
    let q = BigUint::from(p);
    let conj = mu.conjugate();
    let mut exp: usize = conj.parts().iter().map(|c| c * c).sum();
    let mut acc = BigUint::from(1u32);
    for (_, m) in mu.multiplicities() {
        for k in 1..=m {
            acc *= q.pow(k as u32) - 1u32;
            exp -= k;
        }
    }
    acc * q.pow(exp as u32)
}

pub fn class_size(mu: &Partition, p: u32) -> BigUint {
    gl_order_big(mu.size(), p) / centralizer_order(mu, p)
}

/// Centralizer order by counting commuting elements.
pub fn centralizer_order_direct(u: &FqMatrix, budget: u64) -> Result<u128> {
    gl_fold(u.n(), u.p(), budget, || 0u128, |acc, g| acc + (g.mul(u) == u.mul(g)) as u128, |a, b| a + b)
}

/// Conjugacy class size by collecting the orbit.
pub fn class_size_by_orbit(u: &FqMatrix, budget: u64) -> Result<usize> {
    let mut orbit = HashSet::new();
    for_each_gl(u.n(), u.p(), budget, |g| {
        let gi = g.inverse().expect("invertible");
        orbit.insert(u.conjugate_by(g, &gi));
    })?;
    Ok(orbit.len())
}

/// `#{g : g⁻¹ u g ∈ P_α} / |P_α|`, the coset count of fixed flags.
pub fn fixed_flag_count_cosets(u: &FqMatrix, alpha: &crate::partcomb::Composition, budget: u64) -> Result<u128> {
    let par = super::Parabolic::new(alpha);
    let hits = gl_fold(
        u.n(),
        u.p(),
        budget,
        || 0u128,
        |acc, g| {
            let gi = g.inverse().expect("invertible");
            acc + par.contains(&gi.mul(u).mul(g)) as u128
        },
        |a, b| a + b,
    )?;
    let order: u128 = par.order(u.p()).try_into().expect("parabolic order fits");
    Ok(hits / order)
}
