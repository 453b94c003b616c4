use std::collections::HashMap;

use super::matrix::{inv_mod, FqMatrix};
use crate::partcomb::Composition;

/// Reduced row echelon form, zero rows dropped.
pub fn row_reduce(mut rows: Vec<Vec<u32>>, p: u32) -> Vec<Vec<u32>> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, piv);
        let s = inv_mod(rows[rank][col], p).expect("nonzero pivot");
        for x in rows[rank].iter_mut() {
            *x = *x * s % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col];
                for j in 0..cols {
                    rows[r][j] = (rows[r][j] + p * p - f * rows[rank][j]) % p;
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

/// A subspace of `F_p^n`, by its reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    p: u32,
    basis: Vec<Vec<u32>>,
}

impl Subspace {
    pub fn span(p: u32, vectors: Vec<Vec<u32>>) -> Self {
        Self { p, basis: row_reduce(vectors, p) }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let p = self.p;
        let mut v = v.to_vec();
        for b in &self.basis {
            let piv = b.iter().position(|&x| x != 0).expect("echelon rows are nonzero");
            let f = v[piv];
            if f != 0 {
                for (x, y) in v.iter_mut().zip(b) {
                    *x = (*x + p * p - f * y) % p;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn is_invariant(&self, u: &FqMatrix) -> bool {
        self.basis.iter().all(|b| self.contains(&u.apply(b)))
    }
}

/// Every `d`-dimensional subspace of `F_p^n`, one echelon form each.
pub fn subspaces(n: usize, p: u32, d: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    for pivots in choose(n, d) {
        let free: Vec<(usize, usize)> = (0..d)
            .flat_map(|r| {
                let pv = pivots.clone();
                (pivots[r] + 1..n).filter(move |c| !pv.contains(c)).map(move |c| (r, c))
            })
            .collect();
        let total = (p as usize).pow(free.len() as u32);
        for idx in 0..total {
            let mut basis = vec![vec![0u32; n]; d];
            for (r, &c) in pivots.iter().enumerate() {
                basis[r][c] = 1;
            }
            let mut k = idx;
            for &(r, c) in &free {
                basis[r][c] = (k % p as usize) as u32;
                k /= p as usize;
            }
            out.push(Subspace { p, basis });
        }
    }
    out
}

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    (0..n)
        .flat_map(|first| {
            choose(n, k - 1)
                .into_iter()
                .filter(move |rest| rest.first().is_none_or(|&r| r > first))
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// Flags of type `α` fixed by `u`, i.e. the permutation character of `G/P_α` at `u`.
pub fn fixed_flag_count(u: &FqMatrix, alpha: &Composition) -> u128 {
    let n = u.n();
    let p = u.p();
    assert_eq!(alpha.size(), n, "composition size must match the dimension");
    let mut dims = Vec::new();
    let mut acc = 0;
    for &a in alpha.parts() {
        acc += a;
        dims.push(acc);
    }
    // chains counted level by level: counts[W] = number of fixed partial flags ending at W
    let mut prev: Vec<(Subspace, u128)> = vec![(Subspace::span(p, Vec::new()), 1)];
    for &d in &dims {
        let level: Vec<Subspace> = subspaces(n, p, d).into_iter().filter(|v| v.is_invariant(u)).collect();
        let mut next: HashMap<usize, u128> = HashMap::new();
        for (i, v) in level.iter().enumerate() {
            let c: u128 = prev.iter().filter(|(w, _)| w.is_subspace_of(v)).map(|(_, c)| c).sum();
            if c > 0 {
                next.insert(i, c);
            }
        }
        prev = level.into_iter().enumerate().filter_map(|(i, v)| next.get(&i).map(|&c| (v, c))).collect();
    }
    prev.iter().map(|(_, c)| c).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partcomb::{compositions, Partition};

    fn gaussian_binomial(n: usize, k: usize, q: u128) -> u128 {
        let num: u128 = (0..k).map(|i| q.pow((n - i) as u32) - 1).product();
        let den: u128 = (0..k).map(|i| q.pow((i + 1) as u32) - 1).product();
        num / den
    }

    #[test]
    fn subspace_counts() {
        for p in [2u32, 3] {
            for n in 1..=4 {
                for d in 0..=n {
                    assert_eq!(subspaces(n, p, d).len() as u128, gaussian_binomial(n, d, p as u128));
                }
            }
        }
    }

    #[test]
    fn identity_fixes_every_flag() {
        // |G/P_α| is the q-multinomial coefficient
        for p in [2u32, 3] {
            for n in 1..=4 {
                let id = FqMatrix::identity(n, p);
                for alpha in compositions(n) {
                    let mut rest = n;
                    let mut expect = 1;
                    for &a in alpha.parts() {
                        expect *= gaussian_binomial(rest, a, p as u128);
                        rest -= a;
                    }
                    assert_eq!(fixed_flag_count(&id, &alpha), expect, "{alpha}");
                }
            }
        }
    }

    #[test]
    fn examples() {
        let c11 = Composition::new(vec![1, 1]).unwrap();
        for p in [2, 3, 5] {
            assert_eq!(fixed_flag_count(&FqMatrix::identity(2, p), &c11), p as u128 + 1);
            for n in 1..=4 {
                let reg = FqMatrix::unipotent_rep(p, &Partition::row(n));
                assert_eq!(fixed_flag_count(&reg, &Composition::new(vec![1; n]).unwrap()), 1);
                let mu = Partition::from_unsorted(vec![n - n / 2, n / 2]);
                let u = FqMatrix::unipotent_rep(p, &mu);
                assert_eq!(fixed_flag_count(&u, &Composition::new(vec![n]).unwrap()), 1);
            }
        }
    }
}
