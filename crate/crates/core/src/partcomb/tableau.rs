use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use serde::Serialize;

use super::partition::{partitions, Partition};
use crate::error::{Error, Result};
use crate::qpoly::LaurentPoly;

/// A semistandard Young tableau, possibly of skew shape `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Ssyt {
    pub shape: Partition,
    pub inner: Partition,
    /// Row `i` holds the entries in columns `inner_i..shape_i`.
    pub rows: Vec<Vec<usize>>,
    pub content: Vec<usize>,
}

impl Ssyt {
    /// Rows read right to left, top row first.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect()
    }

    pub fn is_semistandard(&self) -> bool {
        let at = |r: usize, c: usize| -> Option<usize> {
            let off = self.inner.part(r);
            (c >= off).then(|| self.rows.get(r).and_then(|row| row.get(c - off).copied())).flatten()
        };
        for (r, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            let off = self.inner.part(r);
            for (k, &v) in row.iter().enumerate() {
                if r > 0 {
                    if let Some(above) = at(r - 1, off + k) {
                        if above >= v {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Every `ν` with `inner ⊆ ν ⊆ outer`, `|ν / inner| = size`, and `ν / inner` a horizontal strip.
pub(crate) fn horizontal_strips(inner: &[usize], outer: &[usize], size: usize) -> Vec<Vec<usize>> {
    let len = outer.len();
    let get = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0);
    let mut out = Vec::new();
    fn rec(
        i: usize,
        left: usize,
        inner: &[usize],
        outer: &[usize],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        get: &dyn Fn(&[usize], usize) -> usize,
    ) {
        if i == outer.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let lo = get(inner, i);
        let mut hi = outer[i];
        if i > 0 {
            hi = hi.min(get(inner, i - 1));
        }
        if hi < lo {
            return;
        }
        for v in lo..=hi.min(lo + left) {
            cur.push(v);
            rec(i + 1, left - (v - lo), inner, outer, cur, out, get);
            cur.pop();
        }
    }
    let mut cur = Vec::with_capacity(len);
    rec(0, size, inner, outer, &mut cur, &mut out, &get);
    out
}

/// All SSYT of skew shape `outer / inner` whose entry `k+1` occurs `content[k]` times.
pub fn skew_ssyt(outer: &Partition, inner: &Partition, content: &[usize]) -> Result<Vec<Ssyt>> {
    if !outer.contains(inner) {
        return Ok(Vec::new());
    }
    let total = outer.size() - inner.size();
    let c: usize = content.iter().sum();
    if c != total {
        return Err(Error::SizeMismatch(total, c));
    }
    let start: Vec<usize> = (0..outer.len()).map(|i| inner.part(i)).collect();
    let mut chains: Vec<Vec<Vec<usize>>> = vec![vec![start]];
    for &ck in content {
        let mut next = Vec::new();
        for chain in chains {
            for s in horizontal_strips(chain.last().unwrap(), outer.parts(), ck) {
                let mut ch = chain.clone();
                ch.push(s);
                next.push(ch);
            }
        }
        chains = next;
    }
    Ok(chains
        .into_iter()
        .map(|chain| {
            let mut rows: Vec<Vec<usize>> = vec![Vec::new(); outer.len()];
            for (k, w) in chain.windows(2).enumerate() {
                for (r, row) in rows.iter_mut().enumerate() {
                    row.extend(std::iter::repeat_n(k + 1, w[1][r] - w[0][r]));
                }
            }
            Ssyt { shape: outer.clone(), inner: inner.clone(), rows, content: content.to_vec() }
        })
        .collect())
}

/// All SSYT of shape `shape` and content `content`.
pub fn ssyt(shape: &Partition, content: &[usize]) -> Result<Vec<Ssyt>> {
    skew_ssyt(shape, &Partition::empty(), content)
}

/// The Kostka number `K_{μλ}`: SSYT of shape `μ` and content `λ`.
pub fn kostka(mu: &Partition, lambda: &Partition) -> Result<u64> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch(mu.size(), lambda.size()));
    }
    Ok(ssyt(mu, lambda.parts())?.len() as u64)
}

/// Charge of a word whose weight is a partition.
pub fn charge(word: &[usize]) -> Result<usize> {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut weight = vec![0usize; max + 1];
    for &w in word {
        if w == 0 {
            return Err(Error::Invalid("letters start at 1".into()));
        }
        weight[w] += 1;
    }
    if weight[1..].windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Invalid(format!("weight {:?} is not a partition", &weight[1..])));
    }
    let n = word.len();
    let mut used = vec![false; n];
    let mut remaining = n;
    let mut total = 0;
    while remaining > 0 {
        let mut pos = (0..n).find(|&i| !used[i] && word[i] == 1).unwrap();
        used[pos] = true;
        remaining -= 1;
        let mut index = 0;
        for r in 2.. {
            let found = (1..=n).map(|d| (pos + d) % n).find(|&i| !used[i] && word[i] == r);
            let Some(i) = found else { break };
            if i < pos {
                index += 1;
            }
            total += index;
            used[i] = true;
            remaining -= 1;
            pos = i;
        }
    }
    Ok(total)
}

type KfCache = Mutex<HashMap<(Partition, Partition), LaurentPoly>>;

fn kf_cache() -> &'static KfCache {
    static CACHE: OnceLock<KfCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The Kostka–Foulkes polynomial `K_{μλ}(q)`, summing `q^charge` over SSYT of shape `μ`, content `λ`.
pub fn kostka_foulkes(mu: &Partition, lambda: &Partition) -> Result<LaurentPoly> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch(mu.size(), lambda.size()));
    }
    let key = (mu.clone(), lambda.clone());
    if let Some(v) = kf_cache().lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let mut f = LaurentPoly::zero();
    for t in ssyt(mu, lambda.parts())? {
        f = f + LaurentPoly::monomial(charge(&t.reading_word())? as i64, BigInt::from(1));
    }
    kf_cache().lock().unwrap().insert(key, f.clone());
    Ok(f)
}

/// `K[i][j] = K_{λ_i λ_j}(q)` over the partitions of `n` in the fixed order.
pub fn kostka_foulkes_matrix(n: usize) -> Vec<Vec<LaurentPoly>> {
    let ps = partitions(n);
    ps.iter()
        .map(|a| ps.iter().map(|b| kostka_foulkes(a, b).unwrap()).collect())
        .collect()
}

/// `K[i][j] = K_{λ_i λ_j}` over the partitions of `n` in the fixed order.
pub fn kostka_matrix(n: usize) -> Vec<Vec<u64>> {
    let ps = partitions(n);
    ps.iter().map(|a| ps.iter().map(|b| kostka(a, b).unwrap()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn poly(t: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(t.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(kostka(&p(&[2, 2, 1]), &p(&[2, 2, 1])).unwrap(), 1);
        assert_eq!(kostka(&p(&[1, 1]), &p(&[2])).unwrap(), 0);
        assert!(kostka(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn standard_tableaux_counted_by_hooks() {
        // f^λ for λ ⊢ 5 in the fixed order
        let f: Vec<u64> = partitions(5).iter().map(|l| kostka(l, &Partition::column(5)).unwrap()).collect();
        assert_eq!(f, vec![1, 4, 5, 6, 5, 4, 1]);
    }

    #[test]
    fn enumerated_tableaux_are_semistandard() {
        for mu in partitions(5) {
            for la in partitions(5) {
                for t in ssyt(&mu, la.parts()).unwrap() {
                    assert!(t.is_semistandard());
                }
            }
        }
    }

    #[test]
    fn charge_examples() {
        assert_eq!(charge(&[3, 2, 1]).unwrap(), 3);
        assert_eq!(charge(&[1, 2, 3]).unwrap(), 0);
        assert_eq!(charge(&[2, 1, 3]).unwrap(), 2);
        assert!(charge(&[2, 2, 1]).is_err());
    }

    #[test]
    fn kostka_foulkes_examples() {
        assert_eq!(kostka_foulkes(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), poly(&[(1, 1), (2, 1)]));
        for n in 1..=6 {
            assert_eq!(
                kostka_foulkes(&Partition::row(n), &Partition::column(n)).unwrap(),
                poly(&[((n * (n - 1) / 2) as i64, 1)])
            );
            for l in partitions(n) {
                assert!(kostka_foulkes(&l, &l).unwrap().is_one());
            }
        }
        // tabulated n = 4 values
        assert_eq!(kostka_foulkes(&p(&[3, 1]), &p(&[2, 1, 1])).unwrap(), poly(&[(1, 1), (2, 1)]));
        assert_eq!(kostka_foulkes(&p(&[2, 2]), &p(&[2, 1, 1])).unwrap(), poly(&[(1, 1)]));
        assert_eq!(
            kostka_foulkes(&p(&[2, 1, 1]), &p(&[1, 1, 1, 1])).unwrap(),
            poly(&[(1, 1), (2, 1), (3, 1)])
        );
        assert_eq!(kostka_foulkes(&p(&[2, 2]), &p(&[1, 1, 1, 1])).unwrap(), poly(&[(2, 1), (4, 1)]));
        assert_eq!(
            kostka_foulkes(&p(&[3, 1]), &p(&[1, 1, 1, 1])).unwrap(),
            poly(&[(3, 1), (4, 1), (5, 1)])
        );
    }

    #[test]
    fn kostka_foulkes_support_and_specialization() {
        for n in 1..=6 {
            for mu in partitions(n) {
                for la in partitions(n) {
                    let k = kostka_foulkes(&mu, &la).unwrap();
                    if !mu.dominates(&la).unwrap() {
                        assert!(k.is_zero());
                    }
                    assert!(k.is_nonnegative());
                    assert_eq!(k.eval_int(1).unwrap(), BigInt::from(kostka(&mu, &la).unwrap()).into());
                }
            }
        }
    }

    // K_{λ,(1^n)}(q) = q^{n(λ')} [n]_q! / Π_{cells} [h(c)]_q
    #[test]
    fn fake_degree_formula() {
        use crate::qpoly::RationalFn;
        let qint = |k: usize| RationalFn::from(LaurentPoly::from_terms((0..k as i64).map(|e| (e, BigInt::from(1)))));
        for n in 1..=7 {
            for la in partitions(n) {
                let conj = la.conjugate();
                let mut f = RationalFn::from(LaurentPoly::monomial(conj.n_stat() as i64, 1));
                for k in 1..=n {
                    f = f * qint(k);
                }
                for (r, c) in la.cells() {
                    let hook = la.part(r) - c + conj.part(c) - r - 1;
                    f = f.checked_div(&qint(hook)).unwrap();
                }
                assert_eq!(RationalFn::from(kostka_foulkes(&la, &Partition::column(n)).unwrap()), f);
            }
        }
    }
}
