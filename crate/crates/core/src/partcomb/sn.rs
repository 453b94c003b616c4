use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use super::partition::{partitions, Partition};
use crate::error::{Error, Result};

fn mn(beta: &mut Vec<usize>, hooks: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&k, rest)) = hooks.split_first() else {
        return 1;
    };
    let key = (beta.clone(), hooks.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for idx in 0..beta.len() {
        let b = beta[idx];
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        beta[idx] = b - k;
        total += sign * mn(beta, rest, memo);
        beta[idx] = b;
    }
    memo.insert(key, total);
    total
}

/// The irreducible character `ψ^α` of `S_n` at the class of cycle type `μ`
/// (Murnaghan–Nakayama rule on beta-numbers).
pub fn sn_character(alpha: &Partition, mu: &Partition) -> Result<i64> {
    if alpha.size() != mu.size() {
        return Err(Error::SizeMismatch(alpha.size(), mu.size()));
    }
    let l = alpha.len();
    let mut beta: Vec<usize> = (0..l).map(|i| alpha.part(i) + (l - 1 - i)).collect();
    Ok(mn(&mut beta, mu.parts(), &mut HashMap::new()))
}

/// `z_μ = Π i^{m_i} m_i!`, the centralizer order of a permutation of cycle type `μ`.
pub fn z_mu(mu: &Partition) -> BigInt {
    mu.multiplicities().into_iter().fold(BigInt::one(), |acc, (i, m)| {
        let fact: BigInt = (1..=m).map(BigInt::from).product();
        acc * BigInt::from(i).pow(m as u32) * fact
    })
}

/// `table[a][m] = ψ^{α_a}_{μ_m}` over the partitions of `n` in the fixed order.
pub fn character_table(n: usize) -> Vec<Vec<i64>> {
    let ps = partitions(n);
    ps.iter().map(|a| ps.iter().map(|m| sn_character(a, m).unwrap()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        for n in 1..=6 {
            for mu in partitions(n) {
                assert_eq!(sn_character(&Partition::row(n), &mu).unwrap(), 1);
            }
        }
        assert_eq!(sn_character(&p(&[1, 1]), &p(&[2])).unwrap(), -1);
        assert_eq!(z_mu(&p(&[1, 1, 1])), BigInt::from(6));
        assert_eq!(z_mu(&p(&[2, 2, 1])), BigInt::from(8));
        assert_eq!(sn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(sn_character(&p(&[3, 1, 1]), &p(&[1, 1, 1, 1, 1])).unwrap(), 6);
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=7 {
            let t = character_table(n);
            let ps = partitions(n);
            for (j, mu) in ps.iter().enumerate() {
                for (k, _) in ps.iter().enumerate() {
                    let s: i64 = t.iter().map(|row| row[j] * row[k]).sum();
                    let expect = if j == k { z_mu(mu) } else { BigInt::from(0) };
                    assert_eq!(BigInt::from(s), expect);
                }
            }
        }
    }

    #[test]
    fn degrees_are_standard_tableaux_counts() {
        for n in 1..=6 {
            for a in partitions(n) {
                let d = sn_character(&a, &Partition::column(n)).unwrap();
                assert_eq!(d as u64, crate::partcomb::kostka(&a, &Partition::column(n)).unwrap());
            }
        }
    }
}
