use std::collections::BTreeMap;

use super::partition::{partitions, Partition};
use super::tableau::skew_ssyt;
use crate::error::{Error, Result};

fn is_lattice(word: &[usize]) -> bool {
    let mut seen: Vec<usize> = Vec::new();
    for &w in word {
        if seen.len() < w {
            seen.resize(w, 0);
        }
        seen[w - 1] += 1;
        if w > 1 && seen[w - 1] > seen[w - 2] {
            return false;
        }
    }
    true
}

/// The Littlewood–Richardson coefficient `c^λ_{μν}`, the coefficient of `s_λ` in `s_μ s_ν`.
pub fn lr_coefficient(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<u64> {
    if mu.size() + nu.size() != lambda.size() {
        return Err(Error::SizeMismatch(mu.size() + nu.size(), lambda.size()));
    }
    if !lambda.contains(mu) || !lambda.contains(nu) {
        return Ok(0);
    }
    Ok(skew_ssyt(lambda, mu, nu.parts())?
        .iter()
        .filter(|t| is_lattice(&t.reading_word()))
        .count() as u64)
}

/// Schur expansion of `s_{ν_1} s_{ν_2} ⋯`.
pub fn lr_product(factors: &[Partition]) -> BTreeMap<Partition, u64> {
    let mut acc: BTreeMap<Partition, u64> = BTreeMap::from([(Partition::empty(), 1)]);
    for nu in factors {
        let mut next = BTreeMap::new();
        for (mu, c) in &acc {
            for la in partitions(mu.size() + nu.size()) {
                if !la.contains(mu) {
                    continue;
                }
                let k = lr_coefficient(mu, nu, &la).unwrap();
                if k > 0 {
                    *next.entry(la).or_insert(0) += c * k;
                }
            }
        }
        acc = next;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partcomb::{sn_character, z_mu};
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::Zero;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[3])).unwrap(), 1);
        assert!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[3])).is_err());
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])).unwrap(), 2);
    }

    // Power-sum route: s_μ s_ν = Σ_{ρ,σ} χ^μ_ρ χ^ν_σ / (z_ρ z_σ) p_{ρ∪σ}, then ⟨·, s_λ⟩.
    fn lr_via_power_sums(mu: &Partition, nu: &Partition, la: &Partition) -> BigRational {
        let mut total = BigRational::zero();
        for rho in partitions(mu.size()) {
            for sigma in partitions(nu.size()) {
                let num = BigInt::from(
                    sn_character(mu, &rho).unwrap()
                        * sn_character(nu, &sigma).unwrap()
                        * sn_character(la, &rho.union(&sigma)).unwrap(),
                );
                total += BigRational::new(num, z_mu(&rho) * z_mu(&sigma));
            }
        }
        total
    }

    #[test]
    fn agrees_with_power_sum_route() {
        for n in 2..=6 {
            for k in 1..n {
                for mu in partitions(k) {
                    for nu in partitions(n - k) {
                        for la in partitions(n) {
                            let c = lr_coefficient(&mu, &nu, &la).unwrap();
                            assert_eq!(BigRational::from(BigInt::from(c)), lr_via_power_sums(&mu, &nu, &la));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn product_of_rows_is_kostka() {
        let la = p(&[2, 2, 1]);
        let prod = lr_product(&la.parts().iter().map(|&r| Partition::row(r)).collect::<Vec<_>>());
        for (mu, c) in prod {
            assert_eq!(c, crate::partcomb::kostka(&mu, &la).unwrap());
        }
    }
}
