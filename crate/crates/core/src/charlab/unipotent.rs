use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::classfn::{unipotent_inner_product, ClassFn};
use super::induce::LinearCharacter;
use crate::dense::Matrix;
use crate::error::{Error, Result};
use crate::matgrp::{fixed_flag_count, for_each_gl, gl_order_big, FqMatrix, Parabolic, PatternSubgroup};
use crate::partcomb::{kostka, partitions, Composition, Partition};
use crate::qpoly::Cyclotomic;

/// `Ind_{P_λ}^{GL_n}(1)` on unipotent classes, from fixed-flag counts.
pub fn permutation_character(lambda: &Partition, p: u32) -> Result<ClassFn> {
    let n = lambda.size();
    let alpha = Composition::from(lambda);
    let values = partitions(n)
        .into_iter()
        .map(|mu| {
            let u = FqMatrix::unipotent_rep(p, &mu);
            (mu, BigRational::from_integer(BigInt::from(fixed_flag_count(&u, &alpha))))
        })
        .collect();
    ClassFn::from_rationals(n, p, values)
}

/// The unipotent characters `χ^μ` on unipotent classes, solved from
/// `Ind_{P_λ}(1) = Σ_μ K_{μ′λ} χ^μ`. `χ^{(1^n)}` is trivial and `χ^{(n)}` is Steinberg.
pub fn unipotent_character_values(n: usize, p: u32) -> Result<BTreeMap<Partition, ClassFn>> {
    let parts = partitions(n);
    let k = parts.len();
    let a = Matrix::from_fn(k, k, |l, m| {
        BigRational::from_integer(BigInt::from(kostka(&parts[m].conjugate(), &parts[l]).expect("same size")))
    });
    let a_inv = a.inverse()?;
    let perms: Vec<BTreeMap<Partition, BigRational>> =
        parts.iter().map(|la| permutation_character(la, p)?.to_rationals()).collect::<Result<_>>()?;
    let mut out = BTreeMap::new();
    for (m, mu) in parts.iter().enumerate() {
        let values = parts
            .iter()
            .map(|cls| {
                let v = (0..k).fold(BigRational::zero(), |acc, l| acc + a_inv.get(m, l) * &perms[l][cls]);
                (cls.clone(), v)
            })
            .collect();
        out.insert(mu.clone(), ClassFn::from_rationals(n, p, values)?);
    }
    Ok(out)
}

/// `#{P_μ g U : g⁻¹P_μ g ∩ U ⊆ ker γ}`, by walking double cosets.
pub fn intertwining_count(mu: &Partition, gamma: &LinearCharacter, budget: u64) -> Result<u128> {
    let u = gamma.domain();
    let n = u.n();
    let p = u.p();
    if mu.size() != n {
        return Err(Error::SizeMismatch(mu.size(), n));
    }
    let par = Parabolic::new(&Composition::from(mu));
    let mut group = Vec::new();
    for_each_gl(n, p, budget, |g| group.push(*g))?;
    let index: HashMap<FqMatrix, usize> = group.iter().enumerate().map(|(k, g)| (*g, k)).collect();
    let p_elems: Vec<FqMatrix> = group.iter().filter(|g| par.contains(g)).copied().collect();
    let u_elems: Vec<FqMatrix> = u.elements(budget)?.collect();
    let mut seen = vec![false; group.len()];
    let mut count = 0;
    for start in 0..group.len() {
        if seen[start] {
            continue;
        }
        let g = group[start];
        for a in &p_elems {
            let ag = a.mul(&g);
            for x in &u_elems {
                seen[index[&ag.mul(x)]] = true;
            }
        }
        let gi = g.inverse().expect("invertible");
        let ok = u_elems.iter().all(|x| !par.contains(&x.conjugate_by(&g, &gi)) || gamma.exponent(x) == 0);
        count += ok as u128;
    }
    Ok(count)
}

/// Outcome of testing the multiplicity and support conditions against `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Characterization {
    /// `⟨f, χ^μ⟩ = 0` unless `μ ⪰ λ`.
    pub multiplicities: bool,
    /// `f(u_μ) = 0` unless `μ ⪯ λ`.
    pub support: bool,
    pub is_multiple: bool,
    /// `f(1)/Γ_λ(1)` when both conditions hold.
    pub c: Option<Cyclotomic>,
}

pub fn verify_characterization(
    f: &ClassFn,
    lambda: &Partition,
    chars: &BTreeMap<Partition, ClassFn>,
) -> Result<Characterization> {
    let mut g1 = true;
    let mut g2 = true;
    for mu in partitions(lambda.size()) {
        if !mu.dominates(lambda)? && !unipotent_inner_product(f, &chars[&mu])?.is_zero() {
            g1 = false;
        }
        if !lambda.dominates(&mu)? && !f.get(&mu).is_zero() {
            g2 = false;
        }
    }
    let is_multiple = g1 && g2;
    let c = is_multiple.then(|| {
        let u = PatternSubgroup::ctr(lambda, f.p()).expect("valid partition");
        let ratio = BigRational::new(BigInt::from(u.order()), BigInt::from(gl_order_big(f.n(), f.p())));
        f.degree().scale(&ratio)
    });
    Ok(Characterization { multiplicities: g1, support: g2, is_multiple, c })
}

/// The unipotent degree `q^{n(μ′)} Π_{i ≤ n}(q^i − 1) / Π_h (q^h − 1)` over hooks of `μ`.
pub fn unipotent_degree(mu: &Partition, p: u32) -> BigRational {
    let q = BigInt::from(p);
    let n = mu.size();
    let conj = mu.conjugate();
    let mut num = q.pow(conj.n_stat() as u32);
    for i in 1..=n {
        num *= q.pow(i as u32) - 1;
    }
    let mut den = BigInt::one();
    for (r, c) in mu.cells() {
        let hook = mu.part(r) - c + conj.part(c) - r - 1;
        den *= q.pow(hook as u32) - 1;
    }
    BigRational::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arcdiag::nonnesting_set_partitions;
    use crate::charlab::induce::{induce_to_gl, InductionMethod};
    use crate::matgrp::DEFAULT_BUDGET;

    #[test]
    fn trivial_and_steinberg() {
        for (n, p) in [(2, 2), (3, 2), (3, 3), (4, 2)] {
            let chars = unipotent_character_values(n, p).unwrap();
            let triv = &chars[&Partition::column(n)];
            assert!(triv.values().values().all(|v| *v == Cyclotomic::one(p)));
            let st = &chars[&Partition::row(n)];
            let q = BigInt::from(p).pow((n * (n - 1) / 2) as u32);
            assert_eq!(st.degree().to_rational().unwrap(), BigRational::from_integer(q));
            for (mu, chi) in &chars {
                assert_eq!(chi.degree().to_rational().unwrap(), unipotent_degree(mu, p), "{mu}");
                assert!(chi.values().values().all(|v| v.to_rational().unwrap().is_integer()));
            }
        }
    }

    #[test]
    fn permutation_character_decomposes() {
        for n in 1..=4 {
            let chars = unipotent_character_values(n, 2).unwrap();
            for la in partitions(n) {
                let perm = permutation_character(&la, 2).unwrap();
                let mut sum = ClassFn::zero(n, 2);
                for (mu, chi) in &chars {
                    let k = kostka(&mu.conjugate(), &la).unwrap();
                    sum = sum.add(&chi.scale(&BigRational::from_integer(k.into()))).unwrap();
                }
                assert_eq!(sum, perm);
            }
        }
    }

    #[test]
    fn intertwining_matches_inner_products() {
        let n = 3;
        let p = 2;
        for eta in nonnesting_set_partitions(n) {
            let u = PatternSubgroup::from_set_partition(&eta, p).unwrap();
            let gamma = LinearCharacter::new(u, &eta).unwrap();
            let ind = induce_to_gl(&gamma, InductionMethod::ClassRestriction, DEFAULT_BUDGET).unwrap();
            for mu in partitions(n) {
                let count = intertwining_count(&mu, &gamma, DEFAULT_BUDGET).unwrap();
                let ip = unipotent_inner_product(&permutation_character(&mu, p).unwrap(), &ind).unwrap();
                assert_eq!(ip, Cyclotomic::integer(p, count as i64), "{eta} {mu}");
                assert_eq!(count > 0, mu.conjugate().dominates(&eta.block_sizes()).unwrap());
            }
        }
        let ut = PatternSubgroup::full(n, p).unwrap();
        let triv = LinearCharacter::trivial(ut);
        assert_eq!(intertwining_count(&Partition::column(n), &triv, DEFAULT_BUDGET).unwrap(), 6);
    }

    #[test]
    fn characterization_rejects_sums() {
        let (n, p) = (3, 2);
        let chars = unipotent_character_values(n, p).unwrap();
        let g = |l: Vec<usize>| {
            crate::charlab::induce::ggg_character(&Partition::new(l).unwrap(), p, InductionMethod::ClassRestriction, DEFAULT_BUDGET).unwrap()
        };
        let sum = g(vec![3]).add(&g(vec![2, 1])).unwrap();
        let top = verify_characterization(&sum, &Partition::row(3), &chars).unwrap();
        assert!(top.support && !top.multiplicities && !top.is_multiple && top.c.is_none());
        let mid = verify_characterization(&sum, &Partition::new(vec![2, 1]).unwrap(), &chars).unwrap();
        assert!(mid.multiplicities && !mid.support && !mid.is_multiple);
        let exact = verify_characterization(&g(vec![2, 1]), &Partition::new(vec![2, 1]).unwrap(), &chars).unwrap();
        assert!(exact.is_multiple);
        assert_eq!(exact.c, Some(Cyclotomic::one(p)));
    }

}
