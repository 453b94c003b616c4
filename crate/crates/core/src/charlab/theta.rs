use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partcomb::{green_polynomial, kostka_foulkes, lr_product, partitions, sn_character, z_mu, Partition};
use crate::qpoly::{LaurentPoly, RationalFn};

/// A multipartition over Frobenius orbits, each orbit recorded only by its degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThetaPartition {
    orbits: Vec<(usize, Partition)>,
}

impl ThetaPartition {
    /// Empty partitions are dropped; degrees must be positive.
    pub fn new(orbits: Vec<(usize, Partition)>) -> Result<Self> {
        if orbits.iter().any(|(d, _)| *d == 0) {
            return Err(Error::Invalid("orbit degree must be positive".into()));
        }
        Ok(Self { orbits: orbits.into_iter().filter(|(_, p)| !p.is_empty()).collect() })
    }

    /// One degree-1 orbit carrying `μ`.
    pub fn unipotent(mu: Partition) -> Self {
        Self { orbits: vec![(1, mu)] }
    }

    pub fn orbits(&self) -> &[(usize, Partition)] {
        &self.orbits
    }

    pub fn size(&self) -> usize {
        self.orbits.iter().map(|(d, p)| d * p.size()).sum()
    }

    pub fn all_degree_one(&self) -> bool {
        self.orbits.iter().all(|(d, _)| *d == 1)
    }

    /// Each orbit's partition replaced by a column of the same size.
    pub fn ss(&self) -> Self {
        Self { orbits: self.orbits.iter().map(|(d, p)| (*d, Partition::column(p.size()))).collect() }
    }

    /// The union of the orbit partitions with parts scaled by degree.
    pub fn un(&self) -> Partition {
        self.orbits.iter().fold(Partition::empty(), |acc, (d, p)| acc.union(&p.scale(*d)))
    }
}

impl fmt::Display for ThetaPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.orbits.iter().map(|(d, p)| format!("{d}:{p}")).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

pub fn ss_un(nu: &ThetaPartition) -> (ThetaPartition, Partition) {
    (nu.ss(), nu.un())
}

fn check_size(nu: &ThetaPartition, lambda: &Partition) -> Result<()> {
    if nu.size() != lambda.size() {
        return Err(Error::SizeMismatch(nu.size(), lambda.size()));
    }
    Ok(())
}

/// `Σ_{ss(μ)=ss(ν)} (ψ^ν_μ / z_μ) X^λ_{un(μ)}(q)`.
pub fn multiplicity_gl(nu: &ThetaPartition, lambda: &Partition) -> Result<RationalFn> {
    check_size(nu, lambda)?;
    let choices: Vec<Vec<Partition>> = nu.orbits.iter().map(|(_, p)| partitions(p.size())).collect();
    let mut total = RationalFn::zero();
    let mut idx = vec![0usize; choices.len()];
    loop {
        let mut psi = BigInt::from(1);
        let mut z = BigInt::from(1);
        let mut orbits = Vec::with_capacity(idx.len());
        for (o, &k) in idx.iter().enumerate() {
            let (d, part) = &nu.orbits[o];
            let mu = &choices[o][k];
            psi *= sn_character(part, mu)?;
            z *= z_mu(mu);
            orbits.push((*d, mu.clone()));
        }
        if psi != BigInt::from(0) {
            let un = ThetaPartition { orbits }.un();
            let x = RationalFn::from(green_polynomial(lambda, &un)?);
            total = &total + &(&RationalFn::from_rational(&BigRational::new(psi, z)) * &x);
        }
        let mut o = 0;
        loop {
            if o == idx.len() {
                return Ok(total);
            }
            idx[o] += 1;
            if idx[o] < choices[o].len() {
                break;
            }
            idx[o] = 0;
            o += 1;
        }
    }
}

/// `Σ_μ c^μ_ν K_{μλ}(q)`, for Θ-partitions with only degree-1 orbits.
pub fn multiplicity_lr(nu: &ThetaPartition, lambda: &Partition) -> Result<LaurentPoly> {
    check_size(nu, lambda)?;
    if !nu.all_degree_one() {
        return Err(Error::Invalid(format!("{nu} has an orbit of degree > 1")));
    }
    let factors: Vec<Partition> = nu.orbits.iter().map(|(_, p)| p.clone()).collect();
    let mut total = LaurentPoly::zero();
    for (mu, c) in lr_product(&factors) {
        total = &total + &kostka_foulkes(&mu, lambda)?.scale(&BigInt::from(c));
    }
    Ok(total)
}

/// `X^λ_{un(ν)}(q)`, valid when every orbit carries at most one box.
pub fn multiplicity_cuspidal(nu: &ThetaPartition, lambda: &Partition) -> Result<LaurentPoly> {
    check_size(nu, lambda)?;
    if nu.orbits.iter().any(|(_, p)| p.size() > 1) {
        return Err(Error::Invalid(format!("{nu} has an orbit with more than one box")));
    }
    green_polynomial(lambda, &nu.un())
}

/// Multisets of nonempty partitions of total size `n`, as degree-1 Θ-partitions.
pub fn degree_one_theta_partitions(n: usize) -> Vec<ThetaPartition> {
    let pool: Vec<Partition> = (1..=n).flat_map(partitions).collect();
    let mut out = Vec::new();
    fn rec(pool: &[Partition], start: usize, left: usize, cur: &mut Vec<(usize, Partition)>, out: &mut Vec<ThetaPartition>) {
        if left == 0 {
            out.push(ThetaPartition { orbits: cur.clone() });
            return;
        }
        for k in start..pool.len() {
            if pool[k].size() <= left {
                cur.push((1, pool[k].clone()));
                rec(pool, k, left - pool[k].size(), cur, out);
                cur.pop();
            }
        }
    }
    rec(&pool, 0, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partcomb::cuspidal_value;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn ss_un_examples() {
        let (ss, un) = ss_un(&ThetaPartition::unipotent(p(&[3, 1])));
        assert_eq!(ss.orbits(), &[(1, p(&[1, 1, 1, 1]))]);
        assert_eq!(un, p(&[3, 1]));
        assert_eq!(ThetaPartition::new(vec![(2, p(&[2, 1]))]).unwrap().un(), p(&[4, 2]));
        assert_eq!(ThetaPartition::new(vec![(1, p(&[2])), (1, p(&[1, 1]))]).unwrap().un(), p(&[2, 1, 1]));
        assert_eq!(ThetaPartition::new(vec![(3, p(&[1])), (1, p(&[2]))]).unwrap().size(), 5);
    }

    #[test]
    fn unipotent_case_is_kostka_foulkes() {
        for n in 1..=5 {
            for mu in partitions(n) {
                for la in partitions(n) {
                    let nu = ThetaPartition::unipotent(mu.clone());
                    let gl = multiplicity_gl(&nu, &la).unwrap();
                    assert_eq!(gl, RationalFn::from(kostka_foulkes(&mu, &la).unwrap()));
                    assert_eq!(multiplicity_lr(&nu, &la).unwrap(), kostka_foulkes(&mu, &la).unwrap());
                }
            }
        }
    }

    #[test]
    fn two_routes_example() {
        let nu = ThetaPartition::new(vec![(1, p(&[1])), (1, p(&[1]))]).unwrap();
        let la = p(&[1, 1]);
        let expect = LaurentPoly::from_terms([(0, 1), (1, 1)]);
        assert_eq!(multiplicity_lr(&nu, &la).unwrap(), expect);
        assert_eq!(multiplicity_gl(&nu, &la).unwrap(), RationalFn::from(expect));
    }

    #[test]
    fn cuspidal() {
        for n in 1..=6 {
            let nu = ThetaPartition::new(vec![(n, p(&[1]))]).unwrap();
            for la in partitions(n) {
                assert_eq!(multiplicity_cuspidal(&nu, &la).unwrap(), cuspidal_value(&la));
                assert_eq!(multiplicity_gl(&nu, &la).unwrap(), RationalFn::from(cuspidal_value(&la)));
            }
        }
        let bad = ThetaPartition::new(vec![(1, p(&[2]))]).unwrap();
        assert!(multiplicity_cuspidal(&bad, &p(&[2])).is_err());
        assert!(multiplicity_lr(&ThetaPartition::new(vec![(2, p(&[1]))]).unwrap(), &p(&[2])).is_err());
    }

    #[test]
    fn theta_counts() {
        // multisets of partitions: Euler transform of the partition numbers
        let counts: Vec<usize> = (1..=5).map(|n| degree_one_theta_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 3, 6, 14, 27]);
    }
}
