use num_bigint::BigInt;

use super::partition::{partitions, Partition};
use super::sn::sn_character;
use super::tableau::kostka_foulkes;
use crate::dense::Matrix;
use crate::error::{Error, Result};
use crate::qpoly::{LaurentPoly, RationalFn};

/// The Green polynomial `X^λ_μ(q) = Σ_α ψ^α_μ K_{αλ}(q)`.
pub fn green_polynomial(lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    let mut acc = LaurentPoly::zero();
    for alpha in partitions(lambda.size()) {
        let psi = sn_character(&alpha, mu)?;
        if psi != 0 {
            acc = acc + kostka_foulkes(&alpha, lambda)?.scale(&BigInt::from(psi));
        }
    }
    Ok(acc)
}

/// `q^{n(λ)} Π_{i=1}^{ℓ(λ)-1} (1 - q^{-i})`.
pub fn cuspidal_value(lambda: &Partition) -> LaurentPoly {
    let mut f = LaurentPoly::monomial(lambda.n_stat() as i64, 1);
    for i in 1..lambda.len() {
        f = f * (LaurentPoly::one() - LaurentPoly::monomial(-(i as i64), 1));
    }
    f
}

/// `b_λ(q) = Π_i φ_{m_i(λ)}(q)` with `φ_r(q) = (1-q)(1-q^2)⋯(1-q^r)`.
pub fn b_poly(lambda: &Partition) -> LaurentPoly {
    lambda
        .multiplicities()
        .into_iter()
        .fold(LaurentPoly::one(), |acc, (_, m)| acc * LaurentPoly::phi(m))
}

/// The `q`-transition matrices indexed by the partitions of `n` in the fixed order.
#[derive(Clone, Debug)]
pub struct TransitionMatrices {
    pub order: Vec<Partition>,
    /// `K(q)`, entry `(λ, μ)` equal to `K_{λμ}(q)`.
    pub k: Matrix<RationalFn>,
    /// `K(q^{-1})^{-1}`.
    pub k_inv_q_inverse: Matrix<RationalFn>,
    /// `diag(b_λ(q))`.
    pub b: Matrix<RationalFn>,
    /// `diag(q^{-n(λ)})`.
    pub q_pow: Matrix<RationalFn>,
}

pub fn transition_matrices(n: usize) -> TransitionMatrices {
    let order = partitions(n);
    let m = order.len();
    let k = Matrix::from_fn(m, m, |i, j| {
        RationalFn::from(kostka_foulkes(&order[i], &order[j]).unwrap())
    });
    let k_inv_q_inverse = k.map(|f| f.invert_q()).inverse().expect("unitriangular");
    let b = Matrix::diagonal(order.iter().map(|l| RationalFn::from(b_poly(l))).collect());
    let q_pow = Matrix::diagonal(
        order
            .iter()
            .map(|l| RationalFn::from(LaurentPoly::monomial(-(l.n_stat() as i64), 1)))
            .collect(),
    );
    TransitionMatrices { order, k, k_inv_q_inverse, b, q_pow }
}

impl TransitionMatrices {
    /// `(-1)^n diag(q^{-n(λ)}) K(q^{-1})^{-1} K(q) b(q)^{-1}`.
    pub fn reduced_identity(&self) -> Matrix<RationalFn> {
        let n = self.order.first().map(|l| l.size()).unwrap_or(0);
        let sign = if n.is_multiple_of(2) { RationalFn::one() } else { -RationalFn::one() };
        let prod = self
            .q_pow
            .mul(&self.k_inv_q_inverse)
            .and_then(|m| m.mul(&self.k))
            .and_then(|m| m.mul(&self.b.inverse()?))
            .expect("square matrices of equal size");
        prod.map(|x| x * &sign)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partcomb::kostka;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn poly(t: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(t.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn green_examples() {
        assert_eq!(green_polynomial(&p(&[1, 1]), &p(&[1, 1])).unwrap(), poly(&[(0, 1), (1, 1)]));
        assert_eq!(green_polynomial(&p(&[1, 1]), &p(&[2])).unwrap(), poly(&[(0, -1), (1, 1)]));
        for n in 1..=6 {
            for mu in partitions(n) {
                assert!(green_polynomial(&Partition::row(n), &mu).unwrap().is_one());
            }
        }
    }

    #[test]
    fn green_at_one_matches_kostka_sum() {
        for n in 1..=6 {
            for la in partitions(n) {
                for mu in partitions(n) {
                    let expect: i64 = partitions(n)
                        .iter()
                        .map(|a| sn_character(a, &mu).unwrap() * kostka(a, &la).unwrap() as i64)
                        .sum();
                    let got = green_polynomial(&la, &mu).unwrap().eval_int(1).unwrap();
                    assert_eq!(got, BigInt::from(expect).into());
                }
            }
        }
    }

    #[test]
    fn cuspidal_identity() {
        for n in 1..=6 {
            for la in partitions(n) {
                assert_eq!(green_polynomial(&la, &Partition::row(n)).unwrap(), cuspidal_value(&la));
            }
        }
    }

    #[test]
    fn n_equals_one() {
        let t = transition_matrices(1);
        assert!(t.k.get(0, 0).is_one());
        assert!(t.k_inv_q_inverse.get(0, 0).is_one());
        assert_eq!(*t.b.get(0, 0), RationalFn::from(poly(&[(0, 1), (1, -1)])));
        assert!(t.q_pow.get(0, 0).is_one());
    }

    #[test]
    fn b_at_two() {
        assert_eq!(b_poly(&p(&[1, 1])).eval_int(2).unwrap(), BigInt::from(3).into());
    }

    #[test]
    fn reduced_identity_is_upper_triangular() {
        for n in 1..=5 {
            let t = transition_matrices(n);
            assert!(t.k.is_unitriangular());
            assert!(t.reduced_identity().is_upper_triangular());
        }
    }
}
