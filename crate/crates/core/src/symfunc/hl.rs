use num_rational::BigRational;

use super::{convert, convert_with_bound, Basis, SymExpr, DEFAULT_DEGREE_BOUND};
use crate::dense::Matrix;
use crate::partcomb::{kostka, partitions, sn_character, z_mu, Partition};
use crate::qpoly::{LaurentPoly, RationalFn};

/// `P_λ(X; q)` in the Schur basis.
pub fn hl_p(lambda: &Partition) -> SymExpr {
    in_schur(Basis::HlP, lambda)
}

/// `Q_λ = b_λ(q) P_λ` in the Schur basis.
pub fn hl_q(lambda: &Partition) -> SymExpr {
    in_schur(Basis::HlQ, lambda)
}

/// `P̃_λ = q^{-n(λ)} P_λ(X; q^{-1})` in the Schur basis.
pub fn hl_ptilde(lambda: &Partition) -> SymExpr {
    in_schur(Basis::HlPtilde, lambda)
}

/// `H_λ = Σ_μ K_{μλ}(q) s_μ`.
pub fn hl_h(lambda: &Partition) -> SymExpr {
    in_schur(Basis::HlH, lambda)
}

fn in_schur(b: Basis, lambda: &Partition) -> SymExpr {
    let bound = lambda.size().max(DEFAULT_DEGREE_BOUND);
    convert_with_bound(&SymExpr::basis_element(b, lambda.clone()), Basis::S, bound).expect("bound covers the degree")
}

/// `K(q)` recomputed without tableaux: Gram–Schmidt on the monomial basis under
/// `⟨p_λ, p_μ⟩_q = δ_{λμ} z_λ Π_i (1 - q^{λ_i})^{-1}`, from `(1^n)` upwards,
/// followed by inversion of the resulting Schur expansion of `P`.
pub fn kostka_foulkes_gram_schmidt(n: usize) -> Matrix<RationalFn> {
    let ps = partitions(n);
    let m = ps.len();
    let rat = |x: i64| RationalFn::from_int(x);
    // s_λ = Σ_ρ ψ^λ_ρ / z_ρ p_ρ ; m = K^{-1} s
    let s_in_p = Matrix::from_fn(m, m, |i, j| {
        rat(sn_character(&ps[i], &ps[j]).unwrap())
            * RationalFn::from_rational(&BigRational::new(1.into(), z_mu(&ps[j])))
    });
    let kinv = Matrix::from_fn(m, m, |i, j| rat(kostka(&ps[i], &ps[j]).unwrap() as i64))
        .inverse()
        .expect("unitriangular");
    let m_in_p = kinv.mul(&s_in_p).unwrap();
    let weight: Vec<RationalFn> = ps
        .iter()
        .map(|l| {
            let mut w = RationalFn::from_rational(&BigRational::from_integer(z_mu(l)));
            for &k in l.parts() {
                w = w.checked_div(&RationalFn::from(LaurentPoly::one() - LaurentPoly::monomial(k as i64, 1))).unwrap();
            }
            w
        })
        .collect();
    let pair = |a: &[RationalFn], b: &[RationalFn]| -> RationalFn {
        a.iter().zip(b).zip(&weight).map(|((x, y), w)| &(x * y) * w).sum()
    };
    // hl[i] = P_{λ_i} in p coordinates; express also in m coordinates
    let mut hl_p: Vec<Vec<RationalFn>> = vec![Vec::new(); m];
    let mut hl_m: Vec<Vec<RationalFn>> = vec![Vec::new(); m];
    for i in (0..m).rev() {
        let mut v: Vec<RationalFn> = m_in_p.row(i).to_vec();
        let mut vm: Vec<RationalFn> = (0..m).map(|j| rat((i == j) as i64)).collect();
        for j in i + 1..m {
            let c = pair(m_in_p.row(i), &hl_p[j]).checked_div(&pair(&hl_p[j], &hl_p[j])).unwrap();
            if c.is_zero() {
                continue;
            }
            for t in 0..m {
                v[t] = &v[t] - &(&c * &hl_p[j][t]);
                vm[t] = &vm[t] - &(&c * &hl_m[j][t]);
            }
        }
        hl_p[i] = v;
        hl_m[i] = vm;
    }
    // P = A m, s = K m  =>  s = K A^{-1} P
    let a = Matrix::from_fn(m, m, |i, j| hl_m[i][j].clone());
    let k = Matrix::from_fn(m, m, |i, j| rat(kostka(&ps[i], &ps[j]).unwrap() as i64));
    k.mul(&a.inverse().expect("unitriangular")).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partcomb::{b_poly, kostka_foulkes};
    use num_traits::{One, Zero};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn two_routes_agree() {
        for n in 1..=6 {
            let gs = kostka_foulkes_gram_schmidt(n);
            let ps = partitions(n);
            for (i, a) in ps.iter().enumerate() {
                for (j, b) in ps.iter().enumerate() {
                    assert_eq!(*gs.get(i, j), RationalFn::from(kostka_foulkes(a, b).unwrap()), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn specializations() {
        let zero = BigRational::zero();
        let one = BigRational::one();
        for n in 1..=5 {
            for la in partitions(n) {
                let at0 = hl_p(&la).specialize(&zero).unwrap();
                assert_eq!(at0.len(), 1);
                assert_eq!(at0[&la], one);
                let at1 = hl_p(&la).specialize(&one).unwrap();
                let m = convert(&SymExpr::basis_element(Basis::M, la.clone()), Basis::S).unwrap();
                assert_eq!(at1, m.specialize(&one).unwrap());
                let h0 = hl_h(&la).specialize(&zero).unwrap();
                assert_eq!(h0.len(), 1);
                assert_eq!(h0[&la], one);
            }
        }
    }

    #[test]
    fn examples() {
        let one = p(&[1]);
        let q1 = RationalFn::from(LaurentPoly::one() - LaurentPoly::q());
        assert_eq!(hl_q(&one), SymExpr::monomial(Basis::S, one.clone(), q1));
        let h11 = hl_h(&p(&[1, 1]));
        assert_eq!(h11.coeff(&p(&[1, 1])), RationalFn::one());
        assert_eq!(h11.coeff(&p(&[2])), RationalFn::q());
        for n in 1..=5 {
            assert_eq!(hl_h(&Partition::row(n)), SymExpr::basis_element(Basis::S, Partition::row(n)));
        }
    }

    #[test]
    fn q_is_b_times_p() {
        for n in 1..=5 {
            for la in partitions(n) {
                let b = RationalFn::from(b_poly(&la));
                assert_eq!(hl_q(&la), hl_p(&la).scale(&b));
            }
        }
    }
}
