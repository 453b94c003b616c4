use super::{convert_with_bound, Alphabet, Basis, SymExpr};
use crate::error::{Error, Result};
use crate::partcomb::Partition;
use crate::qpoly::{LaurentPoly, RationalFn};

fn one_minus_qk(k: usize) -> RationalFn {
    RationalFn::from(LaurentPoly::one() - LaurentPoly::monomial(k as i64, 1))
}

fn sign(k: usize) -> RationalFn {
    RationalFn::from_int(if k.is_multiple_of(2) { 1 } else { -1 })
}

/// `g ↦ (-1)^n g[Z/(1-q)]` on the degree-`n` components when `with_sign`, else
/// `g ↦ g[Z/(1-q)]`. Acts on power sums by `p_k ↦ p_k / (1 - q^k)`; the result is
/// returned in the basis of `f`.
pub fn plethysm_1_minus_q(f: &SymExpr, with_sign: bool) -> Result<SymExpr> {
    let fp = convert_with_bound(f, Basis::P, usize::MAX)?;
    let img = fp.map_coeffs(|l, c| {
        let mut c = l.parts().iter().fold(c.clone(), |acc, &k| acc.checked_div(&one_minus_qk(k)).unwrap());
        if with_sign {
            c = c * sign(l.size());
        }
        c
    });
    convert_with_bound(&img, f.basis, usize::MAX)
}

/// `π_Y`: `p_k(X) ↦ (-1)^k / (1 - q^k) · p_k(Y)`, extended multiplicatively.
pub fn pi_y(f: &SymExpr) -> Result<SymExpr> {
    if f.alphabet != Alphabet::X {
        return Err(Error::Invalid("π_Y acts on functions of X".into()));
    }
    let fp = convert_with_bound(f, Basis::P, usize::MAX)?;
    let img = fp.map_coeffs(|l, c| {
        l.parts().iter().fold(c.clone(), |acc, &k| (acc * sign(k)).checked_div(&one_minus_qk(k)).unwrap())
    });
    Ok(img.with_alphabet(Alphabet::Y))
}

/// `π_X`: `p_k(Y) ↦ (-1)^{k-1} p_k(X)`, extended multiplicatively.
pub fn pi_x(f: &SymExpr) -> Result<SymExpr> {
    if f.alphabet != Alphabet::Y {
        return Err(Error::Invalid("π_X acts on functions of Y".into()));
    }
    let fp = convert_with_bound(f, Basis::P, usize::MAX)?;
    let img = fp.map_coeffs(|l, c| l.parts().iter().fold(c.clone(), |acc, &k| acc * sign(k + 1)));
    Ok(img.with_alphabet(Alphabet::X))
}

/// `π_Y(p_k(X))`.
pub fn pi_y_of_pk(k: usize) -> SymExpr {
    pi_y(&SymExpr::basis_element(Basis::P, Partition::row(k))).expect("p basis in X")
}

/// `π_X(p_k(Y))`.
pub fn pi_x_of_pk_y(k: usize) -> SymExpr {
    pi_x(&SymExpr::basis_element(Basis::P, Partition::row(k)).with_alphabet(Alphabet::Y))
        .expect("p basis in Y")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partcomb::partitions;
    use crate::symfunc::{hl_h, hl_q, product};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn power_sum_images() {
        for k in 1..=6 {
            let img = plethysm_1_minus_q(&SymExpr::basis_element(Basis::P, Partition::row(k)), false).unwrap();
            assert_eq!(img, SymExpr::monomial(Basis::P, Partition::row(k), one_minus_qk(k).recip().unwrap()));
        }
        let c = SymExpr::one(Basis::S);
        assert_eq!(plethysm_1_minus_q(&c, true).unwrap(), c);
    }

    #[test]
    fn projections() {
        let one = LaurentPoly::one();
        assert_eq!(
            pi_y_of_pk(1),
            SymExpr::monomial(Basis::P, p(&[1]), -one_minus_qk(1).recip().unwrap()).with_alphabet(Alphabet::Y)
        );
        assert_eq!(pi_x_of_pk_y(1), SymExpr::basis_element(Basis::P, p(&[1])));
        for k in 1..=8 {
            let q_k_minus_1 = RationalFn::from(LaurentPoly::monomial(k as i64, 1) - one.clone());
            let comp = pi_x(&pi_y_of_pk(k)).unwrap();
            assert_eq!(comp, SymExpr::monomial(Basis::P, Partition::row(k), q_k_minus_1.recip().unwrap()));
        }
        assert!(pi_x(&SymExpr::basis_element(Basis::P, p(&[1]))).is_err());
    }

    #[test]
    fn q_maps_to_h() {
        for n in 1..=4 {
            for la in partitions(n) {
                let signed = hl_q(&la).scale(&sign(n));
                let lhs = plethysm_1_minus_q(&signed, true).unwrap();
                assert_eq!(lhs, hl_h(&la), "{la}");
            }
        }
    }

    #[test]
    fn multiplicative_on_power_sums() {
        for n in 1..=4 {
            for a in partitions(n) {
                for b in partitions(6 - n) {
                    let pa = SymExpr::basis_element(Basis::P, a.clone());
                    let pb = SymExpr::basis_element(Basis::P, b.clone());
                    let lhs = plethysm_1_minus_q(&product(&pa, &pb).unwrap(), true).unwrap();
                    let rhs = product(
                        &plethysm_1_minus_q(&pa, true).unwrap(),
                        &plethysm_1_minus_q(&pb, true).unwrap(),
                    )
                    .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
