use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::{Basis, SymExpr};
use crate::dense::Matrix;
use crate::error::{Error, Result};
use crate::partcomb::{b_poly, kostka, kostka_foulkes, partitions, sn_character, Partition};
use crate::qpoly::{LaurentPoly, RationalFn};

pub const DEFAULT_DEGREE_BOUND: usize = 8;

/// Change of basis in one degree: `rows[λ]` expands `B_λ` over `s`.
struct Transition {
    order: Vec<Partition>,
    index: HashMap<Partition, usize>,
    to_s_t: Matrix<RationalFn>,
    from_s_t: Matrix<RationalFn>,
}

type Cache = Mutex<HashMap<(Basis, usize), Arc<Transition>>>;

fn cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

fn int(k: i64) -> RationalFn {
    RationalFn::from_int(k)
}

/// Entry `(λ, ν)` is the coefficient of `s_ν` in `B_λ`, partitions of `n` in the fixed order.
pub fn transition_to_schur(basis: Basis, n: usize) -> Matrix<RationalFn> {
    transition(basis, n).to_s_t.transpose()
}

fn kf_inverse(n: usize, ps: &[Partition]) -> Matrix<RationalFn> {
    let m = ps.len();
    Matrix::from_fn(m, m, |i, j| RationalFn::from(kostka_foulkes(&ps[i], &ps[j]).unwrap()))
        .inverse()
        .unwrap_or_else(|_| panic!("K(q) is unitriangular in degree {n}"))
}

fn build(basis: Basis, n: usize) -> Transition {
    let ps = partitions(n);
    let m = ps.len();
    let to_s: Matrix<RationalFn> = match basis {
        Basis::S => Matrix::identity(m),
        Basis::P => Matrix::from_fn(m, m, |i, j| int(sn_character(&ps[j], &ps[i]).unwrap())),
        Basis::H => Matrix::from_fn(m, m, |i, j| int(kostka(&ps[j], &ps[i]).unwrap() as i64)),
        Basis::E => {
            Matrix::from_fn(m, m, |i, j| int(kostka(&ps[j].conjugate(), &ps[i]).unwrap() as i64))
        }
        Basis::M => Matrix::from_fn(m, m, |i, j| int(kostka(&ps[i], &ps[j]).unwrap() as i64))
            .inverse()
            .expect("Kostka matrix is unitriangular"),
        Basis::HlP => kf_inverse(n, &ps),
        Basis::HlQ => {
            let p = kf_inverse(n, &ps);
            Matrix::from_fn(m, m, |i, j| p.get(i, j) * &RationalFn::from(b_poly(&ps[i])))
        }
        Basis::HlPtilde => {
            let p = kf_inverse(n, &ps);
            Matrix::from_fn(m, m, |i, j| {
                p.get(i, j).invert_q() * RationalFn::from(LaurentPoly::monomial(-(ps[i].n_stat() as i64), 1))
            })
        }
        Basis::HlH => {
            Matrix::from_fn(m, m, |i, j| RationalFn::from(kostka_foulkes(&ps[j], &ps[i]).unwrap()))
        }
    };
    let from_s = to_s.inverse().expect("transition matrices are invertible");
    Transition {
        index: ps.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect(),
        order: ps,
        to_s_t: to_s.transpose(),
        from_s_t: from_s.transpose(),
    }
}

fn transition(basis: Basis, n: usize) -> Arc<Transition> {
    if let Some(t) = cache().lock().unwrap().get(&(basis, n)) {
        return t.clone();
    }
    let t = Arc::new(build(basis, n));
    cache().lock().unwrap().insert((basis, n), t.clone());
    t
}

pub fn convert(f: &SymExpr, target: Basis) -> Result<SymExpr> {
    convert_with_bound(f, target, DEFAULT_DEGREE_BOUND)
}

pub fn convert_with_bound(f: &SymExpr, target: Basis, bound: usize) -> Result<SymExpr> {
    if f.degree() > bound {
        return Err(Error::DegreeBound { degree: f.degree(), bound });
    }
    if f.basis == target {
        return Ok(f.clone());
    }
    let mut out = SymExpr::zero(target).with_alphabet(f.alphabet);
    let mut degrees: Vec<usize> = f.terms().map(|(l, _)| l.size()).collect();
    degrees.dedup();
    for n in degrees {
        let src = transition(f.basis, n);
        let tgt = transition(target, n);
        let mut c = vec![RationalFn::zero(); src.order.len()];
        for (l, x) in f.terms().filter(|(l, _)| l.size() == n) {
            c[src.index[l]] = x.clone();
        }
        let d = src.to_s_t.apply(&c)?;
        let e = tgt.from_s_t.apply(&d)?;
        for (l, x) in tgt.order.iter().zip(e) {
            out.add_term(l.clone(), x);
        }
    }
    Ok(out)
}

/// Product, returned in the basis of `f`.
pub fn product(f: &SymExpr, g: &SymExpr) -> Result<SymExpr> {
    if f.alphabet != g.alphabet {
        return Err(Error::Invalid("product of functions in different alphabets".into()));
    }
    let a = convert_with_bound(f, Basis::P, usize::MAX)?;
    let b = convert_with_bound(g, Basis::P, usize::MAX)?;
    let mut out = SymExpr::zero(Basis::P).with_alphabet(f.alphabet);
    for (l, x) in a.terms() {
        for (m, y) in b.terms() {
            out.add_term(l.union(m), x * y);
        }
    }
    convert_with_bound(&out, f.basis, usize::MAX)
}

/// The Hall inner product, for which the Schur functions are orthonormal.
pub fn hall_pairing(f: &SymExpr, g: &SymExpr) -> Result<RationalFn> {
    let a = convert(f, Basis::S)?;
    let b = convert(g, Basis::S)?;
    Ok(a.terms().map(|(l, x)| x * &b.coeff(l)).sum())
}
