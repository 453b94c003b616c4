use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::classfn::{ClassFn, UtClassFn};
use crate::arcdiag::{ggg, SetPartition};
use crate::error::{Error, Result};
use crate::matgrp::{centralizer_order, gl_fold, jordan_type, FqMatrix, PatternSubgroup};
use crate::partcomb::{partitions, Partition};
use crate::qpoly::Cyclotomic;

/// `γ(u) = ϑ(Σ η_{ij} u_{ij})` over the arcs `i⌢j`, on a pattern subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCharacter {
    domain: PatternSubgroup,
    arcs: Vec<(usize, usize, u32)>,
}

impl LinearCharacter {
    pub fn new(domain: PatternSubgroup, eta: &SetPartition) -> Result<Self> {
        let weights = vec![1; eta.num_arcs()];
        Self::with_weights(domain, eta, &weights)
    }

    /// Arc weights `η^×` in arc order, each a nonzero residue.
    pub fn with_weights(domain: PatternSubgroup, eta: &SetPartition, weights: &[u32]) -> Result<Self> {
        if eta.n() != domain.n() {
            return Err(Error::SizeMismatch(eta.n(), domain.n()));
        }
        if weights.len() != eta.num_arcs() {
            return Err(Error::SizeMismatch(weights.len(), eta.num_arcs()));
        }
        if let Some(w) = weights.iter().find(|&&w| w % domain.p() == 0) {
            return Err(Error::Invalid(format!("arc weight {w} is zero mod {}", domain.p())));
        }
        if !domain.is_closed() {
            return Err(Error::Invalid("pattern is not closed under multiplication".into()));
        }
        let square = domain.square_positions();
        if let Some((i, j)) = eta.arcs().find(|a| square.contains(a)) {
            return Err(Error::NotAHomomorphism(format!("arc {i}⌢{j} meets the commutator subgroup")));
        }
        let arcs = eta.arcs().zip(weights).map(|((i, j), &w)| (i, j, w % domain.p())).collect();
        Ok(Self { domain, arcs })
    }

    pub fn trivial(domain: PatternSubgroup) -> Self {
        Self { domain, arcs: Vec::new() }
    }

    pub fn domain(&self) -> &PatternSubgroup {
        &self.domain
    }

    pub fn arcs(&self) -> &[(usize, usize, u32)] {
        &self.arcs
    }

    /// The exponent `a` with `γ(u) = ζ_p^a`.
    pub fn exponent(&self, u: &FqMatrix) -> u32 {
        let p = self.domain.p();
        self.arcs.iter().map(|&(i, j, w)| w * u.get(i - 1, j - 1)).sum::<u32>() % p
    }

    pub fn value(&self, u: &FqMatrix) -> Cyclotomic {
        Cyclotomic::zeta_pow(self.domain.p(), self.exponent(u) as i64)
    }

    /// `γ(uv) = γ(u)γ(v)` on all pairs; exhaustive.
    pub fn is_homomorphism_exhaustive(&self, budget: u64) -> Result<bool> {
        let p = self.domain.p();
        let elems: Vec<FqMatrix> = self.domain.elements(budget)?.collect();
        Ok(elems.iter().all(|u| {
            let a = self.exponent(u);
            elems.iter().all(|v| self.exponent(&u.mul(v)) == (a + self.exponent(v)) % p)
        }))
    }

    /// `γ` vanishes on every commutator of two generators.
    pub fn trivial_on_generator_commutators(&self) -> bool {
        let gens = self.domain.generators();
        gens.iter().all(|a| {
            let ai = a.inverse().expect("unipotent");
            gens.iter().all(|b| {
                let bi = b.inverse().expect("unipotent");
                self.exponent(&a.mul(b).mul(&ai).mul(&bi)) == 0
            })
        })
    }
}

/// How an induced character is evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InductionMethod {
    /// `(1/|H|) Σ_{g ∈ G} f(g u g⁻¹)`.
    GroupSum,
    /// `|C_G(u)|/|H| · Σ_{h ∈ H ∩ class(u)} f(h)`.
    #[default]
    ClassRestriction,
}

impl FromStr for InductionMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "group-sum" => Ok(Self::GroupSum),
            "class-restriction" => Ok(Self::ClassRestriction),
            _ => Err(Error::Invalid(format!("unknown induction method {s:?}"))),
        }
    }
}

fn big_ratio(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

/// Induces `f`, a function on the pattern group `h`, to `GL_n(F_p)`.
fn induce_function(
    h: &PatternSubgroup,
    f: &(impl Fn(&FqMatrix) -> Cyclotomic + Sync),
    method: InductionMethod,
    budget: u64,
) -> Result<ClassFn> {
    let n = h.n();
    let p = h.p();
    let order_h = BigInt::from(h.order());
    let classes = partitions(n);
    let mut values = BTreeMap::new();
    match method {
        InductionMethod::ClassRestriction => {
            let mut sums: BTreeMap<Partition, Cyclotomic> =
                classes.iter().map(|mu| (mu.clone(), Cyclotomic::zero(p))).collect();
            for x in h.elements(budget)? {
                let mu = jordan_type(&x)?;
                let s = sums.get_mut(&mu).expect("every type is a partition of n");
                *s = &*s + &f(&x);
            }
            for (mu, s) in sums {
                let c = big_ratio(BigInt::from(centralizer_order(&mu, p)), order_h.clone());
                values.insert(mu, s.scale(&c));
            }
        }
        InductionMethod::GroupSum => {
            let reps: Vec<FqMatrix> = classes.iter().map(|mu| FqMatrix::unipotent_rep(p, mu)).collect();
            let zero = || vec![Cyclotomic::zero(p); reps.len()];
            let sums = gl_fold(
                n,
                p,
                budget,
                zero,
                |mut acc, g| {
                    let gi = g.inverse().expect("invertible");
                    for (k, u) in reps.iter().enumerate() {
                        let c = u.conjugate_by(g, &gi);
                        if h.contains(&c) {
                            acc[k] = &acc[k] + &f(&c);
                        }
                    }
                    acc
                },
                |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
            )?;
            let c = big_ratio(BigInt::from(1), order_h);
            for (mu, s) in classes.into_iter().zip(sums) {
                values.insert(mu, s.scale(&c));
            }
        }
    }
    ClassFn::new(n, p, values)
}

/// `Ind_U^{GL_n}(γ)` on the unipotent classes.
pub fn induce_to_gl(gamma: &LinearCharacter, method: InductionMethod, budget: u64) -> Result<ClassFn> {
    induce_function(gamma.domain(), &|u: &FqMatrix| gamma.value(u), method, budget)
}

/// `Ind_{UT_n}^{GL_n}(f)` on the unipotent classes.
pub fn induce_ut_to_gl(f: &UtClassFn, method: InductionMethod, budget: u64) -> Result<ClassFn> {
    let ut = f.group();
    let lookup = |u: &FqMatrix| f.get(u).cloned().expect("argument lies in UT_n");
    induce_function(ut, &lookup, method, budget)
}

/// `Ind_U^{UT_n}(γ)` at every element of `UT_n`.
pub fn induce_to_ut(gamma: &LinearCharacter, budget: u64) -> Result<UtClassFn> {
    let u = gamma.domain();
    let p = u.p();
    let ut = PatternSubgroup::full(u.n(), p)?;
    let elems: Vec<FqMatrix> = ut.elements(budget)?.collect();
    let inverses: Vec<FqMatrix> = elems.iter().map(|x| x.inverse().expect("unipotent")).collect();
    let scale = big_ratio(BigInt::from(1), BigInt::from(u.order()));
    let values = elems
        .iter()
        .map(|y| {
            let mut counts = vec![0i64; p as usize];
            for (x, xi) in elems.iter().zip(&inverses) {
                let z = y.conjugate_by(x, xi);
                if u.contains(&z) {
                    counts[gamma.exponent(&z) as usize] += 1;
                }
            }
            Cyclotomic::from_exponent_counts(p, &counts).scale(&scale)
        })
        .collect();
    UtClassFn::new(ut, values)
}

/// The non-nesting supercharacter `χ_nn^η = Ind_{U_η}^{UT_n}(γ_η)`.
pub fn supercharacter(eta: &SetPartition, p: u32, budget: u64) -> Result<UtClassFn> {
    let u = PatternSubgroup::from_set_partition(eta, p)?;
    induce_to_ut(&LinearCharacter::new(u, eta)?, budget)
}

/// `γ_λ` on `U_{ctr(λ′)}`.
pub fn ggg_linear_character(lambda: &Partition, p: u32) -> Result<LinearCharacter> {
    LinearCharacter::new(PatternSubgroup::ctr(lambda, p)?, &ggg(lambda)?)
}

/// `Γ_λ = Ind_{U_{ctr(λ′)}}^{GL_n}(γ_λ)`, checked to be rational-valued.
pub fn ggg_character(lambda: &Partition, p: u32, method: InductionMethod, budget: u64) -> Result<ClassFn> {
    let f = induce_to_gl(&ggg_linear_character(lambda, p)?, method, budget)?;
    f.to_rationals()?;
    Ok(f)
}
