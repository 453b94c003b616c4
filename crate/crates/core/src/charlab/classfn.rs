use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matgrp::{class_size, gl_order_big, FqMatrix, PatternSubgroup};
use crate::partcomb::{partitions, Partition};
use crate::qpoly::Cyclotomic;

/// A class function of `GL_n(F_p)` supported on unipotent elements, keyed by
/// Jordan type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFn {
    n: usize,
    p: u32,
    values: BTreeMap<Partition, Cyclotomic>,
}

impl ClassFn {
    pub fn zero(n: usize, p: u32) -> Self {
        Self { n, p, values: partitions(n).into_iter().map(|mu| (mu, Cyclotomic::zero(p))).collect() }
    }

    /// Missing classes are zero; extra keys are rejected.
    pub fn new(n: usize, p: u32, values: BTreeMap<Partition, Cyclotomic>) -> Result<Self> {
        let mut f = Self::zero(n, p);
        for (mu, v) in values {
            if mu.size() != n {
                return Err(Error::SizeMismatch(mu.size(), n));
            }
            f.values.insert(mu, v);
        }
        Ok(f)
    }

    pub fn from_rationals(n: usize, p: u32, values: BTreeMap<Partition, BigRational>) -> Result<Self> {
        Self::new(n, p, values.into_iter().map(|(mu, r)| (mu, Cyclotomic::rational(p, r))).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn get(&self, mu: &Partition) -> &Cyclotomic {
        &self.values[mu]
    }

    pub fn values(&self) -> &BTreeMap<Partition, Cyclotomic> {
        &self.values
    }

    /// Value at the identity.
    pub fn degree(&self) -> &Cyclotomic {
        self.get(&Partition::column(self.n))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.map(|v| v.scale(c))
    }

    pub fn scale_cyclotomic(&self, c: &Cyclotomic) -> Self {
        self.map(|v| v * c)
    }

    fn map(&self, f: impl Fn(&Cyclotomic) -> Cyclotomic) -> Self {
        Self { n: self.n, p: self.p, values: self.values.iter().map(|(k, v)| (k.clone(), f(v))).collect() }
    }

    fn zip(&self, other: &Self, f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            n: self.n,
            p: self.p,
            values: self.values.iter().map(|(k, v)| (k.clone(), f(v, &other.values[k]))).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(Cyclotomic::is_zero)
    }

    /// The values as rationals, or an error when some value is irrational.
    pub fn to_rationals(&self) -> Result<BTreeMap<Partition, BigRational>> {
        self.values
            .iter()
            .map(|(k, v)| {
                v.to_rational()
                    .map(|r| (k.clone(), r))
                    .ok_or_else(|| Error::Invalid(format!("value at {k} is not rational: {v}")))
            })
            .collect()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        if self.p != other.p {
            return Err(Error::Invalid(format!("fields differ: {} vs {}", self.p, other.p)));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let values: Vec<Value> = self
            .values
            .iter()
            .map(|(k, v)| json!({"class": k.parts(), "value": Value::from(v)}))
            .collect();
        json!({"n": self.n, "p": self.p, "values": values})
    }
}

/// `(1/|G|) Σ_μ |class μ| f(u_μ) conj(g(u_μ))`.
pub fn unipotent_inner_product(f: &ClassFn, g: &ClassFn) -> Result<Cyclotomic> {
    f.check(g)?;
    let p = f.p;
    let mut acc = Cyclotomic::zero(p);
    for (mu, v) in &f.values {
        let w = &g.values[mu];
        let size = BigRational::from_integer(BigInt::from(class_size(mu, p)));
        acc = &acc + &(v * &w.conj()).scale(&size);
    }
    let order = BigRational::from_integer(BigInt::from(gl_order_big(f.n, p)));
    Ok(acc.scale(&order.recip()))
}

/// A function on `UT_n(F_p)` stored by element index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UtClassFn {
    ut: PatternSubgroup,
    values: Vec<Cyclotomic>,
}

impl UtClassFn {
    pub fn new(ut: PatternSubgroup, values: Vec<Cyclotomic>) -> Result<Self> {
        let count = ut.element_count().ok_or_else(|| Error::Invalid("group too large".into()))?;
        if values.len() as u128 != count {
            return Err(Error::SizeMismatch(values.len(), count as usize));
        }
        Ok(Self { ut, values })
    }

    pub fn group(&self) -> &PatternSubgroup {
        &self.ut
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn get(&self, g: &FqMatrix) -> Option<&Cyclotomic> {
        self.ut.index_of(g).map(|k| &self.values[k as usize])
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { ut: self.ut.clone(), values: self.values.iter().map(|v| v.scale(c)).collect() }
    }

    /// Value at the identity.
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }
}
