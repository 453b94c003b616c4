//! Symmetric functions with coefficients in `Q(q)`: the classical bases, the
//! Hall–Littlewood family, the `Z/(1-q)` plethysm and the degree-one projection
//! maps between the alphabets `X` and `Y`.

mod basis;
mod hl;
mod plethysm;

pub use basis::{convert, convert_with_bound, hall_pairing, product, transition_to_schur, DEFAULT_DEGREE_BOUND};
pub use hl::{hl_h, hl_p, hl_ptilde, hl_q, kostka_foulkes_gram_schmidt};
pub use plethysm::{pi_x, pi_x_of_pk_y, pi_y, pi_y_of_pk, plethysm_1_minus_q};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partcomb::Partition;
use crate::qpoly::RationalFn;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    M,
    #[serde(rename = "e")]
    E,
    #[serde(rename = "h")]
    H,
    #[serde(rename = "p")]
    P,
    #[serde(rename = "s")]
    S,
    #[serde(rename = "HL-P")]
    HlP,
    #[serde(rename = "HL-Q")]
    HlQ,
    #[serde(rename = "HL-Ptilde")]
    HlPtilde,
    #[serde(rename = "HL-H")]
    HlH,
}

impl Basis {
    pub const ALL: [Basis; 9] = [
        Basis::M,
        Basis::E,
        Basis::H,
        Basis::P,
        Basis::S,
        Basis::HlP,
        Basis::HlQ,
        Basis::HlPtilde,
        Basis::HlH,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
            Basis::HlP => "HL-P",
            Basis::HlQ => "HL-Q",
            Basis::HlPtilde => "HL-Ptilde",
            Basis::HlH => "HL-H",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Basis::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Invalid(format!("unknown basis {s:?}")))
    }
}

/// The alphabet a symmetric function is written in.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Alphabet {
    #[default]
    X,
    Y,
}

/// A symmetric function: a sparse `Partition -> RationalFn` map over one basis.
#[derive(Clone, PartialEq, Eq)]
pub struct SymExpr {
    pub basis: Basis,
    pub alphabet: Alphabet,
    terms: BTreeMap<Partition, RationalFn>,
}

impl SymExpr {
    pub fn zero(basis: Basis) -> Self {
        Self { basis, alphabet: Alphabet::X, terms: BTreeMap::new() }
    }

    pub fn one(basis: Basis) -> Self {
        Self::monomial(basis, Partition::empty(), RationalFn::one())
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        Self::monomial(basis, lambda, RationalFn::one())
    }

    pub fn monomial(basis: Basis, lambda: Partition, c: RationalFn) -> Self {
        let mut e = Self::zero(basis);
        e.add_term(lambda, c);
        e
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, RationalFn)>) -> Self {
        let mut e = Self::zero(basis);
        for (l, c) in terms {
            e.add_term(l, c);
        }
        e
    }

    pub fn with_alphabet(mut self, a: Alphabet) -> Self {
        self.alphabet = a;
        self
    }

    pub fn add_term(&mut self, lambda: Partition, c: RationalFn) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda.clone()).or_insert_with(RationalFn::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    /// Terms in the fixed partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RationalFn)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> RationalFn {
        self.terms.get(lambda).cloned().unwrap_or_else(RationalFn::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest degree present, zero for the zero function.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|l| l.size()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut d = self.terms.keys().map(|l| l.size());
        match d.next() {
            None => true,
            Some(first) => d.all(|x| x == first),
        }
    }

    pub fn scale(&self, c: &RationalFn) -> Self {
        Self::from_terms(self.basis, self.terms.iter().map(|(l, x)| (l.clone(), x * c)))
            .with_alphabet(self.alphabet)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Partition, &RationalFn) -> RationalFn) -> Self {
        Self::from_terms(self.basis, self.terms.iter().map(|(l, x)| (l.clone(), f(l, x))))
            .with_alphabet(self.alphabet)
    }

    /// Sum; both operands must share basis and alphabet.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&RationalFn::from_int(-1)))
    }

    /// Evaluates every coefficient at `q = q0`.
    pub fn specialize(&self, q0: &BigRational) -> Result<BTreeMap<Partition, BigRational>> {
        let mut out = BTreeMap::new();
        for (l, c) in &self.terms {
            let v = c.eval(q0)?;
            if v != BigRational::from_integer(0.into()) {
                out.insert(l.clone(), v);
            }
        }
        Ok(out)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.basis != other.basis || self.alphabet != other.alphabet {
            return Err(Error::Invalid(format!(
                "incompatible operands: {}({:?}) vs {}({:?})",
                self.basis, self.alphabet, other.basis, other.alphabet
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let b = self.basis.name();
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(l, c)| if c.is_one() { format!("{b}{l}") } else { format!("({c}){b}{l}") })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct RawTerm {
    part: Partition,
    coeff: RationalFn,
}

#[derive(Serialize, Deserialize)]
struct RawSymExpr {
    basis: Basis,
    #[serde(default, skip_serializing_if = "is_x")]
    alphabet: Alphabet,
    degree: usize,
    terms: Vec<RawTerm>,
}

fn is_x(a: &Alphabet) -> bool {
    *a == Alphabet::X
}

impl Serialize for SymExpr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawSymExpr {
            basis: self.basis,
            alphabet: self.alphabet,
            degree: self.degree(),
            terms: self
                .terms
                .iter()
                .map(|(l, c)| RawTerm { part: l.clone(), coeff: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymExpr {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawSymExpr::deserialize(d)?;
        Ok(SymExpr::from_terms(raw.basis, raw.terms.into_iter().map(|t| (t.part, t.coeff)))
            .with_alphabet(raw.alphabet))
    }
}
