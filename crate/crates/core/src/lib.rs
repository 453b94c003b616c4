//! Generalized Gelfand–Graev characters of `GL_n(F_q)`.
//!
//! The crate builds the GGG characters `Γ_λ` from explicit combinatorial data
//! (the column permutation `ctr`, the tableau `C_λ`, arc diagrams and pattern
//! subgroups of the unitriangular group), computes them by brute-force induction
//! over small prime fields, and checks them against their symmetric-function
//! descriptions: Kostka–Foulkes multiplicities, Hall–Littlewood images and
//! Green-polynomial multiplicity formulas.
//!
//! Module map:
//!
//! - [`qpoly`]: exact coefficients (Laurent polynomials in `q`, rational
//!   functions, cyclotomic numbers).
//! - [`partcomb`]: partitions, tableaux, Kostka and Kostka–Foulkes numbers,
//!   Littlewood–Richardson coefficients, symmetric group characters, Green
//!   polynomials.
//! - [`symfunc`]: symmetric functions over `Q(q)`, Hall–Littlewood bases and the
//!   `Z/(1-q)` plethysm.
//! - [`arcdiag`]: set partitions, `ctr`, `C_λ`, column tableaux and the
//!   bijection between the `A`/`B` position sets.
//! - [`matgrp`]: matrices over `F_p`, pattern subgroups, group enumeration,
//!   Jordan types and flag counting.
//! - [`charlab`]: class functions, induction, inner products, unipotent
//!   characters and the verification suites.
//! - [`cli`]: the command-line front end used by the `ggg` binary.

pub mod arcdiag;
pub mod charlab;
pub mod cli;
pub mod dense;
pub mod error;
pub mod matgrp;
pub mod partcomb;
pub mod qpoly;
pub mod symfunc;

pub use error::{Error, Result};
