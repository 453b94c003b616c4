//! Unipotent classes of GL_3(F_2): Jordan types, centralizers, class sizes.

use std::collections::BTreeMap;

use ggg::matgrp::{centralizer_order, class_size, jordan_type, PatternSubgroup};
use ggg::partcomb::partitions;

fn main() {
    let (n, p) = (3, 2);
    let ut = PatternSubgroup::full(n, p).unwrap();
    let mut counts: BTreeMap<_, u32> = BTreeMap::new();
    for u in ut.elements(1000).unwrap() {
        *counts.entry(jordan_type(&u).unwrap()).or_default() += 1;
    }
    for mu in partitions(n) {
        println!(
            "{mu}: |C(u)| = {}, class size {}, elements in UT_3 {}",
            centralizer_order(&mu, p),
            class_size(&mu, p),
            counts.get(&mu).copied().unwrap_or(0)
        );
    }
}
