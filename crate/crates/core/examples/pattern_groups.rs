//! Pattern subgroups: Dyck paths, parabolic radicals, U_η and U_ctr(λ′).

use ggg::arcdiag::SetPartition;
use ggg::matgrp::{dyck_paths, DyckPath, PatternSubgroup};
use ggg::partcomb::{Composition, Partition};

fn main() {
    let d: DyckPath = "UDUUUDUDDD".parse().unwrap();
    let u = PatternSubgroup::from_dyck(&d, 2).unwrap();
    println!("U_{d}: positions {:?}", u.positions());
    println!("Dyck paths of semilength 4: {}", dyck_paths(4).len());

    let alpha = Composition::new(vec![1, 2, 1]).unwrap();
    let ua = PatternSubgroup::from_composition(&alpha, 3).unwrap();
    println!("U_{alpha} over F_3: order {}, closed {}", ua.order(), ua.is_closed());

    let eta = SetPartition::new(4, [(1, 3), (2, 4)]).unwrap();
    let ue = PatternSubgroup::from_set_partition(&eta, 2).unwrap();
    println!("U_{eta}: {:?}, squares {:?}", ue.positions(), ue.square_positions());

    let la = Partition::new(vec![2, 2]).unwrap();
    let uc = PatternSubgroup::ctr(&la.conjugate(), 2).unwrap();
    println!("U_ctr({}) = {:?}", la.conjugate(), uc.positions());
}
