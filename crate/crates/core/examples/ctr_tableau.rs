//! ctr, C_λ and the arc set ggg(λ) for λ = (4,3,2,2,1).

use ggg::arcdiag::{build_c_tableau, ctr_composition, ctr_permutation, ggg};
use ggg::partcomb::Partition;

fn main() {
    let la: Partition = "4,3,2,2,1".parse().unwrap();
    println!("ctr on columns of width {}: {:?}", la.part(0), ctr_permutation(la.part(0)));
    println!("ctr({la}) = {}", ctr_composition(&la).unwrap());
    let c = build_c_tableau(&la).unwrap();
    for row in c.rows() {
        println!("  {row:?}");
    }
    println!("ggg({la}) = {}", ggg(&la).unwrap());
}
