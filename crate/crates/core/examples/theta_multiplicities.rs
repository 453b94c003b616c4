//! Multiplicities of Γ_λ in irreducibles labelled by Θ-partitions.

use ggg::charlab::{degree_one_theta_partitions, multiplicity_cuspidal, multiplicity_gl, multiplicity_lr, ThetaPartition};
use ggg::partcomb::{partitions, Partition};

fn main() {
    for nu in degree_one_theta_partitions(3) {
        for la in partitions(3) {
            let gl = multiplicity_gl(&nu, &la).unwrap();
            let lr = multiplicity_lr(&nu, &la).unwrap();
            println!("ν={nu} λ={la}: {gl}  (LR {lr})");
        }
    }
    let cusp = ThetaPartition::new(vec![(3, Partition::row(1))]).unwrap();
    for la in partitions(3) {
        println!("cuspidal ν={cusp} λ={la}: {}", multiplicity_cuspidal(&cusp, &la).unwrap());
    }
}
