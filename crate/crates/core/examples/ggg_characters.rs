//! Γ_λ for GL_3(F_3) and its multiplicities against unipotent characters.

use ggg::charlab::{ggg_character, unipotent_character_values, unipotent_inner_product, InductionMethod};
use ggg::partcomb::{kostka_foulkes, partitions};

fn main() {
    let (n, p) = (3, 3);
    let chars = unipotent_character_values(n, p).unwrap();
    for la in partitions(n) {
        let gamma = ggg_character(&la, p, InductionMethod::GroupSum, 30_000_000).unwrap();
        let vals: Vec<String> = gamma.values().iter().map(|(mu, v)| format!("{mu}:{v}")).collect();
        println!("Γ_{la} = {}", vals.join("  "));
        for (mu, chi) in &chars {
            let m = unipotent_inner_product(&gamma, chi).unwrap();
            println!("    <Γ, χ^{mu}> = {m}   K(q) = {}", kostka_foulkes(mu, &la).unwrap());
        }
    }
}
