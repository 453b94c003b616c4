//! Unipotent characters of GL_3(F_2) on unipotent classes.

use ggg::charlab::{permutation_character, unipotent_character_values, unipotent_degree};
use ggg::partcomb::Partition;

fn main() {
    let chars = unipotent_character_values(3, 2).unwrap();
    for (mu, chi) in &chars {
        let vals: Vec<String> = chi.values().values().map(|v| v.to_string()).collect();
        println!("χ^{mu}: [{}]  degree {}", vals.join(", "), unipotent_degree(mu, 2));
    }
    let flags = permutation_character(&Partition::column(3), 2).unwrap();
    let vals: Vec<String> = flags.values().values().map(|v| v.to_string()).collect();
    println!("complete flags: [{}]", vals.join(", "));
}
