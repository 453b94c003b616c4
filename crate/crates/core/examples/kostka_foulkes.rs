//! Kostka-Foulkes table K_{μλ}(q) for partitions of 4.

use ggg::partcomb::{kostka_foulkes, partitions};

fn main() {
    let ps = partitions(4);
    for mu in &ps {
        for la in &ps {
            let k = kostka_foulkes(mu, la).unwrap();
            if !k.is_zero() {
                println!("K_{{{mu},{la}}}(q) = {k}");
            }
        }
    }
}
