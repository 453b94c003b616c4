//! Green polynomials X^λ_μ(q) for n = 3 and the cuspidal values X^λ_(n).

use ggg::partcomb::{cuspidal_value, green_polynomial, partitions, Partition};

fn main() {
    for la in partitions(3) {
        for mu in partitions(3) {
            println!("X^{la}_{mu} = {}", green_polynomial(&la, &mu).unwrap());
        }
    }
    for la in partitions(4) {
        let direct = green_polynomial(&la, &Partition::row(4)).unwrap();
        println!("X^{la}_(4) = {direct}   closed form {}", cuspidal_value(&la));
    }
}
