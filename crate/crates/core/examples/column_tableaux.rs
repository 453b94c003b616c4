//! Non-nesting column tableaux for α = (1,2,2), with their A/B sets and τ.

use ggg::arcdiag::{ab_sets, enumerate_column_tableaux, tau};
use ggg::partcomb::Composition;

fn main() {
    let alpha: Composition = "1,2,2".parse().unwrap();
    let all = enumerate_column_tableaux(&alpha, false);
    let nn = enumerate_column_tableaux(&alpha, true);
    println!("|T_α| = {}, |T_α^nn| = {}", all.len(), nn.len());
    for t in &nn {
        let (a, b) = ab_sets(t).unwrap();
        println!("rows {:?}  sp {}  A {:?}  B {:?}", t.rows(), t.sp(), a, b);
        for (x, y) in tau(t).unwrap() {
            println!("    τ{x:?} = {y:?}");
        }
    }
}
