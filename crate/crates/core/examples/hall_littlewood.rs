//! Hall-Littlewood functions and the image of (−1)^n Q_λ under X ↦ X/(1−q).

use ggg::partcomb::Partition;
use ggg::qpoly::RationalFn;
use ggg::symfunc::{convert, hl_h, hl_q, plethysm_1_minus_q, Basis};

fn main() {
    let la = Partition::new(vec![2, 1]).unwrap();
    let q = hl_q(&la);
    println!("Q_{la} = {q}");
    println!("in P~:  {}", convert(&q, Basis::HlPtilde).unwrap());
    let signed = q.scale(&RationalFn::from_int(-1));
    let image = plethysm_1_minus_q(&signed, true).unwrap();
    println!("image:  {image}");
    println!("H_{la} = {}", hl_h(&la));
    assert_eq!(image, hl_h(&la));
}
