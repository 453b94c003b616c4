//! Supercharacters of UT_4(F_2) induced to GL_4, compared with |V_T| Γ_μ.

use num_bigint::BigInt;
use num_rational::BigRational;

use ggg::arcdiag::enumerate_column_tableaux;
use ggg::charlab::{ggg_character, induce_ut_to_gl, supercharacter, InductionMethod};
use ggg::matgrp::PatternSubgroup;
use ggg::partcomb::{partitions, rearrangements};

fn main() {
    let (n, p, budget) = (4, 2, 30_000_000);
    let method = InductionMethod::ClassRestriction;
    for mu in partitions(n) {
        let gamma = ggg_character(&mu, p, method, budget).unwrap();
        for alpha in rearrangements(&mu.conjugate()) {
            let ua = PatternSubgroup::from_composition(&alpha, p).unwrap();
            for t in enumerate_column_tableaux(&alpha, true) {
                let sp = t.sp();
                let inside = PatternSubgroup::from_set_partition(&sp, p).unwrap().is_subgroup_of(&ua);
                let (_, vt) = PatternSubgroup::u_t_v_t(&t, p).unwrap();
                let chi = supercharacter(&sp, p, budget).unwrap();
                let induced = induce_ut_to_gl(&chi, method, budget).unwrap();
                let target = gamma.scale(&BigRational::from_integer(BigInt::from(vt.order())));
                println!(
                    "μ={mu} α={alpha} rows={:?} U_sp⊆U_α={inside} |V_T|={} match={}",
                    t.rows(),
                    vt.order(),
                    induced == target
                );
            }
        }
    }
}
