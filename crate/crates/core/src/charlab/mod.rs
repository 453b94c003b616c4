//! Class functions of `GL_n(F_p)` on unipotent classes: the characters `Γ_λ`
//! built by induction, unipotent characters, inner products, and the symbolic
//! multiplicity formulas for Θ-partitions.

mod classfn;
mod induce;
mod theta;
mod suites;
mod unipotent;

pub use classfn::{unipotent_inner_product, ClassFn, UtClassFn};
pub use induce::{
    ggg_character, ggg_linear_character, induce_to_gl, induce_to_ut, induce_ut_to_gl, supercharacter,
    InductionMethod, LinearCharacter,
};
pub use theta::{
    degree_one_theta_partitions, multiplicity_cuspidal, multiplicity_gl, multiplicity_lr, ss_un, ThetaPartition,
};
pub use unipotent::{
    intertwining_count, permutation_character, unipotent_character_values, unipotent_degree,
    verify_characterization, Characterization,
};
pub use suites::{column_reading_tableau, run_suite, Case, Report, Suite, SuiteConfig};
