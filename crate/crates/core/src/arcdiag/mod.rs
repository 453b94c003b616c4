//! Arc diagrams and column tableaux: non-nesting set partitions, the column
//! permutation `ctr`, the tableau `C_λ` and its arc diagram, `α`-column
//! tableaux, and the position sets `A`, `B` with the bijection between them.

mod setpart;
mod tableau;

pub use setpart::{nonnesting_set_partitions, set_partitions, SetPartition};
pub use tableau::{
    ab_sets, build_c_tableau, ctr_composition, ctr_permutation, enumerate_column_tableaux, ggg, tau,
    tau_inverse, ColumnTableau, PositionSet,
};
