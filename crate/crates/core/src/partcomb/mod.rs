//! Partitions, compositions and tableaux; Kostka and Kostka–Foulkes numbers,
//! Littlewood–Richardson coefficients, symmetric group characters, Green
//! polynomials and the `q`-transition matrices.

mod green;
mod lr;
mod partition;
mod sn;
mod tableau;

pub use green::{b_poly, cuspidal_value, green_polynomial, transition_matrices, TransitionMatrices};
pub use lr::{lr_coefficient, lr_product};
pub use partition::{compositions, partitions, rearrangements, Composition, Partition};
#[allow(unused_imports)]
pub(crate) use partition::{join, parse_list};
pub use sn::{character_table, sn_character, z_mu};
pub use tableau::{
    charge, kostka, kostka_foulkes, kostka_foulkes_matrix, kostka_matrix, skew_ssyt, ssyt, Ssyt,
};
