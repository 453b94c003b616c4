//! Matrices over prime fields, `GL_n(F_p)` and its pattern subgroups, Jordan
//! types, invariant flags and unipotent centralizers.

mod group;
mod matrix;
mod pattern;
mod subspace;

pub use group::{
    centralizer_order, centralizer_order_direct, check_budget, class_size, class_size_by_orbit, default_budget,
    fixed_flag_count_cosets, for_each_gl, gl_fold, gl_order, gl_order_big, ut_order, DEFAULT_BUDGET,
};
pub use matrix::{check_field, inv_mod, jordan_type, FqMatrix, MAX_DIM, MAX_PRIME};
pub use pattern::{dyck_paths, DyckPath, Parabolic, PatternKind, PatternSubgroup};
pub use subspace::{fixed_flag_count, row_reduce, subspaces, Subspace};
