//! Non-intersecting lattice paths, their kissing form, and the passage to
//! Gelfand-Tsetlin patterns and Magog pentagons.

pub mod example;
mod kissing;
mod paths;
mod tuples;

pub use kissing::{
    check_forced_ones, from_gt, gt_to_magog, magog_shape_for, magog_to_gt, params_of_shape, to_gt,
    KissingTuple,
};
pub use paths::{
    all_step_sequences, brute_path_gf, end_point, line_offset, start_point, LatticePath, Point, Step,
};
pub use tuples::{enumerate_tuples, lgv_check, tuples_genpoly, LgvReport, PathTuple};
