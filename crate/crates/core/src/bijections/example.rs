//! The order-10 example with `l = 1`, `r = 12`, traced through every stage.

use super::kissing::{gt_to_magog, to_gt};
use super::paths::{start_point, LatticePath};
use super::tuples::PathTuple;
use crate::objects::{GtPattern, MagogPentagon};

pub const N: usize = 10;
pub const L: usize = 1;
pub const R: usize = 12;

const STEPS: [&str; 9] = [
    "N",
    "N,E",
    "N,E,N",
    "E,N,N,E",
    "E,N,N,N,E",
    "E,E,N,N,N,E",
    "E,E,E,N,N,N,N",
    "N,E,E,E,N,N,N,E",
    "E,E,E,N,E,N,N,N,N",
];

pub fn example_tuple() -> PathTuple {
    let paths = (1..)
        .zip(STEPS)
        .map(|(j, s)| LatticePath::parse(start_point(j), s).unwrap())
        .collect();
    PathTuple::new(N, L, R, paths).expect("the example tuple is valid")
}

pub fn example_gt() -> GtPattern {
    to_gt(&example_tuple())
}

pub fn example_magog() -> MagogPentagon {
    gt_to_magog(&example_gt(), L, R).expect("the example pattern has its forced ones")
}
