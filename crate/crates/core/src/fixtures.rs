//! Small worked examples, written 0-based.

use crate::graph::GraphPair;
use crate::groupoid::Groupoid;
use crate::matrix::BoolMatrix;
use crate::partial::PartialArray;

fn table<const N: usize>(rows: [[usize; N]; N]) -> Groupoid {
    Groupoid::from_rows(&rows).expect("fixture is valid")
}

/// Constant order-4 table.
pub fn c4() -> Groupoid {
    table([[0; 4]; 4])
}

pub fn m4a() -> Groupoid {
    table([[0, 0, 2, 2], [1, 1, 3, 3], [0, 0, 2, 2], [1, 1, 3, 3]])
}

/// A maximal P1 array: every pair shares a row or a column.
pub fn m4b() -> Groupoid {
    table([[0, 0, 3, 3], [1, 1, 2, 2], [0, 0, 2, 2], [1, 1, 3, 3]])
}

/// Order-4 rectangular table; its red relation is [`x4_matrix`].
pub fn x4() -> Groupoid {
    table([[0, 0, 1, 1], [2, 2, 3, 3], [2, 2, 3, 3], [0, 0, 1, 1]])
}

/// First of two idempotent order-5 tables that are isotopic but not isomorphic.
pub fn t5a() -> Groupoid {
    table([
        [0, 0, 0, 0, 0],
        [1, 1, 2, 2, 1],
        [1, 1, 2, 2, 1],
        [3, 4, 3, 3, 4],
        [3, 4, 3, 3, 4],
    ])
}

pub fn t5b() -> Groupoid {
    table([
        [0, 0, 0, 0, 0],
        [1, 1, 2, 2, 2],
        [1, 1, 2, 2, 2],
        [3, 3, 4, 3, 4],
        [3, 3, 4, 3, 4],
    ])
}

/// The central groupoid of the pair `(B, B)` for `B =` [`x4_matrix`].
pub fn e4() -> Groupoid {
    table([[0, 0, 1, 1], [3, 3, 2, 2], [3, 3, 2, 2], [0, 0, 1, 1]])
}

/// Idempotent rectangular table with a non-rectangular quotient by `{0,1,2,3}|{4}`.
pub fn q5() -> Groupoid {
    table([
        [0, 0, 2, 2, 2],
        [1, 1, 3, 3, 1],
        [0, 0, 2, 2, 2],
        [1, 1, 3, 3, 1],
        [0, 0, 3, 3, 4],
    ])
}

/// Idempotent, not rectangular, and `(0*1)*1 != 0*1`.
pub fn i3() -> Groupoid {
    table([[0, 2, 2], [0, 1, 2], [0, 1, 2]])
}

/// Partial Latin square with the Blackburn property that is not a partial P1 array.
pub fn b3() -> PartialArray {
    PartialArray::new(
        3,
        &[
            None,
            Some(0),
            Some(2),
            Some(0),
            None,
            Some(1),
            Some(2),
            Some(1),
            None,
        ],
    )
    .expect("fixture is valid")
}

/// Everyone delivers to node 0 and collects from node 0.
pub fn farmers_market(n: usize) -> GraphPair {
    GraphPair::new(n, (0..n).map(|x| (x, 0)), (0..n).map(|x| (0, x))).expect("fixture is valid")
}

/// A 0/1 matrix `B` with `BB = J`; it is the red relation of [`x4`] but not
/// its green one.
pub fn x4_matrix() -> BoolMatrix {
    BoolMatrix::from_rows(&["1100", "0011", "0011", "1100"]).expect("fixture is valid")
}

/// Incidence matrices of [`farmers_market`]: first column ones, first row ones.
pub fn farmers_market_matrices(n: usize) -> (BoolMatrix, BoolMatrix) {
    (
        BoolMatrix::from_fn(n, |_, j| j == 0).expect("n > 0"),
        BoolMatrix::from_fn(n, |i, _| i == 0).expect("n > 0"),
    )
}
