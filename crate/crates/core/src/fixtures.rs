//! Shared fixtures for unit tests: the running four-generator pair and its
//! completion operators.

use crate::operator::ReductionOperator;
use crate::scalar::{int, Scalar};
use crate::vector::Vector;

pub fn v(dim: usize, terms: &[(usize, i64)]) -> Vector {
    Vector::from_terms(dim, terms.iter().map(|&(g, c)| (g, int(c)))).unwrap()
}

pub fn m(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| int(x)).collect())
        .collect()
}

/// g2 -> g1, g4 -> g3 over {g1 < g2 < g3 < g4}.
pub fn t1() -> ReductionOperator {
    ReductionOperator::from_matrix(&m(&[
        &[1, 1, 0, 0],
        &[0, 0, 0, 0],
        &[0, 0, 1, 1],
        &[0, 0, 0, 0],
    ]))
    .unwrap()
}

/// g4 -> g2, everything else fixed.
pub fn t2() -> ReductionOperator {
    ReductionOperator::from_matrix(&m(&[
        &[1, 0, 0, 0],
        &[0, 1, 0, 1],
        &[0, 0, 1, 0],
        &[0, 0, 0, 0],
    ]))
    .unwrap()
}

/// Greatest lower bound of the pair: g2, g3, g4 all map to g1.
pub fn meet_of_pair() -> ReductionOperator {
    ReductionOperator::from_matrix(&m(&[
        &[1, 1, 1, 1],
        &[0, 0, 0, 0],
        &[0, 0, 0, 0],
        &[0, 0, 0, 0],
    ]))
    .unwrap()
}

/// Minimal complement sending g3 to g1.
pub fn c1() -> ReductionOperator {
    ReductionOperator::from_matrix(&m(&[
        &[1, 0, 1, 0],
        &[0, 1, 0, 0],
        &[0, 0, 0, 0],
        &[0, 0, 0, 1],
    ]))
    .unwrap()
}

/// Minimal complement sending g3 to g2.
pub fn c2() -> ReductionOperator {
    ReductionOperator::from_matrix(&m(&[
        &[1, 0, 0, 0],
        &[0, 1, 1, 0],
        &[0, 0, 0, 0],
        &[0, 0, 0, 1],
    ]))
    .unwrap()
}
