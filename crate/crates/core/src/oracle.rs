//! Slow reference computations for tests, independent of `linalg::echelon`.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use crate::linalg::RationalMatrix;

/// Gauss-Jordan with rational division.
pub(crate) fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = &rows[r][col] / &pivot;
                let pivot_row = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub(crate) fn matrix_rank(m: &RationalMatrix) -> usize {
    rank((0..m.rows()).map(|i| m.row(i).to_vec()).collect())
}

/// Dimension of the span of a set of equally sized matrices.
pub(crate) fn span_dim(ms: &[RationalMatrix]) -> usize {
    rank(ms.iter().map(|m| m.entries().to_vec()).collect())
}

/// Lie closure by brute force: keep bracketing every pair of retained
/// elements until no bracket raises the span dimension.
pub(crate) fn lie_dim(generators: &[RationalMatrix]) -> usize {
    let mut elements: Vec<RationalMatrix> = Vec::new();
    for g in generators {
        let mut trial = elements.clone();
        trial.push(g.clone());
        if span_dim(&trial) > span_dim(&elements) {
            elements = trial;
        }
    }
    loop {
        let before = elements.len();
        let snapshot = elements.clone();
        for x in &snapshot {
            for y in &snapshot {
                let c = x.commutator(y).unwrap();
                let mut trial = elements.clone();
                trial.push(c);
                if span_dim(&trial) > elements.len() {
                    elements = trial;
                }
            }
        }
        if elements.len() == before {
            return elements.len();
        }
    }
}
