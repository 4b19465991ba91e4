//! Real Lie algebra generated by a set of square matrices.
//!
//! The closure is the span of the generators together with all right-nested
//! brackets `[g1, [g2, [..., gk]]]`, so the worklist brackets each new
//! element with the generators only. A modular pass runs first; if it
//! reaches the cap at full dimension the answer is exact without touching
//! big integers (see `linalg::modular`).

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::echelon::make_primitive;
use crate::linalg::modular::{ModEchelon, ModMatrix};
use crate::linalg::{intmat, MatrixSpaceBasis, RationalMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieClosure {
    /// Dimension of the closure, or of the partial span when `cap` stopped it.
    pub dim: usize,
    pub basis: MatrixSpaceBasis,
}

/// Closure of `generators` under the commutator, stopping early once the
/// span reaches `cap` (default and maximum `n²`).
pub fn lie_closure(generators: &[RationalMatrix], cap: Option<usize>) -> Result<LieClosure> {
    let first = generators.first().ok_or(Error::NoGenerators)?;
    let n = first.rows();
    for g in generators {
        if !g.is_square() || g.rows() != n {
            return Err(Error::ShapeMismatch {
                left_rows: n,
                left_cols: n,
                right_rows: g.rows(),
                right_cols: g.cols(),
            });
        }
    }
    let full = n * n;
    let cap = cap.map_or(full, |c| c.min(full));
    let ints: Vec<Vec<BigInt>> = generators
        .iter()
        .map(RationalMatrix::primitive_integer_entries)
        .collect();

    if cap == full && modular_dim(n, &ints, cap) == full {
        return Ok(LieClosure {
            dim: full,
            basis: MatrixSpaceBasis::full(n),
        });
    }
    let basis = exact_closure(n, &ints, cap);
    Ok(LieClosure {
        dim: basis.dim(),
        basis,
    })
}

/// Dimension of the closure over `GF(p)`, a lower bound for the rational one.
fn modular_dim(n: usize, gens: &[Vec<BigInt>], cap: usize) -> usize {
    let gens: Vec<ModMatrix> = gens
        .iter()
        .map(|g| ModMatrix::from_integers(n, g))
        .collect();
    let mut echelon = ModEchelon::new(n * n);
    let mut work = VecDeque::new();
    for g in &gens {
        if echelon.insert(g.data.clone()) {
            work.push_back(g.clone());
        }
    }
    while let Some(x) = work.pop_front() {
        for g in &gens {
            if echelon.len() >= cap {
                return echelon.len();
            }
            let c = g.commutator(&x);
            if echelon.insert(c.data.clone()) {
                work.push_back(c);
            }
        }
    }
    echelon.len()
}

fn exact_closure(n: usize, gens: &[Vec<BigInt>], cap: usize) -> MatrixSpaceBasis {
    let mut basis = MatrixSpaceBasis::new(n);
    let mut work = VecDeque::new();
    for g in gens {
        if basis.dim() >= cap {
            return basis;
        }
        if basis.insert_integer(g.clone()) {
            work.push_back(g.clone());
        }
    }
    while let Some(x) = work.pop_front() {
        for g in gens {
            if basis.dim() >= cap {
                return basis;
            }
            let mut c = intmat::commutator(n, g, &x);
            make_primitive(&mut c);
            if basis.insert_integer(c.clone()) {
                work.push_back(c);
            }
        }
    }
    basis
}
