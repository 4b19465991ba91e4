//! Fraction-free reduced row echelon form over the integers.
//!
//! Rows are primitive (entry gcd 1) with a positive pivot, and every pivot
//! column is zero outside its own row. Scaling each row of the rational
//! RREF to a primitive integer vector with positive pivot is a bijection, so
//! this form is canonical for the row space.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct IntEchelon {
    width: usize,
    /// Sorted by pivot column.
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl IntEchelon {
    pub(crate) fn new(width: usize) -> Self {
        Self {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub(crate) fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Eliminates every pivot column from `v`. `v` stays a nonzero multiple
    /// of its original residue modulo the row space.
    pub(crate) fn reduce(&self, v: &mut [BigInt]) {
        debug_assert_eq!(v.len(), self.width);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            eliminate(v, row, p);
        }
        make_primitive(v);
    }

    pub(crate) fn contains(&self, v: &[BigInt]) -> bool {
        if self.rows.len() == self.width {
            return true;
        }
        let mut v = v.to_vec();
        self.reduce(&mut v);
        v.iter().all(Zero::is_zero)
    }

    /// Adds `v` to the row space; returns whether the space grew.
    pub(crate) fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        if self.rows.len() == self.width {
            return false;
        }
        self.reduce(&mut v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        if v[pivot].is_negative() {
            v.iter_mut().for_each(|x| *x = -&*x);
        }
        for row in &mut self.rows {
            if !row[pivot].is_zero() {
                // v[pivot] > 0 so the row keeps its pivot sign.
                eliminate(row, &v, pivot);
                make_primitive(row);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v);
        true
    }
}

/// `target <- (a/g) target - (b/g) row` where `a = row[col]`, `b = target[col]`,
/// which zeroes `target[col]`. Requires `row[col] > 0`.
fn eliminate(target: &mut [BigInt], row: &[BigInt], col: usize) {
    let a = &row[col];
    let g = a.gcd(&target[col]);
    let fa = a / &g;
    let fb = &target[col] / &g;
    let scale = !fa.is_one();
    for (t, r) in target.iter_mut().zip(row) {
        if scale && !t.is_zero() {
            *t *= &fa;
        }
        if !r.is_zero() {
            *t -= &fb * r;
        }
    }
}

/// Divides out the gcd of the entries. A zero vector is left alone.
pub(crate) fn make_primitive(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() {
        return;
    }
    for x in v.iter_mut() {
        if !x.is_zero() {
            *x /= &g;
        }
    }
}
