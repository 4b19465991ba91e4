//! Dense square integer matrices as flat row-major slices.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

pub(crate) fn mul(n: usize, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = alloc::vec![BigInt::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let x = &a[i * n + k];
            if x.is_zero() {
                continue;
            }
            for j in 0..n {
                let y = &b[k * n + j];
                if !y.is_zero() {
                    out[i * n + j] += x * y;
                }
            }
        }
    }
    out
}

pub(crate) fn commutator(n: usize, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut ab = mul(n, a, b);
    let ba = mul(n, b, a);
    for (x, y) in ab.iter_mut().zip(&ba) {
        if !y.is_zero() {
            *x -= y;
        }
    }
    ab
}

/// `a v` for a square `a`.
pub(crate) fn mul_vec(n: usize, a: &[BigInt], v: &[BigInt]) -> Vec<BigInt> {
    (0..n)
        .map(|i| {
            let mut acc = BigInt::zero();
            for (x, y) in a[i * n..(i + 1) * n].iter().zip(v) {
                if !x.is_zero() && !y.is_zero() {
                    acc += x * y;
                }
            }
            acc
        })
        .collect()
}

/// `vᵀ a` for a square `a`.
pub(crate) fn vec_mul(n: usize, v: &[BigInt], a: &[BigInt]) -> Vec<BigInt> {
    let mut out = alloc::vec![BigInt::zero(); n];
    for (k, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (o, y) in out.iter_mut().zip(&a[k * n..(k + 1) * n]) {
            if !y.is_zero() {
                *o += x * y;
            }
        }
    }
    out
}
