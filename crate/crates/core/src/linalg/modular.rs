//! Linear algebra over `GF(p)` for a 32-bit prime.
//!
//! Used only as a one-sided certificate: integer vectors whose images mod p
//! are independent are independent over the rationals, so a full-rank
//! result here proves full rank exactly. Anything short of full rank is
//! recomputed over the integers.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

pub(crate) const PRIME: u64 = 4_294_967_291;

pub(crate) fn reduce(x: &BigInt) -> u64 {
    let r = x.mod_floor(&BigInt::from(PRIME));
    r.to_u64().unwrap_or(0)
}

#[inline]
fn mul(a: u64, b: u64) -> u64 {
    a * b % PRIME
}

#[inline]
fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + PRIME - b
    }
}

fn inverse(a: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a, PRIME - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        exp >>= 1;
    }
    acc
}

/// Reduced row echelon form with unit pivots over `GF(p)`.
#[derive(Debug, Clone)]
pub(crate) struct ModEchelon {
    width: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl ModEchelon {
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

    pub(crate) fn is_full(&self) -> bool {
        self.rows.len() == self.width
    }

    pub(crate) fn insert(&mut self, mut v: Vec<u64>) -> bool {
        if self.is_full() {
            return false;
        }
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let f = v[p];
            if f != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    if r != 0 {
                        *x = sub(*x, mul(f, r));
                    }
                }
            }
        }
        let Some(pivot) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inverse(v[pivot]);
        v.iter_mut().for_each(|x| *x = mul(*x, inv));
        for row in &mut self.rows {
            let f = row[pivot];
            if f != 0 {
                for (x, &r) in row.iter_mut().zip(&v) {
                    if r != 0 {
                        *x = sub(*x, mul(f, r));
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v);
        true
    }
}

/// Square matrix over `GF(p)`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ModMatrix {
    pub(crate) n: usize,
    pub(crate) data: Vec<u64>,
}

impl ModMatrix {
    pub(crate) fn from_integers(n: usize, data: &[BigInt]) -> Self {
        Self {
            n,
            data: data.iter().map(reduce).collect(),
        }
    }

    fn mul_into(&self, other: &Self, out: &mut [u64]) {
        let n = self.n;
        out.iter_mut().for_each(|x| *x = 0);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.data[k * n + j];
                    if b != 0 {
                        let cell = &mut out[i * n + j];
                        *cell = (*cell + mul(a, b)) % PRIME;
                    }
                }
            }
        }
    }

    pub(crate) fn commutator(&self, other: &Self) -> Self {
        let mut xy = vec![0; self.n * self.n];
        let mut yx = vec![0; self.n * self.n];
        self.mul_into(other, &mut xy);
        other.mul_into(self, &mut yx);
        for (a, b) in xy.iter_mut().zip(&yx) {
            *a = sub(*a, *b);
        }
        Self {
            n: self.n,
            data: xy,
        }
    }
}
