use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::echelon::IntEchelon;
use super::{clear_denominators, RationalMatrix};
use crate::error::{Error, Result};

/// A subspace of `n × n` matrices, held as the reduced echelon form of the
/// row-major vectorizations of a spanning set.
///
/// The stored form is canonical: two bases compare equal exactly when they
/// span the same subspace.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixSpaceBasis {
    side: usize,
    echelon: IntEchelon,
}

impl MatrixSpaceBasis {
    pub fn new(side: usize) -> Self {
        Self {
            side,
            echelon: IntEchelon::new(side * side),
        }
    }

    /// The whole of `gl(n)`, spanned by the units `e_i e_jᵀ`.
    pub fn full(side: usize) -> Self {
        let mut basis = Self::new(side);
        let width = side * side;
        for k in 0..width {
            let mut v = alloc::vec![BigInt::from(0); width];
            v[k] = BigInt::one();
            basis.echelon.insert(v);
        }
        basis
    }

    pub fn side(&self) -> usize {
        self.side
    }

    /// `n²`.
    pub fn ambient_dim(&self) -> usize {
        self.side * self.side
    }

    pub fn dim(&self) -> usize {
        self.echelon.len()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// Pivot positions in the row-major vectorization, strictly increasing.
    pub fn pivots(&self) -> &[usize] {
        self.echelon.pivots()
    }

    /// Adds `m` to the span. Returns `true` iff `m` was not already in it.
    pub fn span_insert(&mut self, m: &RationalMatrix) -> Result<bool> {
        self.check(m)?;
        Ok(self.echelon.insert(clear_denominators(m.entries())))
    }

    pub fn contains(&self, m: &RationalMatrix) -> Result<bool> {
        self.check(m)?;
        Ok(self.echelon.contains(&clear_denominators(m.entries())))
    }

    /// Echelon rows with leading entry 1, as vectors of length `n²`.
    pub fn echelon_rows(&self) -> Vec<Vec<BigRational>> {
        self.echelon
            .rows()
            .iter()
            .zip(self.echelon.pivots())
            .map(|(row, &p)| {
                row.iter()
                    .map(|x| BigRational::new(x.clone(), row[p].clone()))
                    .collect()
            })
            .collect()
    }

    /// The echelon rows folded back into `n × n` matrices.
    pub fn matrices(&self) -> Vec<RationalMatrix> {
        self.echelon_rows()
            .into_iter()
            .map(|row| {
                RationalMatrix::from_entries(self.side, self.side, row).expect("row length is n²")
            })
            .collect()
    }

    pub(crate) fn insert_integer(&mut self, v: Vec<BigInt>) -> bool {
        self.echelon.insert(v)
    }

    pub(crate) fn contains_integer(&self, v: &[BigInt]) -> bool {
        self.echelon.contains(v)
    }

    fn check(&self, m: &RationalMatrix) -> Result<()> {
        if m.rows() == self.side && m.cols() == self.side {
            Ok(())
        } else {
            Err(Error::ShapeMismatch {
                left_rows: self.side,
                left_cols: self.side,
                right_rows: m.rows(),
                right_cols: m.cols(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn span_insert_examples() {
        let e11 = RationalMatrix::unit(2, 0, 0);
        let e22 = RationalMatrix::unit(2, 1, 1);
        let mut b = MatrixSpaceBasis::new(2);
        assert_eq!(b.span_insert(&e11), Ok(true));
        assert_eq!(b.dim(), 1);
        assert_eq!(b.span_insert(&e11), Ok(false));
        assert_eq!(b.span_insert(&e22), Ok(true));
        assert_eq!(b.span_insert(&RationalMatrix::identity(2)), Ok(false));
        assert_eq!(b.dim(), 2);
        assert_eq!(b.pivots(), &[0, 3]);
        assert!(b.span_insert(&RationalMatrix::identity(3)).is_err());
    }

    #[test]
    fn echelon_rows_have_unit_pivots() {
        let mut b = MatrixSpaceBasis::new(2);
        b.span_insert(&RationalMatrix::from_i64(2, 2, &[2, 4, 0, 6]).unwrap())
            .unwrap();
        b.span_insert(&RationalMatrix::from_i64(2, 2, &[0, 3, 1, 0]).unwrap())
            .unwrap();
        let rows = b.echelon_rows();
        for (row, &p) in rows.iter().zip(b.pivots()) {
            assert!(row[p].is_one());
            assert!(row[..p]
                .iter()
                .all(|x| *x == BigRational::from_integer(0.into())));
        }
        assert_eq!(b.matrices().len(), 2);
    }

    #[test]
    fn full_space() {
        let b = MatrixSpaceBasis::full(3);
        assert!(b.is_full());
        assert_eq!(b.dim(), 9);
        assert_eq!(
            b.contains(&RationalMatrix::from_i64(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]).unwrap()),
            Ok(true)
        );
    }

    fn mat2() -> impl Strategy<Value = RationalMatrix> {
        proptest::collection::vec((-3i64..=3, 1i64..=3), 4).prop_map(|v| {
            let data = v
                .into_iter()
                .map(|(n, d)| BigRational::new(n.into(), d.into()))
                .collect();
            RationalMatrix::from_entries(2, 2, data).unwrap()
        })
    }

    proptest! {
        #[test]
        fn same_span_same_echelon(ms in proptest::collection::vec(mat2(), 1..5), c in 1i64..5) {
            let mut forward = MatrixSpaceBasis::new(2);
            let mut backward = MatrixSpaceBasis::new(2);
            for m in &ms {
                let before = forward.dim();
                let grew = forward.span_insert(m).unwrap();
                prop_assert_eq!(grew, forward.dim() == before + 1);
                prop_assert!(!forward.span_insert(m).unwrap());
            }
            // Reverse order with rescaled and mixed elements.
            let scale = BigRational::from_integer(c.into());
            for (k, m) in ms.iter().enumerate().rev() {
                let mixed = if k > 0 { m.add(&ms[0]).unwrap() } else { m.clone() };
                backward.span_insert(&mixed.scale(&scale)).unwrap();
            }
            if ms.len() > 1 {
                backward.span_insert(&ms[0]).unwrap();
            }
            prop_assert_eq!(forward, backward);
        }
    }
}
