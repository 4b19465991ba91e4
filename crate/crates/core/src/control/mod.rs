//! Walk matrices, the span of `P(A, Z)`, Lie closures, and the combined
//! controllability verdict for a symmetric matrix and a set of control
//! vertices `Z = {e_j : j ∈ S}`.

mod lie;

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::echelon::IntEchelon;
use crate::linalg::modular::{self, ModEchelon};
use crate::linalg::{intmat, RationalMatrix};
use crate::vertex_set::VertexSet;
use crate::zero_forcing;

pub use lie::{lie_closure, LieClosure};

/// Default largest order for which Lie closures are attempted.
pub const DEFAULT_LIE_ORDER_CAP: usize = 12;

/// Guardrails on exact computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Limits {
    pub lie_order_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            lie_order_cap: DEFAULT_LIE_ORDER_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum SignClass {
    /// Every nonzero off-diagonal entry is positive. Also used when there
    /// are no nonzero off-diagonal entries at all.
    AllPositiveOffdiag,
    AllNegativeOffdiag,
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    RandomSameSign { seed: u64 },
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixKind::Adjacency => f.write_str("adjacency"),
            MatrixKind::Laplacian => f.write_str("laplacian"),
            MatrixKind::RandomSameSign { seed } => write!(f, "random:{seed}"),
        }
    }
}

impl FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "adjacency" => Ok(MatrixKind::Adjacency),
            "laplacian" => Ok(MatrixKind::Laplacian),
            other => other
                .strip_prefix("random:")
                .and_then(|seed| seed.parse().ok())
                .map(|seed| MatrixKind::RandomSameSign { seed })
                .ok_or_else(|| Error::UnknownMatrixKind(other.to_string())),
        }
    }
}

/// A symmetric rational matrix together with its graph `G(A)` and the sign
/// pattern of its off-diagonal entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternMatrix {
    matrix: RationalMatrix,
    pattern: Graph,
    sign_class: SignClass,
    /// Positive multiple of `matrix` with coprime integer entries.
    integer: Vec<BigInt>,
}

impl PatternMatrix {
    /// Validates symmetry and derives the pattern graph and sign class.
    pub fn new(matrix: RationalMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        let n = matrix.rows();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if let Some((row, col)) = matrix.asymmetry() {
            return Err(Error::NotSymmetric { row, col });
        }
        let mut edges = Vec::new();
        let (mut pos, mut neg) = (false, false);
        for i in 0..n {
            for j in i + 1..n {
                let x = matrix.get(i, j);
                if !x.is_zero() {
                    edges.push((i + 1, j + 1));
                    pos |= x.is_positive();
                    neg |= x.is_negative();
                }
            }
        }
        let sign_class = match (pos, neg) {
            (true, true) => SignClass::Mixed,
            (false, true) => SignClass::AllNegativeOffdiag,
            _ => SignClass::AllPositiveOffdiag,
        };
        let pattern = Graph::from_edges(n, edges)?;
        let integer = matrix.primitive_integer_entries();
        Ok(Self {
            matrix,
            pattern,
            sign_class,
            integer,
        })
    }

    /// Adjacency `A_G`, Laplacian `L_G = D_G - A_G`, or a seeded random
    /// matrix with off-diagonal entries in `1..=9` on the edges and diagonal
    /// entries in `-9..=9`. In every case `G(A) = g`.
    pub fn build(g: &Graph, kind: MatrixKind) -> Self {
        let n = g.order();
        let int = |x: i64| BigRational::from_integer(x.into());
        let matrix = match kind {
            MatrixKind::Adjacency => {
                RationalMatrix::from_fn(n, n, |i, j| int(g.has_edge(i, j) as i64))
            }
            MatrixKind::Laplacian => RationalMatrix::from_fn(n, n, |i, j| {
                if i == j {
                    int(g.degree(i) as i64)
                } else {
                    int(-(g.has_edge(i, j) as i64))
                }
            }),
            MatrixKind::RandomSameSign { seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut m = RationalMatrix::zeros(n, n);
                for i in 0..n {
                    for j in i + 1..n {
                        if g.has_edge(i, j) {
                            let w = int(rng.gen_range(1..=9));
                            m.set(i, j, w.clone());
                            m.set(j, i, w);
                        }
                    }
                }
                for i in 0..n {
                    m.set(i, i, int(rng.gen_range(-9..=9)));
                }
                m
            }
        };
        Self::new(matrix).expect("builders produce symmetric matrices")
    }

    pub fn order(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    pub fn sign_class(&self) -> SignClass {
        self.sign_class
    }

    pub fn is_same_sign(&self) -> bool {
        self.sign_class != SignClass::Mixed
    }

    fn controls(&self, s: &VertexSet) -> Result<()> {
        s.check_order(self.order())?;
        if s.is_empty() {
            return Err(Error::EmptyControlSet);
        }
        Ok(())
    }

    /// Walk columns `Â^m e_k` for the integer multiple `Â = cA`, blocks in
    /// ascending `k`. Same span as the columns of `W̃(A, Z)`.
    fn integer_walk_columns(&self, s: &VertexSet) -> Vec<Vec<BigInt>> {
        let n = self.order();
        let mut cols = Vec::with_capacity(n * s.len());
        for &k in s.indices() {
            let mut v = alloc::vec![BigInt::zero(); n];
            v[k] = BigInt::one();
            for _ in 0..n {
                let next = intmat::mul_vec(n, &self.integer, &v);
                cols.push(core::mem::replace(&mut v, next));
            }
        }
        cols
    }

    /// Rows `e_jᵀ Â^l`, blocks in ascending `j`.
    fn integer_walk_rows(&self, s: &VertexSet) -> Vec<Vec<BigInt>> {
        let n = self.order();
        let mut rows = Vec::with_capacity(n * s.len());
        for &j in s.indices() {
            let mut v = alloc::vec![BigInt::zero(); n];
            v[j] = BigInt::one();
            for _ in 0..n {
                let next = intmat::vec_mul(n, &v, &self.integer);
                rows.push(core::mem::replace(&mut v, next));
            }
        }
        rows
    }
}

/// The extended walk matrix `[e_j, A e_j, ..., A^{n-1} e_j, ...]` over
/// `j ∈ S` ascending.
pub fn walk_matrix(a: &PatternMatrix, s: &VertexSet) -> Result<RationalMatrix> {
    a.controls(s)?;
    let n = a.order();
    let mut columns = Vec::with_capacity(n * s.len());
    for &j in s.indices() {
        let mut v: Vec<BigRational> = (0..n)
            .map(|i| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            })
            .collect();
        for _ in 0..n {
            let next = a.matrix.mat_vec(&v)?;
            columns.push(core::mem::replace(&mut v, next));
        }
    }
    Ok(RationalMatrix::from_fn(n, columns.len(), |i, c| {
        columns[c][i].clone()
    }))
}

/// Kalman rank test: `(rank W̃ = n, rank W̃)`.
pub fn kalman_controllable(a: &PatternMatrix, s: &VertexSet) -> Result<(bool, usize)> {
    a.controls(s)?;
    let n = a.order();
    let mut echelon = IntEchelon::new(n);
    for col in a.integer_walk_columns(s) {
        if echelon.len() == n {
            break;
        }
        echelon.insert(col);
    }
    Ok((echelon.len() == n, echelon.len()))
}

/// `dim span P(A, Z)` with `P(A, Z) = {A^m e_k e_jᵀ A^l : 0 ≤ m, l ≤ n-1, k, j ∈ S}`,
/// by inserting every product.
pub fn p_span_dim(a: &PatternMatrix, s: &VertexSet) -> Result<usize> {
    a.controls(s)?;
    let n = a.order();
    let cols = a.integer_walk_columns(s);
    let rows = a.integer_walk_rows(s);
    let product = |u: &[BigInt], r: &[BigInt]| -> Vec<BigInt> {
        let mut out = Vec::with_capacity(n * n);
        for x in u {
            for y in r {
                out.push(x * y);
            }
        }
        out
    };

    let mut certificate = ModEchelon::new(n * n);
    let mod_cols: Vec<Vec<u64>> = cols
        .iter()
        .map(|c| c.iter().map(modular::reduce).collect())
        .collect();
    let mod_rows: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(modular::reduce).collect())
        .collect();
    'outer: for u in &mod_cols {
        for r in &mod_rows {
            if certificate.is_full() {
                break 'outer;
            }
            let v = u
                .iter()
                .flat_map(|&x| r.iter().map(move |&y| x * y % modular::PRIME))
                .collect();
            certificate.insert(v);
        }
    }
    if certificate.is_full() {
        return Ok(n * n);
    }

    let mut echelon = IntEchelon::new(n * n);
    for u in &cols {
        for r in &rows {
            if echelon.len() == n * n {
                return Ok(n * n);
            }
            echelon.insert(product(u, r));
        }
    }
    Ok(echelon.len())
}

fn generators(a: &PatternMatrix, s: &VertexSet) -> Vec<RationalMatrix> {
    let n = a.order();
    let mut gens = Vec::with_capacity(1 + s.len());
    gens.push(a.matrix.clone());
    gens.extend(s.indices().iter().map(|&j| RationalMatrix::unit(n, j, j)));
    gens
}

/// `L(A, Z)`: the real Lie algebra generated by `A` and `e_j e_jᵀ`, `j ∈ S`.
pub fn lie_algebra(a: &PatternMatrix, s: &VertexSet, limits: &Limits) -> Result<LieClosure> {
    a.controls(s)?;
    if a.order() > limits.lie_order_cap {
        return Err(Error::OrderCapExceeded {
            order: a.order(),
            cap: limits.lie_order_cap,
        });
    }
    lie_closure(&generators(a, s), None)
}

/// `(dim L(A, Z) = n², dim L(A, Z))`.
///
/// `L(A, Z) = gl(n, R)` holds exactly when the complex algebra generated by
/// `iA` and `i e_j e_jᵀ` is `u(n)`, i.e. when the quantum system with those
/// Hamiltonians is controllable.
pub fn lie_controllable(a: &PatternMatrix, s: &VertexSet) -> Result<(bool, usize)> {
    let l = lie_algebra(a, s, &Limits::default())?;
    Ok((l.dim == a.order() * a.order(), l.dim))
}

/// First pair `(k, j)` (1-based, `k ≠ j`) with `(A^{d(k,j)})_{kj} = 0`.
/// Only meaningful for connected patterns; unreachable pairs are skipped.
pub fn distance_power_gap(a: &PatternMatrix) -> Option<(usize, usize)> {
    let n = a.order();
    let dist: Vec<Vec<Option<usize>>> = (0..n).map(|k| a.pattern.distances_from(k)).collect();
    let mut power = RationalMatrix::identity(n).primitive_integer_entries();
    for d in 1..n {
        power = intmat::mul(n, &power, &a.integer);
        for k in 0..n {
            for j in 0..n {
                if k != j && dist[k][j] == Some(d) && power[k * n + j].is_zero() {
                    return Some((k + 1, j + 1));
                }
            }
        }
    }
    None
}

/// Whether every product `A^m e_k e_jᵀ A^l` lies in `L(A, Z)`.
pub fn p_set_within_lie_algebra(a: &PatternMatrix, s: &VertexSet) -> Result<bool> {
    let lie = lie_algebra(a, s, &Limits::default())?;
    if lie.basis.is_full() {
        return Ok(true);
    }
    let cols = a.integer_walk_columns(s);
    let rows = a.integer_walk_rows(s);
    Ok(cols.iter().all(|u| {
        rows.iter().all(|r| {
            let v: Vec<BigInt> = u
                .iter()
                .flat_map(|x| r.iter().map(move |y| x * y))
                .collect();
            lie.basis.contains_integer(&v)
        })
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum CheckKind {
    /// Connected same-sign pattern: `rank W̃ = n ⟺ L(A, Z) = gl(n)`.
    KalmanLieEquivalence,
    /// Connected same-sign pattern and `S` zero forcing: `L(A, Z) = gl(n)`.
    ZeroForcingImpliesLie,
    /// `dim span P(A, Z) = (rank W̃)²`.
    PSpanDimension,
    /// Connected same-sign pattern: `(A^{d(k,j)})_{kj} ≠ 0` for `k ≠ j`.
    DistancePowerEntry,
    /// Single projector, any symmetric `A`: `rank W̃ = n ⟺ L(A, {z}) = gl(n)`.
    SingleProjectorEquivalence,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckKind::KalmanLieEquivalence => "kalman <=> lie",
            CheckKind::ZeroForcingImpliesLie => "zero forcing => lie",
            CheckKind::PSpanDimension => "dim span P = rank^2",
            CheckKind::DistancePowerEntry => "(A^d(k,j))_kj != 0",
            CheckKind::SingleProjectorEquivalence => "single projector kalman <=> lie",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum CheckOutcome {
    Holds,
    Violated,
    HypothesisNotMet,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckOutcome::Holds => "holds",
            CheckOutcome::Violated => "THEOREM-VIOLATION",
            CheckOutcome::HypothesisNotMet => "hypothesis not met",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConsistencyEntry {
    pub check: CheckKind,
    pub outcome: CheckOutcome,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Hypotheses {
    pub connected: bool,
    pub same_sign: bool,
}

impl Hypotheses {
    pub fn hold(&self) -> bool {
        self.connected && self.same_sign
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ControllabilityReport {
    pub n: usize,
    pub control_set: VertexSet,
    pub walk_rank: usize,
    pub kalman_controllable: bool,
    pub p_span_dim: usize,
    pub lie_dim: usize,
    pub lie_controllable: bool,
    pub zfs_status: bool,
    pub hypotheses: Hypotheses,
    pub consistency: Vec<ConsistencyEntry>,
}

impl ControllabilityReport {
    pub fn violations(&self) -> impl Iterator<Item = &ConsistencyEntry> {
        self.consistency
            .iter()
            .filter(|c| c.outcome == CheckOutcome::Violated)
    }

    pub fn is_consistent(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn outcome(&self, check: CheckKind) -> Option<CheckOutcome> {
        self.consistency
            .iter()
            .find(|c| c.check == check)
            .map(|c| c.outcome)
    }
}

pub fn analyze(a: &PatternMatrix, s: &VertexSet) -> Result<ControllabilityReport> {
    analyze_with(a, s, &Limits::default())
}

/// Runs every test on `(A, S)` and cross-checks the results against each
/// other.
pub fn analyze_with(
    a: &PatternMatrix,
    s: &VertexSet,
    limits: &Limits,
) -> Result<ControllabilityReport> {
    let n = a.order();
    let (kalman, walk_rank) = kalman_controllable(a, s)?;
    let p_dim = p_span_dim(a, s)?;
    let lie = lie_algebra(a, s, limits)?;
    let lie_ok = lie.dim == n * n;
    let zfs = zero_forcing::is_zfs(&a.pattern, s)?;
    let hypotheses = Hypotheses {
        connected: a.pattern.is_connected(),
        same_sign: a.is_same_sign(),
    };
    let verdict = |ok: bool| {
        if ok {
            CheckOutcome::Holds
        } else {
            CheckOutcome::Violated
        }
    };
    let gated = |ok: bool| {
        if hypotheses.hold() {
            verdict(ok)
        } else {
            CheckOutcome::HypothesisNotMet
        }
    };
    let consistency = alloc::vec![
        ConsistencyEntry {
            check: CheckKind::KalmanLieEquivalence,
            outcome: gated(kalman == lie_ok),
        },
        ConsistencyEntry {
            check: CheckKind::ZeroForcingImpliesLie,
            outcome: gated(!zfs || lie_ok),
        },
        ConsistencyEntry {
            check: CheckKind::PSpanDimension,
            outcome: verdict(p_dim == walk_rank * walk_rank),
        },
    ];
    Ok(ControllabilityReport {
        n,
        control_set: s.clone(),
        walk_rank,
        kalman_controllable: kalman,
        p_span_dim: p_dim,
        lie_dim: lie.dim,
        lie_controllable: lie_ok,
        zfs_status: zfs,
        hypotheses,
        consistency,
    })
}
