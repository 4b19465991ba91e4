//! Sweeps that check the controllability theorems instance by instance, and
//! the fixed worked examples (path `P4`, the mixed-sign 4-cycle, two
//! disjoint `K2` blocks).
//!
//! A sweep never stops at the first failure: every violated check is
//! recorded with enough data (the matrix itself) to rerun it in isolation.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::control::{
    analyze_with, distance_power_gap, kalman_controllable, lie_algebra, walk_matrix, CheckKind,
    ControllabilityReport, Limits, MatrixKind, PatternMatrix,
};
use crate::error::{Error, Result};
use crate::graph::{EdgeProbability, Graph};
use crate::linalg::RationalMatrix;
use crate::vertex_set::VertexSet;
use crate::zero_forcing;

/// Largest order enumerated exhaustively; above it graphs are sampled.
pub const EXHAUSTIVE_ORDER: usize = 5;

/// Random connected graphs drawn per order above [`EXHAUSTIVE_ORDER`].
pub const DEFAULT_SAMPLED_GRAPHS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum SubsetPolicy {
    /// Every nonempty subset.
    All,
    Singletons,
    /// Every zero forcing subset.
    ZfsOnly,
    /// `k` uniformly drawn nonempty subsets per matrix.
    Random {
        k: usize,
        seed: u64,
    },
}

impl fmt::Display for SubsetPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubsetPolicy::All => f.write_str("all"),
            SubsetPolicy::Singletons => f.write_str("singletons"),
            SubsetPolicy::ZfsOnly => f.write_str("zfs"),
            SubsetPolicy::Random { k, seed } => write!(f, "random:{k}:{seed}"),
        }
    }
}

impl FromStr for SubsetPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "all" => Ok(SubsetPolicy::All),
            "singletons" => Ok(SubsetPolicy::Singletons),
            "zfs" => Ok(SubsetPolicy::ZfsOnly),
            other => {
                let mut parts = other.split(':');
                match (parts.next(), parts.next(), parts.next(), parts.next()) {
                    (Some("random"), Some(k), Some(seed), None) => {
                        match (k.parse(), seed.parse()) {
                            (Ok(k), Ok(seed)) => Ok(SubsetPolicy::Random { k, seed }),
                            _ => Err(Error::InvalidConfig("random subsets need random:K:SEED")),
                        }
                    }
                    _ => Err(Error::InvalidConfig(
                        "subset policy must be all, singletons, zfs or random:K:SEED",
                    )),
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SweepConfig {
    pub max_order: usize,
    pub matrix_kinds: Vec<MatrixKind>,
    pub subset_policy: SubsetPolicy,
    /// Seeds the graph samples above the exhaustive order.
    pub seed: u64,
    pub sampled_graphs: usize,
    pub limits: Limits,
}

impl SweepConfig {
    pub fn new(
        max_order: usize,
        matrix_kinds: Vec<MatrixKind>,
        subset_policy: SubsetPolicy,
    ) -> Self {
        Self {
            max_order,
            matrix_kinds,
            subset_policy,
            seed: 0,
            sampled_graphs: DEFAULT_SAMPLED_GRAPHS,
            limits: Limits::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_order == 0 {
            return Err(Error::InvalidConfig("max_order must be at least 1"));
        }
        if self.max_order > self.limits.lie_order_cap {
            return Err(Error::OrderCapExceeded {
                order: self.max_order,
                cap: self.limits.lie_order_cap,
            });
        }
        if self.matrix_kinds.is_empty() {
            return Err(Error::InvalidConfig("at least one matrix kind is required"));
        }
        if let SubsetPolicy::Random { k: 0, .. } = self.subset_policy {
            return Err(Error::InvalidConfig("random subset policy needs k >= 1"));
        }
        Ok(())
    }

    /// Exhaustive labeled connected graphs up to order 5, then seeded
    /// samples with edge probability 1/2.
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        let mut out = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        for n in 1..=self.max_order {
            if n <= EXHAUSTIVE_ORDER {
                out.extend(Graph::all_connected(n)?);
            } else {
                for _ in 0..self.sampled_graphs {
                    out.push(Graph::random_connected_with(
                        n,
                        EdgeProbability::HALF,
                        &mut rng,
                    )?);
                }
            }
        }
        Ok(out)
    }
}

/// One failed check, carrying the exact matrix so it can be rerun alone.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Violation {
    pub order: usize,
    /// Edges of `G(A)`, 1-based.
    pub edges: Vec<(usize, usize)>,
    pub kind: Option<MatrixKind>,
    pub matrix: RationalMatrix,
    /// `None` for checks that involve only the matrix.
    pub subset: Option<VertexSet>,
    pub check: CheckKind,
}

impl Violation {
    fn new(
        a: &PatternMatrix,
        kind: Option<MatrixKind>,
        subset: Option<&VertexSet>,
        check: CheckKind,
    ) -> Self {
        Self {
            order: a.order(),
            edges: a.pattern().edges(),
            kind,
            matrix: a.matrix().clone(),
            subset: subset.cloned(),
            check,
        }
    }

    pub fn pattern_matrix(&self) -> Result<PatternMatrix> {
        PatternMatrix::new(self.matrix.clone())
    }

    /// Reruns the full analysis on the recorded instance.
    pub fn reanalyze(&self, limits: &Limits) -> Result<ControllabilityReport> {
        let a = self.pattern_matrix()?;
        let s = self
            .subset
            .clone()
            .unwrap_or_else(|| VertexSet::full(a.order()));
        analyze_with(&a, &s, limits)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SweepOutcome {
    pub instances_checked: u64,
    /// Instances whose matrix is Lie-controllable (`L = gl(n)`).
    pub controllable: u64,
    /// Instances outside the connected same-sign hypotheses; their
    /// gated checks are recorded as not applicable.
    pub hypothesis_not_met: u64,
    pub violations: Vec<Violation>,
    pub passed: bool,
}

impl SweepOutcome {
    fn finish(mut self) -> Self {
        self.passed = self.violations.is_empty();
        self
    }
}

fn subsets_for<R: Rng>(g: &Graph, policy: SubsetPolicy, rng: &mut R) -> Result<Vec<VertexSet>> {
    let n = g.order();
    let all = || (1u64..1 << n).map(move |m| VertexSet::from_mask(n, m));
    Ok(match policy {
        SubsetPolicy::All => all().collect(),
        SubsetPolicy::Singletons => (0..n)
            .map(|i| VertexSet::from_indices(n, [i]))
            .collect::<Result<_>>()?,
        SubsetPolicy::ZfsOnly => all()
            .filter(|s| zero_forcing::is_zfs(g, s).unwrap_or(false))
            .collect(),
        SubsetPolicy::Random { k, .. } => (0..k)
            .map(|_| VertexSet::from_mask(n, rng.gen_range(1..1u64 << n)))
            .collect(),
    })
}

fn subset_rng(policy: SubsetPolicy) -> ChaCha8Rng {
    match policy {
        SubsetPolicy::Random { seed, .. } => ChaCha8Rng::seed_from_u64(seed),
        _ => ChaCha8Rng::seed_from_u64(0),
    }
}

/// Analyzes every (graph, matrix kind, subset) instance and records each
/// violated consistency check, plus the distance-power check per matrix.
pub fn sweep_equivalence(cfg: &SweepConfig) -> Result<SweepOutcome> {
    cfg.validate()?;
    let mut out = SweepOutcome::default();
    let mut rng = subset_rng(cfg.subset_policy);
    for g in cfg.graphs()? {
        for &kind in &cfg.matrix_kinds {
            let a = PatternMatrix::build(&g, kind);
            let hypotheses = a.pattern().is_connected() && a.is_same_sign();
            if hypotheses && distance_power_gap(&a).is_some() {
                out.violations.push(Violation::new(
                    &a,
                    Some(kind),
                    None,
                    CheckKind::DistancePowerEntry,
                ));
            }
            for s in subsets_for(&g, cfg.subset_policy, &mut rng)? {
                let report = analyze_with(&a, &s, &cfg.limits)?;
                out.instances_checked += 1;
                out.controllable += u64::from(report.lie_controllable);
                out.hypothesis_not_met += u64::from(!report.hypotheses.hold());
                for v in report.violations() {
                    out.violations
                        .push(Violation::new(&a, Some(kind), Some(&s), v.check));
                }
            }
        }
    }
    Ok(out.finish())
}

/// For each zero forcing set (all of them under [`SubsetPolicy::All`],
/// otherwise the inclusion-minimal sets obtained by shrinking the policy's
/// zero forcing candidates) asserts `L(A, Z) = gl(n)`.
pub fn sweep_zfs_implication(cfg: &SweepConfig) -> Result<SweepOutcome> {
    cfg.validate()?;
    let mut out = SweepOutcome::default();
    let mut rng = subset_rng(cfg.subset_policy);
    for g in cfg.graphs()? {
        for &kind in &cfg.matrix_kinds {
            let a = PatternMatrix::build(&g, kind);
            let hypotheses = a.pattern().is_connected() && a.is_same_sign();
            let mut sets = Vec::new();
            for s in subsets_for(&g, cfg.subset_policy, &mut rng)? {
                if zero_forcing::is_zfs(&g, &s)? {
                    sets.push(if cfg.subset_policy == SubsetPolicy::All {
                        s
                    } else {
                        zero_forcing::minimalize(&g, &s)?
                    });
                }
            }
            sets.sort();
            sets.dedup();
            for s in sets {
                let lie = lie_algebra(&a, &s, &cfg.limits)?;
                let full = lie.dim == a.order() * a.order();
                out.instances_checked += 1;
                out.controllable += u64::from(full);
                if !hypotheses {
                    out.hypothesis_not_met += 1;
                } else if !full {
                    out.violations.push(Violation::new(
                        &a,
                        Some(kind),
                        Some(&s),
                        CheckKind::ZeroForcingImpliesLie,
                    ));
                }
            }
        }
    }
    Ok(out.finish())
}

/// Seeded symmetric matrix of order `n` with mixed signs: each entry on or
/// above the diagonal is zero with probability 1/2, otherwise `p/q` with
/// `p ∈ ±1..=9`, `q ∈ 1..=4`.
pub fn random_symmetric<R: Rng>(n: usize, rng: &mut R) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            if rng.gen_range(0..2) == 0 {
                continue;
            }
            let mut p: i64 = rng.gen_range(1..=9);
            if rng.gen_range(0..2) == 0 {
                p = -p;
            }
            let q: i64 = rng.gen_range(1..=4);
            let x = BigRational::new(p.into(), q.into());
            m.set(i, j, x.clone());
            m.set(j, i, x);
        }
    }
    m
}

/// Single control vector `z = e_j` and arbitrary symmetric `A`:
/// `rank W̃(A, {z}) = n ⟺ dim L(A, {z}) = n²`, over `count` seeded draws
/// with orders in `1..=max_order`.
pub fn sweep_single_projector(count: usize, max_order: usize, seed: u64) -> Result<SweepOutcome> {
    if max_order == 0 {
        return Err(Error::InvalidConfig("max_order must be at least 1"));
    }
    let limits = Limits::default();
    if max_order > limits.lie_order_cap {
        return Err(Error::OrderCapExceeded {
            order: max_order,
            cap: limits.lie_order_cap,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SweepOutcome::default();
    for _ in 0..count {
        let n = rng.gen_range(1..=max_order);
        let a = PatternMatrix::new(random_symmetric(n, &mut rng))?;
        let s = VertexSet::from_indices(n, [rng.gen_range(0..n)])?;
        let (kalman, _) = kalman_controllable(&a, &s)?;
        let lie = lie_algebra(&a, &s, &limits)?;
        let full = lie.dim == n * n;
        out.instances_checked += 1;
        out.controllable += u64::from(full);
        if kalman != full {
            out.violations.push(Violation::new(
                &a,
                None,
                Some(&s),
                CheckKind::SingleProjectorEquivalence,
            ));
        }
    }
    Ok(out.finish())
}

/// One worked example: what is expected, what was computed, and whether
/// they agree.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ExampleRow {
    pub id: String,
    pub expected: String,
    pub computed: String,
    pub matches: bool,
}

/// Off-diagonal-sign-mixed matrix on the 4-cycle 1-2-3-4-1.
pub fn mixed_sign_cycle() -> RationalMatrix {
    RationalMatrix::from_i64(4, 4, &[0, 1, 0, 1, 1, 0, -1, 0, 0, -1, 0, 1, 1, 0, 1, 0])
        .expect("4x4 literal")
}

/// `diag(A1, A2)` with `A1 = A2 = [0 1; 1 0]`.
pub fn two_k2_blocks() -> RationalMatrix {
    RationalMatrix::from_i64(4, 4, &[0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0])
        .expect("4x4 literal")
}

pub const P4_WALK_E2: [[i64; 4]; 4] = [[0, 1, 0, 2], [1, 0, 2, 0], [0, 1, 0, 3], [0, 0, 1, 0]];

/// Runs the three worked examples.
pub fn reference_examples() -> Result<Vec<ExampleRow>> {
    Ok(alloc::vec![
        path_example()?,
        mixed_sign_example()?,
        block_example()?
    ])
}

fn render_matrix(m: &RationalMatrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let cells: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

fn path_example() -> Result<ExampleRow> {
    let g = Graph::generate(crate::graph::Family::Path, 4)?;
    let a = PatternMatrix::build(&g, MatrixKind::Adjacency);
    let s = VertexSet::from_labels(4, [2])?;
    let w = walk_matrix(&a, &s)?;
    let expected_w = RationalMatrix::from_i64(4, 4, &P4_WALK_E2.concat())?;
    let (_, rank) = kalman_controllable(&a, &s)?;
    let lie = lie_algebra(&a, &s, &Limits::default())?;
    let zfs = zero_forcing::is_zfs(&g, &s)?;
    let expected = format!(
        "walk={} rank=4 lie_dim=16 zfs=false",
        render_matrix(&expected_w)
    );
    let computed = format!(
        "walk={} rank={rank} lie_dim={} zfs={zfs}",
        render_matrix(&w),
        lie.dim
    );
    Ok(ExampleRow {
        id: "p4-e2".into(),
        matches: expected == computed,
        expected,
        computed,
    })
}

fn mixed_sign_example() -> Result<ExampleRow> {
    let a = PatternMatrix::new(mixed_sign_cycle())?;
    let s = VertexSet::from_labels(4, [1, 3])?;
    let (kalman, rank) = kalman_controllable(&a, &s)?;
    let lie = lie_algebra(&a, &s, &Limits::default())?;
    let lie_ok = lie.dim == 16;
    Ok(ExampleRow {
        id: "mixed-sign-c4-e1-e3".into(),
        expected: "rank=4 lie_dim<=8 kalman=true lie=false same_sign=false".into(),
        computed: format!(
            "rank={rank} lie_dim={} kalman={kalman} lie={lie_ok} same_sign={}",
            lie.dim,
            a.is_same_sign()
        ),
        matches: rank == 4 && lie.dim <= 8 && kalman && !lie_ok && !a.is_same_sign(),
    })
}

fn block_example() -> Result<ExampleRow> {
    let block = PatternMatrix::new(RationalMatrix::from_i64(2, 2, &[0, 1, 1, 0])?)?;
    let (_, block1_rank) = kalman_controllable(&block, &VertexSet::from_labels(2, [1])?)?;
    let (_, block2_rank) = kalman_controllable(&block, &VertexSet::from_labels(2, [1])?)?;

    let a = PatternMatrix::new(two_k2_blocks())?;
    let s = VertexSet::from_labels(4, [1, 3])?;
    let (_, rank) = kalman_controllable(&a, &s)?;
    let lie = lie_algebra(&a, &s, &Limits::default())?;
    let block_diagonal = lie
        .basis
        .matrices()
        .iter()
        .all(|m| (0..4).all(|i| (0..4).all(|j| (i < 2) == (j < 2) || m.get(i, j).is_zero())));
    let lie_ok = lie.dim == 16;
    Ok(ExampleRow {
        id: "two-k2-blocks-e1-e3".into(),
        expected: "block_ranks=2,2 rank=4 lie_dim<=8 lie=false block_diagonal=true".into(),
        computed: format!(
            "block_ranks={block1_rank},{block2_rank} rank={rank} lie_dim={} lie={lie_ok} block_diagonal={block_diagonal}",
            lie.dim
        ),
        matches: block1_rank == 2
            && block2_rank == 2
            && rank == 4
            && lie.dim <= 8
            && !lie_ok
            && block_diagonal,
    })
}
