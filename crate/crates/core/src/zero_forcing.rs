//! Zero forcing: a black vertex with exactly one white neighbor forces that
//! neighbor black. A set is zero forcing when repeated forcing colors the
//! whole graph.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Order cap for the exhaustive minimum search.
pub const DEFAULT_MIN_ZFS_ORDER_CAP: usize = 16;

/// One force, as 1-based labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Forcing {
    pub forcer: usize,
    pub forced: usize,
}

/// The forces applied during a closure, in order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ForceChronicle {
    pub steps: Vec<Forcing>,
}

impl ForceChronicle {
    /// Replays the chronicle from `start`, checking that every forcer is
    /// black with the forced vertex as its only white neighbor. Returns the
    /// final black set, or `None` at the first illegal step.
    pub fn replay(&self, g: &Graph, start: &VertexSet) -> Option<VertexSet> {
        let n = g.order();
        if start.order() != n {
            return None;
        }
        let mut black = start.flags();
        for step in &self.steps {
            if !(1..=n).contains(&step.forcer) || !(1..=n).contains(&step.forced) {
                return None;
            }
            let (u, w) = (step.forcer - 1, step.forced - 1);
            if !black[u] || black[w] || !g.has_edge(u, w) {
                return None;
            }
            if g.neighbors(u).iter().filter(|&&x| !black[x]).count() != 1 {
                return None;
            }
            black[w] = true;
        }
        Some(VertexSet::from_flags(&black))
    }
}

/// Forces from `start` until nothing changes.
///
/// Among the forces available at each step the one with the smallest forcer
/// is applied, then the smallest forced vertex (a forcer has one candidate
/// anyway). The final set does not depend on this order; the chronicle does.
pub fn closure(g: &Graph, start: &VertexSet) -> Result<(VertexSet, ForceChronicle)> {
    start.check_order(g.order())?;
    let mut black = start.flags();
    let mut chronicle = ForceChronicle::default();
    'outer: loop {
        for u in 0..g.order() {
            if !black[u] {
                continue;
            }
            let mut whites = g.neighbors(u).iter().filter(|&&w| !black[w]);
            if let (Some(&w), None) = (whites.next(), whites.next()) {
                black[w] = true;
                chronicle.steps.push(Forcing {
                    forcer: u + 1,
                    forced: w + 1,
                });
                continue 'outer;
            }
        }
        break;
    }
    Ok((VertexSet::from_flags(&black), chronicle))
}

pub fn is_zfs(g: &Graph, s: &VertexSet) -> Result<bool> {
    s.check_order(g.order())?;
    Ok(closed_black_count(g, s.indices()) == g.order())
}

/// Closure size without recording the chronicle.
fn closed_black_count(g: &Graph, start: &[usize]) -> usize {
    let n = g.order();
    let mut black = alloc::vec![false; n];
    for &i in start {
        black[i] = true;
    }
    let mut count = start.len();
    let mut changed = true;
    while changed && count < n {
        changed = false;
        for u in 0..n {
            if !black[u] {
                continue;
            }
            let mut whites = g.neighbors(u).iter().filter(|&&w| !black[w]);
            if let (Some(&w), None) = (whites.next(), whites.next()) {
                black[w] = true;
                count += 1;
                changed = true;
            }
        }
    }
    count
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MinimumZfs {
    pub number: usize,
    /// Lexicographically least zero forcing set of size `number`.
    pub witness: VertexSet,
}

/// Exact zero forcing number, capped at the default order.
pub fn min_zfs(g: &Graph) -> Result<MinimumZfs> {
    min_zfs_with_cap(g, DEFAULT_MIN_ZFS_ORDER_CAP)
}

/// Exact zero forcing number by size-ordered exhaustive search.
///
/// Sizes below `max(1, δ(G))` cannot work and are skipped. Candidates of
/// each size are visited in lexicographic order, so the first success is
/// the least witness.
pub fn min_zfs_with_cap(g: &Graph, cap: usize) -> Result<MinimumZfs> {
    let n = g.order();
    if n > cap {
        return Err(Error::OrderCapExceeded { order: n, cap });
    }
    let lower = g.min_degree().max(1);
    for k in lower..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            if closed_black_count(g, &combo) == n {
                return Ok(MinimumZfs {
                    number: k,
                    witness: VertexSet::from_indices(n, combo)?,
                });
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set is always zero forcing")
}

/// Advances `combo` to the next k-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
        return false;
    };
    combo[i] += 1;
    for j in i + 1..k {
        combo[j] = combo[j - 1] + 1;
    }
    true
}

/// Shrinks a zero forcing set to one that is minimal by inclusion, trying
/// removals in ascending index order.
pub fn minimalize(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    s.check_order(g.order())?;
    let mut members = s.indices().to_vec();
    let mut i = 0;
    while i < members.len() {
        let mut trial = members.clone();
        trial.remove(i);
        if !trial.is_empty() && closed_black_count(g, &trial) == g.order() {
            members = trial;
        } else {
            i += 1;
        }
    }
    VertexSet::from_indices(g.order(), members)
}
