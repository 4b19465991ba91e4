use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A subset of the vertices of a graph of fixed order.
///
/// Members are kept sorted and deduplicated as 0-based indices; labels
/// (1-based) are what gets parsed and printed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    order: usize,
    members: Vec<usize>,
}

impl VertexSet {
    pub fn empty(order: usize) -> Self {
        Self {
            order,
            members: Vec::new(),
        }
    }

    pub fn full(order: usize) -> Self {
        Self {
            order,
            members: (0..order).collect(),
        }
    }

    /// Builds a set from 1-based labels. Duplicates collapse.
    pub fn from_labels<I>(order: usize, labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut members = Vec::new();
        for label in labels {
            if label == 0 || label > order {
                return Err(Error::InvalidVertex { label, order });
            }
            members.push(label - 1);
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self { order, members })
    }

    /// Builds a set from 0-based indices. Duplicates collapse.
    pub fn from_indices<I>(order: usize, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        Self::from_labels(order, indices.into_iter().map(|i| i + 1))
    }

    /// Decodes bit `i` of `mask` as membership of index `i`.
    pub fn from_mask(order: usize, mask: u64) -> Self {
        debug_assert!(order <= 64);
        Self {
            order,
            members: (0..order).filter(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub(crate) fn from_flags(flags: &[bool]) -> Self {
        Self {
            order: flags.len(),
            members: flags
                .iter()
                .enumerate()
                .filter_map(|(i, &b)| b.then_some(i))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.order
    }

    /// Sorted 0-based indices.
    pub fn indices(&self) -> &[usize] {
        &self.members
    }

    /// Sorted 1-based labels.
    pub fn labels(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().map(|i| i + 1)
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.binary_search(&index).is_ok()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&i| other.contains(i))
    }

    pub(crate) fn flags(&self) -> Vec<bool> {
        let mut flags = alloc::vec![false; self.order];
        for &i in &self.members {
            flags[i] = true;
        }
        flags
    }

    pub(crate) fn check_order(&self, order: usize) -> Result<()> {
        if self.order == order {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                expected: order,
                found: self.order,
            })
        }
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, label) in self.labels().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{label}")?;
        }
        f.write_str("}")
    }
}

#[cfg(feature = "serde")]
mod serde_impl {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Repr {
        order: usize,
        labels: Vec<usize>,
    }

    impl Serialize for VertexSet {
        fn serialize<S: Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
            Repr {
                order: self.order,
                labels: self.labels().collect(),
            }
            .serialize(s)
        }
    }

    impl<'de> Deserialize<'de> for VertexSet {
        fn deserialize<D: Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
            let repr = Repr::deserialize(d)?;
            VertexSet::from_labels(repr.order, repr.labels).map_err(de::Error::custom)
        }
    }
}
