use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partcomb::Partition;

/// A set partition of `{1, …, n}` given by its arc diagram.
///
/// Arcs `i⌢j` have `i < j`; no two arcs share a left endpoint and no two
/// share a right endpoint, so the blocks are the connected components.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSetPartition", into = "RawSetPartition")]
pub struct SetPartition {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawSetPartition {
    n: usize,
    arcs: Vec<[usize; 2]>,
}

impl TryFrom<RawSetPartition> for SetPartition {
    type Error = Error;
    fn try_from(r: RawSetPartition) -> Result<Self> {
        SetPartition::new(r.n, r.arcs.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<SetPartition> for RawSetPartition {
    fn from(s: SetPartition) -> Self {
        RawSetPartition { n: s.n, arcs: s.arcs.into_iter().map(|(a, b)| [a, b]).collect() }
    }
}

impl SetPartition {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let arcs: BTreeSet<(usize, usize)> = arcs.into_iter().collect();
        let mut lefts = BTreeSet::new();
        let mut rights = BTreeSet::new();
        for &(i, j) in &arcs {
            if !(1 <= i && i < j && j <= n) {
                return Err(Error::Invalid(format!("arc {i}⌢{j} is not an arc on {n} nodes")));
            }
            if !lefts.insert(i) || !rights.insert(j) {
                return Err(Error::Invalid(format!("arc {i}⌢{j} shares an endpoint side")));
            }
        }
        Ok(Self { n, arcs })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, arcs: BTreeSet::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn num_arcs(&self) -> usize {
        self.arcs.len()
    }

    pub fn contains_arc(&self, i: usize, j: usize) -> bool {
        self.arcs.contains(&(i, j))
    }

    /// The arc leaving `i` to the right, if any.
    pub fn right_neighbor(&self, i: usize) -> Option<usize> {
        self.arcs.range((i, 0)..(i + 1, 0)).next().map(|&(_, j)| j)
    }

    /// The arc entering `j` from the left, if any.
    pub fn left_neighbor(&self, j: usize) -> Option<usize> {
        self.arcs.iter().find(|&&(_, b)| b == j).map(|&(a, _)| a)
    }

    /// No pair `i⌢l`, `j⌢k` with `i < j < k < l`.
    pub fn is_nonnesting(&self) -> bool {
        !self
            .arcs
            .iter()
            .any(|&(i, l)| self.arcs.iter().any(|&(j, k)| i < j && k < l))
    }

    /// Blocks in order of their smallest element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        (1..=self.n)
            .filter(|&i| self.left_neighbor(i).is_none())
            .map(|start| {
                let mut block = vec![start];
                while let Some(next) = self.right_neighbor(*block.last().unwrap()) {
                    block.push(next);
                }
                block
            })
            .collect()
    }

    pub fn block_sizes(&self) -> Partition {
        Partition::from_unsorted(self.blocks().iter().map(|b| b.len()).collect())
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<String> = self.arcs.iter().map(|(i, j)| format!("[{i},{j}]")).collect();
        write!(f, "{{{}}}", arcs.join(","))
    }
}

/// All set partitions of `{1, …, n}`.
pub fn set_partitions(n: usize) -> Vec<SetPartition> {
    // restricted growth strings
    fn rec(i: usize, n: usize, labels: &mut Vec<usize>, max: usize, out: &mut Vec<SetPartition>) {
        if i == n {
            let mut arcs = Vec::new();
            for b in 0..max {
                let members: Vec<usize> = (0..n).filter(|&k| labels[k] == b).map(|k| k + 1).collect();
                arcs.extend(members.windows(2).map(|w| (w[0], w[1])));
            }
            out.push(SetPartition::new(n, arcs).unwrap());
            return;
        }
        for b in 0..=max {
            labels.push(b);
            rec(i + 1, n, labels, max.max(b + 1), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), 0, &mut out);
    out.sort();
    out
}

pub fn nonnesting_set_partitions(n: usize) -> Vec<SetPartition> {
    set_partitions(n).into_iter().filter(|s| s.is_nonnesting()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let e = SetPartition::new(8, [(1, 4), (3, 6), (6, 8)]).unwrap();
        assert!(e.is_nonnesting());
        assert_eq!(e.block_sizes(), Partition::new(vec![3, 2, 1, 1, 1]).unwrap());
        assert_eq!(e.blocks(), vec![vec![1, 4], vec![2], vec![3, 6, 8], vec![5], vec![7]]);
        let nested = SetPartition::new(4, [(1, 4), (2, 3)]).unwrap();
        assert!(!nested.is_nonnesting());
        assert!(SetPartition::empty(4).is_nonnesting());
        assert_eq!(SetPartition::empty(4).block_sizes(), Partition::column(4));
        assert!(SetPartition::new(8, [(1, 4), (1, 3)]).is_err());
    }

    #[test]
    fn counts() {
        // Bell and Catalan numbers
        let bell: Vec<usize> = (1..=6).map(|n| set_partitions(n).len()).collect();
        assert_eq!(bell, vec![1, 2, 5, 15, 52, 203]);
        let cat: Vec<usize> = (1..=6).map(|n| nonnesting_set_partitions(n).len()).collect();
        assert_eq!(cat, vec![1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn json_shape() {
        let e = SetPartition::new(8, [(1, 4), (3, 6), (6, 8)]).unwrap();
        assert_eq!(serde_json::to_string(&e).unwrap(), r#"{"n":8,"arcs":[[1,4],[3,6],[6,8]]}"#);
        let back: SetPartition = serde_json::from_str(r#"{"n":8,"arcs":[[1,4],[3,6],[6,8]]}"#).unwrap();
        assert_eq!(back, e);
        assert!(serde_json::from_str::<SetPartition>(r#"{"n":3,"arcs":[[1,4]]}"#).is_err());
    }
}
