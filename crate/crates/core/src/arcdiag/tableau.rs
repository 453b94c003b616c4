use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::setpart::SetPartition;
use crate::error::{Error, Result};
use crate::partcomb::{Composition, Partition};

/// `ctr(j)` for `j = 1..=m` (1-based): odd `j` go in order to the back, even `j`
/// in reverse order to the front.
pub fn ctr_permutation(m: usize) -> Vec<usize> {
    (1..=m)
        .map(|j| if j % 2 == 1 { m / 2 + j.div_ceil(2) } else { m / 2 + 1 - j / 2 })
        .collect()
}

/// The column lengths of `λ` rearranged by `ctr`.
pub fn ctr_composition(lambda: &Partition) -> Result<Composition> {
    if lambda.is_empty() {
        return Err(Error::InvalidPartition("empty partition".into()));
    }
    let conj = lambda.conjugate();
    let perm = ctr_permutation(lambda.part(0));
    let mut out = vec![0; perm.len()];
    for (j, &p) in perm.iter().enumerate() {
        out[p - 1] = conj.part(j);
    }
    Composition::new(out)
}

/// A filling of the top-justified diagram with column lengths `alpha`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnTableau {
    alpha: Composition,
    /// `columns[c][r]` is the entry in row `r` of column `c`.
    columns: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawColumnTableau {
    alpha: Composition,
    rows: Vec<Vec<usize>>,
}

impl Serialize for ColumnTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawColumnTableau { alpha: self.alpha.clone(), rows: self.rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ColumnTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawColumnTableau::deserialize(d)?;
        ColumnTableau::from_rows(raw.alpha, &raw.rows).map_err(serde::de::Error::custom)
    }
}

impl ColumnTableau {
    pub fn from_columns(alpha: Composition, columns: Vec<Vec<usize>>) -> Result<Self> {
        if columns.len() != alpha.len() || columns.iter().zip(alpha.parts()).any(|(c, &a)| c.len() != a) {
            return Err(Error::Invalid(format!("columns do not have lengths {alpha}")));
        }
        let n = alpha.size();
        let mut seen: Vec<usize> = columns.iter().flatten().copied().collect();
        seen.sort_unstable();
        if seen != (1..=n).collect::<Vec<_>>() {
            return Err(Error::Invalid(format!("entries are not a permutation of 1..={n}")));
        }
        Ok(Self { alpha, columns })
    }

    /// Row `r` lists the entries of the columns longer than `r`, left to right.
    pub fn from_rows(alpha: Composition, rows: &[Vec<usize>]) -> Result<Self> {
        let mut columns: Vec<Vec<usize>> = alpha.parts().iter().map(|&a| Vec::with_capacity(a)).collect();
        for (r, row) in rows.iter().enumerate() {
            let cols: Vec<usize> = (0..alpha.len()).filter(|&c| alpha.parts()[c] > r).collect();
            if cols.len() != row.len() {
                return Err(Error::Invalid(format!("row {r} should have {} entries", cols.len())));
            }
            for (&c, &v) in cols.iter().zip(row) {
                columns[c].push(v);
            }
        }
        Self::from_columns(alpha, columns)
    }

    pub fn alpha(&self) -> &Composition {
        &self.alpha
    }

    pub fn size(&self) -> usize {
        self.alpha.size()
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let depth = self.alpha.parts().iter().copied().max().unwrap_or(0);
        (0..depth)
            .map(|r| self.columns.iter().filter_map(|col| col.get(r).copied()).collect())
            .collect()
    }

    /// `(row, column)` of every entry, indexed by entry.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(usize::MAX, usize::MAX); self.size() + 1];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, &v) in col.iter().enumerate() {
                pos[v] = (r, c);
            }
        }
        pos
    }

    /// Rows increase left to right.
    pub fn rows_increase(&self) -> bool {
        self.rows().iter().all(|row| row.windows(2).all(|w| w[0] < w[1]))
    }

    /// Rows of equal length are ordered by first entry.
    pub fn equal_rows_ordered(&self) -> bool {
        let rows = self.rows();
        rows.iter().enumerate().all(|(i, a)| {
            rows[i + 1..].iter().all(|b| a.len() != b.len() || a[0] < b[0])
        })
    }

    /// Membership in the set of `α`-column tableaux.
    pub fn is_valid(&self) -> bool {
        self.rows_increase() && self.equal_rows_ordered()
    }

    /// Arcs between consecutive entries of each row.
    pub fn sp(&self) -> SetPartition {
        let arcs = self
            .rows()
            .into_iter()
            .flat_map(|row| row.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))).collect::<Vec<_>>())
            .collect::<Vec<_>>();
        SetPartition::new(self.size(), arcs).expect("rows are disjoint paths")
    }
}

/// `C_λ`: number the cells of the centred diagram down consecutive half-columns,
/// then shift rows onto the diagram whose columns are `ctr` applied to those of `λ`.
pub fn build_c_tableau(lambda: &Partition) -> Result<ColumnTableau> {
    let alpha = ctr_composition(lambda)?;
    let m = lambda.part(0);
    let mut cells: Vec<(usize, usize, usize)> = lambda
        .cells()
        .map(|(r, c)| (2 * c + m - lambda.part(r), r, c))
        .collect();
    cells.sort_unstable();
    let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|&l| vec![0; l]).collect();
    for (k, &(_, r, c)) in cells.iter().enumerate() {
        rows[r][c] = k + 1;
    }
    ColumnTableau::from_rows(alpha, &rows)
}

/// The arc diagram joining row-adjacent entries of `C_λ`.
pub fn ggg(lambda: &Partition) -> Result<SetPartition> {
    Ok(build_c_tableau(lambda)?.sp())
}

/// All `α`-column tableaux, optionally only those with non-nesting `sp`.
pub fn enumerate_column_tableaux(alpha: &Composition, nonnesting_only: bool) -> Vec<ColumnTableau> {
    let depth = alpha.parts().iter().copied().max().unwrap_or(0);
    let lens: Vec<usize> = (0..depth).map(|r| alpha.parts().iter().filter(|&&a| a > r).count()).collect();
    let n = alpha.size();
    let mut out = Vec::new();
    fn rec(
        r: usize,
        lens: &[usize],
        free: &mut Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        alpha: &Composition,
        nonnesting_only: bool,
        out: &mut Vec<ColumnTableau>,
    ) {
        if r == lens.len() {
            let t = ColumnTableau::from_rows(alpha.clone(), rows).expect("shape matches");
            if !nonnesting_only || t.sp().is_nonnesting() {
                out.push(t);
            }
            return;
        }
        let min_first = if r > 0 && lens[r] == lens[r - 1] { rows[r - 1][0] } else { 0 };
        for subset in subsets(free, lens[r]) {
            if subset[0] <= min_first {
                continue;
            }
            let kept: Vec<usize> = free.iter().copied().filter(|x| !subset.contains(x)).collect();
            let saved = std::mem::replace(free, kept);
            rows.push(subset);
            rec(r + 1, lens, free, rows, alpha, nonnesting_only, out);
            rows.pop();
            *free = saved;
        }
    }
    let mut free: Vec<usize> = (1..=n).collect();
    rec(0, &lens, &mut free, &mut Vec::new(), alpha, nonnesting_only, &mut out);
    out.sort();
    out
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in subsets(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

pub type PositionSet = BTreeSet<(usize, usize)>;

/// The position sets `A` and `B` attached to a tableau with non-nesting `sp`.
///
/// `A`: pairs `(j, k)` with `j` strictly West of `k` lying under an arc `i⌢l`
/// that shares exactly one endpoint with `{j, k}`.
/// `B`: pairs `(i, j)` with `i⌢k` an arc, `i < j < k`, and `i` strictly North of `j`.
pub fn ab_sets(t: &ColumnTableau) -> Result<(PositionSet, PositionSet)> {
    let sp = t.sp();
    if !sp.is_nonnesting() {
        return Err(Error::Nesting);
    }
    let pos = t.positions();
    let west = |a: usize, b: usize| pos[a].1 < pos[b].1;
    let north = |a: usize, b: usize| pos[a].0 < pos[b].0;
    let mut a_set = BTreeSet::new();
    let mut b_set = BTreeSet::new();
    for (i, l) in sp.arcs() {
        for j in i..=l {
            for k in j + 1..=l {
                let shared = [i, l].iter().filter(|x| **x == j || **x == k).count();
                if shared == 1 && west(j, k) {
                    a_set.insert((j, k));
                }
            }
        }
        for j in i + 1..l {
            if north(i, j) {
                b_set.insert((i, j));
            }
        }
    }
    Ok((a_set, b_set))
}

/// `τ: B → A`, sending `(i, j)` to itself when `i` is West of `j` and to `(j, k)`
/// otherwise, where `i⌢k` is the arc at `i`.
pub fn tau(t: &ColumnTableau) -> Result<BTreeMap<(usize, usize), (usize, usize)>> {
    let (_, b_set) = ab_sets(t)?;
    let sp = t.sp();
    let pos = t.positions();
    let mut map = BTreeMap::new();
    for &(i, j) in &b_set {
        let k = sp.right_neighbor(i).expect("B pairs sit under an arc at i");
        let image = if pos[i].1 < pos[j].1 {
            (i, j)
        } else if pos[j].1 < pos[k].1 {
            (j, k)
        } else {
            return Err(Error::Invalid(format!("no image for ({i},{j})")));
        };
        map.insert((i, j), image);
    }
    Ok(map)
}

/// `τ^{-1}: A → B` by the three-case analysis on the arcs meeting `{j, k}`.
pub fn tau_inverse(t: &ColumnTableau) -> Result<BTreeMap<(usize, usize), (usize, usize)>> {
    let (a_set, _) = ab_sets(t)?;
    let sp = t.sp();
    let pos = t.positions();
    let mut map = BTreeMap::new();
    for &(j, k) in &a_set {
        let into_k = sp.left_neighbor(k).filter(|&i| i < j);
        let out_of_j = sp.right_neighbor(j).filter(|&l| l > k);
        let pre = match (into_k, out_of_j) {
            (Some(i), None) => (i, j),
            (None, Some(_)) => (j, k),
            (Some(i), Some(_)) => {
                if pos[i].0 < pos[j].0 {
                    (i, j)
                } else {
                    (j, k)
                }
            }
            (None, None) => return Err(Error::Invalid(format!("({j},{k}) lies under no arc"))),
        };
        map.insert((j, k), pre);
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partcomb::{compositions, partitions};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn c(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn ctr_examples() {
        assert_eq!(ctr_composition(&p(&[4, 3, 2, 2, 1])).unwrap(), c(&[1, 4, 5, 2]));
        assert_eq!(ctr_composition(&p(&[1])).unwrap(), c(&[1]));
        assert_eq!(ctr_composition(&p(&[3, 1])).unwrap(), c(&[1, 2, 1]));
        for m in 1..=9 {
            let mut v = ctr_permutation(m);
            v.sort_unstable();
            assert_eq!(v, (1..=m).collect::<Vec<_>>());
        }
    }

    #[test]
    fn ctr_even_width_closed_form() {
        // for even λ_1 the floor/ceiling expressions agree with the prose rule
        for m in (2..=10).step_by(2) {
            let closed: Vec<usize> = (1..=m)
                .map(|j| if j % 2 == 1 { (m + 2) / 2 + (j - 1) / 2 } else { (m + 2) / 2 - j / 2 })
                .collect();
            assert_eq!(ctr_permutation(m), closed);
        }
    }

    #[test]
    fn running_example() {
        let la = p(&[4, 3, 2, 2, 1]);
        let t = build_c_tableau(&la).unwrap();
        assert_eq!(
            t.rows(),
            vec![vec![1, 3, 8, 12], vec![2, 6, 11], vec![4, 9], vec![5, 10], vec![7]]
        );
        let arcs: Vec<(usize, usize)> = ggg(&la).unwrap().arcs().collect();
        let mut expect = vec![(1, 3), (3, 8), (8, 12), (2, 6), (6, 11), (4, 9), (5, 10)];
        expect.sort();
        assert_eq!(arcs, expect);
        assert_eq!(ggg(&la).unwrap().block_sizes(), la);
        for n in 1..=6 {
            let row: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
            assert_eq!(ggg(&Partition::row(n)).unwrap(), SetPartition::new(n, row).unwrap());
        }
    }

    #[test]
    fn c_tableau_properties() {
        for n in 1..=10 {
            for la in partitions(n) {
                let t = build_c_tableau(&la).unwrap();
                let g = t.sp();
                assert!(g.is_nonnesting(), "{la}");
                assert_eq!(g.block_sizes(), la);
                assert_eq!(*t.alpha(), ctr_composition(&la).unwrap());
                assert!(t.is_valid());
            }
        }
    }

    #[test]
    fn displayed_judgments() {
        let alpha = c(&[1, 5, 2, 4]);
        let first = ColumnTableau::from_rows(
            alpha.clone(),
            &[vec![2, 5, 8, 11], vec![1, 4, 7], vec![3, 10], vec![6, 9], vec![12]],
        )
        .unwrap();
        assert!(first.is_valid());
        let arcs: BTreeSet<(usize, usize)> = first.sp().arcs().collect();
        let expect: BTreeSet<(usize, usize)> =
            [(2, 5), (5, 8), (8, 11), (1, 4), (4, 7), (6, 9), (3, 10)].into_iter().collect();
        assert_eq!(arcs, expect);
        assert!(!first.sp().is_nonnesting());
        let second = ColumnTableau::from_rows(
            alpha.clone(),
            &[vec![2, 5, 8, 11], vec![1, 4, 7], vec![6, 9], vec![3, 10], vec![12]],
        )
        .unwrap();
        assert!(!second.is_valid());
        let third = ColumnTableau::from_rows(
            alpha,
            &[vec![1, 2, 7, 11], vec![3, 8, 12], vec![4, 9], vec![5, 10], vec![6]],
        )
        .unwrap();
        assert!(third.is_valid());
        let arcs: BTreeSet<(usize, usize)> = third.sp().arcs().collect();
        let expect: BTreeSet<(usize, usize)> =
            [(1, 2), (2, 7), (7, 11), (3, 8), (8, 12), (4, 9), (5, 10)].into_iter().collect();
        assert_eq!(arcs, expect);
        assert!(third.sp().is_nonnesting());
    }

    #[test]
    fn enumeration() {
        for n in 1..=6 {
            assert_eq!(enumerate_column_tableaux(&c(&[n]), false).len(), 1);
            let t = &enumerate_column_tableaux(&Composition::new(vec![1; n]).unwrap(), false);
            assert_eq!(t.len(), 1);
            assert_eq!(t[0].sp().num_arcs(), n - 1);
        }
        for n in 1..=5 {
            for alpha in compositions(n) {
                let all = enumerate_column_tableaux(&alpha, false);
                for t in &all {
                    assert!(t.is_valid());
                    let mut rows: Vec<usize> = t.rows().iter().map(|r| r.len()).collect();
                    rows.sort_unstable_by(|a, b| b.cmp(a));
                    assert_eq!(t.sp().block_sizes().parts(), &rows[..]);
                }
                let nn = enumerate_column_tableaux(&alpha, true);
                assert_eq!(nn.len(), all.iter().filter(|t| t.sp().is_nonnesting()).count());
            }
        }
    }

    #[test]
    fn tau_is_a_bijection() {
        for n in 1..=6 {
            for alpha in compositions(n) {
                for t in enumerate_column_tableaux(&alpha, true) {
                    let (a, b) = ab_sets(&t).unwrap();
                    assert_eq!(a.len(), b.len(), "{t:?}");
                    let f = tau(&t).unwrap();
                    let g = tau_inverse(&t).unwrap();
                    let image: BTreeSet<_> = f.values().copied().collect();
                    assert_eq!(image, a);
                    for (x, y) in &g {
                        assert_eq!(f[y], *x);
                    }
                    for (x, y) in &f {
                        assert_eq!(g[y], *x);
                    }
                }
            }
        }
    }

    #[test]
    fn single_column_has_empty_position_sets() {
        let t = &enumerate_column_tableaux(&c(&[4]), true)[0];
        let (a, b) = ab_sets(t).unwrap();
        assert!(a.is_empty() && b.is_empty());
    }

    #[test]
    fn json_shape() {
        let t = build_c_tableau(&p(&[2, 1])).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"alpha":[1,2],"rows":[[1,3],[2]]}"#);
        let back: ColumnTableau = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }
}
