use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::matrix::{check_field, FqMatrix};
use crate::arcdiag::{ab_sets, ctr_composition, ColumnTableau, SetPartition};
use crate::error::{Error, Result};
use crate::partcomb::{Composition, Partition};

/// How a pattern subgroup was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PatternKind {
    Dyck,
    Composition,
    SetPartition,
    Ctr,
    #[serde(rename = "U_T")]
    UT,
    #[serde(rename = "V_T")]
    VT,
    Full,
}

/// Matrices that are the identity off a fixed set of strictly upper positions.
///
/// Position sets exist in any dimension; elements are only materialized up to
/// [`super::MAX_DIM`].
///
/// Positions are 1-based `(i, j)` with `i < j`, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PatternSubgroup {
    n: usize,
    p: u32,
    kind: PatternKind,
    positions: Vec<(usize, usize)>,
}

impl PatternSubgroup {
    pub fn new(n: usize, p: u32, kind: PatternKind, positions: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        check_field(1, p)?;
        if n == 0 {
            return Err(Error::Invalid("dimension must be positive".into()));
        }
        let set: BTreeSet<(usize, usize)> = positions.into_iter().collect();
        if let Some(&(i, j)) = set.iter().find(|&&(i, j)| !(1 <= i && i < j && j <= n)) {
            return Err(Error::Invalid(format!("({i},{j}) is not strictly upper in dimension {n}")));
        }
        Ok(Self { n, p, kind, positions: set.into_iter().collect() })
    }

    /// `UT_n(F_p)`.
    pub fn full(n: usize, p: u32) -> Result<Self> {
        Self::new(n, p, PatternKind::Full, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))))
    }

    pub fn from_dyck(path: &DyckPath, p: u32) -> Result<Self> {
        let n = path.semilength();
        let r = path.row_bounds();
        Self::new(n, p, PatternKind::Dyck, (1..=n).flat_map(|i| (r[i - 1] + 1..=n).map(move |j| (i, j))))
    }

    /// The unipotent radical `U_α` of the parabolic `P_α`.
    pub fn from_composition(alpha: &Composition, p: u32) -> Result<Self> {
        let block = alpha.block_of();
        let n = alpha.size();
        Self::new(
            n,
            p,
            PatternKind::Composition,
            (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).filter(|&(i, j)| block[i - 1] < block[j - 1]),
        )
    }

    /// `U_η`: `(j, k)` is excluded when it lies under a different arc of `η`.
    pub fn from_set_partition(eta: &SetPartition, p: u32) -> Result<Self> {
        if !eta.is_nonnesting() {
            return Err(Error::Nesting);
        }
        let n = eta.n();
        let arcs: Vec<(usize, usize)> = eta.arcs().collect();
        let free = (1..=n).flat_map(|j| (j + 1..=n).map(move |k| (j, k))).filter(|&(j, k)| {
            !arcs.iter().any(|&(i, l)| (i, l) != (j, k) && i <= j && k <= l)
        });
        Self::new(n, p, PatternKind::SetPartition, free.collect::<Vec<_>>())
    }

    /// `U_{ctr(λ′)}`.
    pub fn ctr(lambda: &Partition, p: u32) -> Result<Self> {
        let mut g = Self::from_composition(&ctr_composition(lambda)?, p)?;
        g.kind = PatternKind::Ctr;
        Ok(g)
    }

    /// `(U_T, V_T)`, with `V_T` on the positions `B(T)` and `U_T` generated by
    /// `V_T` and `U_{sp(T)}`.
    pub fn u_t_v_t(t: &ColumnTableau, p: u32) -> Result<(Self, Self)> {
        let (_, b) = ab_sets(t)?;
        let n = t.size();
        let v = Self::new(n, p, PatternKind::VT, b.iter().copied())?;
        let usp = Self::from_set_partition(&t.sp(), p)?;
        let union: BTreeSet<(usize, usize)> = usp.positions.iter().chain(&v.positions).copied().collect();
        let u = Self::new(n, p, PatternKind::UT, transitive_closure(&union))?;
        Ok((u, v))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn kind(&self) -> PatternKind {
        self.kind
    }

    pub fn positions(&self) -> &[(usize, usize)] {
        &self.positions
    }

    pub fn has_position(&self, i: usize, j: usize) -> bool {
        self.positions.binary_search(&(i, j)).is_ok()
    }

    /// Closed under `(i,j),(j,k) → (i,k)`, so that the point set is a group.
    pub fn is_closed(&self) -> bool {
        self.positions.iter().all(|&(i, j)| {
            self.positions.iter().filter(|&&(a, _)| a == j).all(|&(_, k)| self.has_position(i, k))
        })
    }

    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.positions.iter().all(|&(i, j)| other.has_position(i, j))
    }

    pub fn contains(&self, g: &FqMatrix) -> bool {
        g.n() == self.n
            && g.is_upper_unitriangular()
            && (1..=self.n).all(|i| (i + 1..=self.n).all(|j| g.get(i - 1, j - 1) == 0 || self.has_position(i, j)))
    }

    pub fn order(&self) -> BigUint {
        BigUint::from(self.p).pow(self.positions.len() as u32)
    }

    /// `p^{#positions}` when it fits.
    pub fn element_count(&self) -> Option<u128> {
        (self.p as u128).checked_pow(self.positions.len() as u32)
    }

    /// The element with base-`p` digit expansion `index` over the positions.
    pub fn element(&self, mut index: u128) -> FqMatrix {
        let mut m = FqMatrix::identity(self.n, self.p);
        for &(i, j) in &self.positions {
            m.set(i - 1, j - 1, (index % self.p as u128) as u32);
            index /= self.p as u128;
        }
        m
    }

    /// Inverse of [`Self::element`]; `None` when `g` is not in the group.
    pub fn index_of(&self, g: &FqMatrix) -> Option<u128> {
        if !self.contains(g) {
            return None;
        }
        let mut idx = 0u128;
        for &(i, j) in self.positions.iter().rev() {
            idx = idx * self.p as u128 + g.get(i - 1, j - 1) as u128;
        }
        Some(idx)
    }

    /// All elements in digit order, after checking the budget.
    pub fn elements(&self, budget: u64) -> Result<impl Iterator<Item = FqMatrix> + '_> {
        check_field(self.n, self.p)?;
        let count = super::check_budget(self.element_count(), budget)?;
        Ok((0..count).map(move |k| self.element(k)))
    }

    /// `Id + e_{ij}` for each position.
    pub fn generators(&self) -> Vec<FqMatrix> {
        self.positions.iter().map(|&(i, j)| FqMatrix::elementary(self.n, self.p, i - 1, j - 1, 1)).collect()
    }

    /// Positions `(i, k)` with `(i, j), (j, k)` both free; these carry the
    /// quadratic terms of products, and span `[U, U]` for shapes closed on both sides.
    pub fn square_positions(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for &(i, j) in &self.positions {
            for &(a, k) in &self.positions {
                if a == j {
                    out.insert((i, k));
                }
            }
        }
        out
    }
}

fn transitive_closure(set: &BTreeSet<(usize, usize)>) -> BTreeSet<(usize, usize)> {
    let mut closed = set.clone();
    loop {
        let extra: Vec<(usize, usize)> = closed
            .iter()
            .flat_map(|&(i, j)| closed.iter().filter(move |&&(a, _)| a == j).map(move |&(_, k)| (i, k)))
            .filter(|x| !closed.contains(x))
            .collect();
        if extra.is_empty() {
            return closed;
        }
        closed.extend(extra);
    }
}

/// The block upper-triangular parabolic `P_α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parabolic {
    alpha: Composition,
    block: Vec<usize>,
}

impl Parabolic {
    pub fn new(alpha: &Composition) -> Self {
        Self { alpha: alpha.clone(), block: alpha.block_of() }
    }

    pub fn alpha(&self) -> &Composition {
        &self.alpha
    }

    pub fn contains(&self, g: &FqMatrix) -> bool {
        let n = g.n();
        n == self.block.len()
            && (0..n).all(|i| (0..n).all(|j| self.block[i] <= self.block[j] || g.get(i, j) == 0))
    }

    pub fn order(&self, p: u32) -> BigUint {
        let q = BigUint::from(p);
        let parts = self.alpha.parts();
        let mut exp = 0;
        let mut acc = BigUint::from(1u32);
        for (a, &x) in parts.iter().enumerate() {
            acc *= super::gl_order_big(x, p);
            exp += parts[a + 1..].iter().map(|&y| x * y).sum::<usize>();
        }
        acc * q.pow(exp as u32)
    }
}

/// A Dyck path from `(0,0)` to `(2n,0)`, as up (`U`) and down (`D`) steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath(Vec<bool>);

impl DyckPath {
    pub fn new(steps: Vec<bool>) -> Result<Self> {
        let mut h: i64 = 0;
        for &s in &steps {
            h += if s { 1 } else { -1 };
            if h < 0 {
                return Err(Error::Invalid("Dyck path dips below the axis".into()));
            }
        }
        if h != 0 || steps.is_empty() {
            return Err(Error::Invalid("Dyck path must be nonempty and end on the axis".into()));
        }
        Ok(Self(steps))
    }

    /// `UD` repeated: every strictly upper position is free.
    pub fn staircase(n: usize) -> Self {
        Self((0..2 * n).map(|k| k % 2 == 0).collect())
    }

    /// All ups then all downs: no free positions.
    pub fn maximal(n: usize) -> Self {
        Self((0..2 * n).map(|k| k < n).collect())
    }

    pub fn semilength(&self) -> usize {
        self.0.len() / 2
    }

    pub fn steps(&self) -> &[bool] {
        &self.0
    }

    /// `r_i` = number of up steps before the `i`-th down step; row `i` is free
    /// in columns `j > r_i`.
    pub fn row_bounds(&self) -> Vec<usize> {
        let mut ups = 0;
        let mut out = Vec::new();
        for &s in &self.0 {
            if s {
                ups += 1;
            } else {
                out.push(ups);
            }
        }
        out
    }
}

/// All Dyck paths of semilength `n`, lexicographic with `U` first.
pub fn dyck_paths(n: usize) -> Vec<DyckPath> {
    fn rec(ups: usize, downs: usize, n: usize, cur: &mut Vec<bool>, out: &mut Vec<DyckPath>) {
        if ups == n && downs == n {
            out.push(DyckPath(cur.clone()));
            return;
        }
        if ups < n {
            cur.push(true);
            rec(ups + 1, downs, n, cur, out);
            cur.pop();
        }
        if downs < ups {
            cur.push(false);
            rec(ups, downs + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, 0, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            f.write_str(if s { "U" } else { "D" })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(true),
                'D' | 'd' => Ok(false),
                _ => Err(Error::Invalid(format!("unexpected step {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arcdiag::{enumerate_column_tableaux, ggg};
    use crate::partcomb::compositions;

    fn c(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn dyck_examples() {
        let d: DyckPath = "UDUUUDUDDD".parse().unwrap();
        let u = PatternSubgroup::from_dyck(&d, 2).unwrap();
        assert_eq!(u.positions(), &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 5)]);
        for n in 1..=6 {
            assert_eq!(
                PatternSubgroup::from_dyck(&DyckPath::staircase(n), 2).unwrap().positions(),
                PatternSubgroup::full(n, 2).unwrap().positions()
            );
            assert!(PatternSubgroup::from_dyck(&DyckPath::maximal(n), 2).unwrap().positions().is_empty());
        }
        let catalan = [1, 2, 5, 14, 42, 132];
        for n in 1..=6 {
            let paths = dyck_paths(n);
            assert_eq!(paths.len(), catalan[n - 1]);
            for path in &paths {
                let u = PatternSubgroup::from_dyck(path, 3).unwrap();
                assert!(u.is_closed());
                assert_eq!(path.to_string().parse::<DyckPath>().unwrap(), *path);
            }
        }
        assert!("UDD".parse::<DyckPath>().is_err());
        assert!("DU".parse::<DyckPath>().is_err());
    }

    #[test]
    fn composition_patterns() {
        let u = PatternSubgroup::from_composition(&c(&[1, 4, 5, 2]), 2).unwrap();
        assert_eq!(u.positions().len(), 11 + 4 * 7 + 5 * 2);
        assert!(u.has_position(1, 2) && !u.has_position(2, 5) && u.has_position(5, 6) && !u.has_position(6, 10));
        assert!(u.has_position(10, 11) && !u.has_position(11, 12));
        assert!(PatternSubgroup::from_composition(&c(&[4]), 2).unwrap().positions().is_empty());
        assert_eq!(
            PatternSubgroup::from_composition(&c(&[1, 1, 1, 1]), 2).unwrap().positions(),
            PatternSubgroup::full(4, 2).unwrap().positions()
        );
        let borel = Parabolic::new(&c(&[1, 1, 1]));
        assert!(borel.contains(&FqMatrix::from_rows(3, &[vec![2, 1, 0], vec![0, 1, 2], vec![0, 0, 2]]).unwrap()));
        assert!(!borel.contains(&FqMatrix::from_rows(3, &[vec![1, 0, 0], vec![1, 1, 0], vec![0, 0, 1]]).unwrap()));
        assert_eq!(borel.order(2), BigUint::from(8u32));
        assert_eq!(Parabolic::new(&c(&[2, 1])).order(2), BigUint::from(24u32));
    }

    #[test]
    fn set_partition_patterns() {
        let eta = SetPartition::new(8, [(1, 4), (3, 6), (6, 8)]).unwrap();
        let u = PatternSubgroup::from_set_partition(&eta, 2).unwrap();
        let stars = [
            (1, 4), (1, 5), (1, 6), (1, 7), (1, 8),
            (2, 5), (2, 6), (2, 7), (2, 8),
            (3, 6), (3, 7), (3, 8),
            (4, 7), (4, 8),
            (5, 7), (5, 8),
            (6, 8),
        ];
        assert_eq!(u.positions(), &stars);
        assert_eq!(
            PatternSubgroup::from_set_partition(&SetPartition::empty(5), 2).unwrap().positions(),
            PatternSubgroup::full(5, 2).unwrap().positions()
        );
        let la = Partition::new(vec![4, 3, 2, 2, 1]).unwrap();
        let g = PatternSubgroup::from_set_partition(&ggg(&la).unwrap(), 2).unwrap();
        assert!(g.is_subgroup_of(&PatternSubgroup::ctr(&la, 2).unwrap()));
        let nested = SetPartition::new(4, [(1, 4), (2, 3)]).unwrap();
        assert_eq!(PatternSubgroup::from_set_partition(&nested, 2), Err(Error::Nesting));
    }

    #[test]
    fn running_example_u_t() {
        let t = ColumnTableau::from_rows(
            c(&[1, 5, 2, 4]),
            &[vec![1, 2, 7, 11], vec![3, 8, 12], vec![4, 9], vec![5, 10], vec![6]],
        )
        .unwrap();
        let (u, v) = PatternSubgroup::u_t_v_t(&t, 2).unwrap();
        let usp = PatternSubgroup::from_set_partition(&t.sp(), 2).unwrap();
        let mut stars = BTreeSet::new();
        let row2: Vec<(usize, usize)> = (3..=6).map(|j| (2, j)).collect();
        stars.extend(row2);
        stars.extend([(3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6), (7, 8), (7, 9), (7, 10), (8, 9), (8, 10)]);
        let vpos: BTreeSet<(usize, usize)> = v.positions().iter().copied().collect();
        assert_eq!(vpos, stars);
        let circled: BTreeSet<(usize, usize)> = usp.positions().iter().copied().collect();
        let mut expect_circled = BTreeSet::new();
        expect_circled.extend((2..=12).map(|j| (1, j)));
        expect_circled.extend((7..=12).map(|j| (2, j)));
        expect_circled.extend((8..=12).map(|j| (3, j)));
        expect_circled.extend((9..=12).map(|j| (4, j)));
        expect_circled.extend((10..=12).map(|j| (5, j)));
        expect_circled.extend((11..=12).map(|j| (6, j)));
        expect_circled.extend([(7, 11), (7, 12), (8, 12)]);
        assert_eq!(circled, expect_circled);
        assert_eq!(u.positions().len(), vpos.len() + circled.len());
        assert!(u.is_closed());
        let ualpha = PatternSubgroup::from_composition(t.alpha(), 2).unwrap();
        assert_eq!(u.order(), ualpha.order());
    }

    #[test]
    fn v_t_order_matches_b() {
        for n in 1..=6 {
            for alpha in compositions(n) {
                for t in enumerate_column_tableaux(&alpha, true) {
                    let (u, v) = PatternSubgroup::u_t_v_t(&t, 2).unwrap();
                    let (_, b) = ab_sets(&t).unwrap();
                    assert_eq!(v.order(), BigUint::from(2u32).pow(b.len() as u32));
                    assert!(u.is_closed());
                    if n == 1 || alpha.len() == 1 {
                        assert!(v.positions().is_empty());
                    }
                }
            }
        }
    }

    #[test]
    fn elements_and_membership() {
        let u = PatternSubgroup::full(3, 3).unwrap();
        let all: Vec<FqMatrix> = u.elements(1000).unwrap().collect();
        assert_eq!(all.len(), 27);
        assert!(all.iter().all(|g| u.contains(g)));
        let distinct: BTreeSet<FqMatrix> = all.iter().copied().collect();
        assert_eq!(distinct.len(), 27);
        assert!(u.elements(10).is_err());
        for (k, g) in all.iter().enumerate() {
            assert_eq!(u.index_of(g), Some(k as u128));
        }
        assert_eq!(u.index_of(&FqMatrix::from_rows(3, &[vec![1, 0, 0], vec![1, 1, 0], vec![0, 0, 1]]).unwrap()), None);
        let json = serde_json::to_string(&PatternSubgroup::from_composition(&c(&[1, 2]), 2).unwrap()).unwrap();
        assert_eq!(json, r#"{"n":3,"p":2,"kind":"composition","positions":[[1,2],[1,3]]}"#);
    }
}
