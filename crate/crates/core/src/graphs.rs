//! Finite simple graphs on `1..=n`, closedness and closed-labeling search.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Default vertex bound for [`Graph::find_closed_labeling`].
pub const LABELING_BOUND: usize = 9;

/// Adjacency is stored as bitmasks, so vertex counts are capped.
pub const MAX_VERTICES: usize = 64;

/// A simple graph on vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Neighbors of a vertex split by label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborIntervals {
    pub below: BTreeSet<usize>,
    pub above: BTreeSet<usize>,
    /// `max above`, if any.
    pub ell: Option<usize>,
    /// `min below(k + 1)`, if `k < n` and that set is nonempty.
    pub i_next: Option<usize>,
    pub below_is_interval: bool,
    pub above_is_interval: bool,
}

fn is_interval(s: &BTreeSet<usize>) -> bool {
    match (s.first(), s.last()) {
        (Some(&a), Some(&b)) => b - a + 1 == s.len(),
        _ => true,
    }
}

impl Graph {
    /// Builds a graph; repeated edges are merged, loops are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::SizeBound {
                size: n,
                bound: MAX_VERTICES,
            });
        }
        let mut g = Graph { n, adj: vec![0; n] };
        for (i, j) in edges {
            for v in [i, j] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if i == j {
                return Err(Error::Hypothesis(format!("loop at vertex {i}")));
            }
            g.adj[i - 1] |= 1 << (j - 1);
            g.adj[j - 1] |= 1 << (i - 1);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, []).expect("valid")
    }

    pub fn complete(n: usize) -> Self {
        Self::new(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)))).expect("valid")
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i, i + 1))).expect("valid")
    }

    /// The star with center 1 and leaves `2..=n`.
    pub fn star(n: usize) -> Self {
        Self::new(n, (2..=n).map(|j| (1, j))).expect("valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && i <= self.n && j <= self.n && self.adj[i - 1] >> (j - 1) & 1 == 1
    }

    pub fn neighbors(&self, k: usize) -> Vec<usize> {
        (1..=self.n).filter(|&j| self.has_edge(k, j)).collect()
    }

    fn check_vertex(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.n {
            Err(Error::VertexOutOfRange {
                vertex: k,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// The first triple `(i, j, k)` with `j < k`, edges `{i,j}`, `{i,k}` on the
    /// same side of `i` and `{j,k}` missing, scanning `i`, then `j`, then `k` upward.
    pub fn closedness_violation(&self) -> Option<(usize, usize, usize)> {
        for i in 1..=self.n {
            let nb = self.neighbors(i);
            for (a, &j) in nb.iter().enumerate() {
                for &k in &nb[a + 1..] {
                    let same_side = (i < j) == (i < k);
                    if same_side && !self.has_edge(j, k) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_closed_labeling(&self) -> bool {
        self.closedness_violation().is_none()
    }

    pub fn neighbor_intervals(&self, k: usize) -> Result<NeighborIntervals> {
        self.check_vertex(k)?;
        let below: BTreeSet<usize> = (1..k).filter(|&j| self.has_edge(j, k)).collect();
        let above: BTreeSet<usize> = (k + 1..=self.n).filter(|&j| self.has_edge(j, k)).collect();
        let i_next = (k < self.n)
            .then(|| (1..=k).find(|&j| self.has_edge(j, k + 1)))
            .flatten();
        Ok(NeighborIntervals {
            ell: above.last().copied(),
            i_next,
            below_is_interval: is_interval(&below),
            above_is_interval: is_interval(&above),
            below,
            above,
        })
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// The empty graph on zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let all = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adj[v] & !seen;
            seen |= new;
            frontier |= new;
        }
        seen == all
    }

    /// `order[p]` is the old vertex receiving label `p + 1`.
    pub fn relabel(&self, order: &[usize]) -> Result<Graph> {
        let mut new_label = vec![0; self.n];
        if order.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: order.len(),
            });
        }
        for (p, &v) in order.iter().enumerate() {
            self.check_vertex(v)?;
            if new_label[v - 1] != 0 {
                return Err(Error::Hypothesis(format!(
                    "vertex {v} repeated in relabeling"
                )));
            }
            new_label[v - 1] = p + 1;
        }
        Graph::new(
            self.n,
            self.edges()
                .into_iter()
                .map(|(i, j)| (new_label[i - 1], new_label[j - 1])),
        )
    }

    /// A vertex order (see [`Graph::relabel`]) under which the graph is closed,
    /// or `None` after exhausting all orders. Returns the lexicographically
    /// least such order.
    pub fn find_closed_labeling(&self) -> Result<Option<Vec<usize>>> {
        self.find_closed_labeling_bounded(LABELING_BOUND)
    }

    pub fn find_closed_labeling_bounded(&self, bound: usize) -> Result<Option<Vec<usize>>> {
        if self.n > bound {
            return Err(Error::SizeBound {
                size: self.n,
                bound,
            });
        }
        let mut order = Vec::with_capacity(self.n);
        let mut used = 0u64;
        Ok(self.extend_labeling(&mut order, &mut used).then_some(order))
    }

    fn extend_labeling(&self, order: &mut Vec<usize>, used: &mut u64) -> bool {
        if order.len() == self.n {
            return true;
        }
        for v in 1..=self.n {
            if *used >> (v - 1) & 1 == 1 {
                continue;
            }
            if self.placement_ok(order, v) {
                order.push(v);
                *used |= 1 << (v - 1);
                if self.extend_labeling(order, used) {
                    return true;
                }
                order.pop();
                *used &= !(1 << (v - 1));
            }
        }
        false
    }

    /// Checks every closedness triple whose largest label is the new vertex `v`.
    fn placement_ok(&self, order: &[usize], v: usize) -> bool {
        let lower: Vec<usize> = order
            .iter()
            .copied()
            .filter(|&u| self.has_edge(u, v))
            .collect();
        // `v` as the apex with both other ends below it.
        for (a, &b) in lower.iter().enumerate() {
            for &c in &lower[a + 1..] {
                if !self.has_edge(b, c) {
                    return false;
                }
            }
        }
        // `v` as an upper end: apex `a` below, other end `b` between.
        for (pa, &a) in order.iter().enumerate() {
            if !self.has_edge(a, v) {
                continue;
            }
            for &b in &order[pa + 1..] {
                if self.has_edge(a, b) && !self.has_edge(b, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Maximal cliques, each sorted, listed in lexicographic order.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let all = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        self.bron_kerbosch(0, all, 0, &mut out);
        let mut cliques: Vec<Vec<usize>> = out
            .into_iter()
            .map(|m| (1..=self.n).filter(|v| m >> (v - 1) & 1 == 1).collect())
            .collect();
        cliques.sort();
        cliques
    }

    fn bron_kerbosch(&self, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            if r != 0 || self.n == 0 {
                out.push(r);
            }
            return;
        }
        let pivot = (p | x).trailing_zeros() as usize;
        let mut cand = p & !self.adj[pivot];
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let bit = 1u64 << v;
            self.bron_kerbosch(r | bit, p & self.adj[v], x & self.adj[v], out);
            p &= !bit;
            x |= bit;
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n, self.edges())
    }
}
