//! Compact undirected simple graphs with bit-vector adjacency rows.
//!
//! Vertices are labeled `0..n-1`. Each row is a little-endian sequence of
//! 64-bit words; graphs of order at most 64 use a single word per row, larger
//! orders fall back to multi-word rows transparently.

use crate::error::{Error, Result};

/// Largest representable order, matching the 4-byte graph6 size field.
pub const MAX_ORDER: usize = 258_047;

/// Order cap for the exponential-time exact invariants (α, χ).
pub const EXACT_STATS_CAP: usize = 32;

/// Order cap for brute-force automorphism enumeration.
pub const AUTOMORPHISM_CAP: usize = 8;

/// Immutable undirected simple graph.
///
/// Invariants maintained by every constructor:
/// adjacency is symmetric, irreflexive, and `edge_count` equals half the
/// degree sum.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    bits: Box<[u64]>,
}

#[inline]
fn word_of(v: usize) -> usize {
    v >> 6
}

#[inline]
fn mask_of(v: usize) -> u64 {
    1u64 << (v & 63)
}

impl Graph {
    /// The empty graph `K̄_n`.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::CapacityExceeded {
                requested: n,
                limit: MAX_ORDER,
            });
        }
        let stride = n.div_ceil(64);
        Ok(Graph {
            n,
            stride,
            bits: vec![0u64; n * stride].into_boxed_slice(),
        })
    }

    /// Builds a graph from an explicit edge list; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        Ok(())
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.stride + word_of(v)] |= mask_of(v);
        self.bits[v * self.stride + word_of(u)] |= mask_of(u);
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Words per adjacency row.
    #[inline]
    pub(crate) fn stride(&self) -> usize {
        self.stride
    }

    /// Adjacency row of `v` as bit words.
    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.stride..(v + 1) * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.stride + word_of(v)] & mask_of(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Minimum degree δ; `None` for the order-0 graph.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = self.bits.iter().map(|w| w.count_ones() as usize).sum();
        total / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let base = wi << 6;
            BitIter(w).map(move |b| base + b)
        })
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 1..self.n {
            for u in self.neighbors(v).take_while(|&u| u < v) {
                out.push((u, v));
            }
        }
        out
    }

    /// Join `self ⊗ other`: disjoint union plus all cross edges.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in self.n..self.n + other.n {
                g.set_edge(u, v);
            }
        }
        Ok(g)
    }

    /// Vertex-disjoint union; `other`'s vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self
            .n
            .checked_add(other.n)
            .filter(|&n| n <= MAX_ORDER)
            .ok_or(Error::CapacityExceeded {
                requested: self.n.saturating_add(other.n),
                limit: MAX_ORDER,
            })?;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(u + self.n, v + self.n);
        }
        Ok(g)
    }

    /// Cartesian product `self □ other`; vertex `(a, b)` maps to index
    /// `a * other.order() + b`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph> {
        let n = self
            .n
            .checked_mul(other.n)
            .filter(|&n| n <= MAX_ORDER)
            .ok_or(Error::CapacityExceeded {
                requested: usize::MAX,
                limit: MAX_ORDER,
            })?;
        let mut g = Graph::empty(n)?;
        let idx = |a: usize, b: usize| a * other.n + b;
        for a in 0..self.n {
            for (b1, b2) in other.edges() {
                g.set_edge(idx(a, b1), idx(a, b2));
            }
        }
        for b in 0..other.n {
            for (a1, a2) in self.edges() {
                g.set_edge(idx(a1, b), idx(a2, b));
            }
        }
        Ok(g)
    }

    /// Edge complement; an involution.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("same order fits");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n).expect("same order fits");
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g
    }

    /// Induced subgraph on `verts` (in the given order).
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::empty(verts.len()).expect("smaller order fits");
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    /// Appends one vertex adjacent to `nbrs`; used by the orderly generator.
    pub fn with_appended_vertex(&self, nbrs: &[usize]) -> Result<Graph> {
        let mut g = Graph::empty(self.n + 1)?;
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for &u in nbrs {
            if u >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: u,
                    order: self.n,
                });
            }
            g.set_edge(u, self.n);
        }
        Ok(g)
    }

    /// Fast one-vertex extension for orders below 64: the new vertex is
    /// adjacent to the set bits of `mask`.
    pub(crate) fn extended_with_mask(&self, mask: u64) -> Graph {
        debug_assert!(self.n < 64 && self.stride <= 1);
        debug_assert!(self.n == 64 || mask >> self.n == 0);
        let n = self.n + 1;
        let mut bits = Vec::with_capacity(n);
        for v in 0..self.n {
            let mut row = self.bits[v];
            if mask >> v & 1 == 1 {
                row |= 1u64 << self.n;
            }
            bits.push(row);
        }
        bits.push(mask);
        Graph {
            n,
            stride: 1,
            bits: bits.into_boxed_slice(),
        }
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Exact independence number α via branch-and-bound; order ≤ 32.
    pub fn independence_number(&self) -> Result<usize> {
        if self.n > EXACT_STATS_CAP {
            return Err(Error::OrderCap {
                what: "independence number",
                order: self.n,
                limit: EXACT_STATS_CAP,
            });
        }
        if self.n == 0 {
            return Ok(0);
        }
        let rows: Vec<u64> = (0..self.n).map(|v| self.row(v)[0]).collect();
        let all = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let mut best = 0usize;
        mis_branch(&rows, all, 0, &mut best);
        Ok(best)
    }

    /// Exact chromatic number χ; order ≤ 32.
    pub fn chromatic_number(&self) -> Result<usize> {
        if self.n > EXACT_STATS_CAP {
            return Err(Error::OrderCap {
                what: "chromatic number",
                order: self.n,
                limit: EXACT_STATS_CAP,
            });
        }
        if self.n == 0 {
            return Ok(0);
        }
        if self.edge_count() == 0 {
            return Ok(1);
        }
        let rows: Vec<u64> = (0..self.n).map(|v| self.row(v)[0]).collect();
        // Vertices in descending degree order; first-fail for the backtracker.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(rows[v].count_ones()));
        for k in 2..=self.n {
            if k_colorable(&rows, &order, k) {
                return Ok(k);
            }
        }
        Ok(self.n)
    }

    /// Degrees, δ, α and χ in one call.
    pub fn basic_stats(&self) -> Result<BasicStats> {
        Ok(BasicStats {
            degrees: self.degrees(),
            min_degree: self.min_degree(),
            independence_number: self.independence_number()?,
            chromatic_number: self.chromatic_number()?,
        })
    }

    /// All automorphisms by exhaustive permutation search; order ≤ 8.
    pub fn automorphisms(&self) -> Result<Vec<Vec<usize>>> {
        if self.n > AUTOMORPHISM_CAP {
            return Err(Error::OrderCap {
                what: "automorphism enumeration",
                order: self.n,
                limit: AUTOMORPHISM_CAP,
            });
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut out = Vec::new();
        permute_all(&mut perm, 0, &mut |p| {
            if self.is_automorphism(p) {
                out.push(p.to_vec());
            }
        });
        out.sort_unstable();
        Ok(out)
    }

    fn is_automorphism(&self, perm: &[usize]) -> bool {
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) != self.has_edge(perm[u], perm[v]) {
                    return false;
                }
            }
        }
        true
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, e={}, {:?})", self.n, self.edge_count(), self.edges())
    }
}

/// Exact invariants bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicStats {
    pub degrees: Vec<usize>,
    pub min_degree: Option<usize>,
    pub independence_number: usize,
    pub chromatic_number: usize,
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

fn mis_branch(rows: &[u64], avail: u64, size: usize, best: &mut usize) {
    if size + avail.count_ones() as usize <= *best {
        return;
    }
    if avail == 0 {
        *best = (*best).max(size);
        return;
    }
    // Branch on a maximum-degree available vertex: exclude it, or take it
    // and drop its closed neighborhood.
    let mut pick = usize::MAX;
    let mut pick_deg = 0u32;
    let mut m = avail;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let d = (rows[v] & avail).count_ones();
        if pick == usize::MAX || d > pick_deg {
            pick = v;
            pick_deg = d;
        }
    }
    if pick_deg == 0 {
        *best = (*best).max(size + avail.count_ones() as usize);
        return;
    }
    mis_branch(rows, avail & !(rows[pick] | (1u64 << pick)), size + 1, best);
    mis_branch(rows, avail & !(1u64 << pick), size, best);
}

fn k_colorable(rows: &[u64], order: &[usize], k: usize) -> bool {
    fn go(rows: &[u64], order: &[usize], k: usize, idx: usize, colors: &mut [usize], used: usize) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        let mut forbidden = 0usize;
        for (&u, &c) in order[..idx].iter().zip(colors[..idx].iter()) {
            if rows[v] & (1u64 << u) != 0 {
                forbidden |= 1 << c;
            }
        }
        // Trying at most one fresh color breaks color-permutation symmetry.
        let limit = (used + 1).min(k);
        for c in 0..limit {
            if forbidden & (1 << c) == 0 {
                colors[idx] = c;
                if go(rows, order, k, idx + 1, colors, used.max(c + 1)) {
                    return true;
                }
            }
        }
        false
    }
    let mut colors = vec![0usize; order.len()];
    go(rows, order, k, 0, &mut colors, 0)
}

fn permute_all(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_all(perm, k + 1, f);
        perm.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions as cons;

    #[test]
    fn make_graph_examples() {
        let c3 = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(c3.edge_count(), 3);
        let e4 = Graph::empty(4).unwrap();
        assert_eq!(e4.edge_count(), 0);
        let mut all = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                all.push((u, v));
            }
        }
        let k6 = Graph::from_edges(6, &all).unwrap();
        assert_eq!(k6.edge_count(), 15);
    }

    #[test]
    fn make_graph_rejects_bad_input() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(Error::SelfLoop { vertex: 1 })
        ));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn join_examples() {
        let k23 = Graph::empty(2).unwrap().join(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert_eq!(k23.order(), 5);

        let hub = cons::complete(1).unwrap();
        for k in 2..5usize {
            let w = hub.join(&cons::cycle(2 * k).unwrap()).unwrap();
            assert_eq!(w.edge_count(), 2 * k + 2 * k);
        }

        // K_{1,3} is P_4-extremal on 4 vertices; joining K̄_5 adds 4*5 cross edges.
        let star = cons::complete_bipartite(1, 3).unwrap();
        let j = star.join(&Graph::empty(5).unwrap()).unwrap();
        assert_eq!(j.order(), 9);
        assert_eq!(j.edge_count(), 3 + 20);
    }

    #[test]
    fn disjoint_union_examples() {
        let k3 = cons::complete(3).unwrap();
        let two = k3.disjoint_union(&k3).unwrap();
        assert_eq!((two.order(), two.edge_count()), (6, 6));
        let id = two.disjoint_union(&Graph::empty(0).unwrap()).unwrap();
        assert_eq!(id, two);
    }

    #[test]
    fn cartesian_product_examples() {
        let c3p2 = cons::cycle(3).unwrap().cartesian_product(&cons::path(2).unwrap()).unwrap();
        assert_eq!((c3p2.order(), c3p2.edge_count()), (6, 9));
        let c5p2 = cons::cycle(5).unwrap().cartesian_product(&cons::path(2).unwrap()).unwrap();
        assert_eq!((c5p2.order(), c5p2.edge_count()), (10, 15));
        let p2p2 = cons::path(2).unwrap().cartesian_product(&cons::path(2).unwrap()).unwrap();
        let c4 = cons::cycle(4).unwrap();
        assert_eq!(crate::canon::canonical_form(&p2p2), crate::canon::canonical_form(&c4));
    }

    #[test]
    fn complement_examples() {
        let k6 = cons::complete(6).unwrap();
        assert_eq!(k6.complement().edge_count(), 0);
        let g1 = cons::g1();
        assert_eq!(g1.complement().complement(), g1);
        let c5 = cons::cycle(5).unwrap();
        assert_eq!(
            crate::canon::canonical_form(&c5.complement()),
            crate::canon::canonical_form(&c5)
        );
    }

    #[test]
    fn stats_examples() {
        for k in 1..=3usize {
            let c = cons::cycle(2 * k + 1).unwrap();
            assert_eq!(c.chromatic_number().unwrap(), 3);
        }
        let prism = cons::prism(1).unwrap();
        assert_eq!(prism.chromatic_number().unwrap(), 3);
        let k34 = cons::complete_bipartite(3, 4).unwrap();
        assert_eq!(k34.independence_number().unwrap(), 4);
        assert_eq!(k34.min_degree(), Some(3));
        let stats = k34.basic_stats().unwrap();
        assert_eq!(stats.chromatic_number, 2);
    }

    #[test]
    fn stats_cap_enforced() {
        let g = Graph::empty(40).unwrap();
        assert!(matches!(g.independence_number(), Err(Error::OrderCap { .. })));
        assert!(matches!(g.chromatic_number(), Err(Error::OrderCap { .. })));
    }

    #[test]
    fn large_order_rows() {
        // Multi-word fallback path.
        let n = 130;
        let mut edges = Vec::new();
        for v in 1..n {
            edges.push((0, v));
        }
        let star = Graph::from_edges(n, &edges).unwrap();
        assert_eq!(star.degree(0), n - 1);
        assert_eq!(star.edge_count(), n - 1);
        assert_eq!(star.neighbors(0).count(), n - 1);
        assert!(star.has_edge(0, 129) && !star.has_edge(1, 2));
    }

    #[test]
    fn automorphisms_of_path() {
        let p4 = cons::path(4).unwrap();
        let auts = p4.automorphisms().unwrap();
        assert_eq!(auts.len(), 2);
        assert!(auts.contains(&vec![3, 2, 1, 0]));
    }
}
