//! Canonical labeling by iterated color refinement and backtracking.
//!
//! The canonical form of a graph is the lexicographically smallest graph6
//! adjacency encoding over all vertex orderings reachable by the search:
//! vertices are partitioned by iterated degree/neighborhood refinement, the
//! first non-singleton cell is split by individualizing each of its vertices
//! in turn, and leaves (discrete partitions) yield candidate encodings. Two
//! graphs are isomorphic iff their canonical forms are equal.

use crate::graph::Graph;
use crate::graph6;

/// Canonical relabeling plus the canonical graph6 bytes.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    graph6: String,
    relabeling: Vec<usize>,
}

impl CanonicalForm {
    /// Canonical graph6 string; equal iff the underlying graphs are isomorphic.
    pub fn graph6(&self) -> &str {
        &self.graph6
    }

    /// Canonical bytes (ASCII graph6).
    pub fn bytes(&self) -> &[u8] {
        self.graph6.as_bytes()
    }

    /// Permutation from input labels to canonical labels.
    pub fn relabeling(&self) -> &[usize] {
        &self.relabeling
    }

    /// Decodes the canonical representative graph.
    pub fn graph(&self) -> Graph {
        graph6::decode(&self.graph6).expect("canonical bytes are valid graph6")
    }
}

// Equality, ordering and hashing are on the canonical bytes only; the
// relabeling depends on the input labeling and is deliberately excluded.
impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.graph6 == other.graph6
    }
}
impl Eq for CanonicalForm {}
impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.graph6.cmp(&other.graph6)
    }
}
impl std::hash::Hash for CanonicalForm {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.graph6.hash(state);
    }
}

/// Computes the canonical form of `g`.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let relabeling = canonical_perm(g);
    let graph6 = graph6::encode(&g.permuted(&relabeling));
    CanonicalForm { graph6, relabeling }
}

/// Isomorphism test via canonical forms.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && canonical_form(a) == canonical_form(b)
}

/// Canonical relabeling: vertex `v` maps to position `perm[v]`.
pub fn canonical_perm(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let mut cz = Canonizer::new(g);
    let mut colors = vec![0u32; n];
    cz.refine(&mut colors);
    cz.search(&colors);
    cz.best_perm.iter().map(|&p| p as usize).collect()
}

struct Canonizer<'a> {
    g: &'a Graph,
    n: usize,
    code_words: usize,
    best: Option<Vec<u64>>,
    best_perm: Vec<u32>,
    scratch_code: Vec<u64>,
}

#[inline]
fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

impl<'a> Canonizer<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        let code_words = (n * (n - 1) / 2).div_ceil(64).max(1);
        Canonizer {
            g,
            n,
            code_words,
            best: None,
            best_perm: vec![0; n],
            scratch_code: vec![0; code_words],
        }
    }

    /// Iterated refinement: vertices are re-colored by (color, multiset of
    /// neighbor colors) until the partition stabilizes. Colors are dense and
    /// their order is isomorphism-invariant.
    fn refine(&self, colors: &mut [u32]) {
        let n = self.n;
        let mut keys: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut order: Vec<u32> = (0..n as u32).collect();
        loop {
            // Distinct count, not max+1: colors are sparse right after an
            // individualization and a round never merges classes, so equal
            // counts exactly characterize a stable partition.
            let old_classes = distinct_count(colors);
            for v in 0..n {
                let key = &mut keys[v];
                key.clear();
                key.push(colors[v]);
                for u in self.g.neighbors(v) {
                    key.push(colors[u]);
                }
                key[1..].sort_unstable();
            }
            order.sort_by(|&a, &b| keys[a as usize].cmp(&keys[b as usize]));
            let mut next = 0u32;
            let mut prev: Option<u32> = None;
            let mut new_colors = vec![0u32; n];
            for &v in &order {
                if let Some(p) = prev {
                    if keys[v as usize] != keys[p as usize] {
                        next += 1;
                    }
                }
                new_colors[v as usize] = next;
                prev = Some(v);
            }
            colors.copy_from_slice(&new_colors);
            if next as usize + 1 == old_classes {
                return;
            }
        }
    }

    fn search(&mut self, colors: &[u32]) {
        let n = self.n;
        // Cells in color order; colors are dense after refinement.
        let classes = count_classes(colors);
        let mut cells: Vec<Vec<u32>> = vec![Vec::new(); classes];
        for v in 0..n {
            cells[colors[v] as usize].push(v as u32);
        }
        let mut prefix = 0usize;
        while prefix < classes && cells[prefix].len() == 1 {
            prefix += 1;
        }

        if self.best.is_some() && prefix >= 2 {
            if let std::cmp::Ordering::Greater = self.compare_prefix(&cells, prefix) {
                return;
            }
        }

        if prefix == classes {
            // Discrete partition: a candidate labeling.
            let code = self.build_code(colors);
            if self.best.as_deref().is_none_or(|b| code.as_slice() < b) {
                self.best = Some(code);
                self.best_perm.copy_from_slice(colors);
            }
            return;
        }

        let cell = cells[prefix].clone();
        let branch: &[u32] = if self.all_twins(&cell) {
            // Every transposition inside the cell is an automorphism, so all
            // branches are equivalent.
            &cell[..1]
        } else {
            &cell
        };
        let mut child = vec![0u32; n];
        for &u in branch {
            for v in 0..n {
                child[v] = 2 * colors[v];
            }
            for &w in &cell {
                if w != u {
                    child[w as usize] = 2 * colors[w as usize] + 1;
                }
            }
            self.refine(&mut child);
            self.search(&child);
        }
    }

    /// Compares the code bits determined by the first `prefix` singleton
    /// cells against the current best.
    fn compare_prefix(&mut self, cells: &[Vec<u32>], prefix: usize) -> std::cmp::Ordering {
        let nbits = prefix * (prefix - 1) / 2;
        let words = nbits.div_ceil(64);
        self.scratch_code[..words].fill(0);
        for j in 1..prefix {
            let vj = cells[j][0] as usize;
            for (i, cell) in cells.iter().enumerate().take(j) {
                if self.g.has_edge(cell[0] as usize, vj) {
                    let t = pair_index(i, j);
                    self.scratch_code[t >> 6] |= 1u64 << (63 - (t & 63));
                }
            }
        }
        let best = self.best.as_deref().expect("caller checked");
        let tail = nbits & 63;
        for (w, (&s0, &b0)) in self.scratch_code[..words].iter().zip(best).enumerate() {
            let (mut s, mut b) = (s0, b0);
            if w + 1 == words && tail != 0 {
                let mask = !0u64 << (64 - tail);
                b &= mask;
                s &= mask;
            }
            match s.cmp(&b) {
                std::cmp::Ordering::Equal => continue,
                other => return other,
            }
        }
        std::cmp::Ordering::Equal
    }

    fn build_code(&self, colors: &[u32]) -> Vec<u64> {
        let mut code = vec![0u64; self.code_words];
        for v in 0..self.n {
            let pv = colors[v] as usize;
            for u in self.g.neighbors(v) {
                if u > v {
                    let pu = colors[u] as usize;
                    let t = pair_index(pv.min(pu), pv.max(pu));
                    code[t >> 6] |= 1u64 << (63 - (t & 63));
                }
            }
        }
        code
    }

    /// True when every pair in the cell has identical adjacency outside the
    /// pair itself (interchangeable open or closed twins).
    fn all_twins(&self, cell: &[u32]) -> bool {
        let stride = self.g.stride();
        for (a, &u) in cell.iter().enumerate() {
            for &w in &cell[a + 1..] {
                let (u, w) = (u as usize, w as usize);
                let ru = self.g.row(u);
                let rw = self.g.row(w);
                for k in 0..stride {
                    let mut x = ru[k] ^ rw[k];
                    if u >> 6 == k {
                        x &= !(1u64 << (u & 63));
                    }
                    if w >> 6 == k {
                        x &= !(1u64 << (w & 63));
                    }
                    if x != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn count_classes(colors: &[u32]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m as usize + 1)
}

fn distinct_count(colors: &[u32]) -> usize {
    let mut sorted: Vec<u32> = colors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions as cons;

    #[test]
    fn cycle_relabelings_agree() {
        let c5 = cons::cycle(5).unwrap();
        let base = canonical_form(&c5);
        let perms = [
            vec![2, 0, 4, 1, 3],
            vec![4, 3, 2, 1, 0],
            vec![1, 3, 0, 4, 2],
        ];
        for p in &perms {
            assert_eq!(canonical_form(&c5.permuted(p)), base);
        }
    }

    #[test]
    fn distinguishes_same_degree_sequence() {
        // K_{1,3} vs C_3 ∪ K_1: same order, different edge structure.
        let star = cons::complete_bipartite(1, 3).unwrap();
        let tri = cons::complete(3)
            .unwrap()
            .disjoint_union(&Graph::empty(1).unwrap())
            .unwrap();
        assert_ne!(canonical_form(&star), canonical_form(&tri));
        // C_6 vs 2C_3: both 2-regular on 6 vertices.
        let c6 = cons::cycle(6).unwrap();
        let c3 = cons::complete(3).unwrap();
        let two_c3 = c3.disjoint_union(&c3).unwrap();
        assert_ne!(canonical_form(&c6), canonical_form(&two_c3));
        assert!(!are_isomorphic(&c6, &two_c3));
    }

    #[test]
    fn g1_two_drawings_agree() {
        // Left drawing: K_5 on v2..v6 plus v1 adjacent to v2, v3.
        let mut edges = Vec::new();
        for u in 1..6 {
            for v in u + 1..6 {
                edges.push((u, v));
            }
        }
        edges.push((0, 1));
        edges.push((0, 2));
        let left = Graph::from_edges(6, &edges).unwrap();
        assert_eq!(canonical_form(&left), canonical_form(&cons::g1()));
    }

    #[test]
    fn relabeling_reproduces_canonical_graph() {
        for g in [cons::g2(), cons::prism(1).unwrap(), cons::turan_graph(7, 3).unwrap()] {
            let cf = canonical_form(&g);
            assert_eq!(g.permuted(cf.relabeling()), cf.graph());
        }
    }

    #[test]
    fn symmetric_graphs_are_fast_and_stable() {
        // Twin collapse handles complete multipartite and empty graphs.
        for g in [
            Graph::empty(16).unwrap(),
            cons::complete(16).unwrap(),
            cons::complete_bipartite(8, 8).unwrap(),
            cons::turan_graph(15, 3).unwrap(),
        ] {
            let cf = canonical_form(&g);
            assert_eq!(cf, canonical_form(&g.permuted(&reversal(g.order()))));
        }
    }

    fn reversal(n: usize) -> Vec<usize> {
        (0..n).rev().collect()
    }

    #[test]
    fn zero_and_one_vertex() {
        let g0 = Graph::empty(0).unwrap();
        assert_eq!(canonical_form(&g0).graph6(), "?");
        let g1 = Graph::empty(1).unwrap();
        assert_eq!(canonical_form(&g1).graph6(), "@");
    }
}
