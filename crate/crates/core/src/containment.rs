//! Exact non-induced subgraph containment.
//!
//! Containment here always means "contains a (not necessarily induced)
//! subgraph isomorphic to the pattern". The engine is backtracking over
//! pattern vertices in a connectivity-maximizing order, filtering host
//! candidates by degree and adjacency to already-mapped neighbors.

use crate::constructions;
use crate::graph::Graph;

/// A preprocessed search pattern.
///
/// The search order starts at a maximum-degree vertex and greedily appends
/// the vertex with the most already-ordered neighbors, so every non-first
/// vertex has an earlier neighbor whenever the pattern is connected.
#[derive(Clone, Debug)]
pub struct Pattern {
    graph: Graph,
    order: Vec<usize>,
    earlier: Vec<Vec<usize>>,
    degrees: Vec<usize>,
}

impl Pattern {
    pub fn new(graph: Graph) -> Pattern {
        let n = graph.order();
        let degrees = graph.degrees();
        let mut order: Vec<usize> = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        for _ in 0..n {
            let mut best: Option<(usize, usize, usize)> = None;
            for v in 0..n {
                if placed[v] {
                    continue;
                }
                let back = graph.neighbors(v).filter(|&u| placed[u]).count();
                let key = (back, degrees[v]);
                if best.is_none_or(|(bb, bd, _)| key > (bb, bd)) {
                    best = Some((back, degrees[v], v));
                }
            }
            let (_, _, v) = best.expect("unplaced vertex exists");
            placed[v] = true;
            order.push(v);
        }
        let earlier = order
            .iter()
            .enumerate()
            .map(|(d, &v)| {
                (0..d)
                    .filter(|&e| graph.has_edge(order[e], v))
                    .collect::<Vec<_>>()
            })
            .collect();
        Pattern {
            graph,
            order,
            earlier,
            degrees,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

/// Returns an embedding (pattern vertex -> host vertex) iff `host` contains
/// the pattern as a subgraph.
pub fn contains(host: &Graph, pattern: &Pattern) -> Option<Vec<usize>> {
    embed(host, pattern, None)
}

/// Like [`contains`], but only admits embeddings whose image includes
/// `required`; used for incremental freeness checks where the host grew by
/// one vertex.
pub(crate) fn contains_using(host: &Graph, pattern: &Pattern, required: usize) -> Option<Vec<usize>> {
    (0..pattern.order()).find_map(|q| embed(host, pattern, Some((q, required))))
}

fn embed(host: &Graph, pattern: &Pattern, pin: Option<(usize, usize)>) -> Option<Vec<usize>> {
    let pn = pattern.order();
    let hn = host.order();
    if pn > hn || pattern.graph.edge_count() > host.edge_count() {
        return None;
    }
    if pn == 0 {
        return Some(Vec::new());
    }
    // Sorted degree dominance: a cheap necessary condition.
    let mut hd = host.degrees();
    let mut pd = pattern.degrees.clone();
    hd.sort_unstable_by(|a, b| b.cmp(a));
    pd.sort_unstable_by(|a, b| b.cmp(a));
    if pd.iter().zip(hd.iter()).any(|(p, h)| p > h) {
        return None;
    }

    let mut by_degree: Vec<usize> = (0..hn).collect();
    by_degree.sort_by_key(|&v| host.degree(v));

    let mut st = Embedder {
        host,
        pattern,
        pin,
        by_degree,
        host_degrees: host.degrees(),
        used: vec![false; hn],
        images: vec![usize::MAX; pn],
        cand_bufs: vec![vec![0u64; host.stride().max(1)]; pn],
    };
    if st.extend(0) {
        let mut out = vec![usize::MAX; pn];
        for (d, &v) in pattern.order.iter().enumerate() {
            out[v] = st.images[d];
        }
        Some(out)
    } else {
        None
    }
}

struct Embedder<'a> {
    host: &'a Graph,
    pattern: &'a Pattern,
    pin: Option<(usize, usize)>,
    by_degree: Vec<usize>,
    host_degrees: Vec<usize>,
    used: Vec<bool>,
    images: Vec<usize>,
    cand_bufs: Vec<Vec<u64>>,
}

impl Embedder<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.pattern.order() {
            return true;
        }
        let pv = self.pattern.order[depth];
        let need = self.pattern.degrees[pv];
        let earlier = &self.pattern.earlier[depth];

        // Candidate bitmask: intersection of mapped-neighbor rows. Each
        // depth owns its buffer so recursion below cannot clobber it.
        let mut cand = std::mem::take(&mut self.cand_bufs[depth]);
        let words = cand.len();
        if let Some(&first) = earlier.first() {
            cand.copy_from_slice(self.host.row(self.images[first]));
            for &e in &earlier[1..] {
                let row = self.host.row(self.images[e]);
                for w in 0..words {
                    cand[w] &= row[w];
                }
            }
        } else {
            cand.fill(!0u64);
        }

        let pinned_here = match self.pin {
            Some((q, f)) if q == pv => Some(f),
            _ => None,
        };
        let reserved = match self.pin {
            Some((q, f)) if q != pv => Some(f),
            _ => None,
        };

        let mut tried: Vec<usize> = Vec::new();
        let mut found = false;
        // Iterating a degree-sorted list realizes ascending degree-slack.
        for idx in 0..self.by_degree.len() {
            let u = match pinned_here {
                Some(f) => {
                    if idx > 0 {
                        break;
                    }
                    f
                }
                None => self.by_degree[idx],
            };
            if self.used[u] || Some(u) == reserved {
                continue;
            }
            if cand[u >> 6] & (1u64 << (u & 63)) == 0 {
                continue;
            }
            if self.host_degrees[u] < need {
                continue;
            }
            // Interchangeable-twin skip: if an identically wired candidate
            // already failed here, this one fails too.
            if tried.iter().any(|&t| self.twins(t, u)) {
                continue;
            }
            self.used[u] = true;
            self.images[depth] = u;
            if self.extend(depth + 1) {
                found = true;
                self.used[u] = false;
                break;
            }
            self.used[u] = false;
            tried.push(u);
        }
        self.cand_bufs[depth] = cand;
        found
    }

    fn twins(&self, a: usize, b: usize) -> bool {
        let ra = self.host.row(a);
        let rb = self.host.row(b);
        for w in 0..ra.len() {
            let mut x = ra[w] ^ rb[w];
            if a >> 6 == w {
                x &= !(1u64 << (a & 63));
            }
            if b >> 6 == w {
                x &= !(1u64 << (b & 63));
            }
            if x != 0 {
                return false;
            }
        }
        true
    }
}

/// True iff `g` has no `P_4` subgraph: every component is a triangle or a
/// star.
pub fn is_p4_free(g: &Graph) -> bool {
    for comp in g.components() {
        let sub = g.induced(&comp);
        let n = sub.order();
        let e = sub.edge_count();
        if n <= 2 {
            continue;
        }
        if n == 3 {
            // P_3 and C_3 are both P_4-free; any connected 3-vertex graph is one of them.
            continue;
        }
        let max_deg = sub.degrees().into_iter().max().unwrap_or(0);
        if !(e == n - 1 && max_deg == n - 1) {
            return false;
        }
    }
    true
}

/// True iff `g` contains no odd prism `C_{2k+1} □ P_2`.
pub fn prism_free(g: &Graph, k: usize) -> bool {
    assert!(k >= 1, "prism parameter must be >= 1");
    if g.order() < 2 * (2 * k + 1) {
        return true;
    }
    if k == 1 && g.order() <= 64 {
        return !contains_triangular_prism(g);
    }
    let pattern = Pattern::new(constructions::prism(k).expect("k >= 1"));
    contains(g, &pattern).is_none()
}

/// Triangular-prism fast path: seed with vertex-disjoint triangle pairs and
/// test the six cyclic correspondences for a perfect matching.
fn contains_triangular_prism(g: &Graph) -> bool {
    let n = g.order();
    debug_assert!(n <= 64);
    let rows: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
    let mut tris: Vec<([usize; 3], u64)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rows[u] & (1 << v) == 0 {
                continue;
            }
            let above_v = if v + 1 >= 64 {
                0
            } else {
                !((1u64 << (v + 1)) - 1)
            };
            let mut m = rows[u] & rows[v] & above_v;
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                tris.push(([u, v, w], (1 << u) | (1 << v) | (1 << w)));
            }
        }
    }
    for (a, &(t1, m1)) in tris.iter().enumerate() {
        for &(t2, m2) in &tris[a + 1..] {
            if m1 & m2 != 0 {
                continue;
            }
            if matchable(&rows, t1, t2) {
                return true;
            }
        }
    }
    false
}

fn matchable(rows: &[u64], t1: [usize; 3], t2: [usize; 3]) -> bool {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 2, 0],
        [2, 0, 1],
        [0, 2, 1],
        [2, 1, 0],
        [1, 0, 2],
    ];
    PERMS.iter().any(|p| {
        (0..3).all(|i| rows[t1[i]] & (1u64 << t2[p[i]]) != 0)
    })
}
