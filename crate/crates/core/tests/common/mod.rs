//! Independent oracles for the integration suites.
//!
//! Everything here is deliberately naive and shares no code with the
//! engines it checks: containment enumerates injective maps, isomorphism
//! searches permutations directly, and graph enumeration walks all labeled
//! graphs.

#![allow(dead_code)]

use oddprism::graph::Graph;

/// All labeled graphs on `n` vertices (2^C(n,2) of them).
pub fn labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::with_capacity(1 << pairs.len());
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        out.push(Graph::from_edges(n, &edges).expect("valid edges"));
    }
    out
}

/// Subgraph containment by enumerating injective maps directly.
pub fn brute_force_contains(host: &Graph, pattern: &Graph) -> bool {
    let pn = pattern.order();
    let hn = host.order();
    if pn > hn {
        return false;
    }
    let mut map = vec![usize::MAX; pn];
    let mut used = vec![false; hn];
    fn go(
        host: &Graph,
        pattern: &Graph,
        map: &mut [usize],
        used: &mut [bool],
        depth: usize,
    ) -> bool {
        if depth == map.len() {
            return pattern
                .edges()
                .iter()
                .all(|&(u, v)| host.has_edge(map[u], map[v]));
        }
        for h in 0..used.len() {
            if used[h] {
                continue;
            }
            used[h] = true;
            map[depth] = h;
            if go(host, pattern, map, used, depth + 1) {
                used[h] = false;
                return true;
            }
            used[h] = false;
        }
        false
    }
    go(host, pattern, &mut map, &mut used, 0)
}

/// Isomorphism by permutation search with adjacency-consistent extension.
pub fn brute_force_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.order();
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(a: &Graph, b: &Graph, map: &mut [usize], used: &mut [bool], v: usize) -> bool {
        if v == map.len() {
            return true;
        }
        for w in 0..used.len() {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            if (0..v).any(|u| a.has_edge(u, v) != b.has_edge(map[u], w)) {
                continue;
            }
            used[w] = true;
            map[v] = w;
            if go(a, b, map, used, v + 1) {
                return true;
            }
            used[w] = false;
        }
        false
    }
    go(a, b, &mut map, &mut used, 0)
}

/// Exact Turán number by scanning every labeled graph with the naive
/// containment check; returns the maximum and all extremal graphs reduced
/// to isomorphism classes via the permutation oracle.
pub fn naive_turan(n: usize, pattern: &Graph) -> (u64, Vec<Graph>) {
    let mut max = 0u64;
    let mut extremal: Vec<Graph> = Vec::new();
    for g in labeled_graphs(n) {
        if brute_force_contains(&g, pattern) {
            continue;
        }
        let e = g.edge_count() as u64;
        match e.cmp(&max) {
            std::cmp::Ordering::Greater => {
                max = e;
                extremal = vec![g];
            }
            std::cmp::Ordering::Equal => {
                if !extremal.iter().any(|h| brute_force_isomorphic(h, &g)) {
                    extremal.push(g);
                }
            }
            std::cmp::Ordering::Less => {}
        }
    }
    (max, extremal)
}

/// Erdős–Rényi graph from explicit random bits.
pub fn random_graph(rng: &mut impl rand::Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid edges")
}

pub fn random_permutation(rng: &mut impl rand::Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        perm.swap(i, j);
    }
    perm
}
