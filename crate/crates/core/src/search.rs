//! Exact Turán-number oracle over isomorphism classes.
//!
//! Graphs are generated level by level: every class on `m` vertices is
//! extended by one vertex in all `2^m` ways, children already containing a
//! forbidden pattern are discarded (containment is monotone under adding
//! vertices and edges, and any new copy must use the new vertex), and the
//! level is deduplicated by canonical form. A seeded lower bound prunes any
//! partial graph that cannot reach it even if all remaining vertex pairs
//! become edges; every induced-subgraph chain of a graph meeting the bound
//! survives that test, so the extremal set stays complete.

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::containment::{contains, contains_using, Pattern};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard feasibility limits for exhaustive class enumeration.
const GUARD_ORDER: usize = 10;
const MAX_SEARCH_ORDER: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Report only the maximum edge count.
    MaxOnly,
    /// Also collect every extremal class.
    EnumerateExtremal,
}

/// Configuration for [`turan_exact`].
#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub n: usize,
    pub forbidden: Vec<Pattern>,
    pub mode: SearchMode,
    /// Verified lower bound on the maximum (edge count of a known free
    /// graph). Enables bound pruning; never changes the result.
    pub seed_lower_bound: Option<u64>,
    /// Cap on extension nodes; exceeding it yields a non-exhaustive result.
    pub node_budget: Option<u64>,
    /// Worker count; 0 picks the default parallelism.
    pub threads: usize,
    /// Permits order 11 (max-only, seeded); orders above 11 are rejected.
    pub allow_large: bool,
}

impl SearchConfig {
    pub fn new(n: usize, forbidden: Vec<Pattern>) -> SearchConfig {
        SearchConfig {
            n,
            forbidden,
            mode: SearchMode::EnumerateExtremal,
            seed_lower_bound: None,
            node_budget: None,
            threads: 0,
            allow_large: false,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Extension candidates examined (including bound-pruned ones).
    pub nodes_explored: u64,
    pub pruned_by_bound: u64,
    pub wall_time_ms: u128,
}

/// Outcome of an exact search.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub max_edges: u64,
    /// Extremal classes sorted by canonical bytes; empty in max-only mode.
    pub extremal: Vec<CanonicalForm>,
    /// False iff the node budget stopped the search early. Non-exhaustive
    /// results are lower bounds only.
    pub exhaustive: bool,
    pub stats: SearchStats,
}

#[inline]
fn pairs(m: usize) -> u64 {
    (m as u64) * (m as u64).saturating_sub(1) / 2
}

/// Maximizes edges over all forbidden-free graphs on `config.n` vertices.
pub fn turan_exact(config: &SearchConfig) -> Result<SearchResult> {
    let n = config.n;
    if n > MAX_SEARCH_ORDER {
        return Err(Error::SearchInfeasible {
            n,
            hint: format!("orders above {MAX_SEARCH_ORDER} are beyond desk scale"),
        });
    }
    if n > GUARD_ORDER {
        if !config.allow_large {
            return Err(Error::SearchInfeasible {
                n,
                hint: "set allow_large to override the order-10 guard".to_owned(),
            });
        }
        if config.mode != SearchMode::MaxOnly || config.seed_lower_bound.is_none() {
            return Err(Error::SearchInfeasible {
                n,
                hint: "order 11 requires max-only mode and a seeded lower bound".to_owned(),
            });
        }
    }
    if config.forbidden.iter().any(|p| p.order() == 0) {
        return Err(Error::NoFreeGraphs { n });
    }

    let start = Instant::now();
    let run = with_pool(config.threads, || {
        run_levels(
            n,
            &config.forbidden,
            config.seed_lower_bound,
            config.node_budget,
        )
    })?;
    let mut stats = SearchStats {
        nodes_explored: run.nodes,
        pruned_by_bound: run.pruned,
        wall_time_ms: 0,
    };

    if !run.exhaustive {
        let max_edges = run
            .survivors
            .iter()
            .map(|s| s.edges)
            .max()
            .unwrap_or(0)
            .max(config.seed_lower_bound.unwrap_or(0));
        stats.wall_time_ms = start.elapsed().as_millis();
        return Ok(SearchResult {
            max_edges,
            extremal: Vec::new(),
            exhaustive: false,
            stats,
        });
    }

    if run.survivors.is_empty() {
        return match config.seed_lower_bound {
            Some(seed) if !run.died_out => Err(Error::SeedExceedsMaximum { seed }),
            _ => Err(Error::NoFreeGraphs { n }),
        };
    }
    let max_edges = run.survivors.iter().map(|s| s.edges).max().expect("nonempty");
    let extremal = match config.mode {
        SearchMode::MaxOnly => Vec::new(),
        SearchMode::EnumerateExtremal => run
            .survivors
            .iter()
            .filter(|s| s.edges == max_edges)
            .map(|s| canonical_form(&s.graph))
            .collect(),
    };
    stats.wall_time_ms = start.elapsed().as_millis();
    Ok(SearchResult {
        max_edges,
        extremal,
        exhaustive: true,
        stats,
    })
}

/// Visits every isomorphism class of forbidden-free graphs on exactly `n`
/// vertices once, in canonical-byte order, and returns the class count.
pub fn enumerate_free_graphs(
    n: usize,
    forbidden: &[Pattern],
    node_budget: Option<u64>,
    mut visitor: impl FnMut(&Graph),
) -> Result<u64> {
    if n > GUARD_ORDER {
        return Err(Error::SearchInfeasible {
            n,
            hint: format!("full enumeration is guarded at order {GUARD_ORDER}"),
        });
    }
    if forbidden.iter().any(|p| p.order() == 0) {
        return Err(Error::NoFreeGraphs { n });
    }
    let run = run_levels(n, forbidden, None, node_budget);
    if !run.exhaustive {
        return Err(Error::BudgetExhausted { explored: run.nodes });
    }
    for s in &run.survivors {
        visitor(&s.graph);
    }
    Ok(run.survivors.len() as u64)
}

/// All isomorphism classes on exactly `n` vertices, canonically labeled.
pub fn all_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    enumerate_free_graphs(n, &[], None, |g| out.push(g.clone()))
        .expect("unrestricted enumeration within guard");
    out
}

struct Survivor {
    key: String,
    graph: Graph,
    edges: u64,
}

struct LevelsRun {
    survivors: Vec<Survivor>,
    nodes: u64,
    pruned: u64,
    exhaustive: bool,
    /// True when some level before the last came out empty (no free graphs
    /// at all, as opposed to none meeting the seed bound).
    died_out: bool,
}

fn with_pool<T: Send>(threads: usize, job: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Parallel {
            reason: e.to_string(),
        })?;
    Ok(pool.install(job))
}

fn run_levels(
    n: usize,
    patterns: &[Pattern],
    seed: Option<u64>,
    budget: Option<u64>,
) -> LevelsRun {
    let nodes = AtomicU64::new(0);
    let pruned = AtomicU64::new(0);
    let stop = AtomicBool::new(false);

    let root = Graph::empty(0).expect("order 0");
    let mut level: Vec<Survivor> = vec![Survivor {
        key: crate::graph6::encode(&root),
        graph: root,
        edges: 0,
    }];
    let mut died_out = false;

    for m in 0..n {
        // A child on m+1 vertices must still be able to reach the seed with
        // every remaining pair filled in.
        let child_threshold = seed.map(|s| s.saturating_sub(pairs(n) - pairs(m + 1)));
        let maps: Vec<HashMap<String, (Graph, u64)>> = level
            .par_iter()
            .map(|parent| {
                let mut local: HashMap<String, (Graph, u64)> = HashMap::new();
                if stop.load(Ordering::Relaxed) {
                    return local;
                }
                let mut local_nodes = 0u64;
                let mut local_pruned = 0u64;
                for mask in 0u64..(1u64 << m) {
                    if local_nodes.is_multiple_of(256) && stop.load(Ordering::Relaxed) {
                        break;
                    }
                    local_nodes += 1;
                    let e = parent.edges + mask.count_ones() as u64;
                    if let Some(t) = child_threshold {
                        if e < t {
                            local_pruned += 1;
                            continue;
                        }
                    }
                    let child = parent.graph.extended_with_mask(mask);
                    if patterns
                        .iter()
                        .any(|p| contains_using(&child, p, m).is_some())
                    {
                        continue;
                    }
                    let cf = canonical_form(&child);
                    local
                        .entry(cf.graph6().to_owned())
                        .or_insert_with(|| (child.permuted(cf.relabeling()), e));
                }
                let total = nodes.fetch_add(local_nodes, Ordering::Relaxed) + local_nodes;
                pruned.fetch_add(local_pruned, Ordering::Relaxed);
                if let Some(b) = budget {
                    if total > b {
                        stop.store(true, Ordering::Relaxed);
                    }
                }
                local
            })
            .collect();

        let mut merged: HashMap<String, (Graph, u64)> = HashMap::new();
        for map in maps {
            merged.extend(map);
        }
        let mut next: Vec<Survivor> = merged
            .into_iter()
            .map(|(key, (graph, edges))| Survivor { key, graph, edges })
            .collect();
        next.sort_unstable_by(|a, b| a.key.cmp(&b.key));

        if stop.load(Ordering::Relaxed) {
            return LevelsRun {
                survivors: if m + 1 == n { next } else { Vec::new() },
                nodes: nodes.into_inner(),
                pruned: pruned.into_inner(),
                exhaustive: false,
                died_out: false,
            };
        }
        if next.is_empty() && m + 1 < n {
            died_out = seed.is_none();
            level = next;
            break;
        }
        level = next;
    }

    LevelsRun {
        survivors: if n == 0 { level } else if level.first().map_or(0, |s| s.graph.order()) == n { level } else { Vec::new() },
        nodes: nodes.into_inner(),
        pruned: pruned.into_inner(),
        exhaustive: true,
        died_out,
    }
}

/// Result of an exhaustive scan over optional-edge subsets on a fixed body.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedBodyResult {
    /// Maximum total edges over forbidden-free supergraphs; `None` when the
    /// body itself already contains a forbidden pattern.
    pub max_edges: Option<u64>,
    /// Every maximizing subset of optional edges, in mask order.
    pub maximizing: Vec<Vec<(usize, usize)>>,
}

/// Maximizes edges over supergraphs of a fixed labeled body obtained by
/// adding subsets of `optional_edges`, subject to forbidden patterns.
pub fn max_supergraph_over_fixed_body(
    body: &Graph,
    optional_edges: &[(usize, usize)],
    forbidden: &[Pattern],
) -> Result<FixedBodyResult> {
    const SUBSET_CAP: usize = 24;
    if optional_edges.len() > SUBSET_CAP {
        return Err(Error::SearchInfeasible {
            n: optional_edges.len(),
            hint: format!("fixed-body scan is limited to {SUBSET_CAP} optional edges"),
        });
    }
    let mut seen = std::collections::HashSet::new();
    for &(u, v) in optional_edges {
        if u >= body.order() || v >= body.order() {
            return Err(Error::VertexOutOfRange {
                vertex: u.max(v),
                order: body.order(),
            });
        }
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        if body.has_edge(u, v) || !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Construction {
                reason: format!("optional edge ({u},{v}) duplicates the body or the list"),
            });
        }
    }

    let body_edges = body.edge_count() as u64;
    let mut best: Option<u64> = None;
    let mut maximizing: Vec<Vec<(usize, usize)>> = Vec::new();
    for mask in 0u32..(1u32 << optional_edges.len()) {
        let subset: Vec<(usize, usize)> = optional_edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let mut g = body.clone();
        for &(u, v) in &subset {
            g.set_edge(u, v);
        }
        if forbidden.iter().any(|p| contains(&g, p).is_some()) {
            continue;
        }
        let total = body_edges + subset.len() as u64;
        if best.is_none_or(|b| total > b) {
            best = Some(total);
            maximizing.clear();
            maximizing.push(subset);
        } else if best == Some(total) {
            maximizing.push(subset);
        }
    }
    Ok(FixedBodyResult {
        max_edges: best,
        maximizing,
    })
}
