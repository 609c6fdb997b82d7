//! Decomposition families: the minimal graphs M such that embedding M into
//! one part of a large balanced (χ(L)-1)-partite Turán graph creates a copy
//! of L.
//!
//! Membership is tested against the host `(M ∪ K̄_t) ⊗ T_{p-1}((p-1)t)`.
//! Containment is monotone both in t (the host grows) and in M (a subgraph's
//! host embeds in the supergraph's host), so a single test at `t_max`
//! decides the existential question and one-step edge/vertex deletions
//! decide minimality.

use std::collections::HashMap;

use crate::canon::{canonical_form, CanonicalForm};
use crate::containment::{contains, Pattern};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search;

/// Default embedding-size bound: an embedding of L uses at most |V(L)|
/// vertices in each part, so larger t cannot enable new containments.
pub fn default_t_max(l: &Graph) -> usize {
    l.order().max(1)
}

/// Membership verdict with the witness found, if any.
#[derive(Debug, Clone)]
pub struct MembershipVerdict {
    /// Passes containment for some `t <= t_max` and is minimal.
    pub is_member: bool,
    pub passes_containment: bool,
    pub minimal: bool,
    /// Smallest t with `L ⊆ (M ∪ K̄_t) ⊗ T_{p-1}((p-1)t)`.
    pub witness_t: Option<usize>,
    /// Embedding of L into that host (pattern vertex -> host vertex).
    pub embedding: Option<Vec<usize>>,
    /// The bound actually used, recorded for certificates.
    pub t_max: usize,
    /// `χ(L) - 1`, computed exactly from L.
    pub parts: usize,
}

fn parts_of(l: &Graph) -> Result<usize> {
    let chromatic = l.chromatic_number()?;
    if chromatic < 3 {
        return Err(Error::BipartiteDecomposition { chromatic });
    }
    Ok(chromatic - 1)
}

/// Host graph `(M ∪ K̄_t) ⊗ T_{p-1}((p-1)t)`; M occupies labels `0..|M|`.
fn host(m: &Graph, p: usize, t: usize) -> Result<Graph> {
    let side = m.disjoint_union(&Graph::empty(t)?)?;
    let rest = crate::constructions::turan_graph((p - 1) * t, p - 1)?;
    side.join(&rest)
}

fn passes_at(l: &Pattern, m: &Graph, p: usize, t: usize) -> Result<Option<Vec<usize>>> {
    Ok(contains(&host(m, p, t)?, l))
}

/// Decides membership of M in the decomposition family of L.
///
/// The part count is always computed from χ(L); the verdict requires both
/// containment for some `t <= t_max` and minimality (no proper subgraph of
/// M, by one edge or one vertex, also passes).
pub fn is_decomposition_member(l: &Graph, m: &Graph, t_max: usize) -> Result<MembershipVerdict> {
    if t_max == 0 {
        return Err(Error::Construction {
            reason: "t_max must be at least 1".to_owned(),
        });
    }
    let p = parts_of(l)?;
    let pattern = Pattern::new(l.clone());
    let mut verdict = MembershipVerdict {
        is_member: false,
        passes_containment: false,
        minimal: false,
        witness_t: None,
        embedding: None,
        t_max,
        parts: p,
    };
    // Monotone in t: failure at t_max refutes all smaller t.
    if passes_at(&pattern, m, p, t_max)?.is_none() {
        return Ok(verdict);
    }
    verdict.passes_containment = true;
    for t in 1..=t_max {
        if let Some(embedding) = passes_at(&pattern, m, p, t)? {
            verdict.witness_t = Some(t);
            verdict.embedding = Some(embedding);
            break;
        }
    }
    let mut memo = HashMap::new();
    verdict.minimal = is_minimal(&pattern, m, p, t_max, &mut memo)?;
    verdict.is_member = verdict.minimal;
    Ok(verdict)
}

/// No one-step deletion of M still passes; by monotonicity this settles
/// minimality over all proper subgraphs.
fn is_minimal(
    l: &Pattern,
    m: &Graph,
    p: usize,
    t_max: usize,
    memo: &mut HashMap<String, bool>,
) -> Result<bool> {
    for (u, v) in m.edges() {
        let mut edges = m.edges();
        edges.retain(|&e| e != (u, v));
        let smaller = Graph::from_edges(m.order(), &edges)?;
        if passes_memo(l, &smaller, p, t_max, memo)? {
            return Ok(false);
        }
    }
    for v in 0..m.order() {
        let keep: Vec<usize> = (0..m.order()).filter(|&u| u != v).collect();
        let smaller = m.induced(&keep);
        if passes_memo(l, &smaller, p, t_max, memo)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn passes_memo(
    l: &Pattern,
    m: &Graph,
    p: usize,
    t_max: usize,
    memo: &mut HashMap<String, bool>,
) -> Result<bool> {
    let key = canonical_form(m).graph6().to_owned();
    if let Some(&hit) = memo.get(&key) {
        return Ok(hit);
    }
    let pass = passes_at(l, m, p, t_max)?.is_some();
    memo.insert(key, pass);
    Ok(pass)
}

/// Computes the decomposition family of L restricted to members with at
/// most `m_max_vertices` vertices: all isomorphism classes without isolated
/// vertices that pass the containment test and are minimal, sorted by
/// canonical bytes.
pub fn decomposition_family(
    l: &Graph,
    m_max_vertices: usize,
    t_max: usize,
) -> Result<Vec<CanonicalForm>> {
    if m_max_vertices == 0 || t_max == 0 {
        return Err(Error::Construction {
            reason: "bounds must be at least 1".to_owned(),
        });
    }
    let p = parts_of(l)?;
    let pattern = Pattern::new(l.clone());
    let mut memo: HashMap<String, bool> = HashMap::new();
    let mut out: Vec<CanonicalForm> = Vec::new();
    for size in 1..=m_max_vertices {
        let mut candidates = Vec::new();
        search::enumerate_free_graphs(size, &[], None, |g| candidates.push(g.clone()))?;
        for cand in candidates {
            if cand.min_degree() != Some(0)
                && passes_memo(&pattern, &cand, p, t_max, &mut memo)?
                    && is_minimal(&pattern, &cand, p, t_max, &mut memo)?
                {
                    out.push(canonical_form(&cand));
                }
        }
    }
    out.sort();
    Ok(out)
}
