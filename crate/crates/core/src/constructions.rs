//! Parameterized generators for every named graph and construction used by
//! the toolkit, with fixed vertex labelings.
//!
//! Labeling conventions:
//!
//! * `path(n)`, `cycle(n)`, `path_power(k, p)` label vertices `0..n-1` along
//!   the path/cycle, so the literature's `v_i` is vertex `i-1` here.
//! * `prism(k)` puts the first odd cycle on `0..=2k`, the second on
//!   `2k+1..=4k+1`, and matches `i` with `i + 2k + 1`.
//! * `h_construction(n, i)` and `f_construction(n, i, j)` use `0..i` as the
//!   embedded side `X` and `i..n` as the independent side `Y`; triangles fill
//!   consecutive label triples, a star's center is its lowest label.
//! * The fixtures `g1..g3`, `h1..h4` keep the six path-power core vertices at
//!   labels `0..6` and append attachment vertices after them.

use crate::error::{Error, Result};
use crate::formulas;
use crate::graph::Graph;

fn invalid(reason: impl Into<String>) -> Error {
    Error::Construction {
        reason: reason.into(),
    }
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.set_edge(u, v);
        }
    }
    Ok(g)
}

/// Complete bipartite graph `K_{s,t}` with sides `0..s` and `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    let mut g = Graph::empty(s.checked_add(t).ok_or(Error::CapacityExceeded {
        requested: usize::MAX,
        limit: crate::graph::MAX_ORDER,
    })?)?;
    for u in 0..s {
        for v in s..s + t {
            g.set_edge(u, v);
        }
    }
    Ok(g)
}

/// Path `P_n` on `n >= 1` vertices.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path requires n >= 1"));
    }
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        g.set_edge(v - 1, v);
    }
    Ok(g)
}

/// Cycle `C_n` on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle requires n >= 3"));
    }
    let mut g = path(n)?;
    g.set_edge(n - 1, 0);
    Ok(g)
}

/// Empty graph `K̄_n`.
pub fn empty_graph(n: usize) -> Result<Graph> {
    Graph::empty(n)
}

/// Balanced complete `r`-partite Turán graph `T_r(n)`.
///
/// The first `n mod r` parts have size `⌈n/r⌉`, the rest `⌊n/r⌋`; parts
/// occupy consecutive labels.
pub fn turan_graph(n: usize, r: usize) -> Result<Graph> {
    if r == 0 {
        return Err(invalid("Turán graph requires r >= 1"));
    }
    let mut g = Graph::empty(n)?;
    let q = n / r;
    let rem = n % r;
    let mut bounds = Vec::with_capacity(r + 1);
    bounds.push(0usize);
    for p in 0..r {
        let size = q + usize::from(p < rem);
        bounds.push(bounds[p] + size);
    }
    for p in 0..r {
        for u in bounds[p]..bounds[p + 1] {
            for v in bounds[p + 1]..n {
                g.set_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// `p`-th power of the path on `k` vertices: edge `uv` iff `|u - v| <= p`.
pub fn path_power(k: usize, p: usize) -> Result<Graph> {
    if k == 0 || p == 0 {
        return Err(invalid("path power requires k >= 1 and p >= 1"));
    }
    let mut g = Graph::empty(k)?;
    for u in 0..k {
        for v in u + 1..(u + p + 1).min(k) {
            g.set_edge(u, v);
        }
    }
    Ok(g)
}

/// Odd prism `C_{2k+1} □ P_2`, built directly from two cycles plus a
/// perfect matching. Agreement with the Cartesian product is a tested
/// invariant rather than the definition.
pub fn prism(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(invalid("prism requires k >= 1"));
    }
    let m = 2 * k + 1;
    let mut g = Graph::empty(2 * m)?;
    for v in 0..m {
        g.set_edge(v, (v + 1) % m);
        g.set_edge(m + v, m + (v + 1) % m);
        g.set_edge(v, m + v);
    }
    Ok(g)
}

/// `H_n^i`: `K_{i,n-i}` with `i/3` vertex-disjoint triangles embedded in the
/// side of size `i`. Requires `3 | i` and `i <= n`.
pub fn h_construction(n: usize, i: usize) -> Result<Graph> {
    if !i.is_multiple_of(3) {
        return Err(invalid(format!("H construction requires 3 | i, got i={i}")));
    }
    if i > n {
        return Err(invalid(format!("H construction requires i <= n, got i={i}, n={n}")));
    }
    let mut g = complete_bipartite(i, n - i)?;
    for t in 0..i / 3 {
        let b = 3 * t;
        g.set_edge(b, b + 1);
        g.set_edge(b + 1, b + 2);
        g.set_edge(b, b + 2);
    }
    Ok(g)
}

/// `F_n^{i,j}`: `K_{i,n-i}` with a star on `j` vertices (center `0`; `j = 1`
/// embeds a lone vertex) and `(i-j)/3` triangles in the side of size `i`,
/// star and triangles disjoint. Requires `3 ∤ i`, `1 <= j <= i`,
/// `3 | (i-j)` and `i <= n`.
pub fn f_construction(n: usize, i: usize, j: usize) -> Result<Graph> {
    if i.is_multiple_of(3) {
        return Err(invalid(format!("F construction requires 3 ∤ i, got i={i}")));
    }
    if j == 0 || j > i {
        return Err(invalid(format!("F construction requires 1 <= j <= i, got j={j}, i={i}")));
    }
    if !(i - j).is_multiple_of(3) {
        return Err(invalid(format!("F construction requires 3 | (i-j), got i={i}, j={j}")));
    }
    if i > n {
        return Err(invalid(format!("F construction requires i <= n, got i={i}, n={n}")));
    }
    let mut g = complete_bipartite(i, n - i)?;
    for leaf in 1..j {
        g.set_edge(0, leaf);
    }
    for t in 0..(i - j) / 3 {
        let b = j + 3 * t;
        g.set_edge(b, b + 1);
        g.set_edge(b + 1, b + 2);
        g.set_edge(b, b + 2);
    }
    Ok(g)
}

fn p6_squared() -> Graph {
    path_power(6, 2).expect("valid parameters")
}

fn with_attachment(g: &Graph, nbrs: &[usize]) -> Graph {
    g.with_appended_vertex(nbrs).expect("attachment within bounds")
}

/// `G_1`: `K_6` minus the star `{v_1v_4, v_1v_5, v_1v_6}`; equivalently `K_5`
/// on `v_2..v_6` plus `v_1` adjacent to `v_2, v_3`. 12 edges.
pub fn g1() -> Graph {
    let mut edges = Vec::new();
    for u in 0..6usize {
        for v in u + 1..6 {
            if u == 0 && v >= 3 {
                continue;
            }
            edges.push((u, v));
        }
    }
    Graph::from_edges(6, &edges).expect("fixed edge list")
}

/// `G_2`: `P_6^2` plus edges `v_1v_4`, `v_3v_6` and a vertex `v` adjacent to
/// `{v_1, v_2, v_3, v_4}`. 15 edges.
pub fn g2() -> Graph {
    let mut core = p6_squared();
    core.set_edge(0, 3);
    core.set_edge(2, 5);
    with_attachment(&core, &[0, 1, 2, 3])
}

/// `G_3`: `H_2` plus edges `v_1v_4`, `v_3v_6`. 19 edges.
pub fn g3() -> Graph {
    let mut g = h2();
    g.set_edge(0, 3);
    g.set_edge(2, 5);
    g
}

/// `H_1`: `P_6^2` plus `x` adjacent to `{v_1,v_2,v_3,v_4}` and `y` adjacent
/// to `{v_1,v_3,v_5,v_6}`; `x = 6`, `y = 7`.
pub fn h1() -> Graph {
    let g = with_attachment(&p6_squared(), &[0, 1, 2, 3]);
    with_attachment(&g, &[0, 2, 4, 5])
}

/// `H_2`: `P_6^2` plus `x` adjacent to `{v_1,v_2,v_3,v_4}` and `y` adjacent
/// to `{v_3,v_4,v_5,v_6}`; `x = 6`, `y = 7`.
pub fn h2() -> Graph {
    let g = with_attachment(&p6_squared(), &[0, 1, 2, 3]);
    with_attachment(&g, &[2, 3, 4, 5])
}

/// `H_3` on `n >= 8` vertices: `P_6^2` plus edge `v_3v_6`, `x` adjacent to
/// `{v_1,v_2,v_3,v_4}`, `y` adjacent to `{v_1,v_3,v_5,v_6}`, and `n - 8`
/// further independent vertices each adjacent to `{v_3,v_5,v_6}`.
pub fn h3(n: usize) -> Result<Graph> {
    if n < 8 {
        return Err(invalid(format!("H_3 requires n >= 8, got {n}")));
    }
    let mut core = p6_squared();
    core.set_edge(2, 5);
    let mut g = with_attachment(&core, &[0, 1, 2, 3]);
    g = with_attachment(&g, &[0, 2, 4, 5]);
    for _ in 8..n {
        g = with_attachment(&g, &[2, 4, 5]);
    }
    Ok(g)
}

/// `H_4` on `n >= 6` vertices: the six-vertex body of `G_1` plus `n - 6`
/// independent vertices each adjacent to `{v_1,v_2,v_3}`.
pub fn h4(n: usize) -> Result<Graph> {
    if n < 6 {
        return Err(invalid(format!("H_4 requires n >= 6, got {n}")));
    }
    let mut g = g1();
    for _ in 6..n {
        g = with_attachment(&g, &[0, 1, 2]);
    }
    Ok(g)
}

/// The complete list of extremal graphs for `P_4` on `n` vertices.
///
/// Variant order is fixed and documented:
/// index 0 is `tC_3 ∪ K_r` (with `r = n mod 3`), and for `r != 0` indices
/// `1 + ℓ` are `(t-ℓ-1)C_3 ∪ K_{1, 3ℓ+2+r}` for `ℓ = 0..t-1`. All members
/// have exactly `ex(n, P_4)` edges and are pairwise non-isomorphic.
pub fn p4_extremal_family(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0).expect("order 0")];
    }
    let t = n / 3;
    let r = n % 3;
    let mut out = Vec::new();
    let mut base = copies_of_triangle(t);
    if r > 0 {
        base = base
            .disjoint_union(&complete(r).expect("tiny"))
            .expect("within capacity");
    }
    out.push(base);
    if r > 0 {
        for l in 0..t {
            let star = complete_bipartite(1, 3 * l + 2 + r).expect("within capacity");
            let g = copies_of_triangle(t - l - 1)
                .disjoint_union(&star)
                .expect("within capacity");
            out.push(g);
        }
    }
    out
}

fn copies_of_triangle(t: usize) -> Graph {
    let tri = complete(3).expect("tiny");
    let mut g = Graph::empty(0).expect("order 0");
    for _ in 0..t {
        g = g.disjoint_union(&tri).expect("within capacity");
    }
    g
}

/// Extremal graphs for `P_k` on `n` vertices per the Faudree–Schelp /
/// Kopylov characterization: `tK_{k-1} ∪ K_r` first, then, when `k` is even
/// and `r ∈ {k/2, (k-2)/2}`, the graphs
/// `(t-s-1)K_{k-1} ∪ (K_{(k-2)/2} ⊗ K̄_{k/2+s(k-1)+r})` for `s = 0..t-1`.
pub fn path_extremal_family(n: usize, k: usize) -> Result<Vec<Graph>> {
    if k < 2 {
        return Err(invalid("path extremal family requires k >= 2"));
    }
    if k == 2 {
        return Ok(vec![Graph::empty(n)?]);
    }
    if n < k - 1 {
        return Ok(vec![complete(n)?]);
    }
    let t = n / (k - 1);
    let r = n % (k - 1);
    let clique = complete(k - 1)?;
    let mut base = Graph::empty(0)?;
    for _ in 0..t {
        base = base.disjoint_union(&clique)?;
    }
    base = base.disjoint_union(&complete(r)?)?;
    let mut out = vec![base];
    if k.is_multiple_of(2) && (r == k / 2 || r == (k - 2) / 2) {
        for s in 0..t {
            let joined = complete((k - 2) / 2)?.join(&Graph::empty(k / 2 + s * (k - 1) + r)?)?;
            let mut g = Graph::empty(0)?;
            for _ in 0..t - s - 1 {
                g = g.disjoint_union(&clique)?;
            }
            out.push(g.disjoint_union(&joined)?);
        }
    }
    Ok(out)
}

/// One extremal graph from the main theorem's family: `K_{part, n-part}`
/// with `p4_extremal_family(part)[variant]` embedded in the `part` side,
/// realized as a join with an independent set.
pub fn main_extremal(n: usize, part: usize, variant: usize) -> Result<Graph> {
    if part > n {
        return Err(invalid(format!("part {part} exceeds order {n}")));
    }
    let family = p4_extremal_family(part);
    if variant >= family.len() {
        return Err(Error::VariantOutOfRange {
            variant,
            available: family.len(),
        });
    }
    family[variant].join(&Graph::empty(n - part)?)
}

/// All prism-extremal graphs predicted by the main theorem: every maximizing
/// part size, every `P_4`-extremal variant, deduplicated up to isomorphism
/// and sorted by canonical bytes.
pub fn main_extremal_family(n: usize) -> Result<Vec<Graph>> {
    let mt = formulas::main_theorem_value(n);
    let mut seen = std::collections::BTreeMap::new();
    for &part in &mt.maximizers {
        for variant in 0..p4_extremal_family(part).len() {
            let g = main_extremal(n, part, variant)?;
            let cf = crate::canon::canonical_form(&g);
            seen.entry(cf.graph6().to_owned()).or_insert(g);
        }
    }
    Ok(seen.into_values().collect())
}

/// A symbolic construction identifier with its parameters.
///
/// The display / parse grammar is the CLI grammar: `K:n`, `K:s:t`, `P:n`,
/// `C:n`, `E:n`, `T:n:r`, `P^p:k`, `prism:k`, `H:n:i`, `F:n:i:j`, `H3:n`,
/// `H4:n`, bare `G1 G2 G3 H1 H2`, `p4x:n:variant`, `pathx:n:k:variant`,
/// `mainx:n:part:variant`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ConstructionSpec {
    Complete { n: usize },
    CompleteBipartite { s: usize, t: usize },
    Path { n: usize },
    Cycle { n: usize },
    Empty { n: usize },
    Turan { n: usize, parts: usize },
    PathPower { k: usize, power: usize },
    Prism { k: usize },
    H { n: usize, i: usize },
    F { n: usize, i: usize, j: usize },
    G1,
    G2,
    G3,
    H1,
    H2,
    H3 { n: usize },
    H4 { n: usize },
    P4Extremal { n: usize, variant: usize },
    PathExtremal { n: usize, k: usize, variant: usize },
    MainExtremal { n: usize, part: usize, variant: usize },
}

impl ConstructionSpec {
    /// Realizes the spec as a graph.
    pub fn build(&self) -> Result<Graph> {
        use ConstructionSpec::*;
        match *self {
            Complete { n } => complete(n),
            CompleteBipartite { s, t } => complete_bipartite(s, t),
            Path { n } => path(n),
            Cycle { n } => cycle(n),
            Empty { n } => empty_graph(n),
            Turan { n, parts } => turan_graph(n, parts),
            PathPower { k, power } => path_power(k, power),
            Prism { k } => prism(k),
            H { n, i } => h_construction(n, i),
            F { n, i, j } => f_construction(n, i, j),
            G1 => Ok(g1()),
            G2 => Ok(g2()),
            G3 => Ok(g3()),
            H1 => Ok(h1()),
            H2 => Ok(h2()),
            H3 { n } => h3(n),
            H4 { n } => h4(n),
            P4Extremal { n, variant } => {
                let family = p4_extremal_family(n);
                family.get(variant).cloned().ok_or(Error::VariantOutOfRange {
                    variant,
                    available: family.len(),
                })
            }
            PathExtremal { n, k, variant } => {
                let family = path_extremal_family(n, k)?;
                let available = family.len();
                family
                    .into_iter()
                    .nth(variant)
                    .ok_or(Error::VariantOutOfRange { variant, available })
            }
            MainExtremal { n, part, variant } => main_extremal(n, part, variant),
        }
    }

    /// Parses the CLI grammar.
    pub fn parse(s: &str) -> Result<ConstructionSpec> {
        use ConstructionSpec::*;
        let unknown = || Error::UnknownName { name: s.to_owned() };
        let parts: Vec<&str> = s.split(':').collect();
        let num = |tok: &str| tok.parse::<usize>().map_err(|_| unknown());
        let head = parts[0];
        if let Some(power) = head.strip_prefix("P^") {
            if parts.len() != 2 {
                return Err(unknown());
            }
            return Ok(PathPower {
                power: num(power)?,
                k: num(parts[1])?,
            });
        }
        match (head, parts.len()) {
            ("G1", 1) => Ok(G1),
            ("G2", 1) => Ok(G2),
            ("G3", 1) => Ok(G3),
            ("H1", 1) => Ok(H1),
            ("H2", 1) => Ok(H2),
            ("H3", 2) => Ok(H3 { n: num(parts[1])? }),
            ("H4", 2) => Ok(H4 { n: num(parts[1])? }),
            ("K", 2) => Ok(Complete { n: num(parts[1])? }),
            ("K", 3) => Ok(CompleteBipartite {
                s: num(parts[1])?,
                t: num(parts[2])?,
            }),
            ("P", 2) => Ok(Path { n: num(parts[1])? }),
            ("C", 2) => Ok(Cycle { n: num(parts[1])? }),
            ("E", 2) => Ok(Empty { n: num(parts[1])? }),
            ("T", 3) => Ok(Turan {
                n: num(parts[1])?,
                parts: num(parts[2])?,
            }),
            ("prism", 2) => Ok(Prism { k: num(parts[1])? }),
            ("H", 3) => Ok(H {
                n: num(parts[1])?,
                i: num(parts[2])?,
            }),
            ("F", 4) => Ok(F {
                n: num(parts[1])?,
                i: num(parts[2])?,
                j: num(parts[3])?,
            }),
            ("p4x", 3) => Ok(P4Extremal {
                n: num(parts[1])?,
                variant: num(parts[2])?,
            }),
            ("pathx", 4) => Ok(PathExtremal {
                n: num(parts[1])?,
                k: num(parts[2])?,
                variant: num(parts[3])?,
            }),
            ("mainx", 4) => Ok(MainExtremal {
                n: num(parts[1])?,
                part: num(parts[2])?,
                variant: num(parts[3])?,
            }),
            _ => Err(unknown()),
        }
    }
}

impl std::fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use ConstructionSpec::*;
        match *self {
            Complete { n } => write!(f, "K:{n}"),
            CompleteBipartite { s, t } => write!(f, "K:{s}:{t}"),
            Path { n } => write!(f, "P:{n}"),
            Cycle { n } => write!(f, "C:{n}"),
            Empty { n } => write!(f, "E:{n}"),
            Turan { n, parts } => write!(f, "T:{n}:{parts}"),
            PathPower { k, power } => write!(f, "P^{power}:{k}"),
            Prism { k } => write!(f, "prism:{k}"),
            H { n, i } => write!(f, "H:{n}:{i}"),
            F { n, i, j } => write!(f, "F:{n}:{i}:{j}"),
            G1 => write!(f, "G1"),
            G2 => write!(f, "G2"),
            G3 => write!(f, "G3"),
            H1 => write!(f, "H1"),
            H2 => write!(f, "H2"),
            H3 { n } => write!(f, "H3:{n}"),
            H4 { n } => write!(f, "H4:{n}"),
            P4Extremal { n, variant } => write!(f, "p4x:{n}:{variant}"),
            PathExtremal { n, k, variant } => write!(f, "pathx:{n}:{k}:{variant}"),
            MainExtremal { n, part, variant } => write!(f, "mainx:{n}:{part}:{variant}"),
        }
    }
}
