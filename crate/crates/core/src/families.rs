//! Generators for the named graph families and fixtures.
//!
//! Every generator is deterministic. Vertex numbering conventions:
//!
//! * circulant and musical graphs: `0..n` around the cycle;
//! * Johnson graphs: 2-subsets of `{1..m}` in lexicographic order, and for
//!   `J'(m,2)` the singletons `{1}..{m}` after all pairs;
//! * vertex-clique graphs: one block per source vertex in source order, with
//!   cross edges using the lowest free slot of each block;
//! * `X(n; l1..lk)`: the clique `x_0..x_{n-1}` first, then the extra cycle
//!   vertices cycle by cycle. Cycle `i` passes through `x_{2i}` and `x_{2i+1}`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph family member. Serializes as its short textual form, e.g. `"musical:5"`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    /// `K_n` minus the edge between its last two vertices.
    CompleteMinusEdge(usize),
    CompleteBipartite(usize, usize),
    Circulant {
        n: usize,
        jumps: Vec<usize>,
    },
    Johnson(usize),
    JohnsonPrime(usize),
    Musical(usize),
    /// Overlaps are the sizes of `C_i ∩ C_{i+1}`; a single overlap applies to every pair.
    PathOfCliques {
        sizes: Vec<usize>,
        overlaps: Vec<usize>,
    },
    /// As [`FamilySpec::PathOfCliques`], with a final overlap between the last and first clique.
    CycleOfCliques {
        sizes: Vec<usize>,
        overlaps: Vec<usize>,
    },
    VertexCliqueOf(Box<FamilySpec>),
    XGraph {
        n: usize,
        cycles: Vec<usize>,
    },
    /// Wheel on `n` vertices: hub `0` and rim cycle `1..n`.
    Wheel(usize),
    T3,
    Fig1TwoTree,
    CartesianK2Kn(usize),
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

fn pairs(m: usize) -> Vec<(usize, usize)> {
    (0..m)
        .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
        .collect()
}

impl FamilySpec {
    pub fn kind(&self) -> &'static str {
        use FamilySpec::*;
        match self {
            Complete(_) => "complete",
            Path(_) => "path",
            Cycle(_) => "cycle",
            CompleteMinusEdge(_) => "complete_minus_edge",
            CompleteBipartite(..) => "complete_bipartite",
            Circulant { .. } => "circulant",
            Johnson(_) => "johnson",
            JohnsonPrime(_) => "johnson_prime",
            Musical(_) => "musical",
            PathOfCliques { .. } => "path_of_cliques",
            CycleOfCliques { .. } => "cycle_of_cliques",
            VertexCliqueOf(_) => "vertex_clique_of",
            XGraph { .. } => "X_graph",
            Wheel(_) => "wheel",
            T3 => "T3",
            Fig1TwoTree => "fig1_2tree",
            CartesianK2Kn(_) => "cartesian_K2_Kn",
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        use FamilySpec::*;
        match self {
            Complete(n) => {
                if *n == 0 {
                    return Err(invalid("complete graph needs n >= 1"));
                }
                complete(*n)
            }
            Path(n) => {
                if *n == 0 {
                    return Err(invalid("path needs n >= 1"));
                }
                Graph::from_edges(*n, (1..*n).map(|i| (i - 1, i)))
            }
            Cycle(n) => {
                if *n < 3 {
                    return Err(invalid("cycle needs n >= 3"));
                }
                Graph::from_edges(*n, (0..*n).map(|i| (i, (i + 1) % n)))
            }
            CompleteMinusEdge(n) => {
                if *n < 2 {
                    return Err(invalid("K_n minus an edge needs n >= 2"));
                }
                let n = *n;
                Graph::from_edges(n, pairs(n).into_iter().filter(|&e| e != (n - 2, n - 1)))
            }
            CompleteBipartite(a, b) => {
                if *a == 0 || *b == 0 {
                    return Err(invalid("complete bipartite parts must be non-empty"));
                }
                Graph::from_edges(
                    a + b,
                    (0..*a).flat_map(|u| (*a..a + b).map(move |v| (u, v))),
                )
            }
            Circulant { n, jumps } => circulant(*n, jumps),
            Johnson(m) => johnson(*m, false),
            JohnsonPrime(m) => johnson(*m, true),
            Musical(n) => {
                if *n < 3 {
                    return Err(invalid("musical graph needs n >= 3"));
                }
                let n = *n;
                let order = 2 * n;
                let mut edges = Vec::new();
                for i in 0..order {
                    for d in [1, n - 1, n] {
                        let j = (i + d) % order;
                        if i != j {
                            edges.push((i.min(j), i.max(j)));
                        }
                    }
                }
                edges.sort_unstable();
                edges.dedup();
                Graph::from_edges(order, edges)
            }
            PathOfCliques { sizes, overlaps } => cliques_chain(sizes, overlaps, false),
            CycleOfCliques { sizes, overlaps } => cliques_chain(sizes, overlaps, true),
            VertexCliqueOf(inner) => vertex_clique_graph(&inner.generate()?),
            XGraph { n, cycles } => x_graph(*n, cycles),
            Wheel(n) => {
                if *n < 4 {
                    return Err(invalid("wheel needs n >= 4"));
                }
                let rim = n - 1;
                Graph::from_edges(*n, (1..*n).flat_map(|i| [(0, i), (i, 1 + i % rim)]))
            }
            T3 => {
                // A..F = 0..5
                let g = Graph::from_edges(
                    6,
                    [
                        (0, 1),
                        (0, 2),
                        (1, 2),
                        (1, 3),
                        (1, 4),
                        (2, 4),
                        (2, 5),
                        (3, 4),
                        (4, 5),
                    ],
                )?;
                Ok(g.with_names(letters(6)))
            }
            Fig1TwoTree => {
                let g =
                    Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 3), (0, 2), (2, 4), (3, 4)])?;
                Ok(g.with_names(letters(5)))
            }
            CartesianK2Kn(n) => {
                if *n == 0 {
                    return Err(invalid("K2 x Kn needs n >= 1"));
                }
                let n = *n;
                let mut edges: Vec<(usize, usize)> = Vec::new();
                for side in 0..2 {
                    edges.extend(
                        pairs(n)
                            .into_iter()
                            .map(|(i, j)| (side * n + i, side * n + j)),
                    );
                }
                edges.extend((0..n).map(|i| (i, n + i)));
                Graph::from_edges(2 * n, edges)
            }
        }
    }
}

fn letters(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| ((b'A' + i as u8) as char).to_string())
        .collect()
}

fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, pairs(n))
}

fn circulant(n: usize, jumps: &[usize]) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("circulant needs n >= 1"));
    }
    if jumps.windows(2).any(|w| w[0] >= w[1]) {
        return Err(invalid("circulant jumps must be strictly increasing"));
    }
    if jumps.iter().any(|&k| k == 0 || 2 * k > n) {
        return Err(invalid("circulant jumps must satisfy 1 <= k < (n+1)/2"));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for &k in jumps {
            let j = (i + k) % n;
            edges.push((i.min(j), i.max(j)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, edges)
}

fn johnson(m: usize, with_singletons: bool) -> Result<Graph> {
    if m < 2 && !with_singletons || m == 0 {
        return Err(invalid("Johnson graph parameter too small"));
    }
    let mut sets: Vec<Vec<usize>> = pairs(m).into_iter().map(|(a, b)| vec![a, b]).collect();
    if with_singletons {
        sets.extend((0..m).map(|a| vec![a]));
    }
    let n = sets.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if sets[i].iter().any(|a| sets[j].contains(a)) {
                edges.push((i, j));
            }
        }
    }
    let names = sets
        .iter()
        .map(|s| {
            format!(
                "{{{}}}",
                s.iter()
                    .map(|a| (a + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect();
    Ok(Graph::from_edges(n, edges)?.with_names(names))
}

fn cliques_chain(sizes: &[usize], overlaps: &[usize], closed: bool) -> Result<Graph> {
    let k = sizes.len();
    let links = if closed { k } else { k.saturating_sub(1) };
    if k == 0 || closed && k < 3 {
        return Err(invalid(if closed {
            "cycle of cliques needs >= 3 cliques"
        } else {
            "path of cliques needs a clique"
        }));
    }
    let overlaps: Vec<usize> = match overlaps.len() {
        1 => vec![overlaps[0]; links],
        len if len == links => overlaps.to_vec(),
        _ => return Err(invalid(format!("expected {links} overlaps"))),
    };
    // Overlap i sits between clique i and clique (i+1) mod k.
    let before = |i: usize| -> usize {
        if i > 0 {
            overlaps[i - 1]
        } else if closed {
            overlaps[k - 1]
        } else {
            0
        }
    };
    let after = |i: usize| -> usize {
        if i < links {
            overlaps[i]
        } else {
            0
        }
    };
    for i in 0..links {
        let j = (i + 1) % k;
        if overlaps[i] == 0 || overlaps[i] >= sizes[i].min(sizes[j]) {
            return Err(invalid(format!(
                "overlap {i} must be non-empty and smaller than both cliques"
            )));
        }
    }
    for (i, &size) in sizes.iter().enumerate() {
        if before(i) + after(i) > size {
            return Err(invalid(format!("clique {i} is too small for its overlaps")));
        }
    }
    // Layout: clique i owns its private block followed by its shared block with i+1.
    let mut private = Vec::with_capacity(k);
    let mut shared = Vec::with_capacity(k);
    let mut next = 0;
    for (i, &size) in sizes.iter().enumerate() {
        let p = size - before(i) - after(i);
        private.push(next..next + p);
        next += p;
        shared.push(next..next + after(i));
        next += after(i);
    }
    let mut edges = Vec::new();
    for i in 0..k {
        let mut members: Vec<usize> = private[i].clone().chain(shared[i].clone()).collect();
        if i > 0 {
            members.extend(shared[i - 1].clone());
        } else if closed {
            members.extend(shared[k - 1].clone());
        }
        for (a, &u) in members.iter().enumerate() {
            for &v in &members[a + 1..] {
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(next, edges)
}

fn x_graph(n: usize, cycles: &[usize]) -> Result<Graph> {
    let k = cycles.len();
    if n < 2 * k {
        return Err(invalid("X graph needs n >= 2k clique vertices"));
    }
    if cycles.iter().any(|&l| l < 3) {
        return Err(invalid("X graph cycles need length >= 3"));
    }
    let mut edges = pairs(n);
    let mut next = n;
    for (i, &l) in cycles.iter().enumerate() {
        let (a, b) = (2 * i, 2 * i + 1);
        let mut prev = a;
        for _ in 0..l - 2 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((b, prev));
    }
    Graph::from_edges(next, edges)
}

/// Replaces every vertex `v` by a clique on `d(v)` vertices and every edge by
/// one edge between the two blocks, so each block vertex has at most one
/// neighbour outside its block.
pub fn vertex_clique_graph(g: &Graph) -> Result<Graph> {
    if let Some(v) = g.isolated_vertices().first() {
        return Err(Error::IsolatedVertex(v));
    }
    let mut offset = Vec::with_capacity(g.n());
    let mut total = 0;
    for v in 0..g.n() {
        offset.push(total);
        total += g.degree(v);
    }
    let mut edges = Vec::new();
    for (v, &start) in offset.iter().enumerate() {
        let block = start..start + g.degree(v);
        for a in block.clone() {
            for b in a + 1..block.end {
                edges.push((a, b));
            }
        }
    }
    let mut used = vec![0; g.n()];
    for (u, v) in g.edges() {
        let a = offset[u] + used[u];
        let b = offset[v] + used[v];
        used[u] += 1;
        used[v] += 1;
        edges.push((a, b));
    }
    let names = (0..g.n())
        .flat_map(|v| (0..g.degree(v)).map(move |s| format!("{}.{}", g.name(v), s)))
        .collect();
    Ok(Graph::from_edges(total, edges)?.with_names(names))
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Complete(n) => write!(f, "K:{n}"),
            Path(n) => write!(f, "P:{n}"),
            Cycle(n) => write!(f, "C:{n}"),
            CompleteMinusEdge(n) => write!(f, "Kminus:{n}"),
            CompleteBipartite(a, b) => write!(f, "Kb:{a},{b}"),
            Circulant { n, jumps } => write!(f, "circ:{n}:{}", join(jumps)),
            Johnson(m) => write!(f, "J:{m}"),
            JohnsonPrime(m) => write!(f, "Jprime:{m}"),
            Musical(n) => write!(f, "musical:{n}"),
            PathOfCliques { sizes, overlaps } => {
                write!(f, "poc:{}:{}", join(sizes), join(overlaps))
            }
            CycleOfCliques { sizes, overlaps } => {
                write!(f, "coc:{}:{}", join(sizes), join(overlaps))
            }
            VertexCliqueOf(inner) => write!(f, "vc:{inner}"),
            XGraph { n, cycles } => write!(f, "X:{n}:{}", join(cycles)),
            Wheel(n) => write!(f, "W:{n}"),
            T3 => f.write_str("T3"),
            Fig1TwoTree => f.write_str("fig1"),
            CartesianK2Kn(n) => write!(f, "K2xK:{n}"),
        }
    }
}

/// Grammar: `kind[:args]`, where args are `:`-separated fields of
/// `,`-separated integers. `vc:` takes a nested spec.
///
/// ```text
/// K:n  P:n  C:n  Kminus:n  Kb:a,b  W:n  T3  fig1  K2xK:n
/// circ:n:k1,k2,..   J:m   Jprime:m   musical:n
/// poc:s1,s2,..:o1,..   coc:s1,s2,..:o1,..   X:n:l1,l2,..   vc:<spec>
/// ```
pub const GRAMMAR: &str = "K:n | P:n | C:n | Kminus:n | Kb:a,b | W:n | T3 | fig1 | K2xK:n | circ:n:k1,k2,.. | J:m | Jprime:m | musical:n | poc:s1,..:o1,.. | coc:s1,..:o1,.. | X:n:l1,.. | vc:<spec>";

impl Serialize for FamilySpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FamilySpec", 2)?;
        st.serialize_field("kind", self.kind())?;
        st.serialize_field("spec", &self.to_string())?;
        st.end()
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use FamilySpec::*;
        let s = s.trim();
        let (kind, rest) = match s.split_once(':') {
            Some((k, r)) => (k, Some(r)),
            None => (s, None),
        };
        if matches!(kind, "vc" | "vertex_clique_of") {
            let inner = rest.ok_or_else(|| invalid("vc needs a nested spec"))?;
            return Ok(VertexCliqueOf(Box::new(inner.parse()?)));
        }
        let fields: Vec<Vec<usize>> = match rest {
            None => Vec::new(),
            Some(r) => r
                .split(':')
                .map(|field| {
                    field
                        .split(',')
                        .map(|x| {
                            x.trim()
                                .parse::<usize>()
                                .map_err(|_| invalid(format!("bad number '{x}' in '{s}'")))
                        })
                        .collect()
                })
                .collect::<Result<_>>()?,
        };
        let scalar = |idx: usize| -> Result<usize> {
            match fields.get(idx).map(Vec::as_slice) {
                Some([x]) => Ok(*x),
                _ => Err(invalid(format!(
                    "'{s}': expected a single integer in field {}",
                    idx + 1
                ))),
            }
        };
        let list = |idx: usize| -> Result<Vec<usize>> {
            fields
                .get(idx)
                .cloned()
                .ok_or_else(|| invalid(format!("'{s}': missing field {}", idx + 1)))
        };
        let arity = |want: usize| -> Result<()> {
            if fields.len() == want {
                Ok(())
            } else {
                Err(invalid(format!(
                    "'{s}': expected {want} field(s); grammar: {GRAMMAR}"
                )))
            }
        };
        let spec = match kind {
            "K" | "complete" => {
                arity(1)?;
                Complete(scalar(0)?)
            }
            "P" | "path" => {
                arity(1)?;
                Path(scalar(0)?)
            }
            "C" | "cycle" => {
                arity(1)?;
                Cycle(scalar(0)?)
            }
            "Kminus" | "complete_minus_edge" => {
                arity(1)?;
                CompleteMinusEdge(scalar(0)?)
            }
            "Kb" | "complete_bipartite" => {
                arity(1)?;
                match list(0)?.as_slice() {
                    [a, b] => CompleteBipartite(*a, *b),
                    _ => return Err(invalid("Kb takes a,b")),
                }
            }
            "circ" | "circulant" => {
                arity(2)?;
                Circulant {
                    n: scalar(0)?,
                    jumps: list(1)?,
                }
            }
            "J" | "johnson" => {
                arity(1)?;
                Johnson(scalar(0)?)
            }
            "Jprime" | "johnson_prime" => {
                arity(1)?;
                JohnsonPrime(scalar(0)?)
            }
            "musical" | "M" => {
                arity(1)?;
                Musical(scalar(0)?)
            }
            "poc" | "path_of_cliques" => {
                arity(2)?;
                PathOfCliques {
                    sizes: list(0)?,
                    overlaps: list(1)?,
                }
            }
            "coc" | "cycle_of_cliques" => {
                arity(2)?;
                CycleOfCliques {
                    sizes: list(0)?,
                    overlaps: list(1)?,
                }
            }
            "X" | "X_graph" => {
                arity(2)?;
                XGraph {
                    n: scalar(0)?,
                    cycles: list(1)?,
                }
            }
            "W" | "wheel" => {
                arity(1)?;
                Wheel(scalar(0)?)
            }
            "T3" => {
                arity(0)?;
                T3
            }
            "fig1" | "fig1_2tree" => {
                arity(0)?;
                Fig1TwoTree
            }
            "K2xK" | "cartesian_K2_Kn" => {
                arity(1)?;
                CartesianK2Kn(scalar(0)?)
            }
            other => {
                return Err(invalid(format!(
                    "unknown family '{other}'; grammar: {GRAMMAR}"
                )))
            }
        };
        Ok(spec)
    }
}

/// The cover `{C_1..C_m}` of `J'(m,2)` where `C_i` holds every set containing `i`.
pub fn johnson_prime_star_cover(m: usize) -> Vec<crate::graph::VertexSet> {
    let ps = pairs(m);
    (0..m)
        .map(|i| {
            let mut c: crate::graph::VertexSet = ps
                .iter()
                .enumerate()
                .filter(|&(_, &(a, b))| a == i || b == i)
                .map(|(k, _)| k)
                .collect();
            c.insert(ps.len() + i);
            c
        })
        .collect()
}
