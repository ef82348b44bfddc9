//! Compressed cliques graphs.
//!
//! Given a min-max clique covering `C_1..C_l` with simple intersection, every
//! vertex lies in one or two cliques. The cells `C_{i,j} = C_i ∩ C_j` and the
//! private parts `C_{i,i}` partition the vertex set; contracting each
//! non-empty cell to a single vertex `v_{i,j}` gives the compressed cliques
//! graph, in which `v_{i,j} ~ v_{i',j'}` exactly when the labels share an index.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::cover::{self, CliqueCover, Flag};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::iso;

/// Label `{i,j}` of a cell, with `i <= j`; `i == j` marks a private cell.
/// Indices are zero-based positions in the source cover and display one-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CellLabel {
    pub i: usize,
    pub j: usize,
}

impl CellLabel {
    pub fn new(a: usize, b: usize) -> Self {
        CellLabel {
            i: a.min(b),
            j: a.max(b),
        }
    }

    pub fn is_private(self) -> bool {
        self.i == self.j
    }

    pub fn contains(self, k: usize) -> bool {
        self.i == k || self.j == k
    }

    pub fn meets(self, other: CellLabel) -> bool {
        other.contains(self.i) || other.contains(self.j)
    }
}

impl fmt::Display for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_private() {
            write!(f, "{{{}}}", self.i + 1)
        } else {
            write!(f, "{{{},{}}}", self.i + 1, self.j + 1)
        }
    }
}

#[derive(Clone, Debug)]
pub struct CompressedGraph {
    graph: Graph,
    labels: Vec<CellLabel>,
    phi: Vec<usize>,
    source_cover: CliqueCover,
}

impl CompressedGraph {
    /// The compressed graph; vertex names are the cell labels.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> &[CellLabel] {
        &self.labels
    }

    pub fn source_cover(&self) -> &CliqueCover {
        &self.source_cover
    }

    /// Compressed vertex for each source vertex.
    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    /// Source vertices mapped to compressed vertex `x`.
    pub fn preimage(&self, x: usize) -> VertexSet {
        self.phi
            .iter()
            .enumerate()
            .filter(|&(_, &y)| y == x)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn preimage_of_set(&self, xs: VertexSet) -> VertexSet {
        self.phi
            .iter()
            .enumerate()
            .filter(|&(_, &y)| xs.contains(y))
            .map(|(v, _)| v)
            .collect()
    }

    pub fn vertex_of(&self, label: CellLabel) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }
}

fn require(flag: Flag, what: &'static str) -> Result<()> {
    if flag.is_true() {
        Ok(())
    } else {
        Err(Error::CoverRequirement(what))
    }
}

fn checked_cover(g: &Graph, c: &CliqueCover) -> Result<CliqueCover> {
    let f = c.flags();
    let c = if [
        f.covers_all_edges,
        f.all_maximal,
        f.minimum_size,
        f.simple_intersection,
    ]
    .contains(&Flag::Unchecked)
    {
        c.clone().certify(g)?
    } else {
        c.clone()
    };
    let f = c.flags();
    require(f.covers_all_edges, "does not cover every edge")?;
    require(f.all_maximal, "has a non-maximal clique")?;
    require(f.minimum_size, "is not of minimum size")?;
    require(f.simple_intersection, "lacks simple intersection")?;
    Ok(c)
}

fn cell_map(c: &CliqueCover, n: usize) -> BTreeMap<CellLabel, VertexSet> {
    let mut out: BTreeMap<CellLabel, VertexSet> = BTreeMap::new();
    for v in 0..n {
        let mut idx = c
            .cliques()
            .iter()
            .enumerate()
            .filter(|(_, k)| k.contains(v))
            .map(|(i, _)| i);
        let a = idx.next().expect("cover touches every vertex");
        let b = idx.next().unwrap_or(a);
        out.entry(CellLabel::new(a, b)).or_default().insert(v);
    }
    out
}

/// The non-empty cells of a min-max simply-intersecting cover.
pub fn cells(g: &Graph, c: &CliqueCover) -> Result<BTreeMap<CellLabel, VertexSet>> {
    let c = checked_cover(g, c)?;
    Ok(cell_map(&c, g.n()))
}

/// Contracts every cell of `c`. Compressed vertices are ordered by label.
pub fn compress(g: &Graph, c: &CliqueCover) -> Result<CompressedGraph> {
    let c = checked_cover(g, c)?;
    let cells = cell_map(&c, g.n());
    let labels: Vec<CellLabel> = cells.keys().copied().collect();
    let mut phi = vec![0; g.n()];
    for (x, members) in cells.values().enumerate() {
        for v in *members {
            phi[v] = x;
        }
    }
    let m = labels.len();
    let mut edges = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            if labels[a].meets(labels[b]) {
                edges.push((a, b));
            }
        }
    }
    let graph =
        Graph::from_edges(m, edges)?.with_names(labels.iter().map(|l| l.to_string()).collect());
    Ok(CompressedGraph {
        graph,
        labels,
        phi,
        source_cover: c,
    })
}

/// Compressions over every min-max simply-intersecting cover, in cover order.
pub fn all_compressions(g: &Graph) -> Result<Vec<CompressedGraph>> {
    cover::enumerate_minmax_si_covers(g)
        .iter()
        .map(|c| compress(g, c))
        .collect()
}

/// `𝒞(G)`, computed from the canonically first cover after checking that every
/// cover yields an isomorphic compressed graph.
pub fn compressed_cliques_graph(g: &Graph) -> Result<CompressedGraph> {
    let mut all = all_compressions(g)?;
    if all.is_empty() {
        return Err(Error::NotSimplyCoverable);
    }
    let first = &all[0];
    if all[1..]
        .iter()
        .any(|other| iso::are_isomorphic(first.graph(), other.graph()).is_none())
    {
        return Err(Error::NonUniqueCompression);
    }
    Ok(all.swap_remove(0))
}

pub fn phi_map(cg: &CompressedGraph, v: usize) -> usize {
    cg.phi[v]
}

/// Whether `𝒞(G) ≅ G`, which happens exactly when every cell is a single vertex.
pub fn is_self_compressed(g: &Graph) -> Result<bool> {
    let cg = compressed_cliques_graph(g)?;
    let by_cells = cg.graph.n() == g.n();
    let by_iso = by_cells && iso::are_isomorphic(cg.graph(), g).is_some();
    debug_assert_eq!(
        by_cells, by_iso,
        "cell criterion disagrees with isomorphism"
    );
    Ok(by_iso)
}

/// The cover `{D_1..D_l}` of the compressed graph, `D_i` being the vertices
/// whose label contains `i`. Flags are verified against the compressed graph.
pub fn induced_cover(cg: &CompressedGraph) -> CliqueCover {
    let l = cg.source_cover.len();
    let cliques = (0..l).map(|i| {
        cg.labels
            .iter()
            .enumerate()
            .filter(|(_, lab)| lab.contains(i))
            .map(|(x, _)| x)
            .collect::<VertexSet>()
    });
    CliqueCover::new(cliques)
        .certify(&cg.graph)
        .expect("label classes are cliques")
}
