//! Maximal cliques, exact clique cover number and min-max clique coverings.
//!
//! Isolated vertices are covered by singleton cliques and counted, so
//! `CC(G)` is the size of the smallest set of cliques containing every edge
//! and every vertex.

use serde::Serialize;

use crate::budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Tri-state certificate flag.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flag {
    #[default]
    Unchecked,
    True,
    False,
}

impl Flag {
    pub fn is_true(self) -> bool {
        self == Flag::True
    }
}

impl From<bool> for Flag {
    fn from(b: bool) -> Self {
        if b {
            Flag::True
        } else {
            Flag::False
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct CoverFlags {
    pub covers_all_edges: Flag,
    pub all_maximal: Flag,
    pub minimum_size: Flag,
    pub simple_intersection: Flag,
}

impl CoverFlags {
    /// Min-max with simple intersection.
    pub fn is_simple_minmax(&self) -> bool {
        self.covers_all_edges.is_true()
            && self.all_maximal.is_true()
            && self.minimum_size.is_true()
            && self.simple_intersection.is_true()
    }
}

/// A list of cliques in canonical form (each clique sorted, cliques sorted,
/// no duplicates) plus certificate flags. Equality ignores the flags.
#[derive(Clone, Debug, Serialize)]
pub struct CliqueCover {
    cliques: Vec<VertexSet>,
    flags: CoverFlags,
}

impl PartialEq for CliqueCover {
    fn eq(&self, other: &Self) -> bool {
        self.cliques == other.cliques
    }
}

impl Eq for CliqueCover {}

impl PartialOrd for CliqueCover {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CliqueCover {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.cliques.cmp(&other.cliques)
    }
}

impl std::fmt::Display for CliqueCover {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("{")?;
        for (k, c) in self.cliques.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

impl CliqueCover {
    pub fn new<I: IntoIterator<Item = VertexSet>>(cliques: I) -> Self {
        let mut cliques: Vec<VertexSet> = cliques.into_iter().collect();
        cliques.sort();
        cliques.dedup();
        CliqueCover {
            cliques,
            flags: CoverFlags::default(),
        }
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn flags(&self) -> CoverFlags {
        self.flags
    }

    pub fn with_flags(mut self, flags: CoverFlags) -> Self {
        self.flags = flags;
        self
    }

    /// Number of cliques containing `v`.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.cliques.iter().filter(|c| c.contains(v)).count()
    }

    /// Every edge and every vertex of `g` lies in some listed clique.
    pub fn covers(&self, g: &Graph) -> bool {
        let touched = self
            .cliques
            .iter()
            .fold(VertexSet::EMPTY, |a, &c| a.union(c));
        touched == g.vertices()
            && g.edges()
                .all(|(u, v)| self.cliques.iter().any(|c| c.contains(u) && c.contains(v)))
    }

    pub fn all_maximal(&self, g: &Graph) -> bool {
        self.cliques.iter().all(|&c| is_maximal_clique(g, c))
    }

    /// Every vertex lies in at most two cliques, which is the same as every
    /// triple of distinct cliques having empty common intersection.
    pub fn has_simple_intersection(&self) -> bool {
        let mut once = 0u64;
        let mut twice = 0u64;
        for c in &self.cliques {
            let b = c.bits();
            if twice & b != 0 {
                return false;
            }
            twice |= once & b;
            once |= b;
        }
        true
    }

    /// Verifies every flag against `g`, computing `CC(g)` for the size flag.
    pub fn certify(self, g: &Graph) -> Result<Self> {
        let cc = clique_cover_number(g);
        self.certify_with(g, cc)
    }

    /// Like [`certify`](Self::certify) with a known clique cover number.
    pub fn certify_with(mut self, g: &Graph, cc: usize) -> Result<Self> {
        if let Some(c) = self
            .cliques
            .iter()
            .find(|&&c| !c.is_subset(g.vertices()) || !g.is_clique(c))
        {
            return Err(Error::NotAClique(c.to_string()));
        }
        let covers = self.covers(g);
        self.flags = CoverFlags {
            covers_all_edges: covers.into(),
            all_maximal: self.all_maximal(g).into(),
            minimum_size: (covers && self.len() == cc).into(),
            simple_intersection: self.has_simple_intersection().into(),
        };
        Ok(self)
    }
}

pub fn is_maximal_clique(g: &Graph, c: VertexSet) -> bool {
    g.is_clique(c)
        && !g
            .vertices()
            .difference(c)
            .iter()
            .any(|v| c.is_subset(g.neighbors(v)))
}

/// All inclusion-maximal cliques in canonical order (Bron–Kerbosch with pivoting).
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if g.n() > 0 {
        bron_kerbosch(
            g,
            VertexSet::EMPTY,
            g.vertices(),
            VertexSet::EMPTY,
            &mut out,
        );
    }
    out.sort();
    out
}

fn bron_kerbosch(
    g: &Graph,
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    budget::checkpoint();
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| p.intersection(g.neighbors(u)).len())
        .expect("p is non-empty");
    for v in p.difference(g.neighbors(pivot)) {
        let nv = g.neighbors(v);
        bron_kerbosch(g, r.with(v), p.intersection(nv), x.intersection(nv), out);
        p.remove(v);
        x.insert(v);
    }
}

/// Every clique with at least two vertices, plus singletons of isolated vertices.
pub fn all_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for m in maximal_cliques(g) {
        if m.len() == 1 {
            out.push(m);
            continue;
        }
        // Enumerate subsets of the maximal clique by bit tricks over its members.
        let members = m.to_vec();
        for mask in 1u64..(1 << members.len()) {
            if mask.count_ones() >= 2 {
                out.push(
                    members
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| mask >> k & 1 == 1)
                        .map(|(_, &v)| v)
                        .collect(),
                );
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Exact set-cover search over a fixed list of candidate cliques.
///
/// Elements are the edges of the graph; isolated vertices are handled by the
/// callers. Branches on the uncovered edge with the fewest remaining
/// candidates and prunes with a bound from pairwise incompatible edges (two
/// edges no single clique can cover together).
struct CoverSearch<'a> {
    g: &'a Graph,
    cands: &'a [VertexSet],
    simple: bool,
    find_first: bool,
    covered: Vec<u64>,
    load: Vec<u8>,
    chosen: Vec<usize>,
    forbidden: Vec<bool>,
    found: Vec<Vec<usize>>,
}

impl<'a> CoverSearch<'a> {
    fn new(g: &'a Graph, cands: &'a [VertexSet]) -> Self {
        CoverSearch {
            g,
            cands,
            simple: false,
            find_first: true,
            covered: vec![0; g.n()],
            load: vec![0; g.n()],
            chosen: Vec::new(),
            forbidden: vec![false; cands.len()],
            found: Vec::new(),
        }
    }

    fn uncovered(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.g.n()).flat_map(move |u| {
            let row = self.g.neighbors(u).bits() & !self.covered[u];
            let above = if u == 63 { 0 } else { u64::MAX << (u + 1) };
            VertexSet::from_bits(row & above)
                .iter()
                .map(move |v| (u, v))
        })
    }

    fn usable(&self, i: usize) -> bool {
        !self.forbidden[i] && (!self.simple || self.cands[i].iter().all(|v| self.load[v] < 2))
    }

    fn choose(&mut self, i: usize) {
        let c = self.cands[i];
        for v in c {
            self.covered[v] |= c.without(v).bits();
            self.load[v] += 1;
        }
        self.chosen.push(i);
    }

    fn restore(&mut self, saved: &[u64], i: usize) {
        self.covered.copy_from_slice(saved);
        for v in self.cands[i] {
            self.load[v] -= 1;
        }
        self.chosen.pop();
    }

    fn incompatible_bound(&self) -> usize {
        let mut picked: Vec<VertexSet> = Vec::new();
        for (u, v) in self.uncovered() {
            let e = VertexSet::from([u, v]);
            if picked.iter().all(|&f| !self.g.is_clique(e.union(f))) {
                picked.push(e);
            }
        }
        picked.len()
    }

    /// Returns false once the search should stop.
    fn run(&mut self, remaining: usize) -> bool {
        budget::checkpoint();
        let mut best: Option<(usize, (usize, usize))> = None;
        for (u, v) in self.uncovered() {
            let count = (0..self.cands.len())
                .filter(|&i| {
                    self.cands[i].contains(u) && self.cands[i].contains(v) && self.usable(i)
                })
                .count();
            if best.is_none_or(|(b, _)| count < b) {
                best = Some((count, (u, v)));
                if count == 0 {
                    break;
                }
            }
        }
        let Some((count, (u, v))) = best else {
            let mut sol = self.chosen.clone();
            sol.sort_unstable();
            self.found.push(sol);
            return !self.find_first;
        };
        if count == 0 || remaining == 0 || self.incompatible_bound() > remaining {
            return true;
        }
        let branch: Vec<usize> = (0..self.cands.len())
            .filter(|&i| self.cands[i].contains(u) && self.cands[i].contains(v) && self.usable(i))
            .collect();
        let saved = self.covered.clone();
        let mut keep_going = true;
        for &i in &branch {
            self.choose(i);
            keep_going = self.run(remaining - 1);
            self.restore(&saved, i);
            if !keep_going {
                break;
            }
            self.forbidden[i] = true;
        }
        for &i in &branch {
            self.forbidden[i] = false;
        }
        keep_going
    }
}

/// Greedy cover size over `cands`: an upper bound for the exact search.
fn greedy_cover_size(g: &Graph, cands: &[VertexSet]) -> usize {
    let mut s = CoverSearch::new(g, cands);
    let mut count = 0;
    while s.uncovered().next().is_some() {
        let i = (0..cands.len())
            .max_by_key(|&i| {
                let c = cands[i];
                (
                    c.iter()
                        .map(|v| (c.without(v).bits() & !s.covered[v]).count_ones())
                        .sum::<u32>(),
                    std::cmp::Reverse(i),
                )
            })
            .expect("an uncovered edge lies in some maximal clique");
        s.choose(i);
        count += 1;
    }
    count
}

fn edge_cliques(g: &Graph) -> Vec<VertexSet> {
    maximal_cliques(g)
        .into_iter()
        .filter(|c| c.len() >= 2)
        .collect()
}

/// Exact `CC(G)`.
pub fn clique_cover_number(g: &Graph) -> usize {
    let cands = edge_cliques(g);
    g.isolated_vertices().len() + edge_cover_number(g, &cands)
}

fn edge_cover_number(g: &Graph, cands: &[VertexSet]) -> usize {
    if g.edge_count() == 0 {
        return 0;
    }
    let upper = greedy_cover_size(g, cands);
    let lower = CoverSearch::new(g, cands).incompatible_bound();
    for k in lower..upper {
        let mut s = CoverSearch::new(g, cands);
        s.run(k);
        if !s.found.is_empty() {
            return k;
        }
    }
    upper
}

/// A minimum cover made of maximal cliques: the lexicographically least one in
/// canonical order.
pub fn minimum_cover(g: &Graph) -> CliqueCover {
    let cands = edge_cliques(g);
    let k = edge_cover_number(g, &cands);
    let mut chosen: Vec<usize> = Vec::new();
    let mut forbidden = vec![false; cands.len()];
    // Decide candidates in canonical order: take each one if a cover of size k
    // still exists using it and only later candidates.
    for i in 0..cands.len() {
        if chosen.len() == k {
            break;
        }
        let mut s = CoverSearch::new(g, &cands);
        for &j in &chosen {
            s.choose(j);
        }
        s.choose(i);
        s.forbidden.clone_from(&forbidden);
        s.run(k - chosen.len() - 1);
        if !s.found.is_empty() {
            chosen.push(i);
        }
        forbidden[i] = true;
    }
    debug_assert_eq!(chosen.len(), k);
    let cliques = chosen
        .iter()
        .map(|&i| cands[i])
        .chain(g.isolated_vertices().iter().map(VertexSet::singleton));
    let cover = CliqueCover::new(cliques);
    let si = cover.has_simple_intersection();
    cover.with_flags(CoverFlags {
        covers_all_edges: Flag::True,
        all_maximal: Flag::True,
        minimum_size: Flag::True,
        simple_intersection: si.into(),
    })
}

/// Extends every clique greedily by ascending vertex index until maximal.
/// Cliques that grow into the same maximal clique are merged.
pub fn maximalize_cover(g: &Graph, cover: &CliqueCover) -> Result<CliqueCover> {
    if let Some(c) = cover
        .cliques
        .iter()
        .find(|&&c| !c.is_subset(g.vertices()) || !g.is_clique(c))
    {
        return Err(Error::NotAClique(c.to_string()));
    }
    if !cover.covers(g) {
        return Err(Error::NotACover);
    }
    let out = CliqueCover::new(cover.cliques.iter().map(|&c| maximal_extension(g, c)));
    let minimum = if out.len() == cover.len() {
        cover.flags.minimum_size
    } else {
        Flag::Unchecked
    };
    let si = out.has_simple_intersection();
    Ok(out.with_flags(CoverFlags {
        covers_all_edges: Flag::True,
        all_maximal: Flag::True,
        minimum_size: minimum,
        simple_intersection: si.into(),
    }))
}

/// Grows a clique by adding vertices in ascending order while it stays a clique.
pub fn maximal_extension(g: &Graph, mut c: VertexSet) -> VertexSet {
    for v in 0..g.n() {
        if !c.contains(v) && c.is_subset(g.neighbors(v)) {
            c.insert(v);
        }
    }
    c
}

/// Every min-max clique covering with simple intersection, in canonical order.
pub fn enumerate_minmax_si_covers(g: &Graph) -> Vec<CliqueCover> {
    let cands = edge_cliques(g);
    let k = edge_cover_number(g, &cands);
    let isolated = g.isolated_vertices();
    let mut s = CoverSearch::new(g, &cands);
    s.simple = true;
    s.find_first = false;
    for v in isolated {
        s.load[v] = 1;
    }
    s.run(k);
    let flags = CoverFlags {
        covers_all_edges: Flag::True,
        all_maximal: Flag::True,
        minimum_size: Flag::True,
        simple_intersection: Flag::True,
    };
    let mut covers: Vec<CliqueCover> = s
        .found
        .into_iter()
        .filter(|sol| sol.len() == k)
        .map(|sol| {
            let cliques = sol
                .into_iter()
                .map(|i| cands[i])
                .chain(isolated.iter().map(VertexSet::singleton));
            CliqueCover::new(cliques).with_flags(flags)
        })
        .collect();
    covers.sort();
    covers.dedup();
    covers
}

/// All coverings by at most `max_size` arbitrary (not necessarily maximal)
/// cliques that have simple intersection.
pub fn simply_intersecting_covers(g: &Graph, max_size: usize) -> Vec<CliqueCover> {
    let isolated = g.isolated_vertices();
    if isolated.len() > max_size {
        return Vec::new();
    }
    let cands: Vec<VertexSet> = all_cliques(g)
        .into_iter()
        .filter(|c| c.len() >= 2)
        .collect();
    let mut s = CoverSearch::new(g, &cands);
    s.simple = true;
    s.find_first = false;
    for v in isolated {
        s.load[v] = 1;
    }
    s.run(max_size - isolated.len());
    let mut covers: Vec<CliqueCover> = s
        .found
        .into_iter()
        .map(|sol| {
            let cover = CliqueCover::new(
                sol.into_iter()
                    .map(|i| cands[i])
                    .chain(isolated.iter().map(VertexSet::singleton)),
            );
            let flags = CoverFlags {
                covers_all_edges: Flag::True,
                all_maximal: cover.all_maximal(g).into(),
                minimum_size: Flag::Unchecked,
                simple_intersection: Flag::True,
            };
            cover.with_flags(flags)
        })
        .collect();
    covers.sort();
    covers.dedup();
    covers
}
