//! Exact isomorphism, induced-subgraph search and canonical forms.
//!
//! Everything here is plain backtracking with colour-refinement pruning, which
//! is ample for graphs of a few dozen vertices.

use std::collections::BTreeMap;

use crate::budget;
use crate::graph::{Graph, VertexSet};

/// Stable colour refinement run jointly on several graphs so that colours are
/// comparable across them. Returns one colour vector per graph.
fn joint_refinement(graphs: &[&Graph]) -> Vec<Vec<usize>> {
    let mut colours: Vec<Vec<usize>> = graphs
        .iter()
        .map(|g| (0..g.n()).map(|v| g.degree(v)).collect())
        .collect();
    let mut classes = usize::MAX;
    loop {
        let mut dict: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let sigs: Vec<Vec<(usize, Vec<usize>)>> = graphs
            .iter()
            .zip(&colours)
            .map(|(g, col)| {
                (0..g.n())
                    .map(|v| {
                        let mut nb: Vec<usize> = g.neighbors(v).iter().map(|w| col[w]).collect();
                        nb.sort_unstable();
                        (col[v], nb)
                    })
                    .collect()
            })
            .collect();
        for s in sigs.iter().flatten() {
            dict.entry(s.clone()).or_insert(0);
        }
        for (k, id) in dict.values_mut().enumerate() {
            *id = k;
        }
        let next: Vec<Vec<usize>> = sigs
            .iter()
            .map(|gs| gs.iter().map(|s| dict[s]).collect())
            .collect();
        let count = dict.len();
        colours = next;
        if count == classes {
            return colours;
        }
        classes = count;
    }
}

fn histogram(colours: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &c in colours {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}

/// Order in which pattern vertices are matched: each next vertex has the most
/// already-placed neighbours, ties broken by rarer colour then index.
fn matching_order(g: &Graph, colours: &[usize]) -> Vec<usize> {
    let freq = histogram(colours);
    let mut placed = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(g.n());
    for _ in 0..g.n() {
        let v = (0..g.n())
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                (
                    g.neighbors(v).intersection(placed).len(),
                    std::cmp::Reverse(freq[&colours[v]]),
                    g.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex remains");
        placed.insert(v);
        order.push(v);
    }
    order
}

fn image(set: VertexSet, map: &[usize]) -> VertexSet {
    set.iter().map(|v| map[v]).collect()
}

/// Returns a bijection `f` with `u ~ v` in `g` iff `f[u] ~ f[v]` in `h`.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let colours = joint_refinement(&[g, h]);
    if histogram(&colours[0]) != histogram(&colours[1]) {
        return None;
    }
    let order = matching_order(g, &colours[0]);
    let mut map = vec![usize::MAX; g.n()];
    let mut placed = VertexSet::EMPTY;
    let mut used = VertexSet::EMPTY;
    let ok = extend_iso(
        g,
        h,
        &colours[0],
        &colours[1],
        &order,
        0,
        &mut map,
        &mut placed,
        &mut used,
    );
    ok.then_some(map)
}

#[allow(clippy::too_many_arguments)]
fn extend_iso(
    g: &Graph,
    h: &Graph,
    gc: &[usize],
    hc: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    placed: &mut VertexSet,
    used: &mut VertexSet,
) -> bool {
    budget::checkpoint();
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let want = image(g.neighbors(v).intersection(*placed), map);
    for c in h.vertices().difference(*used) {
        if hc[c] != gc[v] || h.neighbors(c).intersection(*used) != want {
            continue;
        }
        map[v] = c;
        placed.insert(v);
        used.insert(c);
        if extend_iso(g, h, gc, hc, order, depth + 1, map, placed, used) {
            return true;
        }
        placed.remove(v);
        used.remove(c);
    }
    map[v] = usize::MAX;
    false
}

/// Finds an injective map `f` from `pattern` into `g` such that the image
/// induces a copy of `pattern`: `u ~ v` iff `f[u] ~ f[v]`.
pub fn find_induced(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.n() > g.n() {
        return None;
    }
    let pc: Vec<usize> = vec![0; pattern.n()];
    let order = matching_order(pattern, &pc);
    let mut map = vec![usize::MAX; pattern.n()];
    let mut placed = VertexSet::EMPTY;
    let mut used = VertexSet::EMPTY;
    extend_induced(g, pattern, &order, 0, &mut map, &mut placed, &mut used).then_some(map)
}

fn extend_induced(
    g: &Graph,
    p: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    placed: &mut VertexSet,
    used: &mut VertexSet,
) -> bool {
    budget::checkpoint();
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let want = image(p.neighbors(v).intersection(*placed), map);
    // Candidates must be adjacent to every mapped neighbour.
    let mut cands = g.vertices().difference(*used);
    for w in want {
        cands = cands.intersection(g.neighbors(w));
    }
    for c in cands {
        if g.degree(c) < p.degree(v) || g.neighbors(c).intersection(*used) != want {
            continue;
        }
        map[v] = c;
        placed.insert(v);
        used.insert(c);
        if extend_induced(g, p, order, depth + 1, map, placed, used) {
            return true;
        }
        placed.remove(v);
        used.remove(c);
    }
    map[v] = usize::MAX;
    false
}

/// Checks that `map` witnesses `g ≅ h` (or an induced embedding when `h` is larger).
pub fn is_induced_embedding(pattern: &Graph, g: &Graph, map: &[usize]) -> bool {
    if map.len() != pattern.n() || map.iter().any(|&x| x >= g.n()) {
        return false;
    }
    let img: VertexSet = map.iter().copied().collect();
    if img.len() != map.len() {
        return false;
    }
    (0..pattern.n()).all(|u| {
        (0..pattern.n()).all(|v| u == v || pattern.has_edge(u, v) == g.has_edge(map[u], map[v]))
    })
}

/// Isomorphism-invariant certificate: the adjacency rows of the graph under its
/// canonical labelling. Equal certificates ⟺ isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u64>);

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_adjacency_unchecked(self.0.clone())
    }
}

/// Canonical labelling by individualisation and refinement: `labelling[v]` is
/// the canonical position of `v`. The certificate is the lexicographically
/// largest relabelled adjacency over all leaves of the search tree.
pub fn canonical_form(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    if g.n() == 0 {
        return (CanonicalForm(Vec::new()), Vec::new());
    }
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    let cells = vec![(0..g.n()).collect::<Vec<_>>()];
    canon_search(g, cells, &mut best);
    let (rows, labelling) = best.unwrap_or_default();
    (CanonicalForm(rows), labelling)
}

fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<VertexSet> = cells.iter().map(|c| c.iter().copied().collect()).collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    (
                        masks
                            .iter()
                            .map(|m| g.neighbors(v).intersection(*m).len())
                            .collect(),
                        v,
                    )
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for k in 1..=keyed.len() {
                if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                    next.push(keyed[start..k].iter().map(|x| x.1).collect());
                    start = k;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn canon_search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    budget::checkpoint();
    let cells = refine(g, cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let mut labelling = vec![0; g.n()];
            for (pos, cell) in cells.iter().enumerate() {
                labelling[cell[0]] = pos;
            }
            let rows = g.permuted(&labelling).adjacency().to_vec();
            if best.as_ref().is_none_or(|(b, _)| rows > *b) {
                *best = Some((rows, labelling));
            }
        }
        Some(target) => {
            for &v in &cells[target] {
                let mut split = cells[..target].to_vec();
                split.push(vec![v]);
                split.push(cells[target].iter().copied().filter(|&w| w != v).collect());
                split.extend_from_slice(&cells[target + 1..]);
                canon_search(g, split, best);
            }
        }
    }
}
