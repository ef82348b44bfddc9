//! Positive zero forcing.
//!
//! Under the positive colour change rule, let `W_1..W_k` be the vertex sets
//! of the components of the graph induced by the white vertices. A black
//! vertex `u` forces `w` when `w` is its only white neighbour inside some
//! `W_i`. The classic rule instead requires `w` to be the only white
//! neighbour of `u` in the whole graph.

use rayon::prelude::*;
use serde::Serialize;

use crate::budget;
use crate::cover;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ForceStep {
    pub forcer: usize,
    pub forced: usize,
    /// White component containing `forced` just before the step.
    pub component: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForcingRecord {
    pub initial: VertexSet,
    pub steps: Vec<ForceStep>,
    #[serde(rename = "final")]
    pub final_set: VertexSet,
}

impl ForcingRecord {
    /// Replays the record against `g`, checking every step against the colouring
    /// at its time.
    pub fn validate(&self, g: &Graph) -> bool {
        if !self.initial.is_subset(g.vertices()) {
            return false;
        }
        let mut black = self.initial;
        for s in &self.steps {
            let white = g.vertices().difference(black);
            if !black.contains(s.forcer) || !white.contains(s.forced) {
                return false;
            }
            if g.component_within(s.forced, white) != s.component {
                return false;
            }
            if g.neighbors(s.forcer).intersection(s.component) != VertexSet::singleton(s.forced) {
                return false;
            }
            black.insert(s.forced);
        }
        black == self.final_set && positive_closure_set(g, black) == black
    }

    pub fn is_complete(&self, g: &Graph) -> bool {
        self.final_set == g.vertices()
    }
}

fn white_components(g: &Graph, white: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut rest = white;
    while let Some(s) = rest.first() {
        let c = g.component_within(s, white);
        rest = rest.difference(c);
        out.push(c);
    }
    out
}

/// Applies the positive rule to a fixed point, one force per step: the
/// lowest-index vertex able to force does so, on its lowest-index target.
///
/// Panics if `b` is not a subset of the vertices.
pub fn positive_closure(g: &Graph, b: VertexSet) -> ForcingRecord {
    assert!(
        b.is_subset(g.vertices()),
        "initial set {b} is not within the graph"
    );
    let mut black = b;
    let mut steps = Vec::new();
    loop {
        let white = g.vertices().difference(black);
        let comps = white_components(g, white);
        let step = black.iter().find_map(|u| {
            comps
                .iter()
                .filter_map(|&c| {
                    let x = g.neighbors(u).intersection(c);
                    (x.len() == 1).then(|| ForceStep {
                        forcer: u,
                        forced: x.first().unwrap(),
                        component: c,
                    })
                })
                .min_by_key(|s| s.forced)
        });
        match step {
            Some(s) => {
                black.insert(s.forced);
                steps.push(s);
            }
            None => break,
        }
    }
    ForcingRecord {
        initial: b,
        steps,
        final_set: black,
    }
}

/// Final black set of the positive rule, applying every available force of a
/// round at once. Agrees with [`positive_closure`] since closures are confluent.
pub fn positive_closure_set(g: &Graph, b: VertexSet) -> VertexSet {
    let all = g.vertices();
    let mut black = b;
    loop {
        budget::checkpoint();
        let white = all.difference(black);
        let mut forced = VertexSet::EMPTY;
        let mut rest = white;
        while let Some(s) = rest.first() {
            let c = g.component_within(s, white);
            rest = rest.difference(c);
            let mut touching = VertexSet::EMPTY;
            for w in c {
                touching = touching.union(g.neighbors(w));
            }
            for u in touching.intersection(black) {
                let x = g.neighbors(u).intersection(c);
                if x.len() == 1 {
                    forced = forced.union(x);
                }
            }
        }
        if forced.is_empty() {
            return black;
        }
        black = black.union(forced);
    }
}

/// Final black set under the classic rule.
pub fn standard_closure_set(g: &Graph, b: VertexSet) -> VertexSet {
    let mut black = b;
    loop {
        budget::checkpoint();
        let white = g.vertices().difference(black);
        let mut forced = VertexSet::EMPTY;
        for u in black {
            let x = g.neighbors(u).intersection(white);
            if x.len() == 1 {
                forced = forced.union(x);
            }
        }
        if forced.is_empty() {
            return black;
        }
        black = black.union(forced);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ZeroForcing {
    pub value: usize,
    /// Lexicographically least optimal set (per component, then united).
    pub set: VertexSet,
    pub record: ForcingRecord,
}

/// Vertex pairs `u < v` with `N[u] = N[v]`. Every forcing set contains one of each pair.
pub fn closed_twins(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in g.vertices() {
        for v in g.neighbors(u) {
            if u < v && g.closed_nbhd(u) == g.closed_nbhd(v) {
                out.push((u, v));
            }
        }
    }
    out
}

struct SubsetSearch<'a> {
    g: &'a Graph,
    k: usize,
    twins: Vec<VertexSet>,
    closure: fn(&Graph, VertexSet) -> VertexSet,
}

fn span(lo: usize, hi: usize) -> VertexSet {
    (lo..hi).collect()
}

impl SubsetSearch<'_> {
    fn violates(&self, excluded: VertexSet) -> bool {
        self.twins.iter().any(|t| t.is_subset(excluded))
    }

    fn dfs(&self, next: usize, chosen: VertexSet, excluded: VertexSet) -> Option<VertexSet> {
        let n = self.g.n();
        if chosen.len() == self.k {
            if self.violates(excluded.union(span(next, n))) {
                return None;
            }
            budget::checkpoint();
            return ((self.closure)(self.g, chosen) == self.g.vertices()).then_some(chosen);
        }
        let need = self.k - chosen.len();
        for j in next..=n - need {
            let ex = excluded.union(span(next, j));
            if self.violates(ex) {
                break;
            }
            if let Some(found) = self.dfs(j + 1, chosen.with(j), ex) {
                return Some(found);
            }
        }
        None
    }

    /// Lexicographically least forcing set of size `k`, if any.
    fn first(&self) -> Option<VertexSet> {
        let n = self.g.n();
        if self.k == 0 {
            return ((self.closure)(self.g, VertexSet::EMPTY) == self.g.vertices())
                .then_some(VertexSet::EMPTY);
        }
        let deadline = budget::deadline();
        // Sets starting at a lower vertex come first lexicographically, so the
        // first branch to succeed holds the answer.
        (0..=n - self.k).into_par_iter().find_map_first(|first| {
            budget::inherit(deadline, || {
                let ex = span(0, first);
                if self.violates(ex) {
                    return None;
                }
                self.dfs(first + 1, VertexSet::singleton(first), ex)
            })
        })
    }
}

fn clique_number(g: &Graph) -> usize {
    cover::maximal_cliques(g)
        .iter()
        .map(|c| c.len())
        .max()
        .unwrap_or(0)
}

/// `max(ω-1, |V|-CC, 1)` for a connected graph with at least one vertex.
pub fn zplus_lower_bound(g: &Graph) -> usize {
    (clique_number(g).saturating_sub(1))
        .max(g.n().saturating_sub(cover::clique_cover_number(g)))
        .max(1)
}

fn minimum_by_components(
    g: &Graph,
    closure: fn(&Graph, VertexSet) -> VertexSet,
    lower_bound: fn(&Graph) -> usize,
    prune_twins: bool,
) -> (usize, VertexSet) {
    let mut total = 0;
    let mut set = VertexSet::EMPTY;
    for comp in g.connected_components() {
        let sub = g
            .induced_subgraph(comp)
            .expect("component is within the graph");
        let h = &sub.graph;
        let twins = if prune_twins {
            closed_twins(h)
                .into_iter()
                .map(|(u, v)| VertexSet::from([u, v]))
                .collect()
        } else {
            Vec::new()
        };
        let found = (lower_bound(h)..=h.n())
            .find_map(|k| {
                SubsetSearch {
                    g: h,
                    k,
                    twins: twins.clone(),
                    closure,
                }
                .first()
                .map(|s| (k, s))
            })
            .expect("the full vertex set always forces");
        total += found.0;
        set = set.union(sub.lift(found.1));
    }
    (total, set)
}

/// Exact `Z₊(G)` with the lexicographically least optimal set. Disconnected
/// graphs are handled component by component.
pub fn zplus(g: &Graph) -> ZeroForcing {
    let (value, set) = minimum_by_components(g, positive_closure_set, zplus_lower_bound, true);
    ZeroForcing {
        value,
        set,
        record: positive_closure(g, set),
    }
}

/// Same search without twin pruning or lower bound. Exponential; for cross-checks.
pub fn zplus_unpruned(g: &Graph) -> (usize, VertexSet) {
    minimum_by_components(g, positive_closure_set, |_| 1, false)
}

/// Exact zero forcing number `Z(G)` under the classic rule.
pub fn standard_zero_forcing(g: &Graph) -> usize {
    minimum_by_components(
        g,
        standard_closure_set,
        |h| zplus_lower_bound(h).max(h.min_degree()),
        true,
    )
    .0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForcingForest {
    /// `parent[v]` is the vertex that forced `v`; roots have none.
    pub parent: Vec<Option<usize>>,
}

impl ForcingForest {
    pub fn roots(&self) -> VertexSet {
        self.parent
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_none())
            .map(|(v, _)| v)
            .collect()
    }

    pub fn root_of(&self, mut v: usize) -> usize {
        while let Some(p) = self.parent[v] {
            v = p;
        }
        v
    }

    /// Vertex sets of the trees, ordered by root.
    pub fn trees(&self) -> Vec<(usize, VertexSet)> {
        let mut out: Vec<(usize, VertexSet)> = self
            .roots()
            .iter()
            .map(|r| (r, VertexSet::singleton(r)))
            .collect();
        for v in 0..self.parent.len() {
            let r = self.root_of(v);
            let slot = out
                .iter_mut()
                .find(|(root, _)| *root == r)
                .expect("root is listed");
            slot.1.insert(v);
        }
        out
    }
}

/// Forcing trees of a complete closure. Each tree is checked to be an induced
/// tree of `g`.
pub fn forcing_forest(g: &Graph, r: &ForcingRecord) -> Result<ForcingForest> {
    if !r.is_complete(g) {
        return Err(Error::IncompleteClosure);
    }
    let mut parent = vec![None; g.n()];
    for s in &r.steps {
        parent[s.forced] = Some(s.forcer);
    }
    let forest = ForcingForest { parent };
    for (root, tree) in forest.trees() {
        let induced_edges = tree
            .iter()
            .map(|v| g.neighbors(v).intersection(tree).len())
            .sum::<usize>()
            / 2;
        let tree_edges_present = tree
            .iter()
            .all(|v| forest.parent[v].is_none_or(|p| g.has_edge(p, v)));
        if induced_edges != tree.len() - 1 || !tree_edges_present {
            return Err(Error::NotInducedTree(root));
        }
    }
    Ok(forest)
}

/// `ℛ(G)`: delete degree-one vertices until none remain, then shortcut
/// induced suspended paths until none remain, and repeat both until stable.
///
/// Vertices keep their original relative order and names. A degree-two
/// vertex whose neighbours are non-adjacent is an interior vertex of a
/// suspended path; shortcutting them one at a time shrinks every such path to
/// a single edge, and a bare cycle ends as a triangle.
pub fn reduced_graph(g: &Graph) -> Graph {
    let mut adj: Vec<u64> = g.adjacency().to_vec();
    let mut alive = g.vertices();
    let degree = |adj: &[u64], v: usize| adj[v].count_ones() as usize;
    loop {
        let mut changed = false;
        while let Some(v) = alive.iter().find(|&v| degree(&adj, v) == 1) {
            let u = adj[v].trailing_zeros() as usize;
            adj[u] &= !(1 << v);
            adj[v] = 0;
            alive.remove(v);
            changed = true;
        }
        while let Some(v) = alive.iter().find(|&v| {
            let nb = VertexSet::from_bits(adj[v]);
            nb.len() == 2 && {
                let a = nb.first().unwrap();
                let b = nb.without(a).first().unwrap();
                adj[a] & (1 << b) == 0
            }
        }) {
            let nb = VertexSet::from_bits(adj[v]);
            let a = nb.first().unwrap();
            let b = nb.without(a).first().unwrap();
            adj[a] = (adj[a] & !(1 << v)) | 1 << b;
            adj[b] = (adj[b] & !(1 << v)) | 1 << a;
            adj[v] = 0;
            alive.remove(v);
            changed = true;
        }
        if !changed {
            break;
        }
    }
    let keep = alive.to_vec();
    let mut out = vec![0u64; keep.len()];
    for (i, &v) in keep.iter().enumerate() {
        for (j, &w) in keep.iter().enumerate() {
            if adj[v] & (1 << w) != 0 {
                out[i] |= 1 << j;
            }
        }
    }
    let h = Graph::from_adjacency_unchecked(out);
    match g.names() {
        Some(names) => h.with_names(keep.iter().map(|&v| names[v].clone()).collect()),
        None => h,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compressed;
    use crate::families::FamilySpec;
    use crate::iso::are_isomorphic;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn spec(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    fn vs<const N: usize>(a: [usize; N]) -> VertexSet {
        VertexSet::from(a)
    }

    fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, edges.into_iter().filter(|_| rng.gen_bool(p))).unwrap()
    }

    /// Applies valid forces in a random order, re-deriving the components each time.
    fn random_order_closure(g: &Graph, b: VertexSet, rng: &mut StdRng) -> VertexSet {
        let mut black = b;
        loop {
            let white = g.vertices().difference(black);
            let mut options = Vec::new();
            for c in white_components(g, white) {
                for u in black {
                    let x = g.neighbors(u).intersection(c);
                    if x.len() == 1 {
                        options.push(x.first().unwrap());
                    }
                }
            }
            match options.choose(rng) {
                Some(&w) => black.insert(w),
                None => return black,
            }
        }
    }

    #[test]
    fn closure_examples() {
        let k4 = spec("K:4");
        let r = positive_closure(&k4, vs([0, 1, 2]));
        assert_eq!(r.final_set, k4.vertices());
        assert_eq!(r.steps.len(), 1);
        assert!(r.validate(&k4));
        let r = positive_closure(&k4, vs([0, 1]));
        assert_eq!(r.final_set, vs([0, 1]));
        assert!(r.steps.is_empty());

        let star = spec("Kb:1,3");
        let r = positive_closure(&star, vs([0]));
        assert_eq!(r.final_set, star.vertices());
        assert!(r
            .steps
            .iter()
            .all(|s| s.forcer == 0 && s.component.len() == 1));
        assert_eq!(
            r.steps.iter().map(|s| s.forced).collect::<Vec<_>>(),
            vec![1, 2, 3]
        );
        // The classic rule cannot start from the centre.
        assert_eq!(standard_closure_set(&star, vs([0])), vs([0]));
    }

    #[test]
    fn closure_is_confluent() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..600 {
            let n = rng.gen_range(1..=7);
            let p = rng.gen_range(0.2..0.8);
            let g = random_graph(&mut rng, n, p);
            let b: VertexSet = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
            let det = positive_closure(&g, b);
            assert!(det.validate(&g));
            assert_eq!(positive_closure_set(&g, b), det.final_set);
            for _ in 0..3 {
                assert_eq!(
                    random_order_closure(&g, b, &mut rng),
                    det.final_set,
                    "{g:?} from {b}"
                );
            }
        }
    }

    #[test]
    fn validate_rejects_tampered_records() {
        let p4 = spec("P:4");
        let mut r = positive_closure(&p4, vs([0]));
        assert!(r.validate(&p4));
        r.steps.swap(0, 1);
        assert!(!r.validate(&p4));
    }

    #[test]
    fn zplus_examples() {
        assert_eq!(zplus(&spec("K:5")).value, 4);
        assert_eq!(zplus(&spec("musical:4")).value, 6);
        assert_eq!(zplus(&spec("J:5")).value, 7);
        assert_eq!(zplus(&spec("Jprime:4")).value, 6);
        assert_eq!(zplus(&spec("K:1")).value, 1);
        assert_eq!(zplus(&Graph::empty(0).unwrap()).value, 0);
        let z = zplus(&spec("P:5"));
        assert_eq!((z.value, z.set), (1, vs([0])));
        let two_triangles = spec("C:3").disjoint_union(&spec("K:3")).unwrap();
        assert_eq!(zplus(&two_triangles).value, 4);
        assert_eq!(Graph::empty(3).map(|g| zplus(&g).value).unwrap(), 3);
    }

    #[test]
    fn zplus_matches_unpruned_search() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(1..=6);
            let p = rng.gen_range(0.2..0.9);
            let g = random_graph(&mut rng, n, p);
            let z = zplus(&g);
            assert_eq!((z.value, z.set), zplus_unpruned(&g), "{g:?}");
            assert!(z.record.is_complete(&g));
        }
    }

    #[test]
    fn standard_examples() {
        for n in 1..=6 {
            assert_eq!(
                standard_zero_forcing(&spec(&format!("K:{n}"))),
                (n - 1).max(1)
            );
            assert_eq!(standard_zero_forcing(&spec(&format!("P:{n}"))), 1);
        }
        assert_eq!(standard_zero_forcing(&spec("C:6")), 2);
        assert_eq!(standard_zero_forcing(&spec("Kb:1,3")), 2);
        assert_eq!(zplus(&spec("Kb:1,3")).value, 1);
    }

    #[test]
    fn twin_lemma_on_optimal_sets() {
        for s in ["K:4", "Kminus:5", "musical:4", "Jprime:4", "coc:4,4,4,4:1"] {
            let g = spec(s);
            let z = zplus(&g);
            for (u, v) in closed_twins(&g) {
                assert!(z.set.contains(u) || z.set.contains(v), "{s}");
            }
        }
    }

    #[test]
    fn forest_examples() {
        let p4 = spec("P:4");
        let f = forcing_forest(&p4, &positive_closure(&p4, vs([0]))).unwrap();
        assert_eq!(f.parent, vec![None, Some(0), Some(1), Some(2)]);
        assert_eq!(f.trees(), vec![(0, p4.vertices())]);

        let star = spec("Kb:1,3");
        let f = forcing_forest(&star, &positive_closure(&star, vs([0]))).unwrap();
        assert_eq!(f.roots(), vs([0]));
        assert_eq!(f.parent[1..], [Some(0); 3]);

        assert!(forcing_forest(&p4, &positive_closure(&p4, vs([1]))).is_ok());
        let k4 = spec("K:4");
        assert!(matches!(
            forcing_forest(&k4, &positive_closure(&k4, vs([0]))),
            Err(Error::IncompleteClosure)
        ));
    }

    #[test]
    fn musical_forest_has_compressed_shape() {
        let m4 = spec("musical:4");
        let z = zplus(&m4);
        let f = forcing_forest(&m4, &z.record).unwrap();
        let mut sizes: Vec<usize> = f.trees().iter().map(|(_, t)| t.len()).collect();
        sizes.sort_unstable();
        let c4 = compressed::compressed_cliques_graph(&m4).unwrap();
        let zc = zplus(c4.graph());
        let fc = forcing_forest(c4.graph(), &zc.record).unwrap();
        let mut csizes: Vec<usize> = fc.trees().iter().map(|(_, t)| t.len()).collect();
        csizes.sort_unstable();
        // The extra trees of M4 are single vertices; the rest match C4's forest.
        let extra = m4.n() - c4.graph().n();
        assert_eq!(sizes[..extra], vec![1; extra][..]);
        assert_eq!(sizes[extra..], csizes[..]);
    }

    #[test]
    fn reduced_examples() {
        for s in ["P:1", "P:2", "P:6", "Kb:1,4"] {
            assert_eq!(reduced_graph(&spec(s)).n(), 1, "{s}");
        }
        assert!(are_isomorphic(&reduced_graph(&spec("C:9")), &spec("K:3")).is_some());
        let h = reduced_graph(&spec("vc:Kb:2,3"));
        assert!(are_isomorphic(&h, &spec("K2xK:3")).is_some());
        let fixed = spec("K2xK:3");
        assert_eq!(reduced_graph(&fixed), fixed);
    }

    #[test]
    fn reduced_graph_keeps_zplus() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(1..=8);
            let p = rng.gen_range(0.15..0.5);
            let g = random_graph(&mut rng, n, p);
            if !g.is_connected() {
                continue;
            }
            assert_eq!(zplus(&g).value, zplus(&reduced_graph(&g)).value, "{g:?}");
        }
    }
}
