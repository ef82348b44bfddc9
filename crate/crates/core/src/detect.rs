//! Forbidden-structure detectors for compressed cliques graphs.
//!
//! None of these decide whether a graph is a compressed cliques graph; they
//! are necessary conditions. A compressed cliques graph is claw-free, has no
//! suspended cycle, and embeds as an induced subgraph of `J'(CC(G), 2)`.

use std::fmt;

use serde::Serialize;

use crate::budget;
use crate::compressed::CellLabel;
use crate::cover;
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureKind {
    Claw,
    Diamond,
    SuspendedCycle,
    /// A suspended triangle.
    Ear,
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StructureKind::Claw => "claw",
            StructureKind::Diamond => "diamond",
            StructureKind::SuspendedCycle => "suspended cycle",
            StructureKind::Ear => "ear",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub kind: StructureKind,
    pub witness: VertexSet,
    /// Claw: the centre. Suspended cycle: the one vertex of degree above two.
    /// Diamond: the lower of the two degree-three vertices.
    pub center: Option<usize>,
}

/// An induced `K_{1,3}`, choosing the lowest centre and then the
/// lexicographically least leaf triple.
pub fn find_claw(g: &Graph) -> Option<StructureReport> {
    for v in g.vertices() {
        let nb = g.neighbors(v).to_vec();
        if nb.len() < 3 {
            continue;
        }
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &c in &nb[j + 1..] {
                    if !g.has_edge(a, c) && !g.has_edge(b, c) {
                        return Some(StructureReport {
                            kind: StructureKind::Claw,
                            witness: VertexSet::from([v, a, b, c]),
                            center: Some(v),
                        });
                    }
                }
            }
        }
    }
    None
}

/// An induced `K_4` minus an edge.
pub fn find_diamond(g: &Graph) -> Option<StructureReport> {
    for (u, v) in g.edges() {
        let common = g.neighbors(u).intersection(g.neighbors(v)).to_vec();
        for (i, &a) in common.iter().enumerate() {
            if let Some(&b) = common[i + 1..].iter().find(|&&b| !g.has_edge(a, b)) {
                return Some(StructureReport {
                    kind: StructureKind::Diamond,
                    witness: VertexSet::from([u, v, a, b]),
                    center: Some(u),
                });
            }
        }
    }
    None
}

/// A cycle in which exactly one vertex has degree above two in `g`. Reported
/// as an ear when the cycle is a triangle.
///
/// Every other cycle vertex has degree two, so each cycle is found by walking
/// out of a high-degree vertex along degree-two vertices.
pub fn find_suspended_cycle(g: &Graph) -> Option<StructureReport> {
    for c in g.vertices().iter().filter(|&v| g.degree(v) > 2) {
        for a in g.neighbors(c).iter().filter(|&a| g.degree(a) == 2) {
            let mut cycle = VertexSet::from([c, a]);
            let (mut prev, mut cur) = (c, a);
            loop {
                let next = g.neighbors(cur).without(prev).first().expect("degree two");
                if next == c {
                    if cycle.len() >= 3 {
                        let kind = if cycle.len() == 3 {
                            StructureKind::Ear
                        } else {
                            StructureKind::SuspendedCycle
                        };
                        return Some(StructureReport {
                            kind,
                            witness: cycle,
                            center: Some(c),
                        });
                    }
                    break;
                }
                if g.degree(next) != 2 || cycle.contains(next) {
                    break;
                }
                cycle.insert(next);
                (prev, cur) = (cur, next);
            }
        }
    }
    None
}

/// Chordality by maximum cardinality search and a perfect elimination check.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = g
            .vertices()
            .difference(numbered)
            .iter()
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        for w in g.neighbors(v).difference(numbered) {
            weight[w] += 1;
        }
        numbered.insert(v);
        order.push(v);
    }
    // `order` reversed is a perfect elimination ordering iff g is chordal:
    // the earlier-numbered neighbours of each vertex must form a clique.
    let mut earlier = VertexSet::EMPTY;
    for &v in &order {
        if !g.is_clique(g.neighbors(v).intersection(earlier)) {
            return false;
        }
        earlier.insert(v);
    }
    true
}

/// An induced cycle of length at least four, if one exists.
pub fn find_long_induced_cycle(g: &Graph) -> Option<Vec<usize>> {
    // Grow induced paths from their lowest vertex; close when the last vertex
    // meets the start again.
    fn extend(g: &Graph, path: &mut Vec<usize>, on: VertexSet) -> bool {
        budget::checkpoint();
        let start = path[0];
        let last = *path.last().unwrap();
        let interior = on.without(start).without(last);
        for next in g.neighbors(last).difference(on) {
            if next < start || g.neighbors(next).intersects(interior) {
                continue;
            }
            let closes = path.len() > 1 && g.has_edge(next, start);
            if closes && path.len() < 3 {
                continue;
            }
            path.push(next);
            if closes || extend(g, path, on.with(next)) {
                return true;
            }
            path.pop();
        }
        false
    }
    for s in g.vertices() {
        let mut path = vec![s];
        if extend(g, &mut path, VertexSet::singleton(s)) {
            return Some(path);
        }
    }
    None
}

/// Labels each vertex of `g` with a distinct 1- or 2-subset of `{0..m-1}` so
/// that adjacency is exactly label intersection, i.e. an induced embedding
/// into `J'(m, 2)`. Indices are introduced in increasing order to cut symmetric
/// branches.
pub fn jprime_labelling(g: &Graph, m: usize) -> Option<Vec<CellLabel>> {
    struct S<'a> {
        g: &'a Graph,
        m: usize,
        order: Vec<usize>,
        labels: Vec<Option<CellLabel>>,
    }
    impl S<'_> {
        fn go(&mut self, pos: usize, used: usize) -> bool {
            budget::checkpoint();
            let Some(&v) = self.order.get(pos) else {
                return true;
            };
            // Labels reuse indices below `used` or take the next fresh ones in order.
            for i in 0..=used.min(self.m - 1) {
                let j_max = if i == used { used + 1 } else { used };
                for j in i..=j_max.min(self.m - 1) {
                    let lab = CellLabel::new(i, j);
                    let ok = self.order[..pos].iter().all(|&w| {
                        let lw = self.labels[w].unwrap();
                        lw != lab && lw.meets(lab) == self.g.has_edge(v, w)
                    });
                    if !ok {
                        continue;
                    }
                    self.labels[v] = Some(lab);
                    if self.go(pos + 1, used.max(j + 1)) {
                        return true;
                    }
                    self.labels[v] = None;
                }
            }
            false
        }
    }
    // Breadth-first order keeps each new vertex constrained by earlier ones.
    let mut order = Vec::with_capacity(g.n());
    let mut seen = VertexSet::EMPTY;
    for s in g.vertices() {
        if seen.contains(s) {
            continue;
        }
        seen.insert(s);
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in g.neighbors(v).difference(seen) {
                seen.insert(w);
                queue.push_back(w);
            }
        }
    }
    if m == 0 {
        return (g.n() == 0).then(Vec::new);
    }
    let mut s = S {
        g,
        m,
        order,
        labels: vec![None; g.n()],
    };
    if s.go(0, 0) {
        Some(s.labels.into_iter().map(Option::unwrap).collect())
    } else {
        None
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidateReport {
    pub claw_free: bool,
    pub claw: Option<StructureReport>,
    /// Reported only; a diamond alone does not rule a graph out.
    pub diamond: Option<StructureReport>,
    pub no_suspended_cycle: bool,
    pub suspended_cycle: Option<StructureReport>,
    pub clique_cover_number: usize,
    pub embeds_in_jprime: bool,
    pub jprime_labels: Option<Vec<String>>,
}

impl CandidateReport {
    /// False when some necessary condition fails.
    pub fn plausible(&self) -> bool {
        self.claw_free && self.no_suspended_cycle && self.embeds_in_jprime
    }
}

pub fn check_compressed_candidate(g: &Graph) -> CandidateReport {
    let claw = find_claw(g);
    let suspended_cycle = find_suspended_cycle(g);
    let cc = cover::clique_cover_number(g);
    let labels = jprime_labelling(g, cc);
    CandidateReport {
        claw_free: claw.is_none(),
        claw,
        diamond: find_diamond(g),
        no_suspended_cycle: suspended_cycle.is_none(),
        suspended_cycle,
        clique_cover_number: cc,
        embeds_in_jprime: labels.is_some(),
        jprime_labels: labels.map(|ls| ls.iter().map(|l| l.to_string()).collect()),
    }
}
