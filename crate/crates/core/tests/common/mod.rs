//! Slow reference implementations used to cross-check the library. They work
//! on plain boolean matrices and exhaustive search, sharing no code with the
//! bitset routines under test.
#![allow(dead_code)]

use compressed_cliques::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

pub type Adj = Vec<Vec<bool>>;

pub fn adj(g: &Graph) -> Adj {
    (0..g.n())
        .map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

pub fn binom2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// Connected components of the subgraph induced on the vertices with `keep[v]`.
fn components(a: &Adj, keep: &[bool]) -> Vec<usize> {
    let n = a.len();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if !keep[s] || comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = next;
        while let Some(u) = stack.pop() {
            for w in 0..n {
                if keep[w] && a[u][w] && comp[w] == usize::MAX {
                    comp[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    comp
}

/// Every force `(u, w)` the positive colour change rule currently allows.
pub fn available_forces(a: &Adj, black: &[bool]) -> Vec<(usize, usize)> {
    let n = a.len();
    let white: Vec<bool> = black.iter().map(|b| !b).collect();
    let comp = components(a, &white);
    let mut out = Vec::new();
    for u in (0..n).filter(|&u| black[u]) {
        let mut per_comp: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for w in (0..n).filter(|&w| white[w] && a[u][w]) {
            per_comp.entry(comp[w]).or_default().push(w);
        }
        out.extend(
            per_comp
                .values()
                .filter(|ws| ws.len() == 1)
                .map(|ws| (u, ws[0])),
        );
    }
    out
}

/// Positive closure obtained by applying forces one at a time in random order.
pub fn random_order_closure(a: &Adj, initial: &[bool], rng: &mut impl Rng) -> Vec<bool> {
    let mut black = initial.to_vec();
    loop {
        let forces = available_forces(a, &black);
        match forces.choose(rng) {
            Some(&(_, w)) => black[w] = true,
            None => return black,
        }
    }
}

pub fn closure(a: &Adj, initial: &[bool]) -> Vec<bool> {
    let mut black = initial.to_vec();
    while let Some(&(_, w)) = available_forces(a, &black).first() {
        black[w] = true;
    }
    black
}

fn mask_to_bools(mask: u64, n: usize) -> Vec<bool> {
    (0..n).map(|v| mask >> v & 1 == 1).collect()
}

/// Z+ by trying every subset in order of size. Only sensible for small `n`.
pub fn zplus(a: &Adj) -> usize {
    let n = a.len();
    assert!(n <= 16, "oracle is exponential");
    let mut by_size: Vec<u64> = (0..1u64 << n).collect();
    by_size.sort_by_key(|m| m.count_ones());
    for m in by_size {
        if closure(a, &mask_to_bools(m, n)).iter().all(|&b| b) {
            return m.count_ones() as usize;
        }
    }
    unreachable!("the full vertex set forces")
}

/// Z by the same exhaustive search with the classic rule.
pub fn standard_z(a: &Adj) -> usize {
    let n = a.len();
    assert!(n <= 16, "oracle is exponential");
    let forces_all = |mut black: Vec<bool>| loop {
        let step = (0..n).filter(|&u| black[u]).find_map(|u| {
            let whites: Vec<usize> = (0..n).filter(|&w| !black[w] && a[u][w]).collect();
            (whites.len() == 1).then(|| whites[0])
        });
        match step {
            Some(w) => black[w] = true,
            None => return black.iter().all(|&b| b),
        }
    };
    (0..=n)
        .find(|&k| {
            (0..1u64 << n)
                .filter(|m| m.count_ones() as usize == k)
                .any(|m| forces_all(mask_to_bools(m, n)))
        })
        .unwrap()
}

fn is_clique(a: &Adj, s: &[usize]) -> bool {
    s.iter()
        .enumerate()
        .all(|(i, &u)| s[i + 1..].iter().all(|&v| a[u][v]))
}

pub fn maximal_cliques(a: &Adj) -> Vec<Vec<usize>> {
    let n = a.len();
    assert!(n <= 20, "oracle is exponential");
    let mut out = Vec::new();
    for m in 1..1u64 << n {
        let s: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
        if is_clique(a, &s) && (0..n).all(|w| m >> w & 1 == 1 || !s.iter().all(|&u| a[u][w])) {
            out.push(s);
        }
    }
    out
}

fn combinations(n: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn go(
        start: usize,
        n: usize,
        k: usize,
        cur: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..n {
            cur.push(i);
            if go(i + 1, n, k, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(0, n, k, &mut Vec::new(), f)
}

/// Fewest maximal cliques covering every edge and every vertex.
pub fn clique_cover_number(a: &Adj) -> usize {
    let n = a.len();
    let cliques = maximal_cliques(a);
    let covered = |pick: &[usize]| {
        let mut hit = vec![vec![false; n]; n];
        for &c in pick {
            for &u in &cliques[c] {
                for &v in &cliques[c] {
                    hit[u][v] = true;
                }
            }
        }
        (0..n).all(|u| hit[u][u] && (0..n).all(|v| !a[u][v] || hit[u][v]))
    };
    (1..=cliques.len())
        .find(|&k| combinations(cliques.len(), k, &mut |pick| covered(pick)))
        .unwrap_or(0)
}

/// Isomorphism by trying every bijection that respects degrees.
pub fn isomorphic(g: &Adj, h: &Adj) -> bool {
    let n = g.len();
    if n != h.len() {
        return false;
    }
    let deg = |a: &Adj, v: usize| a[v].iter().filter(|&&b| b).count();
    let mut dg: Vec<usize> = (0..n).map(|v| deg(g, v)).collect();
    let mut dh: Vec<usize> = (0..n).map(|v| deg(h, v)).collect();
    let (gd, hd) = (dg.clone(), dh.clone());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    fn extend(
        g: &Adj,
        h: &Adj,
        gd: &[usize],
        hd: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let v = map.len();
        if v == g.len() {
            return true;
        }
        for w in 0..h.len() {
            if used[w] || gd[v] != hd[w] || (0..v).any(|u| g[u][v] != h[map[u]][w]) {
                continue;
            }
            map.push(w);
            used[w] = true;
            if extend(g, h, gd, hd, map, used) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }
    extend(g, h, &gd, &hd, &mut Vec::new(), &mut vec![false; n])
}

pub fn has_claw(a: &Adj) -> bool {
    let n = a.len();
    (0..n).any(|c| {
        let nb: Vec<usize> = (0..n).filter(|&v| a[c][v]).collect();
        combinations(nb.len(), 3, &mut |t| {
            let (x, y, z) = (nb[t[0]], nb[t[1]], nb[t[2]]);
            !a[x][y] && !a[x][z] && !a[y][z]
        })
    })
}

/// Vertex sets of the trees of a forcing forest, checked to be induced trees.
pub fn is_induced_tree(a: &Adj, vs: &[usize]) -> bool {
    let edges: usize = vs
        .iter()
        .enumerate()
        .map(|(i, &u)| vs[i + 1..].iter().filter(|&&v| a[u][v]).count())
        .sum();
    let mut keep = vec![false; a.len()];
    for &v in vs {
        keep[v] = true;
    }
    let comp = components(a, &keep);
    edges + 1 == vs.len() && vs.iter().all(|&v| comp[v] == comp[vs[0]])
}

pub fn random_subset(n: usize, rng: &mut impl Rng) -> Vec<bool> {
    (0..n).map(|_| rng.gen_bool(0.3)).collect()
}
