//! Theorem checks over graph instances.
//!
//! Each [`Theorem`] pairs a hypothesis with a check. Instances that do not
//! meet the hypothesis are reported as skipped with the reason. Every
//! (theorem, instance) pair runs under its own time limit; an overrun is a
//! skip, never a hang. Failures carry the graph in graph6 plus whatever sets
//! the check found relevant.

use std::cell::OnceCell;
use std::fmt::Display;
use std::time::Duration;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::budget;
use crate::compressed::{self, CompressedGraph};
use crate::corpus::Corpus;
use crate::cover::{self, CliqueCover};
use crate::detect;
use crate::error::Result;
use crate::families::FamilySpec;
use crate::forcing::{self, ZeroForcing};
use crate::graph::{Graph, VertexSet};
use crate::io;
use crate::iso;

pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(30);

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub graph: Graph,
    pub family: Option<FamilySpec>,
}

impl Instance {
    pub fn from_family(spec: FamilySpec) -> Result<Instance> {
        Ok(Instance {
            name: spec.to_string(),
            graph: spec.generate()?,
            family: Some(spec),
        })
    }

    /// An unnamed graph, described by its graph6 string when it has one.
    pub fn from_graph(graph: Graph) -> Instance {
        let name = match io::to_graph6(&graph) {
            Ok(s) => format!("graph6:{s}"),
            Err(_) => format!("graph(n={})", graph.n()),
        };
        Instance {
            name,
            graph,
            family: None,
        }
    }

    pub fn corpus(corpus: &Corpus) -> Vec<Instance> {
        corpus.iter().cloned().map(Instance::from_graph).collect()
    }
}

/// Named graphs that between them meet the hypothesis of every registered theorem.
pub fn default_fixtures() -> Vec<Instance> {
    const SPECS: &[&str] = &[
        "K:2",
        "K:4",
        "K:6",
        "P:5",
        "C:6",
        "Kminus:5",
        "W:7",
        "T3",
        "fig1",
        "circ:6:1,2",
        "K2xK:3",
        "musical:3",
        "musical:4",
        "musical:5",
        "musical:6",
        "J:4",
        "J:5",
        "Jprime:4",
        "Jprime:5",
        "poc:3,4,3:1,2",
        "poc:4,4,4:2",
        "coc:4,4,4,4:1",
        "coc:3,4,3,4:1",
        "coc:4,4,4,4:2",
        "vc:Kb:2,3",
        "vc:Kb:2,4",
        "vc:C:3",
        "vc:P:4",
        "vc:K:4",
        "X:8:4,4,4,4",
        "X:10:3,4,5",
    ];
    SPECS
        .iter()
        .map(|s| {
            Instance::from_family(s.parse().expect("fixture spec parses"))
                .expect("fixture generates")
        })
        .collect()
}

/// The default check set: every connected graph on at most five vertices plus the fixtures.
pub fn default_instances() -> Vec<Instance> {
    let mut out =
        Instance::corpus(&Corpus::generated(5).expect("n=5 is within the generated range"));
    out.extend(default_fixtures());
    out
}

/// Lazily computed facts about one instance, shared by all checks on it.
pub struct Analysis<'a> {
    pub instance: &'a Instance,
    cc: OnceCell<usize>,
    covers: OnceCell<Vec<CliqueCover>>,
    compressions: OnceCell<Vec<CompressedGraph>>,
    zplus: OnceCell<ZeroForcing>,
    compressed_zplus: OnceCell<ZeroForcing>,
}

impl<'a> Analysis<'a> {
    pub fn new(instance: &'a Instance) -> Self {
        Analysis {
            instance,
            cc: OnceCell::new(),
            covers: OnceCell::new(),
            compressions: OnceCell::new(),
            zplus: OnceCell::new(),
            compressed_zplus: OnceCell::new(),
        }
    }

    pub fn g(&self) -> &'a Graph {
        &self.instance.graph
    }

    pub fn n(&self) -> usize {
        self.g().n()
    }

    pub fn cc(&self) -> usize {
        *self.cc.get_or_init(|| cover::clique_cover_number(self.g()))
    }

    pub fn covers(&self) -> &[CliqueCover] {
        self.covers
            .get_or_init(|| cover::enumerate_minmax_si_covers(self.g()))
    }

    pub fn compressions(&self) -> &[CompressedGraph] {
        self.compressions.get_or_init(|| {
            self.covers()
                .iter()
                .map(|c| {
                    compressed::compress(self.g(), c).expect("enumerated covers are certified")
                })
                .collect()
        })
    }

    /// `𝒞(G)` from the first cover.
    pub fn compressed(&self) -> &CompressedGraph {
        &self.compressions()[0]
    }

    pub fn zplus(&self) -> &ZeroForcing {
        self.zplus.get_or_init(|| forcing::zplus(self.g()))
    }

    pub fn compressed_zplus(&self) -> &ZeroForcing {
        self.compressed_zplus
            .get_or_init(|| forcing::zplus(self.compressed().graph()))
    }
}

/// What a check saw.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub expected: String,
    pub observed: String,
    pub pass: bool,
    pub witness: Option<Value>,
}

impl Outcome {
    fn new(expected: impl Into<String>, observed: impl Into<String>, pass: bool) -> Self {
        Outcome {
            expected: expected.into(),
            observed: observed.into(),
            pass,
            witness: None,
        }
    }

    fn equal<T: Display + PartialEq>(what: &str, expected: T, observed: T) -> Self {
        let pass = expected == observed;
        Outcome::new(
            format!("{what} = {expected}"),
            format!("{what} = {observed}"),
            pass,
        )
    }

    fn with_witness(mut self, w: Value) -> Self {
        if !self.pass {
            self.witness = Some(w);
        }
        self
    }

    /// Combines per-part outcomes; fails if any part fails.
    fn all(parts: Vec<Outcome>) -> Self {
        let pass = parts.iter().all(|p| p.pass);
        let witness = parts.iter().find_map(|p| p.witness.clone());
        Outcome {
            expected: parts
                .iter()
                .map(|p| p.expected.as_str())
                .collect::<Vec<_>>()
                .join("; "),
            observed: parts
                .iter()
                .map(|p| p.observed.as_str())
                .collect::<Vec<_>>()
                .join("; "),
            pass,
            witness,
        }
    }
}

type Hypothesis = fn(&Analysis) -> Result<(), String>;
type Check = fn(&Analysis) -> Outcome;

pub struct Theorem {
    pub id: &'static str,
    pub statement: &'static str,
    pub hypothesis: Hypothesis,
    pub check: Check,
}

fn any(_: &Analysis) -> Result<(), String> {
    Ok(())
}

fn simply_coverable(a: &Analysis) -> Result<(), String> {
    if a.covers().is_empty() {
        Err("not simply coverable".into())
    } else {
        Ok(())
    }
}

fn family<'a>(a: &'a Analysis) -> Option<&'a FamilySpec> {
    a.instance.family.as_ref()
}

fn family_kind(a: &Analysis, kind: &str) -> Result<(), String> {
    match family(a) {
        Some(f) if f.kind() == kind => Ok(()),
        _ => Err(format!("not a {kind} instance")),
    }
}

fn set_json(s: VertexSet) -> Value {
    json!(s.to_vec())
}

fn cover_json(c: &CliqueCover) -> Value {
    json!(c.cliques().iter().map(|k| k.to_vec()).collect::<Vec<_>>())
}

fn iso(a: &Graph, b: &Graph) -> bool {
    iso::are_isomorphic(a, b).is_some()
}

fn binom2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

fn check_ccbound(a: &Analysis) -> Outcome {
    let (n, cc, z) = (a.n() as i64, a.cc() as i64, a.zplus().value as i64);
    Outcome::new(
        "|V| - CC <= Z+",
        format!("{n} - {cc} = {} <= {z}", n - cc),
        n - cc <= z,
    )
    .with_witness(json!({ "zplus_set": set_json(a.zplus().set) }))
}

fn check_zplus_le_z(a: &Analysis) -> Outcome {
    let z = forcing::standard_zero_forcing(a.g());
    let zp = a.zplus().value;
    Outcome::new("Z+ <= Z", format!("{zp} <= {z}"), zp <= z)
}

fn complete_hyp(a: &Analysis) -> Result<(), String> {
    if a.n() >= 2 && a.g().is_complete() {
        Ok(())
    } else {
        Err("not a complete graph on at least two vertices".into())
    }
}

fn check_complete(a: &Analysis) -> Outcome {
    let n = a.n();
    Outcome::all(vec![
        Outcome::equal("Z+", n - 1, a.zplus().value),
        Outcome::equal("Z", n - 1, forcing::standard_zero_forcing(a.g())),
        Outcome::equal("CC", 1, a.cc()),
    ])
}

fn check_self_compressed(a: &Analysis) -> Outcome {
    let parts = a
        .compressions()
        .iter()
        .map(|cg| {
            let small_cells = cg.graph().n() == a.n();
            let isomorphic = iso(cg.graph(), a.g());
            Outcome::new(
                "C(G) ~ G iff every cell has at most one vertex",
                format!("cells <= 1: {small_cells}, isomorphic: {isomorphic}"),
                small_cells == isomorphic,
            )
            .with_witness(json!({ "cover": cover_json(cg.source_cover()) }))
        })
        .collect();
    Outcome::all(parts)
}

fn check_idempotent(a: &Analysis) -> Outcome {
    let cg = a.compressed();
    match compressed::compressed_cliques_graph(cg.graph()) {
        Ok(twice) => {
            let ok = iso(twice.graph(), cg.graph());
            Outcome::new("C(C(G)) ~ C(G)", format!("isomorphic: {ok}"), ok)
                .with_witness(json!({ "compressed_graph6": io::to_graph6(cg.graph()).ok() }))
        }
        Err(e) => Outcome::new("C(C(G)) ~ C(G)", format!("C(C(G)) failed: {e}"), false),
    }
}

fn check_phi_connects(a: &Analysis) -> Outcome {
    let g = a.g();
    let parts = a
        .compressions()
        .iter()
        .map(|cg| {
            let h = cg.graph();
            let bad = g.connected_components().into_iter().find_map(|comp| {
                let image: VertexSet = comp.iter().map(|v| cg.phi()[v]).collect();
                let x = image.first()?;
                let reach = h
                    .connected_components()
                    .into_iter()
                    .find(|c| c.contains(x))
                    .unwrap();
                (!image.is_subset(reach)).then_some(comp)
            });
            Outcome::new(
                "phi maps connected vertices to connected vertices",
                format!("violation: {}", bad.is_some()),
                bad.is_none(),
            )
            .with_witness(
                json!({ "component": bad.map(set_json), "cover": cover_json(cg.source_cover()) }),
            )
        })
        .collect();
    Outcome::all(parts)
}

fn check_clique_preimage(a: &Analysis) -> Outcome {
    let g = a.g();
    let parts = a
        .compressions()
        .iter()
        .map(|cg| {
            // Sub-cliques have sub-preimages, so maximal cliques suffice.
            let bad = cover::maximal_cliques(cg.graph())
                .into_iter()
                .find(|c| !g.is_clique(cg.preimage_of_set(*c)));
            Outcome::new(
                "preimage of every clique of C(G) is a clique",
                format!("violation: {}", bad.is_some()),
                bad.is_none(),
            )
            .with_witness(
                json!({ "clique": bad.map(set_json), "cover": cover_json(cg.source_cover()) }),
            )
        })
        .collect();
    Outcome::all(parts)
}

fn check_cc_transfer(a: &Analysis) -> Outcome {
    let parts = a
        .compressions()
        .iter()
        .map(|cg| {
            let got = cover::clique_cover_number(cg.graph());
            Outcome::new(
                format!("CC(C(G)) = CC(G) = {}", a.cc()),
                format!("CC(C(G)) = {got}"),
                got == a.cc(),
            )
        })
        .collect();
    Outcome::all(parts)
}

fn check_induced_cover(a: &Analysis) -> Outcome {
    let parts = a
        .compressions()
        .iter()
        .map(|cg| {
            let d = compressed::induced_cover(cg);
            let ok = d.flags().is_simple_minmax() && d.len() == a.cc();
            Outcome::new(
                "D_1..D_l is a min-max cover of C(G) with simple intersection",
                format!("{d}: {:?}", d.flags()),
                ok,
            )
            .with_witness(json!({ "cover": cover_json(&d) }))
        })
        .collect();
    Outcome::all(parts)
}

fn check_uniqueness(a: &Analysis) -> Outcome {
    let all = a.compressions();
    let bad = (1..all.len()).find(|&i| !iso(all[0].graph(), all[i].graph()));
    Outcome::new(
        "compressed graphs from all covers are isomorphic",
        format!("{} covers, mismatch: {}", all.len(), bad.is_some()),
        bad.is_none(),
    )
    .with_witness(json!({ "covers": bad.map(|i| vec![cover_json(all[0].source_cover()), cover_json(all[i].source_cover())]) }))
}

fn circ6() -> Graph {
    FamilySpec::Circulant {
        n: 6,
        jumps: vec![1, 2],
    }
    .generate()
    .expect("circ(6,{1,2}) generates")
}

fn check_unique_iff(a: &Analysis) -> Outcome {
    let several = a.covers().len() >= 2;
    let is_circ = iso(a.compressed().graph(), &circ6());
    let mut parts = vec![Outcome::new(
        "several covers iff C(G) ~ circ(6,{1,2})",
        format!(
            "{} covers, C(G) ~ circ(6,{{1,2}}): {is_circ}",
            a.covers().len()
        ),
        several == is_circ,
    )];
    if several {
        let found = iso::find_induced(a.g(), &circ6());
        parts.push(Outcome::new(
            "G contains circ(6,{1,2}) induced",
            format!("found: {}", found.is_some()),
            found.is_some(),
        ));
    }
    Outcome::all(parts)
}

fn check_claw_free(a: &Analysis) -> Outcome {
    let in_g = detect::find_claw(a.g());
    let in_c = detect::find_claw(a.compressed().graph());
    Outcome::new(
        "G and C(G) are claw-free",
        format!(
            "claw in G: {}, claw in C(G): {}",
            in_g.is_some(),
            in_c.is_some()
        ),
        in_g.is_none() && in_c.is_none(),
    )
    .with_witness(json!({ "claw_in_g": in_g, "claw_in_compressed": in_c }))
}

fn check_no_suspended_cycle(a: &Analysis) -> Outcome {
    let found = detect::find_suspended_cycle(a.compressed().graph());
    Outcome::new(
        "C(G) has no suspended cycle",
        format!("found: {}", found.is_some()),
        found.is_none(),
    )
    .with_witness(
        json!({ "cycle": found, "compressed_graph6": io::to_graph6(a.compressed().graph()).ok() }),
    )
}

fn check_jprime(a: &Analysis) -> Outcome {
    let labels = detect::jprime_labelling(a.compressed().graph(), a.cc());
    Outcome::new(
        format!("C(G) embeds induced in J'({},2)", a.cc()),
        match &labels {
            Some(ls) => format!(
                "labels {}",
                ls.iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
            None => "no embedding".into(),
        },
        labels.is_some(),
    )
}

fn check_twins(a: &Analysis) -> Outcome {
    let s = a.zplus().set;
    let bad = forcing::closed_twins(a.g())
        .into_iter()
        .find(|&(u, v)| !s.contains(u) && !s.contains(v));
    Outcome::new(
        "every optimal set meets each closed-twin pair",
        format!("violating pair: {bad:?}"),
        bad.is_none(),
    )
    .with_witness(json!({ "zplus_set": set_json(s), "pair": bad }))
}

/// Every minimum positive forcing set when there are few enough candidates,
/// otherwise just the one the search returned.
fn optimal_sets(a: &Analysis) -> Vec<VertexSet> {
    let (n, k) = (a.n(), a.zplus().value);
    if n > 12 {
        return vec![a.zplus().set];
    }
    let full = a.g().vertices();
    (0u64..1 << n)
        .map(VertexSet::from_bits)
        .filter(|s| s.len() == k && forcing::positive_closure_set(a.g(), *s) == full)
        .collect()
}

fn check_onlyone(a: &Analysis) -> Outcome {
    let sets = optimal_sets(a);
    let mut bad = None;
    'outer: for c in a.covers() {
        let cells = compressed::cells(a.g(), c).expect("enumerated covers are certified");
        for &s in &sets {
            if let Some((label, cell)) = cells.iter().find(|(_, cell)| cell.difference(s).len() > 1)
            {
                bad = Some(
                    json!({ "set": set_json(s), "cell": label.to_string(), "members": set_json(*cell), "cover": cover_json(c) }),
                );
                break 'outer;
            }
        }
    }
    Outcome::new(
        "each cell has at most one white vertex",
        format!(
            "{} optimal sets over {} covers, violation: {}",
            sets.len(),
            a.covers().len(),
            bad.is_some()
        ),
        bad.is_none(),
    )
    .with_witness(bad.unwrap_or(Value::Null))
}

fn transfer_hyp(a: &Analysis) -> Result<(), String> {
    if !a.g().is_connected() {
        return Err("G is disconnected".into());
    }
    if a.g().is_complete() {
        return Err("G is complete".into());
    }
    simply_coverable(a)
}

fn check_zplus_compress(a: &Analysis) -> Outcome {
    let lhs = a.n() as i64 - a.zplus().value as i64;
    let cg = a.compressed().graph();
    let rhs = cg.n() as i64 - a.compressed_zplus().value as i64;
    Outcome::new(
        "|V(G)| - Z+(G) = |V(C(G))| - Z+(C(G))",
        format!("{} - {} = {lhs}, {} - {} = {rhs}", a.n(), a.zplus().value, cg.n(), a.compressed_zplus().value),
        lhs == rhs,
    )
    .with_witness(json!({ "zplus_set": set_json(a.zplus().set), "compressed_zplus_set": set_json(a.compressed_zplus().set) }))
}

fn check_forcing_forest(a: &Analysis) -> Outcome {
    let z = a.zplus();
    match forcing::forcing_forest(a.g(), &z.record) {
        Ok(f) => {
            let trees = f.trees();
            let union = trees
                .iter()
                .fold(VertexSet::EMPTY, |acc, (_, t)| acc.union(*t));
            let sizes: usize = trees.iter().map(|(_, t)| t.len()).sum();
            let ok = union == a.g().vertices()
                && sizes == a.n()
                && trees.len() == z.value
                && z.record.validate(a.g());
            Outcome::new(
                "forcing trees are disjoint induced trees covering V",
                format!("{} trees", trees.len()),
                ok,
            )
        }
        Err(e) => Outcome::new(
            "forcing trees are disjoint induced trees covering V",
            e.to_string(),
            false,
        )
        .with_witness(json!({ "zplus_set": set_json(z.set) })),
    }
}

fn check_reduced(a: &Analysis) -> Outcome {
    let r = forcing::reduced_graph(a.g());
    let zr = forcing::zplus(&r).value;
    Outcome::equal("Z+(R(G))", a.zplus().value, zr)
        .with_witness(json!({ "reduced_graph6": io::to_graph6(&r).ok() }))
}

fn vertex_clique_hyp(a: &Analysis) -> Result<(), String> {
    family_kind(a, "vertex_clique_of")
}

fn check_vertex_clique(a: &Analysis) -> Outcome {
    match compressed::is_self_compressed(a.g()) {
        Ok(b) => Outcome::new("C(H) ~ H", format!("self-compressed: {b}"), b),
        Err(e) => Outcome::new("C(H) ~ H", e.to_string(), false),
    }
}

fn forest_hyp(a: &Analysis) -> Result<(), String> {
    vertex_clique_hyp(a)?;
    if a.g().is_connected() {
        Ok(())
    } else {
        Err("H is disconnected".into())
    }
}

fn check_forest(a: &Analysis) -> Outcome {
    let r = forcing::reduced_graph(a.g());
    let z = a.zplus().value;
    if r.n() == 1 {
        return Outcome::equal("Z+ (R(H) = K1)", 1, z);
    }
    if r.n() == 3 && r.is_complete() {
        return Outcome::equal("Z+ (R(H) = K3)", 2, z);
    }
    let k = cover::maximal_cliques(&r)
        .iter()
        .filter(|c| c.len() == 2)
        .count();
    Outcome::new(
        format!("Z+ <= k = {k}"),
        format!("Z+ = {z}, |V(R(H))| = {}", r.n()),
        z <= k,
    )
}

fn chordal_hyp(a: &Analysis) -> Result<(), String> {
    // CC(K1) = 1 counts the lone vertex as a clique; the equality is about
    // covering edges, where an edgeless graph needs no cliques.
    if a.g().edge_count() == 0 {
        return Err("edgeless graph (CC counts isolated vertices)".into());
    }
    simply_coverable(a)?;
    if detect::is_chordal(a.compressed().graph()) {
        Ok(())
    } else {
        Err("C(G) has an induced cycle of length at least four".into())
    }
}

/// `Z+ = |V| - CC`.
fn check_ccbound_tight(a: &Analysis) -> Outcome {
    Outcome::equal("Z+", a.n() as i64 - a.cc() as i64, a.zplus().value as i64)
}

fn check_cycle_of_cliques(a: &Analysis) -> Outcome {
    let bound = (a.n() + 2) as i64 - a.cc() as i64;
    Outcome::new(
        format!("Z+ <= |V| - CC + 2 = {bound}"),
        format!("Z+ = {}", a.zplus().value),
        a.zplus().value as i64 <= bound,
    )
}

fn private_cells(a: &Analysis) -> usize {
    match a.covers().first() {
        Some(c) => compressed::cells(a.g(), c)
            .map(|m| m.keys().filter(|l| l.is_private()).count())
            .unwrap_or(0),
        None => 0,
    }
}

fn coc_private_hyp(a: &Analysis) -> Result<(), String> {
    family_kind(a, "cycle_of_cliques")?;
    simply_coverable(a)?;
    if private_cells(a) >= 2 {
        Ok(())
    } else {
        Err("fewer than two cliques with private vertices".into())
    }
}

fn check_musical(a: &Analysis) -> Outcome {
    let Some(FamilySpec::Musical(n)) = family(a) else {
        unreachable!("hypothesis checked")
    };
    let cycle = FamilySpec::Cycle(*n).generate().expect("cycle generates");
    let mut parts = vec![Outcome::equal("Z+", n + 2, a.zplus().value)];
    let cg = compressed::compressed_cliques_graph(a.g());
    parts.push(match cg {
        Ok(cg) => {
            let ok = iso(cg.graph(), &cycle);
            Outcome::new(
                format!("C(M_{n}) ~ C_{n}"),
                format!("C(M_{n}) has {} vertices, ~ C_{n}: {ok}", cg.graph().n()),
                ok,
            )
        }
        Err(e) => Outcome::new(format!("C(M_{n}) ~ C_{n}"), e.to_string(), false),
    });
    Outcome::all(parts)
}

fn johnson_hyp(a: &Analysis) -> Result<(), String> {
    match family(a) {
        Some(FamilySpec::Johnson(m)) if *m > 3 => Ok(()),
        _ => Err("not J(m,2) with m > 3".into()),
    }
}

fn check_johnson(a: &Analysis) -> Outcome {
    let Some(&FamilySpec::Johnson(m)) = family(a) else {
        unreachable!("hypothesis checked")
    };
    Outcome::all(vec![
        Outcome::equal("|V|", binom2(m), a.n()),
        Outcome::equal("CC", m, a.cc()),
        Outcome::equal("Z+", binom2(m) - m + 2, a.zplus().value),
    ])
}

fn johnson_prime_hyp(a: &Analysis) -> Result<(), String> {
    match family(a) {
        Some(FamilySpec::JohnsonPrime(m)) if *m > 3 => Ok(()),
        _ => Err("not J'(m,2) with m > 3".into()),
    }
}

fn check_johnson_prime(a: &Analysis) -> Outcome {
    let Some(&FamilySpec::JohnsonPrime(m)) = family(a) else {
        unreachable!("hypothesis checked")
    };
    Outcome::all(vec![
        Outcome::equal("|V|", binom2(m) + m, a.n()),
        Outcome::equal("CC", m, a.cc()),
        Outcome::equal("Z+", binom2(m), a.zplus().value),
    ])
}

fn check_xgraph(a: &Analysis) -> Outcome {
    let Some(FamilySpec::XGraph { n, cycles }) = family(a) else {
        unreachable!("hypothesis checked")
    };
    let k = cycles.len();
    let z = a.zplus().value;
    let gap = (a.n() + k) as i64 - a.cc() as i64;
    Outcome::all(vec![
        Outcome::equal("Z+", n - 1, z),
        Outcome::new(
            format!(
                "n - 1 = |V| - CC + k, i.e. {} = {} - {} + {k}",
                n - 1,
                a.n(),
                a.cc()
            ),
            format!("|V| - CC + k = {gap}"),
            gap == *n as i64 - 1,
        ),
    ])
}

static THEOREMS: &[Theorem] = &[
    Theorem { id: "cor-ccbound", statement: "|V(G)| - CC(G) <= Z+(G)", hypothesis: any, check: check_ccbound },
    Theorem { id: "ineq-zplus-le-z", statement: "Z+(G) <= Z(G)", hypothesis: any, check: check_zplus_le_z },
    Theorem {
        id: "thm-complete",
        statement: "Z+(K_n) = Z(K_n) = n - 1 and CC(K_n) = 1",
        hypothesis: complete_hyp,
        check: check_complete,
    },
    Theorem {
        id: "thm-self-compressed",
        statement: "C(G) ~ G iff every cell has at most one vertex",
        hypothesis: simply_coverable,
        check: check_self_compressed,
    },
    Theorem { id: "cor-idempotent", statement: "C(C(G)) ~ C(G)", hypothesis: simply_coverable, check: check_idempotent },
    Theorem {
        id: "prop-phi-connects",
        statement: "a path from u to v in G gives phi(u) = phi(v) or a path between them in C(G)",
        hypothesis: simply_coverable,
        check: check_phi_connects,
    },
    Theorem {
        id: "lem-clique-preimage",
        statement: "the preimage under phi of a clique of C(G) is a clique of G",
        hypothesis: simply_coverable,
        check: check_clique_preimage,
    },
    Theorem { id: "thm-cc-transfer", statement: "CC(G) = CC(C(G))", hypothesis: simply_coverable, check: check_cc_transfer },
    Theorem {
        id: "cor-induced-cover",
        statement: "the label classes D_i form a min-max cover of C(G) with simple intersection",
        hypothesis: simply_coverable,
        check: check_induced_cover,
    },
    Theorem {
        id: "thm-uniqueness",
        statement: "all min-max simply intersecting covers give isomorphic compressed graphs",
        hypothesis: simply_coverable,
        check: check_uniqueness,
    },
    Theorem {
        id: "thm-unique-iff",
        statement: "G has several min-max simply intersecting covers iff C(G) ~ circ(6,{1,2}); then G contains circ(6,{1,2}) induced",
        hypothesis: simply_coverable,
        check: check_unique_iff,
    },
    Theorem { id: "prop-claw-free", statement: "G and C(G) are claw-free", hypothesis: simply_coverable, check: check_claw_free },
    Theorem {
        id: "lem-no-suspended-cycle",
        statement: "C(G) contains no suspended cycle",
        hypothesis: simply_coverable,
        check: check_no_suspended_cycle,
    },
    Theorem {
        id: "lem-jprime-embed",
        statement: "C(G) is an induced subgraph of J'(CC(G),2)",
        hypothesis: simply_coverable,
        check: check_jprime,
    },
    Theorem {
        id: "lem-twins",
        statement: "a positive zero forcing set contains u or v whenever N[u] = N[v]",
        hypothesis: any,
        check: check_twins,
    },
    Theorem {
        id: "lem-onlyone",
        statement: "for an optimal positive zero forcing set, each cell has at most one white vertex",
        hypothesis: simply_coverable,
        check: check_onlyone,
    },
    Theorem {
        id: "thm-zplus-compress",
        statement: "|V(G)| - Z+(G) = |V(C(G))| - Z+(C(G)) for connected, non-complete, simply coverable G",
        hypothesis: transfer_hyp,
        check: check_zplus_compress,
    },
    Theorem {
        id: "prop-forcing-forest",
        statement: "forcing trees are vertex-disjoint induced rooted trees covering V",
        hypothesis: any,
        check: check_forcing_forest,
    },
    Theorem { id: "lem-reduced", statement: "Z+(G) = Z+(R(G))", hypothesis: any, check: check_reduced },
    Theorem {
        id: "lem-vertex-clique",
        statement: "a vertex-clique graph H satisfies C(H) ~ H",
        hypothesis: vertex_clique_hyp,
        check: check_vertex_clique,
    },
    Theorem {
        id: "thm-forest",
        statement: "for a connected vertex-clique graph H, Z+(H) <= k, the number of edges of R(H) that are maximal cliques",
        hypothesis: forest_hyp,
        check: check_forest,
    },
    Theorem {
        id: "thm-chordal",
        statement: "if C(G) has no induced cycle other than K3 then Z+(G) = |V(G)| - CC(G)",
        hypothesis: chordal_hyp,
        check: check_ccbound_tight,
    },
    Theorem {
        id: "cor-path-of-cliques",
        statement: "a path of cliques has Z+ = |V| - CC",
        hypothesis: |a| family_kind(a, "path_of_cliques"),
        check: check_ccbound_tight,
    },
    Theorem {
        id: "thm-cycle-of-cliques",
        statement: "a cycle of cliques has Z+ <= |V| - CC + 2",
        hypothesis: |a| family_kind(a, "cycle_of_cliques"),
        check: check_cycle_of_cliques,
    },
    Theorem {
        id: "thm-cycle-of-cliques-private",
        statement: "a cycle of cliques with two non-empty private cells has Z+ = |V| - CC",
        hypothesis: coc_private_hyp,
        check: check_ccbound_tight,
    },
    Theorem {
        id: "lem-musical",
        statement: "Z+(M_n) = n + 2 and C(M_n) ~ C_n",
        hypothesis: |a| family_kind(a, "musical"),
        check: check_musical,
    },
    Theorem {
        id: "lem-johnson",
        statement: "for m > 3: |V(J(m,2))| = C(m,2), CC = m, Z+ = C(m,2) - m + 2",
        hypothesis: johnson_hyp,
        check: check_johnson,
    },
    Theorem {
        id: "lem-johnson-prime",
        statement: "for m > 3: |V(J'(m,2))| = C(m,2) + m, CC = m, Z+ = C(m,2)",
        hypothesis: johnson_prime_hyp,
        check: check_johnson_prime,
    },
    Theorem {
        id: "thm-xgraph",
        statement: "Z+(X(n; l_1..l_k)) = n - 1 = |V| - CC + k",
        hypothesis: |a| family_kind(a, "X_graph"),
        check: check_xgraph,
    },
];

pub fn theorems() -> &'static [Theorem] {
    THEOREMS
}

pub fn theorem(id: &str) -> Option<&'static Theorem> {
    THEOREMS.iter().find(|t| t.id == id)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub theorem: &'static str,
    pub instance: String,
    pub expected: String,
    pub observed: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(results: &[CheckResult]) -> Summary {
        let mut s = Summary::default();
        for r in results {
            match r.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::Skipped(_) => s.skipped += 1,
            }
        }
        s
    }

    pub fn all_pass(&self) -> bool {
        self.fail == 0
    }
}

fn run_one(t: &Theorem, a: &Analysis, timeout: Duration) -> CheckResult {
    let outcome = budget::with_deadline(timeout, || (t.hypothesis)(a).map(|()| (t.check)(a)));
    let (expected, observed, verdict, witness) = match outcome {
        Err(budget::TimedOut) => (
            String::new(),
            String::new(),
            Verdict::Skipped(format!("timeout after {timeout:?}")),
            None,
        ),
        Ok(Err(reason)) => (String::new(), String::new(), Verdict::Skipped(reason), None),
        Ok(Ok(o)) if o.pass => (o.expected, o.observed, Verdict::Pass, None),
        Ok(Ok(o)) => {
            let mut w = json!({ "graph6": io::to_graph6(a.g()).ok() });
            if let Some(Value::Object(extra)) = o.witness {
                w.as_object_mut().unwrap().extend(extra);
            }
            (o.expected, o.observed, Verdict::Fail, Some(w))
        }
    };
    CheckResult {
        theorem: t.id,
        instance: a.instance.name.clone(),
        expected,
        observed,
        verdict,
        witness,
    }
}

/// Runs the selected theorems (all when `only` is empty) on every instance.
/// Instances run in parallel; results come back ordered by instance, then by
/// registry order, whatever the thread count.
pub fn run_checks(instances: &[Instance], only: &[&str], timeout: Duration) -> Vec<CheckResult> {
    let selected: Vec<&Theorem> = THEOREMS
        .iter()
        .filter(|t| only.is_empty() || only.contains(&t.id))
        .collect();
    instances
        .par_iter()
        .map(|inst| {
            let a = Analysis::new(inst);
            selected
                .iter()
                .map(|t| run_one(t, &a, timeout))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}
