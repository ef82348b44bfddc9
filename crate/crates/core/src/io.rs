//! Reading and writing graphs.
//!
//! * edgelist: a header line `n m`, then `m` lines `u v` with 0-based
//!   vertices. Blank lines and lines starting with `#` are ignored.
//! * graph6: the short form only (`n <= 62`), optionally preceded by the
//!   `>>graph6<<` header.
//! * dot: an undirected graph whose node labels are the vertex names.
//! * json: `{"n": .., "edges": [[u, v], ..], "names": [..]}`, with `names`
//!   present only for named graphs.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Edgelist,
    Graph6,
    Dot,
    Json,
}

impl Format {
    pub fn can_parse(self) -> bool {
        matches!(self, Format::Edgelist | Format::Graph6)
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "edges" => Ok(Format::Edgelist),
            "graph6" | "g6" => Ok(Format::Graph6),
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            other => Err(format!(
                "unknown format `{other}` (expected edgelist, graph6, dot or json)"
            )),
        }
    }
}

const GRAPH6_HEADER: &str = ">>graph6<<";
/// Largest order the graph6 short form can express.
pub const GRAPH6_SHORT_MAX: usize = 62;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Guesses the input format: graph6 strings never start with a digit.
pub fn sniff(text: &str) -> Format {
    match content_lines(text).next() {
        Some((_, l)) if l.starts_with(|c: char| c.is_ascii_digit()) => Format::Edgelist,
        _ => Format::Graph6,
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Edgelist => parse_edgelist(text),
        Format::Graph6 => {
            let mut graphs = parse_graph6_lines(text)?;
            match graphs.len() {
                1 => Ok(graphs.pop().unwrap()),
                0 => Err(parse_err(1, "no graph6 string found")),
                k => Err(parse_err(
                    1,
                    format!("expected one graph6 string, found {k}"),
                )),
            }
        }
        Format::Dot | Format::Json => Err(parse_err(0, "dot and json are output-only formats")),
    }
}

pub fn emit_graph(g: &Graph, format: Format) -> Result<String> {
    match format {
        Format::Edgelist => Ok(to_edgelist(g)),
        Format::Graph6 => to_graph6(g),
        Format::Dot => Ok(to_dot(g)),
        Format::Json => Ok(to_json(g)),
    }
}

pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = nums[..] else {
        return Err(parse_err(hl, "header must be `n m`"));
    };
    let n: usize = n
        .parse()
        .map_err(|_| parse_err(hl, format!("bad vertex count `{n}`")))?;
    let m: usize = m
        .parse()
        .map_err(|_| parse_err(hl, format!("bad edge count `{m}`")))?;
    let mut edges = Vec::with_capacity(m);
    for (ln, line) in lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = parts[..] else {
            return Err(parse_err(ln, "edge lines must be `u v`"));
        };
        let u: usize = u
            .parse()
            .map_err(|_| parse_err(ln, format!("bad vertex `{u}`")))?;
        let v: usize = v
            .parse()
            .map_err(|_| parse_err(ln, format!("bad vertex `{v}`")))?;
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if edges.iter().any(|&e| e == (u, v) || e == (v, u)) {
            return Err(parse_err(ln, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            hl,
            format!("header promises {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

pub fn to_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Decodes one graph6 string (no header, no trailing newline).
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s).trim();
    let bytes = s.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(parse_err(1, "empty graph6 string"));
    };
    if first == b'~' {
        return Err(Error::Graph6LongForm);
    }
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse_err(
            1,
            format!("byte {bad:#04x} is outside the graph6 range"),
        ));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let body = &bytes[1..];
    if body.len() != bits.div_ceil(6) {
        return Err(parse_err(
            1,
            format!(
                "graph6 body for n={n} needs {} bytes, found {}",
                bits.div_ceil(6),
                body.len()
            ),
        ));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..body.len() * 6).any(bit) {
        return Err(parse_err(1, "non-zero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Decodes a file of graph6 strings, one per line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    content_lines(text)
        .map(|(ln, l)| {
            parse_graph6(l).map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse { line: ln, msg },
                other => other,
            })
        })
        .collect()
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_SHORT_MAX {
        return Err(Error::Graph6LongForm);
    }
    let mut out = vec![n as u8 + 63];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        writeln!(out, "  {v} [label=\"{}\"];", dot_escape(&g.name(v))).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    names: Option<&'a [String]>,
}

pub fn json_value(g: &Graph) -> serde_json::Value {
    serde_json::to_value(JsonGraph {
        n: g.n(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
        names: g.names(),
    })
    .expect("graph serializes")
}

pub fn to_json(g: &Graph) -> String {
    let mut s = serde_json::to_string_pretty(&json_value(g)).expect("graph serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compressed::compressed_cliques_graph;
    use crate::families::FamilySpec;
    use proptest::prelude::*;

    fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            Graph::from_edges(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .unwrap()
        })
    }

    #[test]
    fn edgelist_examples() {
        let g = parse_edgelist("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!(to_edgelist(&g), "3 2\n0 1\n1 2\n");
        let commented = "# a path\n3 2\n\n0 1\n  1 2  \n";
        assert_eq!(parse_edgelist(commented).unwrap(), g);
        assert_eq!(sniff(commented), Format::Edgelist);
    }

    #[test]
    fn edgelist_errors() {
        assert!(matches!(
            parse_edgelist(""),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_edgelist("3\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_edgelist("3 1\n0 3\n"),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(
            parse_edgelist("3 2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_edgelist("3 2\n0 1\n1 0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_edgelist("3 1\n1 1\n"),
            Err(Error::SelfLoop(1))
        ));
        assert!(matches!(
            parse_edgelist("3 1\n0 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn graph6_known_strings() {
        // Reference encodings: the empty graph on 0 vertices, K2, P3 and K4.
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(to_graph6(&k2).unwrap(), "A_");
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(to_graph6(&p3).unwrap(), "Bg");
        let k4 =
            Graph::from_edges(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap();
        assert_eq!(to_graph6(&k4).unwrap(), "C~");
        let g = parse_graph6("Bw").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(to_graph6(&g).unwrap(), "Bw");
        assert_eq!(parse_graph6(">>graph6<<Bg").unwrap(), p3);
    }

    #[test]
    fn graph6_round_trips_every_small_graph() {
        for n in 0..=5 {
            for g in all_graphs(n) {
                let s = to_graph6(&g).unwrap();
                assert_eq!(parse_graph6(&s).unwrap(), g);
                assert_eq!(parse_edgelist(&to_edgelist(&g)).unwrap(), g);
                assert_eq!(sniff(&s), Format::Graph6);
            }
        }
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6("~?@?"), Err(Error::Graph6LongForm)));
        assert!(matches!(parse_graph6("B"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("Bgg"), Err(Error::Parse { .. })));
        // P3 is "Bg"; "Bh" sets a padding bit.
        assert!(matches!(parse_graph6("Bh"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("B\u{7f}"), Err(Error::Parse { .. })));
        assert!(matches!(
            to_graph6(&Graph::empty(63).unwrap()),
            Err(Error::Graph6LongForm)
        ));
        assert!(matches!(
            parse_graph6_lines("Bg\n\nB\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn dot_uses_cell_labels() {
        let g = FamilySpec::Circulant {
            n: 6,
            jumps: vec![1, 2],
        }
        .generate()
        .unwrap();
        let cg = compressed_cliques_graph(&g).unwrap();
        let dot = to_dot(cg.graph());
        assert_eq!(dot.matches("[label=").count(), 6);
        for label in ["{1,2}", "{1,3}", "{1,4}", "{2,3}", "{2,4}", "{3,4}"] {
            assert!(
                dot.contains(&format!("[label=\"{label}\"]")),
                "{label} missing from\n{dot}"
            );
        }
        assert_eq!(dot.matches(" -- ").count(), 12);
    }

    #[test]
    fn json_shape() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let v = json_value(&g);
        assert_eq!(v, serde_json::json!({"n": 3, "edges": [[0, 1]]}));
        let named = g.with_names(vec!["a".into(), "b".into(), "c".into()]);
        assert_eq!(
            json_value(&named)["names"],
            serde_json::json!(["a", "b", "c"])
        );
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=GRAPH6_SHORT_MAX).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut k = 0;
                let mut edges = Vec::new();
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph()) {
            let s = to_graph6(&g).unwrap();
            prop_assert_eq!(parse_graph6(&s).unwrap(), g.clone());
            prop_assert_eq!(parse_graph(&to_edgelist(&g), Format::Edgelist).unwrap(), g);
        }
    }
}
