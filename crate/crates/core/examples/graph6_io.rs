//! Converts a graph between edgelist, graph6, dot and json.
//!
//! cargo run --example graph6_io -- 'Dhc'

use compressed_cliques::io::{self, Format};

fn main() -> compressed_cliques::Result<()> {
    let input = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n".to_string());
    let g = io::parse_graph(&input, io::sniff(&input))?;
    for f in [Format::Edgelist, Format::Graph6, Format::Dot, Format::Json] {
        println!("--- {f:?}\n{}", io::emit_graph(&g, f)?.trim_end());
    }
    let back = io::parse_graph6(&io::to_graph6(&g)?)?;
    assert_eq!(back, g);
    Ok(())
}
