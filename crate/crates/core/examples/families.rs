//! Generates a few family members and prints their basic statistics.
//!
//! cargo run --example families -- "musical:5" "X:8:4,4,4,4"

use compressed_cliques::families::FamilySpec;
use compressed_cliques::io;

fn main() -> compressed_cliques::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let specs = if args.is_empty() {
        [
            "circ:6:1,2",
            "J:5",
            "Jprime:4",
            "musical:4",
            "coc:4,4,4,4:1",
            "vc:Kb:2,3",
            "X:8:4,4,4,4",
        ]
        .map(String::from)
        .to_vec()
    } else {
        args
    };
    for s in specs {
        let spec: FamilySpec = s.parse()?;
        let g = spec.generate()?;
        println!(
            "{:<16} {:<18} n={:<3} m={:<4} graph6={}",
            spec.to_string(),
            spec.kind(),
            g.n(),
            g.edge_count(),
            io::to_graph6(&g)?
        );
    }
    Ok(())
}
