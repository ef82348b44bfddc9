//! Builds compressed cliques graphs and shows the cell labels and the map phi.

use compressed_cliques::compressed;
use compressed_cliques::families::FamilySpec;
use compressed_cliques::io;

fn main() -> compressed_cliques::Result<()> {
    for s in [
        "P:4",
        "Kminus:5",
        "musical:4",
        "circ:6:1,2",
        "coc:4,4,4,4:1",
    ] {
        let g = s.parse::<FamilySpec>()?.generate()?;
        let cg = compressed::compressed_cliques_graph(&g)?;
        let labels: Vec<String> = cg.labels().iter().map(|l| l.to_string()).collect();
        println!(
            "{s}: {} vertices compress to {}: {}",
            g.n(),
            cg.graph().n(),
            labels.join(" ")
        );
        let phi: Vec<String> = (0..g.n())
            .map(|v| format!("{v}->{}", cg.labels()[cg.phi()[v]]))
            .collect();
        println!("  phi: {}", phi.join(" "));
        println!("  self-compressed: {}", compressed::is_self_compressed(&g)?);
    }

    let circ = "circ:6:1,2".parse::<FamilySpec>()?.generate()?;
    println!(
        "\ncirculant compression in dot:\n{}",
        io::to_dot(compressed::compressed_cliques_graph(&circ)?.graph())
    );
    Ok(())
}
