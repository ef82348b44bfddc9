//! Necessary conditions for being a compressed cliques graph.

use compressed_cliques::detect;
use compressed_cliques::families::FamilySpec;

fn main() -> compressed_cliques::Result<()> {
    for s in ["Kb:1,3", "W:7", "T3", "C:6", "circ:6:1,2", "Jprime:4"] {
        let g = s.parse::<FamilySpec>()?.generate()?;
        let r = detect::check_compressed_candidate(&g);
        println!(
            "{s:<11} claw-free={:<5} suspended-cycle-free={:<5} diamond={:<5} J'({},2)={:<5} chordal={}",
            r.claw_free,
            r.no_suspended_cycle,
            r.diamond.is_some(),
            r.clique_cover_number,
            r.embeds_in_jprime,
            detect::is_chordal(&g),
        );
    }
    Ok(())
}
