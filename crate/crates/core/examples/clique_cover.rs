//! Clique cover numbers and min-max covers with simple intersection.

use compressed_cliques::cover::{self, CliqueCover};
use compressed_cliques::families::FamilySpec;

fn main() -> compressed_cliques::Result<()> {
    for s in ["W:6", "circ:6:1,2", "fig1", "musical:4"] {
        let g = s.parse::<FamilySpec>()?.generate()?;
        let min = cover::minimum_cover(&g);
        println!(
            "{s}: CC = {}, {} maximal cliques",
            min.len(),
            cover::maximal_cliques(&g).len()
        );
        println!("  a minimum cover: {min}");
        let si = cover::enumerate_minmax_si_covers(&g);
        println!("  min-max covers with simple intersection: {}", si.len());
        for c in &si {
            println!("    {c}");
        }
    }

    // The 2-tree has no min-max cover with simple intersection, yet a
    // three-clique cover with simple intersection exists if the cliques need
    // not be maximal.
    let fig1 = "fig1".parse::<FamilySpec>()?.generate()?;
    let cc = cover::clique_cover_number(&fig1);
    let relaxed: Vec<CliqueCover> = cover::simply_intersecting_covers(&fig1, cc);
    println!(
        "fig1: {} simply intersecting covers of size {cc} (not all maximal)",
        relaxed.len()
    );
    if let Some(c) = relaxed.first() {
        println!("  e.g. {}", c.clone().certify(&fig1)?);
    }
    Ok(())
}
