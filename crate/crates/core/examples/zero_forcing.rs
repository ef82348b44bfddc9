//! Positive zero forcing: exact numbers, a forcing record, its forest and the
//! reduced graph.

use compressed_cliques::families::FamilySpec;
use compressed_cliques::forcing;

fn main() -> compressed_cliques::Result<()> {
    for n in 3..=6 {
        let g = FamilySpec::Musical(n).generate()?;
        println!("Z+(M_{n}) = {}", forcing::zplus(&g).value);
    }

    let g = "Kb:1,3".parse::<FamilySpec>()?.generate()?;
    let z = forcing::zplus(&g);
    println!(
        "\nstar K_1,3: Z+ = {} from {}, Z = {}",
        z.value,
        z.set,
        forcing::standard_zero_forcing(&g)
    );
    for s in &z.record.steps {
        println!(
            "  {} forces {} (white component {})",
            s.forcer, s.forced, s.component
        );
    }
    let forest = forcing::forcing_forest(&g, &z.record)?;
    println!("  forest parents: {:?}", forest.parent);

    let h = "vc:Kb:2,3".parse::<FamilySpec>()?.generate()?;
    let r = forcing::reduced_graph(&h);
    println!(
        "\nvertex-clique graph of K_2,3: n={}, Z+ = {}; reduced graph n={}, m={}, Z+ = {}",
        h.n(),
        forcing::zplus(&h).value,
        r.n(),
        r.edge_count(),
        forcing::zplus(&r).value
    );
    Ok(())
}
