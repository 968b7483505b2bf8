//! d-paths, anti-d-paths, stars and lexsegments, with the graph predicates
//! and vertex covers.

use edgeideal::{anti_d_path, d_path, lexsegment_final, lexsegment_initial, star, Bipartiteness, Monomial};

fn main() -> edgeideal::Result<()> {
    let path = d_path(7, 2)?;
    println!("2-path on 7 vertices: {} edges, chordal: {}", path.edge_count(), path.is_chordal());

    let anti = anti_d_path(7, 2)?;
    println!("anti-2-path edge ideal: {}", anti.edge_ideal());
    println!("maximal independent sets: {:?}", anti.maximal_independent_sets()?);
    let covers: Vec<String> = anti.minimal_vertex_cover_primes()?.iter().map(ToString::to_string).collect();
    println!("minimal primes: {}", covers.join(" "));

    for (n, d) in [(6, 2), (5, 1)] {
        match anti_d_path(n, d)?.is_bipartite() {
            Bipartiteness::Bipartite { part1, part2 } => {
                println!("anti_d_path({n},{d}) is bipartite: {part1:?} / {part2:?}")
            }
            Bipartiteness::OddCycle { cycle } => println!("anti_d_path({n},{d}) has odd cycle {cycle:?}"),
        }
    }

    println!("star(5): {}", star(5)?.edge_ideal());
    println!("L^i(x1x4), n=4: {}", lexsegment_initial(&Monomial::parse("x1x4", 4)?, 4)?);
    println!("L^f(x2x4), n=4: {}", lexsegment_final(&Monomial::parse("x2x4", 4)?, 4)?);
    Ok(())
}
