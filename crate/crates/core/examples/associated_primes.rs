//! Associated primes of powers, witnesses, and normal torsion-freeness.

use edgeideal::ass::{
    ass_chain, ass_primes, check_socle_witness, is_normally_torsion_free, theorem_witness,
    verify_antipath_ass_theorem, witness_search,
};
use edgeideal::{anti_d_path, Monomial, MonomialIdeal, PrimeSupport};

fn show(primes: &[PrimeSupport]) -> String {
    primes.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn main() -> edgeideal::Result<()> {
    let j = MonomialIdeal::from_gens(2, ["x1^2", "x1x2"].map(|s| Monomial::parse(s, 2).unwrap()))?;
    println!("Ass({j}) = {}", show(&ass_primes(&j)?));

    let g = anti_d_path(5, 1)?;
    let chain = ass_chain(&g.edge_ideal(), 3)?;
    for k in 1..=chain.depth() {
        println!("Ass(S/I^{k}) = {}", show(chain.entry(k)));
    }

    let square = g.edge_ideal().power(2)?;
    let full = PrimeSupport::full(5);
    if let Some(m) = witness_search(&square, &full)? {
        println!("searched witness for {full}: {m}");
    }
    let m = theorem_witness(5, 1, 2)?;
    println!("explicit witness {m}: passes {}", check_socle_witness(&square, &m).passes());

    let verdict = is_normally_torsion_free(&g.edge_ideal(), 3, Some(&g))?;
    println!("{}", serde_json::to_string(&verdict).expect("serializable"));
    let verdict = is_normally_torsion_free(&square, 3, None)?;
    println!("I^2: {}", serde_json::to_string(&verdict).expect("serializable"));

    for (n, d) in [(7, 2), (6, 2)] {
        let r = verify_antipath_ass_theorem(n, d, 3)?;
        println!("anti_d_path({n},{d}): bipartite branch {}, passes {}", r.bipartite_branch, r.passes());
    }
    Ok(())
}
