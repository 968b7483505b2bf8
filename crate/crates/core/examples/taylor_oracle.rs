//! Betti numbers from the Taylor complex over GF(2), by direct subset
//! enumeration and through the per-multidegree nerves.

use edgeideal::betti_oracle::{
    is_linear_resolution, projective_dimension, taylor_betti, taylor_betti_direct, TaylorComplex,
};
use edgeideal::{anti_d_path, Monomial, MonomialIdeal};

fn main() -> edgeideal::Result<()> {
    let ideal = anti_d_path(7, 2)?.edge_ideal();
    let table = taylor_betti(&ideal)?;
    println!("anti_d_path(7,2): {:?}", table.totals());
    println!("direct route agrees: {}", taylor_betti_direct(&ideal)? == table);
    println!("pd(I) = {}, linear: {}", projective_dimension(&ideal)?, is_linear_resolution(&ideal)?);
    print!("{}", table.to_csv());

    let ci = MonomialIdeal::from_gens(4, ["x1x2", "x3x4"].map(|s| Monomial::parse(s, 4).unwrap()))?;
    let strands = TaylorComplex::new(ci.gens().to_vec())?.strands()?;
    for s in &strands {
        println!("strand {}: subsets {:?}, betti {:?}", s.multidegree, s.counts, s.betti);
    }
    println!("(x1x2, x3x4) linear: {}", is_linear_resolution(&ci)?);

    let big = anti_d_path(8, 1)?.edge_ideal().power(3)?;
    println!("anti_d_path(8,1)^3, {} generators: {:?}", big.len(), taylor_betti(&big)?.totals());
    Ok(())
}
