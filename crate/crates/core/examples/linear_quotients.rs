//! Linear-quotient certificates from colon ideals, the closed-form sets,
//! and Betti numbers from set sizes.

use edgeideal::linear_quotients::{
    antipath_power_generators, betti_from_sets, closed_form_certificate, lq_certificate,
    star_power_betti,
};
use edgeideal::{anti_d_path, Family, Monomial};

fn main() -> edgeideal::Result<()> {
    let ideal = anti_d_path(7, 2)?.edge_ideal();
    let cert = lq_certificate(ideal.gens())?;
    for (u, set) in cert.order().iter().zip(cert.sets()) {
        println!("{u:>6}  set = {set:?}");
    }
    let betti: Vec<u64> = (0..4).map(|i| betti_from_sets(&cert, i)).collect::<Result<_, _>>()?;
    println!("betti numbers: {betti:?}");

    let family = Family::AntiDPath { n: 7, d: 2 };
    let closed = closed_form_certificate(&family, 2)?;
    let colon = lq_certificate(closed.order())?;
    println!("I^2: {} generators, closed form matches colons: {}", closed.len(), closed == colon);
    println!(
        "enumerated generators match products: {}",
        antipath_power_generators(7, 2, 2)? == ideal.power(2)?
    );

    let bad = ["x1x2", "x3x4"].map(|s| Monomial::parse(s, 4).unwrap());
    println!("(x1x2, x3x4): {}", lq_certificate(&bad).unwrap_err());

    let star_betti: Vec<u64> = (0..3).map(|i| star_power_betti(3, 2, i)).collect::<Result<_, _>>()?;
    println!("star(3), t=2: {star_betti:?}");
    Ok(())
}
