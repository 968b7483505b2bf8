//! Orders, powers, colons and localization of monomial ideals.

use edgeideal::{Monomial, MonomialIdeal, PrimeSupport};

fn main() -> edgeideal::Result<()> {
    let n = 7;
    let a = Monomial::parse("x1x4", n)?;
    let b = Monomial::parse("x1x5", n)?;
    println!("{a} vs {b} in lex: {:?}", a.lex_cmp(&b)?);

    let (c, d) = (Monomial::parse("x1x5", 5)?, Monomial::parse("x2x4", 5)?);
    println!("{c} vs {d} in revlex: {:?}", c.revlex_cmp(&d)?);

    let i = MonomialIdeal::from_gens(3, ["x1x2", "x1x3"].map(|s| Monomial::parse(s, 3).unwrap()))?;
    println!("I = {i}, I^2 = {}", i.power(2)?);

    let prefix = ["x1x4", "x1x5", "x1x6", "x1x7", "x2x5"]
        .iter()
        .map(|s| Monomial::parse(s, n))
        .collect::<edgeideal::Result<Vec<_>>>()?;
    let prefix = MonomialIdeal::from_gens(n, prefix)?;
    let u = Monomial::parse("x2x6", n)?;
    println!("{prefix} : {u} = {}", prefix.colon_by_monomial(&u)?);

    let j = MonomialIdeal::from_gens(2, ["x1^2", "x1x2"].map(|s| Monomial::parse(s, 2).unwrap()))?;
    let m = PrimeSupport::full(2).to_ideal(2)?;
    println!("{j} : {m} = {}", j.colon_by_ideal(&m)?);

    let k = MonomialIdeal::from_gens(5, ["x1x4", "x2x5"].map(|s| Monomial::parse(s, 5).unwrap()))?;
    let support = PrimeSupport::new([1, 2]);
    println!("{k} localized at {support} = {}", k.localize(&support)?);

    println!("as JSON: {}", serde_json::to_string(&i).expect("serializable"));
    Ok(())
}
