//! Monomial ideals stored by their minimal generators.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::{lex, Monomial, MAX_DEGREE, MAX_VARS};
use crate::staircase::{Staircase, MAX_CELLS};

/// A monomial prime `(x_i : i ∈ vars)`; the empty support stands for the
/// zero ideal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct PrimeSupport {
    vars: Vec<usize>,
}

impl PrimeSupport {
    pub fn new(vars: impl IntoIterator<Item = usize>) -> Self {
        let mut vars: Vec<usize> = vars.into_iter().collect();
        vars.sort_unstable();
        vars.dedup();
        Self { vars }
    }

    /// The maximal ideal `(x_1, ..., x_n)`.
    pub fn full(n: usize) -> Self {
        Self { vars: (1..=n).collect() }
    }

    /// Support given by the set bits of `mask` (bit `i - 1` for `x_i`).
    pub fn from_mask(mask: u64) -> Self {
        Self::new((0..64).filter(|b| mask >> b & 1 == 1).map(|b| b + 1))
    }

    pub fn mask(&self) -> u64 {
        self.vars.iter().fold(0, |m, &i| m | 1 << (i - 1))
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn contains(&self, i: usize) -> bool {
        self.vars.binary_search(&i).is_ok()
    }

    /// Height of the prime.
    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn complement(&self, n: usize) -> Self {
        Self::new((1..=n).filter(|i| !self.contains(*i)))
    }

    pub fn check(&self, n: usize) -> Result<()> {
        match self.vars.last() {
            Some(&i) if i > n || self.vars[0] == 0 => Err(Error::argument(format!(
                "support {self} is not a subset of 1..={n}"
            ))),
            _ => Ok(()),
        }
    }

    pub fn to_ideal(&self, n: usize) -> Result<MonomialIdeal> {
        self.check(n)?;
        let gens = self
            .vars
            .iter()
            .map(|&i| Monomial::var(n, i))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::from_gens(n, gens)
    }
}

impl fmt::Display for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vars.is_empty() {
            return write!(f, "(0)");
        }
        let names: Vec<String> = self.vars.iter().map(|i| format!("x{i}")).collect();
        write!(f, "({})", names.join(","))
    }
}

impl Serialize for PrimeSupport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.vars.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PrimeSupport {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vars = Vec::<usize>::deserialize(d)?;
        if vars.iter().any(|&i| i == 0 || i > MAX_VARS) {
            return Err(serde::de::Error::custom("variable index out of range"));
        }
        Ok(Self::new(vars))
    }
}

/// A monomial ideal in `K[x_1, ..., x_n]`.
///
/// Generators are always minimal and sorted in decreasing lex order. The
/// zero ideal has no generators; the unit ideal has the single generator 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Inclusion-minimal antichain generating the same ideal as `gens`.
pub fn minimalize(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    let gens: Vec<Monomial> = gens.into_iter().collect();
    if let Some(g) = gens.iter().find(|g| g.n() != n) {
        return Err(Error::Dimension {
            expected: n,
            found: g.n(),
        });
    }
    Ok(MonomialIdeal::minimalized(n, gens))
}

impl MonomialIdeal {
    fn minimalized(n: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| lex(b, a)));
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        // Distinct monomials of equal degree never divide each other, so
        // each candidate is only tested against strictly smaller degrees.
        let mut lower = 0;
        for (idx, g) in gens.iter().enumerate() {
            if idx > 0 && gens[idx - 1].degree() < g.degree() {
                lower = kept.len();
            }
            if !kept[..lower].iter().any(|h| h.divides(g)) {
                kept.push(g.clone());
            }
        }
        kept.sort_unstable_by(|a, b| lex(b, a));
        Self { n, gens: kept }
    }

    pub fn from_gens(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::Resource {
                what: "number of variables",
                limit: MAX_VARS,
                actual: n,
            });
        }
        minimalize(n, gens)
    }

    pub fn zero(n: usize) -> Self {
        Self { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        Self {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Minimal generators, decreasing lex.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Common degree of the generators, if they all have the same degree.
    pub fn generating_degree(&self) -> Option<u64> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Least common multiple of all generators (1 for the zero ideal).
    pub fn lcm(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.n), |acc, g| acc.lcm(g))
    }

    /// Generators sorted increasing in revlex.
    pub fn gens_increasing_revlex(&self) -> Vec<Monomial> {
        let mut gens = self.gens.clone();
        gens.sort_unstable_by(crate::monomial::revlex);
        gens
    }

    fn check_n(&self, n: usize) -> Result<()> {
        if self.n != n {
            return Err(Error::Dimension {
                expected: self.n,
                found: n,
            });
        }
        Ok(())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        m.n() == self.n && self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_n(other.n)?;
        if let (Some(a), Some(b)) = (self.max_degree(), other.max_degree()) {
            if a + b > MAX_DEGREE {
                return Err(Error::Resource {
                    what: "monomial degree",
                    limit: MAX_DEGREE as usize,
                    actual: (a + b) as usize,
                });
            }
        }
        let mut prods = Vec::with_capacity(self.len() * other.len());
        for a in &self.gens {
            for b in &other.gens {
                prods.push(a.mul(b));
            }
        }
        Ok(Self::minimalized(self.n, prods))
    }

    fn max_degree(&self) -> Option<u64> {
        self.gens.iter().map(Monomial::degree).max()
    }

    /// Minimal generators of `self^k`, by iterated products.
    pub fn power(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Ok(Self::unit(self.n));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `self : f`, generated by `g / gcd(g, f)`.
    pub fn colon_by_monomial(&self, f: &Monomial) -> Result<Self> {
        self.check_n(f.n())?;
        Ok(Self::minimalized(
            self.n,
            self.gens.iter().map(|g| g.quotient_by_gcd(f)).collect(),
        ))
    }

    /// `self : J`, the intersection of `self : g` over `g ∈ G(J)`.
    pub fn colon_by_ideal(&self, other: &Self) -> Result<Self> {
        self.check_n(other.n)?;
        let mut gens = other.gens.iter();
        let first = gens
            .next()
            .ok_or_else(|| Error::argument("colon by the zero ideal"))?;
        let mut acc = self.colon_by_monomial(first)?;
        for g in gens {
            acc = acc.intersection(&self.colon_by_monomial(g)?)?;
        }
        Ok(acc)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_n(other.n)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.n));
        }
        if self.len() * other.len() > 1024 {
            let bounds = self.lcm().lcm(&other.lcm());
            if Staircase::cell_count(bounds.exps()).is_some_and(|c| c <= MAX_CELLS) {
                return Ok(self.intersection_dense(other, bounds.exps()));
            }
        }
        Ok(self.intersection_pairwise(other))
    }

    pub(crate) fn intersection_pairwise(&self, other: &Self) -> Self {
        let mut lcms = Vec::with_capacity(self.len() * other.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm(b));
            }
        }
        Self::minimalized(self.n, lcms)
    }

    pub(crate) fn intersection_dense(&self, other: &Self, bounds: &[u32]) -> Self {
        let a = Staircase::new(bounds, &self.gens).expect("bounds cover generators");
        let b = Staircase::new(bounds, &other.gens).expect("bounds cover generators");
        let mut gens = a.and(&b).minimal_generators();
        gens.sort_unstable_by(|x, y| lex(y, x));
        Self { n: self.n, gens }
    }

    /// Set `x_j = 1` for every `j ∉ support`.
    pub fn localize(&self, support: &PrimeSupport) -> Result<Self> {
        support.check(self.n)?;
        let keep: Vec<bool> = (1..=self.n).map(|i| support.contains(i)).collect();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                Monomial::from_exps(
                    g.exps()
                        .iter()
                        .zip(&keep)
                        .map(|(&e, &k)| if k { e } else { 0 })
                        .collect(),
                )
            })
            .collect();
        Ok(Self::minimalized(self.n, gens))
    }

    /// Dense membership table over the lcm box of the generators.
    pub fn staircase(&self) -> Result<Staircase> {
        Staircase::new(self.lcm().exps(), &self.gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        let gens: Vec<String> = self.gens.iter().map(Monomial::to_string).collect();
        write!(f, "({})", gens.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    n: usize,
    gens: Vec<Monomial>,
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IdealJson {
            n: self.n,
            gens: self.gens.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = IdealJson::deserialize(d)?;
        MonomialIdeal::from_gens(raw.n, raw.gens).map_err(serde::de::Error::custom)
    }
}

/// Sort monomials by decreasing lex.
pub fn sort_decreasing_lex(gens: &mut [Monomial]) {
    gens.sort_unstable_by(|a, b| lex(b, a));
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(s: &str, n: usize) -> Monomial {
        Monomial::parse(s, n).unwrap()
    }

    fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::from_gens(n, gens.iter().map(|s| mono(s, n))).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(3, &["x1x2", "x1x2x3"]), ideal(3, &["x1x2"]));
        assert!(minimalize(3, vec![]).unwrap().is_zero());
        let i = ideal(2, &["x1^2", "x1x2", "x2^2", "x1^2x2"]);
        assert_eq!(i.gens(), &[mono("x1^2", 2), mono("x1x2", 2), mono("x2^2", 2)]);
        assert!(minimalize(3, vec![mono("x1", 2)]).is_err());
    }

    #[test]
    fn power_examples() {
        let i = ideal(3, &["x1x2", "x1x3"]);
        assert_eq!(
            i.power(2).unwrap(),
            ideal(3, &["x1^2x2^2", "x1^2x2x3", "x1^2x3^2"])
        );
        assert_eq!(i.power(1).unwrap(), i);
        assert!(i.power(0).unwrap().is_unit());
        assert!(MonomialIdeal::zero(3).power(2).unwrap().is_zero());
        assert!(MonomialIdeal::zero(3).power(0).unwrap().is_unit());
    }

    #[test]
    fn colon_examples() {
        let i = ideal(3, &["x1x2"]);
        assert_eq!(i.colon_by_monomial(&mono("x1x3", 3)).unwrap(), ideal(3, &["x2"]));
        assert_eq!(i.colon_by_monomial(&Monomial::one(3)).unwrap(), i);
        let i = ideal(7, &["x1x4", "x1x5", "x1x6", "x1x7", "x2x5"]);
        assert_eq!(
            i.colon_by_monomial(&mono("x2x6", 7)).unwrap(),
            ideal(7, &["x1", "x5"])
        );
        assert!(MonomialIdeal::zero(2)
            .colon_by_monomial(&mono("x1", 2))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn colon_by_ideal_examples() {
        let i = ideal(2, &["x1", "x2"]);
        assert!(i.colon_by_ideal(&i).unwrap().is_unit());
        assert_eq!(i.colon_by_ideal(&MonomialIdeal::unit(2)).unwrap(), i);
        let j = ideal(2, &["x1^2", "x1x2"]);
        assert_eq!(j.colon_by_ideal(&i).unwrap(), ideal(2, &["x1"]));
        assert!(j.colon_by_ideal(&MonomialIdeal::zero(2)).is_err());
    }

    #[test]
    fn localize_examples() {
        let i = ideal(5, &["x1x4", "x2x5"]);
        assert_eq!(
            i.localize(&PrimeSupport::new([1, 2])).unwrap(),
            ideal(5, &["x1", "x2"])
        );
        assert_eq!(i.localize(&PrimeSupport::full(5)).unwrap(), i);
        let i = ideal(3, &["x1x3", "x2x3"]);
        assert_eq!(i.localize(&PrimeSupport::new([3])).unwrap(), ideal(3, &["x3"]));
        assert!(i.localize(&PrimeSupport::new([4])).is_err());
    }

    #[test]
    fn contains_examples() {
        assert!(ideal(2, &["x1x2"]).contains(&mono("x1^2x2", 2)));
        assert!(!MonomialIdeal::zero(2).contains(&mono("x1", 2)));
        assert!(MonomialIdeal::unit(2).contains(&Monomial::one(2)));
    }

    #[test]
    fn revlex_sorting() {
        let i = ideal(4, &["x2x4", "x3x4"]);
        assert_eq!(i.gens_increasing_revlex(), vec![mono("x3x4", 4), mono("x2x4", 4)]);
    }

    #[test]
    fn json_shape() {
        let i = ideal(3, &["x1x3", "x1x2"]);
        let s = serde_json::to_string(&i).unwrap();
        assert_eq!(s, r#"{"n":3,"gens":[[1,1,0],[1,0,1]]}"#);
        let back: MonomialIdeal = serde_json::from_str(r#"{"n":3,"gens":[[1,0,1],[1,1,0],[1,1,1]]}"#).unwrap();
        assert_eq!(back, i);
        assert!(serde_json::from_str::<MonomialIdeal>(r#"{"n":3,"gens":[[1,0]]}"#).is_err());
    }

    fn arb_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
        proptest::collection::vec(proptest::collection::vec(0u32..3, n), 1..7).prop_map(
            move |gens| MonomialIdeal::minimalized(n, gens.into_iter().map(Monomial::from_exps).collect()),
        )
    }

    fn arb_mono(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..4, n).prop_map(Monomial::from_exps)
    }

    fn is_antichain(i: &MonomialIdeal) -> bool {
        i.gens().iter().enumerate().all(|(a, g)| {
            i.gens().iter().enumerate().all(|(b, h)| a == b || !g.divides(h))
        })
    }

    proptest! {
        #[test]
        fn colon_soundness(i in arb_ideal(4), f in arb_mono(4), m in arb_mono(4)) {
            let c = i.colon_by_monomial(&f).unwrap();
            prop_assert!(is_antichain(&c));
            prop_assert_eq!(c.contains(&m), i.contains(&f.mul(&m)));
        }

        #[test]
        fn power_additivity(i in arb_ideal(3), a in 1usize..3, b in 1usize..3) {
            let pa = i.power(a).unwrap();
            let pb = i.power(b).unwrap();
            let pab = i.power(a + b).unwrap();
            prop_assert!(is_antichain(&pab));
            let prod = pa.product(&pb).unwrap();
            for g in prod.gens() {
                prop_assert!(pab.contains(g));
            }
            prop_assert_eq!(prod, pab);
        }

        #[test]
        fn localize_idempotent(i in arb_ideal(4), mask in 0u64..16) {
            let a = PrimeSupport::from_mask(mask);
            let once = i.localize(&a).unwrap();
            prop_assert!(is_antichain(&once));
            prop_assert_eq!(once.localize(&a).unwrap(), once);
        }

        #[test]
        fn intersection_routes_agree(i in arb_ideal(4), j in arb_ideal(4), m in arb_mono(4)) {
            let bounds = i.lcm().lcm(&j.lcm());
            let pairwise = i.intersection_pairwise(&j);
            let dense = i.intersection_dense(&j, bounds.exps());
            prop_assert_eq!(&pairwise, &dense);
            prop_assert_eq!(pairwise.contains(&m), i.contains(&m) && j.contains(&m));
        }

        #[test]
        fn colon_by_ideal_soundness(i in arb_ideal(3), j in arb_ideal(3), m in arb_mono(3)) {
            let c = i.colon_by_ideal(&j).unwrap();
            let expected = j.gens().iter().all(|g| i.contains(&g.mul(&m)));
            prop_assert_eq!(c.contains(&m), expected);
        }
    }
}
