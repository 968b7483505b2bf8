//! Linear quotients: certificates computed from colon ideals, the closed
//! forms for `set(u)` in the three families, and the Betti numbers
//! `β_i(I) = Σ_u binom(|set(u)|, i)` they imply for ideals generated in one
//! degree.

use std::collections::HashSet;

use serde::Serialize;

use crate::betti_oracle::BettiTable;
use crate::error::{Error, Result};
use crate::families::Family;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// An ordering `u_1, ..., u_m` of minimal generators together with
/// `set(u_i)`, the variables generating `(u_1, ..., u_{i-1}) : u_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientCertificate {
    order: Vec<Monomial>,
    sets: Vec<Vec<usize>>,
}

impl QuotientCertificate {
    /// Assemble a certificate without checking it against colon ideals.
    pub fn from_parts(order: Vec<Monomial>, sets: Vec<Vec<usize>>) -> Result<Self> {
        if order.len() != sets.len() {
            return Err(Error::argument(format!(
                "{} generators but {} variable sets",
                order.len(),
                sets.len()
            )));
        }
        if sets.first().is_some_and(|s| !s.is_empty()) {
            return Err(Error::argument("the first generator has an empty colon"));
        }
        Ok(Self { order, sets })
    }

    pub fn order(&self) -> &[Monomial] {
        &self.order
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn set_sizes(&self) -> Vec<usize> {
        self.sets.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Betti numbers `Σ_u binom(|set(u)|, i)` for every `i`, placed in
    /// internal degree `δ + i` when all generators have degree `δ`.
    pub fn betti_table(&self) -> Result<BettiTable> {
        let mut table = BettiTable::default();
        let Some(first) = self.order.first() else {
            return Ok(table);
        };
        let delta = first.degree();
        if self.order.iter().any(|u| u.degree() != delta) {
            return Err(Error::argument(
                "Betti numbers from linear quotients need generators of one degree",
            ));
        }
        let top = self.sets.iter().map(Vec::len).max().unwrap_or(0);
        for i in 0..=top {
            table.add(i, delta + i as u64, betti_from_sets(self, i)?);
        }
        Ok(table)
    }
}

/// `binom(a, b)`, zero when `b < 0` or `b > a`; `None` on overflow.
pub fn binomial(a: i64, b: i64) -> Option<u128> {
    if b < 0 || a < 0 || b > a {
        return Some(0);
    }
    let b = b.min(a - b) as u128;
    let a = a as u128;
    let mut acc: u128 = 1;
    for k in 0..b {
        // exact: acc * (a - k) is divisible by k + 1 at every step
        acc = acc.checked_mul(a - k)? / (k + 1);
    }
    Some(acc)
}

/// Sum of `binom(size, i)` over `sizes`, as an exact `u64`.
pub(crate) fn binomial_sum(sizes: impl IntoIterator<Item = i64>, i: i64) -> Result<u64> {
    let mut acc: u128 = 0;
    for s in sizes {
        let b = binomial(s, i).ok_or(Error::Overflow("binomial coefficient"))?;
        acc = acc.checked_add(b).ok_or(Error::Overflow("Betti number"))?;
    }
    u64::try_from(acc).map_err(|_| Error::Overflow("Betti number"))
}

/// `β_i = Σ_u binom(|set(u)|, i)`; `β_0` is the number of generators.
pub fn betti_from_sets(cert: &QuotientCertificate, i: usize) -> Result<u64> {
    binomial_sum(cert.sets.iter().map(|s| s.len() as i64), i as i64)
}

/// Compute `set(u_i)` from the colon ideals `(u_1, ..., u_{i-1}) : u_i`,
/// failing at the first colon that is not generated by variables.
pub fn lq_certificate(gens: &[Monomial]) -> Result<QuotientCertificate> {
    let Some(first) = gens.first() else {
        return Ok(QuotientCertificate {
            order: Vec::new(),
            sets: Vec::new(),
        });
    };
    let n = first.n();
    let delta = first.degree();
    let mut seen = HashSet::with_capacity(gens.len());
    for g in gens {
        if g.n() != n {
            return Err(Error::Dimension { expected: n, found: g.n() });
        }
        if g.degree() != delta {
            return Err(Error::argument(
                "linear quotients are checked for generators of a single degree",
            ));
        }
        if !seen.insert(g) {
            return Err(Error::argument(format!("generator {g} is repeated")));
        }
    }
    let mut sets = Vec::with_capacity(gens.len());
    for (i, u) in gens.iter().enumerate() {
        sets.push(colon_variables(&gens[..i], u).map_err(|generator| {
            Error::NotLinearQuotients {
                position: i + 1,
                generator,
            }
        })?);
    }
    Ok(QuotientCertificate {
        order: gens.to_vec(),
        sets,
    })
}

/// Variables generating `(prefix) : u`, or a minimal generator of degree
/// at least two when the colon is not generated by variables.
fn colon_variables(prefix: &[Monomial], u: &Monomial) -> std::result::Result<Vec<usize>, Monomial> {
    let quotients: Vec<Monomial> = prefix.iter().map(|g| g.quotient_by_gcd(u)).collect();
    let mut vars = vec![false; u.n() + 1];
    for q in quotients.iter().filter(|q| q.degree() == 1) {
        vars[q.support()[0]] = true;
    }
    // The lowest-degree quotient avoiding every variable is a minimal
    // generator: any proper divisor among the quotients would have lower
    // degree and avoid the variables too.
    let offending = quotients
        .iter()
        .filter(|q| q.degree() >= 2 && q.support().iter().all(|&j| !vars[j]))
        .min_by_key(|q| q.degree());
    if let Some(q) = offending {
        return Err(q.clone());
    }
    Ok((1..=u.n()).filter(|&j| vars[j]).collect())
}

/// `set(u)` for a generator of a power `I^t` of an initial lexsegment edge
/// ideal, generators in decreasing lex order: the `r < max(u)` with
/// `ν_r(u) + 1 <= t`.
pub fn initial_lex_set(u: &Monomial, t: u32) -> Vec<usize> {
    let top = u.max_var().unwrap_or(0);
    (1..top).filter(|&r| u.exponent(r) < t).collect()
}

/// `|set(u)|`: `max(u) - 2` if `x_j^t | u` for some `j < max(u)`, otherwise
/// `max(u) - 1`.
pub fn initial_lex_set_size(u: &Monomial, t: u32) -> usize {
    let top = u.max_var().unwrap_or(0);
    let saturated = (1..top).any(|j| u.exponent(j) >= t);
    top.saturating_sub(if saturated { 2 } else { 1 })
}

/// `set(u)` for a generator of a power `I^t` of a final lexsegment edge
/// ideal, generators in increasing revlex order: the `r > min(u)` with
/// `ν_r(u) + 1 <= t`.
pub fn final_lex_set(u: &Monomial, t: u32, n: usize) -> Vec<usize> {
    let Some(low) = u.min_var() else {
        return Vec::new();
    };
    (low + 1..=n).filter(|&r| u.exponent(r) < t).collect()
}

/// `|set(u)|`: `n - min(u) - 1` if `x_j^t | u` for some `j > min(u)`,
/// otherwise `n - min(u)`.
pub fn final_lex_set_size(u: &Monomial, t: u32, n: usize) -> usize {
    let Some(low) = u.min_var() else {
        return 0;
    };
    let saturated = (low + 1..=n).any(|j| u.exponent(j) >= t);
    (n - low).saturating_sub(usize::from(saturated))
}

/// Index tuples `i_1 <= ... <= i_k <= j_1 <= ... <= j_k` with
/// `i_r + d < j_r`, each listed as `[i_1, ..., i_k, j_1, ..., j_k]`.
pub fn antipath_index_tuples(n: usize, d: usize, k: usize) -> Vec<Vec<usize>> {
    fn extend(seq: &mut Vec<usize>, n: usize, d: usize, k: usize, out: &mut Vec<Vec<usize>>) {
        if seq.len() == 2 * k {
            out.push(seq.clone());
            return;
        }
        let start = seq.last().copied().unwrap_or(1);
        for next in start..=n {
            let pos = seq.len();
            if pos >= k && seq[pos - k] + d >= next {
                continue;
            }
            seq.push(next);
            extend(seq, n, d, k, out);
            seq.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(2 * k), n, d, k, &mut out);
    out
}

/// Minimal generators of `I^k` for the anti-d-path edge ideal, enumerated
/// from index tuples rather than by multiplying.
pub fn antipath_power_generators(n: usize, d: usize, k: usize) -> Result<MonomialIdeal> {
    if n == 0 || d == 0 || k == 0 {
        return Err(Error::argument("anti-d-path powers need n, d, k >= 1"));
    }
    let gens = antipath_index_tuples(n, d, k)
        .into_iter()
        .map(|idx| Monomial::from_indices(n, &idx))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::from_gens(n, gens)
}

/// A generator `x_{i_1} ... x_{i_k} x_{j_1} ... x_{j_k}` split into its
/// sorted lower and upper halves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AntipathIndices {
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
}

impl AntipathIndices {
    pub fn decompose(u: &Monomial) -> Result<Self> {
        let idx = u.indices();
        if idx.is_empty() || !idx.len().is_multiple_of(2) {
            return Err(Error::argument(format!(
                "{u} does not have positive even degree"
            )));
        }
        let k = idx.len() / 2;
        Ok(Self {
            lower: idx[..k].to_vec(),
            upper: idx[k..].to_vec(),
        })
    }
}

/// `set(u) = {x_1, ..., x_{i_k - 1}} ∪ ⋃_r {x_s : i_r + d < s < j_r}`.
pub fn antipath_set(u: &AntipathIndices, d: usize) -> Vec<usize> {
    let last = *u.lower.last().expect("nonempty decomposition");
    let mut vars: Vec<usize> = (1..last).collect();
    for (&i, &j) in u.lower.iter().zip(&u.upper) {
        vars.extend(i + d + 1..j);
    }
    vars.sort_unstable();
    vars.dedup();
    vars
}

/// `β_i(I^t)` for the star ideal `(x_1x_2, ..., x_1x_n)`, summing
/// `binom(max(u) - 2, i)` over the generators `x_1^t w`, `deg w = t`.
pub fn star_power_betti(n: usize, t: usize, i: usize) -> Result<u64> {
    if n < 2 || t == 0 {
        return Err(Error::argument("star powers need n >= 2 and t >= 1"));
    }
    // the largest variable of a degree-t monomial in x_2..x_n; count those
    // with max exactly j by enumeration
    let mut maxima = Vec::new();
    let mut seq = vec![2usize; t];
    loop {
        maxima.push(*seq.last().expect("t >= 1") as i64 - 2);
        // next nondecreasing sequence over 2..=n
        let Some(pos) = seq.iter().rposition(|&x| x < n) else {
            break;
        };
        let v = seq[pos] + 1;
        for x in &mut seq[pos..] {
            *x = v;
        }
    }
    binomial_sum(maxima, i as i64)
}

/// Certificate whose sets come from the closed forms, in the family's
/// processing order for `I^t`. The first generator always gets the empty
/// set, since its colon is the zero ideal.
pub fn closed_form_certificate(family: &Family, t: usize) -> Result<QuotientCertificate> {
    if t == 0 {
        return Err(Error::argument("power must be at least 1"));
    }
    let power = family.edge_ideal()?.power(t)?;
    let order = family.generator_order().arrange(&power);
    let n = family.n();
    let texp = t as u32;
    let sets = order
        .iter()
        .enumerate()
        .map(|(pos, u)| {
            if pos == 0 {
                return Ok(Vec::new());
            }
            match family {
                Family::Star { .. } | Family::LexInitial { .. } => Ok(initial_lex_set(u, texp)),
                Family::LexFinal { .. } => Ok(final_lex_set(u, texp, n)),
                Family::AntiDPath { d, .. } => Ok(antipath_set(&AntipathIndices::decompose(u)?, *d)),
                Family::DPath { .. } => Err(Error::argument(
                    "no closed form for set(u) is known for d-path edge ideals",
                )),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    QuotientCertificate::from_parts(order, sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti_oracle::taylor_betti;
    use crate::families::{anti_d_path, lexsegment_final, lexsegment_initial, star};

    fn mono(s: &str, n: usize) -> Monomial {
        Monomial::parse(s, n).unwrap()
    }

    fn monos(n: usize, gens: &[&str]) -> Vec<Monomial> {
        gens.iter().map(|s| mono(s, n)).collect()
    }

    #[test]
    fn certificate_examples() {
        let c = lq_certificate(&monos(3, &["x1x2", "x1x3", "x2x3"])).unwrap();
        assert_eq!(c.sets(), &[vec![], vec![2], vec![1]]);
        let c = lq_certificate(&monos(3, &["x1x2"])).unwrap();
        assert_eq!(c.sets(), &[Vec::<usize>::new()]);
        let err = lq_certificate(&monos(4, &["x1x2", "x3x4"])).unwrap_err();
        assert_eq!(
            err,
            Error::NotLinearQuotients {
                position: 2,
                generator: mono("x1x2", 4)
            }
        );
    }

    #[test]
    fn certificate_rejects_bad_input() {
        assert!(lq_certificate(&monos(3, &["x1x2", "x3"])).is_err());
        assert!(lq_certificate(&monos(3, &["x1x2", "x1x2"])).is_err());
        assert!(lq_certificate(&[]).unwrap().is_empty());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), Some(10));
        assert_eq!(binomial(5, 6), Some(0));
        assert_eq!(binomial(5, -1), Some(0));
        assert_eq!(binomial(-1, 0), Some(0));
        assert_eq!(binomial(0, 0), Some(1));
        assert_eq!(binomial(64, 32), Some(1_832_624_140_942_590_534));
        assert_eq!(binomial(200, 100), None);
    }

    #[test]
    fn anti_two_path_set_sizes_and_betti() {
        let i = anti_d_path(7, 2).unwrap().edge_ideal();
        let c = lq_certificate(i.gens()).unwrap();
        assert_eq!(c.set_sizes(), vec![0, 1, 2, 3, 1, 2, 3, 2, 3, 3]);
        let betti: Vec<u64> = (0..5).map(|k| betti_from_sets(&c, k).unwrap()).collect();
        assert_eq!(betti, vec![10, 20, 15, 4, 0]);
    }

    #[test]
    fn star_certificate() {
        let i = star(3).unwrap().edge_ideal().power(2).unwrap();
        let c = lq_certificate(i.gens()).unwrap();
        assert_eq!(c.sets(), &[vec![], vec![2], vec![2]]);
        assert_eq!(c.betti_table().unwrap().totals(), vec![3, 2]);
    }

    #[test]
    fn initial_lex_examples() {
        assert_eq!(initial_lex_set(&mono("x1x3", 4), 1), vec![2]);
        assert_eq!(initial_lex_set(&mono("x1^2x2x3", 3), 2), vec![2]);
        assert_eq!(initial_lex_set_size(&mono("x1^2x2x3", 3), 2), 1);
        assert_eq!(initial_lex_set_size(&mono("x1x2", 4), 1), 0);
        let u = mono("x1x2x3x4", 4);
        assert_eq!(initial_lex_set_size(&u, 2), 3);
        assert_eq!(initial_lex_set(&u, 2).len(), 3);
        let lex_largest = lexsegment_initial(&mono("x1x4", 4), 4).unwrap().power(3).unwrap().gens()[0].clone();
        assert!(initial_lex_set(&lex_largest, 3).is_empty());
    }

    #[test]
    fn final_lex_examples() {
        let i = lexsegment_final(&mono("x2x4", 4), 4).unwrap();
        let order = i.gens_increasing_revlex();
        assert_eq!(order, monos(4, &["x3x4", "x2x4"]));
        assert_eq!(final_lex_set(&order[1], 1, 4), vec![3]);
        assert_eq!(lq_certificate(&order).unwrap().sets()[1], vec![3]);
        assert!(final_lex_set(&order[0], 1, 4).len() <= 1);
        assert_eq!(final_lex_set_size(&order[1], 1, 4), 1);
        assert_eq!(final_lex_set_size(&mono("x2x3", 4), 1, 4), 1);
        assert_eq!(final_lex_set_size(&mono("x2^2x3x4", 4), 2, 4), 2);
        assert_eq!(final_lex_set_size(&mono("x2x3^2x4", 4), 2, 4), 1);
        assert_eq!(final_lex_set(&mono("x2x3^2x4", 4), 2, 4), vec![4]);
    }

    #[test]
    fn antipath_generator_examples() {
        let i = antipath_power_generators(7, 2, 1).unwrap();
        assert_eq!(i, anti_d_path(7, 2).unwrap().edge_ideal());
        assert!(antipath_power_generators(4, 3, 2).unwrap().is_zero());
        assert!(antipath_power_generators(4, 5, 1).unwrap().is_zero());
        let two = antipath_power_generators(7, 2, 2).unwrap();
        assert_eq!(two, i.power(2).unwrap());
        assert_eq!(two.len(), antipath_index_tuples(7, 2, 2).len());
        assert!(antipath_power_generators(7, 0, 1).is_err());
    }

    #[test]
    fn antipath_set_examples() {
        let set = |s: &str| antipath_set(&AntipathIndices::decompose(&mono(s, 7)).unwrap(), 2);
        assert_eq!(set("x1x4"), Vec::<usize>::new());
        assert_eq!(set("x2x6"), vec![1, 5]);
        assert_eq!(set("x4x7"), vec![1, 2, 3]);
        assert!(AntipathIndices::decompose(&mono("x1x2x3", 7)).is_err());
        let d = AntipathIndices::decompose(&mono("x3x1x6x4", 7)).unwrap();
        assert_eq!(d.lower, vec![1, 3]);
        assert_eq!(d.upper, vec![4, 6]);
    }

    #[test]
    fn star_power_betti_examples() {
        assert_eq!(star_power_betti(3, 2, 0).unwrap(), 3);
        assert_eq!(star_power_betti(3, 2, 1).unwrap(), 2);
        assert_eq!(star_power_betti(3, 2, 2).unwrap(), 0);
        for t in 1..4 {
            assert_eq!(star_power_betti(2, t, 0).unwrap(), 1);
            assert_eq!(star_power_betti(2, t, 1).unwrap(), 0);
        }
        for n in 2..7 {
            let oracle = taylor_betti(&star(n).unwrap().edge_ideal()).unwrap();
            for i in 0..n {
                assert_eq!(star_power_betti(n, 1, i).unwrap(), oracle.total(i), "n={n} i={i}");
            }
        }
        assert!(star_power_betti(1, 1, 0).is_err());
    }

    #[test]
    fn closed_form_matches_colons_small() {
        let fam = Family::AntiDPath { n: 7, d: 2 };
        for t in 1..=2 {
            let closed = closed_form_certificate(&fam, t).unwrap();
            let colon = lq_certificate(closed.order()).unwrap();
            assert_eq!(closed, colon);
        }
        assert!(closed_form_certificate(&Family::DPath { n: 4, d: 1 }, 1).is_err());
    }
}
