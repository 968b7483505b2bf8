//! Betti numbers of monomial ideals from the Taylor complex, over GF(2).
//!
//! The Taylor complex of `I = (m_1, ..., m_r)` has a basis `e_T` for every
//! nonempty `T ⊆ G(I)`, placed in homological degree `|T| - 1` and
//! multidegree `lcm(T)`. It is multigraded, so `β_{i,a}(I)` is the `i`-th
//! homology of the strand spanned by the subsets with `lcm(T) = a`.
//!
//! Two routes compute that strand homology:
//!
//! * [`TaylorComplex`] enumerates the subsets directly. It is exact and
//!   simple but exponential in the number of generators.
//! * [`taylor_betti`] uses that the strand at `a` is the relative chain
//!   complex of the full simplex on `{g : g | a}` modulo the subcomplex of
//!   subsets with `lcm(T) ≠ a`. That subcomplex is covered by the simplices
//!   on `{g : g | a/x_j}`, whose nerve is
//!   `K_a = {F ⊆ supp(a) : a / x^F ∈ I}`, so
//!   `β_{i,a}(I) = dim H̃_{i-1}(K_a; GF(2))`. This only needs a membership
//!   table over the divisors of `lcm(G(I))` and scales to the large powers
//!   in the sweeps.
//!
//! All ranks are computed over GF(2).

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::staircase::Staircase;

/// Generator limit for direct subset enumeration.
pub const MAX_TAYLOR_GENERATORS: usize = 22;
/// Largest multidegree strand (number of subsets) the direct route will
/// reduce.
pub const MAX_TAYLOR_STRAND: usize = 1 << 13;
/// Largest support handled by the nerve route (faces are bitmasks).
pub const MAX_NERVE_SUPPORT: usize = 20;

/// Total and graded Betti numbers of an ideal.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    total: BTreeMap<usize, u64>,
    graded: BTreeMap<(usize, u64), u64>,
}

impl BettiTable {
    pub fn from_totals(totals: &[u64]) -> Self {
        let total = totals
            .iter()
            .enumerate()
            .filter(|(_, &b)| b > 0)
            .map(|(i, &b)| (i, b))
            .collect();
        Self {
            total,
            graded: BTreeMap::new(),
        }
    }

    pub(crate) fn add(&mut self, i: usize, degree: u64, value: u64) {
        if value == 0 {
            return;
        }
        *self.total.entry(i).or_default() += value;
        *self.graded.entry((i, degree)).or_default() += value;
    }

    fn merge(mut self, other: Self) -> Self {
        for ((i, j), b) in other.graded {
            self.add(i, j, b);
        }
        self
    }

    /// `β_i`, zero beyond the projective dimension.
    pub fn total(&self, i: usize) -> u64 {
        self.total.get(&i).copied().unwrap_or(0)
    }

    /// `β_{i,j}`.
    pub fn graded(&self, i: usize, j: u64) -> u64 {
        self.graded.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn graded_entries(&self) -> impl Iterator<Item = ((usize, u64), u64)> + '_ {
        self.graded.iter().map(|(&k, &v)| (k, v))
    }

    pub fn has_graded(&self) -> bool {
        !self.graded.is_empty()
    }

    /// `(β_0, ..., β_pd)`; empty for the zero ideal.
    pub fn totals(&self) -> Vec<u64> {
        match self.projective_dimension() {
            Some(pd) => (0..=pd).map(|i| self.total(i)).collect(),
            None => Vec::new(),
        }
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.total.keys().next_back().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.total.is_empty()
    }

    /// `Σ (-1)^i β_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.total
            .iter()
            .map(|(&i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// `i,beta` lines, one per homological index.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,beta\n");
        for (i, b) in self.totals().iter().enumerate() {
            out.push_str(&format!("{i},{b}\n"));
        }
        out
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json {
            total: BTreeMap<String, u64>,
            graded: BTreeMap<String, u64>,
        }
        let total = self.total.iter().map(|(i, b)| (i.to_string(), *b)).collect();
        let graded = self
            .graded
            .iter()
            .map(|((i, j), b)| (format!("{i},{j}"), *b))
            .collect();
        Json { total, graded }.serialize(s)
    }
}

/// The Taylor complex of a fixed generator sequence, with lcms of all
/// subsets cached by bitmask.
#[derive(Clone, Debug)]
pub struct TaylorComplex {
    n: usize,
    generators: Vec<Monomial>,
    // lcm of subset `mask` at [mask * n .. (mask + 1) * n]
    lcms: Vec<u8>,
}

/// One multidegree strand of the Taylor complex.
#[derive(Clone, Debug)]
pub struct TaylorStrand {
    pub multidegree: Monomial,
    /// `counts[i]` = number of subsets of size `i + 1` with this lcm.
    pub counts: Vec<usize>,
    /// `betti[i]` = `β_{i, multidegree}`.
    pub betti: Vec<u64>,
}

impl TaylorComplex {
    pub fn new(generators: Vec<Monomial>) -> Result<Self> {
        let r = generators.len();
        if r > MAX_TAYLOR_GENERATORS {
            return Err(Error::Resource {
                what: "Taylor complex generators",
                limit: MAX_TAYLOR_GENERATORS,
                actual: r,
            });
        }
        let n = generators.first().map_or(0, Monomial::n);
        if let Some(g) = generators.iter().find(|g| g.n() != n) {
            return Err(Error::Dimension { expected: n, found: g.n() });
        }
        if let Some(e) = generators.iter().flat_map(|g| g.exps()).find(|&&e| e > 255) {
            return Err(Error::Resource {
                what: "exponent in Taylor complex",
                limit: 255,
                actual: *e as usize,
            });
        }
        let mut lcms = vec![0u8; (1usize << r) * n];
        for mask in 1usize..1 << r {
            let low = mask.trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            for v in 0..n {
                let e = generators[low].exps()[v] as u8;
                lcms[mask * n + v] = lcms[rest * n + v].max(e);
            }
        }
        Ok(Self { n, generators, lcms })
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    fn lcm_bytes(&self, mask: usize) -> &[u8] {
        &self.lcms[mask * self.n..(mask + 1) * self.n]
    }

    /// `lcm` of the generators selected by `mask`; `lcm(∅) = 1`.
    pub fn lcm(&self, mask: usize) -> Monomial {
        Monomial::from_exps(self.lcm_bytes(mask).iter().map(|&e| u32::from(e)).collect())
    }

    /// Homology of every multidegree strand.
    pub fn strands(&self) -> Result<Vec<TaylorStrand>> {
        let r = self.generators.len();
        let mut groups: HashMap<&[u8], Vec<usize>> = HashMap::new();
        for mask in 1usize..1 << r {
            groups.entry(self.lcm_bytes(mask)).or_default().push(mask);
        }
        let mut strands = Vec::with_capacity(groups.len());
        for (bytes, masks) in groups {
            if masks.len() > MAX_TAYLOR_STRAND {
                return Err(Error::Resource {
                    what: "subsets in one Taylor strand",
                    limit: MAX_TAYLOR_STRAND,
                    actual: masks.len(),
                });
            }
            let multidegree =
                Monomial::from_exps(bytes.iter().map(|&e| u32::from(e)).collect());
            strands.push(strand_homology(multidegree, &masks));
        }
        strands.sort_by(|a, b| b.multidegree.exps().cmp(a.multidegree.exps()));
        Ok(strands)
    }

    pub fn betti(&self) -> Result<BettiTable> {
        let mut table = BettiTable::default();
        for s in self.strands()? {
            let degree = s.multidegree.degree();
            for (i, &b) in s.betti.iter().enumerate() {
                table.add(i, degree, b);
            }
        }
        Ok(table)
    }
}

fn strand_homology(multidegree: Monomial, masks: &[usize]) -> TaylorStrand {
    let top = masks.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0);
    // by_size[s] lists the subsets of size s; index maps mask -> position
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); top + 1];
    let mut index = HashMap::with_capacity(masks.len());
    for &m in masks {
        let s = m.count_ones() as usize;
        index.insert(m, by_size[s].len());
        by_size[s].push(m);
    }
    // ranks[s] = rank of the boundary from size s to size s - 1
    let mut ranks = vec![0usize; top + 2];
    for s in 2..=top {
        if by_size[s].is_empty() || by_size[s - 1].is_empty() {
            continue;
        }
        let mut mat = BitMatrix::zeros(by_size[s].len(), by_size[s - 1].len());
        for (row, &m) in by_size[s].iter().enumerate() {
            let mut rest = m;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                if let Some(&col) = index.get(&(m & !bit)) {
                    mat.set(row, col, true);
                }
            }
        }
        ranks[s] = mat.rank();
    }
    let counts: Vec<usize> = (1..=top).map(|s| by_size[s].len()).collect();
    let betti = (1..=top)
        .map(|s| (by_size[s].len() - ranks[s] - ranks[s + 1]) as u64)
        .collect();
    TaylorStrand {
        multidegree,
        counts,
        betti,
    }
}

/// Betti numbers by direct enumeration of the Taylor complex.
pub fn taylor_betti_direct(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Ok(BettiTable::default());
    }
    TaylorComplex::new(ideal.gens().to_vec())?.betti()
}

/// Betti numbers of `ideal` from the homology of each Taylor strand,
/// computed through the nerve `K_a` described in the module docs.
pub fn taylor_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Ok(BettiTable::default());
    }
    let support = ideal.lcm().support().len();
    if support > MAX_NERVE_SUPPORT {
        return Err(Error::Resource {
            what: "variables in the support of lcm(G(I))",
            limit: MAX_NERVE_SUPPORT,
            actual: support,
        });
    }
    let table = ideal.staircase()?;
    let strides = strides(table.bounds());
    let size = table.len();
    let partials: Vec<BettiTable> = (0..size)
        .into_par_iter()
        .fold(BettiTable::default, |mut acc, idx| {
            if table.contains_index(idx) {
                let a = coords(idx, table.bounds(), &strides);
                nerve_homology(&table, &strides, idx, &a, &mut acc);
            }
            acc
        })
        .collect();
    let mut iter = partials.into_iter();
    let first = iter.next().unwrap_or_default();
    Ok(iter.fold(first, BettiTable::merge))
}

fn strides(bounds: &[u32]) -> Vec<usize> {
    let mut s = vec![1usize; bounds.len()];
    for j in (0..bounds.len().saturating_sub(1)).rev() {
        s[j] = s[j + 1] * (bounds[j + 1] as usize + 1);
    }
    s
}

fn coords(mut idx: usize, bounds: &[u32], strides: &[usize]) -> Vec<u32> {
    let mut out = vec![0u32; bounds.len()];
    for j in 0..bounds.len() {
        out[j] = (idx / strides[j]) as u32;
        idx %= strides[j];
    }
    out
}

fn nerve_homology(
    table: &Staircase,
    strides: &[usize],
    idx: usize,
    a: &[u32],
    acc: &mut BettiTable,
) {
    let support: Vec<usize> = (0..a.len()).filter(|&j| a[j] > 0).collect();
    let s = support.len();
    let offset = |face: usize| -> usize {
        (0..s)
            .filter(|b| face >> b & 1 == 1)
            .map(|b| strides[support[b]])
            .sum()
    };
    let full = (1usize << s) - 1;
    // the full simplex is acyclic
    if s > 0 && table.contains_index(idx - offset(full)) {
        return;
    }
    let degree: u64 = a.iter().map(|&e| u64::from(e)).sum();
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); s + 1];
    let mut position = vec![usize::MAX; 1 << s];
    for (face, pos) in position.iter_mut().enumerate() {
        if table.contains_index(idx - offset(face)) {
            let k = face.count_ones() as usize;
            *pos = by_size[k].len();
            by_size[k].push(face);
        }
    }
    // a cone over any vertex has no reduced homology
    for v in 0..s {
        let bit = 1 << v;
        if by_size
            .iter()
            .flatten()
            .all(|&f| position[f | bit] != usize::MAX)
        {
            return;
        }
    }
    let top = by_size.iter().rposition(|f| !f.is_empty()).unwrap_or(0);
    // ranks[k] = rank of the boundary from faces of size k to size k - 1
    let mut ranks = vec![0usize; top + 2];
    for k in 1..=top {
        let mut mat = BitMatrix::zeros(by_size[k].len(), by_size[k - 1].len());
        for (row, &f) in by_size[k].iter().enumerate() {
            let mut rest = f;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                mat.set(row, position[f & !bit], true);
            }
        }
        ranks[k] = mat.rank();
    }
    // faces of size k carry reduced homology in dimension k - 1, which is
    // β_{k, a} of the ideal
    for k in 0..=top {
        let h = by_size[k].len() - ranks[k] - ranks[k + 1];
        acc.add(k, degree, h as u64);
    }
}

/// `pd(I) = max { i : β_i(I) ≠ 0 }`.
pub fn projective_dimension(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_zero() {
        return Err(Error::argument("projective dimension of the zero ideal"));
    }
    Ok(taylor_betti(ideal)?
        .projective_dimension()
        .expect("a nonzero ideal has β_0 > 0"))
}

/// True iff every nonzero `β_{i,j}` sits at `j = δ + i`, where `δ` is the
/// common generator degree.
pub fn is_linear_resolution(ideal: &MonomialIdeal) -> Result<bool> {
    let delta = ideal.generating_degree().ok_or_else(|| {
        Error::argument("linear resolution test needs generators of a single degree")
    })?;
    Ok(taylor_betti(ideal)?
        .graded_entries()
        .all(|((i, j), _)| j == delta + i as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::anti_d_path;
    use proptest::prelude::*;

    fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::from_gens(n, gens.iter().map(|s| Monomial::parse(s, n).unwrap())).unwrap()
    }

    #[test]
    fn principal_and_two_generators() {
        let t = taylor_betti(&ideal(2, &["x1x2"])).unwrap();
        assert_eq!(t.totals(), vec![1]);
        let t = taylor_betti(&ideal(3, &["x1x2", "x1x3"])).unwrap();
        assert_eq!(t.totals(), vec![2, 1]);
        assert_eq!(t.graded(1, 3), 1);
    }

    #[test]
    fn anti_two_path_seven() {
        let i = anti_d_path(7, 2).unwrap().edge_ideal();
        let t = taylor_betti(&i).unwrap();
        assert_eq!(t.totals(), vec![10, 20, 15, 4]);
        assert_eq!(taylor_betti_direct(&i).unwrap(), t);
        assert_eq!(projective_dimension(&i).unwrap(), 3);
    }

    #[test]
    fn projective_dimension_examples() {
        assert_eq!(projective_dimension(&ideal(3, &["x1x2"])).unwrap(), 0);
        assert_eq!(projective_dimension(&ideal(4, &["x1x2", "x3x4"])).unwrap(), 1);
        assert!(projective_dimension(&MonomialIdeal::zero(3)).is_err());
    }

    #[test]
    fn linearity_examples() {
        assert!(is_linear_resolution(&ideal(3, &["x1x2", "x1x3", "x2x3"])).unwrap());
        let ci = ideal(4, &["x1x2", "x3x4"]);
        assert!(!is_linear_resolution(&ci).unwrap());
        assert_eq!(taylor_betti(&ci).unwrap().graded(1, 4), 1);
        assert!(is_linear_resolution(&ideal(3, &["x1x2", "x3"])).is_err());
    }

    #[test]
    fn zero_and_unit() {
        assert!(taylor_betti(&MonomialIdeal::zero(3)).unwrap().is_empty());
        assert_eq!(taylor_betti(&MonomialIdeal::unit(2)).unwrap().totals(), vec![1]);
        assert_eq!(taylor_betti_direct(&MonomialIdeal::unit(2)).unwrap().totals(), vec![1]);
    }

    #[test]
    fn direct_guard() {
        let i = anti_d_path(9, 1).unwrap().edge_ideal();
        assert_eq!(i.len(), 28);
        assert!(matches!(taylor_betti_direct(&i), Err(Error::Resource { .. })));
    }

    #[test]
    fn json_shape() {
        let t = taylor_betti(&ideal(3, &["x1x2", "x1x3"])).unwrap();
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"total":{"0":2,"1":1},"graded":{"0,2":2,"1,3":1}}"#
        );
        assert_eq!(t.to_csv(), "i,beta\n0,2\n1,1\n");
    }

    fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
        (2usize..5).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::vec(0u32..3, n), 1..8).prop_map(
                move |gens| {
                    MonomialIdeal::from_gens(n, gens.into_iter().map(Monomial::from_exps)).unwrap()
                },
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn routes_agree(i in arb_ideal()) {
            prop_assert_eq!(taylor_betti(&i).unwrap(), taylor_betti_direct(&i).unwrap());
        }

        #[test]
        fn order_independent(i in arb_ideal(), seed in any::<u64>()) {
            let mut gens = i.gens().to_vec();
            let len = gens.len();
            for k in (1..len).rev() {
                gens.swap(k, (seed >> (k % 32)) as usize % (k + 1));
            }
            let t = TaylorComplex::new(gens).unwrap().betti().unwrap();
            prop_assert_eq!(t, taylor_betti_direct(&i).unwrap());
        }

        #[test]
        fn strand_euler_characteristic(i in arb_ideal()) {
            let strands = TaylorComplex::new(i.gens().to_vec()).unwrap().strands().unwrap();
            for s in strands {
                let chain: i64 = s.counts.iter().enumerate()
                    .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
                let homology: i64 = s.betti.iter().enumerate()
                    .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
                prop_assert_eq!(chain, homology);
            }
        }

        #[test]
        fn global_euler_characteristic(i in arb_ideal()) {
            // 1 - β_0 + β_1 - ... = 0 for a proper nonzero ideal
            prop_assume!(!i.is_unit());
            prop_assert_eq!(taylor_betti(&i).unwrap().euler_characteristic(), 1);
        }
    }
}
