//! Associated primes of monomial ideals and of their powers.
//!
//! `P_A = (x_j : j ∈ A)` is associated to `S/J` iff, after setting every
//! `x_j` with `j ∉ A` to 1, the colon by `P_A` strictly grows. A second,
//! independent route searches for a monomial `m | lcm(G(J))` with
//! `J : m = P_A` exactly.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::anti_d_path;
use crate::graph::{Bipartiteness, Graph};
use crate::ideal::{MonomialIdeal, PrimeSupport};
use crate::monomial::Monomial;

/// Largest number of variables for which all `2^n` supports are tested.
pub const MAX_ASS_VARS: usize = 20;

fn check_ass_input(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::argument(format!(
            "associated primes need a proper nonzero ideal, got {ideal}"
        )));
    }
    if ideal.n() > MAX_ASS_VARS {
        return Err(Error::Resource {
            what: "variables for associated primes",
            limit: MAX_ASS_VARS,
            actual: ideal.n(),
        });
    }
    Ok(())
}

/// Socle test for a single support.
pub fn is_associated(ideal: &MonomialIdeal, support: &PrimeSupport) -> Result<bool> {
    check_ass_input(ideal)?;
    socle_test(ideal, support)
}

fn socle_test(ideal: &MonomialIdeal, support: &PrimeSupport) -> Result<bool> {
    if support.is_empty() {
        return Ok(false);
    }
    let local = ideal.localize(support)?;
    if local.is_unit() {
        return Ok(false);
    }
    let colon = local.colon_by_ideal(&support.to_ideal(ideal.n())?)?;
    Ok(colon != local)
}

/// `Ass(S/J)`, sorted.
pub fn ass_primes(ideal: &MonomialIdeal) -> Result<Vec<PrimeSupport>> {
    check_ass_input(ideal)?;
    let n = ideal.n();
    // only variables dividing some generator can appear in an associated prime
    let live = ideal.lcm().support().iter().fold(0u64, |m, &i| m | 1 << (i - 1));
    let mut primes = (1..1u64 << n)
        .into_par_iter()
        .filter(|mask| mask & !live == 0)
        .map(|mask| {
            let support = PrimeSupport::from_mask(mask);
            Ok(socle_test(ideal, &support)?.then_some(support))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    primes.sort();
    Ok(primes)
}

/// A monomial `m | lcm(G(J))` with `J : m = P_A`, if one exists; the first
/// in row-major order of exponent vectors.
pub fn witness_search(ideal: &MonomialIdeal, support: &PrimeSupport) -> Result<Option<Monomial>> {
    check_ass_input(ideal)?;
    support.check(ideal.n())?;
    let table = ideal.staircase()?;
    Ok(search_table(ideal, &table, support))
}

fn search_table(
    ideal: &MonomialIdeal,
    table: &crate::staircase::Staircase,
    support: &PrimeSupport,
) -> Option<Monomial> {
    let bounds = table.bounds();
    let inside: Vec<usize> = support.vars().iter().map(|i| i - 1).collect();
    // x_j m ∈ J is impossible for j ∈ A when x_j divides no generator
    if inside.iter().any(|&j| bounds[j] == 0) {
        return None;
    }
    let target = support.to_ideal(ideal.n()).ok()?;
    let mut found = None;
    let mut probe = vec![0u32; bounds.len()];
    table.for_each_cell(|idx, exps| {
        if found.is_some() || table.contains_index(idx) {
            return;
        }
        probe.copy_from_slice(exps);
        for &j in &inside {
            probe[j] += 1;
            let hit = table.contains_exps(&probe);
            probe[j] -= 1;
            if !hit {
                return;
            }
        }
        for j in 0..probe.len() {
            if !support.contains(j + 1) {
                probe[j] = bounds[j];
            }
        }
        if table.contains_exps(&probe) {
            return;
        }
        let m = Monomial::new(exps.to_vec()).expect("cell within bounds");
        if ideal.colon_by_monomial(&m).is_ok_and(|c| c == target) {
            found = Some(m);
        }
    });
    found
}

/// Result of running both membership tests on every support.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssCrossCheck {
    pub supports_checked: usize,
    pub associated: Vec<PrimeSupport>,
    pub witnesses: Vec<Monomial>,
    /// Supports where the socle test and the witness search disagree.
    pub disagreements: Vec<PrimeSupport>,
}

impl AssCrossCheck {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Socle test and witness search on all `2^n - 1` nonempty supports.
pub fn cross_check_ass(ideal: &MonomialIdeal) -> Result<AssCrossCheck> {
    check_ass_input(ideal)?;
    let n = ideal.n();
    let table = ideal.staircase()?;
    let mut rows = (1..1u64 << n)
        .into_par_iter()
        .map(|mask| {
            let support = PrimeSupport::from_mask(mask);
            let socle = socle_test(ideal, &support)?;
            let witness = search_table(ideal, &table, &support);
            Ok((support, socle, witness))
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| a.0.cmp(&b.0));
    let mut check = AssCrossCheck {
        supports_checked: rows.len(),
        associated: Vec::new(),
        witnesses: Vec::new(),
        disagreements: Vec::new(),
    };
    for (support, socle, witness) in rows {
        if socle != witness.is_some() {
            check.disagreements.push(support.clone());
        }
        if let (true, Some(m)) = (socle, witness) {
            check.associated.push(support);
            check.witnesses.push(m);
        }
    }
    Ok(check)
}

/// The explicit monomial `m` with `I^k : m = (x_1, ..., x_n)` for the
/// anti-d-path edge ideal `I`, in the regime `d + 2 <= n - d - 1`, `k >= 2`:
///
/// * `k <= d + 2`: `x_1^{k-1} x_{d+2} ... x_{d+k} x_n`;
/// * `k > d + 2`: `x_1 x_2 ... x_{2k-1}`, which needs `2k - 1 <= n`.
pub fn theorem_witness(n: usize, d: usize, k: usize) -> Result<Monomial> {
    if d == 0 || 2 * d + 3 > n {
        return Err(Error::argument(format!(
            "the witness needs d >= 1 and d + 2 <= n - d - 1, got n={n} d={d}"
        )));
    }
    if k < 2 {
        return Err(Error::argument("the witness needs k >= 2"));
    }
    if k <= d + 2 {
        let mut exps = vec![0u32; n];
        exps[0] = (k - 1) as u32;
        for s in d + 2..=d + k {
            exps[s - 1] += 1;
        }
        exps[n - 1] += 1;
        return Monomial::new(exps);
    }
    if 2 * k - 1 > n {
        return Err(Error::argument(format!(
            "x_1 ... x_{} does not exist in {n} variables",
            2 * k - 1
        )));
    }
    Monomial::from_indices(n, &(1..2 * k).collect::<Vec<_>>())
}

/// The two conditions making `m` a socle witness for the maximal ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessCheck {
    pub monomial: Monomial,
    pub outside: bool,
    pub socle: bool,
}

impl WitnessCheck {
    pub fn passes(&self) -> bool {
        self.outside && self.socle
    }
}

/// Checks `m ∉ J` and `x_i m ∈ J` for every `i`.
pub fn check_socle_witness(ideal: &MonomialIdeal, m: &Monomial) -> WitnessCheck {
    WitnessCheck {
        monomial: m.clone(),
        outside: !ideal.contains(m),
        socle: (1..=m.n()).all(|i| ideal.contains(&m.mul_var(i))),
    }
}

/// `Ass(S/I^k)` for `k = 1..=K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssChain {
    pub ideal: MonomialIdeal,
    pub entries: Vec<Vec<PrimeSupport>>,
}

impl AssChain {
    pub fn depth(&self) -> usize {
        self.entries.len()
    }

    /// Entry for the power `k`, 1-based.
    pub fn entry(&self, k: usize) -> &[PrimeSupport] {
        &self.entries[k - 1]
    }

    pub fn is_ascending(&self) -> bool {
        self.entries
            .windows(2)
            .all(|w| w[0].iter().all(|p| w[1].contains(p)))
    }

    pub fn is_constant(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] == w[1])
    }

    /// First `k` with `Ass(S/I^k) ≠ Ass(S/I)`.
    pub fn first_change(&self) -> Option<usize> {
        self.entries.iter().position(|e| *e != self.entries[0]).map(|i| i + 1)
    }

    /// Primes in `Ass(S/I^k)` but not in `Ass(S/I)`.
    pub fn new_primes(&self, k: usize) -> Vec<PrimeSupport> {
        self.entry(k)
            .iter()
            .filter(|p| !self.entries[0].contains(p))
            .cloned()
            .collect()
    }
}

impl Serialize for AssChain {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            ideal: &'a MonomialIdeal,
            chain: BTreeMap<String, &'a [PrimeSupport]>,
            ascending: bool,
            constant: bool,
            first_change: Option<usize>,
        }
        Repr {
            ideal: &self.ideal,
            chain: (1..=self.depth()).map(|k| (k.to_string(), self.entry(k))).collect(),
            ascending: self.is_ascending(),
            constant: self.is_constant(),
            first_change: self.first_change(),
        }
        .serialize(s)
    }
}

pub fn ass_chain(ideal: &MonomialIdeal, depth: usize) -> Result<AssChain> {
    if depth == 0 {
        return Err(Error::argument("chain depth must be at least 1"));
    }
    check_ass_input(ideal)?;
    let entries = (1..=depth)
        .map(|k| ass_primes(&ideal.power(k)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(AssChain {
        ideal: ideal.clone(),
        entries,
    })
}

/// Normal torsion-freeness, with the evidence behind the answer. Only
/// `CertifiedByBipartite` is a proof; `TorsionFreeUpToK` is a bounded check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "evidence", rename_all = "snake_case")]
pub enum NtfVerdict {
    CertifiedByBipartite {
        part1: Vec<usize>,
        part2: Vec<usize>,
    },
    FailsAtK {
        k: usize,
        prime: PrimeSupport,
        #[serde(skip_serializing_if = "Option::is_none")]
        odd_cycle: Option<Vec<usize>>,
    },
    TorsionFreeUpToK {
        k: usize,
    },
}

/// With a graph whose edge ideal is `ideal`, a bipartite graph certifies
/// the answer outright; otherwise the chain up to `depth` decides.
pub fn is_normally_torsion_free(
    ideal: &MonomialIdeal,
    depth: usize,
    graph: Option<&Graph>,
) -> Result<NtfVerdict> {
    let mut odd_cycle = None;
    if let Some(g) = graph {
        if g.edge_ideal() != *ideal {
            return Err(Error::argument("the ideal is not the edge ideal of the given graph"));
        }
        match g.is_bipartite() {
            Bipartiteness::Bipartite { part1, part2 } => {
                return Ok(NtfVerdict::CertifiedByBipartite { part1, part2 })
            }
            Bipartiteness::OddCycle { cycle } => odd_cycle = Some(cycle),
        }
    }
    let chain = ass_chain(ideal, depth)?;
    Ok(match chain.first_change() {
        Some(k) => NtfVerdict::FailsAtK {
            k,
            prime: chain.new_primes(k).into_iter().next().expect("chain changed by growing"),
            odd_cycle,
        },
        None => NtfVerdict::TorsionFreeUpToK { k: depth },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssTheoremRow {
    pub k: usize,
    pub expected: Vec<PrimeSupport>,
    pub actual: Vec<PrimeSupport>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssTheoremReport {
    pub n: usize,
    pub d: usize,
    pub depth: usize,
    /// `d + 2 > n - d - 1`, where the graph is bipartite.
    pub bipartite_branch: bool,
    pub rows: Vec<AssTheoremRow>,
    pub witnesses: Vec<WitnessCheck>,
}

impl AssTheoremReport {
    pub fn passes(&self) -> bool {
        self.rows.iter().all(|r| r.pass) && self.witnesses.iter().all(WitnessCheck::passes)
    }
}

/// Checks that `Ass(S/I)` consists of the `[n] ∖ {t, ..., t+d}` and that
/// `Ass(S/I^k)`, `2 <= k <= K`, adds exactly the maximal ideal when
/// `d + 2 <= n - d - 1` and nothing otherwise. In the first case the
/// explicit witnesses are checked too.
pub fn verify_antipath_ass_theorem(n: usize, d: usize, depth: usize) -> Result<AssTheoremReport> {
    if d == 0 || n < d + 2 {
        return Err(Error::argument(format!(
            "the anti-d-path needs d >= 1 and n >= d + 2, got n={n} d={d}"
        )));
    }
    let ideal = anti_d_path(n, d)?.edge_ideal();
    let chain = ass_chain(&ideal, depth)?;
    let mut minimal: Vec<PrimeSupport> = (1..=n - d)
        .map(|t| PrimeSupport::new((1..=n).filter(|&s| s < t || s > t + d)))
        .collect();
    minimal.sort();
    let bipartite_branch = d + 2 > n - d - 1;
    let mut grown = minimal.clone();
    if !bipartite_branch {
        grown.push(PrimeSupport::full(n));
        grown.sort();
    }
    let rows = (1..=depth)
        .map(|k| {
            let expected = if k == 1 { minimal.clone() } else { grown.clone() };
            let actual = chain.entry(k).to_vec();
            AssTheoremRow {
                k,
                pass: expected == actual,
                expected,
                actual,
            }
        })
        .collect();
    let witnesses = if bipartite_branch {
        Vec::new()
    } else {
        (2..=depth)
            .map(|k| {
                let m = theorem_witness(n, d, k)?;
                Ok(check_socle_witness(&ideal.power(k)?, &m))
            })
            .collect::<Result<Vec<_>>>()?
    };
    Ok(AssTheoremReport {
        n,
        d,
        depth,
        bipartite_branch,
        rows,
        witnesses,
    })
}
