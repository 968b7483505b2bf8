//! Monomials in `x_1, ..., x_n` as exponent vectors, with the lex and revlex
//! comparisons used to order generators.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported number of variables.
pub const MAX_VARS: usize = 64;
/// Largest supported total degree.
pub const MAX_DEGREE: u64 = 1 << 16;

/// A monomial `x_1^{a_1} ... x_n^{a_n}`.
///
/// Variables are 1-based in every public method; position `i - 1` of the
/// exponent vector holds the exponent of `x_i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::Resource {
                what: "number of variables",
                limit: MAX_VARS,
                actual: exps.len(),
            });
        }
        let degree: u64 = exps.iter().map(|&e| u64::from(e)).sum();
        if degree > MAX_DEGREE {
            return Err(Error::Resource {
                what: "monomial degree",
                limit: MAX_DEGREE as usize,
                actual: degree as usize,
            });
        }
        Ok(Self { exps })
    }

    /// Caller guarantees the guards of [`Monomial::new`].
    pub(crate) fn from_exps(exps: Vec<u32>) -> Self {
        debug_assert!(exps.len() <= MAX_VARS);
        Self { exps }
    }

    pub fn one(n: usize) -> Self {
        Self::from_exps(vec![0; n])
    }

    /// The variable `x_i`.
    pub fn var(n: usize, i: usize) -> Result<Self> {
        check_index(n, i)?;
        let mut exps = vec![0; n];
        exps[i - 1] = 1;
        Self::new(exps)
    }

    /// Product of the variables listed in `indices`, with repetition.
    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        let mut exps = vec![0u32; n];
        for &i in indices {
            check_index(n, i)?;
            exps[i - 1] += 1;
        }
        Self::new(exps)
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_i` (1-based). Out of range indices have exponent 0.
    pub fn exponent(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.exps.get(i - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// 1-based indices of the variables dividing this monomial.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn max_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0).map(|i| i + 1)
    }

    pub fn min_var(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0).map(|i| i + 1)
    }

    /// Variable indices listed with multiplicity, in increasing order.
    pub fn indices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree() as usize);
        for (i, &e) in self.exps.iter().enumerate() {
            out.extend(std::iter::repeat_n(i + 1, e as usize));
        }
        out
    }

    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.n(), other.n());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n(), other.n());
        Self::from_exps(self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect())
    }

    /// `x_i * self`.
    pub fn mul_var(&self, i: usize) -> Self {
        let mut exps = self.exps.clone();
        exps[i - 1] += 1;
        Self::from_exps(exps)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n(), other.n());
        Self::from_exps(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n(), other.n());
        Self::from_exps(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect())
    }

    /// `self / gcd(self, other)`.
    pub fn quotient_by_gcd(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n(), other.n());
        Self::from_exps(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        other.divides(self).then(|| self.quotient_by_gcd(other))
    }

    fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::Dimension {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(())
    }

    /// Pure lexicographic comparison with `x_1 > x_2 > ... > x_n`.
    pub fn lex_cmp(&self, other: &Self) -> Result<Ordering> {
        self.check_same_n(other)?;
        Ok(lex(self, other))
    }

    /// Reverse lexicographic comparison: `a < b` iff at the largest index
    /// where the exponents differ, `a` has the larger exponent.
    pub fn revlex_cmp(&self, other: &Self) -> Result<Ordering> {
        self.check_same_n(other)?;
        Ok(revlex(self, other))
    }
}

pub(crate) fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    a.exps.cmp(&b.exps)
}

pub(crate) fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exps.iter().zip(&b.exps).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::argument(format!(
            "variable index {i} out of range 1..={n}"
        )));
    }
    Ok(())
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, e)?,
            }
        }
        Ok(())
    }
}

impl Monomial {
    /// Parse strings like `x1x4`, `x1^2x3` or `1` in `n` variables.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        let mut exps = vec![0u32; n];
        if s == "1" {
            return Self::new(exps);
        }
        let bad = || Error::argument(format!("cannot parse monomial {s:?}"));
        let mut rest = s;
        if rest.is_empty() {
            return Err(bad());
        }
        while !rest.is_empty() {
            rest = rest.strip_prefix('x').ok_or_else(bad)?;
            let digits = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            let index = usize::from_str(&rest[..digits]).map_err(|_| bad())?;
            rest = &rest[digits..];
            let mut exp = 1u32;
            if let Some(r) = rest.strip_prefix('^') {
                let digits = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
                exp = u32::from_str(&r[..digits]).map_err(|_| bad())?;
                rest = &r[digits..];
            }
            check_index(n, index)?;
            exps[index - 1] += exp;
        }
        Self::new(exps)
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.exps.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let exps = Vec::<u32>::deserialize(d)?;
        Monomial::new(exps).map_err(serde::de::Error::custom)
    }
}
