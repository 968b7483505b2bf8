//! Dense membership table of a monomial ideal over a bounding box.
//!
//! Every monomial `m` is mapped to `min(m, bounds)` componentwise. When
//! `bounds` is a multiple of every generator (for instance the lcm of the
//! generators) this clamping does not change membership, so the table
//! answers `m ∈ I` for all monomials in `n` variables.

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Largest number of cells a table may hold.
pub const MAX_CELLS: usize = 1 << 24;

#[derive(Debug, Clone)]
pub struct Staircase {
    bounds: Vec<u32>,
    strides: Vec<usize>,
    cells: Vec<bool>,
}

impl Staircase {
    /// Number of cells needed for `bounds`, or `None` on overflow.
    pub fn cell_count(bounds: &[u32]) -> Option<usize> {
        bounds
            .iter()
            .try_fold(1usize, |acc, &b| acc.checked_mul(b as usize + 1))
    }

    pub fn new(bounds: &[u32], gens: &[Monomial]) -> Result<Self> {
        let size = Self::cell_count(bounds).unwrap_or(usize::MAX);
        if size > MAX_CELLS {
            return Err(Error::Resource {
                what: "staircase cells",
                limit: MAX_CELLS,
                actual: size,
            });
        }
        let mut strides = vec![1usize; bounds.len()];
        for j in (0..bounds.len().saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * (bounds[j + 1] as usize + 1);
        }
        let mut table = Self {
            bounds: bounds.to_vec(),
            strides,
            cells: vec![false; size],
        };
        for g in gens {
            if g.exps().iter().zip(bounds).any(|(e, b)| e > b) {
                return Err(Error::argument(format!(
                    "generator {g} lies outside the staircase box"
                )));
            }
            let idx = table.index(g.exps());
            table.cells[idx] = true;
        }
        // Row-major order visits a - e_j before a, so one sweep closes upward.
        let mut coords = vec![0u32; bounds.len()];
        for idx in 0..size {
            if !table.cells[idx] {
                table.cells[idx] = coords
                    .iter()
                    .zip(&table.strides)
                    .any(|(&c, &s)| c > 0 && table.cells[idx - s]);
            }
            table.advance(&mut coords);
        }
        Ok(table)
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    fn advance(&self, coords: &mut [u32]) {
        for j in (0..coords.len()).rev() {
            if coords[j] < self.bounds[j] {
                coords[j] += 1;
                return;
            }
            coords[j] = 0;
        }
    }

    /// Cell index of the clamped exponent vector.
    pub fn index(&self, exps: &[u32]) -> usize {
        exps.iter()
            .zip(&self.bounds)
            .zip(&self.strides)
            .map(|((&e, &b), &s)| e.min(b) as usize * s)
            .sum()
    }

    pub fn contains_exps(&self, exps: &[u32]) -> bool {
        self.cells[self.index(exps)]
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.contains_exps(m.exps())
    }

    pub fn contains_index(&self, idx: usize) -> bool {
        self.cells[idx]
    }

    /// Iterate over every cell as `(index, exponent vector)`.
    pub fn for_each_cell(&self, mut f: impl FnMut(usize, &[u32])) {
        let mut coords = vec![0u32; self.bounds.len()];
        for idx in 0..self.cells.len() {
            f(idx, &coords);
            self.advance(&mut coords);
        }
    }

    /// Minimal generators of the ideal whose membership this table encodes.
    pub fn minimal_generators(&self) -> Vec<Monomial> {
        let mut out = Vec::new();
        self.for_each_cell(|idx, coords| {
            if self.cells[idx]
                && coords
                    .iter()
                    .zip(&self.strides)
                    .all(|(&c, &s)| c == 0 || !self.cells[idx - s])
            {
                out.push(Monomial::from_exps(coords.to_vec()));
            }
        });
        out
    }

    /// Cellwise conjunction; both tables must share the same box.
    pub fn and(mut self, other: &Self) -> Self {
        debug_assert_eq!(self.bounds, other.bounds);
        for (a, b) in self.cells.iter_mut().zip(&other.cells) {
            *a &= *b;
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_and_generators() {
        let gens = vec![
            Monomial::from_exps(vec![2, 0]),
            Monomial::from_exps(vec![1, 1]),
        ];
        let t = Staircase::new(&[2, 1], &gens).unwrap();
        assert!(t.contains(&Monomial::from_exps(vec![5, 0])));
        assert!(t.contains(&Monomial::from_exps(vec![1, 3])));
        assert!(!t.contains(&Monomial::from_exps(vec![1, 0])));
        assert!(!t.contains(&Monomial::from_exps(vec![0, 7])));
        let mut g = t.minimal_generators();
        g.sort_by(|a, b| b.exps().cmp(a.exps()));
        assert_eq!(g, gens);
    }

    #[test]
    fn guard() {
        assert!(Staircase::new(&[255; 4], &[]).is_err());
        assert!(Staircase::new(&[1, 1], &[Monomial::from_exps(vec![2, 0])]).is_err());
    }
}
