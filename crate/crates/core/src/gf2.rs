//! Dense bit-packed matrices over GF(2).

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    cols: usize,
    words: usize,
    rows: Vec<Vec<u64>>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        Self {
            cols,
            words,
            rows: vec![vec![0; words]; rows],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r][c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        let w = &mut self.rows[r][c / 64];
        if value {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    pub fn toggle(&mut self, r: usize, c: usize) {
        self.rows[r][c / 64] ^= 1 << (c % 64);
    }

    /// Rank by Gaussian elimination; consumes the matrix.
    pub fn rank(mut self) -> usize {
        let mut rank = 0;
        for c in 0..self.cols {
            let (w, bit) = (c / 64, 1u64 << (c % 64));
            let Some(p) = (rank..self.rows.len()).find(|&r| self.rows[r][w] & bit != 0) else {
                continue;
            };
            self.rows.swap(rank, p);
            let (head, tail) = self.rows.split_at_mut(rank + 1);
            let pivot = &head[rank];
            for row in tail.iter_mut() {
                if row[w] & bit != 0 {
                    for k in w..self.words {
                        row[k] ^= pivot[k];
                    }
                }
            }
            rank += 1;
            if rank == self.rows.len() {
                break;
            }
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_ranks() {
        assert_eq!(BitMatrix::zeros(3, 3).rank(), 0);
        assert_eq!(BitMatrix::zeros(0, 5).rank(), 0);
        let mut m = BitMatrix::zeros(3, 3);
        for (r, c) in [(0, 0), (0, 1), (1, 1), (1, 2), (2, 0), (2, 2)] {
            m.set(r, c, true);
        }
        // rows sum to zero over GF(2)
        assert_eq!(m.rank(), 2);
        let mut id = BitMatrix::zeros(130, 130);
        for i in 0..130 {
            id.set(i, i, true);
        }
        assert_eq!(id.rank(), 130);
    }

    /// Rank from brute force: log2 of the size of the row span.
    fn span_rank(rows: &[u32]) -> usize {
        let mut span = std::collections::HashSet::from([0u32]);
        for &r in rows {
            let next: Vec<u32> = span.iter().map(|s| s ^ r).collect();
            span.extend(next);
        }
        span.len().trailing_zeros() as usize
    }

    proptest! {
        #[test]
        fn rank_matches_span(rows in proptest::collection::vec(0u32..1 << 10, 0..8)) {
            let mut m = BitMatrix::zeros(rows.len(), 10);
            for (r, &bits) in rows.iter().enumerate() {
                for c in 0..10 {
                    m.set(r, c, bits >> c & 1 == 1);
                }
            }
            prop_assert_eq!(m.clone().rank(), span_rank(&rows));
        }
    }
}
