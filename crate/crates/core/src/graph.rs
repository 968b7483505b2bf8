//! Simple graphs on `[n]`, their edge ideals and the predicates that govern
//! linear resolutions (chordality of the complement) and torsion-freeness
//! of powers (bipartiteness).

use std::collections::VecDeque;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, PrimeSupport};
use crate::monomial::{Monomial, MAX_VARS};

/// Vertex limit for maximal independent set enumeration.
pub const MAX_MIS_VERTICES: usize = 24;

/// A simple undirected graph on vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    // bit j-1 of adj[i-1] is set iff {i, j} is an edge
    adj: Vec<u64>,
}

/// Outcome of a 2-coloring attempt.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Bipartiteness {
    Bipartite { part1: Vec<usize>, part2: Vec<usize> },
    /// Vertices of an odd cycle, in traversal order.
    OddCycle { cycle: Vec<usize> },
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for (i, j) in edges {
            if i == j {
                return Err(Error::argument(format!("loop at vertex {i}")));
            }
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::argument(format!("edge {{{i},{j}}} outside 1..={n}")));
            }
            g.adj[i - 1] |= 1 << (j - 1);
            g.adj[j - 1] |= 1 << (i - 1);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::Resource {
                what: "number of vertices",
                limit: MAX_VARS,
                actual: n,
            });
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(Self::empty(n)?.complement())
    }

    /// Graph whose edge ideal is `ideal`; every generator must be `x_i x_j`
    /// with `i != j`.
    pub fn from_edge_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        let edges = ideal
            .gens()
            .iter()
            .map(|g| match g.support()[..] {
                [i, j] if g.degree() == 2 => Ok((i, j)),
                _ => Err(Error::argument(format!(
                    "{g} is not a squarefree quadric"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ideal.n(), edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn all_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && i >= 1 && j >= 1 && i <= self.n && j <= self.n && self.adj[i - 1] >> (j - 1) & 1 == 1
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        bits(self.adj[i - 1])
    }

    /// Neighbourhood of `i` as a bitmask (bit `j - 1` for vertex `j`).
    pub fn neighbor_mask(&self, i: usize) -> u64 {
        self.adj[i - 1]
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in bits(self.adj[i - 1]) {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn complement(&self) -> Self {
        let all = self.all_mask();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(i, &a)| !a & all & !(1 << i))
            .collect();
        Self { n: self.n, adj }
    }

    /// `I(G) = (x_i x_j : {i, j} ∈ E(G))`.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let gens = self
            .edges()
            .into_iter()
            .map(|(i, j)| Monomial::from_indices(self.n, &[i, j]).expect("edge in range"));
        MonomialIdeal::from_gens(self.n, gens).expect("edges share the ambient ring")
    }

    /// BFS 2-coloring from the smallest vertex of each component.
    pub fn is_bipartite(&self) -> Bipartiteness {
        let mut color = vec![u8::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        for root in 0..self.n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for w in bits(self.adj[v]).into_iter().map(|w| w - 1) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        parent[w] = v;
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return Bipartiteness::OddCycle {
                            cycle: odd_cycle(v, w, &parent, &depth),
                        };
                    }
                }
            }
        }
        let part = |c| (0..self.n).filter(|&v| color[v] == c).map(|v| v + 1).collect();
        Bipartiteness::Bipartite {
            part1: part(0),
            part2: part(1),
        }
    }

    /// Maximum cardinality search; ties go to the smallest vertex. Returns
    /// vertices in visiting order.
    pub fn max_cardinality_search(&self) -> Vec<usize> {
        let mut weight = vec![0usize; self.n];
        let mut visited = 0u64;
        let mut order = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| visited >> v & 1 == 0)
                .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                .expect("an unvisited vertex remains");
            visited |= 1 << v;
            order.push(v + 1);
            for w in bits(self.adj[v] & !visited) {
                weight[w - 1] += 1;
            }
        }
        order
    }

    /// True iff, for every vertex, its neighbours later in `order` form a clique.
    pub fn is_perfect_elimination_order(&self, order: &[usize]) -> bool {
        let mut later = self.all_mask();
        for &v in order {
            later &= !(1 << (v - 1));
            let nbrs = self.adj[v - 1] & later;
            for u in bits(nbrs) {
                let rest = nbrs & !(1 << (u - 1));
                if rest & !self.adj[u - 1] != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// A perfect elimination order (reverse MCS order) if the graph is chordal.
    pub fn perfect_elimination_order(&self) -> Option<Vec<usize>> {
        let mut order = self.max_cardinality_search();
        order.reverse();
        self.is_perfect_elimination_order(&order).then_some(order)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_order().is_some()
    }

    /// All inclusion-maximal independent sets, sorted.
    ///
    /// Bron–Kerbosch with pivoting on the complement graph.
    pub fn maximal_independent_sets(&self) -> Result<Vec<Vec<usize>>> {
        if self.n > MAX_MIS_VERTICES {
            return Err(Error::Resource {
                what: "vertices for independent set enumeration",
                limit: MAX_MIS_VERTICES,
                actual: self.n,
            });
        }
        let co = self.complement();
        let mut out = Vec::new();
        bron_kerbosch(&co.adj, 0, self.all_mask(), 0, &mut out);
        let mut sets: Vec<Vec<usize>> = out.into_iter().map(bits).collect();
        sets.sort();
        Ok(sets)
    }

    /// Minimal primes of the edge ideal: complements of the maximal
    /// independent sets. Empty for a graph without edges.
    pub fn minimal_vertex_cover_primes(&self) -> Result<Vec<PrimeSupport>> {
        let mut primes: Vec<PrimeSupport> = self
            .maximal_independent_sets()?
            .into_iter()
            .map(|s| PrimeSupport::new(s).complement(self.n))
            .filter(|p| !p.is_empty())
            .collect();
        primes.sort();
        Ok(primes)
    }
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let pivot = bits(p | x)
        .into_iter()
        .max_by_key(|&u| (p & adj[u - 1]).count_ones())
        .expect("p | x is nonempty");
    for v in bits(p & !adj[pivot - 1]) {
        let b = 1u64 << (v - 1);
        bron_kerbosch(adj, r | b, p & adj[v - 1], x & adj[v - 1], out);
        p &= !b;
        x |= b;
    }
}

/// Cycle through the BFS tree closed by the edge `{v, w}` of equal colour.
fn odd_cycle(v: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (v, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left.reverse();
    left.into_iter().map(|v| v + 1).collect()
}

/// 1-based indices of the set bits.
pub(crate) fn bits(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize + 1);
        mask &= mask - 1;
    }
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edges(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        Graph::new(raw.n, raw.edges).map_err(serde::de::Error::custom)
    }
}
