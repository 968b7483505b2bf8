//! The graph families under study: d-paths and their complements, stars,
//! and the degree-2 squarefree lexsegments.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::MonomialIdeal;
use crate::monomial::{lex, Monomial};

/// Union of the complete graphs on `{t, ..., t+d}`: `{i, j}` is an edge iff
/// `0 < |i - j| <= d`.
pub fn d_path(n: usize, d: usize) -> Result<Graph> {
    if n == 0 || d == 0 {
        return Err(Error::argument("d-path needs n >= 1 and d >= 1"));
    }
    Graph::new(
        n,
        (1..=n).flat_map(|i| (i + 1..=n.min(i + d)).map(move |j| (i, j))),
    )
}

/// Complement of the d-path: `{i, j}` is an edge iff `|i - j| > d`.
pub fn anti_d_path(n: usize, d: usize) -> Result<Graph> {
    Ok(d_path(n, d)?.complement())
}

/// Star with centre 1 on `[n]`.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::argument("star needs n >= 1"));
    }
    Graph::new(n, (2..=n).map(|j| (1, j)))
}

fn check_quadric(v: &Monomial, n: usize) -> Result<()> {
    if v.n() != n {
        return Err(Error::Dimension {
            expected: n,
            found: v.n(),
        });
    }
    if v.degree() != 2 || !v.is_squarefree() {
        return Err(Error::argument(format!(
            "lexsegment endpoint {v} must be a squarefree monomial of degree 2"
        )));
    }
    Ok(())
}

/// All `x_i x_j` with `i < j <= n`, in decreasing lex order.
pub fn squarefree_quadrics(n: usize) -> Vec<Monomial> {
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .map(|(i, j)| Monomial::from_indices(n, &[i, j]).expect("indices in range"))
        .collect()
}

/// Ideal of the initial lexsegment `{w : w >=_lex v}`.
pub fn lexsegment_initial(v: &Monomial, n: usize) -> Result<MonomialIdeal> {
    check_quadric(v, n)?;
    let gens = squarefree_quadrics(n).into_iter().filter(|w| lex(w, v).is_ge());
    MonomialIdeal::from_gens(n, gens)
}

/// Ideal of the final lexsegment `{w : u >=_lex w}`.
pub fn lexsegment_final(u: &Monomial, n: usize) -> Result<MonomialIdeal> {
    check_quadric(u, n)?;
    let gens = squarefree_quadrics(n).into_iter().filter(|w| lex(u, w).is_ge());
    MonomialIdeal::from_gens(n, gens)
}

/// Order in which a family's generators are processed for linear quotients.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorOrder {
    DecreasingLex,
    IncreasingRevlex,
}

impl GeneratorOrder {
    pub fn arrange(self, ideal: &MonomialIdeal) -> Vec<Monomial> {
        match self {
            GeneratorOrder::DecreasingLex => ideal.gens().to_vec(),
            GeneratorOrder::IncreasingRevlex => ideal.gens_increasing_revlex(),
        }
    }
}

/// A named member of one of the graph families.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Family {
    DPath { n: usize, d: usize },
    AntiDPath { n: usize, d: usize },
    Star { n: usize },
    LexInitial { v: Monomial },
    LexFinal { u: Monomial },
}

impl Family {
    pub fn n(&self) -> usize {
        match self {
            Family::DPath { n, .. } | Family::AntiDPath { n, .. } | Family::Star { n } => *n,
            Family::LexInitial { v } => v.n(),
            Family::LexFinal { u } => u.n(),
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        match self {
            Family::DPath { n, d } => d_path(*n, *d),
            Family::AntiDPath { n, d } => anti_d_path(*n, *d),
            Family::Star { n } => star(*n),
            Family::LexInitial { v } => Graph::from_edge_ideal(&lexsegment_initial(v, v.n())?),
            Family::LexFinal { u } => Graph::from_edge_ideal(&lexsegment_final(u, u.n())?),
        }
    }

    pub fn edge_ideal(&self) -> Result<MonomialIdeal> {
        match self {
            Family::LexInitial { v } => lexsegment_initial(v, v.n()),
            Family::LexFinal { u } => lexsegment_final(u, u.n()),
            _ => Ok(self.graph()?.edge_ideal()),
        }
    }

    /// The processing order under which the powers of this family's edge
    /// ideal are expected to have linear quotients.
    pub fn generator_order(&self) -> GeneratorOrder {
        match self {
            Family::LexFinal { .. } => GeneratorOrder::IncreasingRevlex,
            _ => GeneratorOrder::DecreasingLex,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::DPath { n, d } => write!(f, "d_path({n},{d})"),
            Family::AntiDPath { n, d } => write!(f, "anti_d_path({n},{d})"),
            Family::Star { n } => write!(f, "star({n})"),
            Family::LexInitial { v } => write!(f, "lexseg_init({v},{})", v.n()),
            Family::LexFinal { u } => write!(f, "lexseg_final({u},{})", u.n()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(s: &str, n: usize) -> Monomial {
        Monomial::parse(s, n).unwrap()
    }

    fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::from_gens(n, gens.iter().map(|s| mono(s, n))).unwrap()
    }

    #[test]
    fn d_path_examples() {
        let g = d_path(7, 2).unwrap();
        assert_eq!(g.edge_count(), 11);
        assert!(g.edges().iter().all(|&(i, j)| j - i <= 2));
        assert_eq!(d_path(3, 1).unwrap().edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(d_path(4, 3).unwrap(), Graph::complete(4).unwrap());
        assert_eq!(d_path(4, 9).unwrap(), Graph::complete(4).unwrap());
        assert!(d_path(4, 0).is_err());
    }

    #[test]
    fn anti_d_path_edge_ideal() {
        let i = anti_d_path(7, 2).unwrap().edge_ideal();
        assert_eq!(i.len(), 10);
        assert_eq!(i.gens()[0], mono("x1x4", 7));
        assert_eq!(i.gens()[9], mono("x4x7", 7));
        assert!(i.gens().iter().all(|g| {
            let s = g.support();
            s[1] - s[0] > 2
        }));
        assert!(Graph::empty(4).unwrap().edge_ideal().is_zero());
        assert_eq!(star(4).unwrap().edge_ideal(), ideal(4, &["x1x2", "x1x3", "x1x4"]));
    }

    #[test]
    fn lexsegment_examples() {
        assert_eq!(
            lexsegment_initial(&mono("x1x4", 4), 4).unwrap(),
            ideal(4, &["x1x2", "x1x3", "x1x4"])
        );
        assert_eq!(lexsegment_initial(&mono("x1x2", 4), 4).unwrap(), ideal(4, &["x1x2"]));
        assert_eq!(lexsegment_initial(&mono("x4x5", 5), 5).unwrap().len(), 10);
        assert_eq!(lexsegment_final(&mono("x4x5", 5), 5).unwrap(), ideal(5, &["x4x5"]));
        assert_eq!(lexsegment_final(&mono("x1x2", 5), 5).unwrap().len(), 10);
        assert_eq!(
            lexsegment_final(&mono("x2x4", 4), 4).unwrap(),
            ideal(4, &["x2x4", "x3x4"])
        );
    }

    #[test]
    fn lexsegment_validation() {
        assert!(lexsegment_initial(&mono("x1^2", 4), 4).is_err());
        assert!(lexsegment_initial(&mono("x1x2x3", 4), 4).is_err());
        assert!(lexsegment_final(&mono("x1x2", 3), 4).is_err());
    }

    #[test]
    fn star_is_an_initial_lexsegment() {
        for n in 2..7 {
            let v = Monomial::from_indices(n, &[1, n]).unwrap();
            assert_eq!(lexsegment_initial(&v, n).unwrap(), star(n).unwrap().edge_ideal());
        }
    }

    #[test]
    fn family_descriptors() {
        let f = Family::LexInitial { v: mono("x1x4", 4) };
        assert_eq!(f.to_string(), "lexseg_init(x1x4,4)");
        assert_eq!(f.edge_ideal().unwrap().len(), 3);
        assert_eq!(f.graph().unwrap().edges(), vec![(1, 2), (1, 3), (1, 4)]);
        let a = Family::AntiDPath { n: 7, d: 2 };
        assert_eq!(a.edge_ideal().unwrap().len(), 10);
        assert_eq!(Family::LexFinal { u: mono("x2x4", 4) }.generator_order(), GeneratorOrder::IncreasingRevlex);
    }
}
