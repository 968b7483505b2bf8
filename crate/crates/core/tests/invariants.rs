use edgeideal::ass::{ass_chain, ass_primes};
use edgeideal::betti_oracle::taylor_betti;
use edgeideal::linear_quotients::lq_certificate;
use edgeideal::verify::{edge_ideal_lq_order, lexsegment_families};
use edgeideal::{anti_d_path, star, Family, Graph, Monomial, PrimeSupport};
use proptest::prelude::*;

/// Minimal primes of an edge ideal by brute force over all supports.
fn minimal_primes_brute(g: &Graph) -> Vec<PrimeSupport> {
    let n = g.n();
    let edges = g.edges();
    let covers: Vec<u64> = (0..1u64 << n)
        .filter(|&m| edges.iter().all(|&(i, j)| m >> (i - 1) & 1 == 1 || m >> (j - 1) & 1 == 1))
        .collect();
    let mut out: Vec<PrimeSupport> = covers
        .iter()
        .filter(|&&c| !covers.iter().any(|&o| o != c && o & c == o))
        .map(|&c| PrimeSupport::from_mask(c))
        .collect();
    out.sort();
    out
}

fn test_graphs(n_max: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 3..=n_max {
        for d in 1..=n - 2 {
            out.push(anti_d_path(n, d).unwrap());
        }
        out.push(star(n).unwrap());
    }
    for f in lexsegment_families(6).into_iter().step_by(4) {
        out.push(f.graph().unwrap());
    }
    out
}

#[test]
fn vertex_cover_primes_match_brute_force() {
    for g in test_graphs(12) {
        assert_eq!(g.minimal_vertex_cover_primes().unwrap(), minimal_primes_brute(&g), "{g:?}");
    }
}

#[test]
fn anti_d_path_covers_are_windows() {
    for n in 3..=12 {
        for d in 1..=n - 2 {
            let primes = anti_d_path(n, d).unwrap().minimal_vertex_cover_primes().unwrap();
            assert_eq!(primes.len(), n - d);
            assert!(primes.iter().all(|p| p.len() == n - d - 1));
        }
    }
}

#[test]
fn bipartite_iff_gap_condition() {
    for n in 3..=14 {
        for d in 1..=n - 2 {
            let bip = anti_d_path(n, d).unwrap().is_bipartite().is_bipartite();
            assert_eq!(bip, d + 2 > n - d - 1, "n={n} d={d}");
        }
    }
}

#[test]
fn betti_independent_of_valid_order() {
    for n in 4..=7 {
        for d in 1..=n - 3 {
            let g = anti_d_path(n, d).unwrap();
            let ideal = g.edge_ideal();
            let lex = lq_certificate(ideal.gens()).unwrap();
            let other: Vec<Monomial> = edge_ideal_lq_order(&g)
                .unwrap()
                .into_iter()
                .map(|(i, j)| Monomial::from_indices(n, &[i, j]).unwrap())
                .collect();
            let alt = lq_certificate(&other).unwrap();
            assert_eq!(lex.betti_table().unwrap(), alt.betti_table().unwrap());
            assert_eq!(lex.betti_table().unwrap(), taylor_betti(&ideal).unwrap());
        }
    }
}

#[test]
fn ass_chain_dichotomy_and_containment() {
    for n in 3..=10 {
        for d in 1..=4 {
            if n < d + 2 {
                continue;
            }
            let g = anti_d_path(n, d).unwrap();
            let chain = ass_chain(&g.edge_ideal(), 3).unwrap();
            let minimal = g.minimal_vertex_cover_primes().unwrap();
            assert!(chain.is_ascending(), "n={n} d={d}");
            for k in 1..=3 {
                assert!(minimal.iter().all(|p| chain.entry(k).contains(p)));
            }
            let bip = g.is_bipartite().is_bipartite();
            assert_eq!(chain.is_constant(), bip, "n={n} d={d}");
            assert_eq!(bip, d + 2 > n - d - 1);
        }
    }
}

#[test]
fn squarefree_ass_equals_minimal_primes() {
    for g in test_graphs(9) {
        let ideal = g.edge_ideal();
        if ideal.is_zero() {
            continue;
        }
        assert_eq!(ass_primes(&ideal).unwrap(), g.minimal_vertex_cover_primes().unwrap());
    }
}

fn family_strategy() -> impl Strategy<Value = (Family, usize)> {
    prop_oneof![
        (3usize..8, 1usize..4, 1usize..3).prop_filter_map("needs an edge", |(n, d, k)| {
            (n >= d + 2).then_some((Family::AntiDPath { n, d }, k))
        }),
        (2usize..6, 0usize..100, 1usize..3).prop_map(|(n, pick, t)| {
            let quads = edgeideal::families::squarefree_quadrics(n);
            let q = quads[pick % quads.len()].clone();
            if pick % 2 == 0 {
                (Family::LexInitial { v: q }, t)
            } else {
                (Family::LexFinal { u: q }, t)
            }
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn colon_membership(
        (family, k) in family_strategy(),
        f in proptest::collection::vec(0u32..3, 8),
        m in proptest::collection::vec(0u32..3, 8),
    ) {
        let ideal = family.edge_ideal().unwrap().power(k).unwrap();
        let n = ideal.n();
        let f = Monomial::new(f[..n].to_vec()).unwrap();
        let m = Monomial::new(m[..n].to_vec()).unwrap();
        let colon = ideal.colon_by_monomial(&f).unwrap();
        prop_assert_eq!(colon.contains(&m), ideal.contains(&f.mul(&m)));
    }

    #[test]
    fn family_order_has_linear_quotients((family, k) in family_strategy()) {
        let power = family.edge_ideal().unwrap().power(k).unwrap();
        let order = family.generator_order().arrange(&power);
        let cert = lq_certificate(&order).unwrap();
        prop_assert_eq!(cert.betti_table().unwrap(), taylor_betti(&power).unwrap());
    }
}
