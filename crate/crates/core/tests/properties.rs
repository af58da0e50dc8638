use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use seidel_core::equitable::quotient_spectrum_subset;
use seidel_core::hypergraph::random_hypergraph;
use seidel_core::{check_equitable, eig_symmetric, seidel_matrix, Hypergraph, SeidelMatrix, VertexPartition};

fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
    (3usize..10, any::<u64>(), 0usize..12).prop_map(|(n, seed, edges)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_hypergraph(&mut rng, n, edges, 2, n.min(5)).unwrap()
    })
}

fn relabel(h: &Hypergraph, perm: &[usize]) -> Hypergraph {
    Hypergraph::new(h.order(), h.edges().iter().map(|e| e.iter().map(|&v| perm[v]).collect::<Vec<_>>())).unwrap()
}

/// Groups each vertex with the first earlier vertex whose row agrees off the
/// pair. Often equitable (isolated vertices, symmetric pieces), not always.
fn twin_partition(s: &SeidelMatrix) -> VertexPartition {
    let n = s.order();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let home = blocks.iter_mut().find(|block| {
            let u = block[0];
            (0..n).filter(|&w| w != u && w != v).all(|w| s.get(u, w) == s.get(v, w))
        });
        match home {
            Some(block) => block.push(v),
            None => blocks.push(vec![v]),
        }
    }
    VertexPartition::new(n, blocks).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn seidel_trace_is_zero_and_entries_odd(h in arb_hypergraph()) {
        let s = seidel_matrix(&h);
        prop_assert_eq!(s.trace(), 0);
        prop_assert!(s.has_seidel_shape());
        let spec = eig_symmetric(s.real(), 1e-12).unwrap();
        prop_assert!(spec.sum().abs() < 1e-9 * (1.0 + s.real().frobenius_norm()));
    }

    #[test]
    fn spectrum_is_relabeling_invariant(
        h in arb_hypergraph(),
        seed in any::<u64>(),
    ) {
        let mut perm: Vec<usize> = (0..h.order()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut rng);
        let a = eig_symmetric(seidel_matrix(&h).real(), 1e-12).unwrap();
        let b = eig_symmetric(seidel_matrix(&relabel(&h, &perm)).real(), 1e-12).unwrap();
        prop_assert!(a.max_abs_diff(b.values()).unwrap() <= 1e-9);
    }

    #[test]
    fn equitable_quotient_spectrum_is_contained(h in arb_hypergraph()) {
        let s = seidel_matrix(&h);
        let spec = eig_symmetric(s.real(), 1e-12).unwrap();
        for p in [VertexPartition::discrete(h.order()), twin_partition(&s)] {
            if check_equitable(&s, &p).unwrap().is_ok() {
                prop_assert!(quotient_spectrum_subset(&s, &p, &spec, 1e-7).unwrap());
            }
        }
    }

    #[test]
    fn weak_deletion_keeps_co_degrees_among_survivors(h in arb_hypergraph(), v in 0usize..3) {
        let w = h.weak_delete_vertex(v).unwrap();
        let before = h.co_degree_table();
        let raw = SeidelMatrix::from_edge_multiset(h.order() - 1, &w.raw_edges);
        let old = |i: usize| if i >= v { i + 1 } else { i };
        for i in 0..h.order() - 1 {
            for j in 0..h.order() - 1 {
                if i != j {
                    prop_assert_eq!(raw.get(i, j), 1 - 2 * before[old(i)][old(j)] as i64);
                }
            }
        }
    }
}
