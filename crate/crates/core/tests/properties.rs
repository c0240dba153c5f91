use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zfpoly::analysis::{hall_monotonicity_holds, path_bound_holds};
use zfpoly::closed_forms::{poly_cycle, poly_path, poly_threshold, threshold_zfs_check};
use zfpoly::forcing::{chronological_forces, closure, is_zero_forcing_set};
use zfpoly::forts::{enumerate_forts, min_fort_cover};
use zfpoly::graph::{self, from_graph6, random_graph, threshold_from_string, to_graph6, Graph, VertexSet};
use zfpoly::poly::{count_zfs, zf_polynomial, zf_polynomial_by_components, ZfPolynomial};

fn sample(n: usize, p: f64, seed: u64) -> Graph {
    random_graph(n, p, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

fn threshold_string() -> impl Strategy<Value = String> {
    (1usize..=11, any::<u64>()).prop_map(|(len, bits)| {
        let mut s: String = (0..len).map(|i| if bits >> i & 1 == 1 { '1' } else { '0' }).collect();
        s.push('1');
        let first = s.as_bytes().get(1).copied().unwrap_or(b'1') as char;
        s.replace_range(0..1, &first.to_string());
        s
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabeling_preserves_polynomial(n in 1usize..=9, p in 0.1f64..0.9, seed in any::<u64>()) {
        let g = sample(n, p, seed);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed ^ 1));
        prop_assert_eq!(zf_polynomial(&g.permute(&perm)).unwrap(), zf_polynomial(&g).unwrap());
    }

    #[test]
    fn graph6_round_trip_keeps_polynomial(n in 0usize..=10, p in 0.1f64..0.9, seed in any::<u64>()) {
        let g = sample(n, p, seed);
        let back = from_graph6(&to_graph6(&g)).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(zf_polynomial(&back).unwrap(), zf_polynomial(&g).unwrap());
    }

    #[test]
    fn unions_multiply(a in 1usize..=6, b in 1usize..=6, p in 0.1f64..0.9, seed in any::<u64>()) {
        let g = sample(a, p, seed);
        let h = sample(b, p, seed.wrapping_add(1));
        let union = g.disjoint_union(&h).unwrap();
        let product = zf_polynomial(&g).unwrap().multiply(&zf_polynomial(&h).unwrap());
        prop_assert_eq!(zf_polynomial(&union).unwrap(), product.clone());
        prop_assert_eq!(zf_polynomial_by_components(&union).unwrap(), product);
    }

    #[test]
    fn coefficients_count_sets(n in 1usize..=8, p in 0.1f64..0.9, seed in any::<u64>()) {
        let g = sample(n, p, seed);
        let poly = zf_polynomial(&g).unwrap();
        for i in 0..=n {
            prop_assert_eq!(count_zfs(&g, i).unwrap(), poly.coeff(i));
        }
    }

    #[test]
    fn polynomial_json_round_trip(coeffs in proptest::collection::vec(any::<u64>(), 1..12)) {
        let p = ZfPolynomial::from_u64s(&coeffs);
        let back: ZfPolynomial = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn forcing_sets_and_forts(n in 1usize..=9, p in 0.1f64..0.9, seed in any::<u64>(), mask in any::<u64>()) {
        let g = sample(n, p, seed);
        let s = VertexSet(mask) & g.vertices();
        let forts = enumerate_forts(&g).unwrap();
        if is_zero_forcing_set(&g, s) {
            prop_assert!(forts.is_transversal(s));
        } else {
            // what stays uncolored is itself a fort
            let rest = g.vertices() - closure(&g, s);
            prop_assert!(forts.contains(rest));
        }
        let rec = chronological_forces(&g, s);
        prop_assert!(rec.replay(&g));
    }

    #[test]
    fn cover_witness_is_optimal(n in 1usize..=10, p in 0.1f64..0.9, seed in any::<u64>()) {
        let g = sample(n, p, seed);
        let cert = min_fort_cover(&g).unwrap();
        let z = zf_polynomial(&g).unwrap().zero_forcing_number().unwrap();
        prop_assert_eq!(cert.size, z);
        prop_assert_eq!(cert.witness.len(), z);
    }

    #[test]
    fn structural_bounds(n in 1usize..=10, p in 0.1f64..0.9, seed in any::<u64>()) {
        let poly = zf_polynomial(&sample(n, p, seed)).unwrap();
        prop_assert!(hall_monotonicity_holds(&poly));
        prop_assert!(path_bound_holds(&poly));
    }

    #[test]
    fn threshold_formula_matches(s in threshold_string()) {
        let g = threshold_from_string(&s).unwrap();
        prop_assert_eq!(poly_threshold(&s).unwrap(), zf_polynomial(&g).unwrap());
    }

    #[test]
    fn threshold_characterization_matches(s in threshold_string(), mask in any::<u64>()) {
        let g = threshold_from_string(&s).unwrap();
        let set = VertexSet(mask) & g.vertices();
        prop_assert_eq!(threshold_zfs_check(&s, set).unwrap(), is_zero_forcing_set(&g, set));
    }

    #[test]
    fn block_shuffles_are_automorphisms(s in threshold_string(), seed in any::<u64>()) {
        // vertices within a block are interchangeable
        let bp = graph::block_partition(&s).unwrap();
        let n = bp.order();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..n).collect();
        for b in bp.blocks() {
            perm[b.start..b.start + b.len].shuffle(&mut rng);
        }
        let g = threshold_from_string(&s).unwrap();
        prop_assert_eq!(g.permute(&perm), g);
    }
}

#[test]
fn chords_and_paths_by_order() {
    for n in 4..=11 {
        let expected = poly_cycle(n).unwrap();
        for j in 2..n - 1 {
            assert_eq!(zf_polynomial(&graph::cycle_plus_chord(n, 0, j).unwrap()).unwrap(), expected);
        }
        assert_eq!(zf_polynomial(&graph::path(n).unwrap()).unwrap(), poly_path(n).unwrap());
    }
}
