use irregularity::constructions::{
    chained_clique_stars, clique_star, clique_star_shape, fanned_split, fs_params, irr_clique_star, irr_fanned_split,
    ks_max, ks_max_params, max_cyclomatic, max_irr_bound, ChainParams,
};
use irregularity::degseq::irr_upper_bound;
use irregularity::{irregularity, DegreeSequence};
use proptest::prelude::*;

#[test]
fn maximal_clique_stars_up_to_sixty() {
    for n in 3..=60 {
        let params = ks_max_params(n);
        assert_eq!(params.len(), if n % 3 == 2 { 2 } else { 1 }, "n = {n}");
        let graphs = ks_max(n).unwrap();
        for (g, &(p, q)) in graphs.iter().zip(&params) {
            assert_eq!(p + q, n);
            assert_eq!(irregularity(g), max_irr_bound(n), "n = {n}");
            assert_eq!(g.universal_count(), p);
            assert!(p >= n / 3);
        }
        // no other clique-star does better
        let best = (0..=n).map(|u| irr_clique_star(u, n)).max().unwrap();
        assert_eq!(best, max_irr_bound(n));
    }
}

#[test]
fn degree_sequence_bound_is_tight_on_maximal_clique_stars() {
    for n in 3..=40 {
        for (p, q) in ks_max_params(n) {
            let s = DegreeSequence::clique_star(p, q);
            assert_eq!(irr_upper_bound(&s).total, max_irr_bound(n), "n = {n}");
            assert_eq!(clique_star_shape(&s), Some((p, q)));
        }
    }
}

#[test]
fn fanned_split_matches_closed_form() {
    for n in 3..=24 {
        for k in 0..=max_cyclomatic(n) {
            let p = fs_params(n, k).unwrap();
            let g = fanned_split(&p);
            assert_eq!(g.edge_count(), n + k - 1, "n = {n}, k = {k}");
            assert!(g.is_connected());
            assert_eq!(irregularity(&g), irr_fanned_split(&p), "n = {n}, k = {k}");
        }
    }
}

proptest! {
    #[test]
    fn clique_star_degrees(p in 0usize..20, q in 0usize..20) {
        prop_assume!(p + q > 0);
        let g = clique_star(p, q).unwrap();
        let n = p + q;
        prop_assert_eq!(g.degree_sequence(), DegreeSequence::clique_star(p, q).into_vec());
        prop_assert_eq!(irregularity(&g), irr_clique_star(p, n));
    }

    #[test]
    fn chains_keep_the_clique_star_degree_multiset(copies in 1usize..6, clique in 1usize..6, independent in 2usize..8) {
        let c = ChainParams { copies, clique, independent };
        let g = chained_clique_stars(&c).unwrap();
        let mut expected = Vec::new();
        for _ in 0..copies {
            expected.extend(DegreeSequence::clique_star(clique, independent).into_vec());
        }
        expected.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(g.order(), c.order());
        prop_assert_eq!(g.degree_sequence(), expected);
        prop_assert_eq!(irregularity(&g), c.irregularity());
        prop_assert_eq!(g.max_degree(), c.max_degree());
        prop_assert_eq!(g.min_degree(), c.min_degree());
        if clique >= 2 {
            prop_assert!(g.is_connected());
        }
    }
}
