use localbox::claw::is_claw_free;
use localbox::construct::{biclique_representation, clawfree_representation, peel_representation};
use localbox::generators;
use localbox::oracle::enumerate::{nonisomorphic_graphs, nonisomorphic_posets};
use localbox::oracle::{
    exact_boxicity, exact_local_boxicity, exact_local_dimension, exact_product_dimension,
    is_interval_graph, OracleLimits,
};
use localbox::poset::{comparability_graph, crown_poset};
use localbox::Poset;

#[test]
fn constructions_never_beat_the_oracle() {
    let lim = OracleLimits::default();
    for n in 1..=5 {
        for g in nonisomorphic_graphs(n) {
            let lbox = exact_local_boxicity(&g, &lim).unwrap().exact().unwrap();
            let bx = exact_boxicity(&g, &lim).unwrap().exact().unwrap();
            assert!(lbox <= bx, "{g:?}");
            assert!(lbox <= biclique_representation(&g).unwrap().max_frequency());
            if g.m() > 0 {
                assert!(lbox <= peel_representation(&g, None).unwrap().max_frequency());
            }
            if is_claw_free(&g) {
                assert!(lbox <= clawfree_representation(&g).unwrap().max_frequency());
            }
        }
    }
}

#[test]
fn interval_graphs_are_boxicity_one() {
    let lim = OracleLimits::default();
    for n in 1..=5 {
        for g in nonisomorphic_graphs(n) {
            let bx = exact_boxicity(&g, &lim).unwrap().exact().unwrap();
            assert_eq!(is_interval_graph(&g).unwrap(), bx <= 1, "{g:?}");
        }
    }
}

#[test]
fn known_values() {
    let lim = OracleLimits::default();
    let lbox = |g| exact_local_boxicity(&g, &lim).unwrap().exact().unwrap();
    let bx = |g| exact_boxicity(&g, &lim).unwrap().exact().unwrap();
    assert_eq!(lbox(generators::complete(4)), 0);
    assert_eq!(bx(generators::complete(4)), 1);
    assert_eq!(bx(generators::cycle(5)), 2);
    assert_eq!(lbox(generators::cycle(4)), 1);
    assert_eq!(lbox(generators::roberts(2).unwrap()), 1);
    assert_eq!(bx(generators::roberts(2).unwrap()), 2);
    assert_eq!(lbox(generators::star(3)), 1);

    let ldim = |p| exact_local_dimension(&p, &lim).unwrap().exact().unwrap();
    assert_eq!(ldim(Poset::chain(4)), 1);
    assert_eq!(ldim(Poset::antichain(3)), 2);
    assert_eq!(ldim(crown_poset(2).unwrap()), 2);
}

#[test]
fn product_dimension_bounds_local_boxicity() {
    let lim = OracleLimits::default();
    for n in 1..=5 {
        for g in nonisomorphic_graphs(n) {
            let (k, enc) = exact_product_dimension(&g, &lim).unwrap().exact().unwrap();
            enc.check(&g).unwrap();
            let lbox = exact_local_boxicity(&g, &lim).unwrap().exact().unwrap();
            assert!(lbox <= k, "{g:?}");
        }
    }
}

#[test]
fn comparability_graphs_of_small_posets() {
    let lim = OracleLimits::default();
    for n in 1..=4 {
        for p in nonisomorphic_posets(n) {
            let g = comparability_graph(&p);
            let ldim = exact_local_dimension(&p, &lim).unwrap().exact().unwrap();
            let lbox = exact_local_boxicity(&g, &lim).unwrap().exact().unwrap();
            assert!(ldim <= 2 * lbox + 1, "{p:?}");
        }
    }
}
