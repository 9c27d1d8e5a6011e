use localbox::construct::{
    biclique_representation, clawfree_representation, roberts_representation,
};
use localbox::generators;
use localbox::poset::{crown_local_realizer, crown_poset, verify_local_realizer};
use localbox::storage::{
    adjacency_query, from_compact, read_representation_json, to_compact, write_representation_json,
    CompactPosetRecord,
};
use localbox::{verify_representation, Interval, LocalBoxRepresentation};

#[test]
fn roberts_ten_compact() {
    let g = generators::roberts(10).unwrap();
    let rep = roberts_representation(10).unwrap();
    let rec = to_compact(&rep);
    assert_eq!(rec.triple_count(), 20);
    for i in 0..10 {
        assert!(!adjacency_query(&rec, 2 * i, 2 * i + 1));
    }
    for u in 0..20 {
        for v in (u + 1)..20 {
            assert_eq!(adjacency_query(&rec, u, v), g.has_edge(u, v));
        }
    }
    let back = from_compact(&rec).unwrap();
    assert!(verify_representation(&g, &back).unwrap().exact);
    assert_eq!(to_compact(&back), rec);
}

#[test]
fn biclique_on_roberts_is_frequency_one() {
    let g = generators::roberts(5).unwrap();
    let rep = biclique_representation(&g).unwrap();
    assert_eq!(verify_representation(&g, &rep).unwrap().max_frequency, 1);
}

#[test]
fn clawfree_on_small_cycles() {
    for n in 3..=12 {
        let g = generators::cycle(n);
        let rep = clawfree_representation(&g).unwrap();
        let report = verify_representation(&g, &rep).unwrap();
        assert!(report.exact);
        assert!(report.max_frequency <= 6);
    }
}

#[test]
fn json_round_trips_three_ways() {
    let g = generators::gnp(10, 0.5, 4).unwrap();
    let reps = [
        roberts_representation(5).unwrap(),
        LocalBoxRepresentation::all_implicit(5, Interval::int(0, 1), "complete"),
        biclique_representation(&g).unwrap(),
    ];
    for rep in &reps {
        let text = write_representation_json(rep);
        let back = read_representation_json(&text).unwrap();
        assert_eq!(&back, rep);
        assert_eq!(write_representation_json(&back), text);
    }
    assert!(
        verify_representation(
            &g,
            &read_representation_json(&write_representation_json(&reps[2])).unwrap()
        )
        .unwrap()
        .exact
    );
}

#[test]
fn crown_compact_bookkeeping() {
    for n in [2, 3, 10, 40] {
        let p = crown_poset(n).unwrap();
        let r = crown_local_realizer(n).unwrap();
        let rec = CompactPosetRecord::from_realizer(2 * n, &r).unwrap();
        let report = verify_local_realizer(&p, &r).unwrap();
        assert_eq!(
            rec.pair_count(),
            report.mu_per_element.iter().sum::<usize>()
        );
        assert_eq!(rec.pair_count(), 3 * 2 * n);
        assert_eq!(
            CompactPosetRecord::from_bytes(&rec.to_bytes())
                .unwrap()
                .to_realizer()
                .unwrap(),
            r
        );
    }
}
