mod common;

use farey_core::{
    construct_symbol, ElementOrder, Error, ExtFraction, FareySymbol, GroupSpec, Pairing,
    DEFAULT_MAX_EDGES,
};

fn corpus_symbols() -> Vec<(GroupSpec, FareySymbol)> {
    common::corpus(9, 25, 18, 7)
        .into_iter()
        .map(|spec| {
            let f = construct_symbol(&spec, DEFAULT_MAX_EDGES).unwrap();
            (spec, f)
        })
        .collect()
}

#[test]
fn neighbouring_vertices_are_farey_neighbours() {
    for (spec, f) in corpus_symbols() {
        for k in 0..f.edge_count() {
            let (x, y) = f.edge(k);
            assert!(x < y, "{spec}: edge {k} is not increasing");
            assert_eq!(
                x.det_pairing(y).magnitude().to_string(),
                "1",
                "{spec}: edge {k}"
            );
        }
        assert!(
            f.vertices().iter().any(ExtFraction::is_zero),
            "{spec}: 0 is not a vertex"
        );
    }
}

#[test]
fn generator_orders_follow_the_pairing_kind() {
    for (spec, f) in corpus_symbols() {
        for (g, &k) in f.generators().iter().zip(f.generator_edges()) {
            let expected = match f.pairings()[k] {
                Pairing::Even => ElementOrder::Two,
                Pairing::Odd => ElementOrder::Three,
                Pairing::Free(_) => ElementOrder::Infinite,
            };
            assert_eq!(g.element_order(), expected, "{spec}: generator of edge {k}");
        }
    }
}

#[test]
fn side_pairings_carry_edges_to_their_partners() {
    for (spec, f) in corpus_symbols() {
        for k in 0..f.edge_count() {
            let g = f.generator_for_edge(k).unwrap();
            let (x, y) = f.edge(k);
            match f.pairings()[k] {
                Pairing::Even => {
                    assert!(g.act(x).same_cusp(y), "{spec}: edge {k}");
                    assert!(g.act(y).same_cusp(x), "{spec}: edge {k}");
                }
                Pairing::Odd => {
                    let mid = g.act(x);
                    assert!(x < &mid && &mid < y, "{spec}: edge {k}");
                    assert!(g.act(&mid).same_cusp(y), "{spec}: edge {k}");
                }
                Pairing::Free(_) => {
                    let j = f.partner(k).unwrap();
                    let (u, w) = f.edge(j);
                    assert!(g.act(x).same_cusp(w), "{spec}: edge {k}");
                    assert!(g.act(y).same_cusp(u), "{spec}: edge {k}");
                    assert_eq!(f.partner(j), Some(k));
                }
            }
        }
    }
}

#[test]
fn rank_matches_the_generator_list() {
    for (spec, f) in corpus_symbols() {
        let inv = f.invariants();
        let free_pairs = f.count(|p| matches!(p, Pairing::Free(_))) / 2;
        assert_eq!(
            f.generators().len(),
            inv.e2 as usize + inv.e3 as usize + free_pairs,
            "{spec}"
        );
        assert_eq!(inv.widths().iter().sum::<u64>(), inv.index, "{spec}");
    }
}

#[test]
fn malformed_symbols_are_rejected() {
    let parse = |s: &str| s.parse::<FareySymbol>();
    assert!(matches!(
        parse("[-oo 0 2 oo | 1 e 1]"),
        Err(Error::InvalidEdge { edge: 1, .. })
    ));
    assert!(parse("[-oo 1 2 oo | e e e]").is_err(), "0 must be a vertex");
    assert!(
        parse("[-oo 0 1 oo | 1 e e]").is_err(),
        "free label used once"
    );
    assert!(
        parse("[-oo 0 1 oo | 1 1 1]").is_err(),
        "free label used three times"
    );
    assert!(parse("[-oo 0 oo | 1 1]").is_err(), "degenerate polygon");
    assert!(parse("[-oo 0 oo | e]").is_err(), "too few pairings");
    assert!(parse("-oo 0 oo | e o").is_err(), "missing brackets");
}

#[test]
fn text_form_round_trips() {
    for (spec, f) in corpus_symbols() {
        let again: FareySymbol = f.to_string().parse().unwrap();
        assert_eq!(again, f, "{spec}");
    }
}
