mod common;

use std::collections::BTreeSet;

use common::*;
use freeq::aut::{terminal_data, LevelSet};
use freeq::oracle::{brute_force_solutions, certify, BallSpec};
use freeq::solver::{describe_variety, terminal_graphs, Budgets};
use freeq::Word;

fn strings(e: &freeq::solver::EquationInstance, l: usize) -> BTreeSet<(String, String)> {
    let plain = |w: &Word| w.to_string().replace('1', "");
    brute_force_solutions(e, &BallSpec::new(l, ab()))
        .iter()
        .map(|s| (plain(&s.x), plain(&s.y)))
        .collect()
}

#[test]
fn brute_force_matches_nested_loops() {
    let cases = [
        ("xxyy", "aabb", 4),
        ("XYxy", "ABab", 4),
        ("xxyy", "aaaa", 4),
        ("xxyy", "", 3),
        ("xYxy", "aBab", 4),
        ("xy", "ab", 3),
        ("xyxy", "abab", 3),
        ("xxyyy", "a", 4),
    ];
    for (w, u, l) in cases {
        assert_eq!(strings(&eq(w, u), l), naive_solutions(w, u, l), "{w} = {u}, L={l}");
    }
}

#[test]
fn frozen_counts() {
    assert_eq!(strings(&eq("xxyy", ""), 2).len(), 17);
    assert_eq!(
        strings(&eq("XYxy", "ABab"), 1),
        BTreeSet::from([("a".to_string(), "b".to_string())])
    );
    let counts: Vec<usize> = [("xxyy", "aabb", 6), ("XYxy", "ABab", 5), ("xxyy", "aaaa", 8)]
        .iter()
        .map(|(w, u, l)| strings(&eq(w, u), *l).len())
        .collect();
    assert_eq!(counts, vec![9, 119, 15]);
}

#[test]
fn ranks_are_tagged() {
    for s in brute_force_solutions(&eq("xxyy", "aaaa"), &BallSpec::new(4, ab())) {
        assert!(s.rank <= 1);
    }
    for s in brute_force_solutions(&eq("XYxy", "ABab"), &BallSpec::new(3, ab())) {
        assert_eq!(s.rank, 2);
    }
}

/// Every rank 2 solution in the ball reduces to a terminal pair that the
/// partition enumeration produces, with the same terminal word.
#[test]
fn terminal_pairs_are_enumerated() {
    for (w, u) in RANK2_SUITE {
        let e = eq(w, u);
        let bases: BTreeSet<(Word, Word)> = terminal_graphs(&e.u, 10_000_000)
            .unwrap()
            .iter()
            .map(|g| {
                let b = g.canonical_basis();
                (b.generators()[0].clone(), b.generators()[1].clone())
            })
            .collect();
        let level = LevelSet::explore(&e.w, 1_000_000);
        for s in brute_force_solutions(&e, &BallSpec::new(4, ab())) {
            if s.rank < 2 {
                continue;
            }
            let td = terminal_data(&e.w, &s.x, &s.y, &e.u).unwrap();
            assert!(bases.contains(&td.terminal_pair), "{w}={u}: ({}, {})", s.x, s.y);
            assert_eq!(td.terminal_word.evaluate(&td.terminal_pair.0, &td.terminal_pair.1), e.u);
            assert!(level.find(&td.terminal_word).is_found());
        }
    }
}

#[test]
fn certification_stable_in_ball() {
    for (w, u) in RANK2_SUITE {
        let e = eq(w, u);
        let d = describe_variety(&e, &Budgets::default()).unwrap();
        for l in [4, 5] {
            let r = certify(&e, &d, &BallSpec::new(l, ab())).unwrap();
            assert!(r.covered(), "{w} = {u} at L={l}: {:?}", r.uncovered);
        }
    }
}
