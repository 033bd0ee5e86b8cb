use sc_lab_core::combined::{cat_rev_direct, cat_star_direct, tight_bound_cat_rev};
use sc_lab_core::harness::oracle::{naive_cat_phi, naive_cat_rev, naive_cat_star};
use sc_lab_core::witness::{
    gen_cat_rev_witness, gen_cat_star_witness, search_witness, Constraint, SearchBudget,
    SearchMode, SearchOp, WitnessPair,
};

fn oracle_size(op: SearchOp, w: &WitnessPair) -> usize {
    match op {
        SearchOp::CatStar => naive_cat_star(&w.a, &w.b).unwrap().state_count(),
        SearchOp::CatRev => naive_cat_rev(&w.a, &w.b).unwrap().state_count(),
        SearchOp::CatPhi => naive_cat_phi(&w.a, &w.b, &SearchOp::phi(w.a.alphabet()))
            .unwrap()
            .state_count(),
    }
}

#[test]
fn cat_rev_family_is_tight_on_grid() {
    for m in 2..=4 {
        for n in 2..=5 {
            let w = gen_cat_rev_witness(m, n).unwrap();
            let size = cat_rev_direct(&w.a, &w.b).unwrap().minimize().state_count();
            assert_eq!(size as u64, w.predicted, "m={m} n={n}");
        }
    }
}

#[test]
fn cat_star_family_is_tight_at_n2() {
    for m in 2..=6 {
        let w = gen_cat_star_witness(m).unwrap();
        let size = cat_star_direct(&w.a, &w.b)
            .unwrap()
            .minimize()
            .state_count();
        assert_eq!(size as u64, w.predicted, "m={m}");
        assert_eq!(w.predicted, 3 * m as u64 - 1);
    }
}

#[test]
fn cat_rev_one_by_two_is_found() {
    let found = (1..=2).find_map(|k| {
        let budget = SearchBudget {
            alphabet_size: k,
            ..Default::default()
        };
        search_witness(SearchOp::CatRev, 1, 2, 2, Constraint::None, &budget)
            .unwrap()
            .witness
    });
    let w = found.expect("a 1x2 pair reaching 2 states exists over at most two letters");
    assert_eq!(oracle_size(SearchOp::CatRev, &w), 2);
    assert_eq!(w.a.state_count(), 1);
    assert_eq!(w.b.state_count(), 2);
}

#[test]
fn cat_rev_one_by_three_with_universal_first() {
    let target = tight_bound_cat_rev(1, 3).unwrap() as usize;
    let mut outcome = None;
    for k in 1..=3 {
        let budget = SearchBudget {
            alphabet_size: k,
            ..Default::default()
        };
        let report = search_witness(
            SearchOp::CatRev,
            1,
            3,
            target,
            Constraint::FirstUniversal,
            &budget,
        )
        .unwrap();
        if report.witness.is_some() {
            outcome = Some(report);
            break;
        }
        assert!(report.is_exhaustion_certificate());
        assert!(report.best_size.unwrap_or(0) < target);
    }
    let report = outcome.expect("2^(n-1) is reachable for n = 3 over three letters");
    let w = report.witness.unwrap();
    assert_eq!(oracle_size(SearchOp::CatRev, &w), 4);
}

#[test]
fn returned_pairs_reproduce_target_through_oracle() {
    let cases = [
        (SearchOp::CatRev, 2, 2, 5, Constraint::None, 3),
        (SearchOp::CatStar, 2, 2, 5, Constraint::None, 3),
        (
            SearchOp::CatStar,
            2,
            2,
            4,
            Constraint::SecondFinalsAreInitial,
            2,
        ),
        (SearchOp::CatPhi, 2, 2, 5, Constraint::None, 2),
        (SearchOp::CatRev, 3, 1, 3, Constraint::SecondUniversal, 1),
    ];
    for (op, m, n, target, constraint, k) in cases {
        let budget = SearchBudget {
            alphabet_size: k,
            ..Default::default()
        };
        let report = search_witness(op, m, n, target, constraint, &budget).unwrap();
        let w = report
            .witness
            .clone()
            .unwrap_or_else(|| panic!("{op} {m}x{n} target {target}: {report}"));
        assert_eq!(oracle_size(op, &w), target, "{op} {m}x{n}");
        assert_eq!(w.a.minimize().state_count(), m as usize);
        assert_eq!(w.b.minimize().state_count(), n as usize);
        if constraint == Constraint::SecondFinalsAreInitial {
            assert_eq!(w.b.finals().collect::<Vec<_>>(), vec![w.b.initial()]);
        }
    }
}

#[test]
fn exhaustive_search_is_deterministic() {
    let budget = SearchBudget {
        alphabet_size: 2,
        ..Default::default()
    };
    let a = search_witness(SearchOp::CatRev, 2, 2, 5, Constraint::None, &budget).unwrap();
    let b = search_witness(SearchOp::CatRev, 2, 2, 5, Constraint::None, &budget).unwrap();
    assert_eq!(a.witness, b.witness);
    assert_eq!(a.distinct_pairs, b.distinct_pairs);
}

#[test]
fn random_search_finds_reversal_witness() {
    let budget = SearchBudget {
        alphabet_size: 3,
        max_candidates: 20_000,
        seed: 11,
        mode: SearchMode::Random,
    };
    let report = search_witness(SearchOp::CatRev, 2, 2, 5, Constraint::None, &budget).unwrap();
    let w = report
        .witness
        .expect("random sampling finds a 2x2 reversal witness");
    assert_eq!(oracle_size(SearchOp::CatRev, &w), 5);
}
