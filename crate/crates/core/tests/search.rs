mod common;

use scldpc_core::bounds::bound_g6_w2;
use scldpc_core::search::search;
use scldpc_core::{
    bound, conv_girth, exhaustive_min_lh, montecarlo_search, BoundQuery, Mode, Proposal,
    SearchSpec, SyndromeFormer,
};

/// Smallest width admitting girth `>= g`, by trying every matrix of every
/// width with no symmetry reduction.
fn naive_min(a: u32, c: u32, w: u32, g: u32, max_width: u32) -> Option<u32> {
    fn subsets(width: u32, w: u32) -> Vec<Vec<u32>> {
        (0u32..1 << width)
            .filter(|m| m.count_ones() == w)
            .map(|m| (0..width).filter(|b| m >> b & 1 == 1).collect())
            .collect()
    }
    for width in 1..=max_width {
        let pool = subsets(width, w);
        let total = pool.len().pow(a);
        for mut k in 0..total {
            let mut rows = Vec::with_capacity(a as usize);
            for _ in 0..a {
                rows.push(pool[k % pool.len()].clone());
                k /= pool.len();
            }
            if rows.iter().all(|r| r.last() != Some(&(width - 1))) {
                continue;
            }
            let hs = SyndromeFormer::tight(c, rows).unwrap();
            if conv_girth(&hs, g).unwrap().at_least(g) {
                return Some(width);
            }
        }
    }
    None
}

#[test]
fn exhaustive_matches_naive_enumeration() {
    for a in 1..=3 {
        for c in 1..=2 {
            for g in [6, 8] {
                let naive = naive_min(a, c, 2, g, 8);
                let mut spec = SearchSpec::regular(a, c, 2, g, Mode::Exhaustive);
                spec.lh_min = Some(1);
                spec.lh_max = Some(8);
                let out = exhaustive_min_lh(&spec).unwrap();
                assert_eq!(out.l_h(), naive, "a={a} c={c} g={g}");
            }
        }
    }
}

#[test]
fn exhaustive_is_independent_of_worker_count() {
    for (a, c, w, g) in [(4, 2, 2, 8), (4, 3, 3, 6), (6, 1, 2, 8)] {
        let mut spec = SearchSpec::regular(a, c, w, g, Mode::Exhaustive);
        let one = exhaustive_min_lh(&spec).unwrap();
        spec.workers = 3;
        let three = exhaustive_min_lh(&spec).unwrap();
        assert_eq!(one.best, three.best);
        assert_eq!(one.candidates, three.candidates);
    }
}

#[test]
fn random_search_is_reproducible() {
    for workers in [1, 3] {
        let mut spec = SearchSpec::regular(4, 2, 2, 8, Mode::Random);
        spec.lh_max = Some(24);
        spec.budget = 500;
        spec.seed = 9;
        spec.workers = workers;
        let first = montecarlo_search(&spec).unwrap();
        let second = montecarlo_search(&spec).unwrap();
        assert_eq!(first.best, second.best);
        assert!(first.candidates <= 500);
        let hs = first.best.as_ref().expect("something within budget");
        assert!(conv_girth(hs, 8).unwrap().at_least(8));
        assert!(first.respects_bound());
    }
}

#[test]
fn random_search_seeds_differ() {
    let run = |seed| {
        let mut spec = SearchSpec::regular(5, 2, 3, 8, Mode::Random);
        spec.proposal = Proposal::Greedy;
        spec.lh_max = Some(60);
        spec.budget = 50;
        spec.seed = seed;
        montecarlo_search(&spec).unwrap().best
    };
    assert!(run(1).is_some());
    assert_ne!(run(1), run(2));
}

#[test]
fn search_dispatches_on_mode() {
    let spec = SearchSpec::regular(3, 1, 2, 8, Mode::Exhaustive);
    assert_eq!(search(&spec).unwrap().l_h(), Some(6));
}

/// Girth-6 and girth-8 bounds never exceed the minimum found by searching
/// upward from the trivial width.
#[test]
fn bounds_are_lower_bounds() {
    let mut cells = Vec::new();
    for a in 2..=7 {
        for c in 1..=4u32 {
            if a > c {
                cells.extend([(a, c, 2, 6), (a, c, 2, 8)]);
                if a <= 5 {
                    cells.push((a, c, 3, 6));
                }
                if a <= 3 || (a, c) == (4, 3) {
                    cells.push((a, c, 3, 8));
                }
            }
        }
    }
    for (a, c, w, g) in cells {
        let r = bound(&BoundQuery::regular(a, c, w, g)).unwrap();
        let Some(b) = r.lh_lower else { continue };
        let mut spec = SearchSpec::regular(a, c, w, g, Mode::Exhaustive);
        spec.lh_min = Some(w.max(c + 1));
        let l = exhaustive_min_lh(&spec).unwrap().l_h().unwrap();
        assert!(l >= b, "a={a} c={c} w={w} g={g}: found {l} below bound {b}");
    }
}

#[test]
fn minimum_width_grows_with_girth() {
    for (a, c) in [(3, 1), (3, 2), (4, 2), (5, 3)] {
        let min = |g| {
            exhaustive_min_lh(&SearchSpec::regular(a, c, 2, g, Mode::Exhaustive))
                .unwrap()
                .l_h()
                .unwrap()
        };
        assert!(min(6) <= min(8), "a={a} c={c}");
        assert_eq!(min(6), bound_g6_w2(a, c));
    }
}

#[test]
fn results_use_normalized_rows() {
    let out = exhaustive_min_lh(&SearchSpec::regular(5, 2, 2, 8, Mode::Exhaustive)).unwrap();
    let hs = out.best.unwrap();
    assert!(hs.rows().iter().all(|r| r[0] < hs.c()));
    assert_eq!(hs.l_h(), hs.tight_width());
}

#[test]
fn search_rejects_bad_parameters() {
    assert!(exhaustive_min_lh(&SearchSpec::regular(3, 1, 2, 7, Mode::Exhaustive)).is_err());
    assert!(exhaustive_min_lh(&SearchSpec::regular(3, 1, 1, 6, Mode::Exhaustive)).is_err());
    let mut spec = SearchSpec::regular(3, 1, 2, 6, Mode::Random);
    spec.budget = 0;
    assert!(montecarlo_search(&spec).is_err());
}
