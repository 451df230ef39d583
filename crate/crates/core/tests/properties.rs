use proptest::prelude::*;

use mlq::characterize::{discrete_matches_continuous, rotate_right};
use mlq::combinatorics::{
    binomial, brute_force_syt, count_syt, count_syt_skew, count_syt_two_row, multinomial, parse_ratio,
    ratio_string, Partition, SkewShape,
};
use mlq::engine::fast_word;
use mlq::{bully_project, bully_project_discrete, DiscreteMlq, Engine, ExactRatio, Placement, PlacementSpace, TypeVector};

fn partition(max_parts: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_parts).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn skew(max_cells: usize) -> impl Strategy<Value = SkewShape> {
    (partition(5, 6), prop::collection::vec(0..=6usize, 5))
        .prop_map(|(outer, cuts)| {
            // Inner shape: shrink each row, keeping it a partition inside outer.
            let mut inner = Vec::new();
            let mut prev = usize::MAX;
            for (i, &len) in outer.parts().iter().enumerate() {
                let v = cuts[i].min(len).min(prev);
                inner.push(v);
                prev = v;
            }
            SkewShape::new(outer, Partition::new(inner).unwrap()).unwrap()
        })
        .prop_filter("cell budget", move |s| s.cells() <= max_cells)
}

/// A type vector with `m_1 >= 1` and a placement of it.
fn placement(max_total: usize) -> impl Strategy<Value = (TypeVector, Placement)> {
    (1..=4usize)
        .prop_flat_map(|k| prop::collection::vec(0..=3usize, k))
        .prop_map(|mut m| {
            m[0] = m[0].max(1);
            m
        })
        .prop_filter("size", move |m| {
            let total: usize = m.iter().enumerate().map(|(i, &x)| x * (m.len() - i)).sum();
            total <= max_total
        })
        .prop_flat_map(|m| {
            let tv = TypeVector::new(m).unwrap();
            let values: Vec<u32> = (1..=tv.total() as u32).collect();
            (Just(tv), Just(values).prop_shuffle())
        })
        .prop_map(|(tv, values)| {
            let mut rows = Vec::new();
            let mut at = 0;
            for &size in tv.row_sizes() {
                let mut row = values[at..at + size].to_vec();
                row.sort_unstable();
                rows.push(row);
                at += size;
            }
            let p = Placement::with_type(&rows, &tv).unwrap();
            (tv, p)
        })
}

/// Discrete queue on at most ten sites with weakly increasing occupancy.
fn discrete() -> impl Strategy<Value = DiscreteMlq> {
    (1..=10usize, 1..=4usize)
        .prop_flat_map(|(sites, rows)| {
            (Just(sites), prop::collection::vec(prop::collection::vec(any::<bool>(), sites), rows))
        })
        .prop_filter_map("monotone occupancy", |(sites, bits)| {
            let mut rows: Vec<Vec<u32>> = bits
                .iter()
                .map(|b| (1..=sites as u32).filter(|&s| b[s as usize - 1]).collect())
                .collect();
            rows.sort_by_key(|r| r.len());
            if rows[0].is_empty() {
                return None;
            }
            DiscreteMlq::new(sites, &rows).ok()
        })
}

/// Discrete queue whose rows occupy pairwise distinct sites.
fn discrete_distinct() -> impl Strategy<Value = DiscreteMlq> {
    (prop::collection::vec(1..=3usize, 1..=4), 1..=10usize)
        .prop_filter_map("fits", |(mut sizes, sites)| {
            sizes.sort_unstable();
            (sizes.iter().sum::<usize>() <= sites).then_some((sizes, sites))
        })
        .prop_flat_map(|(sizes, sites)| {
            let all: Vec<u32> = (1..=sites as u32).collect();
            (Just(sizes), Just(sites), Just(all).prop_shuffle())
        })
        .prop_map(|(sizes, sites, order)| {
            let mut rows = Vec::new();
            let mut at = 0;
            for size in sizes {
                let mut row = order[at..at + size].to_vec();
                row.sort_unstable();
                rows.push(row);
                at += size;
            }
            DiscreteMlq::new(sites, &rows).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hook_length_matches_brute_force(lam in partition(5, 5).prop_filter("cell limit", |l| l.weight() <= 16)) {
        prop_assert_eq!(count_syt(&lam), brute_force_syt(&SkewShape::straight(lam.clone())).unwrap());
    }

    #[test]
    fn skew_determinant_matches_brute_force(s in skew(12)) {
        prop_assert_eq!(count_syt_skew(&s), brute_force_syt(&s).unwrap());
    }

    #[test]
    fn hook_recurrence(lam in partition(5, 5)) {
        // f_λ is the sum of f over shapes with one corner removed.
        prop_assume!(!lam.is_empty());
        let parts = lam.parts();
        let mut sum = mlq::ExactCount::from(0);
        for i in 0..parts.len() {
            if i + 1 == parts.len() || parts[i + 1] < parts[i] {
                let mut smaller = parts.to_vec();
                smaller[i] -= 1;
                sum += count_syt(&Partition::new(smaller).unwrap());
            }
        }
        prop_assert_eq!(count_syt(&lam), sum);
    }

    #[test]
    fn two_row_agrees_with_hooks(a in 0..12usize, b in 0..12usize) {
        let (a, b) = (a.max(b), a.min(b));
        prop_assert_eq!(count_syt_two_row(a, b).unwrap(), count_syt(&Partition::new(vec![a, b]).unwrap()));
    }

    #[test]
    fn pascal(n in 1..40i64, k in -2..42i64) {
        prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    }

    #[test]
    fn multinomial_is_product_of_binomials(parts in prop::collection::vec(0..6i64, 1..5)) {
        let n: i64 = parts.iter().sum();
        let mut left = n;
        let mut product = mlq::ExactCount::from(1);
        for &p in &parts {
            product *= binomial(left, p);
            left -= p;
        }
        prop_assert_eq!(multinomial(n, &parts), product);
    }

    #[test]
    fn ratio_strings_round_trip(num in -1000i64..1000, den in 1i64..1000) {
        let r = ExactRatio::new(num.into(), den.into());
        prop_assert_eq!(parse_ratio(&ratio_string(&r)), Some(r));
    }

    #[test]
    fn word_has_the_type((tv, p) in placement(16)) {
        let word = bully_project(&p).word;
        let n = tv.row_sizes().last().copied().unwrap();
        prop_assert_eq!(word.len(), n);
        for (i, &m) in tv.m().iter().enumerate() {
            let label = i as u32 + 1;
            prop_assert_eq!(word.iter().filter(|&&w| w == label).count(), m);
        }
        prop_assert_eq!(fast_word(&p), word);
    }

    #[test]
    fn text_format_round_trips((_tv, p) in placement(16)) {
        prop_assert_eq!(Placement::parse(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn shift_dichotomy_and_period((_tv, p) in placement(14)) {
        let word = bully_project(&p).word;
        let shifted = bully_project(&p.shift()).word;
        if p.max_in_last_row() {
            prop_assert_eq!(shifted, rotate_right(&word));
        } else {
            prop_assert_eq!(shifted, word);
        }
        let mut q = p.clone();
        for _ in 0..p.total() {
            q = q.shift();
        }
        prop_assert_eq!(q, p);
    }

    #[test]
    fn rank_unrank((tv, p) in placement(14)) {
        let space = PlacementSpace::new(&tv).unwrap();
        let rank = space.rank(&p).unwrap();
        prop_assert!(rank < space.len());
        prop_assert_eq!(space.unrank_placement(rank).unwrap(), p);
    }

    #[test]
    fn discrete_word_counts(q in discrete()) {
        let word = bully_project_discrete(&q).word;
        let rows = q.rows();
        prop_assert_eq!(word.len(), q.sites());
        let last = rows.last().unwrap().len();
        let empty = q.sites() - last;
        prop_assert_eq!(word.iter().filter(|&&w| w as usize == rows.len() + 1).count(), empty);
        let mut prev = 0;
        for (r, row) in rows.iter().enumerate() {
            let label = r as u32 + 1;
            prop_assert_eq!(word.iter().filter(|&&w| w == label).count(), row.len() - prev);
            prev = row.len();
        }
    }

    #[test]
    fn discrete_rotation_rotates_word(q in discrete()) {
        let l = q.sites() as u32;
        let rotated: Vec<Vec<u32>> = q.rows().iter().map(|r| r.iter().map(|&s| s % l + 1).collect()).collect();
        let r = DiscreteMlq::new(q.sites(), &rotated).unwrap();
        prop_assert_eq!(bully_project_discrete(&r).word, rotate_right(&bully_project_discrete(&q).word));
    }

    #[test]
    fn discrete_agrees_with_continuous(q in discrete_distinct()) {
        prop_assert_eq!(discrete_matches_continuous(&q), Some(true), "{}", q.to_text());
    }
}

#[test]
fn worker_count_does_not_change_word_distribution() {
    let tv = TypeVector::new(vec![1, 2, 1, 2]).unwrap();
    let one = Engine::new(1, 24).word_distribution(&tv).unwrap();
    for w in [2, 3, 8] {
        assert_eq!(Engine::new(w, 24).word_distribution(&tv).unwrap(), one);
    }
    assert_eq!(one.total, mlq::engine::placement_count(&tv));
}
