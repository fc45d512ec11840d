use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use nestcount::formulas::{catalan_recurrence, CoefficientTable};
use nestcount::partition::{count_noncrossing, count_nonnesting, label_distribution};
use nestcount::record::{Meta, SequenceRecord};
use nestcount::series::{u_engine, u_series, x_engine, x_engine_with_bound};
use nestcount::{gtree, ArcDiagram, Engine, SetPartition};

/// Turns arbitrary choices into a restricted-growth string.
fn partition_from_choices(choices: &[u16]) -> SetPartition {
    let mut rgs = Vec::with_capacity(choices.len());
    let mut top = 0u16;
    for &c in choices {
        let r = c % (top + 1) + 1;
        top = top.max(r);
        rgs.push(r);
    }
    SetPartition::from_rgs(rgs).unwrap()
}

fn partition(max_n: usize) -> impl Strategy<Value = SetPartition> {
    prop::collection::vec(any::<u16>(), 0..=max_n).prop_map(|c| partition_from_choices(&c))
}

/// Largest subset of arcs satisfying `family` pairwise, by brute force.
fn brute_force(
    arcs: &[(usize, usize)],
    related: impl Fn((usize, usize), (usize, usize)) -> bool,
) -> usize {
    let mut best = 0;
    for mask in 0u32..(1 << arcs.len()) {
        let chosen: Vec<_> = (0..arcs.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| arcs[i])
            .collect();
        let ok = chosen.iter().enumerate().all(|(i, &a)| {
            chosen[i + 1..]
                .iter()
                .all(|&b| related(a, b) || related(b, a))
        });
        if ok {
            best = best.max(chosen.len());
        }
    }
    best
}

fn arcs_of(p: &SetPartition) -> Vec<(usize, usize)> {
    p.blocks()
        .iter()
        .flat_map(|b| b.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn nesting_and_crossing_match_brute_force(p in partition(9)) {
        let arcs = arcs_of(&p);
        let nest = brute_force(&arcs, |(i1, j1), (i2, j2)| i1 < i2 && j2 < j1);
        let cross = brute_force(&arcs, |(i1, j1), (i2, j2)| i1 < i2 && i2 < j1 && j1 < j2);
        prop_assert_eq!(p.max_nesting(), nest);
        prop_assert_eq!(p.max_crossing(), cross);
        let diagram = ArcDiagram::new(p.size(), arcs);
        prop_assert_eq!(diagram.max_nesting(), nest);
    }

    #[test]
    fn display_round_trip(p in partition(12)) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<SetPartition>().unwrap(), p);
    }

    #[test]
    fn labels_are_nondecreasing_and_bounded(p in partition(12), m in 1usize..=5) {
        let label = p.label(m);
        prop_assert_eq!(label.m(), m);
        let entries = label.as_slice();
        prop_assert!(entries.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(entries.iter().all(|&a| a >= 1 && a as usize <= p.block_count() + 1));
        if p.max_nesting() < m {
            prop_assert_eq!(label.last() as usize, p.block_count() + 1);
        }
    }

    #[test]
    fn children_follow_the_label_rule(p in partition(10), m in 1usize..=4) {
        prop_assume!(p.max_nesting() <= m);
        let label = p.label(m);
        let kids = p.children(m).unwrap();
        prop_assert_eq!(kids.len(), label.last() as usize);
        for (kid, want) in kids.iter().zip(label.children()) {
            prop_assert!(kid.max_nesting() <= m);
            prop_assert_eq!(kid.label(m), want);
        }
        for l in label.last() as usize..=p.block_count() {
            prop_assert!(p.joined_to_block(l).unwrap().max_nesting() > m);
        }
    }

    #[test]
    fn gtree_matches_oracle_labels(n in 0usize..=9, m in 1usize..=3) {
        let tree = gtree::level(m, n).sorted();
        let oracle = label_distribution(n, m).unwrap();
        prop_assert_eq!(tree, oracle);
    }

    #[test]
    fn children_count_identity(n in 0usize..=14, m in 1usize..=5) {
        let level = gtree::level(m, n);
        prop_assert_eq!(level.next_level().total(), level.children_total());
    }

    #[test]
    fn gtree_independent_of_thread_count(n in 0usize..=12, m in 1usize..=4, threads in 1usize..=6) {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        let split = pool.install(|| gtree::level(m, n).sorted());
        prop_assert_eq!(split, gtree::level(m, n).sorted());
    }

    #[test]
    fn u_series_coefficients_are_label_counts(n in 0usize..=9, m in 1usize..=4) {
        let series = u_series(m, n).unwrap();
        let order = series.order(n);
        let level = gtree::level(m, n);
        prop_assert_eq!(order.terms().count(), level.len());
        for (label, count) in level.sorted() {
            let exps: Vec<i16> = label.as_slice().iter().map(|&a| a as i16).collect();
            prop_assert_eq!(order.coeff(&exps), BigInt::from(count));
        }
    }

    #[test]
    fn engines_agree(m in 1usize..=4, n in 0usize..=10) {
        let tree = gtree::sequence(m, n);
        prop_assert_eq!(u_engine(m, n).unwrap(), tree.clone());
        prop_assert_eq!(x_engine(m, n).unwrap(), tree);
    }

    #[test]
    fn larger_weight_bounds_change_nothing(m in 1usize..=3, n in 0usize..=8, extra in 0usize..=6) {
        prop_assert_eq!(x_engine_with_bound(m, n, n + extra).unwrap(), x_engine(m, n).unwrap());
    }

    #[test]
    fn nonnesting_and_noncrossing_equinumerous(n in 0usize..=9, m in 1usize..=4) {
        prop_assert_eq!(count_nonnesting(n, m).unwrap(), count_noncrossing(n, m).unwrap());
    }

    #[test]
    fn record_json_round_trip(
        m in 1usize..=9,
        tail in prop::collection::vec(any::<u128>(), 0..20),
        wall in prop::option::of(0.0f64..1e4),
    ) {
        let counts: Vec<BigUint> = std::iter::once(1).chain(tail).map(BigUint::from).collect();
        let meta = Meta { wall_time_secs: wall, ..Meta::current() };
        let record = SequenceRecord::new(m, Engine::Xseries, &counts, meta);
        let parsed = SequenceRecord::from_json(&record.to_json()).unwrap();
        prop_assert_eq!(parsed.counts().unwrap(), counts);
        prop_assert_eq!(parsed, record);
    }
}

#[test]
fn catalan_recurrence_matches_gtree() {
    let rec: Vec<BigUint> = catalan_recurrence(25)
        .into_iter()
        .map(|c| c.to_biguint().unwrap())
        .collect();
    assert_eq!(rec, gtree::sequence(1, 25));
}

#[test]
fn coefficient_table_invariant_to_20() {
    CoefficientTable::from_gtree(2, 20)
        .check_invariants()
        .unwrap();
}
