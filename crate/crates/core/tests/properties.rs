use proptest::prelude::*;
use qschubert::{dmin, lr_coefficient, quantum_product, rim_reduce, BoxShape, BoxedPartition, Partition, RimReduction};

fn shape(max_n: usize) -> impl Strategy<Value = BoxShape> {
    (2..=max_n).prop_flat_map(|n| (1..n).prop_map(move |k| BoxShape::new(k, n).unwrap()))
}

fn boxed(s: BoxShape) -> impl Strategy<Value = BoxedPartition> {
    prop::collection::vec(0..=s.width(), s.k()).prop_map(move |mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        s.boxed(Partition::new(v).unwrap()).unwrap()
    })
}

fn shape_and_pair(max_n: usize) -> impl Strategy<Value = (BoxShape, BoxedPartition, BoxedPartition)> {
    shape(max_n).prop_flat_map(|s| (Just(s), boxed(s), boxed(s)))
}

fn partition(max_rows: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dual_and_path_round_trip((s, l, _) in shape_and_pair(14)) {
        prop_assert_eq!(l.dual().dual(), l.clone());
        prop_assert_eq!(l.weight() + l.dual().weight(), s.cells());
        prop_assert_eq!(l.to_path().to_partition(), l.clone());
        let ranks = l.rank_vector();
        prop_assert_eq!(ranks.len(), s.n());
        prop_assert_eq!(*ranks.last().unwrap(), s.k());
    }

    #[test]
    fn rim_reduction_conserves_weight(s in shape(12), rho in partition(11, 30)) {
        prop_assume!(rho.len() <= s.k());
        match rim_reduce(&rho, s).unwrap() {
            RimReduction::Zero => {}
            RimReduction::Reduced { nu, d, sign } => {
                prop_assert_eq!(rho.weight(), nu.weight() + d * s.n());
                prop_assert!(sign == 1 || sign == -1);
            }
        }
    }

    #[test]
    fn lr_is_symmetric(a in partition(4, 5), b in partition(4, 5), c in partition(6, 8)) {
        prop_assert_eq!(lr_coefficient(&a, &b, &c), lr_coefficient(&b, &a, &c));
    }

    #[test]
    fn products_commute_and_grade((s, l, m) in shape_and_pair(11)) {
        let p = quantum_product(s, &l, &m).unwrap();
        prop_assert_eq!(&p, &quantum_product(s, &m, &l).unwrap());
        prop_assert!(p.is_nonnegative() && !p.is_zero());
        for (d, nu, _) in p.terms() {
            prop_assert_eq!(nu.weight() + d * s.n(), l.weight() + m.weight());
        }
        prop_assert_eq!(p.degrees().first().copied(), Some(dmin(s, &l, &m).unwrap()));
        prop_assert_eq!(dmin(s, &l, &m).unwrap(), dmin(s, &m, &l).unwrap());
    }
}
