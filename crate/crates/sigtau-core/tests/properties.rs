use proptest::prelude::*;
use sigtau_core::oracle::sw_next;
use sigtau_core::seed::seeds_of;
use sigtau_core::{rank, unrank, BigUint, CyclicOrder, LengthTables, Permutation, Seed};

fn perm_of(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn sized_perm() -> impl Strategy<Value = Permutation> {
    (4usize..=40).prop_flat_map(perm_of)
}

/// Seeds of height at least 2: `(n, a, a-1, ...)`.
fn tall_seed() -> impl Strategy<Value = Seed> {
    (5usize..=40).prop_flat_map(|n| (Just(n), 1..n as u32)).prop_flat_map(|(n, a)| {
        let order = CyclicOrder::plus(n);
        let head = [n as u32, a, order.pred(a)];
        let rest: Vec<u32> = (1..n as u32).filter(|&v| v != a && v != order.pred(a) && v != order.succ(a)).collect();
        Just(rest).prop_shuffle().prop_map(move |rest| {
            Seed::new(head.iter().copied().chain(rest).collect()).unwrap()
        })
    })
}

fn bytes_rank(tables: &LengthTables, bytes: &[u8]) -> BigUint {
    BigUint::from_bytes_le(bytes) % tables.factorial()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn unrank_inverts_rank(p in sized_perm()) {
        let t = LengthTables::new(p.n()).unwrap();
        let r = rank(&t, &p).unwrap();
        prop_assert!(&r < t.factorial());
        prop_assert_eq!(unrank(&t, &r).unwrap(), p);
    }

    #[test]
    fn rank_inverts_unrank(n in 4usize..=60, bytes in proptest::collection::vec(any::<u8>(), 64)) {
        let t = LengthTables::new(n).unwrap();
        let r = bytes_rank(&t, &bytes);
        let p = unrank(&t, &r).unwrap();
        prop_assert_eq!(rank(&t, &p).unwrap(), r);
    }

    #[test]
    fn successor_rule_steps_rank_by_one(p in perm_of(8)) {
        let t = LengthTables::new(8).unwrap();
        let r = rank(&t, &p).unwrap();
        prop_assume!(&r + 1u32 < *t.factorial());
        let q = p.apply(sw_next(&p));
        prop_assert_eq!(rank(&t, &q).unwrap(), r + 1u32);
    }

    #[test]
    fn every_permutation_has_a_seed(p in sized_perm()) {
        let seeds = seeds_of(&p, CyclicOrder::plus(p.n())).unwrap();
        prop_assert!(!seeds.is_empty() && seeds.len() <= 2);
        for s in &seeds {
            prop_assert!(s.contains(&p));
        }
        if seeds.len() == 2 {
            prop_assert_eq!(&seeds[0], &seeds[1].parent());
        }
    }

    #[test]
    fn sons_know_their_parent(s in tall_seed(), i in 1usize..40) {
        let n = s.n();
        let i = 1 + (i - 1) % (n - 3);
        let son = s.son(i).unwrap();
        prop_assert_eq!(son.parent(), s.clone());
        prop_assert_eq!(son.ord(), i);
        prop_assert_eq!(son.missing(), CyclicOrder::plus(n).succ(son.second()));
    }

    #[test]
    fn anchors_hang_off_their_hub(p in sized_perm()) {
        let n = p.n();
        let s: Seed = seeds_of(&p, CyclicOrder::plus(n)).unwrap().remove(0);
        prop_assume!(!s.is_hub());
        let anchor = s.anchor().unwrap();
        prop_assert!(!anchor.is_hub());
        prop_assert!(anchor.parent().is_hub());
        prop_assert_eq!(anchor.parent(), s.hub().unwrap());
        let mut cur = s.clone();
        for _ in 1..s.level() {
            cur = cur.parent();
        }
        prop_assert_eq!(cur, anchor);
    }
}
