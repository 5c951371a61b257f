use multilayer_order::pattern::{join, meet, parse_pattern, ConcatPattern, Sector};
use proptest::prelude::*;

/// A random pattern: a shuffled list of `k` layers cut at random slots.
fn pattern(k: usize) -> impl Strategy<Value = ConcatPattern> {
    (Just((1..=k as u8).collect::<Vec<u8>>()).prop_shuffle(), 0u32..1 << (k - 1))
        .prop_map(|(order, mask)| Sector::new(order).unwrap().pattern(mask))
}

fn sized_pair() -> impl Strategy<Value = (ConcatPattern, ConcatPattern)> {
    (2usize..=9).prop_flat_map(|k| (pattern(k), pattern(k)))
}

proptest! {
    #[test]
    fn print_parse_round_trip(p in (1usize..=12).prop_flat_map(pattern)) {
        let text = p.to_string();
        prop_assert_eq!(parse_pattern(&text, Some(p.k())).unwrap(), p);
    }

    #[test]
    fn merge_maps_are_closures(p in (2usize..=10).prop_flat_map(pattern), j in 1usize..10) {
        let j = 1 + (j - 1) % (p.k() - 1);
        let q = p.f_merge(j).unwrap();
        prop_assert!(p.leq(&q).unwrap());
        prop_assert_eq!(q.f_merge(j).unwrap(), q.clone());
        prop_assert!(q.level() == p.level() || q.level() == p.level() + 1);
    }

    #[test]
    fn merge_maps_are_monotone((x, y) in sized_pair(), j in 1usize..9) {
        let j = 1 + (j - 1) % (x.k() - 1);
        if x.leq(&y).unwrap() {
            prop_assert!(x.f_merge(j).unwrap().leq(&y.f_merge(j).unwrap()).unwrap());
        }
    }

    #[test]
    fn meet_and_join_are_bounds((x, y) in sized_pair()) {
        if let Some(m) = meet(&x, &y).unwrap() {
            prop_assert!(m.leq(&x).unwrap() && m.leq(&y).unwrap());
            for z in x.refinements().into_iter().filter(|z| z.leq(&y).unwrap()) {
                prop_assert!(z.leq(&m).unwrap());
            }
        }
        if let Some(u) = join(&x, &y).unwrap() {
            prop_assert!(x.leq(&u).unwrap() && y.leq(&u).unwrap());
            for z in x.coarsenings().into_iter().filter(|z| y.leq(z).unwrap()) {
                prop_assert!(u.leq(&z).unwrap());
            }
        }
    }

    #[test]
    fn join_always_exists((x, y) in sized_pair()) {
        prop_assert!(join(&x, &y).unwrap().is_some());
    }
}
