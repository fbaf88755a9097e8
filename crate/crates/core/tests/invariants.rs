//! Cross-checks between the oracles, the invariants and the criteria over the
//! builtin corpus and random permutation groups.

use num_bigint::BigUint;
use proptest::prelude::*;

use groupinv::arith::PrimeSet;
use groupinv::corpus::builtin_corpus;
use groupinv::metrics::class_size_frequency;
use groupinv::structure::{
    centralizer_of_indices, conjugacy_classes, hypercentre, lower_central_last,
};
use groupinv::{character_degrees, run_all_criteria, Group, GroupContext, Permutation};

fn is_nilpotent(g: &Group) -> bool {
    lower_central_last(g).unwrap().order() == 1
}

#[test]
fn class_sizes_match_centralizers() {
    for r in builtin_corpus() {
        let g = &r.group;
        let n = g.size().unwrap();
        let classes = conjugacy_classes(g).unwrap();
        assert_eq!(classes.sizes().iter().sum::<usize>(), n, "{}", r.name);
        assert_eq!(classes.size(classes.class_of(0)), 1);
        for k in 0..classes.len() {
            let rep = classes.representative(k);
            let c = centralizer_of_indices(g, &[rep]).unwrap();
            assert_eq!(n / c.order(), classes.size(k), "{} class {k}", r.name);
        }
    }
}

#[test]
fn hypercentre_matches_nilpotency() {
    for r in builtin_corpus() {
        let g = &r.group;
        let z = hypercentre(g).unwrap();
        if is_nilpotent(g) {
            assert_eq!(z.order(), g.size().unwrap(), "{}", r.name);
        }
        if ["S3", "A4", "S4", "A5", "Hol(C7)"].contains(&r.name.as_str()) {
            assert_eq!(z.order(), 1, "{}", r.name);
        }
    }
}

#[test]
fn extreme_prime_sets() {
    for r in builtin_corpus() {
        let ctx = GroupContext::new(&r.name, &r.group).unwrap();
        let all = ctx.primes().clone();
        assert_eq!(&ctx.u(&all), ctx.order());
        assert_eq!(&ctx.s(&all), ctx.order());
        assert_eq!(
            ctx.u(&PrimeSet::empty()),
            BigUint::from(ctx.degrees().linear_count())
        );
        assert_eq!(
            ctx.s(&PrimeSet::empty()),
            BigUint::from(ctx.centre().order())
        );
    }
}

#[test]
fn abelian_groups_have_only_linear_characters() {
    for r in builtin_corpus() {
        let classes = conjugacy_classes(&r.group).unwrap();
        let w = class_size_frequency(&classes);
        let abelian = w.entries() == [(1, r.group.size().unwrap() as u64)];
        let m = character_degrees(&r.group).unwrap();
        assert_eq!(abelian, m.entries().len() == 1, "{}", r.name);
    }
}

fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_groups_satisfy_every_criterion(a in perm(6), b in perm(6)) {
        let g = Group::new(6, vec![a, b]).unwrap();
        let ctx = GroupContext::new("random", &g).unwrap();
        let m = ctx.degrees();
        prop_assert_eq!(m.sum_of_squares(), g.size().unwrap() as u128);
        for v in run_all_criteria(&ctx, 2).unwrap() {
            prop_assert!(v.agrees || v.experimental, "{:?}", v);
        }
    }

    #[test]
    fn random_products_satisfy_every_criterion(a in perm(4), b in perm(4), c in perm(3)) {
        let left = Group::new(4, vec![a, b]).unwrap();
        let right = Group::new(3, vec![c]).unwrap();
        let g = left.direct_product(&right).unwrap();
        let ctx = GroupContext::new("product", &g).unwrap();
        for v in run_all_criteria(&ctx, 2).unwrap() {
            prop_assert!(v.agrees || v.experimental, "{:?}", v);
        }
    }
}
