//! Randomised structural properties, sampled over the catalogs of small
//! braces and over random relabelings of their tables.

use proptest::prelude::*;
use skewbrace::io::{format_brace, parse_brace};
use skewbrace::{BraceCatalog, Elem, ElementSet, SkewBrace};
use std::sync::OnceLock;

fn catalogs() -> &'static [BraceCatalog] {
    static CATALOGS: OnceLock<Vec<BraceCatalog>> = OnceLock::new();
    CATALOGS.get_or_init(|| (1..=8).map(|n| BraceCatalog::build(n).unwrap()).collect())
}

/// Strategy: one brace drawn from the order 1..=8 catalogs.
fn any_brace() -> impl Strategy<Value = &'static SkewBrace> {
    (0..catalogs().len()).prop_flat_map(|c| {
        let cat = &catalogs()[c];
        (0..cat.len()).prop_map(move |i| cat.get(i).unwrap())
    })
}

/// Applies a relabeling permutation to both tables of a brace.
fn permute_tables(b: &SkewBrace, sigma: &[Elem]) -> (Vec<Vec<Elem>>, Vec<Vec<Elem>>) {
    let n = b.order();
    let mut inverse = vec![0 as Elem; n];
    for (x, &sx) in sigma.iter().enumerate() {
        inverse[sx as usize] = x as Elem;
    }
    let image = |op: &dyn Fn(Elem, Elem) -> Elem| {
        (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| sigma[op(inverse[x], inverse[y]) as usize])
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
    };
    (image(&|x, y| b.add_op(x, y)), image(&|x, y| b.mul_op(x, y)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn opposite_is_an_involution(b in any_brace()) {
        prop_assert_eq!(&b.opposite().opposite(), b);
    }

    #[test]
    fn text_format_round_trips(b in any_brace()) {
        let text = format_brace(b);
        let back = parse_brace(&text).unwrap();
        prop_assert_eq!(&back, b);
        prop_assert_eq!(format_brace(&back), text);
    }

    #[test]
    fn canonical_key_is_relabeling_invariant(
        b in any_brace(),
        seed in any::<u64>(),
    ) {
        // Fisher-Yates from the seed; the identity may move, validation
        // renormalises it back to 0.
        let n = b.order();
        let mut sigma: Vec<Elem> = (0..n as Elem).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            sigma.swap(i, j);
        }
        let (add, mul) = permute_tables(b, &sigma);
        let relabeled = SkewBrace::validate(&add, &mul).unwrap();
        prop_assert!(relabeled.is_isomorphic_to(b));
        prop_assert_eq!(relabeled.canonical_key(), b.canonical_key());
    }

    #[test]
    fn star_left_distributes_over_addition(b in any_brace(), seed in any::<u32>()) {
        let n = b.order() as Elem;
        let a = (seed % n as u32) as Elem;
        let x = (seed / 7 % n as u32) as Elem;
        let y = (seed / 49 % n as u32) as Elem;
        // a * (x + y) = (a * x) + x + (a * y) - x
        let lhs = b.star(a, b.add_op(x, y));
        let rhs = b.add_op(
            b.star(a, x),
            b.add_op(x, b.add_op(b.star(a, y), b.add_inv(x))),
        );
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn distinguished_sets_are_the_right_kind_of_ideal(b in any_brace()) {
        prop_assert!(b.is_left_ideal(&b.fix_set()));
        // The kernel of the lambda action is a trivial subbrace, normal on
        // the multiplicative side (it need not be lambda-invariant).
        let kernel = b.lambda_kernel();
        prop_assert!(b.is_trivial_subbrace(&kernel));
        prop_assert!(b.mul().is_normal_subgroup(&kernel).unwrap());
        prop_assert!(b.is_ideal(&b.socle()));
        prop_assert!(b.is_ideal(&b.centre()));
        prop_assert!(b.is_ideal(&b.commutator_ideal()));
        // Inclusion chain: centre inside socle inside kernel.
        prop_assert!(b.centre().is_subset_of(&b.socle()));
        prop_assert!(b.socle().is_subset_of(&kernel));
    }

    #[test]
    fn quotient_by_an_ideal_divides_the_order(b in any_brace()) {
        let ci = b.commutator_ideal();
        let q = b.quotient(&ci).unwrap();
        prop_assert_eq!(q.order() * ci.len(), b.order());
        prop_assert!(q.is_abelian_brace());
    }

    #[test]
    fn closures_really_are_closures(b in any_brace(), seed in any::<u32>()) {
        let n = b.order();
        let x = (seed % n as u32) as Elem;
        let seedset = ElementSet::singleton(x, n);
        let strong = b.strong_left_ideal_closure(&seedset);
        let ideal = b.ideal_closure(&seedset);
        prop_assert!(b.is_strong_left_ideal(&strong));
        prop_assert!(b.is_ideal(&ideal));
        prop_assert!(strong.is_subset_of(&ideal));
        prop_assert!(seedset.is_subset_of(&strong));
    }
}
