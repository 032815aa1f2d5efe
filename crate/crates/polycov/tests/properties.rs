//! Randomized invariants: permutation algebra, the stabilizer-chain order
//! against a brute-force closure oracle, and factored-integer arithmetic.

use polycov::{FactoredInteger, Perm, PermGroup};
use proptest::prelude::*;
use std::collections::HashSet;

fn arb_perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn arb_group(max_n: usize, max_gens: usize) -> impl Strategy<Value = (usize, Vec<Perm>)> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(arb_perm(n), 1..=max_gens).prop_map(move |gens| (n, gens))
    })
}

fn brute_force_elements(degree: usize, gens: &[Perm]) -> HashSet<Perm> {
    let mut seen: HashSet<Perm> = HashSet::new();
    let id = Perm::identity(degree);
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.compose(g).unwrap();
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

proptest! {
    #[test]
    fn inverse_cancels(p in (2usize..12).prop_flat_map(arb_perm)) {
        let n = p.degree();
        prop_assert_eq!(p.compose(&p.inverse()).unwrap(), Perm::identity(n));
        prop_assert_eq!(p.inverse().compose(&p).unwrap(), Perm::identity(n));
    }

    #[test]
    fn composition_is_associative(
        (a, b, c) in (2usize..10).prop_flat_map(|n| (arb_perm(n), arb_perm(n), arb_perm(n)))
    ) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn element_order_annihilates(p in (2usize..10).prop_flat_map(arb_perm)) {
        let k = p.order().unwrap();
        let mut acc = Perm::identity(p.degree());
        for _ in 0..k {
            acc = acc.compose(&p).unwrap();
        }
        prop_assert!(acc.is_identity());
        prop_assert!(k >= 1);
    }

    /// The chain's order (product of transversal lengths) agrees with the
    /// exhaustive enumeration oracle, and enumeration returns exactly the
    /// closure.
    #[test]
    fn chain_order_matches_brute_force((n, gens) in arb_group(7, 3)) {
        let g = PermGroup::new(n, gens).unwrap();
        let brute = brute_force_elements(n, g.generators());
        prop_assert_eq!(g.order().to_u64(), Some(brute.len() as u64));
        let enumerated: HashSet<Perm> = g.enumerate(100_000).unwrap().into_iter().collect();
        prop_assert_eq!(enumerated, brute);
    }

    /// Membership is closed under products.
    #[test]
    fn membership_is_multiplicative((n, gens) in arb_group(6, 2)) {
        let g = PermGroup::new(n, gens).unwrap();
        let els = g.enumerate(10_000).unwrap();
        for x in els.iter().take(8) {
            for y in els.iter().take(8) {
                prop_assert!(g.contains(&x.compose(y).unwrap()).unwrap());
            }
        }
    }

    /// Group order is independent of generator order and of redundant
    /// generators.
    #[test]
    fn order_is_presentation_independent((n, mut gens) in arb_group(7, 3)) {
        let g1 = PermGroup::new(n, gens.clone()).unwrap();
        gens.reverse();
        let g2 = PermGroup::new(n, gens.clone()).unwrap();
        let redundant = gens[0].compose(gens.last().unwrap()).unwrap();
        gens.push(redundant);
        let g3 = PermGroup::new(n, gens).unwrap();
        prop_assert_eq!(g1.order(), g2.order());
        prop_assert_eq!(g1.order(), g3.order());
    }

    #[test]
    fn factored_multiplication_matches_integers(a in 1u64..100_000, b in 1u64..100_000) {
        let fa = FactoredInteger::from_u64(a).unwrap();
        let fb = FactoredInteger::from_u64(b).unwrap();
        prop_assert_eq!(fa.mul(&fb).to_u64(), Some(a * b));
        prop_assert_eq!(fa.mul(&fb), fb.mul(&fa));
        prop_assert_eq!(fa.mul(&fb).checked_div(&fb), Some(fa.clone()));
    }

    #[test]
    fn factored_text_round_trips(a in 1u64..1_000_000) {
        let f = FactoredInteger::from_u64(a).unwrap();
        let back: FactoredInteger = f.to_string().parse().unwrap();
        prop_assert_eq!(back, f);
    }
}
