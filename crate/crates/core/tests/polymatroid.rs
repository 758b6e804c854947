mod common;

use common::{graph, permutation, squarefree_ideal};
use coverideal_core::polymatroid::{find_wp_order, has_linear_quotients, is_weakly_polymatroidal};
use coverideal_core::resolution::regularity;
use coverideal_core::{Graph, Monomial, MonomialIdeal, VariableOrder, WpOutcome, WpSearch};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn certificates_verify(i in squarefree_ideal(6, 6)) {
        if let WpSearch::Found { order, certificate } = find_wp_order(&i).unwrap() {
            prop_assert!(certificate.verify(&i));
            prop_assert_eq!(&certificate.order, &order);
            prop_assert!(is_weakly_polymatroidal(&i, &order).unwrap().is_wp());
        }
    }

    #[test]
    fn violations_are_genuine(i in squarefree_ideal(5, 6), perm in permutation(5)) {
        let n = i.ambient();
        let ranking: Vec<usize> = perm.into_iter().filter(|&v| v < n).collect();
        let order = VariableOrder::new(ranking).unwrap();
        if let WpOutcome::Violation(v) = is_weakly_polymatroidal(&i, &order).unwrap() {
            prop_assert!(i.is_generator(&v.u) && i.is_generator(&v.v));
            let q = v.q;
            prop_assert!(v.u.exponent(q) < v.v.exponent(q));
            for p in (order.rank_of(q) + 1..n).map(|r| order.variable_at(r)) {
                if v.u.exponent(p) > 0 {
                    let w = v.u.times_var(q).unwrap().div_var(p).unwrap();
                    prop_assert!(!i.is_generator(&w));
                }
            }
        }
    }

    #[test]
    fn wp_gives_linear_quotients(i in squarefree_ideal(6, 7)) {
        if find_wp_order(&i).unwrap().order().is_some() {
            prop_assert!(has_linear_quotients(&i).unwrap().is_some());
        }
    }

    #[test]
    fn equigenerated_wp_has_linear_resolution(i in squarefree_ideal(6, 7), d in 1u32..=3) {
        let j = i.component(d);
        prop_assume!(!j.is_zero());
        if find_wp_order(&j).unwrap().order().is_some() {
            prop_assert_eq!(regularity(&j).unwrap(), d as i64);
        }
    }

    #[test]
    fn wp_is_invariant_under_renaming(
        (i, perm) in squarefree_ideal(6, 6).prop_flat_map(|i| {
            let n = i.ambient();
            (Just(i), permutation(n))
        })
    ) {
        let renamed = i.rename(&perm).unwrap();
        match find_wp_order(&i).unwrap() {
            WpSearch::Found { order, .. } => {
                prop_assert!(is_weakly_polymatroidal(&renamed, &order.rename(&perm)).unwrap().is_wp());
            }
            WpSearch::Exhausted => prop_assert_eq!(find_wp_order(&renamed).unwrap(), WpSearch::Exhausted),
        }
    }

    #[test]
    fn cover_ideal_search_matches_relabelled_graph(g in graph(2, 6)) {
        prop_assume!(g.num_edges() > 0);
        let perm: Vec<usize> = (0..g.n()).rev().collect();
        let a = find_wp_order(&g.cover_ideal().unwrap()).unwrap().order().is_some();
        let b = find_wp_order(&g.relabel(&perm).cover_ideal().unwrap()).unwrap().order().is_some();
        prop_assert_eq!(a, b);
    }
}

fn five_cycle() -> MonomialIdeal {
    Graph::new(5, [(1, 4), (4, 2), (2, 3), (3, 5), (5, 1)])
        .unwrap()
        .cover_ideal()
        .unwrap()
}

#[test]
fn membership_golden_values() {
    let j = five_cycle();
    assert!(!j.contains(&Monomial::new(vec![0, 0, 1, 2, 0])).unwrap());
    let j2 = j.power(2).unwrap();
    assert!(!j2.contains(&Monomial::new(vec![1, 1, 2, 2, 0])).unwrap());
    assert!(j2.contains(&Monomial::new(vec![1, 1, 2, 1, 1])).unwrap());
    assert!(is_weakly_polymatroidal(&j2, &VariableOrder::identity(5))
        .unwrap()
        .is_wp());
}
