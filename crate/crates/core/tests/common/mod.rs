#![allow(dead_code)]

use coverideal_core::{CliquePartition, Graph, Monomial, MonomialIdeal};
use proptest::prelude::*;

pub fn ideal_in(n: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_gens)
        .prop_map(move |gens| MonomialIdeal::from_exponents(n, gens).unwrap())
}

pub fn ideal(max_n: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n).prop_flat_map(move |n| ideal_in(n, max_gens, max_exp))
}

/// Two ideals in the same ring.
pub fn ideal_pair(
    max_n: usize,
    max_gens: usize,
    max_exp: u32,
) -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1..=max_n).prop_flat_map(move |n| {
        (
            ideal_in(n, max_gens, max_exp),
            ideal_in(n, max_gens, max_exp),
        )
    })
}

/// Nonzero ideal without the unit among its generators.
pub fn proper_ideal(
    max_n: usize,
    max_gens: usize,
    max_exp: u32,
) -> impl Strategy<Value = MonomialIdeal> {
    ideal(max_n, max_gens, max_exp).prop_filter("proper", |i| !i.is_unit())
}

pub fn squarefree_ideal(max_n: usize, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    ideal(max_n, max_gens, 1)
}

pub fn graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e);
            Graph::new(n, edges).unwrap()
        })
    })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Greedy clique partition in vertex order.
pub fn greedy_cliques(g: &Graph) -> CliquePartition {
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for v in 1..=g.n() {
        match parts
            .iter_mut()
            .find(|p| p.iter().all(|&u| g.adjacent(u, v)))
        {
            Some(p) => p.push(v),
            None => parts.push(vec![v]),
        }
    }
    CliquePartition::new(parts)
}

/// Every exponent vector in `[0, bound]^n`.
pub fn box_monomials(n: usize, bound: u32) -> Vec<Monomial> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|e: Vec<u32>| {
                (0..=bound).map(move |k| {
                    let mut e = e.clone();
                    e.push(k);
                    e
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

pub fn divides(a: &Monomial, b: &Monomial) -> bool {
    a.exponents().iter().zip(b.exponents()).all(|(x, y)| x <= y)
}

/// Membership straight from a generating list.
pub fn member(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter().any(|g| divides(g, m))
}
