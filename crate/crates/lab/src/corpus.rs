//! Inputs for experiments: random ideals from a seeded generator, graph and
//! ideal files, and named standard graphs.

use std::path::Path;

use anyhow::{bail, Context};
use coverideal_core::{Graph, Monomial, MonomialIdeal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonzero monomial ideal in `2..=max_n` variables with at most `max_gens`
/// nonconstant generators and exponents at most `max_exp`.
pub fn random_monomial_ideal(
    rng: &mut impl Rng,
    max_n: usize,
    max_gens: usize,
    max_exp: u32,
) -> MonomialIdeal {
    let n = rng.gen_range(2..=max_n);
    let k = rng.gen_range(1..=max_gens);
    let gens: Vec<Monomial> = (0..k)
        .map(|_| loop {
            let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
            if e.iter().any(|&x| x > 0) {
                break Monomial::new(e);
            }
        })
        .collect();
    MonomialIdeal::new(n, gens).expect("shared ambient")
}

/// Squarefree ideal in `2..=max_n` variables with `1..=max_gens`
/// nonconstant generators.
pub fn random_squarefree_ideal(rng: &mut impl Rng, max_n: usize, max_gens: usize) -> MonomialIdeal {
    let n = rng.gen_range(2..=max_n);
    let k = rng.gen_range(1..=max_gens);
    let gens: Vec<Monomial> = (0..k)
        .map(|_| loop {
            let support: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
            if !support.is_empty() {
                break Monomial::squarefree(n, support);
            }
        })
        .collect();
    MonomialIdeal::new(n, gens).expect("shared ambient")
}

/// `c5`, `p3`, `k4`, `star4`, `e3` (edgeless), optionally prefixed `w` for
/// the whisker graph, e.g. `wc5`.
pub fn named_graph(name: &str) -> anyhow::Result<Graph> {
    if let Some(rest) = name.strip_prefix('w') {
        if !rest.is_empty() {
            return Ok(named_graph(rest)?.whisker()?);
        }
    }
    let split = name
        .find(|c: char| c.is_ascii_digit())
        .with_context(|| format!("unknown graph name '{name}'"))?;
    let (kind, num) = name.split_at(split);
    let n: usize = num
        .parse()
        .with_context(|| format!("bad size in '{name}'"))?;
    Ok(match kind {
        "c" => Graph::cycle(n)?,
        "p" => Graph::path(n)?,
        "k" => Graph::complete(n)?,
        "star" => Graph::star(n)?,
        "e" => Graph::edgeless(n)?,
        _ => bail!("unknown graph name '{name}'"),
    })
}

/// A graph from a JSON file (`{"n":…,"edges":…}`), an edge-list file, or a
/// standard name when no such file exists.
pub fn load_graph(spec: &str) -> anyhow::Result<Graph> {
    let path = Path::new(spec);
    if !path.exists() {
        return named_graph(spec).with_context(|| format!("no file or named graph '{spec}'"));
    }
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {spec}"))?;
    if text.trim_start().starts_with('{') {
        Ok(serde_json::from_str(&text).with_context(|| format!("parsing {spec}"))?)
    } else {
        Ok(Graph::from_edge_list(&text)?)
    }
}

/// An ideal from a JSON file or the text format (one generator per line).
pub fn load_ideal(path: &str, ambient: Option<usize>) -> anyhow::Result<MonomialIdeal> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    if text.trim_start().starts_with('{') {
        Ok(MonomialIdeal::from_json(&text)?)
    } else {
        Ok(MonomialIdeal::from_text(&text, ambient)?)
    }
}
