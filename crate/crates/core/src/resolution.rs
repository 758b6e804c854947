//! Multigraded Betti numbers of monomial ideals over ℚ.
//!
//! `β_{i,a}(I)` is the rank of `H̃_{i-1}` of the upper Koszul complex
//! `K^a(I) = {b ⊆ supp(a) squarefree : x^{a-b} ∈ I}`, and it vanishes unless
//! `a` lies in the lcm lattice of the minimal generators. Everything derived
//! here (regularity, projective dimension, linearity tests) reads off the
//! resulting table.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg;
use crate::monomial::{for_each_exponent_of_degree, Monomial, MonomialIdeal};
use crate::Limits;

/// lcms of nonempty sets of minimal generators, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcmLattice {
    pub elements: Vec<Monomial>,
}

impl LcmLattice {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.elements.binary_search(m).is_ok()
    }
}

pub fn lcm_lattice(ideal: &MonomialIdeal) -> Result<LcmLattice> {
    lcm_lattice_with(ideal, &Limits::default())
}

/// Closure of the generators under lcm, computed to a fixed point.
pub fn lcm_lattice_with(ideal: &MonomialIdeal, limits: &Limits) -> Result<LcmLattice> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let gens = ideal.generators();
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = gens.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let l = x.lcm_unchecked(g);
                if !seen.contains(&l) {
                    seen.insert(l.clone());
                    next.push(l);
                }
            }
            if seen.len() > limits.lattice {
                return Err(Error::CapExceeded {
                    what: "lcm lattice size",
                    limit: limits.lattice,
                    actual: seen.len(),
                });
            }
        }
        frontier = next;
    }
    let mut elements: Vec<Monomial> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(LcmLattice { elements })
}

/// The upper Koszul complex at one multidegree, as a face bitmap over the
/// subsets of the support.
#[derive(Clone, Debug)]
pub struct KoszulComplex {
    multidegree: Monomial,
    support: Vec<usize>,
    faces: Vec<bool>,
}

impl KoszulComplex {
    /// `member` decides ideal membership of an exponent vector.
    pub fn new(
        multidegree: &Monomial,
        member: &dyn Fn(&[u32]) -> bool,
        limits: &Limits,
    ) -> Result<Self> {
        let support: Vec<usize> = multidegree.support().collect();
        let k = support.len();
        if k >= usize::BITS as usize - 1 || (1usize << k) > limits.koszul_faces {
            return Err(Error::CapExceeded {
                what: "Koszul complex faces",
                limit: limits.koszul_faces,
                actual: 1usize.checked_shl(k as u32).unwrap_or(usize::MAX),
            });
        }
        let mut exps = multidegree.exponents().to_vec();
        let mut faces = vec![false; 1 << k];
        for (b, face) in faces.iter_mut().enumerate() {
            for (j, &var) in support.iter().enumerate() {
                if b & (1 << j) != 0 {
                    exps[var] -= 1;
                }
            }
            *face = member(&exps);
            for (j, &var) in support.iter().enumerate() {
                if b & (1 << j) != 0 {
                    exps[var] += 1;
                }
            }
        }
        Ok(KoszulComplex {
            multidegree: multidegree.clone(),
            support,
            faces,
        })
    }

    pub fn multidegree(&self) -> &Monomial {
        &self.multidegree
    }

    /// Is `b` (a subset of the support, as 0-based variable indices) a face?
    pub fn contains(&self, b: &[usize]) -> bool {
        let mut mask = 0usize;
        for v in b {
            match self.support.iter().position(|s| s == v) {
                Some(j) => mask |= 1 << j,
                None => return false,
            }
        }
        self.faces[mask]
    }

    /// Number of faces of each size `0..=k` (size 0 is the empty face).
    pub fn face_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.support.len() + 1];
        for (b, &f) in self.faces.iter().enumerate() {
            if f {
                counts[b.count_ones() as usize] += 1;
            }
        }
        counts
    }

    /// A cone over some vertex (including the void complex) is acyclic.
    fn is_cone(&self) -> bool {
        (0..self.support.len()).any(|j| {
            let bit = 1usize << j;
            self.faces
                .iter()
                .enumerate()
                .all(|(b, &f)| !f || b & bit != 0 || self.faces[b | bit])
        })
    }

    /// Ranks of `H̃_{d}` for `d = -1..k-1`, as a vector indexed by `d + 1`.
    pub fn reduced_homology(&self) -> Vec<usize> {
        let k = self.support.len();
        if self.is_cone() {
            return vec![0; k + 1];
        }
        let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); k + 1];
        let mut index = vec![usize::MAX; self.faces.len()];
        for (b, &f) in self.faces.iter().enumerate() {
            if f {
                let s = b.count_ones() as usize;
                index[b] = by_size[s].len();
                by_size[s].push(b);
            }
        }
        // ranks[s] = rank of the boundary from faces of size s to size s-1
        let mut ranks = vec![0usize; k + 2];
        for s in 1..=k {
            if by_size[s].is_empty() || by_size[s - 1].is_empty() {
                continue;
            }
            let width = by_size[s - 1].len();
            let rows: Vec<Vec<i64>> = by_size[s]
                .iter()
                .map(|&b| {
                    let mut row = vec![0i64; width];
                    let mut sign = 1i64;
                    for j in 0..k {
                        if b & (1 << j) != 0 {
                            let facet = b & !(1 << j);
                            // faces are downward closed, so the facet is present
                            row[index[facet]] = sign;
                            sign = -sign;
                        }
                    }
                    row
                })
                .collect();
            ranks[s] = linalg::rank(&rows);
        }
        (0..=k)
            .map(|s| by_size[s].len() - ranks[s] - ranks[s + 1])
            .collect()
    }
}

/// Multigraded Betti numbers: `(i, a) ↦ β_{i,a}`, zero entries omitted.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Monomial), u64>,
}

#[derive(Serialize, Deserialize)]
struct BettiEntryJson {
    i: usize,
    multidegree: Vec<u32>,
    rank: u64,
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    entries: Vec<BettiEntryJson>,
}

impl BettiTable {
    pub fn entries(&self) -> impl Iterator<Item = (usize, &Monomial, u64)> {
        self.entries.iter().map(|((i, a), &r)| (*i, a, r))
    }

    pub fn get(&self, i: usize, a: &Monomial) -> u64 {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(i, j) ↦ Σ_{|a| = j} β_{i,a}`.
    pub fn coarse(&self) -> BTreeMap<(usize, u32), u64> {
        let mut out = BTreeMap::new();
        for ((i, a), r) in &self.entries {
            *out.entry((*i, a.degree())).or_insert(0) += r;
        }
        out
    }

    /// Total Betti numbers `β_0, β_1, …`.
    pub fn totals(&self) -> Vec<u64> {
        let len = self.entries.keys().map(|(i, _)| i + 1).max().unwrap_or(0);
        let mut out = vec![0; len];
        for ((i, _), r) in &self.entries {
            out[*i] += r;
        }
        out
    }

    /// `max{|a| - i : β_{i,a} ≠ 0}`.
    pub fn regularity(&self) -> Option<i64> {
        self.entries
            .keys()
            .map(|(i, a)| a.degree() as i64 - *i as i64)
            .max()
    }

    /// `max{i : β_{i,a} ≠ 0}`.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// Table after renaming variable `v` to `perm[v]`.
    pub fn rename(&self, perm: &[usize]) -> BettiTable {
        BettiTable {
            entries: self
                .entries
                .iter()
                .map(|((i, a), r)| ((*i, a.rename(perm)), *r))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let json = BettiJson {
            entries: self
                .entries
                .iter()
                .map(|((i, a), r)| BettiEntryJson {
                    i: *i,
                    multidegree: a.exponents().to_vec(),
                    rank: *r,
                })
                .collect(),
        };
        serde_json::to_string(&json).expect("Betti table serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<BettiTable> {
        let json: BettiJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut entries = BTreeMap::new();
        for e in json.entries {
            if e.rank > 0 {
                entries.insert((e.i, Monomial::new(e.multidegree)), e.rank);
            }
        }
        Ok(BettiTable { entries })
    }

    /// Coarse table with rows `j - i` and columns `i`, zeros shown as `.`.
    pub fn to_text(&self) -> String {
        let coarse = self.coarse();
        let Some(pd) = self.projective_dimension() else {
            return "zero\n".to_string();
        };
        let rows: Vec<i64> = {
            let mut r: Vec<i64> = coarse.keys().map(|(i, j)| *j as i64 - *i as i64).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let (lo, hi) = (rows[0], *rows.last().expect("nonempty table"));
        let totals = self.totals();
        let width = totals
            .iter()
            .map(|t| t.to_string().len())
            .max()
            .unwrap_or(1)
            .max(pd.to_string().len());
        let mut out = String::new();
        let _ = write!(out, "{:>7}", "");
        for i in 0..=pd {
            let _ = write!(out, " {i:>width$}");
        }
        out.push('\n');
        let _ = write!(out, "{:>7}", "total:");
        for t in &totals {
            let _ = write!(out, " {t:>width$}");
        }
        out.push('\n');
        for r in lo..=hi {
            let _ = write!(out, "{:>7}", format!("{r}:"));
            for i in 0..=pd {
                let j = r + i as i64;
                match u32::try_from(j).ok().and_then(|j| coarse.get(&(i, j))) {
                    Some(v) => {
                        let _ = write!(out, " {v:>width$}");
                    }
                    None => {
                        let _ = write!(out, " {:>width$}", ".");
                    }
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Betti numbers at the given candidate multidegrees of the ideal of
/// multiples of `gens` having degree at least `min_degree`.
fn betti_at(
    candidates: Vec<Monomial>,
    gens: &[Monomial],
    min_degree: u32,
    limits: &Limits,
) -> Result<BettiTable> {
    let per_degree: Vec<Result<Vec<(usize, Monomial, u64)>>> = candidates
        .par_iter()
        .map(|a| {
            let below: Vec<&Monomial> = gens.iter().filter(|g| g.divides_unchecked(a)).collect();
            let member = |e: &[u32]| {
                e.iter().sum::<u32>() >= min_degree && below.iter().any(|g| g.divides_exps(e))
            };
            let complex = KoszulComplex::new(a, &member, limits)?;
            Ok(complex
                .reduced_homology()
                .into_iter()
                .enumerate()
                .filter(|&(_, r)| r > 0)
                .map(|(i, r)| (i, a.clone(), r as u64))
                .collect())
        })
        .collect();
    let mut entries = BTreeMap::new();
    for result in per_degree {
        for (i, a, r) in result? {
            entries.insert((i, a), r);
        }
    }
    Ok(BettiTable { entries })
}

pub fn betti_numbers(ideal: &MonomialIdeal) -> Result<BettiTable> {
    betti_numbers_with(ideal, &Limits::default())
}

/// Betti numbers over the lcm lattice.
pub fn betti_numbers_with(ideal: &MonomialIdeal, limits: &Limits) -> Result<BettiTable> {
    let lattice = lcm_lattice_with(ideal, limits)?;
    betti_at(lattice.elements, ideal.generators(), 0, limits)
}

/// Betti numbers of `I ∩ m^t` without building its lcm lattice.
///
/// With `J = I ∩ m^t`, a multidegree `a` with `|a| - |supp a| ≥ t` has
/// `K^a(J) = K^a(I)`, so it contributes only when it lies in the lcm lattice
/// of `I`. Every other candidate has degree in `[t, t + n)` and lies below
/// the lcm of the generators of `J`.
pub fn betti_numbers_of_truncation(
    ideal: &MonomialIdeal,
    t: u32,
    limits: &Limits,
) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if t <= ideal.deg_min()? {
        return betti_numbers_with(ideal, limits);
    }
    let n = ideal.ambient();
    let gens = ideal.generators();
    let mut bounds = vec![0u32; n];
    for g in gens {
        let lift = t.saturating_sub(g.degree());
        for (b, &e) in bounds.iter_mut().zip(g.exponents()) {
            *b = (*b).max(e + lift);
        }
    }
    let low = |a: &Monomial| (a.degree() as usize) < t as usize + a.support_size();

    let mut candidates: Vec<Monomial> = lcm_lattice_with(ideal, limits)?
        .elements
        .into_iter()
        .filter(|a| !low(a))
        .collect();
    for d in t..t + n as u32 {
        for_each_exponent_of_degree(n, d, Some(&bounds), &mut |e| {
            let a = Monomial::new(e.to_vec());
            if low(&a) {
                candidates.push(a);
            }
        });
        if candidates.len() > limits.lattice {
            return Err(Error::CapExceeded {
                what: "truncation candidates",
                limit: limits.lattice,
                actual: candidates.len(),
            });
        }
    }
    betti_at(candidates, gens, t, limits)
}

/// `reg(I)` as a module.
pub fn regularity(ideal: &MonomialIdeal) -> Result<i64> {
    regularity_with(ideal, &Limits::default())
}

pub fn regularity_with(ideal: &MonomialIdeal, limits: &Limits) -> Result<i64> {
    betti_numbers_with(ideal, limits)?
        .regularity()
        .ok_or(Error::ZeroIdeal)
}

/// `reg(R/I) = reg(I) - 1`.
pub fn quotient_regularity(ideal: &MonomialIdeal) -> Result<i64> {
    Ok(regularity(ideal)? - 1)
}

/// `reg(I ∩ m^t)`.
pub fn regularity_of_truncation(ideal: &MonomialIdeal, t: u32, limits: &Limits) -> Result<i64> {
    betti_numbers_of_truncation(ideal, t, limits)?
        .regularity()
        .ok_or(Error::ZeroIdeal)
}

/// `pd(I) = max{i : β_i(I) ≠ 0}`.
pub fn projective_dimension(ideal: &MonomialIdeal) -> Result<usize> {
    projective_dimension_with(ideal, &Limits::default())
}

pub fn projective_dimension_with(ideal: &MonomialIdeal, limits: &Limits) -> Result<usize> {
    betti_numbers_with(ideal, limits)?
        .projective_dimension()
        .ok_or(Error::ZeroIdeal)
}

/// `pd(R/I) = pd(I) + 1`.
pub fn quotient_projective_dimension(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(projective_dimension(ideal)? + 1)
}

/// Generated in one degree `d` with `reg(I) = d`.
pub fn has_linear_resolution(ideal: &MonomialIdeal) -> Result<bool> {
    has_linear_resolution_with(ideal, &Limits::default())
}

pub fn has_linear_resolution_with(ideal: &MonomialIdeal, limits: &Limits) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !ideal.is_equigenerated() {
        return Ok(false);
    }
    let d = ideal.deg_min()? as i64;
    Ok(regularity_with(ideal, limits)? == d)
}

/// Every degree component `I_<d>` has a linear resolution. Checking the
/// generator degrees suffices: between them `I_<d+1> = m·I_<d>`.
pub fn is_componentwise_linear(ideal: &MonomialIdeal) -> Result<bool> {
    is_componentwise_linear_with(ideal, &Limits::default())
}

pub fn is_componentwise_linear_with(ideal: &MonomialIdeal, limits: &Limits) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    for d in ideal.generator_degrees() {
        if !has_linear_resolution_with(&ideal.component(d), limits)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `R/I(G)` is Cohen–Macaulay iff `pd(R/I(G))` equals the height of `I(G)`,
/// the size of a smallest vertex cover.
pub fn is_cohen_macaulay_graph(graph: &Graph) -> Result<bool> {
    is_cohen_macaulay_graph_with(graph, &Limits::default())
}

pub fn is_cohen_macaulay_graph_with(graph: &Graph, limits: &Limits) -> Result<bool> {
    if graph.num_edges() == 0 {
        return Ok(true);
    }
    let pd = projective_dimension_with(&graph.edge_ideal(), limits)? + 1;
    let height = graph
        .minimal_vertex_covers_with(limits)?
        .iter()
        .map(|c| c.count_ones() as usize)
        .min()
        .unwrap_or(0);
    Ok(pd == height)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    fn triangle() -> MonomialIdeal {
        Graph::cycle(3).unwrap().cover_ideal().unwrap()
    }

    /// Taylor-complex oracle for ideals with few generators: the Taylor
    /// complex is a (non-minimal) free resolution whose multidegree-`a`
    /// strand is the simplex on the generators dividing `a`, restricted to
    /// subsets with lcm exactly `a`. Its homology at `a` is the Betti number.
    fn taylor_betti(ideal: &MonomialIdeal) -> BTreeMap<(usize, Monomial), u64> {
        let gens = ideal.generators();
        let m = gens.len();
        let mut by_lcm: BTreeMap<Monomial, Vec<usize>> = BTreeMap::new();
        for s in 1usize..(1 << m) {
            let l = (0..m)
                .filter(|i| s & (1 << i) != 0)
                .fold(Monomial::unit(ideal.ambient()), |acc, i| {
                    acc.lcm_unchecked(&gens[i])
                });
            by_lcm.entry(l).or_default().push(s);
        }
        let mut out = BTreeMap::new();
        for (a, subsets) in by_lcm {
            // chain groups: subsets of size i+1 with lcm a; the differential
            // drops one generator (only terms landing on lcm a survive in the
            // a-graded strand quotient by lower lcms)
            let size = |s: &usize| s.count_ones() as usize;
            let maxsize = subsets.iter().map(size).max().unwrap();
            let mut ranks = vec![0usize; maxsize + 2];
            for k in 2..=maxsize {
                let rows_sets: Vec<usize> =
                    subsets.iter().copied().filter(|s| size(s) == k).collect();
                let cols_sets: Vec<usize> = subsets
                    .iter()
                    .copied()
                    .filter(|s| size(s) == k - 1)
                    .collect();
                if rows_sets.is_empty() || cols_sets.is_empty() {
                    continue;
                }
                let rows: Vec<Vec<i64>> = rows_sets
                    .iter()
                    .map(|&s| {
                        let mut row = vec![0i64; cols_sets.len()];
                        let mut sign = 1;
                        for j in 0..m {
                            if s & (1 << j) != 0 {
                                if let Some(c) = cols_sets.iter().position(|&t| t == s & !(1 << j))
                                {
                                    row[c] = sign;
                                }
                                sign = -sign;
                            }
                        }
                        row
                    })
                    .collect();
                ranks[k] = linalg::rank(&rows);
            }
            for k in 1..=maxsize {
                let c = subsets.iter().filter(|s| size(s) == k).count();
                let h = c - ranks[k] - ranks[k + 1];
                if h > 0 {
                    out.insert((k - 1, a.clone()), h as u64);
                }
            }
        }
        out
    }

    #[test]
    fn lattice_examples() {
        let l = lcm_lattice(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(
            l.elements,
            vec![
                Monomial::new(vec![1, 0]),
                Monomial::new(vec![0, 1]),
                Monomial::new(vec![1, 1])
            ]
        );
        // three generators and their common lcm x1x2x3
        let l = lcm_lattice(&triangle()).unwrap();
        assert_eq!(l.len(), 4);
        assert!(l.contains(&Monomial::new(vec![1, 1, 1])));
        assert_eq!(lcm_lattice(&ideal(2, &[&[2, 1]])).unwrap().len(), 1);
        assert_eq!(lcm_lattice(&MonomialIdeal::zero(2)), Err(Error::ZeroIdeal));
        let tiny = Limits {
            lattice: 2,
            ..Limits::default()
        };
        assert!(matches!(
            lcm_lattice_with(&triangle(), &tiny),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn triangle_resolution() {
        let b = betti_numbers(&triangle()).unwrap();
        assert_eq!(b.totals(), vec![3, 2]);
        let gens_row: Vec<_> = b.entries().filter(|(i, _, _)| *i == 0).collect();
        assert_eq!(gens_row.len(), 3);
        assert!(gens_row.iter().all(|(_, a, r)| a.degree() == 2 && *r == 1));
        let expected = taylor_betti(&triangle());
        let got: BTreeMap<_, _> = b.entries().map(|(i, a, r)| ((i, a.clone()), r)).collect();
        assert_eq!(got, expected);
        assert_eq!(b.to_text(), "        0 1\n total: 3 2\n     2: 3 2\n");
    }

    #[test]
    fn taylor_oracle_agrees_on_small_ideals() {
        for i in [
            ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 1, 2]]),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1], &[2, 0, 0]]),
            ideal(
                4,
                &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1], &[1, 0, 0, 1]],
            ),
            ideal(2, &[&[3, 0], &[2, 1], &[0, 2]]),
        ] {
            let got: BTreeMap<_, _> = betti_numbers(&i)
                .unwrap()
                .entries()
                .map(|(k, a, r)| ((k, a.clone()), r))
                .collect();
            assert_eq!(got, taylor_betti(&i), "{i}");
        }
    }

    #[test]
    fn polarization_preserves_coarse_betti_numbers() {
        let sq = triangle().power(2).unwrap();
        let pol = sq.polarize().ideal;
        assert_eq!(
            betti_numbers(&sq).unwrap().coarse(),
            betti_numbers(&pol).unwrap().coarse()
        );
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(regularity(&ideal(2, &[&[1, 0]])).unwrap(), 1);
        assert_eq!(quotient_regularity(&ideal(2, &[&[1, 0]])).unwrap(), 0);
        assert_eq!(regularity(&MonomialIdeal::unit(2)).unwrap(), 0);
        assert_eq!(regularity(&MonomialIdeal::zero(2)), Err(Error::ZeroIdeal));
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(regularity(&c5.cover_ideal().unwrap()).unwrap(), 3);
        assert_eq!(regularity(&c5.edge_ideal()).unwrap(), 3);
    }

    #[test]
    fn linearity_checks() {
        assert!(has_linear_resolution(&triangle()).unwrap());
        assert!(!has_linear_resolution(&Graph::cycle(5).unwrap().edge_ideal()).unwrap());
        let sym = ideal(3, &[&[1, 1, 1], &[2, 2, 0], &[2, 0, 2], &[0, 2, 2]]);
        assert!(!has_linear_resolution(&sym).unwrap());
        assert!(is_componentwise_linear(&sym).unwrap());
        assert_eq!(regularity(&sym).unwrap(), 4);
        // (x1^2, x2^2) is a complete intersection of degree-2 forms: reg 3
        let ci = ideal(2, &[&[2, 0], &[0, 2]]);
        assert!(!is_componentwise_linear(&ci).unwrap());
    }

    #[test]
    fn cohen_macaulay_graphs() {
        assert!(is_cohen_macaulay_graph(&Graph::cycle(3).unwrap()).unwrap());
        assert!(is_cohen_macaulay_graph(&Graph::cycle(5).unwrap()).unwrap());
        assert!(!is_cohen_macaulay_graph(&Graph::cycle(7).unwrap()).unwrap());
        assert!(!is_cohen_macaulay_graph(&Graph::cycle(4).unwrap()).unwrap());
        assert!(is_cohen_macaulay_graph(&Graph::path(3).unwrap().whisker().unwrap()).unwrap());
        assert!(is_cohen_macaulay_graph(&Graph::edgeless(3).unwrap()).unwrap());
        assert_eq!(projective_dimension(&triangle()).unwrap(), 1);
        assert_eq!(quotient_projective_dimension(&triangle()).unwrap(), 2);
    }

    #[test]
    fn koszul_complex_faces() {
        let j = triangle();
        let a = Monomial::new(vec![1, 1, 1]);
        let gens = j.generators().to_vec();
        let member = move |e: &[u32]| gens.iter().any(|g| g.divides_exps(e));
        let k = KoszulComplex::new(&a, &member, &Limits::default()).unwrap();
        // faces: ∅ and the three singletons (x^{a-b} = x_jx_k)
        assert_eq!(k.face_counts(), vec![1, 3, 0, 0]);
        assert!(k.contains(&[0]));
        assert!(!k.contains(&[0, 1]));
        assert_eq!(k.reduced_homology(), vec![0, 2, 0, 0]);
    }

    #[test]
    fn betti_json_round_trip() {
        let b = betti_numbers(&triangle()).unwrap();
        assert_eq!(BettiTable::from_json(&b.to_json()).unwrap(), b);
        assert!(b
            .to_json()
            .starts_with(r#"{"entries":[{"i":0,"multidegree":"#));
    }

    #[test]
    fn truncation_fast_path_matches_lattice_path() {
        let cases = [
            ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 1, 2]]),
            ideal(3, &[&[1, 0, 0], &[0, 3, 1]]),
            ideal(2, &[&[3, 0], &[2, 1], &[0, 2]]),
            triangle(),
        ];
        for i in &cases {
            for t in 0..=i.deg_max().unwrap() + 2 {
                let fast = betti_numbers_of_truncation(i, t, &Limits::default()).unwrap();
                let slow = betti_numbers(&i.truncate(t)).unwrap();
                assert_eq!(fast, slow, "{i} truncated at {t}");
            }
        }
    }
}
