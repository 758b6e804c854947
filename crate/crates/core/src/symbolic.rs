//! Symbolic powers of cover ideals, the closed form for graphs whose odd
//! cycles dominate the vertex set, face ideals of co-complexes and the
//! `L_{s,t}` family for whisker graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, full_mask, members, CliquePartition, Graph};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::Limits;

/// `(x_i, x_j)^s` for 0-based `i`, `j`.
fn edge_prime_power(n: usize, i: usize, j: usize, s: u32) -> MonomialIdeal {
    let gens = (0..=s).map(|a| {
        let mut e = vec![0; n];
        e[i] = a;
        e[j] = s - a;
        Monomial::new(e)
    });
    MonomialIdeal::new(n, gens).expect("shared ambient")
}

/// `J(G)^(s) = ⋂_{ij ∈ E} (x_i, x_j)^s`. An edgeless graph gives the unit
/// ideal.
pub fn symbolic_power(graph: &Graph, s: u32) -> Result<MonomialIdeal> {
    if s == 0 {
        return Err(Error::InvalidArgument("symbolic power needs s >= 1".into()));
    }
    let n = graph.n();
    MonomialIdeal::intersect_all(
        n,
        graph
            .edges()
            .into_iter()
            .map(|(i, j)| edge_prime_power(n, i - 1, j - 1, s)),
    )
}

/// Vertex sets (as bitsets) of the simple odd cycles of `G`.
fn odd_cycle_vertex_sets(graph: &Graph, limits: &Limits) -> Result<Vec<u64>> {
    let n = graph.n();
    if n > limits.cycle_vertices {
        return Err(Error::CapExceeded {
            what: "odd-cycle enumeration vertices",
            limit: limits.cycle_vertices,
            actual: n,
        });
    }
    let adj = graph.adjacency();
    // reach[mask]: endpoints of paths that start at the least vertex of mask
    // and visit exactly mask
    let mut reach = vec![0u64; 1 << n];
    for s in 0..n {
        reach[1 << s] = 1 << s;
    }
    let mut out = Vec::new();
    for mask in 1usize..(1 << n) {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        let start = mask.trailing_zeros() as usize;
        let size = mask.count_ones();
        if size >= 3 && size % 2 == 1 && ends & adj[start] != 0 {
            out.push(mask as u64);
        }
        let above = !((1u64 << (start + 1)) - 1);
        for v in members(ends) {
            let next = adj[v - 1] & above & !(mask as u64);
            for w in members(next) {
                reach[mask | (1 << (w - 1))] |= bit(w);
            }
        }
    }
    Ok(out)
}

/// Every simple odd cycle `C` (induced or not) has closed neighbourhood
/// `N_G[C] = V(G)`.
pub fn check_odd_cycle_neighborhood(graph: &Graph) -> Result<bool> {
    check_odd_cycle_neighborhood_with(graph, &Limits::default())
}

pub fn check_odd_cycle_neighborhood_with(graph: &Graph, limits: &Limits) -> Result<bool> {
    let all = full_mask(graph.n());
    Ok(odd_cycle_vertex_sets(graph, limits)?.into_iter().all(|c| {
        let closed = members(c).fold(c, |acc, v| acc | graph.neighbor_mask(v));
        closed == all
    }))
}

/// `Σ_{i=0}^{⌊s/2⌋} (x_1⋯x_n)^i J(G)^{s-2i}`, valid when every odd cycle
/// dominates the graph.
pub fn herzog_symbolic(graph: &Graph, s: u32) -> Result<MonomialIdeal> {
    herzog_symbolic_with(graph, s, &Limits::default())
}

pub fn herzog_symbolic_with(graph: &Graph, s: u32, limits: &Limits) -> Result<MonomialIdeal> {
    if s == 0 {
        return Err(Error::InvalidArgument("symbolic power needs s >= 1".into()));
    }
    if !check_odd_cycle_neighborhood_with(graph, limits)? {
        return Err(Error::Hypothesis(
            "some odd cycle does not dominate the vertex set".into(),
        ));
    }
    let n = graph.n();
    let j = graph.cover_ideal_with(limits)?;
    let top = Monomial::squarefree(n, 0..n);
    let terms = (0..=s / 2)
        .map(|i| j.power(s - 2 * i)?.scale(&top.pow(i)?))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::sum_all(n, terms)
}

/// `J^(s) ∩ m^{st} = J^s ∩ m^{st}` with `t = Deg(J(G))`.
pub fn truncation_equality_check(graph: &Graph, s: u32) -> Result<bool> {
    let j = graph.cover_ideal()?;
    let t = s * j.deg_max()?;
    Ok(symbolic_power(graph, s)?.truncate(t) == j.power(s)?.truncate(t))
}

/// Upward-closed family of subsets of a partitioned ground set `1..=|V|`,
/// stored by its minimal members.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoComplex {
    parts: Vec<Vec<usize>>,
    minimal_faces: Vec<Vec<usize>>,
}

const MAX_COCOMPLEX_GROUND: usize = 20;

fn mask_of(set: &[usize], ground: usize) -> Result<u64> {
    set.iter().try_fold(0u64, |m, &v| {
        if v == 0 || v > ground {
            Err(Error::InvalidVertex {
                vertex: v,
                n: ground,
            })
        } else {
            Ok(m | bit(v))
        }
    })
}

fn minimal_masks(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    let mut out: Vec<u64> = Vec::new();
    for m in masks {
        if !out.iter().any(|&o| o & m == o) {
            out.push(m);
        }
    }
    out.sort_unstable();
    out
}

impl CoComplex {
    /// From the partition and any generating family; the co-complex is its
    /// upward closure.
    pub fn new(parts: Vec<Vec<usize>>, faces: Vec<Vec<usize>>) -> Result<Self> {
        let ground: usize = parts.iter().map(Vec::len).sum();
        if ground > MAX_COCOMPLEX_GROUND {
            return Err(Error::CapExceeded {
                what: "co-complex ground set",
                limit: MAX_COCOMPLEX_GROUND,
                actual: ground,
            });
        }
        let mut seen = 0u64;
        for part in &parts {
            if part.is_empty() {
                return Err(Error::InvalidPartition("empty part".into()));
            }
            let m = mask_of(part, ground)?;
            if m & seen != 0 || m.count_ones() as usize != part.len() {
                return Err(Error::InvalidPartition("parts overlap".into()));
            }
            seen |= m;
        }
        let masks = faces
            .iter()
            .map(|f| mask_of(f, ground))
            .collect::<Result<Vec<_>>>()?;
        Ok(CoComplex {
            parts,
            minimal_faces: minimal_masks(masks)
                .into_iter()
                .map(|m| members(m).collect())
                .collect(),
        })
    }

    /// From an explicit family that must already be upward closed.
    pub fn from_family(parts: Vec<Vec<usize>>, family: Vec<Vec<usize>>) -> Result<Self> {
        let complex = CoComplex::new(parts, family.clone())?;
        let ground = complex.ground();
        let given: std::collections::HashSet<u64> = family
            .iter()
            .map(|f| mask_of(f, ground))
            .collect::<Result<_>>()?;
        for &f in &given {
            for v in members(full_mask(ground) & !f) {
                if !given.contains(&(f | bit(v))) {
                    return Err(Error::InvalidCoComplex(format!(
                        "{:?} is a face but adding {v} is not",
                        members(f).collect::<Vec<_>>()
                    )));
                }
            }
        }
        Ok(complex)
    }

    pub fn ground(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn minimal_faces(&self) -> &[Vec<usize>] {
        &self.minimal_faces
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        self.minimal_faces
            .iter()
            .any(|m| m.iter().all(|v| face.contains(v)))
    }

    /// Every face, as sorted vertex lists in ascending bitset order.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mins: Vec<u64> = self
            .minimal_faces
            .iter()
            .map(|f| mask_of(f, self.ground()).expect("validated"))
            .collect();
        (0..=full_mask(self.ground()))
            .filter(|&f| mins.iter().any(|&m| m & f == m))
            .map(|f| members(f).collect())
            .collect()
    }
}

/// `(u_F : F ∈ ∇)` with `u_F = Π_{x∈F} x · Π_i y_i^{|W_i| - |F ∩ W_i|}`,
/// over `|V| + t` variables with the `y_i` after the ground set.
pub fn face_ideal(cocomplex: &CoComplex) -> Result<MonomialIdeal> {
    let ground = cocomplex.ground();
    let t = cocomplex.parts().len();
    let n = ground + t;
    let mut part_of = vec![0; ground];
    for (i, part) in cocomplex.parts().iter().enumerate() {
        for &v in part {
            part_of[v - 1] = i;
        }
    }
    let gens = cocomplex.faces().into_iter().map(|face| {
        let mut e = vec![0u32; n];
        for (i, part) in cocomplex.parts().iter().enumerate() {
            e[ground + i] = part.len() as u32;
        }
        for v in face {
            e[v - 1] = 1;
            e[ground + part_of[v - 1]] -= 1;
        }
        Monomial::new(e)
    });
    MonomialIdeal::new(n, gens)
}

/// `{C ∩ V(G) : C a minimal vertex cover of W}` for `W = G^π`.
pub fn cover_cocomplex(w: &Graph, g: &Graph, partition: &CliquePartition) -> Result<CoComplex> {
    if g.clique_whisker(partition)? != *w {
        return Err(Error::InvalidArgument(
            "graph is not the clique whiskering of the given graph and partition".into(),
        ));
    }
    let base = full_mask(g.n());
    let mut traces: Vec<u64> = w
        .minimal_vertex_covers()?
        .into_iter()
        .map(|c| c & base)
        .collect();
    traces.sort_unstable();
    traces.dedup();
    CoComplex::from_family(
        partition.parts().to_vec(),
        traces.into_iter().map(|m| members(m).collect()).collect(),
    )
}

/// `L_{s,t} = Σ_{i=0}^{t} (x_{[n]} y_{[n]})^i J^{s-2i}` with `J` the cover
/// ideal of the whisker graph of `G`.
pub fn l_ideal(graph: &Graph, s: u32, t: u32) -> Result<MonomialIdeal> {
    if 2 * t > s {
        return Err(Error::InvalidArgument(format!(
            "need 2t <= s, got s={s}, t={t}"
        )));
    }
    let w = graph.whisker()?;
    let n = w.n();
    let j = w.cover_ideal()?;
    let top = Monomial::squarefree(n, 0..n);
    let terms = (0..=t)
        .map(|i| j.power(s - 2 * i)?.scale(&top.pow(i)?))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::sum_all(n, terms)
}

/// Symbolic power by edge-wise intersection next to the closed form when its
/// hypothesis holds. `equal` is false when the closed form does not apply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicPowerReport {
    pub graph: Graph,
    pub s: u32,
    pub via_intersection: MonomialIdeal,
    pub via_formula: Option<MonomialIdeal>,
    pub equal: bool,
}

impl SymbolicPowerReport {
    pub fn compute(graph: &Graph, s: u32) -> Result<Self> {
        let via_intersection = symbolic_power(graph, s)?;
        let via_formula = if check_odd_cycle_neighborhood(graph)? {
            Some(herzog_symbolic(graph, s)?)
        } else {
            None
        };
        let equal = via_formula.as_ref() == Some(&via_intersection);
        Ok(SymbolicPowerReport {
            graph: graph.clone(),
            s,
            via_intersection,
            via_formula,
            equal,
        })
    }
}
