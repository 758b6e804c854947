//! Simplicial complexes stored by their facets, with link, deletion and the
//! vertex-decomposability recursion.

use dashmap::DashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, full_mask, members, MAX_VERTICES};
use crate::monomial::{Monomial, MonomialIdeal};

/// Simplicial complex on `1..=ground`, kept as an antichain of facet bitsets.
///
/// No facets at all is the void complex; a single empty facet is the
/// irrelevant complex `{∅}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialComplex {
    ground: usize,
    facets: Vec<u64>,
}

/// Keeps the inclusion-maximal sets, sorted.
fn maximal_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by_key(|s| std::cmp::Reverse(s.count_ones()));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & s == s) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

impl SimplicialComplex {
    /// From 1-based facet lists; non-maximal entries are dropped.
    pub fn new(ground: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        if ground > MAX_VERTICES {
            return Err(Error::CapExceeded {
                what: "complex vertices",
                limit: MAX_VERTICES,
                actual: ground,
            });
        }
        let mut masks = Vec::with_capacity(facets.len());
        for f in facets {
            let mut m = 0;
            for v in f {
                if v == 0 || v > ground {
                    return Err(Error::InvalidVertex {
                        vertex: v,
                        n: ground,
                    });
                }
                m |= bit(v);
            }
            masks.push(m);
        }
        Ok(SimplicialComplex::from_masks(ground, masks))
    }

    pub(crate) fn from_masks(ground: usize, facets: Vec<u64>) -> Self {
        SimplicialComplex {
            ground,
            facets: maximal_sets(facets),
        }
    }

    pub fn void(ground: usize) -> Self {
        SimplicialComplex {
            ground,
            facets: Vec::new(),
        }
    }

    /// `{∅}`.
    pub fn irrelevant(ground: usize) -> Self {
        SimplicialComplex {
            ground,
            facets: vec![0],
        }
    }

    pub fn simplex(ground: usize, vertices: &[usize]) -> Result<Self> {
        SimplicialComplex::new(ground, vec![vertices.to_vec()])
    }

    /// The complex `Δ` with `I_Δ^∨ = I`: its facets are the complements of
    /// the generator supports.
    pub fn from_dual_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        if !ideal.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let n = ideal.ambient();
        if n > MAX_VERTICES {
            return Err(Error::CapExceeded {
                what: "complex vertices",
                limit: MAX_VERTICES,
                actual: n,
            });
        }
        let all = full_mask(n);
        let facets = ideal
            .generators()
            .iter()
            .map(|g| all & !g.support().fold(0u64, |m, i| m | (1 << i)))
            .collect();
        Ok(SimplicialComplex::from_masks(n, facets))
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    /// Facets as sorted 1-based vertex lists, in canonical order.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.facets.iter().map(|&f| members(f).collect()).collect();
        out.sort();
        out
    }

    /// Vertices lying in some facet.
    pub fn vertices(&self) -> Vec<usize> {
        members(self.vertex_mask()).collect()
    }

    fn vertex_mask(&self) -> u64 {
        self.facets.iter().fold(0, |a, f| a | f)
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    pub fn is_pure(&self) -> bool {
        self.facets
            .windows(2)
            .all(|w| w[0].count_ones() == w[1].count_ones())
    }

    /// Dimension (largest facet size minus one); `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets
            .iter()
            .map(|f| f.count_ones() as isize - 1)
            .max()
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        let m = face.iter().fold(0u64, |a, &v| a | bit(v));
        self.facets.iter().any(|&f| f & m == m)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.ground || self.vertex_mask() & bit(v) == 0 {
            return Err(Error::NotAVertex(v));
        }
        Ok(())
    }

    /// `lk(v) = {F : v ∉ F, F ∪ {v} ∈ Δ}`.
    pub fn link(&self, v: usize) -> Result<SimplicialComplex> {
        self.check_vertex(v)?;
        let b = bit(v);
        Ok(SimplicialComplex::from_masks(
            self.ground,
            self.facets
                .iter()
                .filter(|&&f| f & b != 0)
                .map(|&f| f & !b)
                .collect(),
        ))
    }

    /// `del(v) = {F ∈ Δ : v ∉ F}`.
    pub fn deletion(&self, v: usize) -> Result<SimplicialComplex> {
        self.check_vertex(v)?;
        let b = bit(v);
        Ok(SimplicialComplex::from_masks(
            self.ground,
            self.facets.iter().map(|&f| f & !b).collect(),
        ))
    }

    /// No facet of the link is a facet of the deletion.
    pub fn is_shedding_vertex(&self, v: usize) -> Result<bool> {
        self.check_vertex(v)?;
        Ok(is_shedding(&self.facets, bit(v)))
    }

    /// `I_Δ^∨ = (x_{[n] \ F} : F facet)`.
    pub fn dual_ideal(&self) -> MonomialIdeal {
        let all = full_mask(self.ground);
        MonomialIdeal::new(
            self.ground,
            self.facets
                .iter()
                .map(|&f| Monomial::squarefree(self.ground, members(all & !f).map(|v| v - 1))),
        )
        .expect("facet complements share the ambient dimension")
    }

    /// Stanley–Reisner ideal, generated by the minimal non-faces.
    pub fn stanley_reisner_ideal(&self) -> MonomialIdeal {
        self.dual_ideal()
            .alexander_dual()
            .expect("dual ideal is squarefree")
    }

    /// Vertex decomposability with a fresh memo table. Returns the shedding
    /// tree when decomposable.
    pub fn is_vertex_decomposable(&self) -> Result<Option<ShedTree>> {
        VdMemo::new().check(self)
    }
}

/// Each facet `F ∋ v` has `F \ {v}` strictly inside a facet avoiding `v`.
fn is_shedding(facets: &[u64], b: u64) -> bool {
    facets.iter().filter(|&&f| f & b != 0).all(|&f| {
        let rest = f & !b;
        facets.iter().any(|&g| g & b == 0 && g & rest == rest)
    })
}

/// Relabels the union of the facets onto `0..k` preserving order and sorts.
fn canonical_key(facets: &[u64]) -> Vec<u64> {
    let union = facets.iter().fold(0u64, |a, f| a | f);
    let mut key: Vec<u64> = facets
        .iter()
        .map(|&f| {
            let mut out = 0u64;
            for (i, v) in members(union).enumerate() {
                if f & bit(v) != 0 {
                    out |= 1 << i;
                }
            }
            out
        })
        .collect();
    key.sort_unstable();
    key
}

/// Certificate of vertex decomposability: at each node the shedding vertex
/// with the certificates of its link and deletion.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShedTree {
    Simplex(Vec<usize>),
    Shed {
        vertex: usize,
        link: Box<ShedTree>,
        deletion: Box<ShedTree>,
    },
}

impl ShedTree {
    /// Number of shedding steps.
    pub fn depth(&self) -> usize {
        match self {
            ShedTree::Simplex(_) => 0,
            ShedTree::Shed { link, deletion, .. } => 1 + link.depth().max(deletion.depth()),
        }
    }
}

/// Memo table for the decomposability recursion, keyed on facet sets after
/// order-preserving relabelling. Shareable across threads.
#[derive(Default)]
pub struct VdMemo {
    table: DashMap<Vec<u64>, bool>,
}

impl VdMemo {
    pub fn new() -> Self {
        VdMemo::default()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn check(&self, complex: &SimplicialComplex) -> Result<Option<ShedTree>> {
        if complex.is_void() {
            return Err(Error::VoidComplex);
        }
        if self.decomposable(&complex.facets) {
            Ok(Some(self.certificate(&complex.facets)))
        } else {
            Ok(None)
        }
    }

    fn decomposable(&self, facets: &[u64]) -> bool {
        if facets.len() == 1 {
            return true;
        }
        let key = canonical_key(facets);
        if let Some(hit) = self.table.get(&key) {
            return *hit;
        }
        let result = self.shedding_choice(facets).is_some();
        self.table.insert(key, result);
        result
    }

    /// First shedding vertex (ascending label) whose link and deletion are
    /// both decomposable, with those two facet lists.
    fn shedding_choice(&self, facets: &[u64]) -> Option<(usize, Vec<u64>, Vec<u64>)> {
        let union = facets.iter().fold(0u64, |a, f| a | f);
        let inter = facets.iter().fold(u64::MAX, |a, f| a & f);
        for v in members(union & !inter) {
            let b = bit(v);
            if !is_shedding(facets, b) {
                continue;
            }
            let link: Vec<u64> = facets
                .iter()
                .filter(|&&f| f & b != 0)
                .map(|&f| f & !b)
                .collect();
            let deletion: Vec<u64> = facets.iter().copied().filter(|&f| f & b == 0).collect();
            if self.decomposable(&link) && self.decomposable(&deletion) {
                return Some((v, link, deletion));
            }
        }
        None
    }

    fn certificate(&self, facets: &[u64]) -> ShedTree {
        if facets.len() == 1 {
            return ShedTree::Simplex(members(facets[0]).collect());
        }
        let (vertex, link, deletion) = self
            .shedding_choice(facets)
            .expect("certificate requested for a decomposable complex");
        ShedTree::Shed {
            vertex,
            link: Box::new(self.certificate(&link)),
            deletion: Box::new(self.certificate(&deletion)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn cx(ground: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::new(ground, facets.iter().map(|f| f.to_vec()).collect()).unwrap()
    }

    #[test]
    fn link_and_deletion() {
        let d = cx(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(d.link(2).unwrap(), cx(3, &[&[1], &[3]]));
        assert_eq!(d.deletion(2).unwrap(), cx(3, &[&[1], &[3]]));
        assert_eq!(d.link(4), Err(Error::NotAVertex(4)));

        let s = cx(3, &[&[1, 2, 3]]);
        assert_eq!(s.deletion(3).unwrap(), cx(3, &[&[1, 2]]));

        // cone over two points with apex 3
        let cone = cx(3, &[&[1, 3], &[2, 3]]);
        assert_eq!(cone.link(3).unwrap(), cx(3, &[&[1], &[2]]));
    }

    #[test]
    fn shedding_vertices() {
        // in a simplex the link and the deletion coincide
        let s = cx(3, &[&[1, 2, 3]]);
        assert!((1..=3).all(|v| !s.is_shedding_vertex(v).unwrap()));
        let two_points = cx(2, &[&[1], &[2]]);
        assert_eq!(
            two_points.link(1).unwrap(),
            SimplicialComplex::irrelevant(2)
        );
        assert!(two_points.is_shedding_vertex(1).unwrap());
        assert!(!cx(3, &[&[1, 2], &[2, 3]]).is_shedding_vertex(2).unwrap());
    }

    #[test]
    fn decomposability_examples() {
        let s = cx(3, &[&[1, 2, 3]]);
        assert_eq!(
            s.is_vertex_decomposable().unwrap(),
            Some(ShedTree::Simplex(vec![1, 2, 3]))
        );
        assert!(SimplicialComplex::irrelevant(2)
            .is_vertex_decomposable()
            .unwrap()
            .is_some());
        assert_eq!(
            SimplicialComplex::void(2).is_vertex_decomposable(),
            Err(Error::VoidComplex)
        );
        let c5 = Graph::cycle(5).unwrap().independence_complex().unwrap();
        let tree = c5.is_vertex_decomposable().unwrap().unwrap();
        assert!(tree.depth() >= 1);
        let c7 = Graph::cycle(7).unwrap().independence_complex().unwrap();
        assert!(c7.is_vertex_decomposable().unwrap().is_none());
        // two disjoint edges: not even connected in dimension 1
        assert!(cx(4, &[&[1, 2], &[3, 4]])
            .is_vertex_decomposable()
            .unwrap()
            .is_none());
    }

    #[test]
    fn certificate_uses_smallest_shedding_vertex() {
        let d = cx(3, &[&[1, 2], &[2, 3]]);
        match d.is_vertex_decomposable().unwrap().unwrap() {
            ShedTree::Shed { vertex, .. } => assert_eq!(vertex, 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn dual_and_stanley_reisner_ideals() {
        let c5 = Graph::cycle(5).unwrap();
        let ind = c5.independence_complex().unwrap();
        assert_eq!(ind.stanley_reisner_ideal(), c5.edge_ideal());
        assert_eq!(ind.dual_ideal(), c5.cover_ideal().unwrap());
        assert_eq!(
            SimplicialComplex::from_dual_ideal(&ind.dual_ideal()).unwrap(),
            ind
        );
    }
}
