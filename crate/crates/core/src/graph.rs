//! Simple graphs on `1..=n`, vertex covers and the graph-class predicates
//! used by the experiments.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::Limits;

pub const MAX_VERTICES: usize = 64;

/// Simple graph on the vertices `1..=n`. Adjacency is kept as bitsets, bit
/// `v - 1` standing for vertex `v`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(g: GraphJson) -> Result<Self> {
        Graph::new(g.n, g.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << (v - 1)
}

/// 1-based vertices in a bitset, ascending.
pub(crate) fn members(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let v = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(v + 1)
    })
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Builds a graph from 1-based edges. Duplicate edges are merged.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::CapExceeded {
                what: "graph vertices",
                limit: MAX_VERTICES,
                actual: n,
            });
        }
        let mut adj = vec![0u64; n];
        for (a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::InvalidVertex { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            adj[a - 1] |= bit(b);
            adj[b - 1] |= bit(a);
        }
        Ok(Graph { n, adj })
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        Graph::new(n, [])
    }

    /// `C_n` with edges `{i, i+1}` and `{n, 1}`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!(
                "cycle needs n >= 3, got {n}"
            )));
        }
        Graph::new(n, (1..=n).map(|i| (i, i % n + 1)))
    }

    /// `P_n`: `n` vertices, edges `{i, i+1}`.
    pub fn path(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("path needs n >= 1".into()));
        }
        Graph::new(n, (1..n).map(|i| (i, i + 1)))
    }

    /// Star on `n` vertices with center 1.
    pub fn star(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "star needs n >= 2, got {n}"
            )));
        }
        Graph::new(n, (2..=n).map(|i| (1, i)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::new(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .flat_map(|i| {
                members(self.adj[i - 1])
                    .filter(move |&j| j > i)
                    .map(move |j| (i, j))
            })
            .collect()
    }

    pub fn num_edges(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        members(self.adj[v - 1])
    }

    pub(crate) fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v - 1]
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u - 1] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    fn is_cover(&self, mask: u64) -> bool {
        // every vertex outside the set must have all its neighbours inside
        (0..self.n).all(|i| mask & (1 << i) != 0 || self.adj[i] & !mask == 0)
    }

    /// Inclusion-minimal vertex covers as bitsets, in ascending numeric order.
    /// Exhaustive over all subsets, so limited to `limits.cover_vertices`.
    pub fn minimal_vertex_covers_with(&self, limits: &Limits) -> Result<Vec<u64>> {
        if self.n > limits.cover_vertices {
            return Err(Error::CapExceeded {
                what: "cover enumeration vertices",
                limit: limits.cover_vertices,
                actual: self.n,
            });
        }
        let mut covers = Vec::new();
        for mask in 0..(1u64 << self.n) {
            if !self.is_cover(mask) {
                continue;
            }
            // minimal: each member has a neighbour outside the set
            if members(mask).all(|v| self.adj[v - 1] & !mask != 0) {
                covers.push(mask);
            }
        }
        Ok(covers)
    }

    pub fn minimal_vertex_covers(&self) -> Result<Vec<u64>> {
        self.minimal_vertex_covers_with(&Limits::default())
    }

    /// Minimal vertex covers as sorted lists of 1-based vertices.
    pub fn minimal_vertex_cover_sets(&self) -> Result<Vec<Vec<usize>>> {
        Ok(self
            .minimal_vertex_covers()?
            .into_iter()
            .map(|c| members(c).collect())
            .collect())
    }

    fn mask_monomial(&self, mask: u64) -> Monomial {
        Monomial::squarefree(self.n, members(mask).map(|v| v - 1))
    }

    /// `J(G)`, generated by the minimal vertex covers. An edgeless graph has
    /// the unit ideal.
    pub fn cover_ideal(&self) -> Result<MonomialIdeal> {
        self.cover_ideal_with(&Limits::default())
    }

    pub fn cover_ideal_with(&self, limits: &Limits) -> Result<MonomialIdeal> {
        let covers = self.minimal_vertex_covers_with(limits)?;
        MonomialIdeal::new(self.n, covers.into_iter().map(|c| self.mask_monomial(c)))
    }

    /// `I(G)`, generated by `x_i x_j` over the edges.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(
            self.n,
            self.edges()
                .into_iter()
                .map(|(i, j)| Monomial::squarefree(self.n, [i - 1, j - 1])),
        )
        .expect("edge monomials share the ambient dimension")
    }

    /// Size of a smallest vertex cover.
    pub fn cover_number(&self) -> Result<usize> {
        Ok(self
            .minimal_vertex_covers()?
            .iter()
            .map(|c| c.count_ones() as usize)
            .min()
            .unwrap_or(0))
    }

    /// Complex of independent sets; its facets are the maximal independent
    /// sets, i.e. complements of minimal vertex covers.
    pub fn independence_complex(&self) -> Result<SimplicialComplex> {
        let all = full_mask(self.n);
        let facets = self
            .minimal_vertex_covers()?
            .into_iter()
            .map(|c| all & !c)
            .collect();
        Ok(SimplicialComplex::from_masks(self.n, facets))
    }

    /// All minimal vertex covers have the same size.
    pub fn is_unmixed(&self) -> Result<bool> {
        let sizes: BTreeSet<u32> = self
            .minimal_vertex_covers()?
            .iter()
            .map(|c| c.count_ones())
            .collect();
        Ok(sizes.len() <= 1)
    }

    /// Proper 2-colouring by breadth-first search.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![None::<bool>; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].expect("queued vertices are coloured");
                for w in members(self.adj[u]) {
                    match color[w - 1] {
                        None => {
                            color[w - 1] = Some(!cu);
                            queue.push_back(w - 1);
                        }
                        Some(cw) if cw == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let next = members(frontier).fold(0, |acc, v| acc | self.adj[v - 1]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen == full_mask(self.n)
    }

    /// Length of a shortest cycle, 0 for a forest.
    pub fn girth(&self) -> usize {
        let mut best = usize::MAX;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for w in members(self.adj[u]).map(|w| w - 1) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            0
        } else {
            best
        }
    }

    /// Every edge lies on at most one cycle: each biconnected component is a
    /// bridge or a cycle.
    pub fn is_cactus(&self) -> bool {
        self.biconnected_components()
            .iter()
            .all(|(verts, edges)| *edges == 1 || *edges == *verts)
    }

    /// `(vertex count, edge count)` of every biconnected component.
    fn biconnected_components(&self) -> Vec<(usize, usize)> {
        struct State<'a> {
            g: &'a Graph,
            disc: Vec<usize>,
            low: Vec<usize>,
            time: usize,
            stack: Vec<(usize, usize)>,
            out: Vec<(usize, usize)>,
        }
        fn dfs(st: &mut State<'_>, u: usize, parent: usize) {
            st.time += 1;
            st.disc[u] = st.time;
            st.low[u] = st.time;
            for w in members(st.g.adj[u]).map(|w| w - 1) {
                if st.disc[w] == 0 {
                    st.stack.push((u, w));
                    dfs(st, w, u);
                    st.low[u] = st.low[u].min(st.low[w]);
                    if st.low[w] >= st.disc[u] {
                        let mut verts = 0u64;
                        let mut edges = 0;
                        while let Some((a, b)) = st.stack.pop() {
                            verts |= (1 << a) | (1 << b);
                            edges += 1;
                            if (a, b) == (u, w) {
                                break;
                            }
                        }
                        st.out.push((verts.count_ones() as usize, edges));
                    }
                } else if w != parent && st.disc[w] < st.disc[u] {
                    st.stack.push((u, w));
                    st.low[u] = st.low[u].min(st.disc[w]);
                }
            }
        }
        let mut st = State {
            g: self,
            disc: vec![0; self.n],
            low: vec![0; self.n],
            time: 0,
            stack: Vec::new(),
            out: Vec::new(),
        };
        for v in 0..self.n {
            if st.disc[v] == 0 {
                dfs(&mut st, v, usize::MAX);
            }
        }
        st.out
    }

    /// Maximum cardinality search followed by a perfect-elimination check.
    pub fn is_chordal(&self) -> bool {
        let n = self.n;
        let mut weight = vec![0usize; n];
        let mut visited = 0u64;
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| visited & (1 << v) == 0)
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("unvisited vertex remains");
            visited |= 1 << v;
            order.push(v);
            for w in members(self.adj[v] & !visited) {
                weight[w - 1] += 1;
            }
        }
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        // the earlier-visited neighbours of each vertex must form a clique;
        // it suffices to check them against the latest of them
        for &v in &order {
            let earlier: Vec<usize> = members(self.adj[v])
                .map(|w| w - 1)
                .filter(|&w| position[w] < position[v])
                .collect();
            if let Some(&latest) = earlier.iter().max_by_key(|&&w| position[w]) {
                for &w in &earlier {
                    if w != latest && self.adj[latest] & (1 << w) == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whisker graph: a new leaf `y_i = n + i` on every vertex `i`.
    pub fn whisker(&self) -> Result<Graph> {
        self.clique_whisker(&CliquePartition::trivial(self.n))
    }

    /// Fully clique-whiskered graph `G^π`: vertex `n + i` is joined to every
    /// vertex of the `i`-th part.
    pub fn clique_whisker(&self, partition: &CliquePartition) -> Result<Graph> {
        partition.validate(self)?;
        let mut edges = self.edges();
        for (i, part) in partition.parts().iter().enumerate() {
            let y = self.n + i + 1;
            edges.extend(part.iter().map(|&v| (v, y)));
        }
        Graph::new(self.n + partition.parts().len(), edges)
    }

    /// Relabel: vertex `v` becomes `perm[v - 1] + 1`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for (u, w) in self.edges() {
            let (a, b) = (perm[u - 1], perm[w - 1]);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Graph { n: self.n, adj }
    }

    /// Edge-list text: one `i j` pair per line. A line holding a single
    /// integer sets the vertex count; otherwise the largest label is used.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut n = None;
        let mut edges = Vec::new();
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let nums = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad integer '{t}'")))
                })
                .collect::<Result<Vec<_>>>()?;
            match nums[..] {
                [k] => n = Some(k),
                [a, b] => edges.push((a, b)),
                _ => return Err(Error::Parse(format!("bad edge line '{line}'"))),
            }
        }
        let n = n.unwrap_or_else(|| edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0));
        Graph::new(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (a, b) in self.edges() {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }
}

/// Ordered partition of the vertex set into cliques.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CliquePartition {
    parts: Vec<Vec<usize>>,
}

impl CliquePartition {
    pub fn new(parts: Vec<Vec<usize>>) -> Self {
        CliquePartition { parts }
    }

    /// Every vertex in its own part.
    pub fn trivial(n: usize) -> Self {
        CliquePartition {
            parts: (1..=n).map(|v| vec![v]).collect(),
        }
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    /// Parts are nonempty, disjoint, exhaustive, and each induces a clique.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = 0u64;
        for part in &self.parts {
            if part.is_empty() {
                return Err(Error::InvalidPartition("empty part".into()));
            }
            for &v in part {
                if v == 0 || v > g.n() {
                    return Err(Error::InvalidVertex {
                        vertex: v,
                        n: g.n(),
                    });
                }
                if seen & bit(v) != 0 {
                    return Err(Error::InvalidPartition(format!("vertex {v} repeated")));
                }
                seen |= bit(v);
            }
            for (i, &a) in part.iter().enumerate() {
                if part[i + 1..].iter().any(|&b| !g.adjacent(a, b)) {
                    return Err(Error::NotAClique(part.clone()));
                }
            }
        }
        if seen != full_mask(g.n()) {
            return Err(Error::InvalidPartition(
                "parts do not cover every vertex".into(),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_minimal_covers(g: &Graph) -> Vec<u64> {
        let edges = g.edges();
        let covers: Vec<u64> = (0..1u64 << g.n())
            .filter(|&m| edges.iter().all(|&(a, b)| m & (bit(a) | bit(b)) != 0))
            .collect();
        covers
            .iter()
            .copied()
            .filter(|&c| !covers.iter().any(|&d| d != c && d & c == d))
            .collect()
    }

    fn sets(masks: &[u64]) -> BTreeSet<Vec<usize>> {
        masks.iter().map(|&m| members(m).collect()).collect()
    }

    #[test]
    fn constructors() {
        assert_eq!(
            Graph::cycle(3).unwrap().edges(),
            vec![(1, 2), (1, 3), (2, 3)]
        );
        assert_eq!(Graph::cycle(5).unwrap().num_edges(), 5);
        assert_eq!(
            Graph::star(4).unwrap().edges(),
            vec![(1, 2), (1, 3), (1, 4)]
        );
        assert!(Graph::cycle(2).is_err());
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(
            Graph::new(3, [(1, 4)]),
            Err(Error::InvalidVertex { vertex: 4, n: 3 })
        );
    }

    #[test]
    fn minimal_covers_of_small_cycles() {
        let c3 = Graph::cycle(3).unwrap();
        let expected: BTreeSet<Vec<usize>> =
            [vec![1, 2], vec![1, 3], vec![2, 3]].into_iter().collect();
        assert_eq!(sets(&c3.minimal_vertex_covers().unwrap()), expected);
        assert_eq!(
            sets(&c3.minimal_vertex_covers().unwrap()),
            sets(&brute_force_minimal_covers(&c3))
        );

        let c5 = Graph::cycle(5).unwrap();
        let expected: BTreeSet<Vec<usize>> = [
            vec![1, 2, 4],
            vec![2, 3, 5],
            vec![1, 3, 4],
            vec![2, 4, 5],
            vec![1, 3, 5],
        ]
        .into_iter()
        .collect();
        assert_eq!(sets(&c5.minimal_vertex_covers().unwrap()), expected);

        let empty = Graph::edgeless(3).unwrap();
        assert_eq!(empty.minimal_vertex_covers().unwrap(), vec![0]);
        assert_eq!(empty.cover_ideal().unwrap(), MonomialIdeal::unit(3));
    }

    #[test]
    fn cover_and_edge_ideals() {
        let c3 = Graph::cycle(3).unwrap();
        let j = MonomialIdeal::from_exponents(3, vec![vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]])
            .unwrap();
        assert_eq!(c3.cover_ideal().unwrap(), j);

        let j5 = Graph::cycle(5).unwrap().cover_ideal().unwrap();
        assert_eq!(j5.len(), 5);
        assert!(j5.is_equigenerated());
        assert_eq!(j5.deg_max().unwrap(), 3);

        let c4 = Graph::cycle(4).unwrap();
        let e = MonomialIdeal::from_text("x1*x2\nx2*x3\nx3*x4\nx1*x4", Some(4)).unwrap();
        assert_eq!(c4.edge_ideal(), e);
    }

    #[test]
    fn independence_complexes() {
        let c3 = Graph::cycle(3).unwrap().independence_complex().unwrap();
        assert_eq!(c3.facets(), vec![vec![1], vec![2], vec![3]]);
        let c5 = Graph::cycle(5).unwrap().independence_complex().unwrap();
        assert_eq!(c5.facets().len(), 5);
        assert!(c5.facets().iter().all(|f| f.len() == 2));
        let e3 = Graph::edgeless(3).unwrap().independence_complex().unwrap();
        assert_eq!(e3.facets(), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn predicates() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(c5.is_unmixed().unwrap());
        assert!(!Graph::cycle(9).unwrap().is_unmixed().unwrap());
        assert!(c5.is_cactus());
        assert!(!Graph::complete(4).unwrap().is_cactus());
        assert_eq!(c5.whisker().unwrap().girth(), 5);
        assert_eq!(Graph::path(5).unwrap().girth(), 0);
        assert_eq!(Graph::complete(4).unwrap().girth(), 3);
        assert!(Graph::cycle(6).unwrap().is_bipartite());
        assert!(!c5.is_bipartite());
        assert!(!Graph::cycle(4).unwrap().is_chordal());
        assert!(Graph::complete(5).unwrap().is_chordal());
        assert!(Graph::new(4, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)])
            .unwrap()
            .is_chordal());
        // two triangles sharing a vertex: cactus; sharing an edge: not
        let bowtie = Graph::new(5, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(bowtie.is_cactus());
        let diamond = Graph::new(4, [(1, 2), (2, 3), (1, 3), (2, 4), (3, 4)]).unwrap();
        assert!(!diamond.is_cactus());
        assert!(Graph::path(4).unwrap().is_connected());
        assert!(!Graph::edgeless(2).unwrap().is_connected());
    }

    #[test]
    fn whiskering() {
        let k2 = Graph::complete(2).unwrap();
        let tri = k2
            .clique_whisker(&CliquePartition::new(vec![vec![1, 2]]))
            .unwrap();
        assert_eq!(tri, Graph::cycle(3).unwrap());

        let w = Graph::cycle(5).unwrap().whisker().unwrap();
        assert_eq!((w.n(), w.num_edges()), (10, 10));

        let p3 = Graph::path(3).unwrap();
        let w = p3
            .clique_whisker(&CliquePartition::new(vec![vec![1, 2], vec![3]]))
            .unwrap();
        assert_eq!(w.n(), 5);
        assert_eq!(w.edges(), vec![(1, 2), (1, 4), (2, 3), (2, 4), (3, 5)]);

        assert_eq!(
            p3.clique_whisker(&CliquePartition::new(vec![vec![1, 3], vec![2]])),
            Err(Error::NotAClique(vec![1, 3]))
        );
        assert!(p3
            .clique_whisker(&CliquePartition::new(vec![vec![1, 2]]))
            .is_err());
    }

    #[test]
    fn graph_formats() {
        let g = Graph::path(3).unwrap();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"n":3,"edges":[[1,2],[2,3]]}"#);
        assert_eq!(serde_json::from_str::<Graph>(&json).unwrap(), g);
        assert_eq!(Graph::from_edge_list(&g.to_edge_list()).unwrap(), g);
        assert_eq!(Graph::from_edge_list("1 2\n2 3\n").unwrap(), g);
    }

    #[test]
    fn cover_cap_is_enforced() {
        let limits = Limits {
            cover_vertices: 4,
            ..Limits::default()
        };
        assert!(matches!(
            Graph::cycle(5).unwrap().minimal_vertex_covers_with(&limits),
            Err(Error::CapExceeded { .. })
        ));
    }
}
