//! Connected graphs up to isomorphism via canonical adjacency forms.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_CANONICAL_VERTICES: usize = 10;

/// Colour refinement from vertex degrees to a stable partition. Colours are
/// ranks of sorted signatures, so the result is isomorphism invariant.
fn refined_colours(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(|a| a.count_ones() as usize).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&w| adj[v] & (1 << w) != 0)
                    .map(|w| colour[w])
                    .collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        let classes = |c: &[usize]| c.iter().collect::<HashSet<_>>().len();
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

struct Canon<'a> {
    adj: &'a [u64],
    colour: Vec<usize>,
    // colour required at each position: positions are filled in ascending
    // colour order
    sequence: Vec<usize>,
    placed: Vec<usize>,
    rows: Vec<u64>,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Canon<'_> {
    /// Row `i` of the relabelled adjacency restricted to earlier positions.
    fn row(&self, v: usize) -> u64 {
        self.placed
            .iter()
            .enumerate()
            .filter(|&(_, &w)| self.adj[v] & (1 << w) != 0)
            .fold(0u64, |r, (j, _)| r | (1 << j))
    }

    fn search(&mut self, used: u64) {
        let i = self.placed.len();
        if i == self.adj.len() {
            let better = match &self.best {
                None => true,
                Some((rows, _)) => self.rows > *rows,
            };
            if better {
                self.best = Some((self.rows.clone(), self.placed.clone()));
            }
            return;
        }
        for v in 0..self.adj.len() {
            if used & (1 << v) != 0 || self.colour[v] != self.sequence[i] {
                continue;
            }
            let r = self.row(v);
            if let Some((best, _)) = &self.best {
                // lexicographically larger row sequences win; prune prefixes
                // already below the best
                let mut prefix = self.rows.clone();
                prefix.push(r);
                if prefix[..] < best[..=i] {
                    continue;
                }
            }
            self.placed.push(v);
            self.rows.push(r);
            self.search(used | (1 << v));
            self.rows.pop();
            self.placed.pop();
        }
    }
}

/// Relabelling of `G` with lexicographically greatest adjacency rows among
/// the colour-respecting orderings. Isomorphic graphs map to equal graphs.
pub fn canonical_form(graph: &Graph) -> Graph {
    let adj = graph.adjacency();
    let n = adj.len();
    assert!(
        n <= MAX_CANONICAL_VERTICES,
        "canonical form limited to {MAX_CANONICAL_VERTICES} vertices"
    );
    let colour = refined_colours(adj);
    let mut sequence = colour.clone();
    sequence.sort_unstable();
    let mut canon = Canon {
        adj,
        colour,
        sequence,
        placed: Vec::with_capacity(n),
        rows: Vec::with_capacity(n),
        best: None,
    };
    canon.search(0);
    let (_, order) = canon.best.expect("some ordering exists");
    // vertex order[i] becomes position i
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    graph.relabel(&perm)
}

/// Connected graphs on `n` vertices, one per isomorphism class, in canonical
/// form and sorted by edge count then adjacency.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_CANONICAL_VERTICES {
        return Err(Error::CapExceeded {
            what: "enumerated graph vertices",
            limit: MAX_CANONICAL_VERTICES,
            actual: n,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::edgeless(1)?];
    for k in 2..=n {
        let mut seen = HashSet::new();
        for g in &level {
            let edges = g.edges();
            for mask in 1u64..(1 << (k - 1)) {
                let mut e = edges.clone();
                e.extend(
                    (1..k)
                        .filter(|v| mask & (1 << (v - 1)) != 0)
                        .map(|v| (v, k)),
                );
                seen.insert(canonical_form(&Graph::new(k, e)?));
            }
        }
        level = seen.into_iter().collect();
        level.sort_by_key(|g| (g.num_edges(), g.edges()));
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn canonical_form_is_invariant() {
        let graphs = [
            Graph::cycle(5).unwrap(),
            Graph::path(5).unwrap(),
            Graph::star(5).unwrap(),
            Graph::new(5, [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5)]).unwrap(),
            Graph::cycle(6).unwrap(),
        ];
        for g in &graphs {
            let c = canonical_form(g);
            for p in permutations(g.n()).into_iter().step_by(11) {
                assert_eq!(canonical_form(&g.relabel(&p)), c);
            }
        }
        assert_ne!(canonical_form(&graphs[0]), canonical_form(&graphs[1]));
    }

    #[test]
    fn regular_graphs_are_separated() {
        // C6 and two disjoint triangles are both 2-regular
        let c6 = Graph::cycle(6).unwrap();
        let tt = Graph::new(6, [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)]).unwrap();
        assert_ne!(canonical_form(&c6), canonical_form(&tt));
    }

    #[test]
    fn connected_graph_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        assert!(connected_graphs(4).unwrap().iter().all(Graph::is_connected));
        assert!(connected_graphs(0).unwrap().is_empty());
    }
}
