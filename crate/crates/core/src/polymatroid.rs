//! Weak polymatroidality under a fixed order and by exhaustive order search,
//! linear quotients, and the implication experiments built on them.
//!
//! `I` is weakly polymatroidal under `x_{σ(0)} > x_{σ(1)} > …` when for all
//! `u, v ∈ G(I)` agreeing above rank `q` with `deg_q u < deg_q v` there is a
//! lower-ranked `p` with `x_p | u` and `x_q u / x_p ∈ G(I)`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::complex::{SimplicialComplex, VdMemo};
use crate::enumerate::connected_graphs;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monomial::{Monomial, MonomialIdeal, VariableOrder};
use crate::Limits;

/// `w = x_q u / x_p`, repairing the deficit of `u` at variable `q`.
/// Variables are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WpWitness {
    pub u: Monomial,
    pub q: usize,
    pub p: usize,
    pub w: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WpCertificate {
    pub order: VariableOrder,
    pub witnesses: Vec<WpWitness>,
}

impl WpCertificate {
    /// Re-checks every witness against `G(I)` and the order.
    pub fn verify(&self, ideal: &MonomialIdeal) -> bool {
        self.witnesses.iter().all(|wt| {
            self.order.rank_of(wt.p) > self.order.rank_of(wt.q)
                && ideal.is_generator(&wt.u)
                && ideal.is_generator(&wt.w)
                && wt
                    .u
                    .times_var(wt.q)
                    .ok()
                    .and_then(|m| m.div_var(wt.p))
                    .as_ref()
                    == Some(&wt.w)
        })
    }
}

/// `u, v ∈ G(I)` agree above rank of `q`, `deg_q u < deg_q v`, and no
/// admissible `p` exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WpViolation {
    pub order: VariableOrder,
    pub u: Monomial,
    pub v: Monomial,
    pub q: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "outcome")]
pub enum WpOutcome {
    WeaklyPolymatroidal(WpCertificate),
    Violation(WpViolation),
}

impl WpOutcome {
    pub fn is_wp(&self) -> bool {
        matches!(self, WpOutcome::WeaklyPolymatroidal(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "outcome")]
pub enum WpSearch {
    Found {
        order: VariableOrder,
        certificate: WpCertificate,
    },
    Exhausted,
}

impl WpSearch {
    pub fn order(&self) -> Option<&VariableOrder> {
        match self {
            WpSearch::Found { order, .. } => Some(order),
            WpSearch::Exhausted => None,
        }
    }
}

/// Lowest-ranked admissible exchange for the deficit of `u` at `q`, scanning
/// candidate `p` from the highest rank below `q` downward.
fn witness(
    ideal: &MonomialIdeal,
    u: &Monomial,
    q: usize,
    candidates: impl Iterator<Item = usize>,
) -> Option<(usize, Monomial)> {
    let up = u.times_var(q).ok()?;
    candidates.filter(|&p| u.exponent(p) > 0).find_map(|p| {
        let w = up.div_var(p)?;
        ideal.is_generator(&w).then_some((p, w))
    })
}

/// Every `(u, q)` where `u` has a deficit at `q` against some `v`, with one
/// such `v`. Generators are grouped by common prefix under the order.
fn deficits(ideal: &MonomialIdeal, order: &VariableOrder) -> Vec<(usize, usize, usize)> {
    let gens = ideal.generators();
    let n = order.len();
    let mut idx: Vec<usize> = (0..gens.len()).collect();
    let key = |g: usize, r: usize| gens[g].exponent(order.variable_at(r));
    idx.sort_by(|&a, &b| (0..n).map(|r| key(a, r)).cmp((0..n).map(|r| key(b, r))));
    let mut out = Vec::new();
    let mut stack = vec![(0usize, idx.len(), 0usize)];
    while let Some((lo, hi, r)) = stack.pop() {
        if hi - lo < 2 || r == n {
            continue;
        }
        let mut runs = Vec::new();
        let mut start = lo;
        for i in lo + 1..=hi {
            if i == hi || key(idx[i], r) != key(idx[start], r) {
                runs.push((start, i));
                start = i;
            }
        }
        if runs.len() > 1 {
            let bigger = idx[runs.last().expect("nonempty").0];
            for &(a, b) in &runs[..runs.len() - 1] {
                for &u in &idx[a..b] {
                    out.push((u, r, bigger));
                }
            }
        }
        for (a, b) in runs.into_iter().rev() {
            stack.push((a, b, r + 1));
        }
    }
    out.sort_unstable();
    out
}

/// Evaluates the exchange condition verbatim under `order`.
pub fn is_weakly_polymatroidal(ideal: &MonomialIdeal, order: &VariableOrder) -> Result<WpOutcome> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if order.len() != ideal.ambient() {
        return Err(Error::InvalidOrder(format!(
            "order on {} variables for an ideal in {}",
            order.len(),
            ideal.ambient()
        )));
    }
    let gens = ideal.generators();
    let n = order.len();
    let mut witnesses = Vec::new();
    for (u, r, v) in deficits(ideal, order) {
        let q = order.variable_at(r);
        match witness(ideal, &gens[u], q, (r + 1..n).map(|k| order.variable_at(k))) {
            Some((p, w)) => witnesses.push(WpWitness {
                u: gens[u].clone(),
                q,
                p,
                w,
            }),
            None => {
                return Ok(WpOutcome::Violation(WpViolation {
                    order: order.clone(),
                    u: gens[u].clone(),
                    v: gens[v].clone(),
                    q,
                }))
            }
        }
    }
    Ok(WpOutcome::WeaklyPolymatroidal(WpCertificate {
        order: order.clone(),
        witnesses,
    }))
}

pub fn find_wp_order(ideal: &MonomialIdeal) -> Result<WpSearch> {
    find_wp_order_with(ideal, &Limits::default())
}

/// Depth-first search over rank assignments, greatest rank first. Placing a
/// variable at rank `r` settles every deficit at `r`, and its admissible
/// witnesses are exactly the variables not yet placed, so a failing prefix
/// is pruned exactly. The failing sets of placed variables are memoized.
/// Candidates are tried in ascending order, so the reported order is the
/// lexicographically least WP order.
pub fn find_wp_order_with(ideal: &MonomialIdeal, limits: &Limits) -> Result<WpSearch> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = ideal.ambient();
    if n > limits.wp_search_ambient {
        return Err(Error::CapExceeded {
            what: "weak-polymatroid search variables",
            limit: limits.wp_search_ambient,
            actual: n,
        });
    }
    let mut search = OrderSearch {
        ideal,
        n,
        dead: HashSet::new(),
        ranking: Vec::with_capacity(n),
    };
    let classes = vec![(0..ideal.len()).collect::<Vec<_>>()];
    if search.extend(0, classes) {
        let order = VariableOrder::new(search.ranking).expect("a permutation");
        match is_weakly_polymatroidal(ideal, &order)? {
            WpOutcome::WeaklyPolymatroidal(certificate) => {
                Ok(WpSearch::Found { order, certificate })
            }
            WpOutcome::Violation(_) => unreachable!("search accepted a violating order"),
        }
    } else {
        Ok(WpSearch::Exhausted)
    }
}

struct OrderSearch<'a> {
    ideal: &'a MonomialIdeal,
    n: usize,
    dead: HashSet<u64>,
    ranking: Vec<usize>,
}

impl OrderSearch<'_> {
    fn extend(&mut self, placed: u64, classes: Vec<Vec<usize>>) -> bool {
        if classes.iter().all(|c| c.len() < 2) {
            self.ranking
                .extend((0..self.n).filter(|v| placed & (1 << v) == 0));
            return true;
        }
        if self.dead.contains(&placed) {
            return false;
        }
        let gens = self.ideal.generators();
        for x in 0..self.n {
            if placed & (1 << x) != 0 {
                continue;
            }
            let now = placed | (1 << x);
            let lower: Vec<usize> = (0..self.n).filter(|v| now & (1 << v) == 0).collect();
            let mut refined = Vec::new();
            let mut ok = true;
            'classes: for class in &classes {
                let mut split: Vec<(u32, Vec<usize>)> = Vec::new();
                for &g in class {
                    let e = gens[g].exponent(x);
                    match split.iter_mut().find(|(k, _)| *k == e) {
                        Some((_, members)) => members.push(g),
                        None => split.push((e, vec![g])),
                    }
                }
                let top = split.iter().map(|(k, _)| *k).max().expect("nonempty class");
                for (k, members) in &split {
                    if *k == top {
                        continue;
                    }
                    for &g in members {
                        if witness(self.ideal, &gens[g], x, lower.iter().copied()).is_none() {
                            ok = false;
                            break 'classes;
                        }
                    }
                }
                refined.extend(split.into_iter().map(|(_, m)| m).filter(|m| m.len() > 1));
            }
            if !ok {
                continue;
            }
            self.ranking.push(x);
            if self.extend(now, refined) {
                return true;
            }
            self.ranking.pop();
        }
        self.dead.insert(placed);
        false
    }
}

/// Colon ideal `(u_1, …, u_{j-1}) : u_j` is generated by variables iff every
/// `u_k : u_j` is divisible by a variable that is itself some `u_l : u_j`.
fn colon_is_linear(earlier: &[&Monomial], u: &Monomial) -> bool {
    let quotients: Vec<Monomial> = earlier.iter().map(|k| k.colon_unchecked(u)).collect();
    let linear: Vec<usize> = quotients
        .iter()
        .filter(|q| q.degree() == 1)
        .map(|q| q.support().next().expect("degree one"))
        .collect();
    quotients
        .iter()
        .all(|q| linear.iter().any(|&x| q.exponent(x) > 0))
}

/// Whether `order` (a permutation of `G(I)`) is a linear-quotient order.
pub fn is_linear_quotient_order(order: &[Monomial]) -> bool {
    (1..order.len()).all(|j| {
        let earlier: Vec<&Monomial> = order[..j].iter().collect();
        colon_is_linear(&earlier, &order[j])
    })
}

pub fn has_linear_quotients(ideal: &MonomialIdeal) -> Result<Option<Vec<Monomial>>> {
    has_linear_quotients_with(ideal, &Limits::default())
}

/// Backtracking over degree-nondecreasing generator orders, which suffice
/// for linear quotients. Dead sets of placed generators are memoized.
pub fn has_linear_quotients_with(
    ideal: &MonomialIdeal,
    limits: &Limits,
) -> Result<Option<Vec<Monomial>>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let m = ideal.len();
    if m > limits.linear_quotient_generators {
        return Err(Error::CapExceeded {
            what: "linear-quotient generators",
            limit: limits.linear_quotient_generators,
            actual: m,
        });
    }
    let gens = ideal.generators();
    let mut search = QuotientSearch {
        gens,
        placed: vec![false; m],
        order: Vec::with_capacity(m),
        dead: HashSet::new(),
    };
    Ok(search
        .extend()
        .then(|| search.order.iter().map(|&i| gens[i].clone()).collect()))
}

struct QuotientSearch<'a> {
    gens: &'a [Monomial],
    placed: Vec<bool>,
    order: Vec<usize>,
    dead: HashSet<Vec<bool>>,
}

impl QuotientSearch<'_> {
    fn extend(&mut self) -> bool {
        if self.order.len() == self.gens.len() {
            return true;
        }
        if self.dead.contains(&self.placed) {
            return false;
        }
        let min_degree = (0..self.gens.len())
            .filter(|&i| !self.placed[i])
            .map(|i| self.gens[i].degree())
            .min()
            .expect("some generator left");
        let earlier: Vec<&Monomial> = self.order.iter().map(|&i| &self.gens[i]).collect();
        let candidates: Vec<usize> = (0..self.gens.len())
            .filter(|&i| !self.placed[i] && self.gens[i].degree() == min_degree)
            .filter(|&i| colon_is_linear(&earlier, &self.gens[i]))
            .collect();
        for i in candidates {
            self.placed[i] = true;
            self.order.push(i);
            if self.extend() {
                return true;
            }
            self.order.pop();
            self.placed[i] = false;
        }
        self.dead.insert(self.placed.clone());
        false
    }
}

/// One ideal of the implication experiment. `vertex_decomposable` and
/// `linear_quotients` are evaluated only when a WP order exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplicationRow {
    pub ideal: MonomialIdeal,
    pub wp_order: Option<VariableOrder>,
    pub vertex_decomposable: Option<bool>,
    pub linear_quotients: Option<bool>,
}

impl ImplicationRow {
    pub fn vdec_counterexample(&self) -> bool {
        self.vertex_decomposable == Some(false)
    }

    pub fn linear_quotient_counterexample(&self) -> bool {
        self.linear_quotients == Some(false)
    }
}

/// For each squarefree `I` with a WP order, checks that the complex `Δ` with
/// `I = I_Δ^∨` is vertex decomposable and that `I` has linear quotients.
pub fn wp_implies_vdec_experiment(
    corpus: &[MonomialIdeal],
    limits: &Limits,
) -> Result<Vec<ImplicationRow>> {
    let memo = VdMemo::new();
    corpus
        .iter()
        .map(|ideal| {
            if !ideal.is_squarefree() {
                return Err(Error::NotSquarefree);
            }
            let order = find_wp_order_with(ideal, limits)?.order().cloned();
            let (vd, lq) = if order.is_some() {
                let delta = SimplicialComplex::from_dual_ideal(ideal)?;
                let vd = memo.check(&delta)?.is_some();
                let lq = has_linear_quotients_with(ideal, limits)?.is_some();
                (Some(vd), Some(lq))
            } else {
                (None, None)
            };
            Ok(ImplicationRow {
                ideal: ideal.clone(),
                wp_order: order,
                vertex_decomposable: vd,
                linear_quotients: lq,
            })
        })
        .collect()
}

/// Unmixed, vertex-decomposable connected graph and the outcome of the WP
/// order search on its cover ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub graph: Graph,
    pub wp_order: Option<VariableOrder>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub max_n: usize,
    pub graphs_checked: usize,
    pub rows: Vec<ScanRow>,
}

impl ScanReport {
    /// Graphs whose order search was exhausted.
    pub fn exhausted(&self) -> impl Iterator<Item = &Graph> {
        self.rows
            .iter()
            .filter(|r| r.wp_order.is_none())
            .map(|r| &r.graph)
    }
}

const MAX_SCAN_VERTICES: usize = 8;

/// Scans connected graphs on up to `max_n` vertices, up to isomorphism, for
/// unmixed vertex-decomposable graphs whose cover ideal has no WP order.
pub fn conjecture_scan(max_n: usize, limits: &Limits) -> Result<ScanReport> {
    if max_n > MAX_SCAN_VERTICES {
        return Err(Error::CapExceeded {
            what: "scan vertices",
            limit: MAX_SCAN_VERTICES,
            actual: max_n,
        });
    }
    let memo = VdMemo::new();
    let mut graphs_checked = 0;
    let mut rows = Vec::new();
    for n in 1..=max_n {
        for g in connected_graphs(n)? {
            graphs_checked += 1;
            if !g.is_unmixed()? {
                continue;
            }
            if memo.check(&g.independence_complex()?)?.is_none() {
                continue;
            }
            let order = find_wp_order_with(&g.cover_ideal()?, limits)?
                .order()
                .cloned();
            rows.push(ScanRow {
                graph: g,
                wp_order: order,
            });
        }
    }
    Ok(ScanReport {
        max_n,
        graphs_checked,
        rows,
    })
}
