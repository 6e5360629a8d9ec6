use std::fmt;

use num::rational::BigRational;

use crate::error::{Error, Result};
use crate::factoring::Factoring;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Default cap for the simultaneous-domination and transversal solvers.
pub const EXACT_CAP: usize = 32;
/// Default cap for the degree-bounded cover/independence solvers with t ≥ 1.
pub const BOUNDED_DEGREE_CAP: usize = 24;

/// Which procedure produced an SD-set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodKind {
    Exact,
    Greedy,
    Cover,
    Hypergraph,
    KrTransversal,
    PairMatching,
    KrInductive,
    KrPairing,
    OneFactors,
    CyclePair,
    CyclesInductive,
    C4Three,
    C5Inductive,
}

impl MethodKind {
    pub fn label(self) -> &'static str {
        match self {
            MethodKind::Exact => "exact",
            MethodKind::Greedy => "greedy",
            MethodKind::Cover => "cover",
            MethodKind::Hypergraph => "hypergraph",
            MethodKind::KrTransversal => "kr_transversal",
            MethodKind::PairMatching => "pair_matching",
            MethodKind::KrInductive => "kr_inductive",
            MethodKind::KrPairing => "kr_pairing",
            MethodKind::OneFactors => "one_factors",
            MethodKind::CyclePair => "cycle_pair",
            MethodKind::CyclesInductive => "cycles_inductive",
            MethodKind::C4Three => "c4_three",
            MethodKind::C5Inductive => "c5_inductive",
        }
    }
}

impl fmt::Display for MethodKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The size bound the producing method claims for its result, as an exact
/// rational. `proven` is false when the bound was only checked a posteriori.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundContext {
    pub label: String,
    pub value: BigRational,
    pub proven: bool,
}

/// An SD-set together with how it was obtained and per-factor verification.
#[derive(Clone, Debug)]
pub struct SDResult {
    pub set: VertexSet,
    pub method: MethodKind,
    /// Which internal path produced the set, when a method has several.
    pub detail: Option<String>,
    pub per_factor_ok: Vec<bool>,
    pub bound_context: Option<BoundContext>,
}

impl SDResult {
    /// Build a result, verifying the set against every factor.
    pub fn verified(f: &Factoring, set: VertexSet, method: MethodKind) -> SDResult {
        let per_factor_ok = f
            .factors()
            .iter()
            .map(|g| is_dominating_set(g, &set))
            .collect();
        SDResult {
            set,
            method,
            detail: None,
            per_factor_ok,
            bound_context: None,
        }
    }

    pub fn with_bound(
        mut self,
        label: impl Into<String>,
        value: BigRational,
        proven: bool,
    ) -> Self {
        self.bound_context = Some(BoundContext {
            label: label.into(),
            value,
            proven,
        });
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn size(&self) -> usize {
        self.set.len()
    }

    pub fn all_factors_dominated(&self) -> bool {
        self.per_factor_ok.iter().all(|&ok| ok)
    }
}

pub fn is_dominating_set(g: &Graph, s: &VertexSet) -> bool {
    (0..g.n()).all(|v| s.contains(v) || g.neighbors(v).iter().any(|&u| s.contains(u)))
}

pub fn is_sd_set(f: &Factoring, s: &VertexSet) -> bool {
    f.factors().iter().all(|g| is_dominating_set(g, s))
}

/// Branch-and-bound solver for simultaneous domination over any number of
/// graphs on a common vertex set (one graph = ordinary domination).
///
/// Branches on the lowest-index vertex still undominated in some graph,
/// over its closed neighborhood in the graph where that neighborhood is
/// smallest; sibling branches exclude earlier candidates, so subtrees
/// partition the search space. Pruning uses, per graph, a greedy packing of
/// undominated vertices with disjoint candidate sets.
struct MultiDomSearch<'a> {
    n: usize,
    graphs: &'a [&'a Graph],
    closed: Vec<Vec<VertexSet>>,
    best: Option<VertexSet>,
    cutoff: usize,
    floor: usize,
    done: bool,
}

impl<'a> MultiDomSearch<'a> {
    fn new(graphs: &'a [&'a Graph]) -> Self {
        let n = graphs[0].n();
        let closed = graphs
            .iter()
            .map(|g| (0..n).map(|v| g.closed_neighborhood(v)).collect())
            .collect();
        MultiDomSearch {
            n,
            graphs,
            closed,
            best: None,
            cutoff: n + 1,
            floor: 0,
            done: false,
        }
    }

    fn current_cutoff(&self) -> usize {
        self.best.as_ref().map_or(self.cutoff, VertexSet::len)
    }

    fn solve(mut self, forced: &VertexSet) -> Option<VertexSet> {
        let mut dominated: Vec<VertexSet> = vec![VertexSet::new(self.n); self.graphs.len()];
        for v in forced.iter() {
            for (i, dom) in dominated.iter_mut().enumerate() {
                dom.union_with(&self.closed[i][v]);
            }
        }
        let forbidden = VertexSet::new(self.n);
        self.recurse(forced, &dominated, &forbidden);
        self.best
    }

    /// None signals an undominated vertex with no allowed dominator.
    fn packing_bound(&self, dominated: &[VertexSet], forbidden: &VertexSet) -> Option<usize> {
        let mut bound = 0;
        for (i, dom) in dominated.iter().enumerate() {
            let mut used = VertexSet::new(self.n);
            let mut count = 0;
            for v in 0..self.n {
                if dom.contains(v) {
                    continue;
                }
                let mut allowed = self.closed[i][v].clone();
                allowed.difference_with(forbidden);
                if allowed.is_empty() {
                    return None;
                }
                if allowed.is_disjoint_from(&used) {
                    used.union_with(&allowed);
                    count += 1;
                }
            }
            bound = bound.max(count);
        }
        Some(bound)
    }

    fn recurse(&mut self, current: &VertexSet, dominated: &[VertexSet], forbidden: &VertexSet) {
        if self.done {
            return;
        }
        // lowest-index undominated vertex; among the graphs missing it, the
        // one with the smallest closed neighborhood (lowest index on ties)
        let mut target: Option<(usize, usize)> = None;
        'scan: for v in 0..self.n {
            let mut pick: Option<usize> = None;
            for (i, dom) in dominated.iter().enumerate() {
                if !dom.contains(v) {
                    let better = match pick {
                        None => true,
                        Some(j) => self.closed[i][v].len() < self.closed[j][v].len(),
                    };
                    if better {
                        pick = Some(i);
                    }
                }
            }
            if let Some(i) = pick {
                target = Some((v, i));
                break 'scan;
            }
        }
        let Some((v, fi)) = target else {
            if current.len() < self.current_cutoff() {
                self.best = Some(current.clone());
                if current.len() <= self.floor {
                    self.done = true;
                }
            }
            return;
        };
        let Some(lb) = self.packing_bound(dominated, forbidden) else {
            return;
        };
        if current.len() + lb >= self.current_cutoff() {
            return;
        }
        let mut candidates = self.closed[fi][v].clone();
        candidates.difference_with(forbidden);
        let mut excluded = forbidden.clone();
        for u in candidates.iter() {
            let mut next = current.clone();
            next.insert(u);
            let mut dom_next = dominated.to_vec();
            for (i, dom) in dom_next.iter_mut().enumerate() {
                dom.union_with(&self.closed[i][u]);
            }
            self.recurse(&next, &dom_next, &excluded);
            if self.done {
                return;
            }
            excluded.insert(u);
        }
    }
}

/// Vertices that are isolated in at least one graph; they belong to every
/// SD-set since nothing else can dominate them there.
fn forced_vertices(graphs: &[&Graph]) -> VertexSet {
    let n = graphs[0].n();
    let mut forced = VertexSet::new(n);
    for g in graphs {
        for v in 0..n {
            if g.degree(v) == 0 {
                forced.insert(v);
            }
        }
    }
    forced
}

fn solve_multi(graphs: &[&Graph], floor: usize) -> (usize, VertexSet) {
    let n = graphs[0].n();
    if n == 0 {
        return (0, VertexSet::new(0));
    }
    let greedy = crate::constructive::greedy_multi(graphs);
    let mut search = MultiDomSearch::new(graphs);
    search.floor = floor;
    search.best = Some(greedy);
    if search.current_cutoff() <= floor {
        let best = search.best.unwrap();
        return (best.len(), best);
    }
    let forced = forced_vertices(graphs);
    let best = search
        .solve(&forced)
        .expect("seeded with a valid incumbent");
    (best.len(), best)
}

pub fn domination_number(g: &Graph) -> (usize, VertexSet) {
    let floor = if g.n() == 0 {
        0
    } else {
        // every vertex dominates at most Δ+1 vertices
        g.n().div_ceil(g.max_degree() + 1)
    };
    let (size, set) = solve_multi(&[g], floor);
    debug_assert!(is_dominating_set(g, &set));
    (size, set)
}

pub fn sd_number_exact(f: &Factoring) -> Result<SDResult> {
    sd_number_exact_capped(f, EXACT_CAP)
}

pub fn sd_number_exact_capped(f: &Factoring, cap: usize) -> Result<SDResult> {
    let n = f.n();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let graphs: Vec<&Graph> = f.factors().iter().collect();
    // Obs. 1 floor: no SD-set is smaller than the largest single-factor
    // domination number
    let floor = graphs
        .iter()
        .map(|g| domination_number(g).0)
        .max()
        .unwrap_or(0);
    let (size, set) = solve_multi(&graphs, floor);
    debug_assert!(size >= floor);
    debug_assert!(is_sd_set(f, &set));
    let result = SDResult::verified(f, set, MethodKind::Exact);
    debug_assert!(result.all_factors_dominated());
    debug_assert_eq!(result.size(), size);
    Ok(result)
}

/// A dominating set of minimum size γ(g) containing v, when one exists.
pub fn min_dominating_set_containing(g: &Graph, v: usize) -> Option<VertexSet> {
    let (gamma, _) = domination_number(g);
    let mut search = MultiDomSearch::new(std::slice::from_ref(&g));
    search.cutoff = gamma + 1;
    search.floor = gamma;
    let mut forced = forced_vertices(&[g]);
    forced.insert(v);
    if forced.len() > gamma {
        return None;
    }
    let best = search.solve(&forced)?;
    debug_assert_eq!(best.len(), gamma);
    debug_assert!(best.contains(v));
    debug_assert!(is_dominating_set(g, &best));
    Some(best)
}

pub fn is_one_extendable_dominated(g: &Graph) -> bool {
    first_non_extendable_vertex(g).is_none()
}

/// Lowest vertex lying in no minimum dominating set, if any.
pub fn first_non_extendable_vertex(g: &Graph) -> Option<usize> {
    (0..g.n()).find(|&v| min_dominating_set_containing(g, v).is_none())
}

/// Branch-and-bound transversal solver, same scheme as the domination
/// search: branch over the lowest-index unhit edge, prune by disjoint unhit
/// edges.
struct TransversalSearch<'a> {
    n: usize,
    edges: &'a [VertexSet],
    best: Option<VertexSet>,
    done: bool,
}

impl<'a> TransversalSearch<'a> {
    fn packing_bound(&self, hit: &[bool], forbidden: &VertexSet) -> Option<usize> {
        let mut used = VertexSet::new(self.n);
        let mut count = 0;
        for (e, &h) in self.edges.iter().zip(hit) {
            if h {
                continue;
            }
            let mut allowed = e.clone();
            allowed.difference_with(forbidden);
            if allowed.is_empty() {
                return None;
            }
            if allowed.is_disjoint_from(&used) {
                used.union_with(&allowed);
                count += 1;
            }
        }
        Some(count)
    }

    fn recurse(&mut self, current: &VertexSet, hit: &[bool], forbidden: &VertexSet) {
        if self.done {
            return;
        }
        let Some(target) = hit.iter().position(|&h| !h) else {
            let better = self.best.as_ref().is_none_or(|b| current.len() < b.len());
            if better {
                self.best = Some(current.clone());
                if current.len() <= 1 {
                    self.done = true;
                }
            }
            return;
        };
        let Some(lb) = self.packing_bound(hit, forbidden) else {
            return;
        };
        let cutoff = self.best.as_ref().map_or(usize::MAX, VertexSet::len);
        if current.len() + lb >= cutoff {
            return;
        }
        let mut candidates = self.edges[target].clone();
        candidates.difference_with(forbidden);
        let mut excluded = forbidden.clone();
        for u in candidates.iter() {
            let mut next = current.clone();
            next.insert(u);
            let hit_next: Vec<bool> = self
                .edges
                .iter()
                .zip(hit)
                .map(|(e, &h)| h || e.contains(u))
                .collect();
            self.recurse(&next, &hit_next, &excluded);
            if self.done {
                return;
            }
            excluded.insert(u);
        }
    }
}

fn greedy_transversal(h: &Hypergraph) -> VertexSet {
    let n = h.n();
    let mut set = VertexSet::new(n);
    let mut hit = vec![false; h.m()];
    while hit.iter().any(|&x| !x) {
        let (v, _) = (0..n)
            .map(|v| {
                let covers = h
                    .edges()
                    .iter()
                    .zip(&hit)
                    .filter(|(e, &h)| !h && e.contains(v))
                    .count();
                (v, covers)
            })
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .expect("nonempty vertex range");
        set.insert(v);
        for (e, flag) in h.edges().iter().zip(hit.iter_mut()) {
            if e.contains(v) {
                *flag = true;
            }
        }
    }
    set
}

pub fn transversal_number_exact(h: &Hypergraph) -> Result<(usize, VertexSet)> {
    transversal_number_exact_capped(h, EXACT_CAP)
}

pub fn transversal_number_exact_capped(h: &Hypergraph, cap: usize) -> Result<(usize, VertexSet)> {
    let n = h.n();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    if let Some(index) = h.edges().iter().position(VertexSet::is_empty) {
        return Err(Error::EmptyEdge { index });
    }
    if h.m() == 0 {
        return Ok((0, VertexSet::new(n)));
    }
    let mut search = TransversalSearch {
        n,
        edges: h.edges(),
        best: Some(greedy_transversal(h)),
        done: false,
    };
    let hit = vec![false; h.m()];
    search.recurse(&VertexSet::new(n), &hit, &VertexSet::new(n));
    let best = search.best.expect("seeded with a valid incumbent");
    debug_assert!(crate::hypergraph::is_transversal(h, &best));
    Ok((best.len(), best))
}

fn degree_cap(t: usize) -> usize {
    if t == 0 {
        EXACT_CAP
    } else {
        BOUNDED_DEGREE_CAP
    }
}

fn outside_degree(g: &Graph, s: &VertexSet, v: usize) -> usize {
    g.neighbors(v).iter().filter(|&&u| !s.contains(u)).count()
}

/// Minimum set whose removal leaves maximum degree at most t.
pub fn t_vertex_cover_number(g: &Graph, t: usize) -> Result<(usize, VertexSet)> {
    t_vertex_cover_number_capped(g, t, degree_cap(t))
}

pub fn t_vertex_cover_number_capped(g: &Graph, t: usize, cap: usize) -> Result<(usize, VertexSet)> {
    let n = g.n();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut search = CoverSearch {
        g,
        t,
        best: Some(greedy_t_vertex_cover(g, t)),
        done: false,
    };
    search.recurse(&VertexSet::new(n), &VertexSet::new(n));
    let best = search.best.expect("seeded with a valid incumbent");
    debug_assert!(is_t_vertex_cover(g, t, &best));
    Ok((best.len(), best))
}

pub fn is_t_vertex_cover(g: &Graph, t: usize, s: &VertexSet) -> bool {
    (0..g.n()).all(|v| s.contains(v) || outside_degree(g, s, v) <= t)
}

/// Max-degree peeling: remove the vertex of highest remaining degree until
/// the rest has maximum degree at most t. Valid but not necessarily
/// minimum.
pub fn greedy_t_vertex_cover(g: &Graph, t: usize) -> VertexSet {
    let n = g.n();
    let mut s = VertexSet::new(n);
    loop {
        let worst = (0..n)
            .filter(|&v| !s.contains(v))
            .map(|v| (outside_degree(g, &s, v), v))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        match worst {
            Some((d, v)) if d > t => s.insert(v),
            _ => return s,
        };
    }
}

struct CoverSearch<'a> {
    g: &'a Graph,
    t: usize,
    best: Option<VertexSet>,
    done: bool,
}

impl<'a> CoverSearch<'a> {
    fn violating(&self, s: &VertexSet) -> Vec<usize> {
        (0..self.g.n())
            .filter(|&v| !s.contains(v) && outside_degree(self.g, s, v) > self.t)
            .collect()
    }

    /// Candidate dominators of a violation at v: v itself or any neighbor
    /// still outside the cover.
    fn candidates(&self, s: &VertexSet, forbidden: &VertexSet, v: usize) -> VertexSet {
        let mut c = VertexSet::new(self.g.n());
        c.insert(v);
        for &u in self.g.neighbors(v) {
            if !s.contains(u) {
                c.insert(u);
            }
        }
        c.difference_with(forbidden);
        c
    }

    fn recurse(&mut self, s: &VertexSet, forbidden: &VertexSet) {
        if self.done {
            return;
        }
        let violating = self.violating(s);
        let Some(&v) = violating.first() else {
            let better = self.best.as_ref().is_none_or(|b| s.len() < b.len());
            if better {
                self.best = Some(s.clone());
                if s.is_empty() {
                    self.done = true;
                }
            }
            return;
        };
        // disjoint candidate sets of violating vertices each need a vertex
        let mut used = VertexSet::new(self.g.n());
        let mut lb = 0;
        for &w in &violating {
            let c = self.candidates(s, forbidden, w);
            if c.is_empty() {
                return;
            }
            if c.is_disjoint_from(&used) {
                used.union_with(&c);
                lb += 1;
            }
        }
        let cutoff = self.best.as_ref().map_or(usize::MAX, VertexSet::len);
        if s.len() + lb >= cutoff {
            return;
        }
        let mut excluded = forbidden.clone();
        for u in self.candidates(s, forbidden, v).iter() {
            let mut next = s.clone();
            next.insert(u);
            self.recurse(&next, &excluded);
            if self.done {
                return;
            }
            excluded.insert(u);
        }
    }
}

/// Maximum set inducing a subgraph of maximum degree at most k.
pub fn k_independence_number(g: &Graph, k: usize) -> Result<(usize, VertexSet)> {
    k_independence_number_capped(g, k, degree_cap(k))
}

pub fn k_independence_number_capped(g: &Graph, k: usize, cap: usize) -> Result<(usize, VertexSet)> {
    let n = g.n();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut search = IndependenceSearch {
        g,
        k,
        best: VertexSet::new(n),
    };
    let mut deg = vec![0usize; n];
    search.recurse(0, &VertexSet::new(n), &mut deg);
    let best = search.best;
    debug_assert!(is_k_independent(g, k, &best));
    Ok((best.len(), best))
}

pub fn is_k_independent(g: &Graph, k: usize, a: &VertexSet) -> bool {
    a.iter()
        .all(|v| g.neighbors(v).iter().filter(|&&u| a.contains(u)).count() <= k)
}

struct IndependenceSearch<'a> {
    g: &'a Graph,
    k: usize,
    best: VertexSet,
}

impl<'a> IndependenceSearch<'a> {
    fn recurse(&mut self, v: usize, a: &VertexSet, deg: &mut [usize]) {
        let n = self.g.n();
        if a.len() + (n - v) <= self.best.len() {
            return;
        }
        if v == n {
            if a.len() > self.best.len() {
                self.best = a.clone();
            }
            return;
        }
        let in_a: Vec<usize> = self
            .g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| a.contains(u))
            .collect();
        if in_a.len() <= self.k && in_a.iter().all(|&u| deg[u] < self.k) {
            let mut next = a.clone();
            next.insert(v);
            deg[v] = in_a.len();
            for &u in &in_a {
                deg[u] += 1;
            }
            self.recurse(v + 1, &next, deg);
            for &u in &in_a {
                deg[u] -= 1;
            }
            deg[v] = 0;
        }
        self.recurse(v + 1, a, deg);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star_at(n: usize, center: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n)
            .filter(|&u| u != center)
            .map(|u| (center, u))
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn dominating_set_checks() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(is_dominating_set(&c4, &VertexSet::from_indices(4, [0, 1])));
        let c5 = Graph::cycle(5).unwrap();
        assert!(!is_dominating_set(&c5, &VertexSet::from_indices(5, [0])));
        let k6 = Graph::complete(6);
        for v in 0..6 {
            assert!(is_dominating_set(&k6, &VertexSet::from_indices(6, [v])));
        }
    }

    #[test]
    fn domination_numbers() {
        assert_eq!(domination_number(&Graph::complete(7)).0, 1);
        assert_eq!(domination_number(&Graph::star(5, 0).unwrap()).0, 1);
        assert_eq!(domination_number(&Graph::cycle(5).unwrap()).0, 2);
        assert_eq!(domination_number(&Graph::cycle(4).unwrap()).0, 2);
        assert_eq!(domination_number(&Graph::path(3).unwrap()).0, 1);
        assert_eq!(domination_number(&Graph::path(7).unwrap()).0, 3);
        assert_eq!(domination_number(&Graph::empty(3)).0, 3);
        let (size, set) = domination_number(&Graph::cycle(9).unwrap());
        assert_eq!(size, 3);
        assert!(is_dominating_set(&Graph::cycle(9).unwrap(), &set));
    }

    #[test]
    fn sd_identical_factors_is_gamma() {
        let c5 = Graph::cycle(5).unwrap();
        let f = Factoring::new(vec![c5.clone(), c5.clone(), c5]).unwrap();
        assert_eq!(sd_number_exact(&f).unwrap().size(), 2);
    }

    #[test]
    fn sd_three_stars() {
        let f = Factoring::new((0..3).map(|c| star_at(8, c)).collect()).unwrap();
        let r = sd_number_exact(&f).unwrap();
        assert_eq!(r.size(), 3);
        assert_eq!(r.method, MethodKind::Exact);
        assert!(r.all_factors_dominated());
    }

    #[test]
    fn sd_isolated_vertices_forced() {
        let lonely = Graph::from_edges(4, &[(0, 1)]).unwrap(); // 2, 3 isolated
        let k4 = Graph::complete(4);
        let f = Factoring::new(vec![lonely, k4]).unwrap();
        let r = sd_number_exact(&f).unwrap();
        assert!(r.set.contains(2) && r.set.contains(3));
        assert_eq!(r.size(), 3); // {2,3} plus one of {0,1}
    }

    #[test]
    fn sd_cap_is_reported() {
        let f = Factoring::new(vec![Graph::cycle(33).unwrap()]).unwrap();
        match sd_number_exact(&f) {
            Err(Error::CapExceeded { n: 33, cap: 32 }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn restricted_domination() {
        let k4 = Graph::complete(4);
        for v in 0..4 {
            assert_eq!(
                min_dominating_set_containing(&k4, v),
                Some(VertexSet::from_indices(4, [v]))
            );
        }
        let c5 = Graph::cycle(5).unwrap();
        let s = min_dominating_set_containing(&c5, 0).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.contains(0));
        // star: leaves are in no minimum dominating set
        let star = Graph::star(5, 0).unwrap();
        assert!(min_dominating_set_containing(&star, 0).is_some());
        assert!(min_dominating_set_containing(&star, 1).is_none());
    }

    #[test]
    fn one_extendable_examples() {
        assert!(is_one_extendable_dominated(&Graph::complete(4)));
        assert!(is_one_extendable_dominated(&Graph::cycle(5).unwrap()));
        assert!(is_one_extendable_dominated(&Graph::cycle(6).unwrap()));
        assert!(is_one_extendable_dominated(&Graph::cycle(4).unwrap()));
        assert!(!is_one_extendable_dominated(&Graph::star(5, 0).unwrap()));
        assert_eq!(
            first_non_extendable_vertex(&Graph::star(5, 0).unwrap()),
            Some(1)
        );
    }

    #[test]
    fn transversal_examples() {
        let single = Hypergraph::new(5, &[vec![0, 1, 2, 3, 4]]).unwrap();
        assert_eq!(transversal_number_exact(&single).unwrap().0, 1);
        let c4 = Graph::cycle(4).unwrap();
        let edges: Vec<Vec<usize>> = c4.edges().iter().map(|&(u, v)| vec![u, v]).collect();
        let h = Hypergraph::new(4, &edges).unwrap();
        assert_eq!(transversal_number_exact(&h).unwrap().0, 2);
    }

    #[test]
    fn neighborhood_transversal_is_domination() {
        for g in [
            Graph::cycle(5).unwrap(),
            Graph::cycle(8).unwrap(),
            Graph::path(6).unwrap(),
            Graph::star(7, 0).unwrap(),
            Graph::complete(5),
        ] {
            let nh = crate::hypergraph::neighborhood_hypergraph(&g);
            assert_eq!(
                transversal_number_exact(&nh).unwrap().0,
                domination_number(&g).0
            );
        }
    }

    #[test]
    fn cover_and_independence() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(t_vertex_cover_number(&c4, 0).unwrap().0, 2);
        assert_eq!(k_independence_number(&c4, 0).unwrap().0, 2);
        let p3 = Graph::path(3).unwrap();
        assert_eq!(t_vertex_cover_number(&p3, 1).unwrap().0, 1);
        let (size, set) = t_vertex_cover_number(&p3, 1).unwrap();
        assert_eq!((size, set.to_vec()), (1, vec![1]));
        assert_eq!(k_independence_number(&p3, 1).unwrap().0, 2);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(t_vertex_cover_number(&c5, 1).unwrap().0, 2);
        assert_eq!(k_independence_number(&c5, 1).unwrap().0, 3);
    }

    #[test]
    fn cover_independence_duality() {
        let graphs = [
            Graph::cycle(5).unwrap(),
            Graph::cycle(6).unwrap(),
            Graph::path(7).unwrap(),
            Graph::complete(5),
            Graph::star(6, 0).unwrap(),
            Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
                .unwrap(),
        ];
        for g in &graphs {
            for t in 0..=2 {
                let tau = t_vertex_cover_number(g, t).unwrap().0;
                let alpha = k_independence_number(g, t).unwrap().0;
                assert_eq!(alpha + tau, g.n(), "t={t} on n={}", g.n());
            }
        }
    }

    #[test]
    fn degree_bounded_caps() {
        let big = Graph::cycle(25).unwrap();
        assert!(t_vertex_cover_number(&big, 1).is_err());
        assert!(k_independence_number(&big, 1).is_err());
        assert!(t_vertex_cover_number(&big, 0).is_ok());
        assert!(t_vertex_cover_number_capped(&big, 1, 32).is_ok());
    }
}
