//! SD-set constructions: a greedy baseline, cover- and sampling-based
//! general methods, and the structure-specific procedures for block-union
//! and cycle factorings. Every construction verifies its output against all
//! factors and records the size bound it is entitled to claim.

mod blocks;
mod coloring;
mod cycles;
mod kr;
mod matching;
mod one_factors;

pub use blocks::{copies_view, cycle_union_view, kr_union_view, CopiesView};
pub use coloring::{color_count, coloring_with_limit, greedy_coloring, is_proper_coloring};
pub use cycles::{sd_c4_three, sd_c5_inductive, sd_cycle_pair, sd_cycles_inductive};
pub use kr::{sd_kr_inductive, sd_kr_pairing, sd_kr_transversal, sd_pair_matching};
pub use matching::{hopcroft_karp, BipartiteMatching};
pub use one_factors::sd_one_factors;

use crate::error::{Error, Result};
use crate::exact::{greedy_t_vertex_cover, t_vertex_cover_number, MethodKind, SDResult, EXACT_CAP};
use crate::factoring::Factoring;
use crate::graph::Graph;
use crate::hypergraph::{
    derandomized_transversal_run, neighborhood_hypergraph, shrink_to_uniform, Hypergraph,
};
use crate::numeric::{from_int, ratio_u};
use crate::vertex_set::VertexSet;

/// Greedy simultaneous domination over any number of graphs on a common
/// vertex set: repeatedly take the vertex covering the most undominated
/// (vertex, factor) pairs, lowest index on ties. Isolated vertices are
/// forced first.
pub(crate) fn greedy_multi(graphs: &[&Graph]) -> VertexSet {
    let n = graphs[0].n();
    let closed: Vec<Vec<VertexSet>> = graphs
        .iter()
        .map(|g| (0..n).map(|v| g.closed_neighborhood(v)).collect())
        .collect();
    let mut dominated: Vec<VertexSet> = vec![VertexSet::new(n); graphs.len()];
    let mut set = VertexSet::new(n);
    let cover = |v: usize, dominated: &mut Vec<VertexSet>, set: &mut VertexSet| {
        set.insert(v);
        for (i, dom) in dominated.iter_mut().enumerate() {
            dom.union_with(&closed[i][v]);
        }
    };
    for (g, v) in graphs
        .iter()
        .flat_map(|g| (0..n).map(move |v| (g, v)))
        .filter(|(g, v)| g.degree(*v) == 0)
    {
        let _ = g;
        cover(v, &mut dominated, &mut set);
    }
    while dominated.iter().any(|dom| dom.len() < n) {
        let (_, v) = (0..n)
            .map(|v| {
                let gain: usize = dominated
                    .iter()
                    .enumerate()
                    .map(|(i, dom)| closed[i][v].len() - closed[i][v].intersection_len(dom))
                    .sum();
                (gain, v)
            })
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .expect("nonempty vertex range");
        cover(v, &mut dominated, &mut set);
    }
    set
}

pub fn greedy_sd(f: &Factoring) -> SDResult {
    let graphs: Vec<&Graph> = f.factors().iter().collect();
    let set = greedy_multi(&graphs);
    let result = SDResult::verified(f, set, MethodKind::Greedy);
    debug_assert!(result.all_factors_dominated());
    result
}

/// A (δ−1)-vertex cover of the combined graph is an SD-set: outside the
/// cover every vertex keeps at most δ−1 neighbors, so in each factor
/// (minimum degree ≥ δ) it must have a neighbor inside. Uses the exact
/// cover within the solver cap — then the average-degree bound
/// ⌈d̄⌉n/(⌈d̄⌉+δ) is guaranteed — and max-degree peeling beyond it.
pub fn sd_via_cover(f: &Factoring) -> Result<SDResult> {
    let delta = f.min_degree();
    if delta == 0 {
        return Err(Error::MinDegreeTooSmall {
            delta,
            context: "the cover construction needs minimum degree 1 in every factor; \
                      the exact solver handles isolated vertices by forcing them"
                .into(),
        });
    }
    let g = f.combined();
    let n = f.n();
    let (set, detail, exact) = match t_vertex_cover_number(g, delta - 1) {
        Ok((_, set)) => (set, "exact-cover", true),
        Err(Error::CapExceeded { .. }) => (greedy_t_vertex_cover(g, delta - 1), "peeling", false),
        Err(e) => return Err(e),
    };
    let dbar = g.average_degree_ceil();
    let bound = ratio_u(dbar * n, dbar + delta);
    if exact {
        debug_assert!(from_int(set.len()) <= bound);
    }
    Ok(SDResult::verified(f, set, MethodKind::Cover)
        .with_detail(detail)
        .with_bound(
            format!("degree-bounded cover, \u{2308}d\u{0304}\u{2309}n/(\u{2308}d\u{0304}\u{2309}+\u{03B4}) with \u{03B4}={delta}"),
            bound,
            exact,
        ))
}

/// Closed neighborhoods of every factor, shrunk to (δ+1)-uniform, as one
/// hypergraph with kn edges; its derandomized transversal meets a closed
/// neighborhood of every vertex in every factor.
pub fn sd_via_hypergraph(f: &Factoring) -> Result<SDResult> {
    let delta = f.min_degree();
    if delta == 0 {
        return Err(Error::MinDegreeTooSmall {
            delta,
            context: "the sampling construction needs minimum degree 1 in every factor".into(),
        });
    }
    let n = f.n();
    let mut edges = Vec::with_capacity(f.k() * n);
    for g in f.factors() {
        let shrunk = shrink_to_uniform(&neighborhood_hypergraph(g), delta + 1)?;
        edges.extend(shrunk.edges().iter().cloned());
    }
    let h = Hypergraph::from_sets(n, edges)?;
    let run = derandomized_transversal_run(&h)?;
    Ok(
        SDResult::verified(f, run.set, MethodKind::Hypergraph).with_bound(
            format!(
                "neighborhood sampling, f(k, \u{03B4}) with k={}, \u{03B4}={delta}",
                f.k()
            ),
            from_int(run.floor_bound),
            true,
        ),
    )
}

/// Run one construction (or the exact solver) by name.
pub fn run_method(f: &Factoring, method: MethodKind) -> Result<SDResult> {
    match method {
        MethodKind::Exact => crate::exact::sd_number_exact(f),
        MethodKind::Greedy => Ok(greedy_sd(f)),
        MethodKind::Cover => sd_via_cover(f),
        MethodKind::Hypergraph => sd_via_hypergraph(f),
        MethodKind::KrTransversal => sd_kr_transversal(f),
        MethodKind::PairMatching => sd_pair_matching(f),
        MethodKind::KrInductive => sd_kr_inductive(f),
        MethodKind::KrPairing => sd_kr_pairing(f),
        MethodKind::OneFactors => sd_one_factors(f),
        MethodKind::CyclePair => sd_cycle_pair(f),
        MethodKind::CyclesInductive => sd_cycles_inductive(f),
        MethodKind::C4Three => sd_c4_three(f),
        MethodKind::C5Inductive => sd_c5_inductive(f),
    }
}

/// Methods whose structural preconditions this factoring satisfies.
/// The exact solver is listed only within its cap; greedy always applies.
pub fn applicable_methods(f: &Factoring) -> Vec<MethodKind> {
    let n = f.n();
    let k = f.k();
    let delta = f.min_degree();
    let mut out = Vec::new();
    if n <= EXACT_CAP {
        out.push(MethodKind::Exact);
    }
    out.push(MethodKind::Greedy);
    if delta >= 1 {
        out.push(MethodKind::Cover);
        out.push(MethodKind::Hypergraph);
    }
    let kr_views: Option<Vec<CopiesView>> = f
        .factors()
        .iter()
        .map(|g| copies_view(g).filter(|v| v.r >= 2 && v.block.is_complete()))
        .collect();
    if let Some(views) = kr_views {
        if views.windows(2).all(|w| w[0].r == w[1].r) {
            out.push(MethodKind::KrTransversal);
            if k >= 2 {
                out.push(MethodKind::KrInductive);
                out.push(MethodKind::KrPairing);
            }
        }
    }
    if k == 2 {
        if let (Some(v1), Some(v2)) = (copies_view(f.factor(0)), copies_view(f.factor(1))) {
            if v1.r == v2.r
                && crate::graph::are_isomorphic(&v1.block, &v2.block)
                && crate::exact::is_one_extendable_dominated(&v1.block)
            {
                out.push(MethodKind::PairMatching);
            }
        }
    }
    if f.factors().iter().all(|g| (0..n).all(|v| g.degree(v) == 1)) {
        out.push(MethodKind::OneFactors);
    }
    if k == 2 {
        let even_ok = n.is_multiple_of(2)
            && f.factors()
                .iter()
                .all(|g| g.is_spanning_cycle() || g.is_spanning_path());
        let odd_ok = n % 2 == 1 && f.factors().iter().all(Graph::is_spanning_cycle);
        if even_ok || odd_ok {
            out.push(MethodKind::CyclePair);
        }
    }
    if k >= 2 && n.is_multiple_of(6) && f.factors().iter().all(Graph::is_spanning_cycle) {
        out.push(MethodKind::CyclesInductive);
    }
    if k == 3
        && f.factors()
            .iter()
            .enumerate()
            .all(|(i, g)| cycle_union_view(g, 4, i).is_ok())
    {
        out.push(MethodKind::C4Three);
    }
    if k >= 2
        && f.factors()
            .iter()
            .enumerate()
            .all(|(i, g)| cycle_union_view(g, 5, i).is_ok())
    {
        out.push(MethodKind::C5Inductive);
    }
    out
}
