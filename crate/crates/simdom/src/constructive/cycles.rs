//! SD-set constructions for cycle factors: Hamiltonian-cycle pairs, many
//! Hamiltonian cycles, and unions of 4- and 5-cycles.

use crate::constructive::blocks::{cycle_union_view, CopiesView};
use crate::constructive::kr::sd_pair_matching;
use crate::error::{Error, Result};
use crate::exact::{MethodKind, SDResult};
use crate::factoring::Factoring;
use crate::graph::Graph;
use crate::numeric::{ceil_to_usize, from_int, ratio, ratio_u};
use crate::vertex_set::VertexSet;

/// Vertices of a spanning cycle in traversal order, starting at 0 and
/// moving toward the lower-indexed neighbor.
fn cycle_order(g: &Graph) -> Vec<usize> {
    debug_assert!(g.is_spanning_cycle());
    walk(g, 0, g.neighbors(0)[0])
}

/// Vertices of a spanning path in order, starting at the lower endpoint.
fn path_order(g: &Graph) -> Vec<usize> {
    debug_assert!(g.is_spanning_path());
    if g.n() == 1 {
        return vec![0];
    }
    let start = (0..g.n())
        .find(|&v| g.degree(v) == 1)
        .expect("a path has endpoints");
    walk(g, start, g.neighbors(start)[0])
}

fn walk(g: &Graph, start: usize, second: usize) -> Vec<usize> {
    let mut order = vec![start, second];
    while order.len() < g.n() {
        let cur = order[order.len() - 1];
        let prev = order[order.len() - 2];
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&u| u != prev)
            .expect("interior vertices have a forward neighbor");
        order.push(next);
    }
    order
}

/// Every other traversal edge of a spanning cycle or path on an even number
/// of vertices: a perfect matching contained in the factor.
fn alternating_matching(g: &Graph, index: usize) -> Result<Graph> {
    let order = if g.is_spanning_cycle() {
        cycle_order(g)
    } else if g.is_spanning_path() {
        path_order(g)
    } else {
        return Err(Error::Structure {
            index,
            expected: "a spanning cycle or spanning path".into(),
        });
    };
    debug_assert_eq!(order.len() % 2, 0);
    let pairs: Vec<(usize, usize)> = order.chunks(2).map(|c| (c[0], c[1])).collect();
    Graph::from_edges(g.n(), &pairs)
}

/// Two spanning cycles (paths allowed when n is even): take a perfect
/// matching inside each and match their blocks, n/2 vertices; for odd n
/// delete the top vertex, solve the even path pair, and put it back.
pub fn sd_cycle_pair(f: &Factoring) -> Result<SDResult> {
    if f.k() != 2 {
        return Err(Error::BadParameter(format!(
            "the cycle-pair construction needs exactly 2 factors, got {}",
            f.k()
        )));
    }
    let n = f.n();
    let (set, bound, detail) = if n.is_multiple_of(2) {
        let matchings = vec![
            alternating_matching(f.factor(0), 0)?,
            alternating_matching(f.factor(1), 1)?,
        ];
        let inner = sd_pair_matching(&Factoring::new(matchings)?)?;
        debug_assert_eq!(inner.size(), n / 2);
        (inner.set, ratio_u(n, 2), "even-matchings")
    } else {
        for (index, g) in f.factors().iter().enumerate() {
            if !g.is_spanning_cycle() {
                return Err(Error::Structure {
                    index,
                    expected: "a spanning cycle".into(),
                });
            }
        }
        let keep: Vec<usize> = (0..n - 1).collect();
        let matchings = vec![
            alternating_matching(&f.factor(0).induced(&keep), 0)?,
            alternating_matching(&f.factor(1).induced(&keep), 1)?,
        ];
        let inner = sd_pair_matching(&Factoring::new(matchings)?)?;
        let mut set = VertexSet::new(n);
        for v in inner.set.iter() {
            set.insert(v);
        }
        set.insert(n - 1);
        (set, ratio_u(n + 1, 2), "odd-delete")
    };
    debug_assert!(from_int(set.len()) <= bound);
    Ok(SDResult::verified(f, set, MethodKind::CyclePair)
        .with_detail(detail)
        .with_bound("cycle pair, \u{2308}n/2\u{2309}", bound, true))
}

/// k spanning cycles, n ≡ 0 (mod 6): start from the pair construction,
/// then for each further cycle add the best of its three residue classes —
/// each class is a dominating set of that cycle, and the best one already
/// shares at least a third of the current set.
pub fn sd_cycles_inductive(f: &Factoring) -> Result<SDResult> {
    let k = f.k();
    if k < 2 {
        return Err(Error::BadParameter(
            "the inductive cycle construction needs at least 2 factors".into(),
        ));
    }
    let n = f.n();
    if !n.is_multiple_of(6) {
        return Err(Error::BadParameter(format!(
            "n = {n} must be divisible by 6 for the inductive cycle construction"
        )));
    }
    for (index, g) in f.factors().iter().enumerate() {
        if !g.is_spanning_cycle() {
            return Err(Error::Structure {
                index,
                expected: "a spanning cycle".into(),
            });
        }
    }
    let pair = Factoring::new(vec![f.factor(0).clone(), f.factor(1).clone()])?;
    let mut set = sd_cycle_pair(&pair)?.set;
    let mut step_bound = ratio_u(n, 2);
    for j in 2..k {
        let order = cycle_order(f.factor(j));
        let mut classes = [VertexSet::new(n), VertexSet::new(n), VertexSet::new(n)];
        for (t, &v) in order.iter().enumerate() {
            classes[t % 3].insert(v);
        }
        let best = classes
            .iter()
            .enumerate()
            .max_by(|a, b| {
                set.intersection_len(a.1)
                    .cmp(&set.intersection_len(b.1))
                    .then(b.0.cmp(&a.0))
            })
            .map(|(i, _)| i)
            .expect("three classes");
        set.union_with(&classes[best]);
        step_bound = step_bound * ratio(2, 3) + ratio_u(n, 3);
        debug_assert!(from_int(set.len()) <= step_bound);
    }
    let bound = from_int(n)
        * (from_int(1) - ratio(1, 2) * crate::numeric::pow(&ratio(2, 3), (k - 2) as u32));
    debug_assert_eq!(step_bound, bound);
    Ok(
        SDResult::verified(f, set, MethodKind::CyclesInductive).with_bound(
            format!("residue classes over cycles, (1 − ½(2/3)^(k−2))n with k={k}"),
            bound,
            true,
        ),
    )
}

/// Global vertices of one block in cyclic order, starting at the block's
/// lowest vertex and moving toward its lower-indexed block neighbor.
fn block_cycle(factor: &Graph, block: &[usize]) -> Vec<usize> {
    let local = factor.induced(block);
    cycle_order(&local).into_iter().map(|p| block[p]).collect()
}

/// Perfect matching of opposite edges inside each 4-cycle of a C_4-union.
fn opposite_edges(factor: &Graph, view: &CopiesView, n: usize) -> Result<Graph> {
    let mut pairs = Vec::with_capacity(n / 2);
    for block in &view.blocks {
        let c = block_cycle(factor, block);
        pairs.push((c[0], c[1]));
        pairs.push((c[2], c[3]));
    }
    Graph::from_edges(n, &pairs)
}

/// Three C_4-union factors: the first two are handled by matchings of
/// opposite edges (n/2 vertices); each 4-cycle of the third then has its
/// deficit repaired — an antipode when one vertex is covered, a lowest
/// adjacent pair when none is.
pub fn sd_c4_three(f: &Factoring) -> Result<SDResult> {
    if f.k() != 3 {
        return Err(Error::BadParameter(format!(
            "the three-factor C_4 construction needs exactly 3 factors, got {}",
            f.k()
        )));
    }
    let n = f.n();
    let views: Vec<CopiesView> = f
        .factors()
        .iter()
        .enumerate()
        .map(|(i, g)| cycle_union_view(g, 4, i))
        .collect::<Result<_>>()?;
    let matchings = vec![
        opposite_edges(f.factor(0), &views[0], n)?,
        opposite_edges(f.factor(1), &views[1], n)?,
    ];
    let inner = sd_pair_matching(&Factoring::new(matchings)?)?;
    let mut set = inner.set;
    debug_assert_eq!(set.len(), n / 2);
    for block in &views[2].blocks {
        let c = block_cycle(f.factor(2), block);
        let covered: Vec<usize> = (0..4).filter(|&t| set.contains(c[t])).collect();
        match covered.len() {
            0 => {
                set.insert(c[0]);
                set.insert(c[1].min(c[3]));
            }
            1 => {
                set.insert(c[(covered[0] + 2) % 4]);
            }
            _ => {} // any two vertices of a 4-cycle dominate it
        }
    }
    let bound = ratio_u(3 * n, 4);
    debug_assert!(from_int(set.len()) <= bound);
    Ok(SDResult::verified(f, set, MethodKind::C4Three).with_bound(
        "matched pair plus per-4-cycle repair, 3n/4",
        bound,
        true,
    ))
}

/// k C_5-union factors: block matching for the first two (3n/5), then for
/// each further factor pad to the running bound's ceiling and repair each
/// 5-cycle — a dominating pair when untouched, a non-neighbor of the lowest
/// covered vertex when one or two are covered.
pub fn sd_c5_inductive(f: &Factoring) -> Result<SDResult> {
    let k = f.k();
    if k < 2 {
        return Err(Error::BadParameter(
            "the inductive C_5 construction needs at least 2 factors".into(),
        ));
    }
    let n = f.n();
    let views: Vec<CopiesView> = f
        .factors()
        .iter()
        .enumerate()
        .map(|(i, g)| cycle_union_view(g, 5, i))
        .collect::<Result<_>>()?;
    let pair = Factoring::new(vec![f.factor(0).clone(), f.factor(1).clone()])?;
    let mut set = sd_pair_matching(&pair)?.set;
    let mut beta = ratio(3, 5);
    debug_assert!(from_int(set.len()) <= &beta * from_int(n));
    for (j, view) in views.iter().enumerate().skip(2) {
        let target = ceil_to_usize(&(&beta * from_int(n)));
        for v in 0..n {
            if set.len() >= target {
                break;
            }
            set.insert(v);
        }
        for block in &view.blocks {
            let c = block_cycle(f.factor(j), block);
            let covered: Vec<usize> = (0..5).filter(|&t| set.contains(c[t])).collect();
            match covered.len() {
                0 => {
                    set.insert(c[0]);
                    set.insert(c[2].min(c[3]));
                }
                1 | 2 => {
                    let p = covered
                        .iter()
                        .copied()
                        .min_by_key(|&t| c[t])
                        .expect("at least one covered position");
                    set.insert(c[(p + 2) % 5].min(c[(p + 3) % 5]));
                }
                _ => {} // any three vertices of a 5-cycle dominate it
            }
        }
        beta = beta * ratio(3, 5) + ratio(2, 5);
        debug_assert!(set.len() <= ceil_to_usize(&(&beta * from_int(n))));
    }
    let bound = from_int(ceil_to_usize(&(beta * from_int(n))));
    debug_assert!(from_int(set.len()) <= bound);
    Ok(SDResult::verified(f, set, MethodKind::C5Inductive).with_bound(
        format!("matched pair plus per-5-cycle repair, \u{2308}(1 − (2/5)(3/5)^(k−2))n\u{2309} with k={k}"),
        bound,
        true,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{is_sd_set, sd_number_exact};

    fn cycle_on(n: usize, order: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (order[i], order[(i + 1) % n])).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn even_cycle_pair() {
        let f = Factoring::new(vec![
            Graph::cycle(6).unwrap(),
            cycle_on(6, &[0, 2, 4, 1, 5, 3]),
        ])
        .unwrap();
        let r = sd_cycle_pair(&f).unwrap();
        assert_eq!(r.size(), 3);
        assert!(r.all_factors_dominated());
        assert_eq!(r.detail.as_deref(), Some("even-matchings"));
    }

    #[test]
    fn odd_cycle_pair() {
        let f = Factoring::new(vec![
            Graph::cycle(7).unwrap(),
            cycle_on(7, &[0, 2, 4, 6, 1, 3, 5]),
        ])
        .unwrap();
        let r = sd_cycle_pair(&f).unwrap();
        assert!(r.size() <= 4);
        assert!(r.set.contains(6));
        assert!(r.all_factors_dominated());
        assert!(r.size() >= sd_number_exact(&f).unwrap().size());
    }

    #[test]
    fn identical_c4_pair_is_exact() {
        let c4 = Graph::cycle(4).unwrap();
        let f = Factoring::new(vec![c4.clone(), c4]).unwrap();
        let r = sd_cycle_pair(&f).unwrap();
        assert_eq!(r.size(), 2);
        assert_eq!(sd_number_exact(&f).unwrap().size(), 2);
    }

    #[test]
    fn cycle_pair_rejects_non_cycles() {
        let f = Factoring::new(vec![Graph::cycle(7).unwrap(), Graph::path(7).unwrap()]).unwrap();
        assert!(matches!(
            sd_cycle_pair(&f),
            Err(Error::Structure { index: 1, .. })
        ));
    }

    #[test]
    fn three_hamiltonian_cycles() {
        let f = Factoring::new(vec![
            Graph::cycle(6).unwrap(),
            cycle_on(6, &[0, 2, 4, 1, 5, 3]),
            cycle_on(6, &[0, 3, 1, 4, 2, 5]),
        ])
        .unwrap();
        let r = sd_cycles_inductive(&f).unwrap();
        assert!(r.all_factors_dominated());
        assert!(r.size() <= 4); // (1 − ½·(2/3))·6
        assert_eq!(r.bound_context.as_ref().unwrap().value, from_int(4));
        assert!(r.size() >= sd_number_exact(&f).unwrap().size());
    }

    #[test]
    fn inductive_needs_divisibility() {
        let c4 = Graph::cycle(4).unwrap();
        let f = Factoring::new(vec![c4.clone(), c4]).unwrap();
        assert!(matches!(
            sd_cycles_inductive(&f),
            Err(Error::BadParameter(_))
        ));
    }

    fn c4_union(n: usize, blocks: &[[usize; 4]]) -> Graph {
        let mut edges = Vec::new();
        for b in blocks {
            for i in 0..4 {
                edges.push((b[i], b[(i + 1) % 4]));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn three_c4_unions() {
        let f = Factoring::new(vec![
            c4_union(8, &[[0, 1, 2, 3], [4, 5, 6, 7]]),
            c4_union(8, &[[0, 4, 1, 5], [2, 6, 3, 7]]),
            c4_union(8, &[[0, 2, 4, 6], [1, 3, 5, 7]]),
        ])
        .unwrap();
        let r = sd_c4_three(&f).unwrap();
        assert!(r.all_factors_dominated());
        assert!(r.size() <= 6);
        assert!(r.size() >= sd_number_exact(&f).unwrap().size());
    }

    #[test]
    fn identical_c4_triples_stay_at_half() {
        let g = c4_union(8, &[[0, 1, 2, 3], [4, 5, 6, 7]]);
        let f = Factoring::new(vec![g.clone(), g.clone(), g]).unwrap();
        let r = sd_c4_three(&f).unwrap();
        assert_eq!(r.size(), 4); // the pair set already covers every block twice
    }

    fn k5_c5_pair() -> Factoring {
        let outer = Graph::cycle(5).unwrap();
        let star = cycle_on(5, &[0, 2, 4, 1, 3]);
        Factoring::new(vec![outer, star]).unwrap()
    }

    #[test]
    fn c5_pair_is_three_fifths_and_sharp() {
        let f = k5_c5_pair();
        let r = sd_c5_inductive(&f).unwrap();
        assert_eq!(r.size(), 3);
        assert!(r.all_factors_dominated());
        assert_eq!(sd_number_exact(&f).unwrap().size(), 3);
    }

    #[test]
    fn c5_three_factors() {
        let f = Factoring::new(vec![
            Graph::cycle(5).unwrap(),
            cycle_on(5, &[0, 2, 4, 1, 3]),
            cycle_on(5, &[0, 1, 3, 2, 4]),
        ])
        .unwrap();
        let r = sd_c5_inductive(&f).unwrap();
        assert!(r.all_factors_dominated());
        assert_eq!(r.bound_context.as_ref().unwrap().value, from_int(4)); // ⌈19/25·5⌉
        assert!(r.size() <= 4);
        assert!(is_sd_set(&f, &r.set));
    }

    #[test]
    fn c5_rejects_wrong_blocks() {
        let f = Factoring::new(vec![Graph::cycle(5).unwrap(), Graph::complete(5)]).unwrap();
        assert!(matches!(
            sd_c5_inductive(&f),
            Err(Error::Structure { index: 1, .. })
        ));
    }
}
