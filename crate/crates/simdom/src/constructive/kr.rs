//! SD-set constructions for factors that are disjoint unions of complete
//! blocks, and the block-matching construction for a common 1-extendable
//! block.

use num::rational::BigRational;
use num::One;

use crate::constructive::blocks::{copies_view, kr_union_view, CopiesView};
use crate::constructive::matching::hopcroft_karp;
use crate::error::{Error, Result};
use crate::exact::{
    domination_number, first_non_extendable_vertex, min_dominating_set_containing, MethodKind,
    SDResult,
};
use crate::factoring::Factoring;
use crate::graph::are_isomorphic;
use crate::hypergraph::{derandomized_transversal_run, Hypergraph};
use crate::numeric::{from_int, pow, ratio_u};
use crate::vertex_set::VertexSet;

fn kr_views(f: &Factoring) -> Result<(Vec<CopiesView>, usize)> {
    let views: Vec<CopiesView> = f
        .factors()
        .iter()
        .enumerate()
        .map(|(i, g)| kr_union_view(g, i))
        .collect::<Result<_>>()?;
    let r = views[0].r;
    for (i, view) in views.iter().enumerate() {
        if view.r != r {
            return Err(Error::Structure {
                index: i,
                expected: format!("a disjoint union of complete blocks of order {r}"),
            });
        }
    }
    Ok((views, r))
}

/// One r-edge per complete block across all factors, solved by the
/// derandomized transversal; any transversal meets every block, so it
/// dominates every factor.
pub fn sd_kr_transversal(f: &Factoring) -> Result<SDResult> {
    let (views, r) = kr_views(f)?;
    let n = f.n();
    let mut edges = Vec::with_capacity(f.k() * n / r);
    for view in &views {
        for block in &view.blocks {
            edges.push(VertexSet::from_indices(n, block.iter().copied()));
        }
    }
    let h = Hypergraph::from_sets(n, edges)?;
    let run = derandomized_transversal_run(&h)?;
    Ok(
        SDResult::verified(f, run.set, MethodKind::KrTransversal).with_bound(
            format!(
                "block-transversal sampling, g(k, r) with k={}, r={r}",
                f.k()
            ),
            from_int(run.floor_bound),
            true,
        ),
    )
}

/// Matched pairs of blocks between two factors that are disjoint unions of
/// copies of a common block F; each pair contributes minimum dominating
/// sets of both blocks through a shared vertex, 2γ(F)−1 vertices per pair.
pub fn sd_pair_matching(f: &Factoring) -> Result<SDResult> {
    if f.k() != 2 {
        return Err(Error::BadParameter(format!(
            "pair matching needs exactly 2 factors, got {}",
            f.k()
        )));
    }
    let v1 = copies_view(f.factor(0)).ok_or_else(|| Error::Structure {
        index: 0,
        expected: "a disjoint union of isomorphic blocks".into(),
    })?;
    let v2 = copies_view(f.factor(1)).ok_or_else(|| Error::Structure {
        index: 1,
        expected: "a disjoint union of isomorphic blocks".into(),
    })?;
    if v1.r != v2.r || !are_isomorphic(&v1.block, &v2.block) {
        return Err(Error::Structure {
            index: 1,
            expected: "a disjoint union of copies of the same block as factor 0".into(),
        });
    }
    if let Some(v) = first_non_extendable_vertex(&v1.block) {
        return Err(Error::NotOneExtendable { v });
    }
    let n = f.n();
    let r = v1.r;
    let count = v1.count();
    let gamma = domination_number(&v1.block).0;

    // block-intersection bipartite graph; Hall's condition holds since any
    // a blocks of one side span ar vertices touching at least a blocks of
    // the other, so a perfect matching exists
    let sets2: Vec<VertexSet> = v2
        .blocks
        .iter()
        .map(|b| VertexSet::from_indices(n, b.iter().copied()))
        .collect();
    let adj: Vec<Vec<usize>> = v1
        .blocks
        .iter()
        .map(|b1| {
            let s1 = VertexSet::from_indices(n, b1.iter().copied());
            (0..count).filter(|&j| s1.intersects(&sets2[j])).collect()
        })
        .collect();
    let matching = hopcroft_karp(count, count, &adj);
    assert!(
        matching.is_perfect(count, count),
        "Hall's condition guarantees a perfect block matching"
    );

    let mut set = VertexSet::new(n);
    for (i, b1) in v1.blocks.iter().enumerate() {
        let j = matching.match_left[i].expect("matching is perfect");
        let b2 = &v2.blocks[j];
        let common = b1
            .iter()
            .find(|v| b2.binary_search(v).is_ok())
            .copied()
            .expect("matched blocks intersect");
        for (factor, block) in [(f.factor(0), b1), (f.factor(1), b2)] {
            let local = factor.induced(block);
            let pos = block
                .binary_search(&common)
                .expect("common lies in the block");
            let dom = min_dominating_set_containing(&local, pos)
                .expect("every vertex of a 1-extendable block lies in some minimum dominating set");
            for p in dom.iter() {
                set.insert(block[p]);
            }
        }
    }
    let bound = ratio_u((2 * gamma - 1) * n, r);
    debug_assert!(from_int(set.len()) <= bound);
    Ok(
        SDResult::verified(f, set, MethodKind::PairMatching).with_bound(
            format!("matched blocks, (2γ(F)−1)n/r with γ(F)={gamma}, r={r}"),
            bound,
            true,
        ),
    )
}

/// Pair construction on the first two factors, then one vertex per
/// still-undominated block of each further factor; at most a (r−1)/r
/// fraction of the previous deficit survives each step.
pub fn sd_kr_inductive(f: &Factoring) -> Result<SDResult> {
    let (views, r) = kr_views(f)?;
    let k = f.k();
    if k < 2 {
        return Err(Error::BadParameter(
            "the inductive construction needs at least 2 factors".into(),
        ));
    }
    let n = f.n();
    let pair = Factoring::new(vec![f.factor(0).clone(), f.factor(1).clone()])?;
    let mut set = sd_pair_matching(&pair)?.set;
    let shrink = ratio_u(r - 1, r);
    let mut step_bound = ratio_u(n, r);
    debug_assert!(from_int(set.len()) <= step_bound);
    for view in &views[2..] {
        for block in &view.blocks {
            if block.iter().all(|&v| !set.contains(v)) {
                set.insert(block[0]);
            }
        }
        step_bound = step_bound * &shrink + ratio_u(n, r);
        debug_assert!(from_int(set.len()) <= step_bound);
    }
    let bound = from_int(n) * (BigRational::one() - pow(&shrink, (k - 1) as u32));
    debug_assert_eq!(step_bound, bound);
    Ok(
        SDResult::verified(f, set, MethodKind::KrInductive).with_bound(
            format!("iterated block repair, (1 − ((r−1)/r)^(k−1))n with k={k}, r={r}"),
            bound,
            true,
        ),
    )
}

/// Factors taken in pairs: each pair contributes n/r vertices via the block
/// matching; an odd factor count leads with the three-factor inductive
/// construction.
pub fn sd_kr_pairing(f: &Factoring) -> Result<SDResult> {
    let (_, r) = kr_views(f)?;
    let k = f.k();
    if k < 2 {
        return Err(Error::BadParameter(
            "the pairing construction needs at least 2 factors".into(),
        ));
    }
    let n = f.n();
    let mut set = VertexSet::new(n);
    let mut next = 0;
    let detail;
    if k % 2 == 1 {
        let lead = Factoring::new(vec![
            f.factor(0).clone(),
            f.factor(1).clone(),
            f.factor(2).clone(),
        ])?;
        set.union_with(&sd_kr_inductive(&lead)?.set);
        next = 3;
        detail = "lead-triple";
    } else {
        detail = "pairs";
    }
    while next < k {
        let pair = Factoring::new(vec![f.factor(next).clone(), f.factor(next + 1).clone()])?;
        set.union_with(&sd_pair_matching(&pair)?.set);
        next += 2;
    }
    let (label, bound) = if k.is_multiple_of(2) {
        (
            format!("paired blocks, kn/(2r) with k={k}, r={r}"),
            ratio_u(k * n, 2 * r),
        )
    } else {
        (
            format!("lead triple plus paired blocks, (r(k+1)−2)n/(2r²) with k={k}, r={r}"),
            ratio_u((r * (k + 1) - 2) * n, 2 * r * r),
        )
    };
    debug_assert!(from_int(set.len()) <= bound);
    Ok(SDResult::verified(f, set, MethodKind::KrPairing)
        .with_detail(detail)
        .with_bound(label, bound, true))
}
