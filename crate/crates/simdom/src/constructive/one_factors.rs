//! SD-sets of factorings into perfect matchings, via coloring the combined
//! graph and discarding the largest color class.

use crate::constructive::coloring::{color_count, coloring_with_limit, greedy_coloring};
use crate::error::{Error, Result};
use crate::exact::{k_independence_number_capped, MethodKind, SDResult, EXACT_CAP};
use crate::factoring::Factoring;
use crate::numeric::ratio_u;
use crate::vertex_set::VertexSet;

/// The combined graph of k perfect matchings has Δ ≤ k and every component
/// of even order, so it misses both K_{k+1} and odd cycles when k is even:
/// k colors suffice then, k+1 always. The union of the largest color class
/// of each component is an independent set of at least n/(colors) vertices;
/// its complement is a vertex cover of the combined graph and hence
/// dominates every factor.
pub fn sd_one_factors(f: &Factoring) -> Result<SDResult> {
    let n = f.n();
    for (index, g) in f.factors().iter().enumerate() {
        if (0..n).any(|v| g.degree(v) != 1) {
            return Err(Error::Structure {
                index,
                expected: "1-regular (a perfect matching)".into(),
            });
        }
    }
    let k = f.k();
    let combined = f.combined();
    debug_assert!(combined.max_degree() <= k);
    debug_assert!(combined.components().iter().all(|c| c.len() % 2 == 0));
    let limit = if k.is_multiple_of(2) { k } else { k + 1 };

    let greedy = greedy_coloring(combined);
    let (coloring, path) = if color_count(&greedy) <= limit {
        (Some(greedy), "greedy")
    } else {
        match coloring_with_limit(combined, limit) {
            Ok(c) => (Some(c), "brooks"),
            Err(_) => (None, "exact-mis"),
        }
    };

    let independent = match &coloring {
        Some(coloring) => {
            let mut independent = VertexSet::new(n);
            for comp in combined.components() {
                let mut class_sizes = vec![0usize; limit];
                for &v in &comp {
                    class_sizes[coloring[v]] += 1;
                }
                let best = class_sizes
                    .iter()
                    .enumerate()
                    .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
                    .map(|(c, _)| c)
                    .expect("limit is positive");
                for &v in &comp {
                    if coloring[v] == best {
                        independent.insert(v);
                    }
                }
            }
            independent
        }
        None => k_independence_number_capped(combined, 0, EXACT_CAP)?.1,
    };
    // per component the largest class has at least ⌈order/limit⌉ vertices
    assert!(independent.len() * limit >= n);
    let set = independent.complement();
    let bound = ratio_u((limit - 1) * n, limit);
    debug_assert!(crate::numeric::from_int(set.len()) <= bound);
    let label = if k.is_multiple_of(2) {
        format!("coloring complement, (k−1)n/k with k={k}")
    } else {
        format!("coloring complement, kn/(k+1) with k={k}")
    };
    Ok(SDResult::verified(f, set, MethodKind::OneFactors)
        .with_detail(path)
        .with_bound(label, bound, true))
}
