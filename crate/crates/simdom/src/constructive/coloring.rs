//! Proper colorings: greedy by vertex order, and a constructive procedure
//! achieving Δ colors on connected components that are neither complete nor
//! odd cycles (Brooks' theorem), used to extract large independent sets.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Color vertices in ascending order with the lowest free color.
pub fn greedy_coloring(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    for v in 0..n {
        let mut used = vec![false; g.degree(v) + 1];
        for &u in g.neighbors(v) {
            if color[u] < used.len() {
                used[color[u]] = true;
            }
        }
        color[v] = used
            .iter()
            .position(|&b| !b)
            .expect("one of d+1 colors is free");
    }
    color
}

pub fn color_count(coloring: &[usize]) -> usize {
    coloring.iter().max().map_or(0, |&c| c + 1)
}

pub fn is_proper_coloring(g: &Graph, coloring: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| coloring[u] != coloring[v])
}

/// A proper coloring with at most `limit` colors, constructed per
/// component. Fails only when some component genuinely needs more (a
/// complete graph or odd cycle above the limit, or Δ > limit).
pub fn coloring_with_limit(g: &Graph, limit: usize) -> Result<Vec<usize>> {
    let mut color = vec![usize::MAX; g.n()];
    for comp in g.components() {
        let local = g.induced(&comp);
        let local_colors = color_component(&local, limit)?;
        for (i, &v) in comp.iter().enumerate() {
            color[v] = local_colors[i];
        }
    }
    debug_assert!(is_proper_coloring(g, &color));
    debug_assert!(color_count(&color) <= limit);
    Ok(color)
}

fn over_limit(limit: usize) -> Error {
    Error::NotApplicable(format!("a component needs more than {limit} colors"))
}

fn color_component(g: &Graph, limit: usize) -> Result<Vec<usize>> {
    let n = g.n();
    let delta = g.max_degree();
    if g.is_complete() {
        return if n <= limit {
            Ok((0..n).collect())
        } else {
            Err(over_limit(limit))
        };
    }
    if delta <= 2 {
        // connected and not complete: a path or a cycle
        if limit < 2 || (limit < 3 && g.is_spanning_cycle() && n % 2 == 1) {
            return Err(over_limit(limit));
        }
        return Ok(two_color_with_repair(g));
    }
    if delta > limit {
        return Err(over_limit(limit));
    }
    if let Some(root) = (0..n).find(|&v| g.degree(v) < delta) {
        return Ok(reverse_bfs_coloring(g, root, &[]));
    }
    // Δ-regular (Δ ≥ 3), not complete
    if let Some(c) = find_cut_vertex(g) {
        return color_around_cut_vertex(g, c, limit);
    }
    // 2-connected: some vertex v has nonadjacent neighbors a, b whose
    // removal keeps the graph connected; coloring a and b alike leaves a
    // spare color at v
    let (v, a, b) = find_brooks_triple(g).ok_or_else(|| {
        Error::NotApplicable("no Brooks triple in a 2-connected regular component".into())
    })?;
    Ok(reverse_bfs_coloring(g, v, &[(a, 0), (b, 0)]))
}

/// BFS parity coloring; an odd cycle's one conflicting edge is repaired
/// with a third color.
fn two_color_with_repair(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let order = bfs_order(g, 0, &VertexSet::new(n));
    let mut color = vec![usize::MAX; n];
    color[0] = 0;
    for &v in &order[1..] {
        let parent_color = g
            .neighbors(v)
            .iter()
            .find_map(|&u| (color[u] != usize::MAX).then_some(color[u]))
            .expect("BFS order gives every non-root a colored neighbor");
        color[v] = 1 - parent_color;
    }
    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| color[u] == color[v]) {
        color[u.max(v)] = 2;
    }
    color
}

/// Color in reverse BFS order from `root`, lowest free color first; every
/// non-root vertex still has its parent uncolored when its turn comes, and
/// the presets (used for the two like-colored neighbors of the root) leave
/// the root a free color among 0..Δ−1.
fn reverse_bfs_coloring(g: &Graph, root: usize, preset: &[(usize, usize)]) -> Vec<usize> {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut blocked = VertexSet::new(n);
    for &(v, c) in preset {
        color[v] = c;
        blocked.insert(v);
    }
    let order = bfs_order(g, root, &blocked);
    debug_assert_eq!(order.len() + preset.len(), n);
    for &v in order.iter().rev() {
        let mut used = vec![false; g.degree(v) + 1];
        for &u in g.neighbors(v) {
            if color[u] < used.len() {
                used[color[u]] = true;
            }
        }
        color[v] = used.iter().position(|&b| !b).expect("a free color remains");
    }
    color
}

/// Color each lobe (a component of G−c together with c) recursively, then
/// permute its palette so that c receives color 0 everywhere.
fn color_around_cut_vertex(g: &Graph, c: usize, limit: usize) -> Result<Vec<usize>> {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut removed = VertexSet::new(n);
    removed.insert(c);
    for comp in components_without(g, &removed) {
        let mut verts = comp;
        verts.push(c);
        verts.sort_unstable();
        let local = g.induced(&verts);
        let mut local_colors = color_component(&local, limit)?;
        let c_pos = verts.binary_search(&c).expect("c is in every lobe");
        let c_color = local_colors[c_pos];
        for lc in &mut local_colors {
            if *lc == c_color {
                *lc = 0;
            } else if *lc == 0 {
                *lc = c_color;
            }
        }
        for (i, &v) in verts.iter().enumerate() {
            color[v] = local_colors[i];
        }
    }
    Ok(color)
}

fn find_cut_vertex(g: &Graph) -> Option<usize> {
    let n = g.n();
    (0..n).find(|&c| {
        let mut removed = VertexSet::new(n);
        removed.insert(c);
        components_without(g, &removed).len() > 1
    })
}

fn find_brooks_triple(g: &Graph) -> Option<(usize, usize, usize)> {
    let n = g.n();
    for v in 0..n {
        let nbrs = g.neighbors(v);
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let mut removed = VertexSet::new(n);
                removed.insert(a);
                removed.insert(b);
                if components_without(g, &removed).len() == 1 {
                    return Some((v, a, b));
                }
            }
        }
    }
    None
}

fn bfs_order(g: &Graph, root: usize, blocked: &VertexSet) -> Vec<usize> {
    let mut seen = blocked.clone();
    seen.insert(root);
    let mut order = vec![root];
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &u in g.neighbors(v) {
            if !seen.contains(u) {
                seen.insert(u);
                order.push(u);
            }
        }
    }
    order
}

fn components_without(g: &Graph, removed: &VertexSet) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = removed.clone();
    let mut out = Vec::new();
    for s in 0..n {
        if seen.contains(s) {
            continue;
        }
        let mut comp = vec![s];
        seen.insert(s);
        let mut head = 0;
        while head < comp.len() {
            let v = comp[head];
            head += 1;
            for &u in g.neighbors(v) {
                if !seen.contains(u) {
                    seen.insert(u);
                    comp.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}
