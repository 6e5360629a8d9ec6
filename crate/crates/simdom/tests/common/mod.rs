//! Brute-force oracles and seeded generators shared by the integration tests.
//!
//! Every oracle here enumerates subsets as raw bitmasks and checks the
//! defining predicate directly. None of them call into the library's search
//! code, so agreement between an oracle and a solver is evidence, not an
//! identity.

#![allow(dead_code)]

use rand::Rng;
use simdom::{Factoring, Graph};

/// Masks stay in `u32`; the oracles are exponential and pointless past this.
pub const ORACLE_CAP: usize = 25;

fn closed_masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= ORACLE_CAP);
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(1u32 << v, |m, &u| m | 1 << u))
        .collect()
}

fn open_masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= ORACLE_CAP);
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect()
}

/// Does any `n`-bit mask with exactly `s` ones satisfy `pred`?
/// Enumerates combinations in increasing numeric order via Gosper's hack.
fn any_of_size(n: usize, s: usize, pred: &mut dyn FnMut(u32) -> bool) -> bool {
    if s == 0 {
        return pred(0);
    }
    if s > n {
        return false;
    }
    let full = (1u32 << n) - 1;
    let mut m = (1u32 << s) - 1;
    while m <= full {
        if pred(m) {
            return true;
        }
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    false
}

fn smallest(n: usize, mut pred: impl FnMut(u32) -> bool) -> usize {
    (0..=n)
        .find(|&s| any_of_size(n, s, &mut pred))
        .expect("the full vertex set satisfies every predicate used here")
}

fn largest(n: usize, mut pred: impl FnMut(u32) -> bool) -> usize {
    (0..=n)
        .rev()
        .find(|&s| any_of_size(n, s, &mut pred))
        .expect("the empty set satisfies every predicate used here")
}

/// Domination number by exhaustive search over subsets.
pub fn naive_gamma(g: &Graph) -> usize {
    let need = closed_masks(g);
    smallest(g.n(), |s| need.iter().all(|&m| m & s != 0))
}

/// Simultaneous domination number: smallest set dominating every factor.
pub fn naive_sd(f: &Factoring) -> usize {
    let tables: Vec<Vec<u32>> = f.factors().iter().map(closed_masks).collect();
    smallest(f.n(), |s| {
        tables.iter().all(|t| t.iter().all(|&m| m & s != 0))
    })
}

/// Smallest set whose removal leaves maximum degree at most `t`.
pub fn naive_tau_t(g: &Graph, t: usize) -> usize {
    let nbr = open_masks(g);
    smallest(g.n(), |s| {
        (0..g.n()).all(|v| s >> v & 1 == 1 || (nbr[v] & !s).count_ones() as usize <= t)
    })
}

/// Largest set inducing a subgraph of maximum degree at most `k`.
/// Searched top-down, independently of `naive_tau_t`, so the
/// complementarity of the two numbers is something tests can check
/// rather than something baked in.
pub fn naive_alpha_k(g: &Graph, k: usize) -> usize {
    let nbr = open_masks(g);
    largest(g.n(), |s| {
        (0..g.n()).all(|v| s >> v & 1 == 0 || (nbr[v] & s).count_ones() as usize <= k)
    })
}

/// Transversal number of a hypergraph given as raw edge lists.
pub fn naive_tau_hypergraph(n: usize, edges: &[Vec<usize>]) -> usize {
    assert!(n <= ORACLE_CAP);
    let masks: Vec<u32> = edges
        .iter()
        .map(|e| {
            assert!(!e.is_empty());
            e.iter().fold(0u32, |m, &v| m | 1 << v)
        })
        .collect();
    smallest(n, |s| masks.iter().all(|&m| m & s != 0))
}

/// A graph drawn edge-by-edge with probability `p`, built straight from an
/// edge list so the tests do not depend on the library's generators.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("in-range edges")
}

pub fn random_factoring(n: usize, k: usize, p: f64, rng: &mut impl Rng) -> Factoring {
    let factors = (0..k).map(|_| random_graph(n, p, rng)).collect();
    Factoring::new(factors).expect("equal vertex counts")
}

/// A uniformly random `r`-subset of `0..n`, forced through `first` if given.
fn random_r_subset(n: usize, r: usize, first: Option<usize>, rng: &mut impl Rng) -> Vec<usize> {
    let mut verts: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        verts.swap(i, j);
    }
    let mut e: Vec<usize> = match first {
        Some(v) => std::iter::once(v)
            .chain(verts.into_iter().filter(|&u| u != v))
            .take(r)
            .collect(),
        None => verts.into_iter().take(r).collect(),
    };
    e.sort_unstable();
    e
}

/// An `r`-uniform hypergraph on `n` vertices in which every vertex lies in
/// at least one edge. Edges are random `r`-subsets; extras pad thin spots.
pub fn random_uniform_hypergraph(
    n: usize,
    r: usize,
    extra_edges: usize,
    rng: &mut impl Rng,
) -> Vec<Vec<usize>> {
    assert!(r >= 2 && r <= n);
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut covered = vec![false; n];
    for v in 0..n {
        if !covered[v] {
            let e = random_r_subset(n, r, Some(v), rng);
            for &u in &e {
                covered[u] = true;
            }
            edges.push(e);
        }
    }
    for _ in 0..extra_edges {
        edges.push(random_r_subset(n, r, None, rng));
    }
    edges.sort();
    edges.dedup();
    edges
}
