use num::rational::BigRational;
use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numeric::{
    dyadic_approx, floor_linear_root_bound, from_int, perfect_root, pow, ratio_u, to_f64,
};
use crate::vertex_set::VertexSet;

/// Hypergraph on vertices 0..n. Duplicate edges are kept deliberately: they
/// arise when several factors contribute the same closed neighborhood, and
/// the sampling bound counts them in m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
    rank: usize,
    uniform_r: Option<usize>,
}

impl Hypergraph {
    pub fn new(n: usize, edge_lists: &[Vec<usize>]) -> Result<Hypergraph> {
        let mut edges = Vec::with_capacity(edge_lists.len());
        for (index, list) in edge_lists.iter().enumerate() {
            if list.is_empty() {
                return Err(Error::EmptyEdge { index });
            }
            for &v in list {
                if v >= n {
                    return Err(Error::VertexOutOfRange { v, n });
                }
            }
            edges.push(VertexSet::from_indices(n, list.iter().copied()));
        }
        Ok(Self::from_sets_unchecked(n, edges))
    }

    pub fn from_sets(n: usize, edges: Vec<VertexSet>) -> Result<Hypergraph> {
        for (index, e) in edges.iter().enumerate() {
            if e.is_empty() {
                return Err(Error::EmptyEdge { index });
            }
        }
        Ok(Self::from_sets_unchecked(n, edges))
    }

    fn from_sets_unchecked(n: usize, edges: Vec<VertexSet>) -> Hypergraph {
        let rank = edges.iter().map(VertexSet::len).max().unwrap_or(0);
        let uniform_r = if !edges.is_empty() && edges.iter().all(|e| e.len() == rank) {
            Some(rank)
        } else {
            None
        };
        Hypergraph {
            n,
            edges,
            rank,
            uniform_r,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// Largest edge size.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Some(r) iff every edge has size r.
    pub fn uniform_r(&self) -> Option<usize> {
        self.uniform_r
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn min_vertex_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Average degree (sum of edge sizes)/n; equals rm/n when r-uniform.
    pub fn average_degree(&self) -> BigRational {
        let total: usize = self.edges.iter().map(VertexSet::len).sum();
        ratio_u(total, self.n)
    }
}

pub fn is_transversal(h: &Hypergraph, s: &VertexSet) -> bool {
    h.edges.iter().all(|e| e.intersects(s))
}

/// The closed-neighborhood hypergraph: one edge N[v] per vertex, ascending.
/// Its transversals are exactly the dominating sets of g.
pub fn neighborhood_hypergraph(g: &Graph) -> Hypergraph {
    let n = g.n();
    let edges = (0..n).map(|v| g.closed_neighborhood(v)).collect();
    Hypergraph::from_sets_unchecked(n, edges)
}

/// Shrink every edge to its r lowest-index vertices. Any transversal of the
/// result is a transversal of the input.
pub fn shrink_to_uniform(h: &Hypergraph, r: usize) -> Result<Hypergraph> {
    if r < 1 {
        return Err(Error::RankTooSmall { r });
    }
    let mut edges = Vec::with_capacity(h.m());
    for (index, e) in h.edges.iter().enumerate() {
        let size = e.len();
        if size < r {
            return Err(Error::ShrinkTooSmall { index, size, r });
        }
        edges.push(VertexSet::from_indices(h.n, e.iter().take(r)));
    }
    Ok(Hypergraph::from_sets_unchecked(h.n, edges))
}

/// The sampling probability minimizing np + m(1−p)^r: p* = 1 − (1/d)^(1/(r−1)).
pub fn optimal_p(r: usize, d: f64) -> Result<f64> {
    if r < 2 {
        return Err(Error::RankTooSmall { r });
    }
    if d < 1.0 {
        return Err(Error::DegreeBelowOne {
            num: (d * 1_000_000.0).round() as usize,
            den: 1_000_000,
        });
    }
    Ok(1.0 - (1.0 / d).powf(1.0 / (r as f64 - 1.0)))
}

/// The two transversal bounds for an r-uniform hypergraph with average
/// degree d = rm/n ≥ 1: the main term (1 − ((r−1)/r)(1/d)^(1/(r−1)))·n and
/// its relaxation n(ln d + 1)/r.
pub struct TransversalBound {
    pub main: f64,
    pub relaxation: f64,
    /// floor(main), computed in exact rational arithmetic.
    pub floor_main: usize,
    /// Exact value when (1/d)^(1/(r−1)) is rational.
    pub exact: Option<BigRational>,
}

pub fn transversal_bound(r: usize, n: usize, m: usize) -> Result<TransversalBound> {
    if r < 2 {
        return Err(Error::RankTooSmall { r });
    }
    if n == 0 || m == 0 || r * m < n {
        return Err(Error::DegreeBelowOne { num: r * m, den: n });
    }
    let e = (r - 1) as u32;
    let c = ratio_u(r - 1, r);
    let a = ratio_u(n, r * m); // 1/d
    let d = (r * m) as f64 / n as f64;
    let main = n as f64 * (1.0 - to_f64(&c) * (1.0 / d).powf(1.0 / e as f64));
    let relaxation = n as f64 * (d.ln() + 1.0) / r as f64;
    // main ≤ relaxation holds for every d ≥ 1; float slack only
    debug_assert!(main <= relaxation + 1e-9 * n as f64);
    let floor_main = floor_linear_root_bound(n, &c, &a, e);
    let exact = perfect_root(&a, e).map(|root| from_int(n) * (BigRational::one() - c * root));
    Ok(TransversalBound {
        main,
        relaxation,
        floor_main,
        exact,
    })
}

/// Sample every vertex independently with probability p (seeded, ascending
/// order), then add the lowest-index vertex of every edge the sample missed.
pub fn randomized_transversal(h: &Hypergraph, p: f64, seed: u64) -> Result<VertexSet> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadProbability { p });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = VertexSet::new(h.n);
    for v in 0..h.n {
        if rng.gen_bool(p) {
            x.insert(v);
        }
    }
    for e in &h.edges {
        if !e.intersects(&x) {
            x.insert(e.first().expect("edges are nonempty"));
        }
    }
    debug_assert!(is_transversal(h, &x));
    Ok(x)
}

/// Full record of a derandomized run, for inspection and tests.
pub struct TransversalRun {
    pub set: VertexSet,
    /// Vertices chosen by the conditional-expectation walk (before repair).
    pub sampled: VertexSet,
    /// Vertices added by the repair pass.
    pub repaired: VertexSet,
    /// floor(np* + m(1−p*)^r), the certified size bound.
    pub floor_bound: usize,
    /// The rational sampling probability the walk used.
    pub p: BigRational,
    /// Estimator after each decision; never increases.
    pub estimator_trace: Vec<BigRational>,
}

/// Derandomize the sampling argument by the method of conditional
/// expectations, entirely in exact rational arithmetic.
///
/// The walk keeps the pessimistic estimator |X| + p·(undecided) + Σ over
/// unhit edges of (1−p)^(undecided in edge); each decision takes the branch
/// that does not increase it, so the final |X| + |missed edges| is at most
/// the initial value np + m(1−p)^r. The rational p is chosen so close to the
/// optimum p* that the initial value stays below floor(f(p*)) + 1 — checked
/// exactly — which certifies the returned size against the p* bound.
pub fn derandomized_transversal(h: &Hypergraph) -> Result<VertexSet> {
    Ok(derandomized_transversal_run(h)?.set)
}

pub fn derandomized_transversal_run(h: &Hypergraph) -> Result<TransversalRun> {
    let r = match h.uniform_r {
        Some(r) if r >= 2 => r,
        Some(r) => return Err(Error::RankTooSmall { r }),
        None => {
            return Err(Error::NotUniform {
                index: 0,
                size: h.edges.first().map(VertexSet::len).unwrap_or(0),
                expected: h.rank,
            })
        }
    };
    let (n, m) = (h.n, h.m());
    if r * m < n {
        return Err(Error::DegreeBelowOne { num: r * m, den: n });
    }
    let floor_bound =
        floor_linear_root_bound(n, &ratio_u(r - 1, r), &ratio_u(n, r * m), (r - 1) as u32);
    let p = choose_walk_probability(r, n, m, floor_bound);

    let q = BigRational::one() - &p;
    let mut qpow = vec![BigRational::one(); r + 1];
    for j in 1..=r {
        qpow[j] = &qpow[j - 1] * &q;
    }
    let mut edges_of = vec![Vec::new(); n];
    for (i, e) in h.edges.iter().enumerate() {
        for v in e.iter() {
            edges_of[v].push(i);
        }
    }
    let mut hit = vec![false; m];
    let mut undecided: Vec<usize> = h.edges.iter().map(VertexSet::len).collect();
    let mut estimator = from_int(n) * &p + from_int(m) * &qpow[r];
    let mut trace = vec![estimator.clone()];
    let mut sampled = VertexSet::new(n);

    for (v, incident) in edges_of.iter().enumerate() {
        let mut sum_u = BigRational::zero();
        let mut sum_u1 = BigRational::zero();
        for &ei in incident {
            if !hit[ei] {
                sum_u += &qpow[undecided[ei]];
                sum_u1 += &qpow[undecided[ei] - 1];
            }
        }
        let e_in = &estimator + BigRational::one() - &p - &sum_u;
        let e_out = &estimator - &p + &sum_u1 - &sum_u;
        if e_in <= e_out {
            sampled.insert(v);
            for &ei in incident {
                hit[ei] = true;
            }
            estimator = e_in;
        } else {
            for &ei in incident {
                if !hit[ei] {
                    undecided[ei] -= 1;
                }
            }
            estimator = e_out;
        }
        debug_assert!(estimator <= *trace.last().unwrap());
        trace.push(estimator.clone());
    }

    // with everything decided the estimator must equal |X| + |missed edges|
    let missed: Vec<usize> = (0..m).filter(|&i| !hit[i]).collect();
    debug_assert_eq!(estimator, from_int(sampled.len() + missed.len()));

    let mut set = sampled.clone();
    let mut repaired = VertexSet::new(n);
    for &ei in &missed {
        let v = h.edges[ei].first().expect("edges are nonempty");
        set.insert(v);
        repaired.insert(v);
    }
    debug_assert!(is_transversal(h, &set));
    debug_assert!(set.len() <= floor_bound);
    Ok(TransversalRun {
        set,
        sampled,
        repaired,
        floor_bound,
        p,
        estimator_trace: trace,
    })
}

/// A rational p with np + m(1−p)^r < floor(f(p*)) + 1, verified exactly.
fn choose_walk_probability(r: usize, n: usize, m: usize, floor_bound: usize) -> BigRational {
    let e = (r - 1) as u32;
    let a = ratio_u(n, r * m); // (1/d)
    let target = from_int(floor_bound + 1);
    let initial = |p: &BigRational| -> BigRational {
        from_int(n) * p + from_int(m) * pow(&(BigRational::one() - p), r as u32)
    };
    if a.is_one() {
        return BigRational::zero(); // d = 1, p* = 0
    }
    if let Some(root) = perfect_root(&a, e) {
        return BigRational::one() - root; // p* itself is rational
    }
    let p_hat = 1.0 - to_f64(&a).powf(1.0 / e as f64);
    for bits in [40u32, 48, 56, 64] {
        let p = dyadic_approx(p_hat, bits);
        if initial(&p) < target {
            return p;
        }
    }
    // exact bisection toward x = a^(1/e) from above; p = 1 − hi tends to p*
    let mut lo = BigRational::zero();
    let mut hi = BigRational::one();
    for _ in 0..512 {
        let mid = (&lo + &hi) / from_int(2);
        if pow(&mid, e) >= a {
            hi = mid;
        } else {
            lo = mid;
        }
        let p = BigRational::one() - &hi;
        if initial(&p) < target {
            return p;
        }
    }
    unreachable!("f is continuous at p* and f(p*) < floor(f(p*)) + 1, so bisection terminates");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::ratio;

    #[test]
    fn neighborhood_edges() {
        let k3 = Graph::complete(3);
        let nh = neighborhood_hypergraph(&k3);
        assert_eq!(nh.m(), 3);
        assert!(nh.edges().iter().all(|e| e.len() == 3));
        assert_eq!(nh.uniform_r(), Some(3));

        let c4 = Graph::cycle(4).unwrap();
        let nh = neighborhood_hypergraph(&c4);
        assert_eq!(nh.m(), 4);
        assert!(nh.edges().iter().all(|e| e.len() == 3));
        assert_eq!(nh.rank(), 3);
    }

    #[test]
    fn shrink_rules() {
        let h = Hypergraph::new(5, &[vec![0, 1, 2, 3]]).unwrap();
        let s = shrink_to_uniform(&h, 3).unwrap();
        assert_eq!(s.edges()[0].to_vec(), vec![0, 1, 2]);
        // identity when already uniform
        let h3 = Hypergraph::new(5, &[vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        assert_eq!(shrink_to_uniform(&h3, 3).unwrap(), h3);
        // too small
        match shrink_to_uniform(&h3, 4) {
            Err(Error::ShrinkTooSmall {
                index: 0,
                size: 3,
                r: 4,
            }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_edge_rejected() {
        match Hypergraph::new(3, &[vec![0], vec![]]) {
            Err(Error::EmptyEdge { index: 1 }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn optimal_p_values() {
        assert!((optimal_p(2, 4.0).unwrap() - 0.75).abs() < 1e-12);
        assert_eq!(optimal_p(2, 1.0).unwrap(), 0.0);
        assert!((optimal_p(3, 9.0).unwrap() - 2.0 / 3.0).abs() < 1e-12);
        assert!(optimal_p(3, 0.5).is_err());
        assert!(optimal_p(1, 2.0).is_err());
    }

    #[test]
    fn bound_values() {
        // r=2, n=4, m=4: d=2, main = (1 − (1/2)(1/2))·4 = 3 exactly
        let b = transversal_bound(2, 4, 4).unwrap();
        assert!((b.main - 3.0).abs() < 1e-12);
        assert_eq!(b.floor_main, 3);
        assert_eq!(b.exact, Some(from_int(3)));
        assert!(b.main <= b.relaxation);

        // single edge: d=1 → main = n/r
        let b = transversal_bound(4, 4, 1).unwrap();
        assert_eq!(b.floor_main, 1);
        assert_eq!(b.exact, Some(from_int(1)));

        // r=5, n=25, m=10: d=2, irrational coefficient
        let b = transversal_bound(5, 25, 10).unwrap();
        let expect = 25.0 * (1.0 - 0.8 * 0.5f64.powf(0.25));
        assert!((b.main - expect).abs() < 1e-9);
        assert!(b.exact.is_none());
        assert_eq!(b.floor_main, expect.floor() as usize);

        assert!(transversal_bound(2, 10, 2).is_err()); // d = 2/5 < 1
    }

    #[test]
    fn randomized_extremes() {
        let h = Hypergraph::new(6, &[vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        let all = randomized_transversal(&h, 1.0, 7).unwrap();
        assert_eq!(all.len(), 6);
        let repair = randomized_transversal(&h, 0.0, 7).unwrap();
        assert_eq!(repair.to_vec(), vec![0, 2, 4]);
        assert!(randomized_transversal(&h, 1.5, 0).is_err());
    }

    #[test]
    fn randomized_deterministic_and_valid() {
        let h = Hypergraph::new(
            8,
            &[vec![0, 1, 2], vec![2, 3, 4], vec![5, 6, 7], vec![1, 4, 7]],
        )
        .unwrap();
        let a = randomized_transversal(&h, 0.4, 99).unwrap();
        let b = randomized_transversal(&h, 0.4, 99).unwrap();
        assert_eq!(a, b);
        assert!(is_transversal(&h, &a));
    }

    #[test]
    fn randomized_mean_tracks_expectation() {
        // E(|X| + |Y|) = np + m(1−p)^r; sample mean should sit within 3
        // standard errors of a value ≤ that, for a fixed seed set
        let h = Hypergraph::new(
            12,
            &[
                vec![0, 1, 2],
                vec![3, 4, 5],
                vec![6, 7, 8],
                vec![9, 10, 11],
                vec![0, 4, 8],
                vec![1, 5, 9],
                vec![2, 6, 10],
                vec![3, 7, 11],
            ],
        )
        .unwrap();
        let (n, m, r, p) = (12.0f64, 8.0f64, 3.0f64, 0.35f64);
        let mu = n * p + m * (1.0 - p).powf(r);
        let sizes: Vec<f64> = (0..1000)
            .map(|seed| randomized_transversal(&h, p, seed).unwrap().len() as f64)
            .collect();
        let mean = sizes.iter().sum::<f64>() / sizes.len() as f64;
        let var = sizes.iter().map(|s| (s - mean).powi(2)).sum::<f64>() / (sizes.len() - 1) as f64;
        let stderr = (var / sizes.len() as f64).sqrt();
        assert!(
            mean <= mu + 3.0 * stderr,
            "mean {mean} exceeds {mu} + 3·{stderr}"
        );
    }

    #[test]
    fn derandomized_single_edge() {
        let h = Hypergraph::new(4, &[vec![0, 1, 2, 3]]).unwrap();
        let run = derandomized_transversal_run(&h).unwrap();
        assert_eq!(run.floor_bound, 1);
        assert_eq!(run.set.len(), 1);
    }

    #[test]
    fn derandomized_c4() {
        let c4 = Graph::cycle(4).unwrap();
        let h = Hypergraph::new(
            4,
            &c4.edges()
                .iter()
                .map(|&(u, v)| vec![u, v])
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let run = derandomized_transversal_run(&h).unwrap();
        assert_eq!(run.floor_bound, 3);
        assert!(run.set.len() <= 3);
        assert!(is_transversal(&h, &run.set));
    }

    #[test]
    fn derandomized_estimator_monotone_and_repair_needed() {
        let h = Hypergraph::new(
            9,
            &[
                vec![0, 1, 2],
                vec![2, 3, 4],
                vec![4, 5, 6],
                vec![6, 7, 8],
                vec![8, 0, 1],
                vec![1, 3, 5],
            ],
        )
        .unwrap();
        let run = derandomized_transversal_run(&h).unwrap();
        assert!(run.estimator_trace.windows(2).all(|w| w[1] <= w[0]));
        assert!(is_transversal(&h, &run.set));
        assert!(run.set.len() <= run.floor_bound);
        // monotone repair: without the repaired vertices some edge is missed,
        // unless no repair was needed
        if !run.repaired.is_empty() {
            assert!(!is_transversal(&h, &run.sampled));
        }
    }

    #[test]
    fn walk_probability_certified() {
        for (r, n, m) in [(2usize, 7usize, 9usize), (3, 10, 7), (4, 13, 5), (5, 11, 4)] {
            if r * m < n {
                continue;
            }
            let floor_bound =
                floor_linear_root_bound(n, &ratio_u(r - 1, r), &ratio_u(n, r * m), (r - 1) as u32);
            let p = choose_walk_probability(r, n, m, floor_bound);
            let f0 = from_int(n) * &p + from_int(m) * pow(&(BigRational::one() - &p), r as u32);
            assert!(f0 < from_int(floor_bound + 1));
            assert!(p >= BigRational::zero() && p < BigRational::one());
        }
        // d exactly 1: p = 0
        let p = choose_walk_probability(3, 9, 3, 3);
        assert_eq!(p, BigRational::zero());
        // perfect power: d = 9, r = 3 → p* = 2/3 exactly
        let p = choose_walk_probability(3, 3, 9, {
            floor_linear_root_bound(3, &ratio_u(2, 3), &ratio_u(3, 27), 2)
        });
        assert_eq!(p, ratio(2, 3));
    }
}
