//! Generators for the factoring families with known exact SD numbers, the
//! random instance models used by the experiment harness, and a random
//! search probe for the two-factor minimum-degree-2 extremal question.

use num::rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{sd_number_exact, EXACT_CAP};
use crate::factoring::Factoring;
use crate::graph::Graph;
use crate::numeric::ratio_u;

const GENERATION_RETRIES: usize = 2000;

/// k spanning stars with centers 0..k−1. Every γ(F_i) = 1 while γ_sd = k:
/// the sum side of the sandwich is tight here.
pub fn gen_star_factoring(k: usize, n: usize) -> Result<Factoring> {
    if k < 2 || n <= k {
        return Err(Error::BadParameter(format!(
            "star factoring needs n > k \u{2265} 2, got k={k}, n={n}"
        )));
    }
    Factoring::new((0..k).map(|c| Graph::star(n, c)).collect::<Result<_>>()?)
}

/// Two spanning trees on n = 3t vertices: F_1 is the path u_1…u_t with a
/// pendant pair {v_i, z_i} at each u_i, and F_2 is the path z_1…z_t with
/// the pendant pair {u_i, v_i} at each z_i. Any SD-set meets each triple
/// {u_i, v_i, z_i} at least twice, so γ_sd = 2n/3 while γ(F_1) = γ(F_2) = t.
pub fn gen_tree_pair(t: usize) -> Result<Factoring> {
    if t < 1 {
        return Err(Error::BadParameter(format!(
            "tree pair needs t \u{2265} 1, got {t}"
        )));
    }
    let n = 3 * t;
    let (u, v, z) = (|i| i, |i: usize| t + i, |i: usize| 2 * t + i);
    let mut e1 = Vec::with_capacity(3 * t - 1);
    let mut e2 = Vec::with_capacity(3 * t - 1);
    for i in 0..t {
        if i + 1 < t {
            e1.push((u(i), u(i + 1)));
            e2.push((z(i), z(i + 1)));
        }
        e1.push((u(i), v(i)));
        e1.push((u(i), z(i)));
        e2.push((z(i), u(i)));
        e2.push((z(i), v(i)));
    }
    Factoring::new(vec![Graph::from_edges(n, &e1)?, Graph::from_edges(n, &e2)?])
}

/// Round-robin 1-factorization of K_{2m}: fix the last vertex; in round r
/// it pairs with r, and (r+j) pairs with (r−j) modulo 2m−1 for 1 ≤ j < m.
fn circle_method_rounds(block_order: usize) -> Vec<Vec<(usize, usize)>> {
    debug_assert!(block_order >= 2 && block_order.is_multiple_of(2));
    let modulus = block_order - 1;
    (0..modulus)
        .map(|r| {
            let mut pairs = vec![(block_order - 1, r)];
            for j in 1..block_order / 2 {
                pairs.push(((r + j) % modulus, (r + modulus - j) % modulus));
            }
            pairs
        })
        .collect()
}

/// k perfect matchings (k odd) whose union is a disjoint union of K_{k+1}
/// blocks on n = copies·(k+1) vertices; γ_sd = kn/(k+1).
pub fn gen_one_factorization(k: usize, copies: usize) -> Result<Factoring> {
    if k.is_multiple_of(2) || copies < 1 {
        return Err(Error::BadParameter(format!(
            "needs odd k \u{2265} 1 and copies \u{2265} 1, got k={k}, copies={copies}; \
             even k duplicates a factor instead"
        )));
    }
    let block = k + 1;
    let n = copies * block;
    let rounds = circle_method_rounds(block);
    debug_assert_eq!(rounds.len(), k);
    let factors = rounds
        .iter()
        .map(|pairs| {
            let mut edges = Vec::with_capacity(copies * pairs.len());
            for b in 0..copies {
                let base = b * block;
                edges.extend(pairs.iter().map(|&(x, y)| (base + x, base + y)));
            }
            Graph::from_edges(n, &edges)
        })
        .collect::<Result<Vec<_>>>()?;
    Factoring::new(factors)
}

/// k factors (k even): the k−1 matchings of a 1-factorization of K_k
/// blocks on n = copies·k vertices, with the last factor repeated;
/// γ_sd = (k−1)n/k.
pub fn gen_one_factorization_even(k: usize, copies: usize) -> Result<Factoring> {
    if !k.is_multiple_of(2) || k < 2 || copies < 1 {
        return Err(Error::BadParameter(format!(
            "needs even k \u{2265} 2 and copies \u{2265} 1, got k={k}, copies={copies}"
        )));
    }
    let base = gen_one_factorization(k - 1, copies)?;
    let mut factors: Vec<Graph> = base.factors().to_vec();
    factors.push(
        factors
            .last()
            .expect("k \u{2212} 1 \u{2265} 1 factors")
            .clone(),
    );
    Factoring::new(factors)
}

/// Two edge-disjoint spanning 5-cycle unions on n = 5·copies vertices —
/// strides 1 and 2 within each block of five — whose union is a disjoint
/// union of K_5 blocks; γ_sd = 3n/5.
pub fn gen_k5_two_c5(copies: usize) -> Result<Factoring> {
    if copies < 1 {
        return Err(Error::BadParameter(format!(
            "needs copies \u{2265} 1, got {copies}"
        )));
    }
    let n = 5 * copies;
    let stride_cycles = |stride: usize| -> Result<Graph> {
        let mut edges = Vec::with_capacity(n);
        for b in 0..copies {
            let base = 5 * b;
            edges.extend((0..5).map(|i| (base + i, base + (i + stride) % 5)));
        }
        Graph::from_edges(n, &edges)
    };
    Factoring::new(vec![stride_cycles(1)?, stride_cycles(2)?])
}

/// Per-factor shape for random factorings.
#[derive(Debug, Clone, PartialEq)]
pub enum RandomModel {
    /// Independent edges with probability p, rejecting samples below the
    /// minimum degree.
    Gnp {
        p: f64,
        min_degree: usize,
    },
    /// Uniform-ish d-regular graph via the pairing model with rejection.
    Regular {
        d: usize,
    },
    /// Disjoint complete blocks K_r on a shuffled vertex order.
    KrUnion {
        r: usize,
    },
    /// Disjoint cycle blocks C_r on a shuffled vertex order.
    CrUnion {
        r: usize,
    },
    HamiltonianCycle,
    PerfectMatching,
}

/// k independent factors drawn from one model. Deterministic for a given
/// (n, k, model, seed).
pub fn gen_random_factoring(
    n: usize,
    k: usize,
    model: &RandomModel,
    seed: u64,
) -> Result<Factoring> {
    if n < 1 || k < 1 {
        return Err(Error::BadParameter(format!(
            "needs n \u{2265} 1 and k \u{2265} 1, got n={n}, k={k}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Factoring::new(
        (0..k)
            .map(|_| gen_factor(n, model, &mut rng))
            .collect::<Result<Vec<_>>>()?,
    )
}

fn gen_factor(n: usize, model: &RandomModel, rng: &mut ChaCha8Rng) -> Result<Graph> {
    match *model {
        RandomModel::Gnp { p, min_degree } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::BadProbability { p });
            }
            if min_degree >= n {
                return Err(Error::BadParameter(format!(
                    "minimum degree {min_degree} impossible on {n} vertices"
                )));
            }
            for _ in 0..GENERATION_RETRIES {
                let mut edges = Vec::new();
                for x in 0..n {
                    for y in (x + 1)..n {
                        if rng.gen_bool(p) {
                            edges.push((x, y));
                        }
                    }
                }
                let g = Graph::from_edges(n, &edges)?;
                if g.min_degree() >= min_degree {
                    return Ok(g);
                }
            }
            Err(Error::Generation(format!(
                "no G({n}, {p:.3}) sample reached minimum degree {min_degree} \
                 in {GENERATION_RETRIES} attempts"
            )))
        }
        RandomModel::Regular { d } => {
            if d >= n || !(n * d).is_multiple_of(2) {
                return Err(Error::BadParameter(format!(
                    "regular model needs d < n and n\u{00B7}d even, got n={n}, d={d}"
                )));
            }
            'attempt: for _ in 0..GENERATION_RETRIES {
                let mut points: Vec<usize> =
                    (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
                points.shuffle(rng);
                let mut seen = std::collections::HashSet::new();
                let mut edges = Vec::with_capacity(n * d / 2);
                for pair in points.chunks(2) {
                    let (x, y) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
                    if x == y || !seen.insert((x, y)) {
                        continue 'attempt;
                    }
                    edges.push((x, y));
                }
                return Graph::from_edges(n, &edges);
            }
            Err(Error::Generation(format!(
                "pairing model produced no simple {d}-regular graph on {n} vertices \
                 in {GENERATION_RETRIES} attempts"
            )))
        }
        RandomModel::KrUnion { r } => {
            if r < 2 {
                return Err(Error::BadParameter(format!(
                    "complete blocks need r \u{2265} 2, got {r}"
                )));
            }
            let blocks = shuffled_blocks(n, r, rng)?;
            let mut edges = Vec::with_capacity(blocks.len() * r * (r - 1) / 2);
            for b in &blocks {
                for i in 0..r {
                    edges.extend((i + 1..r).map(|j| (b[i], b[j])));
                }
            }
            Graph::from_edges(n, &edges)
        }
        RandomModel::CrUnion { r } => {
            if r < 3 {
                return Err(Error::BadParameter(format!(
                    "cycle blocks need r \u{2265} 3, got {r}"
                )));
            }
            let blocks = shuffled_blocks(n, r, rng)?;
            let mut edges = Vec::with_capacity(n);
            for b in &blocks {
                edges.extend((0..r).map(|i| (b[i], b[(i + 1) % r])));
            }
            Graph::from_edges(n, &edges)
        }
        RandomModel::HamiltonianCycle => {
            if n < 3 {
                return Err(Error::BadParameter(format!(
                    "a spanning cycle needs n \u{2265} 3, got {n}"
                )));
            }
            let order = shuffled_blocks(n, n, rng)?.pop().expect("one block");
            Graph::from_edges(
                n,
                &(0..n)
                    .map(|i| (order[i], order[(i + 1) % n]))
                    .collect::<Vec<_>>(),
            )
        }
        RandomModel::PerfectMatching => {
            if !n.is_multiple_of(2) {
                return Err(Error::BadParameter(format!(
                    "a perfect matching needs even n, got {n}"
                )));
            }
            let blocks = shuffled_blocks(n, 2, rng)?;
            Graph::from_edges(n, &blocks.iter().map(|b| (b[0], b[1])).collect::<Vec<_>>())
        }
    }
}

fn shuffled_blocks(n: usize, r: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Vec<usize>>> {
    if r < 1 || !n.is_multiple_of(r) {
        return Err(Error::BadParameter(format!(
            "block order {r} must divide n={n}"
        )));
    }
    let mut verts: Vec<usize> = (0..n).collect();
    verts.shuffle(rng);
    Ok(verts.chunks(r).map(<[usize]>::to_vec).collect())
}

/// A graph on 2·half vertices whose domination number is exactly half the
/// order: X = {0, …, half−1} independent, x_i matched to y_i = half + i,
/// and a connected random graph on Y. The closed neighborhoods of the X
/// vertices are disjoint pairs, forcing γ ≥ n/2, while Y itself dominates.
pub fn gen_family_g(half: usize, seed: u64) -> Result<Graph> {
    if half < 1 {
        return Err(Error::BadParameter(format!(
            "needs half \u{2265} 1, got {half}"
        )));
    }
    let n = 2 * half;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = (0..half).map(|i| (i, half + i)).collect();
    for j in 1..half {
        let parent = rng.gen_range(0..j);
        edges.push((half + parent, half + j));
    }
    for i in 0..half {
        for j in (i + 1)..half {
            if rng.gen_bool(0.25) {
                edges.push((half + i, half + j));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, &edges)
}

#[derive(Debug, Clone)]
pub struct ProbeHit {
    pub gamma_sd: usize,
    /// The factoring in its file format, for replay.
    pub instance: String,
}

#[derive(Debug, Clone)]
pub struct ProbeReport {
    pub n: usize,
    pub trials: usize,
    /// Trials whose generation succeeded and were solved.
    pub generated: usize,
    pub best: Option<ProbeHit>,
    /// Instances with γ_sd > 3n/5, i.e. 5·γ_sd > 3n.
    pub counterexample_candidates: Vec<ProbeHit>,
}

impl ProbeReport {
    pub fn best_ratio(&self) -> Option<BigRational> {
        self.best.as_ref().map(|h| ratio_u(h.gamma_sd, self.n))
    }

    /// What this search can and cannot show.
    pub fn disclaimer() -> &'static str {
        "random search over a finite sample: it can surface witness instances, \
         never rule them out"
    }
}

/// Random search over two-factor, minimum-degree-2 factorings for SD
/// numbers beyond 3n/5. Values are exact, so n must lie within the solver
/// cap. An empty candidate list is evidence of nothing.
pub fn probe_conjecture(n: usize, trials: usize, seed: u64) -> Result<ProbeReport> {
    if n > EXACT_CAP {
        return Err(Error::CapExceeded { n, cap: EXACT_CAP });
    }
    if n < 3 {
        return Err(Error::BadParameter(format!("needs n \u{2265} 3, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = ProbeReport {
        n,
        trials,
        generated: 0,
        best: None,
        counterexample_candidates: Vec::new(),
    };
    for _ in 0..trials {
        let p = rng.gen_range(0.2..0.7);
        let trial_seed = rng.gen::<u64>();
        let model = RandomModel::Gnp { p, min_degree: 2 };
        let Ok(f) = gen_random_factoring(n, 2, &model, trial_seed) else {
            continue;
        };
        report.generated += 1;
        let gamma_sd = sd_number_exact(&f)?.size();
        if report.best.as_ref().is_none_or(|b| gamma_sd > b.gamma_sd) {
            report.best = Some(ProbeHit {
                gamma_sd,
                instance: f.serialize(),
            });
        }
        if 5 * gamma_sd > 3 * n {
            report.counterexample_candidates.push(ProbeHit {
                gamma_sd,
                instance: f.serialize(),
            });
        }
    }
    Ok(report)
}
