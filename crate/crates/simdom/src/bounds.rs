//! Closed-form bounds on the simultaneous domination number, with exact
//! rational cores wherever the expression is rational, the coefficient
//! tables for the sampling constructions, and a per-instance report that
//! lists every bound together with its applicability.

use std::fmt;

use num::rational::BigRational;
use num::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::exact::{domination_number, EXACT_CAP};
use crate::factoring::Factoring;
use crate::graph::Graph;
use crate::numeric::{
    big_rational_to_string, from_int, pow, ratio_u, round4_scaled_one_minus_root, to_f64,
};

/// max γ(F_i) ≤ γ_sd ≤ Σ γ(F_i).
pub fn bound_sandwich(gammas: &[usize]) -> Result<(usize, usize)> {
    if gammas.is_empty() {
        return Err(Error::NoFactors);
    }
    debug_assert!(gammas.iter().all(|&g| g >= 1));
    Ok((*gammas.iter().max().expect("nonempty"), gammas.iter().sum()))
}

/// Coefficient of the best known bound over all k-factorings:
/// 2/3 for k = 2 and (2k−3)/(2k−2) for k ≥ 3.
pub fn coeff_known(k: usize) -> Result<BigRational> {
    match k {
        0 | 1 => Err(Error::BadParameter(format!(
            "the k-factoring bound needs k \u{2265} 2, got {k}"
        ))),
        2 => Ok(ratio_u(2, 3)),
        _ => Ok(ratio_u(2 * k - 3, 2 * k - 2)),
    }
}

pub fn bound_table_known(k: usize, n: usize) -> Result<BigRational> {
    Ok(coeff_known(k)? * from_int(n))
}

/// k/(k+1), valid when every factor is δ-regular for a common δ ≥ 1.
pub fn coeff_regular(k: usize) -> BigRational {
    assert!(k >= 1);
    ratio_u(k, k + 1)
}

pub fn bound_regular(k: usize, n: usize) -> BigRational {
    coeff_regular(k) * from_int(n)
}

/// ⌈d̄⌉/(⌈d̄⌉ + δ) where d̄ is the combined graph's average degree.
pub fn coeff_average_degree_cover(dbar: &BigRational, delta: usize) -> BigRational {
    assert!(delta >= 1);
    let c = dbar.ceil().to_integer().to_usize().expect("small ceiling");
    ratio_u(c, c + delta)
}

pub fn bound_average_degree_cover(dbar: &BigRational, delta: usize, n: usize) -> BigRational {
    coeff_average_degree_cover(dbar, delta) * from_int(n)
}

pub fn bound_n_minus_delta(n: usize, delta: usize) -> usize {
    assert!(delta <= n);
    n - delta
}

/// f(k, δ) = 1 − (δ/(δ+1)) · (1/(k(δ+1)))^(1/δ), the neighborhood-sampling
/// coefficient.
pub fn coeff_f(k: usize, delta: usize) -> Result<f64> {
    check_f_domain(k, delta)?;
    let d1 = (delta + 1) as f64;
    Ok(1.0 - (delta as f64 / d1) * (1.0 / (k as f64 * d1)).powf(1.0 / delta as f64))
}

/// f(k, δ) rounded half-up to 4 decimals as value·10^4, certified by
/// rational arithmetic alone.
pub fn coeff_f_scaled4(k: usize, delta: usize) -> Result<i64> {
    check_f_domain(k, delta)?;
    Ok(round4_scaled_one_minus_root(
        &ratio_u(delta, delta + 1),
        &ratio_u(1, k * (delta + 1)),
        delta as u32,
    ))
}

fn check_f_domain(k: usize, delta: usize) -> Result<()> {
    if k < 2 || delta < 1 {
        return Err(Error::BadParameter(format!(
            "f(k, \u{03B4}) needs k \u{2265} 2 and \u{03B4} \u{2265} 1, got k={k}, \u{03B4}={delta}"
        )));
    }
    Ok(())
}

/// g(k, r) = 1 − ((r−1)/r) · (1/k)^(1/(r−1)), the block-transversal
/// coefficient.
pub fn coeff_g(k: usize, r: usize) -> Result<f64> {
    check_g_domain(k, r)?;
    Ok(1.0 - ((r - 1) as f64 / r as f64) * (1.0 / k as f64).powf(1.0 / (r - 1) as f64))
}

pub fn coeff_g_scaled4(k: usize, r: usize) -> Result<i64> {
    check_g_domain(k, r)?;
    Ok(round4_scaled_one_minus_root(
        &ratio_u(r - 1, r),
        &ratio_u(1, k),
        (r - 1) as u32,
    ))
}

fn check_g_domain(k: usize, r: usize) -> Result<()> {
    if k < 2 || r < 2 {
        return Err(Error::BadParameter(format!(
            "g(k, r) needs k \u{2265} 2 and r \u{2265} 2, got k={k}, r={r}"
        )));
    }
    Ok(())
}

/// (1 − ((r−1)/r)^(k−1)), the inductive coefficient for k complete-block
/// factors of block order r.
pub fn coeff_kr_inductive(k: usize, r: usize) -> Result<BigRational> {
    check_g_domain(k, r)?;
    Ok(BigRational::one() - pow(&ratio_u(r - 1, r), (k - 1) as u32))
}

pub fn bound_kr_inductive(k: usize, r: usize, n: usize) -> Result<BigRational> {
    Ok(coeff_kr_inductive(k, r)? * from_int(n))
}

/// k/(2r) for even k and (r(k+1) − 2)/(2r²) for odd k: the pairing
/// coefficient for k complete-block factors.
pub fn coeff_kr_pairing(k: usize, r: usize) -> Result<BigRational> {
    check_g_domain(k, r)?;
    if k.is_multiple_of(2) {
        Ok(ratio_u(k, 2 * r))
    } else {
        Ok(ratio_u(r * (k + 1) - 2, 2 * r * r))
    }
}

pub fn bound_kr_pairing(k: usize, r: usize, n: usize) -> Result<BigRational> {
    Ok(coeff_kr_pairing(k, r)? * from_int(n))
}

/// (k−1)/k for even k and k/(k+1) for odd k: the coefficient when every
/// factor is a perfect matching.
pub fn coeff_one_factors(k: usize) -> Result<BigRational> {
    if k < 1 {
        return Err(Error::BadParameter("at least one factor required".into()));
    }
    if k.is_multiple_of(2) {
        Ok(ratio_u(k - 1, k))
    } else {
        Ok(ratio_u(k, k + 1))
    }
}

pub fn bound_one_factors(k: usize, n: usize) -> Result<BigRational> {
    Ok(coeff_one_factors(k)? * from_int(n))
}

/// 1 − (1/2)(2/3)^(k−2), the residue-class coefficient for k spanning
/// cycles on n ≡ 0 (mod 6) vertices.
pub fn coeff_cycles(k: usize) -> Result<BigRational> {
    if k < 2 {
        return Err(Error::BadParameter(format!(
            "the spanning-cycle bound needs k \u{2265} 2, got {k}"
        )));
    }
    Ok(BigRational::one() - ratio_u(1, 2) * pow(&ratio_u(2, 3), (k - 2) as u32))
}

pub fn bound_cycles(k: usize, n: usize) -> Result<BigRational> {
    Ok(coeff_cycles(k)? * from_int(n))
}

/// ⌈n/2⌉ for two spanning cycles.
pub fn bound_cycle_pair(n: usize) -> usize {
    n.div_ceil(2)
}

/// 1 − (2/5)(3/5)^(k−2), the coefficient for k factors made of 5-cycle
/// blocks.
pub fn coeff_c5(k: usize) -> Result<BigRational> {
    if k < 2 {
        return Err(Error::BadParameter(format!(
            "the 5-cycle-block bound needs k \u{2265} 2, got {k}"
        )));
    }
    Ok(BigRational::one() - ratio_u(2, 5) * pow(&ratio_u(3, 5), (k - 2) as u32))
}

pub fn bound_c5(k: usize, n: usize) -> Result<BigRational> {
    Ok(coeff_c5(k)? * from_int(n))
}

/// Caro–Wei: α(G) ≥ Σ_v 1/(1 + d(v)), computed exactly.
pub fn bound_caro_wei(g: &Graph) -> BigRational {
    (0..g.n()).map(|v| ratio_u(1, 1 + g.degree(v))).sum()
}

/// The averaged relaxation n/(d̄ + 1) = n²/(2m + n) of Caro–Wei.
pub fn bound_caro_wei_average(g: &Graph) -> BigRational {
    let (two_m, n) = g.average_degree();
    assert!(n >= 1);
    ratio_u(n * n, two_m + n)
}

/// Caro–Hansberg: α_t(G) ≥ ((t+1)/(⌈d̄⌉ + t + 1)) n.
pub fn bound_caro_hansberg(g: &Graph, t: usize) -> BigRational {
    let c = g.average_degree_ceil();
    ratio_u((t + 1) * g.n(), c + t + 1)
}

#[derive(Debug, Clone, PartialEq)]
pub enum BoundValue {
    Exact(BigRational),
    Approx(f64),
}

impl BoundValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            BoundValue::Exact(x) => to_f64(x),
            BoundValue::Approx(x) => *x,
        }
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Exact(x) => write!(f, "{}", big_rational_to_string(x)),
            BoundValue::Approx(x) => write!(f, "{x:.6}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Lower,
    Upper,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::Lower => write!(f, "lower"),
            BoundKind::Upper => write!(f, "upper"),
        }
    }
}

/// One bound in a report: its coefficient of n when it has that shape, its
/// evaluated value, and either an applicable flag or the violated
/// precondition.
#[derive(Debug, Clone)]
pub struct BoundEntry {
    pub label: &'static str,
    pub kind: BoundKind,
    pub coefficient: Option<BoundValue>,
    pub value: Option<BoundValue>,
    pub applicable: bool,
    pub note: Option<String>,
}

impl BoundEntry {
    fn upper(label: &'static str) -> Self {
        BoundEntry {
            label,
            kind: BoundKind::Upper,
            coefficient: None,
            value: None,
            applicable: false,
            note: None,
        }
    }

    fn lower(label: &'static str) -> Self {
        BoundEntry {
            kind: BoundKind::Lower,
            ..BoundEntry::upper(label)
        }
    }

    fn exact_value(mut self, v: BigRational) -> Self {
        self.value = Some(BoundValue::Exact(v));
        self.applicable = true;
        self
    }

    fn exact_coeff(mut self, c: BigRational, n: usize) -> Self {
        self.value = Some(BoundValue::Exact(&c * from_int(n)));
        self.coefficient = Some(BoundValue::Exact(c));
        self.applicable = true;
        self
    }

    fn approx_coeff(mut self, c: f64, n: usize) -> Self {
        self.value = Some(BoundValue::Approx(c * n as f64));
        self.coefficient = Some(BoundValue::Approx(c));
        self.applicable = true;
        self
    }

    fn rejected(mut self, note: impl Into<String>) -> Self {
        self.applicable = false;
        self.note = Some(note.into());
        self
    }
}

/// Structural facts about a factoring that bound applicability depends on.
/// The flags are independent: a factoring of two spanning 5-cycles is at
/// once `spanning_cycles`, a 5-cycle block union, and 2-regular.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StructureProfile {
    pub one_factors: bool,
    pub spanning_cycles: bool,
    /// Common block order when every factor is a disjoint union of complete
    /// blocks K_r, r ≥ 2.
    pub kr_order: Option<usize>,
    /// Common block length when every factor is a disjoint union of cycle
    /// blocks C_r, r ≥ 3.
    pub cr_order: Option<usize>,
    /// Common degree when every factor is regular of the same degree.
    pub regular_degree: Option<usize>,
}

impl StructureProfile {
    pub fn detect(f: &Factoring) -> Self {
        let n = f.n();
        let one_factors = f.factors().iter().all(|g| (0..n).all(|v| g.degree(v) == 1));
        let spanning_cycles = f.factors().iter().all(Graph::is_spanning_cycle);
        let kr_order = common_block_order(f, Graph::is_complete, 2);
        let cr_order = common_block_order(f, Graph::is_spanning_cycle, 3);
        let d = f.factor(0).max_degree();
        let regular_degree = f
            .factors()
            .iter()
            .all(|g| g.min_degree() == d && g.max_degree() == d)
            .then_some(d);
        StructureProfile {
            one_factors,
            spanning_cycles,
            kr_order,
            cr_order,
            regular_degree,
        }
    }

    /// Fill in what the set flags imply, for descriptors built by hand:
    /// perfect matchings are K_2-unions and 1-regular, spanning cycles are
    /// C_n-unions and 2-regular, and every block union is regular.
    pub fn normalize(mut self, n: usize) -> Self {
        if self.one_factors {
            self.kr_order = Some(2);
            self.regular_degree = Some(1);
        }
        if self.spanning_cycles && n >= 3 {
            self.cr_order = Some(n);
        }
        if let Some(r) = self.kr_order {
            self.regular_degree = Some(r - 1);
            if r == 2 {
                self.one_factors = true;
            }
        }
        if let Some(r) = self.cr_order {
            self.regular_degree = Some(2);
            if r == n {
                self.spanning_cycles = true;
            }
        }
        self
    }

    /// The most specific one-line description.
    pub fn tag(&self) -> String {
        if self.one_factors {
            "perfect-matching factors".into()
        } else if let Some(r) = self.kr_order {
            format!("complete blocks of order {r}")
        } else if self.spanning_cycles {
            "spanning cycles".into()
        } else if let Some(r) = self.cr_order {
            format!("cycle blocks of length {r}")
        } else if let Some(d) = self.regular_degree {
            format!("{d}-regular factors")
        } else {
            "general".into()
        }
    }
}

fn common_block_order(
    f: &Factoring,
    block_shape: impl Fn(&Graph) -> bool,
    min_order: usize,
) -> Option<usize> {
    let mut order = None;
    for g in f.factors() {
        let view = crate::constructive::copies_view(g)?;
        if view.r < min_order || !block_shape(&view.block) {
            return None;
        }
        match order {
            None => order = Some(view.r),
            Some(r) if r == view.r => {}
            _ => return None,
        }
    }
    order
}

/// The instance facts a bound report is computed from. Build one with
/// [`Descriptor::of`] for a concrete factoring, or [`Descriptor::closed_form`]
/// when only the parameters are known.
#[derive(Debug, Clone)]
pub struct Descriptor {
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    pub structure: StructureProfile,
    /// Average degree of the combined graph as (2m, n); known only for
    /// concrete instances.
    pub combined_average_degree: Option<(usize, usize)>,
    /// γ(F_i) per factor, computed when n is within the exact cap.
    pub factor_dominations: Option<Vec<usize>>,
}

impl Descriptor {
    pub fn of(f: &Factoring) -> Self {
        let n = f.n();
        let factor_dominations =
            (n <= EXACT_CAP).then(|| f.factors().iter().map(|g| domination_number(g).0).collect());
        Descriptor {
            n,
            k: f.k(),
            delta: f.min_degree(),
            structure: StructureProfile::detect(f),
            combined_average_degree: Some(f.combined().average_degree()),
            factor_dominations,
        }
    }

    pub fn closed_form(n: usize, k: usize, delta: usize, structure: StructureProfile) -> Self {
        Descriptor {
            n,
            k,
            delta,
            structure: structure.normalize(n),
            combined_average_degree: None,
            factor_dominations: None,
        }
    }
}

/// Logarithmic minimum-degree bound n(ln(δ+1) + ln k + 1)/(δ+1), applicable
/// for δ ≥ 2 and k ≤ e^(δ+1)/(δ+1).
pub fn bound_min_degree_log(delta: usize, k: usize, n: usize) -> BoundEntry {
    let e = BoundEntry::upper("logarithmic minimum-degree");
    if delta < 2 {
        return e.rejected(format!(
            "needs minimum degree \u{2265} 2, got \u{03B4}={delta}"
        ));
    }
    let d1 = (delta + 1) as f64;
    if (k as f64).ln() + d1.ln() > d1 {
        return e.rejected(format!(
            "needs k \u{2264} e^(\u{03B4}+1)/(\u{03B4}+1) \u{2248} {:.3}, got k={k}",
            (d1 - d1.ln()).exp()
        ));
    }
    e.approx_coeff((d1.ln() + (k as f64).ln() + 1.0) / d1, n)
}

/// Leading term n·ln(δ)/δ of the asymptotic bound; never marked applicable
/// because the vanishing correction term carries no effective constant.
pub fn bound_asymptotic_leading(delta: usize, n: usize) -> Result<BoundEntry> {
    if delta <= 1 {
        return Err(Error::BadParameter(format!(
            "the asymptotic bound needs \u{03B4} > 1, got {delta}"
        )));
    }
    let c = (delta as f64).ln() / delta as f64;
    let mut e = BoundEntry::upper("asymptotic leading term");
    e.coefficient = Some(BoundValue::Approx(c));
    e.value = Some(BoundValue::Approx(c * n as f64));
    Ok(e.rejected("asymptotic only: omits a vanishing term with no effective constant"))
}

#[derive(Debug, Clone)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    pub structure: String,
    pub entries: Vec<BoundEntry>,
}

/// Every bound this crate knows, evaluated for one descriptor. Each bound
/// appears exactly once; inapplicable entries carry the violated
/// precondition, and upper bounds whose coefficient would exceed 1 are
/// reported as vacuous rather than applicable.
pub fn bound_report(d: &Descriptor) -> BoundReport {
    let (n, k, delta) = (d.n, d.k, d.delta);
    let mut entries = Vec::new();

    match &d.factor_dominations {
        Some(gs) => {
            entries.push(
                BoundEntry::lower("largest factor domination number")
                    .exact_value(from_int(*gs.iter().max().expect("k \u{2265} 1 factors"))),
            );
            entries.push(
                BoundEntry::upper("sum of factor domination numbers")
                    .exact_value(from_int(gs.iter().sum())),
            );
        }
        None => {
            let note =
                "factor domination numbers unavailable without an instance within the exact cap";
            entries.push(BoundEntry::lower("largest factor domination number").rejected(note));
            entries.push(BoundEntry::upper("sum of factor domination numbers").rejected(note));
        }
    }

    entries.push(match coeff_known(k) {
        Ok(c) => BoundEntry::upper("general k-factor").exact_coeff(c, n),
        Err(_) => BoundEntry::upper("general k-factor").rejected("needs k \u{2265} 2"),
    });

    entries.push(BoundEntry::upper("minimum-degree complement").exact_value(from_int(n - delta)));

    entries.push(match (delta, d.combined_average_degree) {
        (0, _) => BoundEntry::upper("degree-bounded cover")
            .rejected("needs minimum degree \u{2265} 1 in every factor"),
        (_, None) => BoundEntry::upper("degree-bounded cover")
            .rejected("average degree of the combined graph requires a concrete instance"),
        (_, Some((two_m, nn))) => BoundEntry::upper("degree-bounded cover")
            .exact_coeff(coeff_average_degree_cover(&ratio_u(two_m, nn), delta), n),
    });

    entries.push(match d.structure.regular_degree {
        Some(deg) if deg >= 1 => {
            BoundEntry::upper("equal-degree regular factors").exact_coeff(coeff_regular(k), n)
        }
        Some(_) => BoundEntry::upper("equal-degree regular factors")
            .rejected("needs regular factors of degree \u{2265} 1"),
        None => BoundEntry::upper("equal-degree regular factors")
            .rejected("factors are not all regular of one common degree"),
    });

    entries.push(vacuous_gate(bound_min_degree_log(delta, k, n)));

    entries.push(match bound_asymptotic_leading(delta, n) {
        Ok(e) => e,
        Err(_) => {
            BoundEntry::upper("asymptotic leading term").rejected("needs minimum degree \u{2265} 2")
        }
    });

    entries.push(match coeff_f(k, delta) {
        Ok(c) => BoundEntry::upper("neighborhood sampling").approx_coeff(c, n),
        Err(_) => BoundEntry::upper("neighborhood sampling")
            .rejected("needs k \u{2265} 2 and minimum degree \u{2265} 1"),
    });

    let kr = d.structure.kr_order;
    entries.push(match kr {
        Some(r) if k >= 2 => BoundEntry::upper("complete-block transversal")
            .approx_coeff(coeff_g(k, r).expect("domain checked"), n),
        _ => BoundEntry::upper("complete-block transversal")
            .rejected("needs k \u{2265} 2 factors of common-order complete blocks"),
    });
    entries.push(match kr {
        Some(r) if k >= 2 => BoundEntry::upper("complete-block induction")
            .exact_coeff(coeff_kr_inductive(k, r).expect("domain checked"), n),
        _ => BoundEntry::upper("complete-block induction")
            .rejected("needs k \u{2265} 2 factors of common-order complete blocks"),
    });
    entries.push(match kr {
        Some(r) if k >= 2 => vacuous_gate(
            BoundEntry::upper("complete-block pairing")
                .exact_coeff(coeff_kr_pairing(k, r).expect("domain checked"), n),
        ),
        _ => BoundEntry::upper("complete-block pairing")
            .rejected("needs k \u{2265} 2 factors of common-order complete blocks"),
    });

    entries.push(if d.structure.one_factors {
        BoundEntry::upper("perfect-matching factors")
            .exact_coeff(coeff_one_factors(k).expect("k \u{2265} 1"), n)
    } else {
        BoundEntry::upper("perfect-matching factors")
            .rejected("factors are not all perfect matchings")
    });

    entries.push(match (d.structure.spanning_cycles, k) {
        (true, 2) => {
            BoundEntry::upper("spanning-cycle pair").exact_value(from_int(bound_cycle_pair(n)))
        }
        (true, _) => BoundEntry::upper("spanning-cycle pair")
            .rejected(format!("needs exactly two factors, got k={k}")),
        (false, _) => {
            BoundEntry::upper("spanning-cycle pair").rejected("factors are not all spanning cycles")
        }
    });

    entries.push(match (d.structure.spanning_cycles, k, n % 6) {
        (true, 2.., 0) => BoundEntry::upper("spanning-cycle residues")
            .exact_coeff(coeff_cycles(k).expect("domain checked"), n),
        (true, 2.., _) => BoundEntry::upper("spanning-cycle residues")
            .rejected(format!("needs n \u{2261} 0 (mod 6), got n={n}")),
        (true, _, _) => {
            BoundEntry::upper("spanning-cycle residues").rejected("needs k \u{2265} 2 factors")
        }
        (false, _, _) => BoundEntry::upper("spanning-cycle residues")
            .rejected("factors are not all spanning cycles"),
    });

    entries.push(match (d.structure.cr_order, k) {
        (Some(4), 2) => BoundEntry::upper("4-cycle blocks").exact_coeff(ratio_u(1, 2), n),
        (Some(4), 3) => BoundEntry::upper("4-cycle blocks").exact_coeff(ratio_u(3, 4), n),
        (Some(4), _) => BoundEntry::upper("4-cycle blocks")
            .rejected(format!("known only for k \u{2208} {{2, 3}}, got k={k}")),
        _ => BoundEntry::upper("4-cycle blocks").rejected("factors are not all 4-cycle unions"),
    });

    entries.push(match (d.structure.cr_order, k) {
        (Some(5), 2..) => {
            BoundEntry::upper("5-cycle blocks").exact_coeff(coeff_c5(k).expect("domain checked"), n)
        }
        (Some(5), _) => BoundEntry::upper("5-cycle blocks").rejected("needs k \u{2265} 2 factors"),
        _ => BoundEntry::upper("5-cycle blocks").rejected("factors are not all 5-cycle unions"),
    });

    BoundReport {
        n,
        k,
        delta,
        structure: d.structure.tag(),
        entries,
    }
}

pub fn bound_report_for(f: &Factoring) -> BoundReport {
    bound_report(&Descriptor::of(f))
}

/// Downgrade an upper bound whose coefficient exceeds 1: true but vacuous,
/// since n − δ is always at least as good.
fn vacuous_gate(e: BoundEntry) -> BoundEntry {
    if e.applicable {
        if let Some(c) = &e.coefficient {
            if c.to_f64() > 1.0 {
                let c = c.clone();
                return e.rejected(format!("vacuous here: coefficient {c} exceeds 1"));
            }
        }
    }
    e
}

/// Table of the general k-factor coefficients for k = 2..7.
pub fn table_known_bounds() -> Vec<(usize, BigRational)> {
    (2..=7)
        .map(|k| (k, coeff_known(k).expect("k \u{2265} 2")))
        .collect()
}

/// Table of the regular-factor coefficients k/(k+1) for k = 2..7.
pub fn table_regular_bounds() -> Vec<(usize, BigRational)> {
    (2..=7).map(|k| (k, coeff_regular(k))).collect()
}

/// A coefficient grid rounded half-up to 4 decimals, stored as value·10^4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTable {
    pub row_label: &'static str,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub scaled: Vec<Vec<i64>>,
}

impl CoeffTable {
    pub fn cell(&self, row: usize, col: usize) -> Option<i64> {
        let i = self.rows.iter().position(|&r| r == row)?;
        let j = self.cols.iter().position(|&c| c == col)?;
        Some(self.scaled[i][j])
    }
}

/// f(k, δ) for δ = 1..5 and k = 2..5.
pub fn table_coeff_f() -> CoeffTable {
    let rows: Vec<usize> = (1..=5).collect();
    let cols: Vec<usize> = (2..=5).collect();
    let scaled = rows
        .iter()
        .map(|&delta| {
            cols.iter()
                .map(|&k| coeff_f_scaled4(k, delta).expect("grid domain"))
                .collect()
        })
        .collect();
    CoeffTable {
        row_label: "delta",
        rows,
        cols,
        scaled,
    }
}

/// g(k, r) for r = 2..5 and k = 2..5.
pub fn table_coeff_g() -> CoeffTable {
    let rows: Vec<usize> = (2..=5).collect();
    let cols: Vec<usize> = (2..=5).collect();
    let scaled = rows
        .iter()
        .map(|&r| {
            cols.iter()
                .map(|&k| coeff_g_scaled4(k, r).expect("grid domain"))
                .collect()
        })
        .collect();
    CoeffTable {
        row_label: "r",
        rows,
        cols,
        scaled,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::ratio;

    #[test]
    fn sandwich() {
        assert_eq!(bound_sandwich(&[2, 2]).unwrap(), (2, 4));
        assert_eq!(bound_sandwich(&[1, 1, 1]).unwrap(), (1, 3));
        assert!(matches!(bound_sandwich(&[]), Err(Error::NoFactors)));
    }

    #[test]
    fn known_coefficients() {
        assert_eq!(coeff_known(2).unwrap(), ratio(2, 3));
        assert_eq!(coeff_known(4).unwrap(), ratio(5, 6));
        assert_eq!(coeff_known(7).unwrap(), ratio(11, 12));
        assert!(coeff_known(1).is_err());
    }

    #[test]
    fn regular_and_cover_coefficients() {
        assert_eq!(bound_regular(3, 8), ratio(6, 1));
        // d̄ = 3.2 → ⌈d̄⌉ = 4, δ = 2 → 4/6 = 2/3
        assert_eq!(coeff_average_degree_cover(&ratio(16, 5), 2), ratio(2, 3));
        assert_eq!(bound_n_minus_delta(10, 3), 7);
    }

    #[test]
    fn log_bound_applicability() {
        let e = bound_min_degree_log(2, 2, 9);
        assert!(e.applicable);
        let c = e.coefficient.unwrap().to_f64();
        assert!((c - (3f64.ln() + 2f64.ln() + 1.0) / 3.0).abs() < 1e-12);

        // e³/3 ≈ 6.695, so k = 7 is out while k = 6 is in but vacuous
        assert!(!bound_min_degree_log(2, 7, 9).applicable);
        let six = bound_min_degree_log(2, 6, 9);
        assert!(six.applicable && six.coefficient.as_ref().unwrap().to_f64() > 1.0);
        assert!(!vacuous_gate(six).applicable);

        let deep = bound_min_degree_log(9, 2, 100);
        assert!(deep.applicable && deep.coefficient.unwrap().to_f64() < 1.0);
    }

    #[test]
    fn asymptotic_leading_term() {
        let e = bound_asymptotic_leading(10, 100).unwrap();
        assert!(!e.applicable);
        assert!((e.value.unwrap().to_f64() - 23.0259).abs() < 1e-3);
        assert!(bound_asymptotic_leading(1, 10).is_err());
    }

    #[test]
    fn sampling_coefficient_grids() {
        // spot values against the printed grids; the 4-decimal cells are
        // produced by exact rational rounding
        assert_eq!(coeff_f_scaled4(2, 1).unwrap(), 8750);
        assert_eq!(coeff_f_scaled4(5, 5).unwrap(), 5779);
        assert_eq!(coeff_g_scaled4(2, 2).unwrap(), 7500);
        assert_eq!(coeff_g_scaled4(5, 5).unwrap(), 4650);
        // the two cells where exact rounding differs from the printed
        // truncation by one unit in the last place
        assert_eq!(coeff_f_scaled4(3, 2).unwrap(), 7778);
        assert_eq!(coeff_g_scaled4(4, 3).unwrap(), 6667);
        // g(4,3) = 1 − (2/3)·(1/4)^(1/2) = 2/3 exactly
        assert!((coeff_g(4, 3).unwrap() - 2.0 / 3.0).abs() < 1e-12);
        assert!(coeff_f(1, 1).is_err());
        assert!(coeff_g(2, 1).is_err());
    }

    #[test]
    fn coefficient_grids_monotone() {
        let f = table_coeff_f();
        let g = table_coeff_g();
        for t in [&f, &g] {
            for row in &t.scaled {
                assert!(row.windows(2).all(|w| w[0] < w[1]), "increasing in k");
            }
            for j in 0..t.cols.len() {
                let col: Vec<i64> = t.scaled.iter().map(|r| r[j]).collect();
                assert!(col.windows(2).all(|w| w[0] > w[1]), "decreasing down rows");
            }
        }
    }

    #[test]
    fn induction_beats_block_transversal_for_three_factors() {
        // 1 − ((r−1)/r)² < g(3, r) ⟺ 1/3 < ((r−1)/r)^(r−1), checked exactly
        for r in 3..=50usize {
            let lhs = ratio(1, 3);
            let rhs = pow(&ratio_u(r - 1, r), (r - 1) as u32);
            assert!(lhs < rhs, "r = {r}");
        }
    }

    #[test]
    fn structure_specific_coefficients() {
        assert_eq!(coeff_kr_inductive(3, 3).unwrap(), ratio(5, 9));
        assert_eq!(bound_kr_pairing(5, 3, 18).unwrap(), ratio(16, 1));
        assert_eq!(coeff_one_factors(4).unwrap(), ratio(3, 4));
        assert_eq!(coeff_one_factors(3).unwrap(), ratio(3, 4));
        assert_eq!(coeff_cycles(3).unwrap(), ratio(2, 3));
        assert_eq!(coeff_c5(2).unwrap(), ratio(3, 5));
        assert_eq!(coeff_c5(3).unwrap(), ratio(19, 25));
        assert_eq!(bound_cycle_pair(7), 4);
    }

    #[test]
    fn caro_wei_and_caro_hansberg() {
        let k5 = Graph::complete(5);
        assert_eq!(bound_caro_wei(&k5), ratio(1, 1));
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(bound_caro_wei(&c6), ratio(2, 1));
        assert_eq!(bound_caro_wei_average(&c6), ratio(2, 1));
        let star = Graph::star(5, 0).unwrap();
        assert_eq!(bound_caro_wei(&star), ratio(11, 5));
        assert_eq!(bound_caro_hansberg(&c6, 0), ratio(2, 1));
        let empty = Graph::empty(4);
        assert_eq!(bound_caro_hansberg(&empty, 0), ratio(4, 1));
    }

    #[test]
    fn structure_detection() {
        let m1 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let m2 = Graph::from_edges(4, &[(0, 2), (1, 3)]).unwrap();
        let p = StructureProfile::detect(&Factoring::new(vec![m1, m2]).unwrap());
        assert!(p.one_factors);
        assert_eq!(p.kr_order, Some(2));
        assert_eq!(p.regular_degree, Some(1));
        assert!(!p.spanning_cycles);

        let c6 = Graph::cycle(6).unwrap();
        let p = StructureProfile::detect(&Factoring::new(vec![c6.clone(), c6]).unwrap());
        assert!(p.spanning_cycles);
        assert_eq!(p.cr_order, Some(6));
        assert_eq!(p.regular_degree, Some(2));
        assert_eq!(p.kr_order, None);
        assert_eq!(p.tag(), "spanning cycles");

        let p = StructureProfile::default().normalize(8);
        assert_eq!(p, StructureProfile::default());
        let q = StructureProfile {
            one_factors: true,
            ..StructureProfile::default()
        }
        .normalize(8);
        assert_eq!(q.kr_order, Some(2));
        assert_eq!(q.regular_degree, Some(1));
    }

    #[test]
    fn report_on_cycle_pair() {
        let c6 = Graph::cycle(6).unwrap();
        let f = Factoring::new(vec![c6.clone(), c6]).unwrap();
        let report = bound_report_for(&f);
        assert_eq!((report.n, report.k, report.delta), (6, 2, 2));
        let get = |label: &str| {
            report
                .entries
                .iter()
                .find(|e| e.label == label)
                .unwrap_or_else(|| panic!("missing entry {label}"))
        };
        let lower = get("largest factor domination number");
        assert!(lower.applicable && lower.kind == BoundKind::Lower);
        assert_eq!(lower.value, Some(BoundValue::Exact(ratio(2, 1))));
        let pair = get("spanning-cycle pair");
        assert_eq!(pair.value, Some(BoundValue::Exact(ratio(3, 1))));
        let residues = get("spanning-cycle residues");
        assert_eq!(residues.value, Some(BoundValue::Exact(ratio(3, 1))));
        let kr = get("complete-block induction");
        assert!(!kr.applicable && kr.note.is_some());

        for e in &report.entries {
            if e.applicable {
                if let Some(c) = &e.coefficient {
                    let c = c.to_f64();
                    assert!(c > 0.0 && c <= 1.0, "{}: coefficient {c}", e.label);
                }
            } else {
                assert!(e.note.is_some(), "{} lacks a note", e.label);
            }
        }
    }

    #[test]
    fn report_without_instance_flags_missing_data() {
        let d = Descriptor::closed_form(12, 3, 2, StructureProfile::default());
        let report = bound_report(&d);
        let cover = report
            .entries
            .iter()
            .find(|e| e.label == "degree-bounded cover")
            .unwrap();
        assert!(!cover.applicable);
        assert!(cover.note.as_deref().unwrap().contains("concrete instance"));
        let known = report
            .entries
            .iter()
            .find(|e| e.label == "general k-factor")
            .unwrap();
        assert_eq!(known.coefficient, Some(BoundValue::Exact(ratio(3, 4))));
    }
}
