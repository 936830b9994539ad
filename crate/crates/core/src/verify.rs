//! Numerical verification harness for the type-B → type-A approximation.
//!
//! The object under test is the difference
//!
//!   E(μ, x, y) = |J^B_{(k₁,k₂)}(2√μ·x, iy) − J^A_{k₂}(−x², y²)|
//!
//! together with the two bound shapes it is measured against: the
//! locally-uniform form D = |x|⁴|y|⁴·e^{|x|²|y|²} ("prop11") and the uniform
//! form D = min(|x|⁴|y|⁴, 1) ("prop12", proven for k₂ ∈ {0, 1/2, 1, 2}).
//! Sweeps record μ·E/D per (μ, point), estimate the empirical constant as the
//! max ratio, and fit the convergence order of E against μ per point (the
//! expected order is 1, i.e. E ∝ 1/μ). The lemma-level checks cover the
//! per-weight kernel bound and the Pochhammer ratio bound that drive the
//! proofs, and the one-dimensional check covers the rank-one estimate
//! μ·|j_{μ−1}(√μ·x) − e^{−x²/4}| ≤ C·min(x⁴, 1).
//!
//! The bounds' constants are existence-only, so no sweep asserts a particular
//! C; pass/fail compares against a configured ceiling (regression reference),
//! plus convergence of every series involved. Reports are deterministic given
//! the seed: records are assembled in (μ index, point index) order.

use serde::Serialize;

use crate::bessel::{bessel_j, MultiplicityB};
use crate::error::{Error, Result};
use crate::hypergeo::{kernel_weight_sum, Accumulator, SeriesPolicy};
use crate::jack::{EvalVector, JackContext, JackParameter};
use crate::partitions::Partition;

/// A pair of real N-vectors (x, y).
#[derive(Debug, Clone, PartialEq)]
pub struct EvalPoint {
    pub x: EvalVector,
    pub y: EvalVector,
}

impl EvalPoint {
    pub fn new(x: EvalVector, y: EvalVector) -> Result<Self> {
        if x.n() != y.n() {
            return Err(Error::DimensionMismatch { x: x.n(), y: y.n() });
        }
        Ok(EvalPoint { x, y })
    }

    pub fn norm_product(&self) -> f64 {
        self.x.norm() * self.y.norm()
    }
}

/// Which ratio a sweep records.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepSubject {
    /// μ·E / (|x|⁴|y|⁴·e^{|x|²|y|²}); any k₂ ≥ 0 with k₁ ≥ k₂(N−1)
    Prop11,
    /// μ·E / min(|x|⁴|y|⁴, 1); k₂ restricted to {0, 1/2, 1, 2}
    Prop12,
    /// The prop12 ratio at unproven k₂; informational, never failing
    Conjecture,
}

/// One verification sweep: a μ grid against a fixed point grid.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub n: usize,
    pub k2: f64,
    /// increasing; each μ induces k₁ = μ − (N−1)k₂ − 1/2
    pub mu_grid: Vec<f64>,
    pub points: Vec<EvalPoint>,
    pub policy: SeriesPolicy,
    pub seed: u64,
    pub subject: SweepSubject,
    /// pass requires empirical_constant ≤ ceiling
    pub ceiling: f64,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.points.is_empty() {
            return Err(Error::Domain("point grid must be nonempty".into()));
        }
        if self.mu_grid.is_empty() {
            return Err(Error::Domain("mu grid must be nonempty".into()));
        }
        if self.mu_grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Domain("mu grid must be strictly increasing".into()));
        }
        if self.subject == SweepSubject::Prop12 && !prop12_multiplicity(self.k2) {
            return Err(Error::Domain(format!(
                "the uniform bound is proven only for k2 in {{0, 1/2, 1, 2}}, got {}",
                self.k2
            )));
        }
        for &mu in &self.mu_grid {
            let mult = self.multiplicity(mu)?;
            if !mult.in_proposition_regime() {
                return Err(Error::Domain(format!(
                    "mu = {} gives k1 = {} below the hypothesis k1 >= k2(N-1)",
                    mu,
                    mult.k1()
                )));
            }
        }
        for p in &self.points {
            if p.x.n() != self.n {
                return Err(Error::DimensionMismatch {
                    x: p.x.n(),
                    y: self.n,
                });
            }
        }
        Ok(())
    }

    pub fn multiplicity(&self, mu: f64) -> Result<MultiplicityB> {
        let k1 = mu - (self.n as f64 - 1.0) * self.k2 - 0.5;
        MultiplicityB::new(k1, self.k2, self.n)
    }

    /// μ values sitting exactly on the hypothesis boundary k₁ = k₂(N−1),
    /// flagged in reports.
    pub fn boundary_mus(&self) -> Vec<f64> {
        self.mu_grid
            .iter()
            .copied()
            .filter(|&mu| {
                self.multiplicity(mu)
                    .map(|m| m.on_regime_boundary())
                    .unwrap_or(false)
            })
            .collect()
    }
}

pub fn prop12_multiplicity(k2: f64) -> bool {
    [0.0, 0.5, 1.0, 2.0].iter().any(|v| (k2 - v).abs() < 1e-12)
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct PointXY {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
}

/// One (μ, point) measurement: ratio = μ·error/denominator.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct SweepRecord {
    pub mu: f64,
    pub point: PointXY,
    pub error: f64,
    pub denominator: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ConvergenceOrder {
    /// Fitted order per point (−slope of log E against log μ); null where E
    /// vanishes and no fit is possible.
    pub per_point: Vec<Option<f64>>,
    pub median: f64,
}

/// A failed series evaluation, identifying the offending (μ, point).
#[derive(Debug, Clone, PartialEq)]
pub struct FailedEval {
    pub mu: f64,
    pub point_index: usize,
    pub reason: String,
}

/// Structured outcome of one sweep. The serialized fields follow the report
/// schema exactly; the skipped fields are diagnostics the CLI surfaces on
/// stderr.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub records: Vec<SweepRecord>,
    pub empirical_constant: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convergence_order: Option<ConvergenceOrder>,
    pub pass: bool,
    #[serde(skip)]
    pub all_converged: bool,
    #[serde(skip)]
    pub boundary_mu: Vec<f64>,
    #[serde(skip)]
    pub failures: Vec<FailedEval>,
}

/// |J^B(2√μ·x, iy) − J^A(−x², y²)| with convergence/rigor flags.
/// k₂ > 0 goes through the single-series difference; k₂ = 0 through the
/// closed forms, paired permutation by permutation so the two O(1) sums never
/// meet head-on.
fn difference_error(
    mult: &MultiplicityB,
    ctx: Option<&JackContext>,
    pt: &EvalPoint,
    policy: &SeriesPolicy,
) -> Result<(f64, bool)> {
    if mult.k2() == 0.0 {
        return Ok((multiplicity_zero_difference(mult, pt), true));
    }
    let ctx = ctx.expect("context required for k2 > 0");
    let r = crate::bessel::bessel_b_scaled_diff_in(ctx, mult, &pt.x, &pt.y, policy)?;
    Ok((r.value.abs(), r.converged))
}

fn multiplicity_zero_difference(mult: &MultiplicityB, pt: &EvalPoint) -> f64 {
    let mu = mult.mu();
    let order = mult.k1() - 0.5;
    let scale = 2.0 * mu.sqrt();
    let n = mult.n();
    let x = pt.x.coords();
    let y = pt.y.coords();
    let mut acc = Accumulator::default();
    let mut count = 0u64;
    for_each_permutation_plain(n, |perm| {
        let mut prod = 1.0f64;
        let mut dot = 0.0f64;
        for (l, &w) in perm.iter().enumerate() {
            prod *= bessel_j(order, scale * x[w] * y[l]);
            dot += x[w] * x[w] * y[l] * y[l];
        }
        acc.add(prod - (-dot).exp());
        count += 1;
    });
    (acc.total() / count as f64).abs()
}

fn for_each_permutation_plain<F: FnMut(&[usize])>(n: usize, mut f: F) {
    let mut idx: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&idx);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                idx.swap(0, i);
            } else {
                idx.swap(c[i], i);
            }
            f(&idx);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn prop11_denominator(pt: &EvalPoint) -> f64 {
    let nx = pt.x.norm();
    let ny = pt.y.norm();
    nx.powi(4) * ny.powi(4) * (nx * nx * ny * ny).exp()
}

fn prop12_denominator(pt: &EvalPoint) -> f64 {
    let nx = pt.x.norm();
    let ny = pt.y.norm();
    (nx.powi(4) * ny.powi(4)).min(1.0)
}

fn safe_ratio(mu: f64, error: f64, denominator: f64) -> f64 {
    if denominator == 0.0 {
        0.0
    } else {
        mu * error / denominator
    }
}

/// μ·E / (|x|⁴|y|⁴·e^{|x|²|y|²}), the locally-uniform bound ratio.
pub fn prop11_ratio(mult: &MultiplicityB, pt: &EvalPoint, policy: &SeriesPolicy) -> Result<f64> {
    if mult.k2() <= 0.0 {
        return Err(Error::Domain("prop11 ratio requires k2 > 0".into()));
    }
    if !mult.in_proposition_regime() {
        return Err(Error::Domain("hypothesis k1 >= k2(N-1) violated".into()));
    }
    let ctx = JackContext::build(mult.jack_alpha()?, mult.n(), policy.max_weight);
    let (e, _) = difference_error(mult, Some(&ctx), pt, policy)?;
    Ok(safe_ratio(mult.mu(), e, prop11_denominator(pt)))
}

/// μ·E / min(|x|⁴|y|⁴, 1), the uniform bound ratio for k₂ ∈ {0, 1/2, 1, 2}.
pub fn prop12_ratio(mult: &MultiplicityB, pt: &EvalPoint, policy: &SeriesPolicy) -> Result<f64> {
    if !prop12_multiplicity(mult.k2()) {
        return Err(Error::Domain(format!(
            "uniform bound requires k2 in {{0, 1/2, 1, 2}}, got {}",
            mult.k2()
        )));
    }
    if !mult.in_proposition_regime() {
        return Err(Error::Domain("hypothesis k1 >= k2(N-1) violated".into()));
    }
    let ctx = if mult.k2() > 0.0 {
        Some(JackContext::build(
            mult.jack_alpha()?,
            mult.n(),
            policy.max_weight,
        ))
    } else {
        None
    };
    let (e, _) = difference_error(mult, ctx.as_ref(), pt, policy)?;
    Ok(safe_ratio(mult.mu(), e, prop12_denominator(pt)))
}

/// Weight-m kernel bound: lhs = Σ_{|λ|=m} C_λ(x²)C_λ(y²)/C_λ(𝟏),
/// rhs = |x|^{2m}·|y|^{2m}. Passes when lhs ≤ rhs·(1 + 1e−10).
pub fn lemma31_check(
    alpha: JackParameter,
    x: &EvalVector,
    y: &EvalVector,
    m: u32,
) -> Result<(f64, f64, bool)> {
    let ctx = JackContext::build(alpha, x.n(), m.max(2));
    lemma31_check_in(&ctx, x, y, m)
}

/// [`lemma31_check`] against a shared context with max weight ≥ m.
pub fn lemma31_check_in(
    ctx: &JackContext,
    x: &EvalVector,
    y: &EvalVector,
    m: u32,
) -> Result<(f64, f64, bool)> {
    let lhs = kernel_weight_sum(ctx, m, &x.squared(), &y.squared())?;
    let rhs = (x.norm() * y.norm()).powi(2 * m as i32);
    let pass = lhs <= rhs * (1.0 + 1e-10);
    Ok((lhs, rhs, pass))
}

/// Outcome of the Pochhammer ratio check at one (N, k₁, k₂, λ).
#[derive(Debug, Clone, Copy)]
pub struct Lemma32Outcome {
    /// |1 − μ^{|λ|}/(μ)_λ|
    pub lhs: f64,
    /// (1/3)·2^{N(N−1)(k₂+1)/2}·(1 + k₂(N−1))·|λ|²/k₁
    pub rhs: f64,
    /// μ^{|λ|}/(μ)_λ
    pub ratio: f64,
    /// 2^{N(N−1)(k₂+1)/2}, which must cap `ratio`
    pub cap: f64,
    pub pass: bool,
}

/// Checks |1 − μ^{|λ|}/(μ)_λ| ≤ (1/3)·2^{N(N−1)(k₂+1)/2}(1+k₂(N−1))|λ|²/k₁
/// and the cap μ^{|λ|}/(μ)_λ ≤ 2^{N(N−1)(k₂+1)/2}, with μ = k₁ + k₂(N−1) + 1/2.
pub fn lemma32_check(n: usize, k1: f64, k2: f64, lambda: &Partition) -> Result<Lemma32Outcome> {
    if k2 <= 0.0 || k1 <= 0.0 {
        return Err(Error::Domain("requires k1 > 0 and k2 > 0".into()));
    }
    let nf = n as f64;
    if k1 < k2 * (nf - 1.0) - 1e-12 {
        return Err(Error::Domain("hypothesis k1 >= k2(N-1) violated".into()));
    }
    let mu = k1 + k2 * (nf - 1.0) + 0.5;
    let alpha = JackParameter::new(1.0 / k2)?;
    let rm1 = crate::hypergeo::pochhammer_ratio_minus_one(mu, lambda, alpha).ok_or_else(|| {
        Error::VanishingPochhammer {
            mu,
            lambda: lambda.clone(),
        }
    })?;
    let lhs = rm1.abs();
    let cap = (2f64).powf(nf * (nf - 1.0) * (k2 + 1.0) / 2.0);
    let w = lambda.weight() as f64;
    let rhs = cap / 3.0 * (1.0 + k2 * (nf - 1.0)) * w * w / k1;
    let ratio = 1.0 + rm1;
    let slack = 1.0 + 1e-10;
    let pass = lhs <= rhs * slack && ratio <= cap * slack;
    Ok(Lemma32Outcome {
        lhs,
        rhs,
        ratio,
        cap,
        pass,
    })
}

/// One-dimensional rate check: sup over xs of μ·|j_{μ−1}(√μ·x) − e^{−x²/4}| /
/// min(x⁴, 1), passing against the configured ceiling. Requires μ > 2.
pub fn onedim_check(mu: f64, xs: &[f64], ceiling: f64) -> Result<(f64, bool)> {
    let recs = onedim_records(mu, xs)?;
    let sup = recs.iter().fold(0.0f64, |m, r| m.max(r.ratio));
    Ok((sup, sup <= ceiling))
}

pub fn onedim_records(mu: f64, xs: &[f64]) -> Result<Vec<SweepRecord>> {
    if mu <= 2.0 {
        return Err(Error::Domain(format!("requires mu > 2, got {}", mu)));
    }
    let mut out = Vec::with_capacity(xs.len());
    for &x in xs {
        let (error, denominator) = if x == 0.0 {
            (0.0, 0.0)
        } else {
            let e = (bessel_j(mu - 1.0, mu.sqrt() * x) - (-x * x / 4.0).exp()).abs();
            (e, (x.powi(4)).min(1.0))
        };
        out.push(SweepRecord {
            mu,
            point: PointXY {
                x: vec![x],
                y: vec![],
            },
            error,
            denominator,
            ratio: safe_ratio(mu, error, denominator),
        });
    }
    Ok(out)
}

/// Least-squares slope of log E against log μ, negated so the expected decay
/// E ∝ μ^{−1} reports order ≈ 1. None when a fit is impossible.
pub fn fit_order(mu: &[f64], errs: &[f64]) -> Option<f64> {
    if mu.len() != errs.len() || mu.len() < 2 {
        return None;
    }
    if errs.iter().any(|&e| !(e > 0.0) || !e.is_finite()) {
        return None;
    }
    let n = mu.len() as f64;
    let lx: Vec<f64> = mu.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = errs.iter().map(|v| v.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (a, b) in lx.iter().zip(&ly) {
        num += (a - mx) * (b - my);
        den += (a - mx) * (a - mx);
    }
    if den == 0.0 {
        return None;
    }
    Some(-(num / den))
}

fn median(values: &mut Vec<f64>) -> f64 {
    if values.is_empty() {
        return f64::NAN;
    }
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let k = values.len();
    if k % 2 == 1 {
        values[k / 2]
    } else {
        0.5 * (values[k / 2 - 1] + values[k / 2])
    }
}

/// Run one sweep over (μ grid) × (point grid), deterministically.
pub fn run_sweep(config: &SweepConfig) -> Result<VerificationReport> {
    config.validate()?;
    let ctx = if config.k2 > 0.0 {
        Some(JackContext::build(
            JackParameter::new(1.0 / config.k2)?,
            config.n,
            config.policy.max_weight,
        ))
    } else {
        None
    };

    let mut records = Vec::with_capacity(config.mu_grid.len() * config.points.len());
    let mut failures = Vec::new();
    // errors per point across the mu grid, for the order fit
    let mut errs_by_point = vec![Vec::with_capacity(config.mu_grid.len()); config.points.len()];

    for &mu in &config.mu_grid {
        let mult = config.multiplicity(mu)?;
        for (pi, pt) in config.points.iter().enumerate() {
            let (error, converged) =
                match difference_error(&mult, ctx.as_ref(), pt, &config.policy) {
                    Ok(v) => v,
                    Err(e) => {
                        failures.push(FailedEval {
                            mu,
                            point_index: pi,
                            reason: e.to_string(),
                        });
                        (f64::NAN, false)
                    }
                };
            if !converged {
                failures.push(FailedEval {
                    mu,
                    point_index: pi,
                    reason: "series not converged within max_weight".into(),
                });
            }
            let denominator = match config.subject {
                SweepSubject::Prop11 => prop11_denominator(pt),
                SweepSubject::Prop12 | SweepSubject::Conjecture => prop12_denominator(pt),
            };
            errs_by_point[pi].push(error);
            records.push(SweepRecord {
                mu,
                point: PointXY {
                    x: pt.x.coords().to_vec(),
                    y: pt.y.coords().to_vec(),
                },
                error,
                denominator,
                ratio: safe_ratio(mu, error, denominator),
            });
        }
    }

    let empirical_constant = records
        .iter()
        .map(|r| r.ratio)
        .filter(|r| r.is_finite())
        .fold(0.0f64, f64::max);

    let convergence_order = if config.mu_grid.len() >= 2 {
        let per_point: Vec<Option<f64>> = errs_by_point
            .iter()
            .map(|errs| fit_order(&config.mu_grid, errs))
            .collect();
        let mut finite: Vec<f64> = per_point.iter().filter_map(|o| *o).collect();
        Some(ConvergenceOrder {
            median: median(&mut finite),
            per_point,
        })
    } else {
        None
    };

    let all_converged = failures.is_empty();
    let pass = match config.subject {
        SweepSubject::Conjecture => true,
        _ => all_converged && empirical_constant <= config.ceiling,
    };
    Ok(VerificationReport {
        records,
        empirical_constant,
        convergence_order,
        pass,
        all_converged,
        boundary_mu: config.boundary_mus(),
        failures,
    })
}

/// Report over a μ grid for the one-dimensional rate, fitting the order per
/// grid point x across μ.
pub fn onedim_report(mu_grid: &[f64], xs: &[f64], ceiling: f64) -> Result<VerificationReport> {
    if mu_grid.is_empty() || xs.is_empty() {
        return Err(Error::Domain("empty grid".into()));
    }
    let mut records = Vec::new();
    let mut errs_by_point = vec![Vec::with_capacity(mu_grid.len()); xs.len()];
    for &mu in mu_grid {
        let recs = onedim_records(mu, xs)?;
        for (pi, r) in recs.iter().enumerate() {
            errs_by_point[pi].push(r.error);
        }
        records.extend(recs);
    }
    let empirical_constant = records.iter().map(|r| r.ratio).fold(0.0f64, f64::max);
    let convergence_order = if mu_grid.len() >= 2 {
        let per_point: Vec<Option<f64>> = errs_by_point
            .iter()
            .map(|errs| fit_order(mu_grid, errs))
            .collect();
        let mut finite: Vec<f64> = per_point.iter().filter_map(|o| *o).collect();
        Some(ConvergenceOrder {
            median: median(&mut finite),
            per_point,
        })
    } else {
        None
    };
    let pass = empirical_constant <= ceiling;
    Ok(VerificationReport {
        records,
        empirical_constant,
        convergence_order,
        pass,
        all_converged: true,
        boundary_mu: Vec::new(),
        failures: Vec::new(),
    })
}

/// Kernel weight-bound report: per point, the tightest weight m ≤ max_m.
/// Lemma-style records carry mu = 1 so ratio = error/denominator.
pub fn lemma31_report(
    alpha: JackParameter,
    points: &[EvalPoint],
    max_m: u32,
) -> Result<VerificationReport> {
    if points.is_empty() {
        return Err(Error::Domain("point grid must be nonempty".into()));
    }
    let n = points[0].x.n();
    let ctx = JackContext::build(alpha, n, max_m.max(2));
    let mut records = Vec::with_capacity(points.len());
    let mut all_pass = true;
    for pt in points {
        let mut worst: Option<(f64, f64, f64)> = None;
        for m in 1..=max_m {
            let (lhs, rhs, pass) = lemma31_check_in(&ctx, &pt.x, &pt.y, m)?;
            all_pass &= pass;
            let ratio = if rhs == 0.0 { 0.0 } else { lhs / rhs };
            if worst.map(|(_, _, r)| ratio > r).unwrap_or(true) {
                worst = Some((lhs, rhs, ratio));
            }
        }
        let (lhs, rhs, ratio) = worst.expect("max_m >= 1");
        records.push(SweepRecord {
            mu: 1.0,
            point: PointXY {
                x: pt.x.coords().to_vec(),
                y: pt.y.coords().to_vec(),
            },
            error: lhs,
            denominator: rhs,
            ratio,
        });
    }
    let empirical_constant = records.iter().map(|r| r.ratio).fold(0.0f64, f64::max);
    Ok(VerificationReport {
        records,
        empirical_constant,
        convergence_order: None,
        pass: all_pass,
        all_converged: true,
        boundary_mu: Vec::new(),
        failures: Vec::new(),
    })
}

/// Pochhammer ratio-bound report over all partitions of weight ≤ max_weight
/// and a k₁ grid. Records carry mu = 1; the point encodes (x = [k₁],
/// y = the partition).
pub fn lemma32_report(
    n: usize,
    k2: f64,
    k1_grid: &[f64],
    max_weight: u32,
) -> Result<VerificationReport> {
    if k1_grid.is_empty() {
        return Err(Error::Domain("k1 grid must be nonempty".into()));
    }
    let mut records = Vec::new();
    let mut all_pass = true;
    for &k1 in k1_grid {
        for m in 0..=max_weight {
            for lambda in crate::partitions::enumerate_partitions(m, n) {
                let out = lemma32_check(n, k1, k2, &lambda)?;
                all_pass &= out.pass;
                let ratio = if out.rhs == 0.0 {
                    if out.lhs == 0.0 {
                        0.0
                    } else {
                        f64::INFINITY
                    }
                } else {
                    out.lhs / out.rhs
                };
                records.push(SweepRecord {
                    mu: 1.0,
                    point: PointXY {
                        x: vec![k1],
                        y: lambda.parts().iter().map(|&p| p as f64).collect(),
                    },
                    error: out.lhs,
                    denominator: out.rhs,
                    ratio,
                });
            }
        }
    }
    let empirical_constant = records
        .iter()
        .map(|r| r.ratio)
        .filter(|r| r.is_finite())
        .fold(0.0f64, f64::max);
    Ok(VerificationReport {
        records,
        empirical_constant,
        convergence_order: None,
        pass: all_pass,
        all_converged: true,
        boundary_mu: Vec::new(),
        failures: Vec::new(),
    })
}

// ---------------------------------------------------------------------------
// deterministic point sampling
// ---------------------------------------------------------------------------

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Points drawn coordinatewise uniform on [−half_width, half_width]^N for
/// both x and y; every fifth point is rescaled to a small norm product
/// |x||y| ≤ 0.1 to exercise the |x|⁴|y|⁴ regime of the bounds.
pub fn sample_points_in_box(n: usize, count: usize, seed: u64, half_width: f64) -> Vec<EvalPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let x: Vec<f64> = (0..n)
            .map(|_| rng.gen_range(-half_width..half_width))
            .collect();
        let y: Vec<f64> = (0..n)
            .map(|_| rng.gen_range(-half_width..half_width))
            .collect();
        let mut pt = EvalPoint::new(
            EvalVector::new(x).expect("n >= 1"),
            EvalVector::new(y).expect("n >= 1"),
        )
        .expect("equal dims");
        if i % 5 == 4 {
            let target: f64 = rng.gen_range(0.01..0.1);
            pt = rescale_to_product(pt, target);
        }
        out.push(pt);
    }
    out
}

/// The default sampling box [−1.5, 1.5].
pub fn sample_points(n: usize, count: usize, seed: u64) -> Vec<EvalPoint> {
    sample_points_in_box(n, count, seed, 1.5)
}

/// Default samples with the norm product clamped to ≤ max_product.
pub fn sample_points_capped(
    n: usize,
    count: usize,
    seed: u64,
    max_product: f64,
) -> Vec<EvalPoint> {
    sample_points(n, count, seed)
        .into_iter()
        .map(|pt| {
            if pt.norm_product() > max_product {
                rescale_to_product(pt, max_product)
            } else {
                pt
            }
        })
        .collect()
}

/// Default samples with every third point rescaled into the norm-product band
/// [band.0, band.1], covering the saturated min(·, 1) regime.
pub fn sample_points_with_band(
    n: usize,
    count: usize,
    seed: u64,
    band: (f64, f64),
) -> Vec<EvalPoint> {
    let base = sample_points(n, count, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
    base.into_iter()
        .enumerate()
        .map(|(i, pt)| {
            if i % 3 == 1 {
                let target = rng.gen_range(band.0..band.1);
                rescale_to_product(pt, target)
            } else {
                pt
            }
        })
        .collect()
}

fn rescale_to_product(pt: EvalPoint, target: f64) -> EvalPoint {
    let np = pt.norm_product();
    if np == 0.0 {
        return pt;
    }
    let s = (target / np).sqrt();
    EvalPoint {
        x: pt.x.scaled(s),
        y: pt.y.scaled(s),
    }
}
