//! Generalized Pochhammer symbols and truncated ₀F₀ᵅ / ₀F₁ᵅ Jack series.
//!
//! Series are summed weight-major (all partitions of weight m before weight
//! m+1) with compensated accumulation, so the reported tail bound matches how
//! the truncation actually happened. Rigorous tail bounds come from two
//! per-weight estimates on the Jack kernel K_m = Σ_{|λ|=m} C_λ(u)C_λ(v)/C_λ(𝟏):
//!
//!  * |K_m| ≤ min(‖u‖_∞·‖v‖₁, ‖v‖_∞·‖u‖₁)^m for all real u, v, since each
//!    C_λ(u)/C_λ(𝟏) is a convex combination of degree-m monomials and
//!    Σ_λ C_λ(|v|) = ‖v‖₁^m. For arguments of the form u = −x², v = y² this
//!    sharpens the plain |x|^{2m}|y|^{2m} weight bound.
//!  * In the large-index regime k₁ ≥ k₂(N−1) (with k₂ = 1/α and
//!    μ = k₁ + k₂(N−1) + 1/2), every Pochhammer factor is ≥ μ/2 and
//!    μ^{|λ|}/(μ)_λ ≤ 2^{N(N−1)(k₂+1)/2}, which turns the ₀F₁ tails into
//!    scaled exponential remainders.
//!
//! Outside that regime no proven ₀F₁ tail is available; the evaluator then
//! falls back to a term-ratio heuristic and reports the result with
//! `rigorous = false`, leaving the convergence flag advisory.

use crate::error::{Error, Result};
use crate::jack::{EvalVector, JackContext, JackParameter};
use crate::partitions::Partition;

/// Truncation controls for one series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesPolicy {
    /// Hard cap M on the partition weight |λ|.
    pub max_weight: u32,
    /// Stop once the tail bound falls below rel_tol·|partial sum| + abs_tol.
    pub rel_tol: f64,
    /// Absolute fallback for partial sums near zero.
    pub abs_tol: f64,
}

impl SeriesPolicy {
    pub fn new(max_weight: u32, rel_tol: f64, abs_tol: f64) -> Result<Self> {
        if max_weight < 2 {
            return Err(Error::Domain("max_weight must be at least 2".into()));
        }
        if !(rel_tol > 0.0 && rel_tol < 1.0) || !(abs_tol > 0.0 && abs_tol < 1.0) {
            return Err(Error::Domain("tolerances must lie in (0, 1)".into()));
        }
        Ok(SeriesPolicy {
            max_weight,
            rel_tol,
            abs_tol,
        })
    }

    /// Identifier echoed into machine-readable output.
    pub fn id(&self) -> String {
        format!("w{}-r{:e}-a{:e}", self.max_weight, self.rel_tol, self.abs_tol)
    }
}

impl Default for SeriesPolicy {
    fn default() -> Self {
        SeriesPolicy {
            max_weight: 40,
            rel_tol: 1e-12,
            abs_tol: 1e-300,
        }
    }
}

/// Outcome of one truncated series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: f64,
    /// Bound on the dropped remainder. Proven when `rigorous` is true,
    /// a term-ratio estimate otherwise.
    pub tail_bound: f64,
    /// Largest partition weight included in the sum.
    pub weights_summed: u32,
    /// tail_bound ≤ rel_tol·|value| + abs_tol at the stopping weight.
    pub converged: bool,
    /// Whether `tail_bound` is a proven bound.
    pub rigorous: bool,
}

impl SeriesResult {
    fn exact(value: f64) -> Self {
        SeriesResult {
            value,
            tail_bound: 0.0,
            weights_summed: 0,
            converged: true,
            rigorous: true,
        }
    }

    fn scaled(mut self, factor: f64, policy: &SeriesPolicy) -> Self {
        self.value *= factor;
        self.tail_bound *= factor.abs();
        self.converged = self.value.is_finite()
            && self.tail_bound <= policy.rel_tol * self.value.abs() + policy.abs_tol;
        self
    }
}

/// Neumaier-compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Accumulator {
    sum: f64,
    comp: f64,
}

impl Accumulator {
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Generalized Pochhammer symbol (μ)_λ^α = ∏_{j≥1} (μ − (j−1)/α)_{λ_j}.
/// Returns 1 for the empty partition. A zero result is legal here; callers
/// dividing by it must treat it as an error.
pub fn gen_pochhammer(mu: f64, lambda: &Partition, alpha: JackParameter) -> f64 {
    let a = alpha.alpha();
    let mut r = 1.0f64;
    for (j, &lj) in lambda.parts().iter().enumerate() {
        let base = mu - j as f64 / a;
        for i in 0..lj {
            r *= base + i as f64;
        }
    }
    r
}

/// μ^{|λ|}/(μ)_λ − 1 at full relative precision, via log1p/expm1 over the
/// factor ratios. Requires every factor μ − (j−1)/α + i to be positive;
/// returns None otherwise.
pub fn pochhammer_ratio_minus_one(
    mu: f64,
    lambda: &Partition,
    alpha: JackParameter,
) -> Option<f64> {
    if mu <= 0.0 {
        return None;
    }
    let a = alpha.alpha();
    let mut log_sum = 0.0f64;
    for (j, &lj) in lambda.parts().iter().enumerate() {
        let shift = -(j as f64) / a;
        for i in 0..lj {
            let delta = shift + i as f64;
            if mu + delta <= 0.0 {
                return None;
            }
            log_sum += (delta / mu).ln_1p();
        }
    }
    Some((-log_sum).exp_m1())
}

/// Σ_{m>M} z^m/m!, the exponential remainder, computed without cancellation:
/// forward summation of the tail when it is small, e^z minus the partial sum
/// when the tail dominates. Clamped at zero.
pub fn tail_bound_0f0(norm_product: f64, m: u32) -> f64 {
    let z = norm_product;
    if z <= 0.0 {
        return 0.0;
    }
    if z <= (m + 1) as f64 {
        // leading tail term z^{M+1}/(M+1)!, then a dominated geometric-ish sum
        let mut term = 1.0f64;
        for k in 1..=(m + 1) {
            term *= z / k as f64;
            if term == 0.0 {
                return 0.0;
            }
        }
        let mut acc = Accumulator::default();
        let mut k = m + 1;
        while term > f64::MIN_POSITIVE && k < m + 2000 {
            acc.add(term);
            k += 1;
            term *= z / k as f64;
        }
        acc.total().max(0.0)
    } else {
        let mut partial = Accumulator::default();
        let mut term = 1.0f64;
        partial.add(term);
        for k in 1..=m {
            term *= z / k as f64;
            partial.add(term);
        }
        (z.exp() - partial.total()).max(0.0)
    }
}

/// Per-weight kernel bound base: |Σ_{|λ|=m} C_λ(u)C_λ(v)/C_λ(𝟏)| ≤ base^m.
pub(crate) fn kernel_bound_base(u: &[f64], v: &[f64]) -> f64 {
    let linf = |w: &[f64]| w.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let l1 = |w: &[f64]| w.iter().map(|c| c.abs()).sum::<f64>();
    (linf(u) * l1(v)).min(linf(v) * l1(u))
}

/// Large-index regime data for ₀F₁-type tails.
#[derive(Debug, Clone, Copy)]
pub(crate) struct RegimeBound {
    /// 2^{N(N−1)(k₂+1)/2}, the proven cap on μ^{|λ|}/(μ)_λ
    pub cap: f64,
    pub k1: f64,
    pub k2: f64,
}

pub(crate) fn pochhammer_regime(alpha: f64, mu: f64, n: usize) -> Option<RegimeBound> {
    let k2 = 1.0 / alpha;
    let k1 = mu - k2 * (n as f64 - 1.0) - 0.5;
    if k1 > 0.0 && k1 >= k2 * (n as f64 - 1.0) - 1e-12 {
        let cap = (2f64).powf(n as f64 * (n as f64 - 1.0) * (k2 + 1.0) / 2.0);
        Some(RegimeBound { cap, k1, k2 })
    } else {
        None
    }
}

enum Tail {
    Rigorous(Box<dyn Fn(u32) -> f64>),
    Heuristic,
}

/// Weight-major summation engine shared by every series in this module.
/// `coeff` supplies the λ-dependent coefficient without the 1/|λ|! factor.
fn run_series<F>(
    ctx: &JackContext,
    cx: &[f64],
    cy: &[f64],
    policy: &SeriesPolicy,
    mut coeff: F,
    tail: Tail,
) -> Result<SeriesResult>
where
    F: FnMut(usize, &Partition) -> Result<f64>,
{
    assert!(ctx.max_weight() >= policy.max_weight);
    let table = ctx.partitions();
    let ones = ctx.ones();
    let mut total = Accumulator::default();
    let mut inv_fact = 1.0f64;
    let mut prev_mag = f64::NAN;
    let mut last_mag = f64::NAN;
    let mut weights_summed = 0;
    let mut tail_bound = f64::INFINITY;
    let mut converged = false;
    let rigorous = matches!(tail, Tail::Rigorous(_));

    for m in 0..=policy.max_weight {
        if m > 0 {
            inv_fact /= m as f64;
        }
        let mut block = Accumulator::default();
        for i in table.weight_range(m) {
            let c = coeff(i, table.get(i))?;
            if c != 0.0 {
                block.add(c * cx[i] * cy[i] / ones[i]);
            }
        }
        let block_total = block.total() * inv_fact;
        total.add(block_total);
        weights_summed = m;
        if block_total != 0.0 {
            prev_mag = last_mag;
            last_mag = block_total.abs();
        }

        tail_bound = match &tail {
            Tail::Rigorous(f) => f(m),
            Tail::Heuristic => {
                if last_mag.is_nan() {
                    f64::INFINITY
                } else if prev_mag.is_nan() {
                    last_mag
                } else {
                    let r = last_mag / prev_mag;
                    if r < 0.99 {
                        last_mag * r / (1.0 - r)
                    } else {
                        f64::INFINITY
                    }
                }
            }
        };
        let value = total.total();
        if m >= 2 && tail_bound <= policy.rel_tol * value.abs() + policy.abs_tol {
            converged = true;
            break;
        }
    }

    let value = total.total();
    Ok(SeriesResult {
        value,
        tail_bound,
        weights_summed,
        converged: converged && value.is_finite(),
        rigorous,
    })
}

fn check_dims(ctx: &JackContext, x: &EvalVector, y: &EvalVector) -> Result<()> {
    if x.n() != y.n() {
        return Err(Error::DimensionMismatch { x: x.n(), y: y.n() });
    }
    if x.n() != ctx.n_vars() {
        return Err(Error::DimensionMismatch {
            x: x.n(),
            y: ctx.n_vars(),
        });
    }
    Ok(())
}

/// ₀F₀ᵅ(x, y) = Σ_λ C_λ(x)C_λ(y)/(C_λ(𝟏)·|λ|!).
///
/// Both arguments are first centered along 𝟏: the type-A kernel splits along
/// the center-of-mass direction, so
/// ₀F₀ᵅ(x, y) = e^{s(x)s(y)/N} ₀F₀ᵅ(x − x̄𝟏, y − ȳ𝟏). The centered series has
/// far smaller terms, which is what makes moderate-size arguments evaluable in
/// double precision; the prefactor scales the (still rigorous) tail bound.
pub fn hyper_0f0(
    alpha: JackParameter,
    x: &EvalVector,
    y: &EvalVector,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    let ctx = JackContext::build(alpha, x.n(), policy.max_weight);
    hyper_0f0_in(&ctx, x, y, policy)
}

/// [`hyper_0f0`] with a shared evaluation context.
pub fn hyper_0f0_in(
    ctx: &JackContext,
    x: &EvalVector,
    y: &EvalVector,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    check_dims(ctx, x, y)?;
    let n = x.n() as f64;
    let (x_mean, xc) = x.centered();
    let (y_mean, yc) = y.centered();
    let scale = (x_mean * y_mean * n).exp();
    let raw = hyper_0f0_uncentered_in(ctx, &xc, &yc, policy)?;
    Ok(raw.scaled(scale, policy))
}

/// The plain weight-major ₀F₀ series without the centering reduction.
/// Exposed so tests can pin the centering identity; prefer [`hyper_0f0`].
pub fn hyper_0f0_uncentered_in(
    ctx: &JackContext,
    x: &EvalVector,
    y: &EvalVector,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    check_dims(ctx, x, y)?;
    if x.coords().iter().all(|&c| c == 0.0) || y.coords().iter().all(|&c| c == 0.0) {
        return Ok(SeriesResult::exact(1.0));
    }
    let cx = ctx.eval_c_all(x.coords());
    let cy = ctx.eval_c_all(y.coords());
    let z = kernel_bound_base(x.coords(), y.coords());
    run_series(
        ctx,
        &cx,
        &cy,
        policy,
        |_, _| Ok(1.0),
        Tail::Rigorous(Box::new(move |m| tail_bound_0f0(z, m))),
    )
}

/// ₀F₁ᵅ(μ; x, y) = Σ_λ C_λ(x)C_λ(y)/((μ)_λ·C_λ(𝟏)·|λ|!).
pub fn hyper_0f1(
    alpha: JackParameter,
    mu: f64,
    x: &EvalVector,
    y: &EvalVector,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    let ctx = JackContext::build(alpha, x.n(), policy.max_weight);
    hyper_0f1_in(&ctx, mu, x, y, policy)
}

/// [`hyper_0f1`] with a shared evaluation context.
pub fn hyper_0f1_in(
    ctx: &JackContext,
    mu: f64,
    x: &EvalVector,
    y: &EvalVector,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    check_dims(ctx, x, y)?;
    if x.coords().iter().all(|&c| c == 0.0) || y.coords().iter().all(|&c| c == 0.0) {
        return Ok(SeriesResult::exact(1.0));
    }
    let cx = ctx.eval_c_all(x.coords());
    let cy = ctx.eval_c_all(y.coords());
    let alpha = JackParameter::new(ctx.alpha())?;
    let tail = match pochhammer_regime(ctx.alpha(), mu, ctx.n_vars()) {
        Some(r) => {
            let z = kernel_bound_base(x.coords(), y.coords()) / mu;
            Tail::Rigorous(Box::new(move |m| r.cap * tail_bound_0f0(z, m)))
        }
        None => Tail::Heuristic,
    };
    run_series(
        ctx,
        &cx,
        &cy,
        policy,
        move |_, lam| {
            let p = gen_pochhammer(mu, lam, alpha);
            if p == 0.0 {
                Err(Error::VanishingPochhammer {
                    mu,
                    lambda: lam.clone(),
                })
            } else {
                Ok(1.0 / p)
            }
        },
        tail,
    )
}

/// One-argument cone series Σ_λ (−1)^{|λ|} C_λ(x)/((μ)_λ·|λ|!).
pub fn hyper_0f1_one_arg(
    alpha: JackParameter,
    mu: f64,
    x: &EvalVector,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    let ctx = JackContext::build(alpha, x.n(), policy.max_weight);
    hyper_0f1_one_arg_in(&ctx, mu, x, policy)
}

pub fn hyper_0f1_one_arg_in(
    ctx: &JackContext,
    mu: f64,
    x: &EvalVector,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    if x.n() != ctx.n_vars() {
        return Err(Error::DimensionMismatch {
            x: x.n(),
            y: ctx.n_vars(),
        });
    }
    if x.coords().iter().all(|&c| c == 0.0) {
        return Ok(SeriesResult::exact(1.0));
    }
    let cx = ctx.eval_c_all(x.coords());
    // reuse the two-argument engine with y = 𝟏, whose C-values cancel C_λ(𝟏)
    let cy = ctx.ones().to_vec();
    let alpha = JackParameter::new(ctx.alpha())?;
    let tail = match pochhammer_regime(ctx.alpha(), mu, ctx.n_vars()) {
        Some(r) => {
            let z = x.l1_norm() / mu;
            Tail::Rigorous(Box::new(move |m| r.cap * tail_bound_0f0(z, m)))
        }
        None => Tail::Heuristic,
    };
    run_series(
        ctx,
        &cx,
        &cy,
        policy,
        move |_, lam| {
            let p = gen_pochhammer(mu, lam, alpha);
            if p == 0.0 {
                Err(Error::VanishingPochhammer {
                    mu,
                    lambda: lam.clone(),
                })
            } else {
                Ok(if lam.weight() % 2 == 0 { 1.0 } else { -1.0 } / p)
            }
        },
        tail,
    )
}

/// μ-scaled ₀F₁ form Σ_λ (−1)^{|λ|} (μ^{|λ|}/(μ)_λ)·C_λ(x²)C_λ(y²)/(C_λ(𝟏)·|λ|!).
///
/// This is ₀F₁ᵅ(μ; 2μ·x², −y²/2) with the μ-powers cancelled analytically, so
/// no term grows with μ; it is the evaluation path for large-μ sweeps. The
/// arguments are the squared vectors x², y² (coordinatewise nonnegative).
pub fn hyper_0f1_muscaled(
    alpha: JackParameter,
    mu: f64,
    x_sq: &EvalVector,
    y_sq: &EvalVector,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    let ctx = JackContext::build(alpha, x_sq.n(), policy.max_weight);
    hyper_0f1_muscaled_in(&ctx, mu, x_sq, y_sq, policy)
}

pub fn hyper_0f1_muscaled_in(
    ctx: &JackContext,
    mu: f64,
    x_sq: &EvalVector,
    y_sq: &EvalVector,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    check_dims(ctx, x_sq, y_sq)?;
    if x_sq.coords().iter().all(|&c| c == 0.0) || y_sq.coords().iter().all(|&c| c == 0.0) {
        return Ok(SeriesResult::exact(1.0));
    }
    let cx = ctx.eval_c_all(x_sq.coords());
    let cy = ctx.eval_c_all(y_sq.coords());
    let alpha = JackParameter::new(ctx.alpha())?;
    let tail = match pochhammer_regime(ctx.alpha(), mu, ctx.n_vars()) {
        Some(r) => {
            let z = kernel_bound_base(x_sq.coords(), y_sq.coords());
            Tail::Rigorous(Box::new(move |m| r.cap * tail_bound_0f0(z, m)))
        }
        None => Tail::Heuristic,
    };
    run_series(
        ctx,
        &cx,
        &cy,
        policy,
        move |_, lam| {
            let r = pochhammer_ratio_minus_one(mu, lam, alpha).ok_or_else(|| {
                Error::VanishingPochhammer {
                    mu,
                    lambda: lam.clone(),
                }
            })?;
            let ratio = 1.0 + r;
            Ok(if lam.weight() % 2 == 0 { ratio } else { -ratio })
        },
        tail,
    )
}

/// Difference series Σ_λ (−1)^{|λ|}(μ^{|λ|}/(μ)_λ − 1)·C_λ(x²)C_λ(y²)/(C_λ(𝟏)·|λ|!),
/// i.e. the two Bessel series subtracted term by term so the weight-0 and
/// weight-1 contributions vanish identically and no cancellation between two
/// O(1) values occurs. Requires the large-index regime (all Pochhammer factors
/// positive); the tail combines the kernel weight bound with the
/// |μ^m/(μ)_λ − 1| ≲ m²/k₁ coefficient estimate.
pub fn hyper_0f1_scaled_diff_in(
    ctx: &JackContext,
    mu: f64,
    x_sq: &EvalVector,
    y_sq: &EvalVector,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    check_dims(ctx, x_sq, y_sq)?;
    if x_sq.coords().iter().all(|&c| c == 0.0) || y_sq.coords().iter().all(|&c| c == 0.0) {
        return Ok(SeriesResult::exact(0.0));
    }
    let cx = ctx.eval_c_all(x_sq.coords());
    let cy = ctx.eval_c_all(y_sq.coords());
    let alpha = JackParameter::new(ctx.alpha())?;
    let n = ctx.n_vars() as f64;
    let tail = match pochhammer_regime(ctx.alpha(), mu, ctx.n_vars()) {
        Some(r) => {
            let z = kernel_bound_base(x_sq.coords(), y_sq.coords());
            let coef_quad = r.cap / 3.0 * (1.0 + r.k2 * (n - 1.0)) / r.k1;
            let coef_flat = r.cap + 1.0;
            Tail::Rigorous(Box::new(move |m| {
                let quad = coef_quad
                    * (z * z * tail_bound_0f0(z, m.saturating_sub(2))
                        + z * tail_bound_0f0(z, m.saturating_sub(1)));
                let flat = coef_flat * tail_bound_0f0(z, m);
                quad.min(flat)
            }))
        }
        None => Tail::Heuristic,
    };
    run_series(
        ctx,
        &cx,
        &cy,
        policy,
        move |_, lam| {
            let r = pochhammer_ratio_minus_one(mu, lam, alpha).ok_or_else(|| {
                Error::VanishingPochhammer {
                    mu,
                    lambda: lam.clone(),
                }
            })?;
            Ok(if lam.weight() % 2 == 0 { r } else { -r })
        },
        tail,
    )
}

/// Weight-m kernel sum Σ_{|λ|=m} C_λ(u)C_λ(v)/C_λ(𝟏), the quantity bounded by
/// the per-weight estimates above. Exposed for the verification harness.
pub fn kernel_weight_sum(ctx: &JackContext, m: u32, u: &EvalVector, v: &EvalVector) -> Result<f64> {
    check_dims(ctx, u, v)?;
    if m > ctx.max_weight() {
        return Err(Error::Domain(format!(
            "weight {} exceeds context cap {}",
            m,
            ctx.max_weight()
        )));
    }
    let cu = ctx.eval_c_all(u.coords());
    let cv = ctx.eval_c_all(v.coords());
    let ones = ctx.ones();
    let mut acc = Accumulator::default();
    for i in ctx.partitions().weight_range(m) {
        acc.add(cu[i] * cv[i] / ones[i]);
    }
    Ok(acc.total())
}
