//! Public Bessel-function surface.
//!
//! One-dimensional normalized spherical Bessel functions j_α, the Dunkl-type
//! Bessel functions of type A (₀F₀ᵅ Jack series) and type B (₀F₁ᵅ Jack
//! series), the matrix-cone Bessel function through eigenvalues, and the
//! Harish-Chandra alternating sum as the α = 1 closed-form oracle.
//!
//! Every evaluation "at iy" is exposed as a real-valued function of real
//! (x, y): since (iy)² = −y², all series in scope stay real and complex
//! numbers never cross the API.

use crate::error::{Error, Result};
use crate::hypergeo::{
    hyper_0f0_in, hyper_0f1_in, hyper_0f1_one_arg_in, hyper_0f1_scaled_diff_in, Accumulator,
    SeriesPolicy, SeriesResult,
};
use crate::jack::{EvalVector, JackContext, JackParameter};

/// Type-B multiplicity (k₁ on the roots ±e_i, k₂ on ±e_i±e_j) in dimension N.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultiplicityB {
    k1: f64,
    k2: f64,
    n: usize,
}

impl MultiplicityB {
    pub fn new(k1: f64, k2: f64, n: usize) -> Result<Self> {
        if !(k1 >= 0.0) || !(k2 >= 0.0) {
            return Err(Error::Domain(format!(
                "multiplicities must be nonnegative, got k1={} k2={}",
                k1, k2
            )));
        }
        if n == 0 {
            return Err(Error::Domain("dimension must be at least 1".into()));
        }
        Ok(MultiplicityB { k1, k2, n })
    }

    pub fn k1(&self) -> f64 {
        self.k1
    }

    pub fn k2(&self) -> f64 {
        self.k2
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// μ = k₁ + (N−1)k₂ + 1/2.
    pub fn mu(&self) -> f64 {
        self.k1 + (self.n as f64 - 1.0) * self.k2 + 0.5
    }

    /// Jack index α = 1/k₂; defined only for k₂ > 0.
    pub fn jack_alpha(&self) -> Result<JackParameter> {
        if self.k2 > 0.0 {
            JackParameter::new(1.0 / self.k2)
        } else {
            Err(Error::Domain("alpha = 1/k2 requires k2 > 0".into()))
        }
    }

    /// Hypothesis of the approximation propositions: k₁ ≥ k₂(N−1).
    pub fn in_proposition_regime(&self) -> bool {
        self.k1 >= self.k2 * (self.n as f64 - 1.0) - 1e-12
    }

    /// Equality case of the hypothesis, flagged in reports.
    pub fn on_regime_boundary(&self) -> bool {
        (self.k1 - self.k2 * (self.n as f64 - 1.0)).abs() <= 1e-12
    }

    /// Multiplicity reachable from a cone Bessel function of index μ over the
    /// division algebra of real dimension d: k(μ, d) = (μ − (d(N−1)+1)/2, d/2).
    pub fn from_cone(mu: f64, d: u32, n: usize) -> Result<Self> {
        let k1 = mu - (d as f64 * (n as f64 - 1.0) + 1.0) / 2.0;
        if k1 < 0.0 {
            return Err(Error::Domain(format!(
                "cone index mu={} too small for d={}, N={}: k1 would be {}",
                mu, d, n, k1
            )));
        }
        MultiplicityB::new(k1, d as f64 / 2.0, n)
    }
}

const ONE_D_SERIES_CUTOFF: f64 = 30.0;

/// Normalized spherical Bessel function j_α(t) = ₀F₁(α+1; −t²/4), j_α(0) = 1.
///
/// Direct alternating series for |t| ≤ 30, and beyond that when the order is
/// large enough to keep the terms from growing (the series is then still
/// accurate). Otherwise the value is obtained by downward recurrence
/// j_{ν−1} = j_ν − t²/(4ν(ν+1))·j_{ν+1} from a series-accurate high order,
/// the stable direction for this family.
pub fn bessel_j(alpha: f64, t: f64) -> f64 {
    assert!(alpha > -1.0, "order must exceed -1");
    let t = t.abs(); // even function
    if t == 0.0 {
        return 1.0;
    }
    if t <= ONE_D_SERIES_CUTOFF || series_peak_ln(alpha, t) < 12.0 {
        j_series(alpha, t)
    } else {
        j_downward(alpha, t)
    }
}

/// j_α at purely imaginary argument: j_α(i·t) = ₀F₁(α+1; +t²/4) ≥ 1.
/// All series terms are positive, so there is no cancellation at any t.
pub fn bessel_j_imag(alpha: f64, t: f64) -> f64 {
    assert!(alpha > -1.0, "order must exceed -1");
    let z = t * t / 4.0;
    let mut acc = Accumulator::default();
    let mut term = 1.0f64;
    acc.add(term);
    for n in 1..=2000u32 {
        term *= z / (n as f64 * (alpha + n as f64));
        acc.add(term);
        if term <= 1e-18 * acc.total() {
            break;
        }
    }
    acc.total()
}

fn j_series(alpha: f64, t: f64) -> f64 {
    let z = t * t / 4.0;
    let mut acc = Accumulator::default();
    let mut term = 1.0f64;
    acc.add(term);
    for n in 1..=2000u32 {
        term *= -z / (n as f64 * (alpha + n as f64));
        acc.add(term);
        if term.abs() <= 1e-18 * acc.total().abs().max(f64::MIN_POSITIVE) && n as f64 > z / n as f64
        {
            break;
        }
    }
    acc.total()
}

/// ln of the largest series term, a cancellation estimate used to pick the
/// evaluation path.
fn series_peak_ln(alpha: f64, t: f64) -> f64 {
    let z = t * t / 4.0;
    let mut ln_term = 0.0f64;
    let mut ln_max = 0.0f64;
    let mut n = 1.0f64;
    loop {
        let r = z / (n * (alpha + n));
        if r <= 1.0 || n > 1e7 {
            break;
        }
        ln_term += r.ln();
        ln_max = ln_max.max(ln_term);
        n += 1.0;
    }
    ln_max
}

fn j_downward(alpha: f64, t: f64) -> f64 {
    let steps = ((t + 12.0 - alpha).ceil() as usize).max(2);
    let top = alpha + steps as f64;
    let z = t * t / 4.0;
    let mut above = j_series(top + 1.0, t);
    let mut here = j_series(top, t);
    let mut nu = top;
    for _ in 0..steps {
        let below = here - z / (nu * (nu + 1.0)) * above;
        above = here;
        here = below;
        nu -= 1.0;
    }
    here
}

fn check_pair(x: &EvalVector, y: &EvalVector, n: usize) -> Result<()> {
    if x.n() != y.n() {
        return Err(Error::DimensionMismatch { x: x.n(), y: y.n() });
    }
    if x.n() != n {
        return Err(Error::DimensionMismatch { x: x.n(), y: n });
    }
    Ok(())
}

/// Visit all permutations of 0..n (Heap's algorithm), with the permutation's sign.
fn for_each_permutation<F: FnMut(&[usize], f64)>(n: usize, mut f: F) {
    assert!(n <= 10, "factorial blowup guard");
    let mut idx: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1.0f64;
    f(&idx, sign);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                idx.swap(0, i);
            } else {
                idx.swap(c[i], i);
            }
            sign = -sign;
            f(&idx, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Dunkl-type Bessel function of type A: J^A_{k₂}(x, y).
///
/// For k₂ > 0 this is ₀F₀^{1/k₂}(x, y); for k₂ = 0 the exact symmetrized
/// exponential (1/N!)·Σ_w e^{⟨wx,y⟩} with zero tail.
pub fn bessel_a(k2: f64, x: &EvalVector, y: &EvalVector, policy: &SeriesPolicy) -> Result<SeriesResult> {
    if k2 == 0.0 {
        return bessel_a_multiplicity_zero(x, y);
    }
    let alpha = JackParameter::new(1.0 / k2)?;
    let ctx = JackContext::build(alpha, x.n(), policy.max_weight);
    bessel_a_in(&ctx, x, y, policy)
}

/// [`bessel_a`] for k₂ > 0 with a shared context (α must equal 1/k₂).
pub fn bessel_a_in(
    ctx: &JackContext,
    x: &EvalVector,
    y: &EvalVector,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    hyper_0f0_in(ctx, x, y, policy)
}

fn bessel_a_multiplicity_zero(x: &EvalVector, y: &EvalVector) -> Result<SeriesResult> {
    if x.n() != y.n() {
        return Err(Error::DimensionMismatch { x: x.n(), y: y.n() });
    }
    let n = x.n();
    let mut acc = Accumulator::default();
    let mut count = 0u64;
    for_each_permutation(n, |perm, _| {
        let dot: f64 = perm
            .iter()
            .enumerate()
            .map(|(l, &w)| x.coords()[w] * y.coords()[l])
            .sum();
        acc.add(dot.exp());
        count += 1;
    });
    Ok(SeriesResult {
        value: acc.total() / count as f64,
        tail_bound: 0.0,
        weights_summed: 0,
        converged: true,
        rigorous: true,
    })
}

/// Type-B Dunkl Bessel function evaluated at (x, iy), as a real number.
///
/// For k₂ > 0 this is ₀F₁^{1/k₂}(μ; x²/2, −y²/2); for k₂ = 0 the exact
/// symmetrized product (1/N!)·Σ_w ∏_l j_{k₁−1/2}(x_{w(l)}·y_l).
pub fn bessel_b_at_imag(
    mult: &MultiplicityB,
    x: &EvalVector,
    y: &EvalVector,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    check_pair(x, y, mult.n)?;
    if mult.k2 == 0.0 {
        return Ok(bessel_b_product_form(mult.k1, x, y, bessel_j));
    }
    let ctx = JackContext::build(mult.jack_alpha()?, mult.n, policy.max_weight);
    bessel_b_at_imag_in(&ctx, mult, x, y, policy)
}

/// [`bessel_b_at_imag`] for k₂ > 0 with a shared context.
pub fn bessel_b_at_imag_in(
    ctx: &JackContext,
    mult: &MultiplicityB,
    x: &EvalVector,
    y: &EvalVector,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    check_pair(x, y, mult.n)?;
    let arg_x = x.squared().scaled(0.5);
    let arg_y = y.squared().scaled(-0.5);
    hyper_0f1_in(ctx, mult.mu(), &arg_x, &arg_y, policy)
}

/// Type-B Dunkl Bessel function at a real pair (x, y):
/// ₀F₁^{1/k₂}(μ; x²/2, y²/2), or the symmetrized product of j_{k₁−1/2} at
/// imaginary argument when k₂ = 0.
pub fn bessel_b(
    mult: &MultiplicityB,
    x: &EvalVector,
    y: &EvalVector,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    check_pair(x, y, mult.n)?;
    if mult.k2 == 0.0 {
        return Ok(bessel_b_product_form(mult.k1, x, y, bessel_j_imag));
    }
    let ctx = JackContext::build(mult.jack_alpha()?, mult.n, policy.max_weight);
    let arg_x = x.squared().scaled(0.5);
    let arg_y = y.squared().scaled(0.5);
    hyper_0f1_in(&ctx, mult.mu(), &arg_x, &arg_y, policy)
}

fn bessel_b_product_form(
    k1: f64,
    x: &EvalVector,
    y: &EvalVector,
    one_dim: fn(f64, f64) -> f64,
) -> SeriesResult {
    let n = x.n();
    let order = k1 - 0.5;
    let mut acc = Accumulator::default();
    let mut count = 0u64;
    for_each_permutation(n, |perm, _| {
        let mut prod = 1.0f64;
        for (l, &w) in perm.iter().enumerate() {
            prod *= one_dim(order, x.coords()[w] * y.coords()[l]);
        }
        acc.add(prod);
        count += 1;
    });
    SeriesResult {
        value: acc.total() / count as f64,
        tail_bound: 0.0,
        weights_summed: 0,
        converged: true,
        rigorous: true,
    }
}

/// The difference J^B_{(k₁,k₂)}(2√μ·x, iy) − J^A_{k₂}(−x², y²) summed as one
/// series, so the weight-0 and weight-1 terms vanish identically and large μ
/// causes no cancellation between two O(1) values. Requires k₂ > 0.
pub fn bessel_b_scaled_diff(
    mult: &MultiplicityB,
    x: &EvalVector,
    y: &EvalVector,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    check_pair(x, y, mult.n)?;
    let ctx = JackContext::build(mult.jack_alpha()?, mult.n, policy.max_weight);
    bessel_b_scaled_diff_in(&ctx, mult, x, y, policy)
}

/// [`bessel_b_scaled_diff`] with a shared context.
pub fn bessel_b_scaled_diff_in(
    ctx: &JackContext,
    mult: &MultiplicityB,
    x: &EvalVector,
    y: &EvalVector,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    check_pair(x, y, mult.n)?;
    hyper_0f1_scaled_diff_in(ctx, mult.mu(), &x.squared(), &y.squared(), policy)
}

/// Bessel function on the cone of positive semidefinite matrices over the
/// division algebra of real dimension d ∈ {1, 2, 4}, through the eigenvalue
/// vector: J_μ(X) = Σ_λ (−1)^{|λ|} C_λ^{2/d}(eig X)/((μ)_λ·|λ|!).
pub fn cone_bessel(
    mu: f64,
    d: u32,
    eigenvalues: &EvalVector,
    policy: &SeriesPolicy,
) -> Result<SeriesResult> {
    if !matches!(d, 1 | 2 | 4) {
        return Err(Error::Domain(format!("d must be 1, 2 or 4, got {}", d)));
    }
    let alpha = JackParameter::new(2.0 / d as f64)?;
    let ctx = JackContext::build(alpha, eigenvalues.n(), policy.max_weight);
    hyper_0f1_one_arg_in(&ctx, mu, eigenvalues, policy)
}

/// Multiplicity reachable from the cone parameters; see [`MultiplicityB::from_cone`].
pub fn k_from_cone(mu: f64, d: u32, n: usize) -> Result<MultiplicityB> {
    if !matches!(d, 1 | 2 | 4) {
        return Err(Error::Domain(format!("d must be 1, 2 or 4, got {}", d)));
    }
    MultiplicityB::from_cone(mu, d, n)
}

const HC_DISTINCTNESS_RTOL: f64 = 1e-9;

/// Harish-Chandra alternating sum: the closed form of ₀F₀¹(−x², y²),
///
///   (∏_{j<N} j!)·Σ_{w∈S_N} sgn(w)·e^{−⟨x², w y²⟩} / (π(−x²)·π(y²)),
///
/// with π(v) = ∏_{i<j}(v_i − v_j). Serves as the α = 1 oracle for
/// `bessel_a(k2 = 1)` at arguments (−x², y²). The squared coordinates of each
/// vector must be pairwise distinct (relative tolerance 1e−9); coinciding
/// values make the denominator singular and raise an error rather than
/// dividing silently.
pub fn harish_chandra_0f0(x: &EvalVector, y: &EvalVector) -> Result<f64> {
    if x.n() != y.n() {
        return Err(Error::DimensionMismatch { x: x.n(), y: y.n() });
    }
    let n = x.n();
    if n > 8 {
        return Err(Error::Domain(
            "alternating sum limited to N <= 8 (factorial growth)".into(),
        ));
    }
    let a = x.squared();
    let b = y.squared();
    check_distinct(&a, "x")?;
    check_distinct(&b, "y")?;
    if n == 1 {
        return Ok((-a.coords()[0] * b.coords()[0]).exp());
    }

    // factor the smallest exponent out of the alternating sum
    let mut min_dot = f64::INFINITY;
    for_each_permutation(n, |perm, _| {
        let dot: f64 = perm
            .iter()
            .enumerate()
            .map(|(l, &w)| a.coords()[l] * b.coords()[w])
            .sum();
        min_dot = min_dot.min(dot);
    });
    let mut acc = Accumulator::default();
    for_each_permutation(n, |perm, sign| {
        let dot: f64 = perm
            .iter()
            .enumerate()
            .map(|(l, &w)| a.coords()[l] * b.coords()[w])
            .sum();
        acc.add(sign * (-(dot - min_dot)).exp());
    });

    // log-scale assembly of factorials and pairwise-difference products
    let mut log_mag = -min_dot;
    let mut sign = 1.0f64;
    for j in 1..n {
        for i in 1..=j {
            log_mag += (i as f64).ln();
        }
    }
    for (v, negate_first) in [(&a, true), (&b, false)] {
        let c = v.coords();
        for i in 0..n {
            for j in (i + 1)..n {
                let mut diff = c[i] - c[j];
                if negate_first {
                    diff = -diff;
                }
                log_mag -= diff.abs().ln();
                if diff < 0.0 {
                    sign = -sign;
                }
            }
        }
    }
    let s = acc.total();
    Ok(sign * s.signum() * (log_mag + s.abs().ln()).exp())
}

fn check_distinct(v: &EvalVector, which: &'static str) -> Result<()> {
    let c = v.coords();
    let scale = v.linf_norm().max(f64::MIN_POSITIVE);
    for i in 0..c.len() {
        for j in (i + 1)..c.len() {
            if (c[i] - c[j]).abs() <= HC_DISTINCTNESS_RTOL * scale {
                return Err(Error::SingularAlternatingSum {
                    which,
                    value: c[i],
                });
            }
        }
    }
    Ok(())
}
