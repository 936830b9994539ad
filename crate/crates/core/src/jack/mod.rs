//! Jack polynomials C_λ^α evaluated at real vectors.
//!
//! The normalization is fixed by the summation identity
//! (x₁ + ⋯ + x_N)^k = Σ_{|λ|=k} C_λ^α(x), which every series in this crate
//! relies on. Evaluation runs a branching recursion over the number of
//! variables: the P-normalized polynomial satisfies
//!
//!   P_λ(x₁,…,x_n) = Σ_{μ ≺ λ} ψ_{λ/μ}(α) · P_μ(x₁,…,x_{n−1}) · x_n^{|λ|−|μ|}
//!
//! where μ ≺ λ ranges over horizontal strips (λ_i ≥ μ_i ≥ λ_{i+1}) and
//! ψ_{λ/μ} is a product of arm/leg hook ratios. C_λ^α is then a hook-product
//! multiple of P_λ. Strip lists and hook products are precomputed once per
//! `JackContext` and shared across evaluation points; after construction a
//! context is read-only and safe to share between threads.
//!
//! A separate exact-rational oracle lives in [`exact`]; it builds the same
//! polynomials by a different route (triangular eigenvector extraction for the
//! Sekiguchi–Debiard operator in the monomial basis) and is used by the tests
//! to pin golden values.

pub mod exact;

use crate::error::{Error, Result};
use crate::partitions::{Partition, PartitionTable};

/// Jack index α > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JackParameter {
    alpha: f64,
}

impl JackParameter {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha > 0.0 && alpha.is_finite() {
            Ok(JackParameter { alpha })
        } else {
            Err(Error::Domain(format!("Jack index must be positive, got {}", alpha)))
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

/// Real argument vector of fixed dimension N ≥ 1.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalVector {
    coords: Vec<f64>,
}

impl EvalVector {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Domain("vector must have at least one coordinate".into()));
        }
        Ok(EvalVector { coords })
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Coordinatewise square (x₁², …, x_N²).
    pub fn squared(&self) -> EvalVector {
        EvalVector {
            coords: self.coords.iter().map(|c| c * c).collect(),
        }
    }

    /// Euclidean norm.
    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn sum(&self) -> f64 {
        self.coords.iter().sum()
    }

    pub fn l1_norm(&self) -> f64 {
        self.coords.iter().map(|c| c.abs()).sum()
    }

    pub fn linf_norm(&self) -> f64 {
        self.coords.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn scaled(&self, t: f64) -> EvalVector {
        EvalVector {
            coords: self.coords.iter().map(|c| t * c).collect(),
        }
    }

    pub fn negated(&self) -> EvalVector {
        self.scaled(-1.0)
    }

    /// Subtract the coordinate mean; returns (mean, centered vector).
    pub fn centered(&self) -> (f64, EvalVector) {
        let mean = self.sum() / self.n() as f64;
        (
            mean,
            EvalVector {
                coords: self.coords.iter().map(|c| c - mean).collect(),
            },
        )
    }
}

/// Horizontal strip λ → μ with its branching coefficient in hi/lo form.
#[derive(Debug, Clone, Copy)]
struct Strip {
    mu: u32,
    deg: u8,
    psi_hi: f64,
    psi_lo: f64,
}

/// Precomputed evaluation tables for one (α, N, max weight) triple.
///
/// Construction is single-threaded; afterwards the context is immutable and
/// evaluation is a pure function of the argument vector.
#[derive(Debug)]
pub struct JackContext {
    alpha: f64,
    n_vars: usize,
    table: PartitionTable,
    strips: Vec<Vec<Strip>>,
    /// C_λ = c_factor[λ] · P_λ, hi/lo
    c_factor: Vec<(f64, f64)>,
    /// C_λ(𝟏_N)
    ones: Vec<f64>,
}

impl JackContext {
    pub fn build(alpha: JackParameter, n_vars: usize, max_weight: u32) -> Self {
        assert!(n_vars >= 1);
        assert!(max_weight <= 200, "weight cap keeps strip degrees in u8");
        let alpha = alpha.alpha();
        let table = PartitionTable::build(n_vars, max_weight);
        let conjs: Vec<Partition> = table.iter().map(|p| p.conjugate()).collect();

        let mut strips = Vec::with_capacity(table.len());
        let mut c_factor = Vec::with_capacity(table.len());
        for i in 0..table.len() {
            let lam = table.get(i);
            strips.push(strips_of(lam, &table, &conjs, alpha));
            c_factor.push(c_normalization_factor(lam, &conjs[i], alpha));
        }

        let mut ctx = JackContext {
            alpha,
            n_vars,
            table,
            strips,
            c_factor,
            ones: Vec::new(),
        };
        ctx.ones = ctx.eval_c_all(&vec![1.0; n_vars]);
        ctx
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn max_weight(&self) -> u32 {
        self.table.max_weight
    }

    pub fn partitions(&self) -> &PartitionTable {
        &self.table
    }

    /// C_λ(𝟏_N) for every partition in the table.
    pub fn ones(&self) -> &[f64] {
        &self.ones
    }

    /// P_λ(coords) for every partition in the table, by the variable-count
    /// recursion. `coords` must have exactly `n_vars` entries.
    ///
    /// Strip sums cancel for mixed-sign coordinates, so both the coordinate
    /// powers and the strip accumulation run through error-free
    /// transformations (FMA two-products plus a compensated sum). This keeps
    /// every value within a few ulp of itself instead of a few ulp of the
    /// accumulation flow, which the power-sum identity checks at weight 8 can
    /// tell apart.
    fn eval_p_all(&self, coords: &[f64]) -> Vec<f64> {
        assert_eq!(coords.len(), self.n_vars);
        let np = self.table.len();
        let mw = self.table.max_weight as usize;
        // hi/lo pairs end to end: intermediate rounding would re-inject
        // eps-of-flow absolute error at every stage
        let mut prev_hi = vec![0.0f64; np];
        let mut prev_lo = vec![0.0f64; np];
        prev_hi[0] = 1.0; // the empty partition, in zero variables
        let mut cur_hi = vec![0.0f64; np];
        let mut cur_lo = vec![0.0f64; np];
        let mut pow_hi = vec![0.0f64; mw + 1];
        let mut pow_lo = vec![0.0f64; mw + 1];
        for &xv in coords {
            pow_hi[0] = 1.0;
            pow_lo[0] = 0.0;
            for d in 1..=mw {
                let (p, mut e) = two_prod(pow_hi[d - 1], xv);
                e += pow_lo[d - 1] * xv;
                let hi = p + e;
                pow_lo[d] = e - (hi - p);
                pow_hi[d] = hi;
            }
            for i in 0..np {
                let mut sum = 0.0f64;
                let mut comp = 0.0f64;
                for s in &self.strips[i] {
                    let d = s.deg as usize;
                    let mu = s.mu as usize;
                    let (t1, mut e1) = two_prod(s.psi_hi, prev_hi[mu]);
                    e1 += s.psi_hi * prev_lo[mu] + s.psi_lo * prev_hi[mu];
                    let (v, e2) = two_prod(t1, pow_hi[d]);
                    let elow = e1 * pow_hi[d] + t1 * pow_lo[d] + e2;
                    // TwoSum of v into (sum, comp)
                    let t = sum + v;
                    let bv = t - sum;
                    comp += (sum - (t - bv)) + (v - bv) + elow;
                    sum = t;
                }
                let hi = sum + comp;
                cur_hi[i] = hi;
                cur_lo[i] = comp - (hi - sum);
            }
            std::mem::swap(&mut prev_hi, &mut cur_hi);
            std::mem::swap(&mut prev_lo, &mut cur_lo);
        }
        for (h, l) in prev_hi.iter_mut().zip(&prev_lo) {
            *h += l;
        }
        prev_hi
    }

    /// C_λ(coords) for every partition in the table.
    pub fn eval_c_all(&self, coords: &[f64]) -> Vec<f64> {
        let mut vals = self.eval_p_all(coords);
        for (v, (fh, fl)) in vals.iter_mut().zip(&self.c_factor) {
            let (p, e) = two_prod(*v, *fh);
            *v = p + (e + *v * fl);
        }
        vals
    }

    /// C_λ(coords) for a single partition from this context's table.
    pub fn eval_c(&self, lambda: &Partition, coords: &[f64]) -> Result<f64> {
        if lambda.length() > self.n_vars {
            return Err(Error::PartitionTooLong {
                length: lambda.length(),
                n_vars: self.n_vars,
            });
        }
        let idx = self
            .table
            .position(lambda)
            .ok_or_else(|| Error::Domain(format!("partition {} outside table", lambda)))?;
        Ok(self.eval_c_all(coords)[idx])
    }
}

/// Enumerate horizontal strips μ ≺ λ (λ_i ≥ μ_i ≥ λ_{i+1}) with coefficients.
fn strips_of(
    lam: &Partition,
    table: &PartitionTable,
    conjs: &[Partition],
    alpha: f64,
) -> Vec<Strip> {
    let len = lam.length();
    let weight = lam.weight();
    let mut out = Vec::new();
    let mut mu_parts: Vec<u32> = Vec::with_capacity(len);

    fn rec(
        lam: &Partition,
        row: usize,
        mu_parts: &mut Vec<u32>,
        out: &mut Vec<Strip>,
        table: &PartitionTable,
        conjs: &[Partition],
        lam_conj: &Partition,
        alpha: f64,
        weight: u32,
    ) {
        if row > lam.length() {
            let mu = Partition::new(mu_parts).expect("interlaced parts are weakly decreasing");
            let mu_idx = table.position(&mu).expect("strip target in table");
            let (psi_hi, psi_lo) = psi_coefficient(lam, lam_conj, &mu, &conjs[mu_idx], alpha);
            let deg = (weight - mu.weight()) as u8;
            out.push(Strip {
                mu: mu_idx as u32,
                deg,
                psi_hi,
                psi_lo,
            });
            return;
        }
        let lo = lam.part(row + 1);
        let hi = lam.part(row);
        for v in lo..=hi {
            mu_parts.push(v);
            rec(lam, row + 1, mu_parts, out, table, conjs, lam_conj, alpha, weight);
            mu_parts.pop();
        }
    }

    let lam_conj = lam.conjugate();
    rec(
        lam,
        1,
        &mut mu_parts,
        &mut out,
        table,
        conjs,
        &lam_conj,
        alpha,
        weight,
    );
    out
}

// ---------------------------------------------------------------------------
// double-double helpers: coefficients computed once per context carry a
// second limb so their rounding never scales with the summation flow
// ---------------------------------------------------------------------------

/// Error-free product: returns (fl(a·b), exact residual).
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn dd_renorm(hi: f64, lo: f64) -> (f64, f64) {
    let s = hi + lo;
    (s, lo - (s - hi))
}

#[inline]
fn dd_mul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    let (p, e) = two_prod(a.0, b.0);
    dd_renorm(p, e + (a.0 * b.1 + a.1 * b.0))
}

#[inline]
fn dd_div(n: (f64, f64), d: (f64, f64)) -> (f64, f64) {
    let q1 = n.0 / d.0;
    let (p, e) = two_prod(q1, d.0);
    let r = ((n.0 - p) - e) + n.1 - q1 * d.1;
    dd_renorm(q1, r / d.0)
}

/// α·a + c with exact residual (a, c small integers as floats).
#[inline]
fn axpy_dd(alpha: f64, a: f64, c: f64) -> (f64, f64) {
    let (p, e) = two_prod(alpha, a);
    let (s, e2) = two_sum(p, c);
    dd_renorm(s, e + e2)
}

/// ψ_{λ/μ}(α): product over cells s of μ lying in a row that meets the strip
/// but in a column that does not, of [lower_μ(s)/upper_μ(s)]·[upper_λ(s)/lower_λ(s)],
/// with lower_ν(s) = α·arm + leg + 1 and upper_ν(s) = α·(arm+1) + leg.
fn psi_coefficient(
    lam: &Partition,
    lam_conj: &Partition,
    mu: &Partition,
    mu_conj: &Partition,
    alpha: f64,
) -> (f64, f64) {
    let cols = lam.part(1) as usize;
    // columns met by the strip
    let mut in_strip_col = vec![false; cols + 1];
    for i in 1..=lam.length() {
        let (lo, hi) = (mu.part(i), lam.part(i));
        for c in (lo + 1)..=hi {
            in_strip_col[c as usize] = true;
        }
    }
    let mut psi = (1.0f64, 0.0f64);
    for i in 1..=mu.length() {
        if lam.part(i) == mu.part(i) {
            continue; // row does not meet the strip
        }
        for j in 1..=mu.part(i) {
            if in_strip_col[j as usize] {
                continue;
            }
            let (am, lm) = arm_leg(mu, mu_conj, i, j);
            let (al, ll) = arm_leg(lam, lam_conj, i, j);
            let lower_mu = axpy_dd(alpha, am, lm + 1.0);
            let upper_mu = axpy_dd(alpha, am + 1.0, lm);
            let lower_lam = axpy_dd(alpha, al, ll + 1.0);
            let upper_lam = axpy_dd(alpha, al + 1.0, ll);
            psi = dd_mul(psi, dd_div(lower_mu, upper_mu));
            psi = dd_mul(psi, dd_div(upper_lam, lower_lam));
        }
    }
    psi
}

fn arm_leg(nu: &Partition, nu_conj: &Partition, i: usize, j: u32) -> (f64, f64) {
    let arm = nu.part(i) - j;
    let leg = nu_conj.part(j as usize) as i64 - i as i64;
    (arm as f64, leg as f64)
}

/// C_λ = factor · P_λ with factor = α^{|λ|}·|λ|! / ∏_{s∈λ} upper_λ(s).
/// Computed as a product of O(1) ratios so no intermediate overflows.
fn c_normalization_factor(lam: &Partition, conj: &Partition, alpha: f64) -> (f64, f64) {
    let mut factor = (1.0f64, 0.0f64);
    let mut t = 0u32;
    for i in 1..=lam.length() {
        for j in 1..=lam.part(i) {
            t += 1;
            let (a, l) = arm_leg(lam, conj, i, j);
            let num = two_prod(alpha, t as f64);
            let den = axpy_dd(alpha, a + 1.0, l);
            factor = dd_mul(factor, dd_div(num, den));
        }
    }
    factor
}

/// C_λ^α(x), built from a one-shot context sized to |λ|.
pub fn jack_c(lambda: &Partition, alpha: JackParameter, x: &EvalVector) -> Result<f64> {
    if lambda.length() > x.n() {
        return Err(Error::PartitionTooLong {
            length: lambda.length(),
            n_vars: x.n(),
        });
    }
    let ctx = JackContext::build(alpha, x.n(), lambda.weight());
    ctx.eval_c(lambda, x.coords())
}

/// C_λ^α(𝟏_N). Same evaluator as [`jack_c`], at the all-ones vector.
pub fn jack_c_ones(lambda: &Partition, alpha: JackParameter, n: usize) -> Result<f64> {
    if lambda.length() > n {
        return Err(Error::PartitionTooLong {
            length: lambda.length(),
            n_vars: n,
        });
    }
    let ctx = JackContext::build(alpha, n, lambda.weight());
    let idx = ctx.table.position(lambda).expect("partition within weight cap");
    Ok(ctx.ones[idx])
}

/// C_λ^α(x)·C_λ^α(y)/C_λ^α(𝟏), sharing one context for all three factors.
pub fn jack_ratio_product(
    lambda: &Partition,
    alpha: JackParameter,
    x: &EvalVector,
    y: &EvalVector,
) -> Result<f64> {
    if x.n() != y.n() {
        return Err(Error::DimensionMismatch { x: x.n(), y: y.n() });
    }
    if lambda.length() > x.n() {
        return Err(Error::PartitionTooLong {
            length: lambda.length(),
            n_vars: x.n(),
        });
    }
    let ctx = JackContext::build(alpha, x.n(), lambda.weight());
    let idx = ctx.table.position(lambda).expect("partition within weight cap");
    let cx = ctx.eval_c_all(x.coords())[idx];
    let cy = ctx.eval_c_all(y.coords())[idx];
    Ok(cx * cy / ctx.ones[idx])
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::Rng;
    use rand::SeedableRng;

    fn alpha(a: f64) -> JackParameter {
        JackParameter::new(a).unwrap()
    }

    fn vec_of(c: &[f64]) -> EvalVector {
        EvalVector::new(c.to_vec()).unwrap()
    }

    #[test]
    fn weight_one_is_the_coordinate_sum() {
        let lam = Partition::new(&[1]).unwrap();
        for a in [0.5, 1.0, 2.0, 3.7] {
            let x = vec_of(&[0.3, -1.2, 2.5]);
            assert_relative_eq!(
                jack_c(&lam, alpha(a), &x).unwrap(),
                0.3 - 1.2 + 2.5,
                max_relative = 1e-14
            );
            assert_relative_eq!(jack_c_ones(&lam, alpha(a), 5).unwrap(), 5.0);
        }
    }

    #[test]
    fn weight_two_closed_forms() {
        // C_(2)^α = m_(2) + 2/(1+α)·m_(1,1), C_(1,1)^α = 2α/(1+α)·m_(1,1),
        // fixed by matching coefficients in the power-sum identity at weight 2.
        let ones2 = vec_of(&[1.0, 1.0]);
        assert_relative_eq!(
            jack_c(&Partition::new(&[2]).unwrap(), alpha(1.0), &ones2).unwrap(),
            3.0,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            jack_c(&Partition::new(&[1, 1]).unwrap(), alpha(1.0), &ones2).unwrap(),
            1.0,
            max_relative = 1e-13
        );
        let x = vec_of(&[0.7, -0.4, 1.3]);
        let m2: f64 = x.coords().iter().map(|v| v * v).sum();
        let m11 = 0.7 * -0.4 + 0.7 * 1.3 + -0.4 * 1.3;
        for a in [0.5, 1.0, 2.0, 3.0] {
            let c2 = jack_c(&Partition::new(&[2]).unwrap(), alpha(a), &x).unwrap();
            let c11 = jack_c(&Partition::new(&[1, 1]).unwrap(), alpha(a), &x).unwrap();
            assert_relative_eq!(c2, m2 + 2.0 / (1.0 + a) * m11, max_relative = 1e-13);
            assert_relative_eq!(c11, 2.0 * a / (1.0 + a) * m11, max_relative = 1e-13);
        }
    }

    #[test]
    fn golden_constants_from_exact_oracle() {
        // minted ahead of the build by the exact-rational oracle
        let x = vec_of(&[1.0, 2.0, 3.0]);
        let v = jack_c(&Partition::new(&[2, 1]).unwrap(), alpha(2.0), &x).unwrap();
        assert_relative_eq!(v, 684.0 / 5.0, max_relative = 1e-13);

        let y = vec_of(&[0.5, -1.0 / 3.0, 2.0]);
        let w = jack_c(&Partition::new(&[3, 1]).unwrap(), alpha(0.5), &y).unwrap();
        assert_relative_eq!(w, 859.0 / 270.0, max_relative = 1e-13);
    }

    #[test]
    fn normalization_sums_to_power_of_coordinate_sum() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for &n in &[1usize, 2, 3, 4] {
            for &a in &[0.5, 1.0, 2.0, 3.0] {
                let ctx = JackContext::build(alpha(a), n, 8);
                for _ in 0..10 {
                    let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
                    let vals = ctx.eval_c_all(&x);
                    let s: f64 = x.iter().sum();
                    for m in 0..=8u32 {
                        let total: f64 = ctx.table.weight_range(m).map(|i| vals[i]).sum();
                        let expect = s.powi(m as i32);
                        assert!(
                            (total - expect).abs() <= 1e-10 * expect.abs().max(1.0),
                            "n={} a={} m={} total={} expect={}",
                            n,
                            a,
                            m,
                            total,
                            expect
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn ones_sum_matches_power_identity() {
        // Σ_{|λ|=2} C_λ(𝟏₃) = 3² = 9
        let ctx = JackContext::build(alpha(1.7), 3, 2);
        let total: f64 = ctx.table.weight_range(2).map(|i| ctx.ones[i]).sum();
        assert_relative_eq!(total, 9.0, max_relative = 1e-13);
        assert_relative_eq!(
            jack_c_ones(&Partition::new(&[2]).unwrap(), alpha(1.0), 2).unwrap(),
            3.0,
            max_relative = 1e-13
        );
    }

    #[test]
    fn homogeneity() {
        let lam = Partition::new(&[3, 2]).unwrap();
        let x = vec_of(&[0.9, -0.6, 0.2]);
        for a in [0.5, 2.0] {
            let base = jack_c(&lam, alpha(a), &x).unwrap();
            for t in [-2.0, 0.5, 3.0] {
                let scaled = jack_c(&lam, alpha(a), &x.scaled(t)).unwrap();
                assert_relative_eq!(scaled, t.powi(5) * base, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn symmetry_under_permutations() {
        let lam = Partition::new(&[2, 2, 1]).unwrap();
        let coords = [1.3, -0.7, 0.4, 2.1];
        let perms4: Vec<Vec<usize>> = {
            // all permutations of 4 indices
            let mut out = Vec::new();
            let mut idx = vec![0, 1, 2, 3];
            heap_permutations(&mut idx, 4, &mut out);
            out
        };
        let mut vals = Vec::new();
        for p in &perms4 {
            let x: Vec<f64> = p.iter().map(|&i| coords[i]).collect();
            vals.push(jack_c(&lam, alpha(1.5), &vec_of(&x)).unwrap());
        }
        let mean = vals.iter().sum::<f64>() / vals.len() as f64;
        for v in &vals {
            assert!(
                (v - mean).abs() <= 1e-13 * mean.abs().max(1.0),
                "spread too large: {} vs {}",
                v,
                mean
            );
        }
    }

    fn heap_permutations(idx: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            out.push(idx.clone());
            return;
        }
        for i in 0..k {
            heap_permutations(idx, k - 1, out);
            if k % 2 == 0 {
                idx.swap(i, k - 1);
            } else {
                idx.swap(0, k - 1);
            }
        }
    }

    #[test]
    fn nonnegative_on_nonnegative_coordinates() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let ctx = JackContext::build(alpha(0.8), 3, 7);
        for _ in 0..25 {
            let x: Vec<f64> = (0..3).map(|_| rng.gen_range(0.0..2.0)).collect();
            for v in ctx.eval_c_all(&x) {
                assert!(v >= -1e-12, "negative value {} at x={:?}", v, x);
            }
        }
    }

    #[test]
    fn rejects_partitions_longer_than_vector() {
        let lam = Partition::new(&[1, 1, 1]).unwrap();
        let x = vec_of(&[1.0, 2.0]);
        assert!(matches!(
            jack_c(&lam, alpha(1.0), &x),
            Err(Error::PartitionTooLong { .. })
        ));
        assert!(jack_c_ones(&lam, alpha(1.0), 2).is_err());
    }

    #[test]
    fn ratio_product_basics() {
        let x = vec_of(&[0.4, 1.1]);
        let y = vec_of(&[-0.2, 0.9]);
        // empty partition: all three factors are 1
        assert_relative_eq!(
            jack_ratio_product(&Partition::empty(), alpha(2.0), &x, &y).unwrap(),
            1.0
        );
        // weight 1: (Σx)(Σy)/N
        let lam = Partition::new(&[1]).unwrap();
        assert_relative_eq!(
            jack_ratio_product(&lam, alpha(2.0), &x, &y).unwrap(),
            (0.4 + 1.1) * (-0.2 + 0.9) / 2.0,
            max_relative = 1e-14
        );
        // x = y = 1: cancellation leaves C_λ(1)
        let ones = vec_of(&[1.0, 1.0]);
        let lam2 = Partition::new(&[2]).unwrap();
        assert_relative_eq!(
            jack_ratio_product(&lam2, alpha(1.0), &ones, &ones).unwrap(),
            3.0,
            max_relative = 1e-13
        );
        assert!(jack_ratio_product(&lam, alpha(1.0), &x, &vec_of(&[1.0])).is_err());
    }
}
