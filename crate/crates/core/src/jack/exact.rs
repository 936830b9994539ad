//! Exact-rational Jack polynomial oracle.
//!
//! Independent of the floating-point branching evaluator: here C_λ^α is
//! extracted as the triangular eigenvector of the Sekiguchi–Debiard operator
//!
//!   D = Σ_i x_i² ∂_i² + (2/α) Σ_{i≠j} x_i²/(x_i − x_j) ∂_i
//!
//! acting on monomial symmetric polynomials, in arbitrary-precision rational
//! arithmetic. The operator is applied mechanically to full monomial
//! expansions, the leading-coefficient-one eigenvectors P_λ are solved
//! weight-by-weight, and the C-normalization is obtained by matching the
//! expansion of (x₁+⋯+x_N)^m — so neither the hook-product normalization nor
//! the branching coefficients of the fast path are reused here.
//!
//! Feasible for weight ≤ 8 or so; used to mint golden constants and to check
//! the fast path in tests.

use std::collections::HashMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::partitions::{enumerate_partitions, Partition};

type Expo = Vec<u32>;
type Poly = HashMap<Expo, BigRational>;

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Distinct permutations of the padded part-vector of ν.
fn orbit(nu: &Partition, n_vars: usize) -> Vec<Expo> {
    let mut padded = nu.padded(n_vars);
    padded.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(padded.clone());
        if !next_permutation(&mut padded) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn m_poly(nu: &Partition, n_vars: usize) -> Poly {
    orbit(nu, n_vars)
        .into_iter()
        .map(|e| (e, BigRational::one()))
        .collect()
}

/// Apply the operator D to a symmetric polynomial in monomial form.
///
/// The singular pair terms are handled through the closed form of
/// (x_i²∂_i − x_j²∂_j)/(x_i − x_j) on the symmetrized monomial pair: with
/// exponents b > c it reproduces the pair with coefficient b and emits the
/// intermediate exponents (c+s, b−s), 1 ≤ s ≤ b−c−1, with coefficient b−c.
/// Each unordered monomial pair is attributed once, at its b > c member.
fn apply_operator(poly: &Poly, n_vars: usize, alpha: &BigRational) -> Poly {
    let mut out: Poly = HashMap::new();
    let two_over_alpha = ratio(2, 1) / alpha.clone();
    let add = |out: &mut Poly, e: Expo, c: BigRational| {
        let entry = out.entry(e).or_insert_with(BigRational::zero);
        *entry += c;
    };
    for (a, q) in poly {
        // Σ_i x_i² ∂_i²
        let second: i64 = a.iter().map(|&ai| ai as i64 * (ai as i64 - 1)).sum();
        if second != 0 {
            add(&mut out, a.clone(), q * ratio(second, 1));
        }
        for i in 0..n_vars {
            for j in (i + 1)..n_vars {
                let (b, c) = (a[i], a[j]);
                if b == c {
                    if b > 0 {
                        add(&mut out, a.clone(), q * &two_over_alpha * ratio(b as i64, 1));
                    }
                } else if b > c {
                    let coef_b = q * &two_over_alpha * ratio(b as i64, 1);
                    add(&mut out, a.clone(), coef_b.clone());
                    let mut sw = a.clone();
                    sw.swap(i, j);
                    add(&mut out, sw, coef_b);
                    let coef_mid = q * &two_over_alpha * ratio((b - c) as i64, 1);
                    for s in 1..(b - c) {
                        let mut mid = a.clone();
                        mid[i] = c + s;
                        mid[j] = b - s;
                        add(&mut out, mid, coef_mid.clone());
                    }
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn sorted_desc(e: &Expo) -> Expo {
    let mut s = e.clone();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

fn multinomial(m: u32, kappa: &Partition) -> BigRational {
    let mut num = BigInt::one();
    for i in 2..=m {
        num *= BigInt::from(i);
    }
    let mut den = BigInt::one();
    for &k in kappa.parts() {
        for i in 2..=k {
            den *= BigInt::from(i);
        }
    }
    BigRational::new(num, den)
}

/// Exact Jack polynomials for one (N, α), cached weight-by-weight.
pub struct ExactJack {
    n_vars: usize,
    alpha: BigRational,
    /// per weight: (partition list, m-basis coefficients of C_λ per λ)
    cache: HashMap<u32, (Vec<Partition>, Vec<Vec<(usize, BigRational)>>)>,
}

impl ExactJack {
    pub fn new(n_vars: usize, alpha: BigRational) -> Self {
        assert!(n_vars >= 1);
        assert!(alpha.is_positive(), "Jack index must be positive");
        ExactJack {
            n_vars,
            alpha,
            cache: HashMap::new(),
        }
    }

    pub fn with_alpha_ratio(n_vars: usize, num: i64, den: i64) -> Self {
        Self::new(n_vars, ratio(num, den))
    }

    fn ensure_weight(&mut self, m: u32) {
        if self.cache.contains_key(&m) {
            return;
        }
        let lams = enumerate_partitions(m, self.n_vars);
        let k = lams.len();
        // matrix[nu][kappa]: coefficient of m_kappa in D m_nu.
        // Reverse-lexicographic enumeration refines dominance, so the matrix
        // is triangular with respect to list position.
        let mut matrix = vec![vec![BigRational::zero(); k]; k];
        for (ni, nu) in lams.iter().enumerate() {
            let img = apply_operator(&m_poly(nu, self.n_vars), self.n_vars, &self.alpha);
            for (ki, kappa) in lams.iter().enumerate() {
                let rep = kappa.padded(self.n_vars);
                if let Some(v) = img.get(&rep) {
                    matrix[ni][ki] = v.clone();
                }
            }
            // consistency: the image must be symmetric, i.e. constant on orbits
            debug_assert!({
                img.iter().all(|(e, v)| {
                    let rep = sorted_desc(e);
                    img.get(&rep).map(|w| w == v).unwrap_or(false)
                })
            });
        }

        // P_λ by triangular back-substitution: c_κ·(d_λ − d_κ) = Σ_{ν} M[ν][κ]·c_ν
        let mut p_coeffs: Vec<Vec<(usize, BigRational)>> = Vec::with_capacity(k);
        for li in 0..k {
            let d_l = matrix[li][li].clone();
            let mut c: Vec<(usize, BigRational)> = vec![(li, BigRational::one())];
            for ki in (li + 1)..k {
                let mut s = BigRational::zero();
                for (ni, cv) in &c {
                    s += &matrix[*ni][ki] * cv;
                }
                if !s.is_zero() {
                    let d_k = matrix[ki][ki].clone();
                    c.push((ki, s / (&d_l - &d_k)));
                }
            }
            p_coeffs.push(c);
        }

        // C-normalization: solve (Σx)^m = Σ_λ γ_λ P_λ from the dominance top.
        let mut gamma: Vec<BigRational> = Vec::with_capacity(k);
        for ki in 0..k {
            let mut g = multinomial(m, &lams[ki]);
            for li in 0..ki {
                if let Some((_, cv)) = p_coeffs[li].iter().find(|(idx, _)| *idx == ki) {
                    g -= &gamma[li] * cv;
                }
            }
            gamma.push(g);
        }

        let c_coeffs: Vec<Vec<(usize, BigRational)>> = p_coeffs
            .into_iter()
            .enumerate()
            .map(|(li, coeffs)| {
                coeffs
                    .into_iter()
                    .map(|(ki, cv)| (ki, cv * &gamma[li]))
                    .collect()
            })
            .collect();
        self.cache.insert(m, (lams, c_coeffs));
    }

    /// Coefficients of C_λ on monomial symmetric functions m_κ.
    pub fn c_in_monomial_basis(&mut self, lambda: &Partition) -> Vec<(Partition, BigRational)> {
        let m = lambda.weight();
        self.ensure_weight(m);
        let (lams, coeffs) = &self.cache[&m];
        let li = lams
            .iter()
            .position(|l| l == lambda)
            .expect("partition must have at most n_vars parts");
        coeffs[li]
            .iter()
            .map(|(ki, v)| (lams[*ki].clone(), v.clone()))
            .collect()
    }

    /// Exact evaluation of C_λ^α at a rational point.
    pub fn eval(&mut self, lambda: &Partition, x: &[BigRational]) -> BigRational {
        assert_eq!(x.len(), self.n_vars);
        let expansion = self.c_in_monomial_basis(lambda);
        let mut total = BigRational::zero();
        for (kappa, coeff) in &expansion {
            let mut msum = BigRational::zero();
            for e in orbit(kappa, self.n_vars) {
                let mut term = BigRational::one();
                for (ei, xi) in e.iter().zip(x) {
                    for _ in 0..*ei {
                        term *= xi;
                    }
                }
                msum += term;
            }
            total += coeff * msum;
        }
        total
    }

    pub fn eval_f64(&mut self, lambda: &Partition, x: &[BigRational]) -> f64 {
        self.eval(lambda, x).to_f64().expect("rational fits in f64")
    }

    /// Full monomial expansion of C_λ as JSON:
    /// an array of {"exponents": [...], "numerator": "...", "denominator": "..."}.
    pub fn dump_monomials_json(&mut self, lambda: &Partition) -> String {
        let expansion = self.c_in_monomial_basis(lambda);
        let mut rows = Vec::new();
        for (kappa, coeff) in &expansion {
            for e in orbit(kappa, self.n_vars) {
                rows.push(serde_json::json!({
                    "exponents": e,
                    "numerator": coeff.numer().to_string(),
                    "denominator": coeff.denom().to_string(),
                }));
            }
        }
        serde_json::Value::Array(rows).to_string()
    }
}

/// Exact generalized Pochhammer symbol (μ)_λ^α = ∏_j (μ − (j−1)/α)_{λ_j}.
pub fn gen_pochhammer_exact(
    mu: &BigRational,
    lambda: &Partition,
    alpha: &BigRational,
) -> BigRational {
    let mut r = BigRational::one();
    for (j, &lj) in lambda.parts().iter().enumerate() {
        let base = mu - ratio(j as i64, 1) / alpha;
        for i in 0..lj {
            r *= &base + ratio(i as i64, 1);
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;

    fn rat(n: i64, d: i64) -> BigRational {
        ratio(n, d)
    }

    #[test]
    fn power_sum_identity_holds_exactly() {
        for n_vars in 1..=3usize {
            for (an, ad) in [(1i64, 2i64), (1, 1), (2, 1)] {
                let mut oracle = ExactJack::with_alpha_ratio(n_vars, an, ad);
                let x: Vec<BigRational> =
                    (0..n_vars).map(|i| rat(2 * i as i64 - 1, 3)).collect();
                let s: BigRational = x.iter().sum();
                for m in 0..=6u32 {
                    let mut total = BigRational::zero();
                    for lam in enumerate_partitions(m, n_vars) {
                        total += oracle.eval(&lam, &x);
                    }
                    let mut expect = BigRational::one();
                    for _ in 0..m {
                        expect *= &s;
                    }
                    assert_eq!(total, expect, "n={} alpha={}/{} m={}", n_vars, an, ad, m);
                }
            }
        }
    }

    #[test]
    fn golden_values() {
        let mut oracle = ExactJack::with_alpha_ratio(3, 2, 1);
        let x = vec![rat(1, 1), rat(2, 1), rat(3, 1)];
        let lam = Partition::new(&[2, 1]).unwrap();
        assert_eq!(oracle.eval(&lam, &x), rat(684, 5));

        let mut oracle2 = ExactJack::with_alpha_ratio(3, 1, 2);
        let y = vec![rat(1, 2), rat(-1, 3), rat(2, 1)];
        let lam2 = Partition::new(&[3, 1]).unwrap();
        assert_eq!(oracle2.eval(&lam2, &y), rat(859, 270));
    }

    #[test]
    fn pochhammer_low_weights() {
        // (μ)_(1) = μ, (μ)_(2) = μ(μ+1), (μ)_(1,1) = μ(μ − 1/α)
        let mu = rat(11, 2);
        let alpha = rat(2, 3); // k2 = 3/2
        let one_row = Partition::new(&[1]).unwrap();
        assert_eq!(gen_pochhammer_exact(&mu, &one_row, &alpha), mu.clone());
        let two_row = Partition::new(&[2]).unwrap();
        assert_eq!(
            gen_pochhammer_exact(&mu, &two_row, &alpha),
            &mu * (&mu + rat(1, 1))
        );
        let col = Partition::new(&[1, 1]).unwrap();
        assert_eq!(
            gen_pochhammer_exact(&mu, &col, &alpha),
            &mu * (&mu - rat(3, 2))
        );
    }

    #[test]
    fn monomial_dump_is_valid_json() {
        let mut oracle = ExactJack::with_alpha_ratio(2, 1, 1);
        let lam = Partition::new(&[2]).unwrap();
        let dump = oracle.dump_monomials_json(&lam);
        let parsed: serde_json::Value = serde_json::from_str(&dump).unwrap();
        let rows = parsed.as_array().unwrap();
        // C_(2)^1 over 2 variables: x² + y² + xy  (coefficient of m_(1,1) is 1 at α=1)
        assert_eq!(rows.len(), 3);
        for row in rows {
            assert!(row.get("exponents").is_some());
            assert!(row.get("numerator").is_some());
            assert!(row.get("denominator").is_some());
        }
    }
}
