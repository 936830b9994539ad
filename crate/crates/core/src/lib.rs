//! Dunkl-type Bessel functions of type A and B via Jack-polynomial
//! hypergeometric series, and a desk-scale numerical verification harness for
//! their large-parameter limit relation
//!
//!   J_B^{(k₁,k₂)}(2√μ·x, iy) → J_A^{k₂}(−x², y²),   μ = k₁ + (N−1)k₂ + 1/2,
//!
//! including its O(1/μ) error bounds, the lemma-level kernel and Pochhammer
//! estimates behind them, and closed-form cross-check oracles.
//!
//! Module map:
//! * [`partitions`] — bounded-part integer partitions, the index set of every series
//! * [`jack`] — Jack polynomials C_λ^α (fast path + exact-rational oracle)
//! * [`hypergeo`] — generalized Pochhammer symbols, ₀F₀ᵅ/₀F₁ᵅ series, tail bounds
//! * [`bessel`] — the public Bessel surface: j_α, type A, type B, matrix-cone
//! * [`verify`] — sweeps, ratio checks, convergence-order fits, reports

pub mod error;
pub mod partitions;
pub mod jack;
pub mod hypergeo;
pub mod bessel;
pub mod verify;

pub use error::{Error, Result};
pub use hypergeo::{SeriesPolicy, SeriesResult};
pub use jack::{EvalVector, JackContext, JackParameter};
pub use partitions::Partition;
