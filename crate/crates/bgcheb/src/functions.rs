//! Evaluation of the generalized Chebyshev functions.
//!
//! The degree-`n` member attached to a pair `(β, γ)` is
//!
//! ```text
//! T_n(x) = cos( (2n/ρ) · (arccos x − γπ/2) ),    ρ = 2 − β − γ.
//! ```
//!
//! At `β = γ = 0` this is the classical degree-`n` Chebyshev polynomial.
//! For general parameters it is a transcendental function of `x`, defined on
//! all of `[-1, 1]`, whose equi-oscillation lives on the supported interval
//! `[-cos(βπ/2), cos(γπ/2)]`.

use crate::error::{Error, Result};
use crate::params::{ParamPair, Rational};
use crate::points::clamp_unit;

/// One member of the family, with its angular frequency `2n/ρ` and phase
/// `γπ/2` fixed at construction.
#[derive(Clone, Debug)]
pub struct BgChebyshev {
    n: u32,
    params: ParamPair,
    freq: f64,
    phase: f64,
}

impl BgChebyshev {
    pub fn new(n: u32, params: &ParamPair) -> Self {
        BgChebyshev {
            n,
            params: params.clone(),
            freq: params.frequency(n),
            phase: params.phase(),
        }
    }

    pub fn degree_index(&self) -> u32 {
        self.n
    }

    pub fn params(&self) -> &ParamPair {
        &self.params
    }

    /// Direct evaluation through `arccos`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        let x = clamp_unit(x, "evaluation abscissa")?;
        Ok((self.freq * (x.acos() - self.phase)).cos())
    }

    /// Evaluation by the two-term recurrence
    /// `T_{k+1} = 2·T_1·T_k − T_{k-1}` seeded with `T_0 = 1` and the direct
    /// `T_1`. Agrees with [`BgChebyshev::eval`] up to slow round-off growth
    /// in the degree; exposed as an independent route for cross-checking.
    pub fn eval_recurrence(&self, x: f64) -> Result<f64> {
        let x = clamp_unit(x, "evaluation abscissa")?;
        if self.n == 0 {
            return Ok(1.0);
        }
        let t1 = (self.params.frequency(1) * (x.acos() - self.phase)).cos();
        if self.n == 1 {
            return Ok(t1);
        }
        let (mut prev, mut cur) = (1.0, t1);
        for _ in 2..=self.n {
            (prev, cur) = (cur, 2.0 * t1 * cur - prev);
        }
        Ok(cur)
    }
}

/// The companion function vanishing at the endpoint-including family:
///
/// ```text
/// T̄_{n+1}(x) = √(1-x²) · sin( (2n/ρ) · (arccos x − γπ/2) ),    n ≥ 1,
/// ```
///
/// which is `(ρ/2n)(1-x²) T_n'(x)`. It vanishes at the `n+1` Lobatto-kind
/// points of the pair and additionally at `x = ±1` (for the classical pair
/// the two sets of zeros coincide; otherwise `±1` are extra).
pub fn lobatto_companion(n: u32, params: &ParamPair, x: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::domain("the companion function needs n >= 1"));
    }
    let x = clamp_unit(x, "evaluation abscissa")?;
    let chord = ((1.0 - x) * (1.0 + x)).max(0.0).sqrt();
    Ok(chord * (params.frequency(n) * (x.acos() - params.phase())).sin())
}

/// Both sides of the reflection identity
/// `T_n^{(ν,0)}(x) = (-1)^n · T_n^{(0,ν)}(-x)`:
/// trimming near `-1` is trimming near `+1` in the mirrored variable.
/// The two returned values agree up to round-off.
pub fn symmetry_reflect(n: u32, nu: &Rational, x: f64) -> Result<(f64, f64)> {
    let left_pair = ParamPair::new(nu.clone(), Rational::zero())?;
    let right_pair = ParamPair::new(Rational::zero(), nu.clone())?;
    let left = BgChebyshev::new(n, &left_pair).eval(x)?;
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let right = sign * BgChebyshev::new(n, &right_pair).eval(-x)?;
    Ok((left, right))
}
