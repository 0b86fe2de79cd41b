//! The weighted inner product under which the family is orthogonal.
//!
//! On the supported interval `Ω = [-cos(βπ/2), cos(γπ/2)]` with weight
//! `w(x) = 2/(ρ√(1-x²))`, the members satisfy
//!
//! ```text
//! ⟨T_r, T_s⟩ = 0 (r ≠ s),   π (r = s = 0),   π/2 (r = s ≠ 0),
//! ```
//!
//! independent of the parameters. The default quadrature route changes the
//! variable to the window angle, `x = cos(ρθ/2 + γπ/2)`, under which the
//! weight and the Jacobian cancel exactly and the integrand becomes the
//! smooth product `T_r(x(θ))·T_s(x(θ))` on `θ ∈ [0, π]`; Gauss–Legendre then
//! converges spectrally. A direct x-space route is kept as an independent
//! cross-check; it is far less accurate because the integrand has an
//! (integrable) singularity whenever an interval endpoint touches `±1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::functions::BgChebyshev;
use crate::params::ParamPair;
use crate::tol;

/// Evaluation weight `w(x) = 2/(ρ√(1-x²))`, finite only inside `(-1, 1)`.
pub fn weight(params: &ParamPair, x: f64) -> Result<f64> {
    if x.is_nan() || x.abs() >= 1.0 {
        return Err(Error::Domain(format!(
            "weight abscissa {x} must lie strictly inside (-1, 1)"
        )));
    }
    Ok(2.0 / (params.rho_f64() * ((1.0 - x) * (1.0 + x)).sqrt()))
}

/// How an inner product is integrated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadratureRule {
    /// Angle substitution plus Gauss–Legendre on `[0, π]` (default; the
    /// weight cancels and convergence is spectral).
    SubstitutedGaussLegendre,
    /// Direct x-space integration over the clipped supported interval with
    /// endpoint-graded composite Gauss–Legendre panels. Cross-check only:
    /// expect about four correct digits, not ten.
    ClippedXSpace,
}

/// Node budget and route for one inner product.
#[derive(Clone, Copy, Debug)]
pub struct QuadratureSpec {
    /// Gauss–Legendre node count (per panel for the x-space route).
    pub node_count: usize,
    pub rule: QuadratureRule,
}

impl QuadratureSpec {
    /// Default budget for the pair `(r, s)`: `max(64, r + s + 16)` nodes on
    /// the substituted route.
    pub fn default_for(r: u32, s: u32) -> Self {
        QuadratureSpec {
            node_count: 64.max(r as usize + s as usize + 16),
            rule: QuadratureRule::SubstitutedGaussLegendre,
        }
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`, by Newton iteration on the
/// Legendre recurrence. `n ≥ 1`.
pub fn gauss_legendre(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 {
        return Err(Error::domain("quadrature needs at least one node"));
    }
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        // Tricomi-style initial guess for the i-th root (descending order).
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for iter in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
            debug_assert!(iter < 99, "Newton failed to converge for node {i} of {n}");
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = x;
        weights[i] = w;
        nodes[n - 1 - i] = -x;
        weights[n - 1 - i] = w;
    }
    Ok((nodes, weights))
}

/// Value and derivative of the degree-`n` Legendre polynomial via the
/// three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut prev, mut cur) = (1.0, x);
    for k in 1..n {
        let kf = k as f64;
        (prev, cur) = (cur, ((2.0 * kf + 1.0) * x * cur - kf * prev) / (kf + 1.0));
    }
    let d = n as f64 * (x * cur - prev) / (x * x - 1.0);
    (cur, d)
}

/// The inner product `⟨T_r, T_s⟩` for the given pair.
///
/// The substituted route needs `node_count ≥ r + s + 1`; anything smaller
/// cannot resolve the oscillation and is rejected.
pub fn inner_product(r: u32, s: u32, params: &ParamPair, spec: &QuadratureSpec) -> Result<f64> {
    match spec.rule {
        QuadratureRule::SubstitutedGaussLegendre => {
            if spec.node_count < (r + s + 1) as usize {
                return Err(Error::Domain(format!(
                    "{} nodes cannot resolve frequencies r + s = {}; need at least r + s + 1",
                    spec.node_count,
                    r + s
                )));
            }
            let fr = BgChebyshev::new(r, params);
            let fs = BgChebyshev::new(s, params);
            let rho_half = 0.5 * params.rho_f64();
            let phase = params.phase();
            let (nodes, weights) = gauss_legendre(spec.node_count)?;
            let mut sum = 0.0;
            for (t, w) in nodes.iter().zip(&weights) {
                // θ ∈ [0, π]; the weight and dx/dθ cancel exactly.
                let theta = std::f64::consts::FRAC_PI_2 * (t + 1.0);
                let x = (rho_half * theta + phase).cos();
                sum += w * fr.eval(x)? * fs.eval(x)?;
            }
            Ok(sum * std::f64::consts::FRAC_PI_2)
        }
        QuadratureRule::ClippedXSpace => inner_product_x_space(r, s, params, spec.node_count),
    }
}

/// Direct x-space route: integrate `T_r·T_s·w` over the supported interval
/// clipped inward by [`tol::XSPACE_CLIP`], on composite Gauss–Legendre
/// panels graded geometrically toward both ends (where the integrand can be
/// singular).
fn inner_product_x_space(
    r: u32,
    s: u32,
    params: &ParamPair,
    nodes_per_panel: usize,
) -> Result<f64> {
    let fr = BgChebyshev::new(r, params);
    let fs = BgChebyshev::new(s, params);
    let window = params.supported_interval();
    let a = window.lo + tol::XSPACE_CLIP;
    let b = window.hi - tol::XSPACE_CLIP;
    if a.is_nan() || b.is_nan() || a >= b {
        return Err(Error::domain(
            "supported interval is too short to integrate",
        ));
    }
    let (gl_nodes, gl_weights) = gauss_legendre(nodes_per_panel.max(8))?;

    // Panel edges: geometric grading from each end toward the midpoint.
    const LEVELS: usize = 28;
    let mid = 0.5 * (a + b);
    let mut edges = Vec::with_capacity(2 * LEVELS + 1);
    edges.push(a);
    for k in (1..LEVELS).rev() {
        edges.push(a + (mid - a) * 0.5f64.powi(k as i32));
    }
    edges.push(mid);
    for k in 1..LEVELS {
        edges.push(mid + (b - mid) * (1.0 - 0.5f64.powi(k as i32)));
    }
    edges.push(b);

    let mut sum = 0.0;
    for pair in edges.windows(2) {
        let (lo, hi) = (pair[0], pair[1]);
        let half = 0.5 * (hi - lo);
        let center = 0.5 * (hi + lo);
        for (t, w) in gl_nodes.iter().zip(&gl_weights) {
            let x = center + half * t;
            sum += w * half * fr.eval(x)? * fs.eval(x)? * weight(params, x)?;
        }
    }
    Ok(sum)
}

/// Symmetric matrix of inner products for indices `0..=max_index`.
#[derive(Clone, Debug, Serialize)]
pub struct GramMatrix {
    pub max_index: u32,
    /// Rows `r = 0..=max_index`, each row the entries `s = 0..=max_index`.
    pub entries: Vec<Vec<f64>>,
}

impl GramMatrix {
    pub fn get(&self, r: usize, s: usize) -> f64 {
        self.entries[r][s]
    }

    /// Row-major CSV in round-trip-exact decimal form.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(|&v| crate::io::fmt_f64(v)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

/// Assembles the Gram matrix, computing each entry once and mirroring.
#[allow(clippy::needless_range_loop)] // the `[r][s]`/`[s][r]` mirror needs both indices
pub fn gram_matrix(
    max_index: u32,
    params: &ParamPair,
    spec: &QuadratureSpec,
) -> Result<GramMatrix> {
    let dim = max_index as usize + 1;
    let mut entries = vec![vec![0.0; dim]; dim];
    for r in 0..dim {
        for s in r..dim {
            let v = inner_product(r as u32, s as u32, params, spec)?;
            entries[r][s] = v;
            entries[s][r] = v;
        }
    }
    Ok(GramMatrix { max_index, entries })
}
