//! Lebesgue functions and constants of the node families, plus the
//! parameter sweeps and empirical optimal-parameter searches built on them.
//!
//! Interpolation quality is measured through the barycentric form: with
//! weights `w_i = 1/∏_{j≠i}(x_i − x_j)` (rescaled so the largest magnitude
//! is 1), the Lebesgue function is
//!
//! ```text
//! λ(x) = Σ|w_i/(x − x_i)|  /  |Σ w_i/(x − x_i)|,
//! ```
//!
//! exactly 1 at the nodes, and the Lebesgue constant `Λ` is its maximum over
//! `[-1, 1]`. `Λ` is located by a uniform grid (endpoints always included)
//! followed by golden-section refinement inside the bracketing cells.
//!
//! Two one-parameter families recur throughout: `beta-bar`, the `n`-point
//! set with `β = 2/n, γ = 0` (the classical `n+1`-point endpoint family with
//! the left endpoint dropped), and `delta-bar`, the `n`-point set with
//! `β = γ = 2/(n+1)` (the classical family with both endpoints dropped).
//! For `beta-bar`, `λ(-1) = 2n - 1` exactly; for `delta-bar`, `Λ = n`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::{ParamPair, ParamValue, Rational};
use crate::points::{clamp_unit, PointKind, PointSet};
use crate::tol;

/// Barycentric weights of a node set, rescaled to unit maximum magnitude.
#[derive(Clone, Debug)]
pub struct BarycentricWeights {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl BarycentricWeights {
    pub fn new(set: &PointSet) -> Result<Self> {
        Self::from_abscissae(set.abscissae())
    }

    /// Direct product form; adequate for a few hundred nodes, which the
    /// rescaling then keeps well inside the exponent range.
    pub fn from_abscissae(nodes: &[f64]) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::domain("barycentric weights need at least one node"));
        }
        let mut weights = Vec::with_capacity(nodes.len());
        for (i, &xi) in nodes.iter().enumerate() {
            let mut prod = 1.0;
            for (j, &xj) in nodes.iter().enumerate() {
                if i == j {
                    continue;
                }
                let gap = xi - xj;
                if gap.abs() < tol::DEGENERATE_NODE_GAP {
                    return Err(Error::DegenerateNodes(format!(
                        "nodes {j} and {i} coincide ({xj} vs {xi})"
                    )));
                }
                prod *= gap;
            }
            weights.push(1.0 / prod);
        }
        let scale = weights.iter().fold(0.0f64, |m, w| m.max(w.abs()));
        for w in &mut weights {
            *w /= scale;
        }
        Ok(BarycentricWeights {
            nodes: nodes.to_vec(),
            weights,
        })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// The Lebesgue function at `x`; exactly 1 when `x` sits on a node.
    pub fn lebesgue_at(&self, x: f64) -> Result<f64> {
        let x = clamp_unit(x, "evaluation abscissa")?;
        let mut abs_sum = 0.0;
        let mut sum = 0.0;
        for (&xi, &wi) in self.nodes.iter().zip(&self.weights) {
            if (x - xi).abs() < tol::NODE_COINCIDENCE * x.abs().max(1.0) {
                return Ok(1.0);
            }
            let term = wi / (x - xi);
            abs_sum += term.abs();
            sum += term;
        }
        Ok(abs_sum / sum.abs())
    }
}

/// Convenience form of [`BarycentricWeights::lebesgue_at`] for one-off use.
pub fn lebesgue_function(nodes: &PointSet, x: f64) -> Result<f64> {
    BarycentricWeights::new(nodes)?.lebesgue_at(x)
}

/// Identifying metadata of the node set a report was computed from.
#[derive(Clone, Debug, Serialize)]
pub struct NodeSetSummary {
    pub kind: PointKind,
    pub count: usize,
    pub beta: ParamValue,
    pub gamma: ParamValue,
}

impl From<&PointSet> for NodeSetSummary {
    fn from(set: &PointSet) -> Self {
        NodeSetSummary {
            kind: set.kind(),
            count: set.len(),
            beta: set.params().beta().clone(),
            gamma: set.params().gamma().clone(),
        }
    }
}

/// Where and how large the maximum of the Lebesgue function is.
#[derive(Clone, Debug, Serialize)]
pub struct LebesgueReport {
    pub constant: f64,
    pub argmax: f64,
    /// Size of the uniform scan grid (refinement then works locally).
    pub grid_size: usize,
    /// Whether the reported maximum came from the refinement stage rather
    /// than the grid scan itself.
    pub refined: bool,
    pub nodes: NodeSetSummary,
}

/// Default scan resolution for a node set of the given size.
pub fn default_grid_size(count: usize) -> usize {
    100 * count + 1
}

/// Locates the Lebesgue constant: uniform scan over `[-1, 1]` (grid of
/// `grid_size ≥ 10·count` points, endpoints included) plus golden-section
/// refinement in the cells bracketing the best grid point.
pub fn lebesgue_constant(nodes: &PointSet, grid_size: usize) -> Result<LebesgueReport> {
    let count = nodes.len();
    if grid_size < 10 * count {
        return Err(Error::Domain(format!(
            "grid of {grid_size} points is too coarse for {count} nodes; need at least {}",
            10 * count
        )));
    }
    let bw = BarycentricWeights::new(nodes)?;
    let last = (grid_size - 1) as f64;
    let grid_x = |k: usize| -1.0 + 2.0 * k as f64 / last;

    let mut best_k = 0;
    let mut best_v = f64::NEG_INFINITY;
    for k in 0..grid_size {
        let v = bw.lebesgue_at(grid_x(k))?;
        if v > best_v {
            best_v = v;
            best_k = k;
        }
    }

    let lo = grid_x(best_k.saturating_sub(1));
    let hi = grid_x((best_k + 1).min(grid_size - 1));
    let lambda = |x: f64| {
        bw.lebesgue_at(x)
            .expect("refinement bracket stays inside [-1, 1]")
    };
    let (x_ref, neg_v) = golden_section_min(|x| -lambda(x), lo, hi, tol::REFINE_ABSCISSA);
    let v_ref = -neg_v;

    let (constant, argmax, refined) = if v_ref > best_v {
        (v_ref, x_ref, true)
    } else {
        (best_v, grid_x(best_k), false)
    };
    Ok(LebesgueReport {
        constant,
        argmax,
        grid_size,
        refined,
        nodes: NodeSetSummary::from(nodes),
    })
}

/// Golden-section minimization on `[a, b]` down to abscissa width `tol`.
/// Returns the midpoint of the final bracket and its value. The objective
/// is assumed unimodal on the bracket; on a non-unimodal bracket the result
/// is still a local minimum candidate (callers guard with a pre-scan).
pub(crate) fn golden_section_min(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let (mut a, mut b) = (a, b);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    let mut iterations = 0;
    while (b - a) > tol && iterations < 500 {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
        iterations += 1;
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// `β = 2/n`: the `n`-point `beta-bar` trimming, `n ≥ 2`.
pub fn beta_bar(n: usize) -> Result<Rational> {
    if n < 2 {
        return Err(Error::domain("beta-bar family needs n >= 2"));
    }
    Rational::new(2, n as i64)
}

/// `δ = 2/(n+1)`: the `n`-point `delta-bar` trimming, `n ≥ 2`.
pub fn delta_bar(n: usize) -> Result<Rational> {
    if n < 2 {
        return Err(Error::domain("delta-bar family needs n >= 2"));
    }
    Rational::new(2, n as i64 + 1)
}

/// The `n`-point set with `β = 2/n, γ = 0`: the classical `n+1`-point
/// endpoint-including family with `-1` dropped.
pub fn beta_bar_points(n: usize) -> Result<PointSet> {
    let params = ParamPair::new(beta_bar(n)?, Rational::zero())?;
    PointSet::lobatto(n, &params)
}

/// The `n`-point set with `β = γ = 2/(n+1)`: the classical `n+2`-point
/// family with both `±1` dropped.
pub fn delta_bar_points(n: usize) -> Result<PointSet> {
    let d = delta_bar(n)?;
    let params = ParamPair::new(d.clone(), d)?;
    PointSet::lobatto(n, &params)
}

/// Exact value `2n - 1` of the Lebesgue function of the `beta-bar` family
/// at `x = -1`.
pub fn lambda_at_minus_one_closed(n: usize) -> f64 {
    (2 * n - 1) as f64
}

/// Perturbation threshold `4 / (π n² (2 + π ln(n+1)))`: trimming both ends
/// by any `δ` below it keeps the Lebesgue constant of the `n+1`-point family
/// within the logarithmic growth regime of the classical one.
pub fn log_growth_threshold(n: usize) -> Result<f64> {
    if n < 1 {
        return Err(Error::domain("threshold needs n >= 1"));
    }
    let nf = n as f64;
    Ok(4.0 / (std::f64::consts::PI * nf * nf * (2.0 + std::f64::consts::PI * (nf + 1.0).ln())))
}

/// Which one-parameter trimming a sweep varies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepRule {
    /// `β = j/(10n)`, `γ = 0` on the `n`-point family.
    Beta,
    /// `β = γ = j/(10(n+1))` on the `n`-point family.
    Delta,
}

/// One sweep entry: the Lebesgue constant of an `n`-point family at one
/// parameter value.
#[derive(Clone, Debug, Serialize)]
pub struct SweepCell {
    pub n: usize,
    pub j: usize,
    pub param_value: f64,
    pub lebesgue_constant: f64,
    pub argmax: f64,
}

/// Evaluates the sweep over the inclusive ranges `n_lo..=n_hi`,
/// `j_lo..=j_hi`. Cells are independent and computed in parallel; the
/// result is ordered by `(n, j)`.
pub fn sweep(
    rule: SweepRule,
    n_lo: usize,
    n_hi: usize,
    j_lo: usize,
    j_hi: usize,
) -> Result<Vec<SweepCell>> {
    if n_lo < 2 || n_lo > n_hi || j_lo > j_hi {
        return Err(Error::domain(
            "sweep needs 2 <= n_lo <= n_hi and j_lo <= j_hi",
        ));
    }
    let cells: Vec<(usize, usize)> = (n_lo..=n_hi)
        .flat_map(|n| (j_lo..=j_hi).map(move |j| (n, j)))
        .collect();
    cells
        .into_par_iter()
        .map(|(n, j)| {
            let denominator = match rule {
                SweepRule::Beta => 10 * n,
                SweepRule::Delta => 10 * (n + 1),
            };
            let value = Rational::new(j as i64, denominator as i64)?;
            let params = match rule {
                SweepRule::Beta => ParamPair::new(value.clone(), Rational::zero())?,
                SweepRule::Delta => ParamPair::new(value.clone(), value.clone())?,
            };
            let points = PointSet::lobatto(n, &params)?;
            let report = lebesgue_constant(&points, default_grid_size(n))?;
            Ok(SweepCell {
                n,
                j,
                param_value: value.to_f64(),
                lebesgue_constant: report.constant,
                argmax: report.argmax,
            })
        })
        .collect()
}

/// CSV table of sweep cells, one row per cell.
pub fn sweep_to_csv(cells: &[SweepCell]) -> String {
    let mut out = String::from("n,param_value,lebesgue_constant,argmax\n");
    for c in cells {
        out.push_str(&format!(
            "{},{},{},{}\n",
            c.n,
            crate::io::fmt_f64(c.param_value),
            crate::io::fmt_f64(c.lebesgue_constant),
            crate::io::fmt_f64(c.argmax)
        ));
    }
    out
}

/// Minimizes `objective` over `[0, hi]`: a 50-point pre-scan locates the
/// best cell (and guards against gross non-unimodality), golden-section
/// refines inside it, and the better of the two candidates wins.
fn search_min(hi: f64, tol_x: f64, objective: impl Fn(f64) -> Result<f64>) -> Result<(f64, f64)> {
    if tol_x.is_nan() || tol_x <= 0.0 {
        return Err(Error::domain("search tolerance must be positive"));
    }
    const PRESCAN: usize = 50;
    let step = hi / (PRESCAN - 1) as f64;
    let mut best_k = 0;
    let mut best_v = f64::INFINITY;
    let mut scan = Vec::with_capacity(PRESCAN);
    for k in 0..PRESCAN {
        let x = step * k as f64;
        let v = objective(x)?;
        scan.push(x);
        if v < best_v {
            best_v = v;
            best_k = k;
        }
    }
    let lo = scan[best_k.saturating_sub(1)];
    let hi_bracket = scan[(best_k + 1).min(PRESCAN - 1)];
    let (x_ref, v_ref) = golden_section_min(
        |x| objective(x).expect("search bracket stays inside the valid domain"),
        lo,
        hi_bracket,
        tol_x.max(1e-12),
    );
    if v_ref < best_v {
        Ok((x_ref, v_ref))
    } else {
        Ok((scan[best_k], best_v))
    }
}

/// Empirical minimizer of `Λ` for the one-sided trimming `(β, 0)` of the
/// `n`-point family, searched over `β ∈ [0, 1/n]` to abscissa tolerance
/// `tol_x`. Returns `(β*, Λ(β*))`.
pub fn find_optimal_beta(n: usize, tol_x: f64) -> Result<(f64, f64)> {
    if n < 2 {
        return Err(Error::domain("optimal-beta search needs n >= 2"));
    }
    let grid = default_grid_size(n);
    search_min(1.0 / n as f64, tol_x, |beta| {
        let params = ParamPair::from_f64(beta, 0.0)?;
        let points = PointSet::lobatto(n, &params)?;
        Ok(lebesgue_constant(&points, grid)?.constant)
    })
}

/// Empirical minimizer of `Λ` for the symmetric trimming `(δ, δ)` of the
/// `n`-point family, searched over `δ ∈ [0, 1/(n+1)]`.
pub fn find_optimal_delta(n: usize, tol_x: f64) -> Result<(f64, f64)> {
    if n < 2 {
        return Err(Error::domain("optimal-delta search needs n >= 2"));
    }
    let grid = default_grid_size(n);
    search_min(1.0 / (n as f64 + 1.0), tol_x, |delta| {
        let params = ParamPair::from_f64(delta, delta)?;
        let points = PointSet::lobatto(n, &params)?;
        Ok(lebesgue_constant(&points, grid)?.constant)
    })
}

/// One row of the left-endpoint growth report for the `beta-bar` family.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub lebesgue_constant: f64,
    pub argmax: f64,
    pub closed_form: f64,
    /// Maximum located at the left endpoint (within [`tol::CONJECTURE_ARGMAX`]).
    pub argmax_at_left_end: bool,
    /// Constant equal to `2n - 1` within [`tol::CONJECTURE_VALUE_REL`] relatively.
    pub value_matches: bool,
}

impl ConjectureRow {
    pub fn holds(&self) -> bool {
        self.argmax_at_left_end && self.value_matches
    }
}

/// Checks, for each `n` in the range, whether the Lebesgue constant of the
/// `beta-bar` family is attained at `x = -1` with value `2n - 1`. This is
/// observed behavior, not a proved guarantee, so the outcome is reported
/// per row rather than asserted.
pub fn left_end_growth_report(n_lo: usize, n_hi: usize) -> Result<Vec<ConjectureRow>> {
    if n_lo < 2 || n_lo > n_hi {
        return Err(Error::domain("report needs 2 <= n_lo <= n_hi"));
    }
    (n_lo..=n_hi)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| {
            let points = beta_bar_points(n)?;
            let report = lebesgue_constant(&points, default_grid_size(n))?;
            let closed_form = lambda_at_minus_one_closed(n);
            Ok(ConjectureRow {
                n,
                lebesgue_constant: report.constant,
                argmax: report.argmax,
                closed_form,
                argmax_at_left_end: (report.argmax + 1.0).abs() <= tol::CONJECTURE_ARGMAX,
                value_matches: (report.constant - closed_form).abs()
                    <= tol::CONJECTURE_VALUE_REL * closed_form,
            })
        })
        .collect()
}

/// CSV table of the left-endpoint growth report.
pub fn growth_report_to_csv(rows: &[ConjectureRow]) -> String {
    let mut out = String::from("n,lebesgue_constant,argmax,closed_form,holds\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n,
            crate::io::fmt_f64(r.lebesgue_constant),
            crate::io::fmt_f64(r.argmax),
            crate::io::fmt_f64(r.closed_form),
            r.holds()
        ));
    }
    out
}

/// True when `values` decreases to a single trough and increases after it,
/// ignoring consecutive differences smaller than `noise`.
pub fn is_unimodal(values: &[f64], noise: f64) -> bool {
    let mut rising = false;
    for w in values.windows(2) {
        let d = w[1] - w[0];
        if d.abs() <= noise {
            continue;
        }
        if d > 0.0 {
            rising = true;
        } else if rising {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(beta: &str, gamma: &str) -> ParamPair {
        ParamPair::new(beta.parse().unwrap(), gamma.parse().unwrap()).unwrap()
    }

    /// Slow-but-obvious oracle: Lebesgue function as a sum of Lagrange
    /// basis magnitudes evaluated from the product formula.
    fn naive_lambda(nodes: &[f64], x: f64) -> f64 {
        let mut sum = 0.0;
        for i in 0..nodes.len() {
            let mut li = 1.0;
            for j in 0..nodes.len() {
                if i != j {
                    li *= (x - nodes[j]) / (nodes[i] - nodes[j]);
                }
            }
            sum += li.abs();
        }
        sum
    }

    #[test]
    fn weights_match_hand_values() {
        let bw = BarycentricWeights::from_abscissae(&[1.0, -1.0]).unwrap();
        assert_eq!(bw.weights(), &[0.5 / 0.5, -1.0]);

        // {1, 0, -1}: raw weights {1/2, -1, 1/2} after rescaling.
        let bw = BarycentricWeights::from_abscissae(&[1.0, 0.0, -1.0]).unwrap();
        assert_eq!(bw.weights(), &[0.5, -1.0, 0.5]);

        // Classical 5-point endpoint family: {1/2, -1, 1, -1, 1/2}.
        let u5 = PointSet::lobatto(5, &ParamPair::classical()).unwrap();
        let bw = BarycentricWeights::new(&u5).unwrap();
        let expected = [0.5, -1.0, 1.0, -1.0, 0.5];
        for (w, e) in bw.weights().iter().zip(&expected) {
            assert!((w - e).abs() < 1e-12, "{w} vs {e}");
        }
    }

    #[test]
    fn degenerate_nodes_are_rejected() {
        let err = BarycentricWeights::from_abscissae(&[0.5, 0.5 + 1e-16, -0.5]);
        assert!(matches!(err, Err(Error::DegenerateNodes(_))));
        assert!(BarycentricWeights::from_abscissae(&[]).is_err());
    }

    #[test]
    fn lebesgue_function_examples() {
        // Exactly 1 on nodes.
        let set = PointSet::lobatto(5, &pair("1/3", "1/5")).unwrap();
        let bw = BarycentricWeights::new(&set).unwrap();
        for &x in set.abscissae() {
            assert_eq!(bw.lebesgue_at(x).unwrap(), 1.0);
        }

        // Two symmetric nodes: λ(1) = 2.
        let bw = BarycentricWeights::from_abscissae(&[0.5, -0.5]).unwrap();
        assert!((bw.lebesgue_at(1.0).unwrap() - 2.0).abs() < 1e-12);

        // beta-bar family at the dropped endpoint: λ(-1) = 2n - 1.
        let set = beta_bar_points(5).unwrap();
        let v = lebesgue_function(&set, -1.0).unwrap();
        assert!((v - 9.0).abs() < 1e-8, "{v}");
    }

    #[test]
    fn barycentric_agrees_with_naive_oracle() {
        let set = PointSet::lobatto(8, &pair("1/3", "1/5")).unwrap();
        let bw = BarycentricWeights::new(&set).unwrap();
        for k in 0..=100 {
            let x = -1.0 + k as f64 / 50.0;
            let fast = bw.lebesgue_at(x).unwrap();
            let slow = naive_lambda(set.abscissae(), x);
            assert!(
                (fast - slow).abs() < 1e-10 * slow.max(1.0),
                "x={x}: {fast} vs {slow}"
            );
            assert!(fast >= 1.0 - 1e-12);
        }
    }

    #[test]
    fn constants_for_tiny_classical_families() {
        // Two endpoint nodes interpolate linearly: Λ = 1.
        let u2 = PointSet::lobatto(2, &ParamPair::classical()).unwrap();
        let r = lebesgue_constant(&u2, 201).unwrap();
        assert!((r.constant - 1.0).abs() < 1e-10, "{}", r.constant);

        // Fully interior 3-point family: Λ = 3 at ±1.
        let set = delta_bar_points(3).unwrap();
        let r = lebesgue_constant(&set, default_grid_size(3)).unwrap();
        assert!((r.constant - 3.0).abs() < 1e-8, "{}", r.constant);
        assert!((r.argmax.abs() - 1.0).abs() < 1e-8, "{}", r.argmax);
    }

    #[test]
    fn beta_bar_constant_is_linear_growth() {
        let set = beta_bar_points(6).unwrap();
        let r = lebesgue_constant(&set, default_grid_size(6)).unwrap();
        assert!((r.constant - 11.0).abs() < 1e-6 * 11.0, "{}", r.constant);
        assert!((r.argmax + 1.0).abs() < 1e-8, "{}", r.argmax);
    }

    #[test]
    fn grid_must_resolve_the_nodes() {
        let set = PointSet::lobatto(5, &ParamPair::classical()).unwrap();
        assert!(lebesgue_constant(&set, 49).is_err());
        assert!(lebesgue_constant(&set, 50).is_ok());
    }

    #[test]
    fn report_is_self_consistent() {
        let set = PointSet::lobatto(7, &pair("1/4", "1/8")).unwrap();
        let r = lebesgue_constant(&set, default_grid_size(7)).unwrap();
        let bw = BarycentricWeights::new(&set).unwrap();
        let check = bw.lebesgue_at(r.argmax).unwrap();
        assert!(r.constant >= check - 1e-12);
        assert!((r.constant - check).abs() < 1e-9 * r.constant);
        assert_eq!(r.nodes.count, 7);
    }

    #[test]
    fn family_definitions() {
        assert_eq!(beta_bar(5).unwrap(), "2/5".parse().unwrap());
        assert_eq!(delta_bar(4).unwrap(), "2/5".parse().unwrap());
        assert!(beta_bar(1).is_err());

        // beta-bar points are the larger classical family minus -1.
        let set = beta_bar_points(5).unwrap();
        let full = PointSet::lobatto(6, &ParamPair::classical()).unwrap();
        for (a, b) in set.abscissae().iter().zip(&full.abscissae()[..5]) {
            assert!((a - b).abs() < 1e-15);
        }

        // delta-bar points are the larger classical family minus ±1.
        let set = delta_bar_points(4).unwrap();
        let full = PointSet::lobatto(6, &ParamPair::classical()).unwrap();
        for (a, b) in set.abscissae().iter().zip(&full.abscissae()[1..5]) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(lambda_at_minus_one_closed(5), 9.0);
        assert_eq!(lambda_at_minus_one_closed(2), 3.0);

        let t1 = log_growth_threshold(1).unwrap();
        assert!((t1 - 0.304_788).abs() < 1e-5, "{t1}");
        let t10 = log_growth_threshold(10).unwrap();
        assert!((t10 - 1.335_58e-3).abs() < 1e-7, "{t10}");
        assert!(log_growth_threshold(0).is_err());
    }

    #[test]
    fn sweep_covers_the_requested_cells() {
        let cells = sweep(SweepRule::Beta, 5, 6, 0, 3).unwrap();
        assert_eq!(cells.len(), 8);
        assert_eq!((cells[0].n, cells[0].j), (5, 0));
        assert_eq!((cells[7].n, cells[7].j), (6, 3));
        // j = 0 is the untrimmed classical family.
        assert_eq!(cells[0].param_value, 0.0);
        let classical = lebesgue_constant(
            &PointSet::lobatto(5, &ParamPair::classical()).unwrap(),
            default_grid_size(5),
        )
        .unwrap();
        assert!((cells[0].lebesgue_constant - classical.constant).abs() < 1e-12);

        let csv = sweep_to_csv(&cells);
        assert!(csv.starts_with("n,param_value,lebesgue_constant,argmax\n"));
        assert_eq!(csv.trim_end().lines().count(), 9);
        assert!(sweep(SweepRule::Beta, 1, 5, 0, 3).is_err());
    }

    #[test]
    fn optimal_searches_beat_the_classical_choice() {
        for n in [6usize, 10] {
            let classical = lebesgue_constant(
                &PointSet::lobatto(n, &ParamPair::classical()).unwrap(),
                default_grid_size(n),
            )
            .unwrap()
            .constant;

            let (beta_star, lambda_star) = find_optimal_beta(n, 1e-6).unwrap();
            assert!(beta_star >= 0.0 && beta_star <= 1.0 / n as f64);
            assert!(
                lambda_star <= classical + 1e-9,
                "{lambda_star} vs {classical}"
            );

            let (delta_star, lambda_star) = find_optimal_delta(n, 1e-6).unwrap();
            assert!(delta_star >= 0.0 && delta_star <= 1.0 / (n as f64 + 1.0));
            assert!(lambda_star <= classical + 1e-9);
        }
        assert!(find_optimal_beta(6, 0.0).is_err());
    }

    #[test]
    fn growth_report_rows_hold_for_small_n() {
        let rows = left_end_growth_report(2, 8).unwrap();
        assert_eq!(rows.len(), 7);
        for row in &rows {
            assert!(row.holds(), "n = {}: {row:?}", row.n);
        }
        let csv = growth_report_to_csv(&rows);
        assert!(csv.starts_with("n,lebesgue_constant,argmax,closed_form,holds\n"));
    }

    #[test]
    fn unimodality_detector() {
        assert!(is_unimodal(&[5.0, 3.0, 2.0, 2.5, 4.0], 0.0));
        assert!(is_unimodal(&[1.0, 2.0, 3.0], 0.0));
        assert!(is_unimodal(&[3.0, 2.0, 1.0], 0.0));
        assert!(!is_unimodal(&[3.0, 1.0, 2.0, 1.5], 0.0));
        // Noise below the band is ignored.
        assert!(is_unimodal(&[3.0, 1.0, 1.0 + 1e-12, 0.9, 2.0], 1e-9));
    }

    #[test]
    fn golden_section_finds_a_quadratic_minimum() {
        let (x, v) = golden_section_min(|x| (x - 0.3).powi(2) + 1.0, 0.0, 1.0, 1e-10);
        // A quadratic minimum is flat to roundoff within ~sqrt(eps) of the
        // minimizer, so the abscissa is only resolvable to that scale.
        assert!((x - 0.3).abs() < 1e-7, "{x}");
        assert!((v - 1.0).abs() < 1e-12);
    }
}
