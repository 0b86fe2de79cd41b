//! Plot-ready data bundles behind the CLI `figures` command.
//!
//! Each figure id maps to one or more CSV files: function/companion curves
//! sampled on 1001 points with their node-set overlays (ids 1–3), Lebesgue
//! function curves and parameter sweeps for the one-sided trimming (ids 4–5)
//! and for the symmetric trimming (ids 6–7). The module emits strings; the
//! CLI decides where they land. Output is deterministic, so regenerated
//! files are byte-identical.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::functions::{lobatto_companion, BgChebyshev};
use crate::io::fmt_f64;
use crate::lebesgue::{
    beta_bar_points, default_grid_size, delta_bar_points, lebesgue_constant, sweep, sweep_to_csv,
    BarycentricWeights, SweepRule,
};
use crate::params::{ParamPair, Rational};
use crate::points::PointSet;

/// Identifier of one reproducible data bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FigureId {
    /// Function + companion curves with node overlays, both panels:
    /// n=4 with (1/3, 1/3) and n=5 with (3/4, 1/5).
    Fig1,
    /// Same layout for the one-sided pairs n=5, (1/2, 0) and n=5, (0, 1/2).
    Fig2,
    /// Same layout for n=6, (4/5, 0) and its mirror n=6, (0, 4/5).
    Fig3,
    /// Lebesgue function curves of the n-point `beta-bar` family, n = 5, 6, 7.
    Fig4Left,
    /// Lebesgue constants over the grid β = j/(10n), n = 5..40, j = 0..40.
    Fig4Right,
    /// Λ of the 40-point one-sided family, β on 401 points of [0, 1/40].
    Fig5Left,
    /// Λ of the 40-point one-sided family, β on 401 points of [1/40, 4/40].
    Fig5Right,
    /// Lebesgue function curves of the n-point `delta-bar` family, n = 5, 6, 7.
    Fig6Left,
    /// Lebesgue constants over the grid δ = j/(10(n+1)), n = 5..40, j = 0..40.
    Fig6Right,
    /// Λ of the 40-point symmetric family, δ on 401 points of [0, 1/41].
    Fig7Left,
    /// Λ of the 40-point symmetric family, δ on 401 points of [1/41, 4/41].
    Fig7Right,
}

impl FigureId {
    pub const ALL: [FigureId; 11] = [
        FigureId::Fig1,
        FigureId::Fig2,
        FigureId::Fig3,
        FigureId::Fig4Left,
        FigureId::Fig4Right,
        FigureId::Fig5Left,
        FigureId::Fig5Right,
        FigureId::Fig6Left,
        FigureId::Fig6Right,
        FigureId::Fig7Left,
        FigureId::Fig7Right,
    ];

    pub fn token(self) -> &'static str {
        match self {
            FigureId::Fig1 => "1",
            FigureId::Fig2 => "2",
            FigureId::Fig3 => "3",
            FigureId::Fig4Left => "4-left",
            FigureId::Fig4Right => "4-right",
            FigureId::Fig5Left => "5-left",
            FigureId::Fig5Right => "5-right",
            FigureId::Fig6Left => "6-left",
            FigureId::Fig6Right => "6-right",
            FigureId::Fig7Left => "7-left",
            FigureId::Fig7Right => "7-right",
        }
    }
}

impl std::fmt::Display for FigureId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

impl serde::Serialize for FigureId {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.token())
    }
}

impl<'de> serde::Deserialize<'de> for FigureId {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for FigureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FigureId::ALL
            .iter()
            .copied()
            .find(|id| id.token() == s.trim())
            .ok_or_else(|| {
                let tokens: Vec<&str> = FigureId::ALL.iter().map(|id| id.token()).collect();
                Error::Parse(format!(
                    "unknown figure id '{s}'; expected one of {}",
                    tokens.join(", ")
                ))
            })
    }
}

/// One emitted artifact: a file name and its CSV contents.
#[derive(Clone, Debug)]
pub struct FigureFile {
    pub name: String,
    pub contents: String,
}

/// Number of abscissae used for curve sampling.
const CURVE_SAMPLES: usize = 1001;
/// Number of parameter values in the fine Λ-vs-parameter panels.
const PARAM_SAMPLES: usize = 401;

/// Builds the data files behind one figure id.
pub fn figure_data(id: FigureId) -> Result<Vec<FigureFile>> {
    match id {
        FigureId::Fig1 => two_panels(
            function_panel("fig1-left", 4, "1/3", "1/3")?,
            function_panel("fig1-right", 5, "3/4", "1/5")?,
        ),
        FigureId::Fig2 => two_panels(
            function_panel("fig2-left", 5, "1/2", "0")?,
            function_panel("fig2-right", 5, "0", "1/2")?,
        ),
        FigureId::Fig3 => two_panels(
            function_panel("fig3-left", 6, "4/5", "0")?,
            function_panel("fig3-right", 6, "0", "4/5")?,
        ),
        FigureId::Fig4Left => Ok(vec![FigureFile {
            name: "fig4-left.csv".into(),
            contents: lambda_curves(&[5, 6, 7], beta_bar_points)?,
        }]),
        FigureId::Fig4Right => Ok(vec![FigureFile {
            name: "fig4-right.csv".into(),
            contents: sweep_to_csv(&sweep(SweepRule::Beta, 5, 40, 0, 40)?),
        }]),
        FigureId::Fig5Left => Ok(vec![FigureFile {
            name: "fig5-left.csv".into(),
            contents: lambda_vs_param(40, "beta", 16_000, 0, 1, false, PARAM_SAMPLES)?,
        }]),
        FigureId::Fig5Right => Ok(vec![FigureFile {
            name: "fig5-right.csv".into(),
            contents: lambda_vs_param(40, "beta", 16_000, 400, 3, false, PARAM_SAMPLES)?,
        }]),
        FigureId::Fig6Left => Ok(vec![FigureFile {
            name: "fig6-left.csv".into(),
            contents: lambda_curves(&[5, 6, 7], delta_bar_points)?,
        }]),
        FigureId::Fig6Right => Ok(vec![FigureFile {
            name: "fig6-right.csv".into(),
            contents: sweep_to_csv(&sweep(SweepRule::Delta, 5, 40, 0, 40)?),
        }]),
        FigureId::Fig7Left => Ok(vec![FigureFile {
            name: "fig7-left.csv".into(),
            contents: lambda_vs_param(40, "delta", 16_400, 0, 1, true, PARAM_SAMPLES)?,
        }]),
        FigureId::Fig7Right => Ok(vec![FigureFile {
            name: "fig7-right.csv".into(),
            contents: lambda_vs_param(40, "delta", 16_400, 400, 3, true, PARAM_SAMPLES)?,
        }]),
    }
}

fn two_panels(mut left: Vec<FigureFile>, right: Vec<FigureFile>) -> Result<Vec<FigureFile>> {
    left.extend(right);
    Ok(left)
}

/// One function panel: the degree-`n` function and its companion sampled on
/// [-1, 1], plus the `n` interior nodes and the `n+1`-point endpoint family.
fn function_panel(prefix: &str, n: u32, beta: &str, gamma: &str) -> Result<Vec<FigureFile>> {
    let params = ParamPair::new(beta.parse()?, gamma.parse()?)?;
    let f = BgChebyshev::new(n, &params);
    let mut curves = String::from("x,t,tbar\n");
    for k in 0..CURVE_SAMPLES {
        let x = -1.0 + 2.0 * k as f64 / (CURVE_SAMPLES - 1) as f64;
        curves.push_str(&format!(
            "{},{},{}\n",
            fmt_f64(x),
            fmt_f64(f.eval(x)?),
            fmt_f64(lobatto_companion(n, &params, x)?)
        ));
    }
    let zeros = PointSet::first_kind(n as usize, &params)?;
    let endpoint_family = PointSet::lobatto(n as usize + 1, &params)?;
    Ok(vec![
        FigureFile {
            name: format!("{prefix}-curves.csv"),
            contents: curves,
        },
        FigureFile {
            name: format!("{prefix}-zeros.csv"),
            contents: zeros.to_csv(),
        },
        FigureFile {
            name: format!("{prefix}-endpoint-family.csv"),
            contents: endpoint_family.to_csv(),
        },
    ])
}

/// Lebesgue function curves of one node family at several sizes, sampled on
/// a shared 1001-point grid of [-1, 1]. Columns: `x,lambda_n{N}…`.
fn lambda_curves(ns: &[usize], family: impl Fn(usize) -> Result<PointSet>) -> Result<String> {
    let weights = ns
        .iter()
        .map(|&n| BarycentricWeights::new(&family(n)?))
        .collect::<Result<Vec<_>>>()?;
    let mut out = String::from("x");
    for n in ns {
        out.push_str(&format!(",lambda_n{n}"));
    }
    out.push('\n');
    for k in 0..CURVE_SAMPLES {
        let x = -1.0 + 2.0 * k as f64 / (CURVE_SAMPLES - 1) as f64;
        out.push_str(&fmt_f64(x));
        for bw in &weights {
            out.push_str(&format!(",{}", fmt_f64(bw.lebesgue_at(x)?)));
        }
        out.push('\n');
    }
    Ok(out)
}

/// Λ of the `n`-point family while one exact rational parameter walks the
/// arithmetic progression `(start + step·i)/denominator`, `i = 0..samples`.
/// `symmetric` trims both ends by the parameter; otherwise only the left.
fn lambda_vs_param(
    n: usize,
    param_name: &str,
    denominator: i64,
    start: i64,
    step: i64,
    symmetric: bool,
    samples: usize,
) -> Result<String> {
    let grid = default_grid_size(n);
    let rows = (0..samples)
        .into_par_iter()
        .map(|i| {
            let value = Rational::new(start + step * i as i64, denominator)?;
            let params = if symmetric {
                ParamPair::new(value.clone(), value.clone())?
            } else {
                ParamPair::new(value.clone(), Rational::zero())?
            };
            let points = PointSet::lobatto(n, &params)?;
            let report = lebesgue_constant(&points, grid)?;
            Ok(format!(
                "{},{}\n",
                fmt_f64(value.to_f64()),
                fmt_f64(report.constant)
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = format!("{param_name},lebesgue_constant\n");
    for row in rows {
        out.push_str(&row);
    }
    Ok(out)
}
