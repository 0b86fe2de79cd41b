//! Node families attached to the generalized Chebyshev functions.
//!
//! Every trigonometric family here is the cosine of an arithmetic
//! progression of angles inside the trimmed window `[γπ/2, (2-β)π/2]`, so
//! each set is strictly decreasing. Angles are assembled exactly (as
//! rationals in units of half-turns) and converted to a double once, which
//! keeps abscissae like `cos(π/2) = 0` exact instead of `6.1e-17`.
//!
//! The equispaced families are the same arithmetic progressions taken in the
//! chord variable instead of the angle; the sine map [`kte_map`] carries them
//! onto the trigonometric families.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{ParamPair, ParamValue, Rational};
use crate::tol;

/// `cos(πq)` with the argument reduction done exactly in units of
/// half-turns, so quarter-turn multiples produce exact `0`, `±1`.
pub fn cos_half_turns(q: f64) -> f64 {
    let mut r = q.rem_euclid(2.0);
    if r > 1.0 {
        r = 2.0 - r; // cos(πr) = cos(π(2-r)), subtraction exact here
    }
    let (sign, r) = if r > 0.5 { (-1.0, 1.0 - r) } else { (1.0, r) };
    let v = if r >= 0.25 {
        (std::f64::consts::PI * (0.5 - r)).sin()
    } else {
        (std::f64::consts::PI * r).cos()
    };
    sign * v
}

/// Clamps an abscissa into `[-1, 1]`, forgiving round-off within
/// [`tol::ENDPOINT_CLAMP_BAND`] and rejecting anything farther out.
pub(crate) fn clamp_unit(x: f64, what: &str) -> Result<f64> {
    if x.abs() <= 1.0 {
        Ok(x)
    } else if x.is_finite() && x.abs() <= 1.0 + tol::ENDPOINT_CLAMP_BAND {
        Ok(x.signum())
    } else {
        Err(Error::Domain(format!("{what} = {x} is outside [-1, 1]")))
    }
}

/// Which constructor produced a point set.
///
/// This is provenance metadata: a mapped set (see [`PointSet::map_kte`])
/// keeps the kind of the set it was mapped from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointKind {
    /// Zeros of the degree-`n` member: `cos(ρ(2j-1)π/(4n) + γπ/2)`, `j = 1..n`.
    FirstKind,
    /// Endpoint-including family `cos(ρjπ/(2m) + γπ/2)`, `j = 0..m`,
    /// with `m = count - 1`; its ends are the supported-interval endpoints.
    Lobatto,
    /// Interior critical points of the degree-`n` member (the Lobatto family
    /// without its endpoints).
    Extrema,
    /// Chord-variable analogue of [`PointKind::FirstKind`]:
    /// `1 - γ - ρ(2j-1)/(2n)`, `j = 1..n`.
    EquispacedFirstKind,
    /// Chord-variable analogue of [`PointKind::Lobatto`]:
    /// `1 - γ - ρj/(count-1)`, `j = 0..count-1`.
    EquispacedLobatto,
}

impl PointKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            PointKind::FirstKind => "first-kind",
            PointKind::Lobatto => "lobatto",
            PointKind::Extrema => "extrema",
            PointKind::EquispacedFirstKind => "equispaced-first-kind",
            PointKind::EquispacedLobatto => "equispaced-lobatto",
        }
    }
}

impl std::fmt::Display for PointKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for PointKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        const ALL: [PointKind; 5] = [
            PointKind::FirstKind,
            PointKind::Lobatto,
            PointKind::Extrema,
            PointKind::EquispacedFirstKind,
            PointKind::EquispacedLobatto,
        ];
        ALL.iter()
            .copied()
            .find(|k| k.as_str() == s.trim())
            .ok_or_else(|| {
                let names: Vec<&str> = ALL.iter().map(|k| k.as_str()).collect();
                Error::Parse(format!(
                    "unknown point kind '{s}'; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// A finite, strictly decreasing family of abscissae in `[-1, 1]` together
/// with the parameters and constructor that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSet {
    kind: PointKind,
    params: ParamPair,
    abscissae: Vec<f64>,
}

/// Angle `q = ρ·(num/den) + γ/2` in half-turns, then its cosine. The angle
/// is exact while the parameters are.
fn trig_abscissa(p: &ParamPair, num: i64, den: i64) -> f64 {
    let q = match p.exact_triple() {
        Some((_, gamma, rho)) => {
            let frac = Rational::new(num, den).expect("den > 0 by construction");
            let half = Rational::new(1, 2).expect("static");
            (&(rho * &frac) + &(gamma * &half)).to_f64()
        }
        None => p.rho_f64() * (num as f64) / (den as f64) + 0.5 * p.gamma_f64(),
    };
    cos_half_turns(q)
}

/// Chord-variable abscissa `1 - γ - ρ·(num/den)`, exact while the
/// parameters are.
fn linear_abscissa(p: &ParamPair, num: i64, den: i64) -> f64 {
    match p.exact_triple() {
        Some((_, gamma, rho)) => {
            let frac = Rational::new(num, den).expect("den > 0 by construction");
            (&(&Rational::one() - gamma) - &(rho * &frac)).to_f64()
        }
        None => 1.0 - p.gamma_f64() - p.rho_f64() * (num as f64) / (den as f64),
    }
}

impl PointSet {
    /// Zeros of the degree-`n` member of the family, `n ≥ 1`.
    pub fn first_kind(n: usize, params: &ParamPair) -> Result<Self> {
        if n < 1 {
            return Err(Error::domain("first-kind family needs n >= 1"));
        }
        let den = 4 * n as i64;
        let abscissae = (1..=n as i64)
            .map(|j| trig_abscissa(params, 2 * j - 1, den))
            .collect();
        Ok(PointSet {
            kind: PointKind::FirstKind,
            params: params.clone(),
            abscissae,
        })
    }

    /// Endpoint-including family with `count ≥ 2` points; the first and last
    /// abscissae are the endpoints of the supported interval.
    pub fn lobatto(count: usize, params: &ParamPair) -> Result<Self> {
        if count < 2 {
            return Err(Error::domain("lobatto family needs count >= 2"));
        }
        let m = (count - 1) as i64;
        let abscissae = (0..=m).map(|j| trig_abscissa(params, j, 2 * m)).collect();
        Ok(PointSet {
            kind: PointKind::Lobatto,
            params: params.clone(),
            abscissae,
        })
    }

    /// Interior critical points of the degree-`n` member, `n ≥ 2`
    /// (`n - 1` points).
    pub fn extrema(n: usize, params: &ParamPair) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain("extrema family needs n >= 2"));
        }
        let den = 2 * n as i64;
        let abscissae = (1..n as i64)
            .map(|j| trig_abscissa(params, j, den))
            .collect();
        Ok(PointSet {
            kind: PointKind::Extrema,
            params: params.clone(),
            abscissae,
        })
    }

    /// Chord-variable analogue of [`PointSet::first_kind`], `n ≥ 1`.
    pub fn equispaced_first_kind(n: usize, params: &ParamPair) -> Result<Self> {
        if n < 1 {
            return Err(Error::domain("equispaced first-kind family needs n >= 1"));
        }
        let den = 2 * n as i64;
        let abscissae = (1..=n as i64)
            .map(|j| linear_abscissa(params, 2 * j - 1, den))
            .collect();
        Ok(PointSet {
            kind: PointKind::EquispacedFirstKind,
            params: params.clone(),
            abscissae,
        })
    }

    /// Chord-variable analogue of [`PointSet::lobatto`], `count ≥ 2`.
    pub fn equispaced_lobatto(count: usize, params: &ParamPair) -> Result<Self> {
        if count < 2 {
            return Err(Error::domain("equispaced lobatto family needs count >= 2"));
        }
        let den = (count - 1) as i64;
        let abscissae = (0..count as i64)
            .map(|j| linear_abscissa(params, j, den))
            .collect();
        Ok(PointSet {
            kind: PointKind::EquispacedLobatto,
            params: params.clone(),
            abscissae,
        })
    }

    pub fn kind(&self) -> PointKind {
        self.kind
    }

    pub fn params(&self) -> &ParamPair {
        &self.params
    }

    pub fn abscissae(&self) -> &[f64] {
        &self.abscissae
    }

    pub fn len(&self) -> usize {
        self.abscissae.len()
    }

    pub fn is_empty(&self) -> bool {
        self.abscissae.is_empty()
    }

    /// Applies [`kte_map`] elementwise. Order is preserved (the map is
    /// strictly increasing); kind and parameters are carried over unchanged
    /// as provenance of the pre-image.
    pub fn map_kte(&self, alpha: f64) -> Result<Self> {
        let abscissae = self
            .abscissae
            .iter()
            .map(|&x| kte_map(alpha, x))
            .collect::<Result<Vec<_>>>()?;
        Ok(PointSet {
            kind: self.kind,
            params: self.params.clone(),
            abscissae,
        })
    }

    /// One abscissa per line, in the round-trip-exact shortest decimal form.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for &x in &self.abscissae {
            out.push_str(&crate::io::fmt_f64(x));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

#[derive(Serialize, Deserialize)]
struct ParamsRepr {
    beta: ParamValue,
    gamma: ParamValue,
}

#[derive(Serialize, Deserialize)]
struct PointSetRepr {
    kind: PointKind,
    count: usize,
    params: ParamsRepr,
    abscissae: Vec<f64>,
}

impl Serialize for PointSet {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        PointSetRepr {
            kind: self.kind,
            count: self.abscissae.len(),
            params: ParamsRepr {
                beta: self.params.beta().clone(),
                gamma: self.params.gamma().clone(),
            },
            abscissae: self.abscissae.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = PointSetRepr::deserialize(deserializer)?;
        if repr.count != repr.abscissae.len() {
            return Err(D::Error::custom(format!(
                "count field is {} but {} abscissae are present",
                repr.count,
                repr.abscissae.len()
            )));
        }
        let params = ParamPair::from_values(repr.params.beta, repr.params.gamma)
            .map_err(|e| D::Error::custom(format!("{e}")))?;
        Ok(PointSet {
            kind: repr.kind,
            params,
            abscissae: repr.abscissae,
        })
    }
}

/// The normalized sine map `x ↦ sin(απx/2) / sin(απ/2)` on `[-1, 1]`,
/// for stretch `α ∈ (0, 1]`. Fixes `±1` and carries the equispaced families
/// onto the trigonometric ones at `α = 1`.
pub fn kte_map(alpha: f64, x: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::Domain(format!(
            "stretch alpha = {alpha} is outside (0, 1]"
        )));
    }
    let x = clamp_unit(x, "map abscissa")?;
    let half_angle = alpha * std::f64::consts::FRAC_PI_2;
    Ok((half_angle * x).sin() / half_angle.sin())
}

/// Re-expresses the zero family of the degree-`n` member as an
/// endpoint-including family: returns the shifted pair
/// `(β + ρ/(2n), γ + ρ/(2n))` and its `n`-point Lobatto-kind set, whose
/// abscissae coincide with the zeros.
///
/// For `n = 1` the shifted parameters would sum to 2, so no such family
/// exists and the call fails.
pub fn first_kind_as_lobatto(n: usize, params: &ParamPair) -> Result<(ParamPair, PointSet)> {
    if n < 1 {
        return Err(Error::domain("first-kind family needs n >= 1"));
    }
    if n == 1 {
        return Err(Error::domain(
            "no endpoint-including equivalent exists for n = 1: the shifted parameters would sum to 2",
        ));
    }
    let shifted = match params.exact_triple() {
        Some((beta, gamma, rho)) => {
            let shift = rho / &Rational::from_integer(2 * n as i64);
            ParamPair::new(beta + &shift, gamma + &shift)?
        }
        None => {
            let shift = params.rho_f64() / (2.0 * n as f64);
            ParamPair::from_f64(params.beta_f64() + shift, params.gamma_f64() + shift)?
        }
    };
    let set = PointSet::lobatto(n, &shifted)?;
    Ok((shifted, set))
}
