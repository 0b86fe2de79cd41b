//! Exact detection of the parameter pairs whose members collapse to
//! classical closed forms.
//!
//! The degree-`n` member is `cos(c·(arccos x − γπ/2))` with `c = 2n/ρ`.
//! When `c` is a positive integer and the accumulated phase `c·γπ/2` is a
//! multiple of `π/2`, the angle-sum identity folds the member onto
//! `±cos(c·arccos x)` (the classical degree-`c` polynomial, up to sign) or
//! `±sin(c·arccos x)` (the companion sine form). Both conditions are decided
//! in exact rational arithmetic, so the answer carries no tolerance.

use num::ToPrimitive;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::functions::BgChebyshev;
use crate::params::{ParamPair, Rational};
use crate::points::PointSet;
use crate::tol;

/// Sign of a collapsed closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Outcome of classifying one member of the family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// `sign · cos(degree · arccos x)`: the classical polynomial of that
    /// degree, up to sign.
    Cosine { degree: u64, sign: Sign },
    /// `sign · sin(degree · arccos x)`, i.e. `sign · √(1-x²) U_{degree-1}(x)`:
    /// not a polynomial in `x`, but a classical closed form.
    Sine { degree: u64, sign: Sign },
    /// No collapse; `note` records which hypothesis failed.
    NotPolynomial { note: String },
}

impl Classification {
    pub fn status_name(&self) -> &'static str {
        match self {
            Classification::Cosine { .. } => "Cosine",
            Classification::Sine { .. } => "Sine",
            Classification::NotPolynomial { .. } => "NotPolynomial",
        }
    }

    pub fn degree(&self) -> Option<u64> {
        match self {
            Classification::Cosine { degree, .. } | Classification::Sine { degree, .. } => {
                Some(*degree)
            }
            Classification::NotPolynomial { .. } => None,
        }
    }

    pub fn sign(&self) -> Option<Sign> {
        match self {
            Classification::Cosine { sign, .. } | Classification::Sine { sign, .. } => Some(*sign),
            Classification::NotPolynomial { .. } => None,
        }
    }

    pub fn note(&self) -> Option<&str> {
        match self {
            Classification::NotPolynomial { note } => Some(note),
            _ => None,
        }
    }
}

impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Classification", 4)?;
        s.serialize_field("status", self.status_name())?;
        s.serialize_field("degree", &self.degree())?;
        s.serialize_field("sign", &self.sign().map(Sign::as_i8))?;
        s.serialize_field("note", &self.note())?;
        s.end()
    }
}

/// The `β` (with `γ = 0`) for which every degree-`n` member is the classical
/// polynomial of degree `m·n`: `β = 2 − 2/m`, `m ≥ 2`.
pub fn beta_for_multiplier(m: u32) -> Result<Rational> {
    if m < 2 {
        return Err(Error::domain("degree multiplier m must be >= 2"));
    }
    Ok(&Rational::from_integer(2) - &Rational::new(2, i64::from(m))?)
}

/// The `β` (with `γ = 0`) for which the degree-`n` member is the classical
/// polynomial of fixed degree `m`: `β = 2 − 2n/m`, `0 < n < m`.
pub fn beta_for_fixed_degree(m: u32, n: u32) -> Result<Rational> {
    if n == 0 || n >= m {
        return Err(Error::domain("fixed-degree collapse needs 0 < n < m"));
    }
    Ok(&Rational::from_integer(2) - &Rational::new(2 * i64::from(n), i64::from(m))?)
}

/// Classifies the degree-`n` member of an exact pair, `n ≥ 1`.
///
/// Fails (rather than guessing) when the parameters are float-backed, since
/// the collapse conditions are integrality conditions.
pub fn classify(n: u32, params: &ParamPair) -> Result<Classification> {
    if n < 1 {
        return Err(Error::domain("classification needs degree index n >= 1"));
    }
    let Some((_, gamma, _)) = params.exact_triple() else {
        return Err(Error::domain(
            "classification needs exact rational parameters; this pair is float-backed",
        ));
    };
    let c = params
        .frequency_exact(n)
        .expect("exact pair has an exact frequency");
    if !c.is_integer() {
        return Ok(Classification::NotPolynomial {
            note: format!("angular frequency 2n/rho = {c} is not an integer"),
        });
    }
    let degree = c
        .numer()
        .to_u64()
        .ok_or_else(|| Error::domain("collapse degree exceeds the supported range"))?;
    // Accumulated phase in quarter turns: c·γπ/2 = (c·γ)·π/2.
    let quarter_turns = &c * gamma;
    match quarter_turns.rem_euclid_int(4) {
        Some(0) => Ok(Classification::Cosine {
            degree,
            sign: Sign::Plus,
        }),
        Some(1) => Ok(Classification::Sine {
            degree,
            sign: Sign::Plus,
        }),
        Some(2) => Ok(Classification::Cosine {
            degree,
            sign: Sign::Minus,
        }),
        Some(3) => Ok(Classification::Sine {
            degree,
            sign: Sign::Minus,
        }),
        Some(_) => unreachable!("remainder mod 4 is in 0..4"),
        None => Ok(Classification::NotPolynomial {
            note: "integer frequency, non-axis phase".to_string(),
        }),
    }
}

/// Largest deviation `|T_n(x) − sign·target(x)|` over a uniform grid on
/// `[-1, 1]`, as numeric corroboration of a [`Classification`].
pub fn verify_classification(
    n: u32,
    params: &ParamPair,
    classification: &Classification,
    grid_size: usize,
) -> Result<f64> {
    if grid_size < 2 {
        return Err(Error::domain("verification grid needs at least 2 points"));
    }
    let (deg, factor, is_cosine) = match classification {
        Classification::Cosine { degree, sign } => (*degree, sign.factor(), true),
        Classification::Sine { degree, sign } => (*degree, sign.factor(), false),
        Classification::NotPolynomial { .. } => {
            return Err(Error::domain(
                "a non-collapsing member has no closed form to verify against",
            ));
        }
    };
    let f = BgChebyshev::new(n, params);
    let mut max_dev: f64 = 0.0;
    let last = (grid_size - 1) as f64;
    for k in 0..grid_size {
        let x = -1.0 + 2.0 * k as f64 / last;
        let angle = deg as f64 * x.acos();
        let target = factor * if is_cosine { angle.cos() } else { angle.sin() };
        max_dev = max_dev.max((f.eval(x)? - target).abs());
    }
    Ok(max_dev)
}

/// A trimming pair built to embed a small node family inside a classical
/// one: with `N = n + κ₁ + κ₂`, the pair `(2κ₁/N, 2κ₂/N)`.
#[derive(Clone, Debug)]
pub struct SubsetParams {
    pub kappa1: u32,
    pub kappa2: u32,
    pub n: u32,
    pub params: ParamPair,
}

/// Builds the embedding pair for the given trim counts, `κ₁ + κ₂ ≥ 1`.
///
/// With this pair, the `n+1`-point endpoint-including family equals the
/// classical `N+1`-point family with its first `κ₂` and last `κ₁` points
/// removed, and the `n`-point zero family equals the same slice of the
/// classical degree-`N` zeros.
pub fn subset_params(n: u32, kappa1: u32, kappa2: u32) -> Result<SubsetParams> {
    if n < 1 {
        return Err(Error::domain("embedding needs n >= 1"));
    }
    if kappa1 == 0 && kappa2 == 0 {
        return Err(Error::domain(
            "kappa1 = kappa2 = 0 is the identity embedding; nothing to construct",
        ));
    }
    let total = i64::from(n) + i64::from(kappa1) + i64::from(kappa2);
    let params = ParamPair::new(
        Rational::new(2 * i64::from(kappa1), total)?,
        Rational::new(2 * i64::from(kappa2), total)?,
    )?;
    Ok(SubsetParams {
        kappa1,
        kappa2,
        n,
        params,
    })
}

/// Checks both embedding identities elementwise against
/// [`tol::SUBSET_ELEMENTWISE`].
pub fn verify_subset(n: u32, kappa1: u32, kappa2: u32) -> Result<bool> {
    let sp = subset_params(n, kappa1, kappa2)?;
    let n = n as usize;
    let total = n + kappa1 as usize + kappa2 as usize;
    let skip = sp.kappa2 as usize;
    let classical = ParamPair::classical();

    let lob_sub = PointSet::lobatto(n + 1, &sp.params)?;
    let lob_full = PointSet::lobatto(total + 1, &classical)?;
    let lob_ok = lob_sub
        .abscissae()
        .iter()
        .zip(&lob_full.abscissae()[skip..skip + n + 1])
        .all(|(a, b)| (a - b).abs() <= tol::SUBSET_ELEMENTWISE);

    let fk_sub = PointSet::first_kind(n, &sp.params)?;
    let fk_full = PointSet::first_kind(total, &classical)?;
    let fk_ok = fk_sub
        .abscissae()
        .iter()
        .zip(&fk_full.abscissae()[skip..skip + n])
        .all(|(a, b)| (a - b).abs() <= tol::SUBSET_ELEMENTWISE);

    Ok(lob_ok && fk_ok)
}
