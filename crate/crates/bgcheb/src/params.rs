//! Exact parameters for the generalized Chebyshev family.
//!
//! The family is driven by a pair `(β, γ)` of angular trimming parameters
//! with `0 ≤ β, γ < 2` and `β + γ < 2`. Everything downstream (frequencies,
//! node angles, polynomial-case detection) depends on exact arithmetic in
//! these parameters, so they are kept as arbitrary-precision rationals and
//! only converted to `f64` at the final trig call. A float-backed escape
//! hatch exists for irrational parameters; such pairs support every numeric
//! operation but are refused by exact classification.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number.
///
/// Always stored in lowest terms with a positive denominator. Parses from
/// `"p"` or `"p/q"`; decimal strings are rejected so that nothing is rounded
/// silently on the way in.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den`. Fails if `den == 0`.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::domain("rational denominator must be nonzero"));
        }
        Ok(Rational(BigRational::new(num.into(), den.into())))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Nearest double. The conversion is the only place precision is lost.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Remainder under Euclidean division by a positive integer modulus:
    /// the result `r` satisfies `0 ≤ r < m` and `self − r ∈ m·ℤ` when
    /// `self` is an integer.
    pub(crate) fn rem_euclid_int(&self, m: u32) -> Option<u32> {
        if !self.is_integer() {
            return None;
        }
        let m_big = BigInt::from(m);
        let mut r = self.numer() % &m_big;
        if r.sign() == num::bigint::Sign::Minus {
            r += &m_big;
        }
        r.to_u32()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty rational string".into()));
        }
        if s.contains(['.', 'e', 'E']) {
            return Err(Error::Parse(format!(
                "'{s}' looks like a decimal; write an exact fraction such as 1/3"
            )));
        }
        let parse_int = |t: &str| -> Result<BigInt> {
            BigInt::from_str(t.trim()).map_err(|_| Error::Parse(format!("'{t}' is not an integer")))
        };
        match s.split_once('/') {
            None => Ok(Rational(BigRational::from_integer(parse_int(s)?))),
            Some((p, q)) => {
                let num = parse_int(p)?;
                let den = parse_int(q)?;
                if den.is_zero() {
                    return Err(Error::Parse(format!("'{s}' has a zero denominator")));
                }
                Ok(Rational(BigRational::new(num, den)))
            }
        }
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);

impl Div for &Rational {
    type Output = Rational;
    /// Panics on division by zero, like integer division.
    fn div(self, rhs: &Rational) -> Rational {
        Rational(&self.0 / &rhs.0)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        (&self).div(&rhs)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e| D::Error::custom(format!("{e}")))
    }
}

/// One trimming parameter: exact rational, or a float for irrational values.
#[derive(Clone, Debug, PartialEq)]
pub enum ParamValue {
    Exact(Rational),
    Approx(f64),
}

impl ParamValue {
    pub fn as_f64(&self) -> f64 {
        match self {
            ParamValue::Exact(r) => r.to_f64(),
            ParamValue::Approx(v) => *v,
        }
    }

    /// The exact value, when there is one.
    pub fn exact(&self) -> Option<&Rational> {
        match self {
            ParamValue::Exact(r) => Some(r),
            ParamValue::Approx(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, ParamValue::Exact(_))
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Exact(r) => write!(f, "{r}"),
            ParamValue::Approx(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for ParamValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ParamValue::Exact(r) => r.serialize(serializer),
            ParamValue::Approx(v) => serializer.serialize_f64(*v),
        }
    }
}

impl<'de> Deserialize<'de> for ParamValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Number(f64),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Text(s) => Ok(ParamValue::Exact(
                s.parse().map_err(|e| D::Error::custom(format!("{e}")))?,
            )),
            Raw::Number(v) => Ok(ParamValue::Approx(v)),
        }
    }
}

/// Closed interval on the real line.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn contains(&self, x: f64, slack: f64) -> bool {
        x >= self.lo - slack && x <= self.hi + slack
    }

    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Validated trimming pair `(β, γ)` with its cached complement `ρ = 2 − β − γ`.
///
/// `β` trims the angular range near `x = -1`, `γ` near `x = +1`; the
/// classical Chebyshev setting is `β = γ = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamPair {
    beta: ParamValue,
    gamma: ParamValue,
    rho: ParamValue,
}

impl ParamPair {
    /// Exact constructor. Requires `0 ≤ β, γ < 2` and `β + γ < 2`.
    pub fn new(beta: Rational, gamma: Rational) -> Result<Self> {
        Self::from_values(ParamValue::Exact(beta), ParamValue::Exact(gamma))
    }

    /// Float-backed constructor for irrational parameters. Pairs built this
    /// way support all numeric operations but cannot be classified exactly.
    pub fn from_f64(beta: f64, gamma: f64) -> Result<Self> {
        Self::from_values(ParamValue::Approx(beta), ParamValue::Approx(gamma))
    }

    /// General constructor; mixed exact/approx pairs are allowed.
    pub fn from_values(beta: ParamValue, gamma: ParamValue) -> Result<Self> {
        let two = Rational::from_integer(2);
        let check_range = |name: &str, v: &ParamValue| -> Result<()> {
            match v {
                ParamValue::Exact(r) => {
                    if r.is_negative() || *r >= two {
                        return Err(Error::Domain(format!("{name} = {r} is outside [0, 2)")));
                    }
                }
                ParamValue::Approx(x) => {
                    if !x.is_finite() || *x < 0.0 || *x >= 2.0 {
                        return Err(Error::Domain(format!("{name} = {x} is outside [0, 2)")));
                    }
                }
            }
            Ok(())
        };
        check_range("beta", &beta)?;
        check_range("gamma", &gamma)?;

        let rho = match (&beta, &gamma) {
            (ParamValue::Exact(b), ParamValue::Exact(g)) => {
                let sum = b + g;
                if sum >= two {
                    return Err(Error::Domain(format!("beta + gamma = {sum} must be < 2")));
                }
                ParamValue::Exact(&two - &sum)
            }
            _ => {
                let sum = beta.as_f64() + gamma.as_f64();
                if sum >= 2.0 {
                    return Err(Error::Domain(format!("beta + gamma = {sum} must be < 2")));
                }
                ParamValue::Approx(2.0 - sum)
            }
        };
        Ok(ParamPair { beta, gamma, rho })
    }

    /// The classical pair `β = γ = 0`.
    pub fn classical() -> Self {
        ParamPair::new(Rational::zero(), Rational::zero()).expect("the zero pair is always valid")
    }

    pub fn beta(&self) -> &ParamValue {
        &self.beta
    }

    pub fn gamma(&self) -> &ParamValue {
        &self.gamma
    }

    /// `ρ = 2 − β − γ`, the surviving fraction of the angular range.
    pub fn rho(&self) -> &ParamValue {
        &self.rho
    }

    pub fn beta_f64(&self) -> f64 {
        self.beta.as_f64()
    }

    pub fn gamma_f64(&self) -> f64 {
        self.gamma.as_f64()
    }

    pub fn rho_f64(&self) -> f64 {
        self.rho.as_f64()
    }

    /// Both parameters exact?
    pub fn is_exact(&self) -> bool {
        self.beta.is_exact() && self.gamma.is_exact()
    }

    /// Exact `(β, γ, ρ)` triple, when available.
    pub fn exact_triple(&self) -> Option<(&Rational, &Rational, &Rational)> {
        match (&self.beta, &self.gamma, &self.rho) {
            (ParamValue::Exact(b), ParamValue::Exact(g), ParamValue::Exact(r)) => Some((b, g, r)),
            _ => None,
        }
    }

    /// Angular frequency `2n/ρ` of the degree-`n` member, as a rational when
    /// the pair is exact.
    pub fn frequency_exact(&self, n: u32) -> Option<Rational> {
        self.exact_triple()
            .map(|(_, _, rho)| &Rational::from_integer(2 * i64::from(n)) / rho)
    }

    /// Angular frequency `2n/ρ`, converted to a double once.
    pub fn frequency(&self, n: u32) -> f64 {
        match self.frequency_exact(n) {
            Some(r) => r.to_f64(),
            None => 2.0 * f64::from(n) / self.rho_f64(),
        }
    }

    /// Phase offset `γπ/2` subtracted from `arccos x` before scaling.
    pub fn phase(&self) -> f64 {
        self.gamma_f64() * std::f64::consts::FRAC_PI_2
    }

    /// Supported interval `[-cos(βπ/2), cos(γπ/2)]`: the image of the
    /// trimmed angular window under the cosine.
    pub fn supported_interval(&self) -> Interval {
        Interval {
            lo: -crate::points::cos_half_turns(0.5 * self.beta_f64()),
            hi: crate::points::cos_half_turns(0.5 * self.gamma_f64()),
        }
    }

    /// Chord interval `[-1 + β, 1 - γ]`: the same trimming applied linearly
    /// instead of through the cosine.
    pub fn chord_interval(&self) -> Interval {
        match self.exact_triple() {
            Some((b, g, _)) => Interval {
                lo: (b - &Rational::one()).to_f64(),
                hi: (&Rational::one() - g).to_f64(),
            },
            None => Interval {
                lo: -1.0 + self.beta_f64(),
                hi: 1.0 - self.gamma_f64(),
            },
        }
    }
}

impl fmt::Display for ParamPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(beta = {}, gamma = {})", self.beta, self.gamma)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(rat("3").to_string(), "3");
        assert_eq!(rat("-7").to_string(), "-7");
        assert_eq!(rat("2/4").to_string(), "1/2");
        assert_eq!(rat("-6/4").to_string(), "-3/2");
        assert_eq!(rat(" 1 / 3 ").to_string(), "1/3");
        // Denominator sign folds into the numerator.
        assert_eq!(rat("1/-2").to_string(), "-1/2");
    }

    #[test]
    fn rejects_decimals_and_garbage() {
        assert!(matches!("0.5".parse::<Rational>(), Err(Error::Parse(_))));
        assert!(matches!("1e-3".parse::<Rational>(), Err(Error::Parse(_))));
        assert!(matches!("1/0".parse::<Rational>(), Err(Error::Parse(_))));
        assert!(matches!("".parse::<Rational>(), Err(Error::Parse(_))));
        assert!(matches!("a/b".parse::<Rational>(), Err(Error::Parse(_))));
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = rat("1/3");
        let sixth = rat("1/6");
        assert_eq!(&third + &sixth, rat("1/2"));
        assert_eq!(&third - &sixth, sixth);
        assert_eq!(&third * &rat("3"), Rational::one());
        assert_eq!(&Rational::one() / &rat("3"), third);
        assert_eq!(-&third, rat("-1/3"));
    }

    #[test]
    fn rho_is_exact() {
        let p = ParamPair::classical();
        assert_eq!(p.rho().exact(), Some(&rat("2")));

        let p = ParamPair::new(rat("1/3"), rat("1/3")).unwrap();
        assert_eq!(p.rho().exact(), Some(&rat("4/3")));
    }

    #[test]
    fn invalid_pairs_are_rejected() {
        // Sum reaches 2.
        assert!(matches!(
            ParamPair::new(rat("3/2"), rat("3/4")),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            ParamPair::new(rat("1"), rat("1")),
            Err(Error::Domain(_))
        ));
        // Range violations.
        assert!(ParamPair::new(rat("-1/4"), rat("0")).is_err());
        assert!(ParamPair::new(rat("2"), rat("0")).is_err());
        assert!(ParamPair::from_f64(f64::NAN, 0.0).is_err());
        assert!(ParamPair::from_f64(0.0, 2.0).is_err());
        assert!(ParamPair::from_f64(1.5, 0.5).is_err());
        // Just inside the domain.
        assert!(ParamPair::new(rat("199/100"), rat("1/200")).is_ok());
        assert!(ParamPair::from_f64(0.0, 1.999).is_ok());
    }

    #[test]
    fn supported_interval_matches_cosine_endpoints() {
        let p = ParamPair::new(rat("1"), rat("1/2")).unwrap();
        let w = p.supported_interval();
        assert!((w.lo - 0.0).abs() < 1e-15);
        assert!((w.hi - 2f64.sqrt() / 2.0).abs() < 1e-15);

        let p = ParamPair::new(rat("1/3"), rat("1/3")).unwrap();
        let w = p.supported_interval();
        assert!((w.lo + 3f64.sqrt() / 2.0).abs() < 1e-15);
        assert!((w.hi - 3f64.sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn chord_interval_is_linear_trim() {
        let p = ParamPair::new(rat("1/2"), rat("0")).unwrap();
        let w = p.chord_interval();
        assert_eq!(w.lo, -0.5);
        assert_eq!(w.hi, 1.0);

        let p = ParamPair::new(rat("1/3"), rat("2/3")).unwrap();
        let w = p.chord_interval();
        assert!((w.lo + 2.0 / 3.0).abs() < 1e-15);
        assert!((w.hi - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn frequency_uses_exact_arithmetic() {
        let p = ParamPair::new(rat("1/3"), rat("1/3")).unwrap();
        // 2n/rho with rho = 4/3: n = 2 -> 3 exactly.
        assert_eq!(p.frequency_exact(2), Some(rat("3")));
        assert_eq!(p.frequency(2), 3.0);

        let q = ParamPair::from_f64(1.0 / 3.0, 1.0 / 3.0).unwrap();
        assert!((q.frequency(2) - 3.0).abs() < 1e-14);
        assert_eq!(q.frequency_exact(2), None);
    }

    #[test]
    fn param_value_serde_round_trip() {
        let v = ParamValue::Exact(rat("5/7"));
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, "\"5/7\"");
        let back: ParamValue = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);

        let v = ParamValue::Approx(0.125);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, "0.125");
        let back: ParamValue = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn rem_euclid_int_handles_negatives() {
        assert_eq!(rat("7").rem_euclid_int(4), Some(3));
        assert_eq!(rat("-1").rem_euclid_int(4), Some(3));
        assert_eq!(rat("8").rem_euclid_int(4), Some(0));
        assert_eq!(rat("1/2").rem_euclid_int(4), None);
    }
}
