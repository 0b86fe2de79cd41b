//! Numeric tolerances used across the crate, collected in one place so that
//! every hard-coded band has a name and a rationale.

/// Round-off band around the endpoints of `[-1, 1]`.
///
/// Abscissae produced by trig identities can land a few ulp outside the
/// interval; values within this band are clamped to the nearest endpoint,
/// values farther out are rejected as domain errors.
pub const ENDPOINT_CLAMP_BAND: f64 = 1e-14;

/// Two nodes closer than this gap are treated as coincident, which makes a
/// node set unusable for barycentric interpolation.
pub const DEGENERATE_NODE_GAP: f64 = 1e-15;

/// An evaluation abscissa within this relative distance of a node is treated
/// as the node itself, where the Lebesgue function is exactly 1.
pub const NODE_COINCIDENCE: f64 = 1e-15;

/// Abscissa tolerance for the golden-section refinement that sharpens a
/// grid-located extremum of the Lebesgue function.
pub const REFINE_ABSCISSA: f64 = 1e-10;

/// Elementwise tolerance when checking that a parameterized node family
/// reproduces a slice of a classical node set.
pub const SUBSET_ELEMENTWISE: f64 = 1e-14;

/// Interior clipping applied to the integration interval by the x-space
/// quadrature route, which keeps the weight singularity at `x = ±1` off the
/// integrand while changing the integral by far less than the route's
/// advertised accuracy.
pub const XSPACE_CLIP: f64 = 1e-10;

/// How close the located maximum of a Lebesgue function must sit to `x = -1`
/// for the left-endpoint growth report to count the row as holding.
pub const CONJECTURE_ARGMAX: f64 = 1e-8;

/// Relative tolerance for matching a computed Lebesgue constant against the
/// `2n - 1` closed form in the left-endpoint growth report.
pub const CONJECTURE_VALUE_REL: f64 = 1e-6;
