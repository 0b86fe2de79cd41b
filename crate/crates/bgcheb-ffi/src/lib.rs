//! C ABI for the bgcheb library.
//!
//! Every function returns a [`BgStatus`]; results travel through out
//! pointers. Heap objects (`BgParamPair`, `BgPointSet`) are opaque handles
//! created and destroyed by the paired `*_new`/`*_free` calls. On any
//! failure the human-readable cause is stored thread-locally and can be
//! read with [`bg_last_error_message`]; the returned pointer stays valid
//! until the next failing call on the same thread.
//!
//! The matching C header is generated into `include/bgcheb.h` at build
//! time.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;

use bgcheb::lebesgue::{
    default_grid_size, find_optimal_beta, find_optimal_delta, lebesgue_constant, lebesgue_function,
    log_growth_threshold,
};
use bgcheb::ortho::{inner_product, QuadratureSpec};
use bgcheb::polycases::{classify, Classification};
use bgcheb::{lobatto_companion, BgChebyshev, Error, ParamPair, PointSet, Rational};

/// Status code returned by every API call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BgStatus {
    /// The call succeeded.
    Ok = 0,
    /// An argument lies outside the mathematical domain of the operation.
    DomainError = 1,
    /// Interpolation nodes coincide, so barycentric weights cannot be formed.
    DegenerateNodes = 2,
    /// A string argument could not be parsed.
    ParseError = 3,
    /// Serialization failed.
    SerializationError = 4,
    /// A required pointer argument was null.
    NullPointer = 5,
    /// An argument was structurally invalid (bad enum value, short buffer).
    InvalidArgument = 6,
    /// The library aborted an internal computation; report this as a bug.
    InternalError = 7,
}

/// How a trimmed member relates to a classical polynomial on its interval.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BgPolyCase {
    /// The member is not a polynomial.
    NotPolynomial = 0,
    /// The member equals `sign * T_degree` composed with the arccosine.
    Cosine = 1,
    /// The member equals `sign * sin(degree * arccos x)`.
    Sine = 2,
}

/// Result of [`bg_classify`]: the collapse case, the classical degree it
/// collapses onto (0 when not a polynomial), and the sign (+1, -1, or 0
/// when not a polynomial).
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BgClassification {
    /// Which collapse case applies.
    pub kind: BgPolyCase,
    /// Degree of the classical counterpart; 0 when not a polynomial.
    pub degree: u64,
    /// +1 or -1 for polynomial cases, 0 otherwise.
    pub sign: i32,
}

/// Node family selector for [`bg_points_new`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BgPointKind {
    /// Zeros of the degree-`n` member (`count` = `n`, yields `n` points).
    FirstKind = 0,
    /// Endpoint-including family (`count` = number of points, at least 2).
    Lobatto = 1,
    /// Interior critical points of the degree-`count` member
    /// (yields `count - 1` points, `count` at least 2).
    Extrema = 2,
    /// Equispaced analogue of the zeros in the chord variable.
    EquispacedFirstKind = 3,
    /// Equispaced analogue of the endpoint family in the chord variable.
    EquispacedLobatto = 4,
}

/// Opaque exact parameter pair handle.
pub struct BgParamPair(ParamPair);

/// Opaque node set handle.
pub struct BgPointSet(PointSet);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let cleaned: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(cleaned).unwrap_or_default();
    });
}

fn fail(err: &Error) -> BgStatus {
    set_error(&err.to_string());
    match err {
        Error::Domain(_) => BgStatus::DomainError,
        Error::DegenerateNodes(_) => BgStatus::DegenerateNodes,
        Error::Parse(_) => BgStatus::ParseError,
        Error::Serialization(_) => BgStatus::SerializationError,
    }
}

fn null_pointer(what: &str) -> BgStatus {
    set_error(&format!("{what} must not be null"));
    BgStatus::NullPointer
}

fn guarded(f: impl FnOnce() -> BgStatus) -> BgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic; please report this as a bug");
            BgStatus::InternalError
        }
    }
}

unsafe fn write_f64(out: *mut f64, value: f64, name: &str) -> BgStatus {
    if out.is_null() {
        return null_pointer(name);
    }
    out.write(value);
    BgStatus::Ok
}

unsafe fn read_str<'a>(ptr: *const c_char, name: &str) -> Result<&'a str, BgStatus> {
    if ptr.is_null() {
        return Err(null_pointer(name));
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error(&format!("{name} is not valid UTF-8"));
        BgStatus::ParseError
    })
}

unsafe fn params_ref<'a>(ptr: *const BgParamPair) -> Result<&'a ParamPair, BgStatus> {
    ptr.as_ref()
        .map(|p| &p.0)
        .ok_or_else(|| null_pointer("params"))
}

unsafe fn points_ref<'a>(ptr: *const BgPointSet) -> Result<&'a PointSet, BgStatus> {
    ptr.as_ref()
        .map(|p| &p.0)
        .ok_or_else(|| null_pointer("points"))
}

unsafe fn emit_params(out: *mut *mut BgParamPair, pair: ParamPair) -> BgStatus {
    if out.is_null() {
        return null_pointer("out");
    }
    out.write(Box::into_raw(Box::new(BgParamPair(pair))));
    BgStatus::Ok
}

unsafe fn emit_points(out: *mut *mut BgPointSet, set: PointSet) -> BgStatus {
    if out.is_null() {
        return null_pointer("out");
    }
    out.write(Box::into_raw(Box::new(BgPointSet(set))));
    BgStatus::Ok
}

/// Returns the library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn bg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Returns the message describing the most recent failure on this thread.
///
/// The pointer is owned by the library and stays valid until the next
/// failing call on the same thread. Never null; initially empty.
#[no_mangle]
pub extern "C" fn bg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Builds the exact parameter pair `(beta_num/beta_den, gamma_num/gamma_den)`.
///
/// Requires `0 <= beta, gamma < 2` and `beta + gamma < 2`. On success
/// `*out` owns the handle; release it with [`bg_params_free`].
///
/// # Safety
/// `out` must be a valid pointer to a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn bg_params_new(
    beta_num: i64,
    beta_den: i64,
    gamma_num: i64,
    gamma_den: i64,
    out: *mut *mut BgParamPair,
) -> BgStatus {
    guarded(|| {
        let build = || -> Result<ParamPair, Error> {
            ParamPair::new(
                Rational::new(beta_num, beta_den)?,
                Rational::new(gamma_num, gamma_den)?,
            )
        };
        match build() {
            Ok(pair) => emit_params(out, pair),
            Err(e) => fail(&e),
        }
    })
}

/// Builds a parameter pair from NUL-terminated strings such as `"1/3"`.
///
/// Decimal strings are rejected; write exact fractions.
///
/// # Safety
/// `beta` and `gamma` must be valid NUL-terminated strings and `out` a
/// writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn bg_params_parse(
    beta: *const c_char,
    gamma: *const c_char,
    out: *mut *mut BgParamPair,
) -> BgStatus {
    guarded(|| {
        let beta = match read_str(beta, "beta") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let gamma = match read_str(gamma, "gamma") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let build = || -> Result<ParamPair, Error> {
            ParamPair::new(Rational::from_str(beta)?, Rational::from_str(gamma)?)
        };
        match build() {
            Ok(pair) => emit_params(out, pair),
            Err(e) => fail(&e),
        }
    })
}

/// Builds a float-backed parameter pair for irrational trims.
///
/// Such pairs support every numeric operation but are refused by
/// [`bg_classify`], which needs exact arithmetic.
///
/// # Safety
/// `out` must be a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn bg_params_from_f64(
    beta: f64,
    gamma: f64,
    out: *mut *mut BgParamPair,
) -> BgStatus {
    guarded(|| match ParamPair::from_f64(beta, gamma) {
        Ok(pair) => emit_params(out, pair),
        Err(e) => fail(&e),
    })
}

/// Builds the classical (untrimmed) parameter pair `(0, 0)`.
///
/// # Safety
/// `out` must be a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn bg_params_classical(out: *mut *mut BgParamPair) -> BgStatus {
    guarded(|| emit_params(out, ParamPair::classical()))
}

/// Releases a parameter pair handle. Accepts null.
///
/// # Safety
/// `params` must be null or a pointer obtained from a `bg_params_*`
/// constructor that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn bg_params_free(params: *mut BgParamPair) {
    if !params.is_null() {
        drop(Box::from_raw(params));
    }
}

/// Writes the angular span `rho = 2 - beta - gamma` to `*out`.
///
/// # Safety
/// `params` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bg_params_rho(params: *const BgParamPair, out: *mut f64) -> BgStatus {
    guarded(|| match params_ref(params) {
        Ok(p) => write_f64(out, p.rho_f64(), "out"),
        Err(status) => status,
    })
}

/// Writes the endpoints of the supported interval to `*out_lo`, `*out_hi`.
///
/// # Safety
/// `params` must be a live handle; both out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn bg_params_interval(
    params: *const BgParamPair,
    out_lo: *mut f64,
    out_hi: *mut f64,
) -> BgStatus {
    guarded(|| {
        let p = match params_ref(params) {
            Ok(p) => p,
            Err(status) => return status,
        };
        let interval = p.supported_interval();
        let status = write_f64(out_lo, interval.lo, "out_lo");
        if status != BgStatus::Ok {
            return status;
        }
        write_f64(out_hi, interval.hi, "out_hi")
    })
}

/// Writes `true` to `*out` when the pair is exact (rational-backed).
///
/// # Safety
/// `params` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bg_params_is_exact(
    params: *const BgParamPair,
    out: *mut bool,
) -> BgStatus {
    guarded(|| {
        let p = match params_ref(params) {
            Ok(p) => p,
            Err(status) => return status,
        };
        if out.is_null() {
            return null_pointer("out");
        }
        out.write(p.exact_triple().is_some());
        BgStatus::Ok
    })
}

/// Evaluates the degree-`n` member at `x` by the closed form.
///
/// `x` must lie in `[-1, 1]` up to a tiny clamp band.
///
/// # Safety
/// `params` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bg_eval(
    n: u32,
    params: *const BgParamPair,
    x: f64,
    out: *mut f64,
) -> BgStatus {
    guarded(|| {
        let p = match params_ref(params) {
            Ok(p) => p,
            Err(status) => return status,
        };
        match BgChebyshev::new(n, p).eval(x) {
            Ok(v) => write_f64(out, v, "out"),
            Err(e) => fail(&e),
        }
    })
}

/// Evaluates the degree-`n` member at `x` by the three-term recurrence.
///
/// # Safety
/// `params` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bg_eval_recurrence(
    n: u32,
    params: *const BgParamPair,
    x: f64,
    out: *mut f64,
) -> BgStatus {
    guarded(|| {
        let p = match params_ref(params) {
            Ok(p) => p,
            Err(status) => return status,
        };
        match BgChebyshev::new(n, p).eval_recurrence(x) {
            Ok(v) => write_f64(out, v, "out"),
            Err(e) => fail(&e),
        }
    })
}

/// Evaluates the degree-`n` companion function (the sine-branch partner
/// whose zeros add the interval endpoints) at `x`.
///
/// # Safety
/// `params` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bg_eval_companion(
    n: u32,
    params: *const BgParamPair,
    x: f64,
    out: *mut f64,
) -> BgStatus {
    guarded(|| {
        let p = match params_ref(params) {
            Ok(p) => p,
            Err(status) => return status,
        };
        match lobatto_companion(n, p, x) {
            Ok(v) => write_f64(out, v, "out"),
            Err(e) => fail(&e),
        }
    })
}

/// Decides whether the degree-`n` member collapses onto a classical
/// polynomial (or pure sine) and writes the case to `*out`.
///
/// Requires an exact (rational-backed) pair.
///
/// # Safety
/// `params` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bg_classify(
    n: u32,
    params: *const BgParamPair,
    out: *mut BgClassification,
) -> BgStatus {
    guarded(|| {
        let p = match params_ref(params) {
            Ok(p) => p,
            Err(status) => return status,
        };
        if out.is_null() {
            return null_pointer("out");
        }
        match classify(n, p) {
            Ok(c) => {
                let value = match c {
                    Classification::Cosine { degree, sign } => BgClassification {
                        kind: BgPolyCase::Cosine,
                        degree,
                        sign: sign.as_i8() as i32,
                    },
                    Classification::Sine { degree, sign } => BgClassification {
                        kind: BgPolyCase::Sine,
                        degree,
                        sign: sign.as_i8() as i32,
                    },
                    Classification::NotPolynomial { .. } => BgClassification {
                        kind: BgPolyCase::NotPolynomial,
                        degree: 0,
                        sign: 0,
                    },
                };
                out.write(value);
                BgStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Builds a node family. See [`BgPointKind`] for the meaning of `count`.
///
/// On success `*out` owns the handle; release it with [`bg_points_free`].
///
/// # Safety
/// `params` must be a live handle and `out` a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn bg_points_new(
    kind: BgPointKind,
    count: usize,
    params: *const BgParamPair,
    out: *mut *mut BgPointSet,
) -> BgStatus {
    guarded(|| {
        let p = match params_ref(params) {
            Ok(p) => p,
            Err(status) => return status,
        };
        let built = match kind {
            BgPointKind::FirstKind => PointSet::first_kind(count, p),
            BgPointKind::Lobatto => PointSet::lobatto(count, p),
            BgPointKind::Extrema => PointSet::extrema(count, p),
            BgPointKind::EquispacedFirstKind => PointSet::equispaced_first_kind(count, p),
            BgPointKind::EquispacedLobatto => PointSet::equispaced_lobatto(count, p),
        };
        match built {
            Ok(set) => emit_points(out, set),
            Err(e) => fail(&e),
        }
    })
}

/// Writes the number of points to `*out`.
///
/// # Safety
/// `points` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bg_points_len(points: *const BgPointSet, out: *mut usize) -> BgStatus {
    guarded(|| {
        let set = match points_ref(points) {
            Ok(s) => s,
            Err(status) => return status,
        };
        if out.is_null() {
            return null_pointer("out");
        }
        out.write(set.len());
        BgStatus::Ok
    })
}

/// Writes the abscissa at `index` (0-based, decreasing order) to `*out`.
///
/// # Safety
/// `points` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bg_points_get(
    points: *const BgPointSet,
    index: usize,
    out: *mut f64,
) -> BgStatus {
    guarded(|| {
        let set = match points_ref(points) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match set.abscissae().get(index) {
            Some(&v) => write_f64(out, v, "out"),
            None => {
                set_error(&format!(
                    "index {index} out of range for a set of {} points",
                    set.len()
                ));
                BgStatus::InvalidArgument
            }
        }
    })
}

/// Copies all abscissae (decreasing order) into `buf`.
///
/// `buf_len` must be at least the set length (query it with
/// [`bg_points_len`]).
///
/// # Safety
/// `points` must be a live handle; `buf` must point to at least `buf_len`
/// writable doubles.
#[no_mangle]
pub unsafe extern "C" fn bg_points_copy(
    points: *const BgPointSet,
    buf: *mut f64,
    buf_len: usize,
) -> BgStatus {
    guarded(|| {
        let set = match points_ref(points) {
            Ok(s) => s,
            Err(status) => return status,
        };
        if buf.is_null() {
            return null_pointer("buf");
        }
        let values = set.abscissae();
        if buf_len < values.len() {
            set_error(&format!(
                "buffer holds {buf_len} doubles but the set has {}",
                values.len()
            ));
            return BgStatus::InvalidArgument;
        }
        std::ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
        BgStatus::Ok
    })
}

/// Applies the sine map with stretch `alpha` in `(0, 1]` and writes the
/// mapped set to `*out` as a new handle.
///
/// # Safety
/// `points` must be a live handle and `out` a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn bg_points_map_kte(
    points: *const BgPointSet,
    alpha: f64,
    out: *mut *mut BgPointSet,
) -> BgStatus {
    guarded(|| {
        let set = match points_ref(points) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match set.map_kte(alpha) {
            Ok(mapped) => emit_points(out, mapped),
            Err(e) => fail(&e),
        }
    })
}

/// Releases a node set handle. Accepts null.
///
/// # Safety
/// `points` must be null or a pointer obtained from a points constructor
/// that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn bg_points_free(points: *mut BgPointSet) {
    if !points.is_null() {
        drop(Box::from_raw(points));
    }
}

/// Computes the weighted inner product of the degree-`r` and degree-`s`
/// members. `node_count = 0` selects the accuracy-matched default rule.
///
/// # Safety
/// `params` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bg_inner_product(
    r: u32,
    s: u32,
    params: *const BgParamPair,
    node_count: usize,
    out: *mut f64,
) -> BgStatus {
    guarded(|| {
        let p = match params_ref(params) {
            Ok(p) => p,
            Err(status) => return status,
        };
        let mut spec = QuadratureSpec::default_for(r, s);
        if node_count > 0 {
            spec.node_count = node_count;
        }
        match inner_product(r, s, p, &spec) {
            Ok(v) => write_f64(out, v, "out"),
            Err(e) => fail(&e),
        }
    })
}

/// Evaluates the Lebesgue function of the node set at `x`.
///
/// # Safety
/// `points` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bg_lebesgue_function(
    points: *const BgPointSet,
    x: f64,
    out: *mut f64,
) -> BgStatus {
    guarded(|| {
        let set = match points_ref(points) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match lebesgue_function(set, x) {
            Ok(v) => write_f64(out, v, "out"),
            Err(e) => fail(&e),
        }
    })
}

/// Computes the Lebesgue constant of the node set by a scanned grid plus
/// local refinement. `grid_size = 0` selects the default resolution. The
/// maximizing abscissa is written to `*out_argmax` (may be null if not
/// wanted).
///
/// # Safety
/// `points` must be a live handle and `out_constant` writable;
/// `out_argmax` must be writable when non-null.
#[no_mangle]
pub unsafe extern "C" fn bg_lebesgue_constant(
    points: *const BgPointSet,
    grid_size: usize,
    out_constant: *mut f64,
    out_argmax: *mut f64,
) -> BgStatus {
    guarded(|| {
        let set = match points_ref(points) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let grid = if grid_size == 0 {
            default_grid_size(set.len())
        } else {
            grid_size
        };
        match lebesgue_constant(set, grid) {
            Ok(report) => {
                let status = write_f64(out_constant, report.constant, "out_constant");
                if status != BgStatus::Ok {
                    return status;
                }
                if !out_argmax.is_null() {
                    out_argmax.write(report.argmax);
                }
                BgStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Writes the symmetric-trim threshold `4 / (pi n^2 (2 + pi ln(n + 1)))`
/// below which the endpoint family keeps logarithmic Lebesgue growth.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bg_log_growth_threshold(n: usize, out: *mut f64) -> BgStatus {
    guarded(|| match log_growth_threshold(n) {
        Ok(v) => write_f64(out, v, "out"),
        Err(e) => fail(&e),
    })
}

/// Searches `[0, 1/n]` for the one-sided trim whose endpoint family of
/// `n` points minimizes the Lebesgue constant. Writes the trim to
/// `*out_param` and the constant to `*out_constant`.
///
/// # Safety
/// Both out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn bg_optimal_beta(
    n: usize,
    tol: f64,
    out_param: *mut f64,
    out_constant: *mut f64,
) -> BgStatus {
    guarded(|| match find_optimal_beta(n, tol) {
        Ok((param, constant)) => {
            let status = write_f64(out_param, param, "out_param");
            if status != BgStatus::Ok {
                return status;
            }
            write_f64(out_constant, constant, "out_constant")
        }
        Err(e) => fail(&e),
    })
}

/// Searches `[0, 1/(n+1)]` for the symmetric trim whose endpoint family of
/// `n` points minimizes the Lebesgue constant. Writes the trim to
/// `*out_param` and the constant to `*out_constant`.
///
/// # Safety
/// Both out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn bg_optimal_delta(
    n: usize,
    tol: f64,
    out_param: *mut f64,
    out_constant: *mut f64,
) -> BgStatus {
    guarded(|| match find_optimal_delta(n, tol) {
        Ok((param, constant)) => {
            let status = write_f64(out_param, param, "out_param");
            if status != BgStatus::Ok {
                return status;
            }
            write_f64(out_constant, constant, "out_constant")
        }
        Err(e) => fail(&e),
    })
}
