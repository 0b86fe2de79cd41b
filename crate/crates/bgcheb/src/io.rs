//! Deterministic text formatting for numeric output.

/// Shortest decimal string that parses back to exactly `v` (at most 17
/// significant digits). Used for CSV and table artifacts so that files are
/// byte-stable across runs and lossless to re-read.
pub fn fmt_f64(v: f64) -> String {
    if v == 0.0 {
        // Fold -0 into 0 so artifacts do not depend on the sign of a zero.
        return "0".to_string();
    }
    format!("{v}")
}

/// `v` rounded to 14 significant digits, then printed in shortest form.
///
/// Used for single-value console output, where a result that is an exact
/// integer or small fraction up to round-off (say `9 - 4ulp`) should read
/// as `9`, not as sixteen digits of noise. File artifacts never use this.
pub fn fmt_f64_rounded(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return fmt_f64(v);
    }
    let rounded: f64 = format!("{v:.13e}")
        .parse()
        .expect("round-trip of our own output");
    fmt_f64(rounded)
}
