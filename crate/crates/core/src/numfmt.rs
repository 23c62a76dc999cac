//! Fixed-precision float rendering for reproducible output.

/// Significant digits kept in serialised output.
pub const SIGNIFICANT_DIGITS: usize = 15;

/// Rounds to 15 significant digits; non-finite values pass through. Negative
/// zero becomes positive zero.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    if x == 0.0 {
        return 0.0;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses")
}

/// Text form of `round_sig(x)`, rendered exactly as in JSON output.
pub fn fmt_sig(x: f64) -> String {
    serde_json::to_string(&round_sig(x)).expect("f64 serialises")
}

pub fn round_all(values: &[f64]) -> Vec<f64> {
    values.iter().copied().map(round_sig).collect()
}
