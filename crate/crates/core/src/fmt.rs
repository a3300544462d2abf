//! Significant-digit float rendering shared by the polynomial display and
//! the CLI.

/// Renders `v` with `digits` significant digits, fixed notation where the
/// magnitude allows it, trailing zeros trimmed ("%g"-style).
pub(crate) fn format_significant(v: f64, digits: usize) -> String {
    let s = format_sig_full(v, digits);
    if s.contains('e') || !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// Renders `v` with `digits` significant digits, keeping trailing zeros.
pub(crate) fn format_sig_full(v: f64, digits: usize) -> String {
    debug_assert!(digits >= 1);
    if v == 0.0 || !v.is_finite() {
        return format!("{:.*}", digits - 1, v);
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (_, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("exponent parses");
    if exp >= -4 && exp < digits as i32 {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        format!("{:.*}", decimals, v)
    } else {
        sci
    }
}
