//! Canonical decimal formatting for persisted numeric fields.
//!
//! Table cells are written as plain decimal text rounded to 9 significant
//! digits, with trailing zeros stripped. Reload-then-rewrite is therefore
//! byte-stable: parsing a formatted value and formatting it again yields the
//! identical string.

/// Formats `x` as decimal text with at most 9 significant digits.
pub fn fmt_sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    debug_assert!(x.is_finite(), "non-finite value in table output");
    if !x.is_finite() {
        return "0".to_string();
    }
    // "d.ddddddddEe" with 9 significant mantissa digits.
    let sci = format!("{:.8e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent in sci notation");
    let exp: i32 = exp.parse().expect("numeric exponent");
    let neg = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let digits = digits.trim_end_matches('0');
    if digits.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if exp >= 0 {
        let int_len = exp as usize + 1;
        if digits.len() <= int_len {
            out.push_str(digits);
            for _ in digits.len()..int_len {
                out.push('0');
            }
        } else {
            out.push_str(&digits[..int_len]);
            out.push('.');
            out.push_str(&digits[int_len..]);
        }
    } else {
        out.push_str("0.");
        for _ in 0..(-exp as usize - 1) {
            out.push('0');
        }
        out.push_str(digits);
    }
    out
}

/// Parses a value previously written by [`fmt_sig9`].
pub fn parse_num(s: &str) -> Result<f64, String> {
    s.trim().parse::<f64>().map_err(|e| format!("bad number {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn plain_values() {
        assert_eq!(fmt_sig9(0.0), "0");
        assert_eq!(fmt_sig9(-0.0), "0");
        assert_eq!(fmt_sig9(1.0), "1");
        assert_eq!(fmt_sig9(173.0), "173");
        assert_eq!(fmt_sig9(0.5), "0.5");
        assert_eq!(fmt_sig9(-2.25), "-2.25");
        assert_eq!(fmt_sig9(1.0 / 3.0), "0.333333333");
        assert_eq!(fmt_sig9(1e-4), "0.0001");
        assert_eq!(fmt_sig9(1234567891.0), "1234567890");
    }

    #[test]
    fn nine_significant_digits() {
        assert_eq!(fmt_sig9(0.123456789123), "0.123456789");
        assert_eq!(fmt_sig9(987654321.123), "987654321");
    }

    proptest! {
        #[test]
        fn rewrite_is_stable(x in -1.0e9f64..1.0e9) {
            let once = fmt_sig9(x);
            let back = parse_num(&once).unwrap();
            let twice = fmt_sig9(back);
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn small_magnitudes_stable(x in -1.0f64..1.0) {
            let once = fmt_sig9(x);
            let back = parse_num(&once).unwrap();
            prop_assert_eq!(fmt_sig9(back), once);
        }
    }
}
