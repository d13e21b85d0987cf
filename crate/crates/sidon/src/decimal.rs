//! Presentation-layer decimal rendering: 12 significant digits, rounded
//! half-to-even, computed exactly from the rational value so output is
//! identical across platforms. Floats are converted to their exact binary
//! rational first, so both paths share one rounding implementation.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Significant digits used everywhere a decimal column is rendered.
pub const SIGNIFICANT_DIGITS: u32 = 12;

/// Render an exact rational with [`SIGNIFICANT_DIGITS`] significant digits,
/// half-to-even, trailing zeros trimmed. Falls back to scientific notation
/// outside the exponent range a plain decimal can express faithfully.
pub fn decimal_of_rational(r: &BigRational) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    let num = r.numer().magnitude().clone();
    let den = r.denom().magnitude().clone();
    let (digits, exponent) = significant_digits(&num, &den, SIGNIFICANT_DIGITS);
    format!("{sign}{}", render(&digits, exponent))
}

/// Render a float by converting its exact binary value to a rational. Only
/// finite values have a decimal form; infinities and NaN render as names.
pub fn decimal_of_f64(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".to_string() } else { "-inf".to_string() };
    }
    if x == 0.0 {
        return "0".to_string();
    }
    decimal_of_rational(&BigRational::from_float(x).expect("finite float"))
}

/// First `sig` decimal digits of `num/den > 0` with the decimal exponent `e`
/// such that the value is `0.digits * 10^(e+1)`.
fn significant_digits(num: &BigUint, den: &BigUint, sig: u32) -> (String, i64) {
    let ten = BigUint::from(10u32);
    // e = floor(log10(num/den))
    let mut e: i64;
    if num >= den {
        e = -1;
        let mut scaled = den.clone();
        while &scaled <= num {
            scaled *= &ten;
            e += 1;
        }
    } else {
        e = 0;
        let mut scaled = num.clone();
        while &scaled < den {
            scaled *= &ten;
            e -= 1;
        }
    }
    // round num/den * 10^(sig-1-e) half-to-even
    let shift = i64::from(sig) - 1 - e;
    let (n, d) = if shift >= 0 {
        (num * ten.pow(shift as u32), den.clone())
    } else {
        (num.clone(), den * ten.pow((-shift) as u32))
    };
    let mut q = &n / &d;
    let rem = &n % &d;
    let twice = &rem * 2u32;
    let round_up = match twice.cmp(&d) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => (&q % 2u32) == BigUint::from(1u32),
    };
    if round_up {
        q += 1u32;
    }
    let mut digits = q.to_string();
    if digits.len() as u32 > sig {
        // all-nines carried into one more digit
        digits.truncate(sig as usize);
        e += 1;
    }
    (digits, e)
}

fn render(digits: &str, e: i64) -> String {
    let sig = digits.len() as i64;
    if e >= 0 && e < sig {
        let split = (e + 1) as usize;
        let int_part = &digits[..split];
        let frac = digits[split..].trim_end_matches('0');
        if frac.is_empty() {
            int_part.to_string()
        } else {
            format!("{int_part}.{frac}")
        }
    } else if (-4..0).contains(&e) {
        let frac = digits.trim_end_matches('0');
        format!("0.{}{}", "0".repeat((-e - 1) as usize), frac)
    } else {
        let rest = digits[1..].trim_end_matches('0');
        if rest.is_empty() {
            format!("{}e{e}", &digits[..1])
        } else {
            format!("{}.{rest}e{e}", &digits[..1])
        }
    }
}

/// Exact decimal rendering of a big rational's numerator/denominator pair is
/// sometimes needed alongside the rounded form; expose the rounded value as
/// f64 for plotting convenience (lossy, display only).
pub fn approx_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn trims_exact_values() {
        assert_eq!(decimal_of_rational(&rat(169, 250)), "0.676");
        assert_eq!(decimal_of_rational(&rat(1, 2)), "0.5");
        assert_eq!(decimal_of_rational(&rat(-1, 2)), "-0.5");
        assert_eq!(decimal_of_rational(&rat(250, 2)), "125");
        assert_eq!(decimal_of_rational(&rat(0, 5)), "0");
        assert_eq!(decimal_of_rational(&rat(936, 1000)), "0.936");
    }

    #[test]
    fn twelve_digit_rounding() {
        assert_eq!(decimal_of_rational(&rat(1, 3)), "0.333333333333");
        assert_eq!(decimal_of_rational(&rat(2, 3)), "0.666666666667");
        assert_eq!(decimal_of_rational(&rat(2984, 4845)), "0.61589370485");
    }

    #[test]
    fn ties_round_to_even() {
        // 1.000000000005 (tie, last kept digit even): stays down
        assert_eq!(
            decimal_of_rational(&rat(1_000_000_000_005, 1_000_000_000_000)),
            "1"
        );
        // 1.000000000015 (tie, last kept digit odd): bumps up to even
        assert_eq!(
            decimal_of_rational(&rat(1_000_000_000_015, 1_000_000_000_000)),
            "1.00000000002"
        );
        // all nines carry into the next power of ten
        assert_eq!(
            decimal_of_rational(&rat(999_999_999_999_5, 1_000_000_000_000_0)),
            "1"
        );
    }

    #[test]
    fn exponent_ranges() {
        assert_eq!(decimal_of_rational(&rat(1, 10_000)), "0.0001");
        assert_eq!(decimal_of_rational(&rat(1, 100_000)), "1e-5");
        assert_eq!(decimal_of_rational(&rat(123, 100_000)), "0.00123");
        assert_eq!(decimal_of_rational(&rat(123, 100_000_000)), "1.23e-6");
        let big = BigRational::from(BigInt::from(12_345_678_901_234_567i64));
        assert_eq!(decimal_of_rational(&big), "1.23456789012e16");
        let big = BigRational::from(BigInt::from(100_000_000_000_000i64));
        assert_eq!(decimal_of_rational(&big), "1e14");
        assert_eq!(decimal_of_rational(&rat(123_456_789_012, 1)), "123456789012");
    }

    #[test]
    fn floats_render_from_exact_binary_value() {
        assert_eq!(decimal_of_f64(0.0), "0");
        assert_eq!(decimal_of_f64(1.0), "1");
        assert_eq!(decimal_of_f64(0.5), "0.5");
        // not exactly representable; 12 significant digits of the binary
        // value collapse back to the short forms
        assert_eq!(decimal_of_f64(0.1), "0.1");
        assert_eq!(decimal_of_f64(0.9968), "0.9968");
        assert_eq!(decimal_of_f64(0.737856), "0.737856");
        assert_eq!(decimal_of_f64(-2.5), "-2.5");
        assert_eq!(decimal_of_f64(f64::INFINITY), "inf");
        assert_eq!(decimal_of_f64(f64::NEG_INFINITY), "-inf");
        assert_eq!(decimal_of_f64(f64::NAN), "nan");
    }

    #[test]
    fn approx_is_close() {
        assert!((approx_f64(&rat(1, 3)) - 1.0 / 3.0).abs() < 1e-15);
    }
}
