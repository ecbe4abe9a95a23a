//! Decimal output with 15 significant digits and exact `"p/q"` companions.

use num_complex::Complex64;
use serde_json::{json, Value};
use sjf_exact::rational::{to_pq, Rational};

const DIGITS: usize = 15;

/// `x` rounded to 15 significant digits, plain for moderate exponents and
/// scientific otherwise, with trailing zeros removed.
pub fn sig(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent digits");
    if (-5..15).contains(&exp) {
        let decimals = (DIGITS as i32 - 1 - exp).max(0) as usize;
        trim(&format!("{:.*}", decimals, x))
    } else {
        format!("{}e{}", trim(mantissa), exp)
    }
}

fn trim(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

pub fn complex(z: Complex64) -> Value {
    json!({ "re": sig(z.re), "im": sig(z.im) })
}

/// A rational as decimal plus its exact value.
pub fn rational(x: &Rational) -> Value {
    json!({ "decimal": sig(sjf_exact::rational::to_f64(x)), "exact": to_pq(x) })
}

/// A real number that is known to equal the rational `exact`.
pub fn real_with_exact(x: f64, exact: &Rational) -> Value {
    json!({ "decimal": sig(x), "exact": to_pq(exact) })
}
