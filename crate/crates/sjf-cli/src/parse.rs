//! Inline argument syntax: rationals `p/q`, matrices `a,b;c,d`, complex
//! numbers `a+bi`.

use crate::error::CliError;
use num_complex::Complex64;
use sjf_exact::rational::{parse as parse_rational, Rational};
use sjf_exact::RatMatrix;
use std::path::Path;

pub fn rational(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|_| CliError::usage(format!("cannot parse {s:?} as p/q"), "rational syntax p/q"))
}

/// Rows separated by `;`, entries by `,`.
pub fn matrix(s: &str) -> Result<RatMatrix, CliError> {
    let rows: Vec<Vec<Rational>> = s.split(';').map(|row| row.split(',').map(rational).collect::<Result<_, _>>()).collect::<Result<_, _>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    if cols == 0 || rows.iter().any(|r| r.len() != cols) {
        return Err(CliError::usage(format!("ragged or empty matrix {s:?}"), "rectangular matrix a,b;c,d"));
    }
    Ok(RatMatrix::from_rows(rows))
}

/// A matrix given inline or as a file holding either the inline syntax or
/// a JSON array of rows of `"p/q"` strings.
pub fn matrix_arg(s: &str) -> Result<RatMatrix, CliError> {
    let path = Path::new(s);
    if !path.is_file() {
        return matrix(s);
    }
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    match serde_json::from_str::<Vec<Vec<String>>>(&text) {
        Ok(rows) => {
            let joined: Vec<String> = rows.iter().map(|r| r.join(",")).collect();
            matrix(&joined.join(";"))
        }
        Err(_) => matrix(text.trim()),
    }
}

/// `a+bi`, `a-bi`, `bi`, `a`, with optional exponents.
pub fn complex(s: &str) -> Result<Complex64, CliError> {
    let err = || CliError::usage(format!("cannot parse {s:?} as a complex number"), "complex syntax a+bi");
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(err());
    }
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|x| Complex64::new(x, 0.0)).map_err(|_| err());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len()).rev().find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse::<f64>().map_err(|_| err())?,
    };
    let re = if re.is_empty() { 0.0 } else { re.parse::<f64>().map_err(|_| err())? };
    Ok(Complex64::new(re, im))
}

/// `RE,IM` or `RE`.
pub fn pair(s: &str) -> Result<Complex64, CliError> {
    let err = || CliError::usage(format!("cannot parse {s:?} as RE,IM"), "complex syntax RE,IM");
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |x: &str| x.parse::<f64>().map_err(|_| err());
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(err()),
    }
}

/// Comma-separated complex numbers.
pub fn complex_list(s: &str) -> Result<Vec<Complex64>, CliError> {
    s.split(',').map(complex).collect()
}
