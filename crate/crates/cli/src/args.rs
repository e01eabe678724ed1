//! Flag grammar shared by the subcommands.

use std::f64::consts::{E, PI};

/// A decimal literal or one of `pi`, `4pi/e`, `pi*e`.
pub fn parse_alpha(s: &str) -> Result<f64, String> {
    let v = match s.trim() {
        "pi" => PI,
        "4pi/e" => 4.0 * PI / E,
        "pi*e" => PI * E,
        t => parse_decimal(t)?,
    };
    if v > 0.0 {
        Ok(v)
    } else {
        Err(format!("must be positive, got {s}"))
    }
}

/// A strictly positive decimal literal.
pub fn parse_positive(s: &str) -> Result<f64, String> {
    let v = parse_decimal(s.trim())?;
    if v > 0.0 {
        Ok(v)
    } else {
        Err(format!("must be positive, got {s}"))
    }
}

fn parse_decimal(s: &str) -> Result<f64, String> {
    // f64::from_str also takes "inf" and "nan"; only finite literals are numbers here
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(format!(
            "expected a decimal number or one of pi, 4pi/e, pi*e, got '{s}'"
        )),
    }
}

/// Dimensions requested from `table`, in output order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rows(pub Vec<u32>);

/// Comma-separated dimensions and inclusive ranges, e.g. `1-9,24,100`.
pub fn parse_rows(s: &str) -> Result<Rows, String> {
    let mut out = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        let dim = |t: &str| -> Result<u32, String> {
            match t.trim().parse::<u32>() {
                Ok(n) if n >= 1 => Ok(n),
                _ => Err(format!("'{t}' is not a dimension >= 1")),
            }
        };
        match part.split_once('-') {
            Some((a, b)) => {
                let (a, b) = (dim(a)?, dim(b)?);
                if a > b {
                    return Err(format!("range '{part}' is decreasing"));
                }
                out.extend(a..=b);
            }
            None => out.push(dim(part)?),
        }
    }
    Ok(Rows(out))
}
