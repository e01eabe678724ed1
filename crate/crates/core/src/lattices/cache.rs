//! Plain-text cache of theta coefficients: one `norm count` line for every
//! norm from 1 up to the largest norm generated, zeros included, so the
//! covered range is the last line.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

use super::theta::theta_coefficients;
use super::LatticeModel;

fn cache_path(dir: &Path, model: &LatticeModel) -> PathBuf {
    dir.join(format!("{}.txt", model.name().to_ascii_lowercase()))
}

fn read_cache(path: &Path) -> Result<Option<Vec<(u64, u128)>>> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let mut it = line.split_whitespace();
        let parsed = (|| {
            Some((
                it.next()?.parse::<u64>().ok()?,
                it.next()?.parse::<u128>().ok()?,
            ))
        })();
        match parsed {
            Some((norm, count)) if norm == i as u64 + 1 && it.next().is_none() => {
                out.push((norm, count))
            }
            // anything unexpected: regenerate
            _ => return Ok(None),
        }
    }
    Ok(Some(out))
}

/// As [`theta_coefficients`], reading `dir/<name>.txt` when it covers
/// `max_norm` and rewriting it otherwise.
pub fn cached_theta_coefficients(
    model: &LatticeModel,
    max_norm: u64,
    dir: &Path,
) -> Result<Vec<(u64, u128)>> {
    let path = cache_path(dir, model);
    if let Some(all) = read_cache(&path)? {
        if all.last().is_some_and(|&(n, _)| n >= max_norm) {
            return Ok(all
                .into_iter()
                .filter(|&(n, c)| n <= max_norm && c > 0)
                .collect());
        }
    }
    let shells = theta_coefficients(model, max_norm)?;
    fs::create_dir_all(dir)?;
    let mut buf = Vec::new();
    let mut it = shells.iter().peekable();
    for norm in 1..=max_norm {
        let count = match it.peek() {
            Some(&&(n, c)) if n == norm => {
                it.next();
                c
            }
            _ => 0,
        };
        writeln!(buf, "{norm} {count}").map_err(|e| Error::Io(e.to_string()))?;
    }
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, &buf)?;
    fs::rename(&tmp, &path)?;
    Ok(shells)
}
