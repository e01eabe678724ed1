//! Theta-series coefficients: vector enumeration in low dimension, modular
//! forms for `E_8` and the Leech lattice.

use crate::error::{Error, Result};

use super::LatticeModel;

/// Largest index accepted by [`ramanujan_tau`].
pub const MAX_TAU_INDEX: usize = 64;

fn overflow(what: &str) -> Error {
    Error::Overflow(format!("{what} exceeds 128-bit integers"))
}

/// `σ_k(m) = Σ_{d | m} d^k`.
pub fn divisor_sigma(k: u32, m: u64) -> Result<i128> {
    let mut acc: i128 = 0;
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            let e = m / d;
            acc = acc
                .checked_add(
                    (d as i128)
                        .checked_pow(k)
                        .ok_or_else(|| overflow("divisor power"))?,
                )
                .ok_or_else(|| overflow("divisor sum"))?;
            if e != d {
                acc = acc
                    .checked_add(
                        (e as i128)
                            .checked_pow(k)
                            .ok_or_else(|| overflow("divisor power"))?,
                    )
                    .ok_or_else(|| overflow("divisor sum"))?;
            }
        }
        d += 1;
    }
    Ok(acc)
}

fn mul_truncated(a: &[i128], b: &[i128], len: usize) -> Result<Vec<i128>> {
    let mut out = vec![0i128; len];
    for (i, &x) in a.iter().enumerate().take(len) {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(len - i) {
            let t = x.checked_mul(y).ok_or_else(|| overflow("Δ coefficient"))?;
            out[i + j] = out[i + j]
                .checked_add(t)
                .ok_or_else(|| overflow("Δ coefficient"))?;
        }
    }
    Ok(out)
}

/// `τ(1), ..., τ(m_max)` from `Δ = q ∏ (1 - q^m)^24`.
///
/// `∏ (1 - q^m)` comes from the pentagonal number theorem; the 24th power
/// is `P^16 · P^8` by repeated squaring.
pub fn ramanujan_tau(m_max: usize) -> Result<Vec<i128>> {
    if m_max == 0 || m_max > MAX_TAU_INDEX {
        return Err(Error::domain(format!(
            "tau index must lie in 1..={MAX_TAU_INDEX}, got {m_max}"
        )));
    }
    let len = m_max;
    let mut p = vec![0i128; len];
    // Σ_k (-1)^k q^{k(3k∓1)/2}
    for k in 0i64.. {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let e1 = (k * (3 * k - 1) / 2) as usize;
        if e1 >= len {
            break;
        }
        p[e1] += sign;
        let e2 = (k * (3 * k + 1) / 2) as usize;
        if k > 0 && e2 < len {
            p[e2] += sign;
        }
    }
    let p2 = mul_truncated(&p, &p, len)?;
    let p4 = mul_truncated(&p2, &p2, len)?;
    let p8 = mul_truncated(&p4, &p4, len)?;
    let p16 = mul_truncated(&p8, &p8, len)?;
    mul_truncated(&p16, &p8, len)
}

/// Shells `(norm, count)` with `0 < norm <= max_norm` in the standard
/// presentation, in increasing norm.
pub fn theta_coefficients(model: &LatticeModel, max_norm: u64) -> Result<Vec<(u64, u128)>> {
    let min = model.min_norm();
    if max_norm < min {
        return Err(Error::domain(format!(
            "max_norm {max_norm} is below the minimal norm {min} of {}",
            model.name()
        )));
    }
    let counts = match *model {
        LatticeModel::Zn(n) => integer_lattice_counts(n, max_norm)?,
        LatticeModel::A2 => hexagonal_counts(max_norm),
        LatticeModel::D4 => checkerboard_counts(4, max_norm),
        LatticeModel::E8 => e8_counts(max_norm)?,
        LatticeModel::Leech => leech_counts(max_norm)?,
    };
    Ok(counts
        .into_iter()
        .enumerate()
        .skip(1)
        .filter(|&(_, c)| c > 0)
        .map(|(k, c)| (k as u64, c))
        .collect())
}

/// `r_n(k)` for `k <= max_norm`, by enumerating one coordinate at a time
/// (the count of `Z^n` is the `n`-fold convolution of that of `Z`).
fn integer_lattice_counts(n: u32, max_norm: u64) -> Result<Vec<u128>> {
    let len = max_norm as usize + 1;
    let mut one = vec![0u128; len];
    let mut x = 0u64;
    while x * x <= max_norm {
        one[(x * x) as usize] += if x == 0 { 1 } else { 2 };
        x += 1;
    }
    let mut acc = vec![0u128; len];
    acc[0] = 1;
    for _ in 0..n {
        let mut next = vec![0u128; len];
        for (i, &a) in acc.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in one.iter().enumerate().take(len - i) {
                if b != 0 {
                    next[i + j] = a
                        .checked_mul(b)
                        .and_then(|t| next[i + j].checked_add(t))
                        .ok_or_else(|| overflow("Z^n count"))?;
                }
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// `A_2` with Gram matrix `[[2,1],[1,2]]`: norm `2(i^2 + ij + j^2)`.
fn hexagonal_counts(max_norm: u64) -> Vec<u128> {
    let mut out = vec![0u128; max_norm as usize + 1];
    // 2(i^2+ij+j^2) >= 1.5 max(i^2, j^2)
    let b = ((max_norm as f64 / 1.5).sqrt() as i64) + 1;
    for i in -b..=b {
        for j in -b..=b {
            let norm = 2 * (i * i + i * j + j * j);
            if norm as u64 <= max_norm {
                out[norm as usize] += 1;
            }
        }
    }
    out
}

/// `D_n = {x in Z^n : Σ x_i even}`, by recursive enumeration.
fn checkerboard_counts(n: u32, max_norm: u64) -> Vec<u128> {
    fn walk(left: u32, norm: u64, parity: i64, max_norm: u64, out: &mut [u128]) {
        if left == 0 {
            if parity % 2 == 0 {
                out[norm as usize] += 1;
            }
            return;
        }
        let b = ((max_norm - norm) as f64).sqrt() as i64;
        for x in -b..=b {
            let nn = norm + (x * x) as u64;
            if nn <= max_norm {
                walk(left - 1, nn, parity + x.rem_euclid(2), max_norm, out);
            }
        }
    }
    let mut out = vec![0u128; max_norm as usize + 1];
    walk(n, 0, 0, max_norm, &mut out);
    out
}

/// `N(2m) = 240 σ_3(m)`.
fn e8_counts(max_norm: u64) -> Result<Vec<u128>> {
    let mut out = vec![0u128; max_norm as usize + 1];
    out[0] = 1;
    for m in 1..=max_norm / 2 {
        out[2 * m as usize] = (240 * divisor_sigma(3, m)?) as u128;
    }
    Ok(out)
}

/// `E_8 = D_8 ∪ (D_8 + (1/2)^8)`, enumerated directly. Norms are exact
/// because the coset is handled in doubled coordinates.
pub fn e8_counts_by_enumeration(max_norm: u64) -> Vec<u128> {
    let mut out = checkerboard_counts(8, max_norm);
    // y = 2x with odd entries, Σ (y_i - 1)/2 even, norm Σ y_i^2 / 4
    fn walk(left: u32, norm4: u64, parity: i64, max4: u64, out: &mut [u128]) {
        if left == 0 {
            if parity % 2 == 0 {
                out[(norm4 / 4) as usize] += 1;
            }
            return;
        }
        let mut y = 1i64;
        while norm4 + (y * y) as u64 <= max4 {
            let nn = norm4 + (y * y) as u64;
            walk(
                left - 1,
                nn,
                parity + ((y - 1) / 2).rem_euclid(2),
                max4,
                out,
            );
            walk(
                left - 1,
                nn,
                parity + ((-y - 1) / 2).rem_euclid(2),
                max4,
                out,
            );
            y += 2;
        }
    }
    walk(8, 0, 0, 4 * max_norm, &mut out);
    out
}

/// `N(2m) = (65520/691)(σ_11(m) - τ(m))`.
fn leech_counts(max_norm: u64) -> Result<Vec<u128>> {
    let m_max = (max_norm / 2) as usize;
    let mut out = vec![0u128; max_norm as usize + 1];
    out[0] = 1;
    if m_max == 0 {
        return Ok(out);
    }
    let tau = ramanujan_tau(m_max)?;
    for m in 1..=m_max {
        let num = (divisor_sigma(11, m as u64)? - tau[m - 1])
            .checked_mul(65520)
            .ok_or_else(|| overflow("Leech count"))?;
        assert!(
            num % 691 == 0,
            "Leech theta coefficient at norm {} is not integral",
            2 * m
        );
        out[2 * m] = u128::try_from(num / 691).map_err(|_| overflow("Leech count"))?;
    }
    Ok(out)
}
