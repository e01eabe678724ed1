//! Hermite interpolation in the product basis `∏_{j>k} (1 - u/u_j)`.
//!
//! With the nodes taken in reverse order `t = (u_M, ..., u_1)`, the Newton
//! form of the interpolant is `Σ_m f[t_0..t_m] ∏_{l<m} (u - t_l)`, and
//! `∏_{l<m} (u - t_l) = ∏_{l<m} (-t_l) · ∏_{l<m} (1 - u/t_l)`. The table is
//! therefore built directly on the scaled entries
//!
//! `S(i, m) = f[t_i..t_{i+m}] · ∏_{l=i}^{i+m-1} (-t_l)`,
//!
//! which obey
//!
//! `S(i, m) = ((-t_i) S(i+1, m-1) - (-t_{i+m-1}) S(i, m-1)) / (t_{i+m} - t_i)`.
//!
//! For an absolutely monotonic `f` and nonpositive nodes every `S(i, m)` is a
//! product-basis coefficient of an interpolant of `f` and so lies in
//! `[0, f(0)]`: nothing overflows, and the raw divided differences (which
//! underflow long before `M = 400`) never appear.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Coefficients `H_1..H_M` of `p(u) = Σ_k H_k ∏_{j=k+1}^{M} (1 - u/u_j)`
/// for the Hermite interpolant of `f` at `u_1, ..., u_M`.
///
/// Equal nodes must be adjacent and appear at most twice; a repeated node
/// uses `df`. Nodes must be nonzero.
pub fn product_basis_coefficients<T, F, D>(nodes: &[T], f: F, df: D) -> Result<Vec<T>>
where
    T: Real,
    F: Fn(T) -> T,
    D: Fn(T) -> T,
{
    let m_total = nodes.len();
    if m_total == 0 {
        return Err(Error::domain("no interpolation nodes"));
    }
    if nodes.iter().any(|&u| u == T::zero()) {
        return Err(Error::domain("interpolation nodes must be nonzero"));
    }
    let t: Vec<T> = nodes.iter().rev().copied().collect();
    let mut col: Vec<T> = t.iter().map(|&x| f(x)).collect();
    // coeffs[m] = S(0, m) = H_{M-m}
    let mut coeffs = Vec::with_capacity(m_total);
    coeffs.push(col[0]);
    for m in 1..m_total {
        let mut next = Vec::with_capacity(m_total - m);
        for i in 0..m_total - m {
            let gap = t[i + m] - t[i];
            let v = if gap == T::zero() {
                if m > 1 {
                    return Err(Error::domain("a node is repeated more than twice"));
                }
                df(t[i]) * (-t[i])
            } else {
                ((-t[i]) * col[i + 1] - (-t[i + m - 1]) * col[i]) / gap
            };
            next.push(v);
        }
        col = next;
        coeffs.push(col[0]);
    }
    coeffs.reverse();
    Ok(coeffs)
}

/// `Σ_k H_k ∏_{j=k+1}^{M} (1 - u/u_j)` by nested multiplication.
pub fn eval_product_basis<T: Real>(coeffs: &[T], nodes: &[T], u: T) -> T {
    let mut s = coeffs[0];
    for k in 1..coeffs.len() {
        s = coeffs[k] + (T::one() - u / nodes[k]) * s;
    }
    s
}

/// Value and `u`-derivative of [`eval_product_basis`].
pub fn eval_product_basis_with_derivative<T: Real>(coeffs: &[T], nodes: &[T], u: T) -> (T, T) {
    let mut s = coeffs[0];
    let mut ds = T::zero();
    for k in 1..coeffs.len() {
        let w = T::one() - u / nodes[k];
        ds = w * ds - s / nodes[k];
        s = coeffs[k] + w * s;
    }
    (s, ds)
}
