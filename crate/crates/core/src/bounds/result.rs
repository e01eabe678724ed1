use std::fmt;

use super::params::BoundParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    MainLower,
    Expectation,
    CondExpectation,
    TruncatedExpectation,
    DualCap,
    InvpowUpper,
    InvpowLower,
    AsymptoticRate,
    LpAux,
    LatticeEnergy,
}

impl BoundKind {
    pub fn label(self) -> &'static str {
        match self {
            BoundKind::MainLower => "main_lower",
            BoundKind::Expectation => "expectation",
            BoundKind::CondExpectation => "cond_expectation",
            BoundKind::TruncatedExpectation => "truncated_expectation",
            BoundKind::DualCap => "dual_cap",
            BoundKind::InvpowUpper => "invpow_upper",
            BoundKind::InvpowLower => "invpow_lower",
            BoundKind::AsymptoticRate => "asymptotic_rate",
            BoundKind::LpAux => "lp_aux",
            BoundKind::LatticeEnergy => "lattice_energy",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A computed bound.
///
/// `log_value` is authoritative; `value` is its exponential and may be
/// `0` or `inf` when that is not representable.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundResult {
    pub kind: BoundKind,
    pub value: f64,
    pub log_value: f64,
    pub terms_used: usize,
    pub tail_bound: f64,
    /// `None` for the inverse-power bounds, which have no Gaussian steepness.
    pub params: Option<BoundParams>,
    pub n: u32,
    pub rho: f64,
    pub notes: Vec<String>,
}

impl BoundResult {
    pub(crate) fn closed_form(kind: BoundKind, params: BoundParams, log_value: f64) -> Self {
        BoundResult {
            kind,
            value: log_value.exp(),
            log_value,
            terms_used: 0,
            tail_bound: 0.0,
            params: Some(params),
            n: params.n,
            rho: params.rho,
            notes: Vec::new(),
        }
    }

    pub fn alpha(&self) -> Option<f64> {
        self.params.map(|p| p.alpha)
    }

    pub(crate) fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }
}
