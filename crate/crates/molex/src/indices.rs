//! Degree-based topological indices.
//!
//! Every descriptor here is an edge sum of a weight depending only on the
//! endpoint degrees, so each index can be evaluated either directly over
//! the edge list or from an [`EdgeCensus`]. The named indices reduce to
//! the parametric families: the first Zagreb index is the general
//! sum-connectivity index at exponent 1, the harmonic index is twice the
//! value at -1, the hyper-Zagreb index is the value at 2, the Platt index
//! is the general Platt index at 1, and the reformulated first Zagreb
//! index is the general Platt index at 2.

use crate::graph::{EdgeCensus, MolecularGraph, ALL_PAIRS};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IndexError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("undefined term: negative power of zero on a ({0},{1}) edge")]
    UndefinedTerm(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum IndexKind {
    /// Sum over edges of `(d_u + d_v)^alpha`.
    GeneralSumConnectivity,
    /// Sum over edges of `(d_u + d_v - 2)^alpha`.
    GeneralPlatt,
    /// Sum over edges of `(2 sqrt(d_u d_v) / (d_u + d_v))^k`.
    Oga,
    FirstZagreb,
    Platt,
    Harmonic,
    SumConnectivity,
    Randic,
    HyperZagreb,
    ReformulatedZagreb,
}

impl IndexKind {
    pub fn takes_parameter(self) -> bool {
        matches!(
            self,
            IndexKind::GeneralSumConnectivity | IndexKind::GeneralPlatt | IndexKind::Oga
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            IndexKind::GeneralSumConnectivity => "chi",
            IndexKind::GeneralPlatt => "platt-general",
            IndexKind::Oga => "oga",
            IndexKind::FirstZagreb => "zagreb1",
            IndexKind::Platt => "platt",
            IndexKind::Harmonic => "harmonic",
            IndexKind::SumConnectivity => "sum-connectivity",
            IndexKind::Randic => "randic",
            IndexKind::HyperZagreb => "hyper-zagreb",
            IndexKind::ReformulatedZagreb => "reformulated-zagreb",
        }
    }
}

/// A fully specified index: a kind plus its parameter, when it takes one.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct IndexSpec {
    kind: IndexKind,
    parameter: Option<f64>,
}

impl IndexSpec {
    pub fn new(kind: IndexKind, parameter: Option<f64>) -> Result<Self, IndexError> {
        match (kind, parameter) {
            (IndexKind::GeneralSumConnectivity | IndexKind::GeneralPlatt, Some(a)) => {
                if a == 0.0 || !a.is_finite() {
                    Err(IndexError::InvalidParameter(
                        "exponent must be a non-zero real number".into(),
                    ))
                } else {
                    Ok(IndexSpec {
                        kind,
                        parameter: Some(a),
                    })
                }
            }
            (IndexKind::Oga, Some(k)) => {
                if k > 0.0 && k.is_finite() {
                    Ok(IndexSpec {
                        kind,
                        parameter: Some(k),
                    })
                } else {
                    Err(IndexError::InvalidParameter(
                        "k must be a positive real number".into(),
                    ))
                }
            }
            (k, Some(_)) => Err(IndexError::InvalidParameter(format!(
                "index `{}` takes no parameter",
                k.name()
            ))),
            (k, None) if k.takes_parameter() => Err(IndexError::InvalidParameter(format!(
                "index `{}` requires a parameter",
                k.name()
            ))),
            (kind, None) => Ok(IndexSpec {
                kind,
                parameter: None,
            }),
        }
    }

    pub fn chi(alpha: f64) -> Result<Self, IndexError> {
        Self::new(IndexKind::GeneralSumConnectivity, Some(alpha))
    }

    pub fn general_platt(alpha: f64) -> Result<Self, IndexError> {
        Self::new(IndexKind::GeneralPlatt, Some(alpha))
    }

    pub fn oga(k: f64) -> Result<Self, IndexError> {
        Self::new(IndexKind::Oga, Some(k))
    }

    pub fn named(kind: IndexKind) -> Result<Self, IndexError> {
        Self::new(kind, None)
    }

    pub fn kind(&self) -> IndexKind {
        self.kind
    }

    pub fn parameter(&self) -> Option<f64> {
        self.parameter
    }

    /// Weight contributed by an edge whose endpoints have degrees
    /// `du`, `dv`.
    pub fn edge_weight(&self, du: usize, dv: usize) -> Result<f64, IndexError> {
        let s = (du + dv) as f64;
        let value = match self.kind {
            IndexKind::GeneralSumConnectivity => s.powf(self.parameter.unwrap()),
            IndexKind::GeneralPlatt => {
                let alpha = self.parameter.unwrap();
                if du + dv == 2 && alpha < 0.0 {
                    return Err(IndexError::UndefinedTerm(du, dv));
                }
                (s - 2.0).powf(alpha)
            }
            IndexKind::Oga => {
                let k = self.parameter.unwrap();
                (2.0 * ((du * dv) as f64).sqrt() / s).powf(k)
            }
            IndexKind::FirstZagreb => s,
            IndexKind::Platt => s - 2.0,
            IndexKind::Harmonic => 2.0 / s,
            IndexKind::SumConnectivity => 1.0 / s.sqrt(),
            IndexKind::Randic => 1.0 / ((du * dv) as f64).sqrt(),
            IndexKind::HyperZagreb => s * s,
            IndexKind::ReformulatedZagreb => (s - 2.0) * (s - 2.0),
        };
        Ok(value)
    }
}

/// Direct edge-by-edge evaluation.
pub fn evaluate(g: &MolecularGraph, spec: &IndexSpec) -> Result<f64, IndexError> {
    let mut total = 0.0;
    for (u, v) in g.edges() {
        total += spec.edge_weight(g.degree(u), g.degree(v))?;
    }
    Ok(total)
}

/// Evaluation from an edge census: the sum of `x_{i,j} * w(i, j)`.
pub fn evaluate_from_census(census: &EdgeCensus, spec: &IndexSpec) -> Result<f64, IndexError> {
    let mut total = 0.0;
    for (i, j) in ALL_PAIRS {
        let count = census.x(i, j);
        if count > 0 {
            total += count as f64 * spec.edge_weight(i, j)?;
        }
    }
    Ok(total)
}

/// Exact integer evaluation for the integer-valued kinds; `None` for
/// kinds that are not integer-valued. Used to cross-check the floating
/// path.
pub fn evaluate_exact(g: &MolecularGraph, kind: IndexKind) -> Option<i64> {
    let weight = |s: i64| -> Option<i64> {
        match kind {
            IndexKind::FirstZagreb => Some(s),
            IndexKind::Platt => Some(s - 2),
            IndexKind::HyperZagreb => Some(s * s),
            IndexKind::ReformulatedZagreb => Some((s - 2) * (s - 2)),
            _ => None,
        }
    };
    let mut total = 0i64;
    for (u, v) in g.edges() {
        total += weight((g.degree(u) + g.degree(v)) as i64)?;
    }
    Some(total)
}
