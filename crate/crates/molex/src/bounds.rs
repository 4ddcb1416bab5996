//! Closed-form sharp bounds in terms of `(n, m)`, the residue-refined
//! corrections, the census conditions characterizing equality, and the
//! per-graph verdict combining them.

use crate::formats::to_graph6;
use crate::graph::MolecularGraph;
use crate::indices::evaluate;
use crate::reduction::{coefficient, leading_term, Variant};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundError {
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Direction {
    Lower,
    Upper,
}

/// Parameter regime selecting which refined bound applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Regime {
    /// Chi/Platt exponent in `[-1, 0)`: lower bounds.
    NegAlpha,
    /// Chi/Platt exponent in `(0, 1)`: upper bounds.
    MidAlpha,
    /// Chi/Platt exponent in `(1, 2]`: upper bounds.
    HighAlpha,
    /// Geometric-arithmetic exponent in `(0, 1]`: lower bounds.
    OgaK,
}

/// One fully resolved bound case: family, parameter, `(m + n) mod 3`
/// residue, regime, and bound direction.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct BoundCase {
    pub variant: Variant,
    pub parameter: f64,
    pub residue: u8,
    pub regime: Regime,
    pub direction: Direction,
}

impl BoundCase {
    pub fn new(variant: Variant, parameter: f64, residue: u8) -> Result<Self, BoundError> {
        if residue > 2 {
            return Err(BoundError::DomainError(format!(
                "residue {residue} not in 0..=2"
            )));
        }
        let regime = match variant {
            Variant::Chi | Variant::Platt => {
                if (-1.0..0.0).contains(&parameter) {
                    Regime::NegAlpha
                } else if parameter > 0.0 && parameter < 1.0 {
                    Regime::MidAlpha
                } else if parameter == 1.0 {
                    return Err(BoundError::UnsupportedCase(format!(
                        "{} exponent 1 is excluded from the refined bounds; use the \
                         first-Zagreb specialization instead",
                        variant.name()
                    )));
                } else if parameter > 1.0 && parameter <= 2.0 {
                    Regime::HighAlpha
                } else {
                    return Err(BoundError::DomainError(format!(
                        "exponent {parameter} outside [-1, 0) u (0, 2]"
                    )));
                }
            }
            Variant::Oga => {
                if parameter > 0.0 && parameter <= 1.0 {
                    Regime::OgaK
                } else {
                    return Err(BoundError::DomainError(format!(
                        "k = {parameter} outside (0, 1]"
                    )));
                }
            }
        };
        let direction = match regime {
            Regime::NegAlpha | Regime::OgaK => Direction::Lower,
            Regime::MidAlpha | Regime::HighAlpha => Direction::Upper,
        };
        Ok(BoundCase {
            variant,
            parameter,
            residue,
            regime,
            direction,
        })
    }

    /// The three residue cases for one `(variant, parameter)`.
    pub fn all_residues(variant: Variant, parameter: f64) -> Result<Vec<Self>, BoundError> {
        (0..3).map(|r| Self::new(variant, parameter, r)).collect()
    }
}

/// Bound ignoring the residue class: valid for every molecular
/// `(n, m)`-graph with `n >= 5`, sharp exactly when no vertex has degree
/// 2 or 3. Lower bound for the negative-exponent and geometric-arithmetic
/// regimes, upper bound otherwise. Unlike the refined bounds, exponent 1
/// is admissible here.
pub fn base_bound(
    variant: Variant,
    n: usize,
    m: usize,
    p: f64,
) -> Result<(f64, Direction), BoundError> {
    if n < 5 {
        return Err(BoundError::DomainError(format!("n = {n} < 5")));
    }
    let direction = match variant {
        Variant::Chi | Variant::Platt => {
            if (-1.0..0.0).contains(&p) {
                Direction::Lower
            } else if p > 0.0 && p <= 2.0 {
                Direction::Upper
            } else {
                return Err(BoundError::DomainError(format!(
                    "exponent {p} outside [-1, 0) u (0, 2]"
                )));
            }
        }
        Variant::Oga => {
            if p > 0.0 && p <= 1.0 {
                Direction::Lower
            } else {
                return Err(BoundError::DomainError(format!("k = {p} outside (0, 1]")));
            }
        }
    };
    Ok((leading_term(variant, n, m, p), direction))
}

/// Specializations of the base bound to the classical indices.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ClassicalBounds {
    /// First Zagreb index is at most `10m - 4n`.
    pub m1_upper: f64,
    /// Harmonic index is at least `(4n + 3m) / 20`.
    pub harmonic_lower: f64,
    /// Sum-connectivity index lower bound.
    pub sum_connectivity_lower: f64,
}

pub fn classical_bounds(n: usize, m: usize) -> ClassicalBounds {
    let (nf, mf) = (n as f64, m as f64);
    ClassicalBounds {
        m1_upper: 10.0 * mf - 4.0 * nf,
        harmonic_lower: (4.0 * nf + 3.0 * mf) / 20.0,
        sum_connectivity_lower: 4.0 / 3.0 * (1.0 / 5f64.sqrt() - 1.0 / (2.0 * 2f64.sqrt())) * nf
            + 1.0 / 3.0 * (5.0 / (2.0 * 2f64.sqrt()) - 2.0 / 5f64.sqrt()) * mf,
    }
}

/// Residue correction added to the leading term by the refined bound.
fn residue_correction(case: &BoundCase) -> f64 {
    let coef = |pair| coefficient(case.variant, pair, case.parameter).unwrap();
    match (case.residue, case.regime) {
        (0, _) => 0.0,
        (1, Regime::HighAlpha) => 2.0 * coef((1, 3)) + coef((3, 4)),
        (1, _) => 3.0 * coef((3, 4)),
        (2, Regime::HighAlpha) => coef((1, 2)) + coef((2, 4)),
        (2, _) => 2.0 * coef((2, 4)),
        _ => unreachable!("residue validated at construction"),
    }
}

/// Residue-refined bound value for `(n, m)` graphs in the case's residue
/// class. Requires `n >= 5` and `n - 1 <= m <= 2n`.
pub fn refined_bound(case: &BoundCase, n: usize, m: usize) -> Result<f64, BoundError> {
    if n < 5 {
        return Err(BoundError::DomainError(format!("n = {n} < 5")));
    }
    if m + 1 < n || m > 2 * n {
        return Err(BoundError::DomainError(format!(
            "m = {m} outside [n - 1, 2n] for n = {n}"
        )));
    }
    if (m + n) % 3 != case.residue as usize {
        return Err(BoundError::DomainError(format!(
            "(m + n) mod 3 = {} does not match case residue {}",
            (m + n) % 3,
            case.residue
        )));
    }
    Ok(leading_term(case.variant, n, m, case.parameter) + residue_correction(case))
}

/// Census condition characterizing equality in the refined bound.
pub fn extremal_condition(g: &MolecularGraph, case: &BoundCase) -> bool {
    let dc = g.degree_census();
    let ec = g.edge_census();
    match (case.residue, case.regime) {
        (0, _) => dc.n2 == 0 && dc.n3 == 0,
        (1, Regime::HighAlpha) => dc.n2 == 0 && dc.n3 == 1 && ec.x(1, 3) == 2 && ec.x(3, 4) == 1,
        (1, _) => dc.n2 == 0 && dc.n3 == 1 && ec.x(1, 3) == 0 && ec.x(3, 4) == 3,
        (2, Regime::HighAlpha) => dc.n3 == 0 && dc.n2 == 1 && ec.x(1, 2) == 1 && ec.x(2, 4) == 1,
        (2, _) => dc.n3 == 0 && dc.n2 == 1 && ec.x(1, 2) == 0 && ec.x(2, 4) == 2,
        _ => unreachable!("residue validated at construction"),
    }
}

/// Per-graph verdict for one bound case.
#[derive(Debug, Clone, serde::Serialize)]
pub struct BoundReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub case: BoundCase,
    pub value: f64,
    pub bound: f64,
    /// Direction-normalized slack: non-negative iff the bound holds.
    pub gap: f64,
    pub equality: bool,
    pub condition_met: bool,
}

/// Evaluates the index, the refined bound, and the equality condition for
/// a connected graph with `n >= 5`.
pub fn verdict(g: &MolecularGraph, case: &BoundCase, tol: f64) -> Result<BoundReport, BoundError> {
    let (n, m) = (g.n(), g.m());
    if !g.is_connected() {
        return Err(BoundError::DomainError("graph is not connected".into()));
    }
    let bound = refined_bound(case, n, m)?;
    let spec = case
        .variant
        .index_spec(case.parameter)
        .map_err(|e| BoundError::DomainError(e.to_string()))?;
    let value = evaluate(g, &spec).map_err(|e| BoundError::DomainError(e.to_string()))?;
    let gap = match case.direction {
        Direction::Lower => value - bound,
        Direction::Upper => bound - value,
    };
    let equality = gap.abs() <= tol;
    Ok(BoundReport {
        graph6: to_graph6(g),
        n,
        m,
        case: *case,
        value,
        bound,
        gap,
        equality,
        condition_met: extremal_condition(g, case),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::{evaluate, IndexKind, IndexSpec};
    use crate::testutil::{cycle, path, star};

    fn close(a: f64, b: f64) {
        assert!((a - b).abs() <= 1e-9 * (1.0 + b.abs()), "{a} vs {b}");
    }

    /// For reference values frozen at 7 significant digits.
    fn close7(a: f64, b: f64) {
        assert!((a - b).abs() <= 1e-6 * (1.0 + b.abs()), "{a} vs {b}");
    }

    #[test]
    fn case_construction() {
        let c = BoundCase::new(Variant::Chi, -0.5, 0).unwrap();
        assert_eq!(c.regime, Regime::NegAlpha);
        assert_eq!(c.direction, Direction::Lower);
        let c = BoundCase::new(Variant::Oga, 1.0, 2).unwrap();
        assert_eq!(c.regime, Regime::OgaK);
        assert_eq!(c.direction, Direction::Lower);
        let c = BoundCase::new(Variant::Platt, 1.5, 1).unwrap();
        assert_eq!(c.direction, Direction::Upper);
        assert!(matches!(
            BoundCase::new(Variant::Platt, 1.0, 0),
            Err(BoundError::UnsupportedCase(_))
        ));
        assert!(matches!(
            BoundCase::new(Variant::Chi, 2.5, 0),
            Err(BoundError::DomainError(_))
        ));
        assert!(matches!(
            BoundCase::new(Variant::Oga, 1.5, 0),
            Err(BoundError::DomainError(_))
        ));
    }

    #[test]
    fn base_bound_values() {
        let (b, d) = base_bound(Variant::Chi, 5, 4, -0.5).unwrap();
        close(b, 4.0 / 5f64.sqrt());
        assert_eq!(d, Direction::Lower);

        let (b, d) = base_bound(Variant::Chi, 6, 6, -0.5).unwrap();
        close7(b, 2.4959612);
        assert_eq!(d, Direction::Lower);
        let chi_c6 = evaluate(&cycle(6), &IndexSpec::chi(-0.5).unwrap()).unwrap();
        assert!(chi_c6 > b);

        let (b, d) = base_bound(Variant::Chi, 5, 4, 1.0).unwrap();
        close(b, 20.0);
        assert_eq!(d, Direction::Upper);

        assert!(base_bound(Variant::Chi, 4, 3, 1.0).is_err());
    }

    #[test]
    fn classical_bound_values() {
        let b = classical_bounds(5, 4);
        close(b.m1_upper, 20.0);
        close(b.harmonic_lower, 1.6);
        // Star attains all three with equality.
        let k14 = star(4);
        close(
            evaluate(&k14, &IndexSpec::named(IndexKind::FirstZagreb).unwrap()).unwrap(),
            b.m1_upper,
        );
        close(
            evaluate(&k14, &IndexSpec::named(IndexKind::Harmonic).unwrap()).unwrap(),
            b.harmonic_lower,
        );
        close(
            evaluate(&k14, &IndexSpec::named(IndexKind::SumConnectivity).unwrap()).unwrap(),
            b.sum_connectivity_lower,
        );
        // Path is strictly inside.
        let h_p5 = evaluate(&path(5), &IndexSpec::named(IndexKind::Harmonic).unwrap()).unwrap();
        assert!(h_p5 > b.harmonic_lower);
        let b66 = classical_bounds(6, 6);
        close(b66.m1_upper, 36.0);
        let m1_c6 = evaluate(
            &cycle(6),
            &IndexSpec::named(IndexKind::FirstZagreb).unwrap(),
        )
        .unwrap();
        assert!(m1_c6 < b66.m1_upper);
    }

    #[test]
    fn refined_bound_values() {
        // Residue 1, negative exponent, n = 13, m = 12.
        let case = BoundCase::new(Variant::Chi, -0.5, 1).unwrap();
        let b = refined_bound(&case, 13, 12).unwrap();
        let expected = leading_term(Variant::Chi, 13, 12, -0.5) + 3.0 * 7f64.powf(-0.5)
            - 1.0 / 3.0 * 5f64.powf(-0.5)
            - 8.0 / 3.0 * 8f64.powf(-0.5);
        close(b, expected);

        // Residue 2, high exponent, alpha = 2: correction is exactly -18.
        let case = BoundCase::new(Variant::Chi, 2.0, 2).unwrap();
        let b = refined_bound(&case, 6, 5).unwrap();
        close(b, leading_term(Variant::Chi, 6, 5, 2.0) - 18.0);

        // Residue 0 geometric-arithmetic at k = 1 reduces to the leading
        // term, attained by the star.
        let case = BoundCase::new(Variant::Oga, 1.0, 0).unwrap();
        close(refined_bound(&case, 5, 4).unwrap(), 16.0 / 5.0);

        // Residue mismatch is rejected.
        assert!(refined_bound(&case, 5, 5).is_err());
    }

    #[test]
    fn extremal_condition_examples() {
        let case0 = BoundCase::new(Variant::Chi, -0.5, 0).unwrap();
        assert!(extremal_condition(&star(4), &case0));
        assert!(!extremal_condition(&path(5), &case0));
    }

    #[test]
    fn verdict_examples() {
        let case = BoundCase::new(Variant::Chi, -0.5, 0).unwrap();
        let r = verdict(&star(4), &case, 1e-9).unwrap();
        assert!(r.gap.abs() <= 1e-9);
        assert!(r.equality && r.condition_met);

        let r = verdict(&cycle(6), &case, 1e-9).unwrap();
        close7(r.gap, 3.0 - 2.4959612);
        assert!(!r.equality && !r.condition_met);

        let case1 = BoundCase::new(Variant::Chi, 2.0, 0).unwrap();
        let r = verdict(&path(5), &case1, 1e-9).unwrap();
        assert!(r.gap > 0.0 && !r.equality);

        // Disconnected input is rejected.
        let two_p3 =
            crate::graph::MolecularGraph::build(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        assert!(verdict(
            &two_p3,
            &BoundCase::new(Variant::Chi, -0.5, 0).unwrap(),
            1e-9
        )
        .is_err());
    }

    /// The refined bound is at least as tight as the base bound on
    /// residues 1 and 2: the correction has the bound's direction sign.
    #[test]
    fn refinement_tightens() {
        for variant in [Variant::Chi, Variant::Platt] {
            for alpha in [-1.0, -0.5, -0.1, 0.3, 0.7, 1.3, 1.7, 2.0] {
                for residue in [1u8, 2] {
                    let case = BoundCase::new(variant, alpha, residue).unwrap();
                    let corr = super::residue_correction(&case);
                    match case.direction {
                        Direction::Lower => assert!(corr > 0.0, "{variant:?} {alpha} {residue}"),
                        Direction::Upper => assert!(corr < 0.0, "{variant:?} {alpha} {residue}"),
                    }
                }
            }
        }
        for k in [0.1, 0.5, 1.0] {
            for residue in [1u8, 2] {
                let case = BoundCase::new(Variant::Oga, k, residue).unwrap();
                assert!(super::residue_correction(&case) > 0.0);
            }
        }
    }

    /// With m = n - 1 the classical forms reduce to the tree bounds.
    #[test]
    fn tree_specialization() {
        for n in [5usize, 8, 13, 21] {
            let m = n - 1;
            let b = classical_bounds(n, m);
            close(b.m1_upper, (6 * n - 10) as f64);
            close(b.harmonic_lower, (7 * n - 3) as f64 / 20.0);
            let (chi1, _) = base_bound(Variant::Chi, n, m, 1.0).unwrap();
            close(chi1, b.m1_upper);
        }
    }
}
