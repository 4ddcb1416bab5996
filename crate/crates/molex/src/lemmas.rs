//! Numerical verification of the coefficient orderings and per-graph
//! inequalities that the bound proofs rely on.
//!
//! Coefficient-level claims are checked on dense parameter grids (default
//! step 1e-3); graph-level claims are pure predicates meant to be swept
//! over exhaustively enumerated graphs. Violations are collected and
//! reported with their witness parameter rather than panicking.

// Strict comparisons are written as `!(a < b)` etc. on purpose: an
// incomparable (NaN) result must count as a violation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use crate::graph::MolecularGraph;
use crate::reduction::{coefficient, residual, CoefficientTable, Variant, REDUCED_PAIRS};
use thiserror::Error;

pub const DEFAULT_GRID_STEP: f64 = 1e-3;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LemmaError {
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("no sign change found when bracketing the root")]
    NoSignChange,
    #[error("variant {0:?} is not covered by this check")]
    UnsupportedVariant(Variant),
}

/// A failed clause at one grid point.
#[derive(Debug, Clone, serde::Serialize)]
pub struct Violation {
    pub parameter: f64,
    pub clause: String,
    pub lhs: f64,
    pub rhs: f64,
}

fn violation(parameter: f64, clause: &str, lhs: f64, rhs: f64) -> Violation {
    Violation {
        parameter,
        clause: clause.to_string(),
        lhs,
        rhs,
    }
}

/// Exponent grid over `[-1, 0) ∪ (0, 2]`, excluding 0 and 1, endpoints
/// -1 and 2 included.
pub fn alpha_grid(step: f64) -> Vec<f64> {
    assert!(step > 0.0);
    let mut grid = Vec::new();
    let count = (3.0 / step).round() as usize;
    for i in 0..=count {
        let a = -1.0 + i as f64 * step;
        if a > 2.0 + step / 2.0 {
            break;
        }
        if a.abs() < step / 2.0 || (a - 1.0).abs() < step / 2.0 {
            continue;
        }
        grid.push(a.min(2.0));
    }
    grid
}

/// Exponent grid over `(0, 1]`, endpoint 1 included.
pub fn k_grid(step: f64) -> Vec<f64> {
    assert!(step > 0.0);
    let count = (1.0 / step).round() as usize;
    (1..=count).map(|i| (i as f64 * step).min(1.0)).collect()
}

/// Regime of an exponent within `[-1, 0) ∪ (0, 2]`.
fn alpha_regime(a: f64) -> Option<&'static str> {
    if (-1.0..0.0).contains(&a) {
        Some("neg")
    } else if a > 0.0 && a < 1.0 {
        Some("mid")
    } else if a > 1.0 && a <= 2.0 {
        Some("high")
    } else {
        None
    }
}

/// Unique root of the Platt `(1,2)` coefficient in `(0, 2]`, located by
/// bisection to an interval of width 1e-9.
pub fn find_x0() -> Result<f64, LemmaError> {
    let theta12 = |a: f64| coefficient(Variant::Platt, (1, 2), a).unwrap();
    // Bracket by scanning; exactly one sign change must exist.
    let step = 1e-3;
    let mut bracket = None;
    let mut changes = 0;
    let mut prev = (step, theta12(step));
    let mut a = step;
    while a < 2.0 {
        a = (a + step).min(2.0);
        let v = theta12(a);
        if prev.1 < 0.0 && v >= 0.0 || prev.1 >= 0.0 && v < 0.0 {
            changes += 1;
            bracket = Some((prev.0, a));
        }
        prev = (a, v);
    }
    if changes != 1 {
        return Err(LemmaError::NoSignChange);
    }
    let (mut lo, mut hi) = bracket.unwrap();
    while hi - lo > 1e-9 {
        let mid = 0.5 * (lo + hi);
        if theta12(lo) * theta12(mid) <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Checks the six regime ordering clauses of the coefficient tables for
/// the Chi or Platt family over a parameter grid. For Platt the `(1,2)`
/// clause changes once the exponent passes the root returned by
/// [`find_x0`]: the `(2,2)`, `(2,3)`, `(2,4)` coefficients stay negative
/// while `(1,2)` becomes non-negative.
pub fn lemma1_orderings(variant: Variant, grid: &[f64]) -> Result<Vec<Violation>, LemmaError> {
    if variant == Variant::Oga {
        return Err(LemmaError::UnsupportedVariant(variant));
    }
    let x0 = if variant == Variant::Platt {
        Some(find_x0()?)
    } else {
        None
    };
    let mut violations = Vec::new();
    for &a in grid {
        let regime = match alpha_regime(a) {
            Some(r) => r,
            None => continue,
        };
        let t = CoefficientTable::new(variant, a);
        let (t12, t13, t22, t23, t24, t33, t34) = (
            t.get((1, 2)),
            t.get((1, 3)),
            t.get((2, 2)),
            t.get((2, 3)),
            t.get((2, 4)),
            t.get((3, 3)),
            t.get((3, 4)),
        );
        fn strict(out: &mut Vec<Violation>, a: f64, clause: &str, lhs: f64, rhs: f64) {
            if !(lhs < rhs) {
                out.push(violation(a, clause, lhs, rhs));
            }
        }
        let check = |out: &mut Vec<Violation>, clause: &str, lhs: f64, rhs: f64| {
            strict(out, a, clause, lhs, rhs)
        };
        match regime {
            "neg" => {
                check(&mut violations, "i: 0 < theta34", 0.0, t34);
                check(
                    &mut violations,
                    "i: theta34 < min(13,23,33)",
                    t34,
                    t13.min(t23).min(t33),
                );
                check(&mut violations, "ii: 0 < theta24", 0.0, t24);
                check(
                    &mut violations,
                    "ii: theta24 < min(12,22,23)",
                    t24,
                    t12.min(t22).min(t23),
                );
            }
            "mid" => {
                check(&mut violations, "i: theta34 < 0", t34, 0.0);
                check(
                    &mut violations,
                    "i: max(13,23,33) < theta34",
                    t13.max(t23).max(t33),
                    t34,
                );
                check(&mut violations, "ii: theta24 < 0", t24, 0.0);
                check(
                    &mut violations,
                    "ii: max(12,22,23) < theta24",
                    t12.max(t22).max(t23),
                    t24,
                );
            }
            "high" => {
                check(&mut violations, "i: theta13 < 0", t13, 0.0);
                check(
                    &mut violations,
                    "i: max(23,33,34) < theta13",
                    t23.max(t33).max(t34),
                    t13,
                );
                match x0 {
                    Some(x0) if a >= x0 => {
                        check(
                            &mut violations,
                            "ii: max(22,23,24) < 0",
                            t22.max(t23).max(t24),
                            0.0,
                        );
                        if t12 < 0.0 {
                            violations.push(violation(a, "ii: 0 <= theta12", t12, 0.0));
                        }
                    }
                    _ => {
                        check(&mut violations, "ii: theta12 < 0", t12, 0.0);
                        check(
                            &mut violations,
                            "ii: max(22,23,24) < theta12",
                            t22.max(t23).max(t24),
                            t12,
                        );
                    }
                }
            }
            _ => unreachable!(),
        }
    }
    Ok(violations)
}

/// Sign chart check: every Chi coefficient is positive on `[-1, 0)` and
/// negative on `(0, 2]`. For Platt the `(1,2)` entry is instead negative
/// on `(0, x0)` and non-negative on `[x0, 2]`.
pub fn sign_chart_check(variant: Variant, grid: &[f64]) -> Result<Vec<Violation>, LemmaError> {
    if variant == Variant::Oga {
        return Err(LemmaError::UnsupportedVariant(variant));
    }
    let x0 = if variant == Variant::Platt {
        Some(find_x0()?)
    } else {
        None
    };
    let mut violations = Vec::new();
    for &a in grid {
        let regime = match alpha_regime(a) {
            Some(r) => r,
            None => continue,
        };
        // alpha = 1 is a legitimate grid point for the sign chart.
        let positive = regime == "neg";
        let t = CoefficientTable::new(variant, a);
        for (idx, &pair) in REDUCED_PAIRS.iter().enumerate() {
            let v = t.values()[idx];
            let expect_positive = match (x0, pair) {
                (Some(x0), (1, 2)) if a >= x0 => {
                    // Non-negative rather than strictly positive at x0.
                    if v < 0.0 {
                        violations.push(violation(a, "theta'(1,2) >= 0 past x0", v, 0.0));
                    }
                    continue;
                }
                _ => positive,
            };
            let ok = if expect_positive { v > 0.0 } else { v < 0.0 };
            if !ok {
                violations.push(violation(
                    a,
                    &format!(
                        "{} coefficient ({},{}) should be {}",
                        variant.name(),
                        pair.0,
                        pair.1,
                        if expect_positive {
                            "positive"
                        } else {
                            "negative"
                        }
                    ),
                    v,
                    0.0,
                ));
            }
        }
    }
    Ok(violations)
}

/// The pairwise sums of the Platt `(1,2)` coefficient with each of the
/// `(2,2)`, `(2,3)`, `(2,4)` coefficients are all negative on `[x0, 2]`.
pub fn platt_exception_sums(grid: &[f64]) -> Result<Vec<Violation>, LemmaError> {
    let x0 = find_x0()?;
    let mut violations = Vec::new();
    for &a in grid {
        if !(x0..=2.0).contains(&a) {
            continue;
        }
        let t = CoefficientTable::new(Variant::Platt, a);
        let t12 = t.get((1, 2));
        for pair in [(2, 2), (2, 3), (2, 4)] {
            let sum = t12 + t.get(pair);
            if !(sum < 0.0) {
                violations.push(violation(
                    a,
                    &format!("theta'(1,2) + theta'({},{}) < 0", pair.0, pair.1),
                    sum,
                    0.0,
                ));
            }
        }
    }
    Ok(violations)
}

/// Graph-level residual inequality for graphs with at least two vertices
/// of degree 2 or 3 (Chi and Platt families).
pub fn lemma2_check(g: &MolecularGraph, variant: Variant, alpha: f64) -> Result<bool, LemmaError> {
    if variant == Variant::Oga {
        return Err(LemmaError::UnsupportedVariant(variant));
    }
    let dc = g.degree_census();
    if dc.n2 + dc.n3 < 2 {
        return Err(LemmaError::PreconditionFailed(format!(
            "n2 + n3 = {} < 2",
            dc.n2 + dc.n3
        )));
    }
    let regime = alpha_regime(alpha).ok_or_else(|| {
        LemmaError::PreconditionFailed(format!("alpha = {alpha} outside the admissible regimes"))
    })?;
    let gamma = residual(g, variant, alpha);
    let t = CoefficientTable::new(variant, alpha);
    Ok(match regime {
        "neg" => gamma > 2.0 * t.get((2, 4)),
        "mid" => gamma < 2.0 * t.get((2, 4)),
        "high" => gamma < 2.0 * t.get((1, 3)) + t.get((3, 4)),
        _ => unreachable!(),
    })
}

/// Graph-level residual inequality for the geometric-arithmetic family:
/// the residual strictly exceeds three times the `(3,4)` coefficient.
pub fn lemma4_check(g: &MolecularGraph, k: f64) -> Result<bool, LemmaError> {
    if !(k > 0.0 && k <= 1.0) {
        return Err(LemmaError::PreconditionFailed(format!(
            "k = {k} outside (0, 1]"
        )));
    }
    let dc = g.degree_census();
    if dc.n2 + dc.n3 < 2 {
        return Err(LemmaError::PreconditionFailed(format!(
            "n2 + n3 = {} < 2",
            dc.n2 + dc.n3
        )));
    }
    let upsilon = residual(g, Variant::Oga, k);
    Ok(upsilon > 3.0 * coefficient(Variant::Oga, (3, 4), k).unwrap())
}

/// Both decreasing chains of the geometric-arithmetic coefficients:
/// `(1,2) > (2,2) > (2,3) > (2,4) > 0` and `(1,3) > (2,3) > (3,3) > (3,4) > 0`.
pub fn phi_chain_check(grid: &[f64]) -> Vec<Violation> {
    let mut violations = Vec::new();
    for &k in grid {
        if !(k > 0.0 && k <= 1.0) {
            continue;
        }
        let t = CoefficientTable::new(Variant::Oga, k);
        let chains: [&[(usize, usize)]; 2] = [
            &[(1, 2), (2, 2), (2, 3), (2, 4)],
            &[(1, 3), (2, 3), (3, 3), (3, 4)],
        ];
        for chain in chains {
            for w in chain.windows(2) {
                let (a, b) = (t.get(w[0]), t.get(w[1]));
                if !(a > b) {
                    violations.push(violation(
                        k,
                        &format!("phi({},{}) > phi({},{})", w[0].0, w[0].1, w[1].0, w[1].1),
                        a,
                        b,
                    ));
                }
            }
            let last = t.get(*chain.last().unwrap());
            if !(last > 0.0) {
                violations.push(violation(k, "chain tail > 0", last, 0.0));
            }
        }
    }
    violations
}

/// `x_{1,2} <= x_{2,2} + x_{2,3} + x_{2,4}`; holds for every connected
/// molecular graph with at least 5 vertices, but can fail on disconnected
/// ones (two disjoint paths of length two, for example).
pub fn structural_inequality(g: &MolecularGraph) -> bool {
    let ec = g.edge_census();
    ec.x(1, 2) <= ec.x(2, 2) + ec.x(2, 3) + ec.x(2, 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MolecularGraph;
    use crate::testutil::{cycle, path};

    #[test]
    fn grids_exclude_removable_points() {
        let grid = alpha_grid(1e-3);
        assert!(grid.iter().all(|&a| a != 0.0 && a != 1.0));
        assert!(grid.contains(&-1.0));
        assert!((grid.last().unwrap() - 2.0).abs() < 1e-12);
        let kg = k_grid(1e-3);
        assert!(kg.iter().all(|&k| k > 0.0 && k <= 1.0));
        assert!((kg.last().unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn x0_location() {
        let x0 = find_x0().unwrap();
        assert!((x0 - 1.8509).abs() < 5e-4, "x0 = {x0}");
        let at_root = coefficient(Variant::Platt, (1, 2), x0).unwrap();
        assert!(at_root.abs() <= 1e-8);
        assert!(coefficient(Variant::Platt, (1, 2), 1.0).unwrap() < 0.0);
        assert!(coefficient(Variant::Platt, (1, 2), 2.0).unwrap() > 0.0);
    }

    #[test]
    fn orderings_hold_on_coarse_grid() {
        let grid = alpha_grid(1e-2);
        assert!(lemma1_orderings(Variant::Chi, &grid).unwrap().is_empty());
        assert!(lemma1_orderings(Variant::Platt, &grid).unwrap().is_empty());
    }

    #[test]
    fn ordering_spot_points() {
        // Chi at alpha = -1/2: theta24 positive and dominated.
        let t = CoefficientTable::new(Variant::Chi, -0.5);
        let t24 = t.get((2, 4));
        assert!(t24 > 0.0);
        assert!(t.get((1, 2)).min(t.get((2, 2))).min(t.get((2, 3))) > t24);
        // Platt at alpha = 1.9 (past x0): theta'12 >= 0, others negative.
        let t = CoefficientTable::new(Variant::Platt, 1.9);
        assert!(t.get((1, 2)) >= 0.0);
        assert!(t.get((2, 2)) < 0.0 && t.get((2, 3)) < 0.0 && t.get((2, 4)) < 0.0);
    }

    #[test]
    fn sign_charts_hold() {
        let grid = alpha_grid(1e-2);
        assert!(sign_chart_check(Variant::Chi, &grid).unwrap().is_empty());
        assert!(sign_chart_check(Variant::Platt, &grid).unwrap().is_empty());
        assert!(platt_exception_sums(&grid).unwrap().is_empty());
    }

    #[test]
    fn residual_inequalities_on_small_graphs() {
        assert!(lemma2_check(&path(5), Variant::Chi, -0.5).unwrap());
        assert!(lemma2_check(&cycle(6), Variant::Chi, 0.5).unwrap());
        assert!(lemma4_check(&path(5), 1.0).unwrap());
        assert!(lemma4_check(&cycle(6), 0.5).unwrap());
        // Star has n2 + n3 = 0: precondition fails.
        assert!(matches!(
            lemma2_check(&crate::testutil::star(4), Variant::Chi, -0.5),
            Err(LemmaError::PreconditionFailed(_))
        ));
    }

    #[test]
    fn phi_chains_hold() {
        assert!(phi_chain_check(&k_grid(1e-2)).is_empty());
        assert!(phi_chain_check(&[1.0, 0.1]).is_empty());
    }

    #[test]
    fn structural_inequality_examples() {
        assert!(structural_inequality(&path(5)));
        assert!(structural_inequality(&crate::testutil::star(4)));
        // Two disjoint 3-vertex paths: 4 <= 0 fails. Disconnected, so this
        // is a connectivity caveat rather than a counterexample.
        let two_p3 = MolecularGraph::build(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        assert!(!structural_inequality(&two_p3));
    }
}
