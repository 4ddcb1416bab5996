//! The algebraic core: closed-form coefficient tables for the three index
//! families, elimination of the `x_{1,4}` and `x_{4,4}` census entries via
//! the degree/edge linear system, the residual invariant built from the
//! seven remaining entries, and the mod-3 congruence tying `m + n` to the
//! degree census.

use crate::graph::{DegreeCensus, EdgeCensus, MolecularGraph};
use crate::indices::{IndexError, IndexSpec};
use num_rational::Rational64;
use thiserror::Error;

/// The three index families sharing the same reduction structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Variant {
    /// General sum-connectivity: edge weight `(i + j)^alpha`.
    Chi,
    /// General Platt: edge weight `(i + j - 2)^alpha`.
    Platt,
    /// Ordinary generalized geometric-arithmetic: `(2 sqrt(ij)/(i+j))^k`.
    Oga,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Chi => "chi",
            Variant::Platt => "platt",
            Variant::Oga => "oga",
        }
    }

    pub fn edge_weight(self, i: usize, j: usize, p: f64) -> f64 {
        let s = (i + j) as f64;
        match self {
            Variant::Chi => s.powf(p),
            Variant::Platt => (s - 2.0).powf(p),
            Variant::Oga => (2.0 * ((i * j) as f64).sqrt() / s).powf(p),
        }
    }

    /// The index evaluated by this variant at parameter `p`.
    pub fn index_spec(self, p: f64) -> Result<IndexSpec, IndexError> {
        match self {
            Variant::Chi => IndexSpec::chi(p),
            Variant::Platt => IndexSpec::general_platt(p),
            Variant::Oga => IndexSpec::oga(p),
        }
    }
}

/// The seven degree pairs that survive the elimination, in table order.
pub const REDUCED_PAIRS: [(usize, usize); 7] =
    [(1, 2), (1, 3), (2, 2), (2, 3), (2, 4), (3, 3), (3, 4)];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("({0},{1}) is not one of the seven reduced pairs")]
    UnknownPair(usize, usize),
}

/// Closed-form reduction coefficient for one of the seven pairs.
pub fn coefficient(variant: Variant, pair: (usize, usize), p: f64) -> Result<f64, ReductionError> {
    let value = match variant {
        Variant::Chi => {
            let (b3, b4, b5, b6, b7, b8) = (
                3f64.powf(p),
                4f64.powf(p),
                5f64.powf(p),
                6f64.powf(p),
                7f64.powf(p),
                8f64.powf(p),
            );
            match pair {
                (1, 2) => b3 - 4.0 / 3.0 * b5 + 1.0 / 3.0 * b8,
                (1, 3) => b4 - 10.0 / 9.0 * b5 + 1.0 / 9.0 * b8,
                (2, 2) => b4 - 2.0 / 3.0 * b5 - 1.0 / 3.0 * b8,
                (2, 3) => 5.0 / 9.0 * (b5 - b8),
                (2, 4) => b6 - 1.0 / 3.0 * b5 - 2.0 / 3.0 * b8,
                (3, 3) => b6 - 2.0 / 9.0 * b5 - 7.0 / 9.0 * b8,
                (3, 4) => b7 - 1.0 / 9.0 * b5 - 8.0 / 9.0 * b8,
                (i, j) => return Err(ReductionError::UnknownPair(i, j)),
            }
        }
        Variant::Platt => {
            let (b1, b2, b3, b4, b5, b6) = (
                1.0,
                2f64.powf(p),
                3f64.powf(p),
                4f64.powf(p),
                5f64.powf(p),
                6f64.powf(p),
            );
            match pair {
                (1, 2) => b1 - 4.0 / 3.0 * b3 + 1.0 / 3.0 * b6,
                (1, 3) => b2 - 10.0 / 9.0 * b3 + 1.0 / 9.0 * b6,
                (2, 2) => b2 - 2.0 / 3.0 * b3 - 1.0 / 3.0 * b6,
                (2, 3) => 5.0 / 9.0 * (b3 - b6),
                (2, 4) => b4 - 1.0 / 3.0 * b3 - 2.0 / 3.0 * b6,
                (3, 3) => b4 - 2.0 / 9.0 * b3 - 7.0 / 9.0 * b6,
                (3, 4) => b5 - 1.0 / 9.0 * b3 - 8.0 / 9.0 * b6,
                (i, j) => return Err(ReductionError::UnknownPair(i, j)),
            }
        }
        Variant::Oga => {
            let q = (4f64 / 5.0).powf(p);
            match pair {
                (1, 2) => (2.0 * 2f64.sqrt() / 3.0).powf(p) - 4.0 / 3.0 * q + 1.0 / 3.0,
                (1, 3) => (3f64.sqrt() / 2.0).powf(p) - 10.0 / 9.0 * q + 1.0 / 9.0,
                (2, 2) => 2.0 / 3.0 * (1.0 - q),
                (2, 3) => (2.0 * 6f64.sqrt() / 5.0).powf(p) - 4.0 / 9.0 * q - 5.0 / 9.0,
                (2, 4) => (2.0 * 2f64.sqrt() / 3.0).powf(p) - 1.0 / 3.0 * q - 2.0 / 3.0,
                (3, 3) => 2.0 / 9.0 * (1.0 - q),
                (3, 4) => (4.0 * 3f64.sqrt() / 7.0).powf(p) - 1.0 / 9.0 * q - 8.0 / 9.0,
                (i, j) => return Err(ReductionError::UnknownPair(i, j)),
            }
        }
    };
    Ok(value)
}

/// Precomputed coefficients for one `(variant, parameter)`; bound sweeps
/// reuse these heavily.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientTable {
    pub variant: Variant,
    pub parameter: f64,
    values: [f64; 7],
}

impl CoefficientTable {
    pub fn new(variant: Variant, parameter: f64) -> Self {
        let mut values = [0.0; 7];
        for (slot, &pair) in values.iter_mut().zip(REDUCED_PAIRS.iter()) {
            *slot = coefficient(variant, pair, parameter).unwrap();
        }
        CoefficientTable {
            variant,
            parameter,
            values,
        }
    }

    pub fn get(&self, pair: (usize, usize)) -> f64 {
        let idx = REDUCED_PAIRS
            .iter()
            .position(|&p| p == pair)
            .expect("pair must be one of the seven reduced pairs");
        self.values[idx]
    }

    pub fn values(&self) -> &[f64; 7] {
        &self.values
    }
}

/// Leading term of the reduced form: the part depending only on `(n, m)`.
pub fn leading_term(variant: Variant, n: usize, m: usize, p: f64) -> f64 {
    let w14 = variant.edge_weight(1, 4, p);
    let w44 = variant.edge_weight(4, 4, p);
    4.0 / 3.0 * (w14 - w44) * n as f64 - 1.0 / 3.0 * (2.0 * w14 - 5.0 * w44) * m as f64
}

/// Recovers `x_{1,4}` and `x_{4,4}` from `(n, m)` and the seven remaining
/// census entries, as exact rationals. A non-integral or negative result
/// flags an infeasible partial census.
pub fn solve_x14_x44(n: usize, m: usize, partial: &EdgeCensus) -> (Rational64, Rational64) {
    let x = |i, j| partial.x(i, j) as i64;
    let (n, m) = (n as i64, m as i64);
    let x14 = Rational64::new(
        12 * n
            - 6 * m
            - 12 * x(1, 2)
            - 10 * x(1, 3)
            - 6 * x(2, 2)
            - 4 * x(2, 3)
            - 3 * x(2, 4)
            - 2 * x(3, 3)
            - x(3, 4),
        9,
    );
    let x44 = Rational64::new(
        -12 * n + 15 * m + 3 * x(1, 2) + x(1, 3)
            - 3 * x(2, 2)
            - 5 * x(2, 3)
            - 6 * x(2, 4)
            - 7 * x(3, 3)
            - 8 * x(3, 4),
        9,
    );
    (x14, x44)
}

/// Residual from a census: the sum of `x_{i,j}` times the reduction
/// coefficient over the seven reduced pairs.
pub fn residual_from_census(census: &EdgeCensus, table: &CoefficientTable) -> f64 {
    REDUCED_PAIRS
        .iter()
        .map(|&(i, j)| census.x(i, j) as f64 * table.get((i, j)))
        .sum()
}

/// Residual of a graph for the given variant and parameter.
pub fn residual(g: &MolecularGraph, variant: Variant, p: f64) -> f64 {
    residual_from_census(&g.edge_census(), &CoefficientTable::new(variant, p))
}

/// Reduced-form reconstruction: leading term plus residual. Equals the
/// direct index value on every molecular graph.
pub fn reconstruct(g: &MolecularGraph, variant: Variant, p: f64) -> f64 {
    leading_term(variant, g.n(), g.m(), p) + residual(g, variant, p)
}

/// `(m + n) mod 3` and whether it is congruent to `n3 - n2` mod 3.
/// The congruence holds on every molecular graph.
pub fn congruence(n: usize, m: usize, census: &DegreeCensus) -> (u8, bool) {
    let residue = ((m + n) % 3) as u8;
    let diff = census.n3 as i64 - census.n2 as i64 - (m + n) as i64;
    (residue, diff.rem_euclid(3) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{cycle, path, star};

    fn close(a: f64, b: f64) {
        assert!((a - b).abs() <= 1e-12 * (1.0 + b.abs()), "{a} vs {b}");
    }

    #[test]
    fn coefficient_spot_values() {
        close(
            coefficient(Variant::Chi, (2, 3), 1.0).unwrap(),
            5.0 / 9.0 * (5.0 - 8.0),
        );
        close(
            coefficient(Variant::Platt, (2, 3), -1.0).unwrap(),
            5.0 / 54.0,
        );
        close(coefficient(Variant::Oga, (2, 2), 1.0).unwrap(), 2.0 / 15.0);
        close(coefficient(Variant::Chi, (1, 2), 1.0).unwrap(), -1.0);
        assert_eq!(
            coefficient(Variant::Chi, (1, 4), 1.0),
            Err(ReductionError::UnknownPair(1, 4))
        );
    }

    /// Independent route: each coefficient must equal the raw edge weight
    /// plus the elimination corrections with the printed rational factors.
    #[test]
    fn coefficients_match_elimination_route() {
        const C14: [(i64, i64); 7] = [
            (-12, 9),
            (-10, 9),
            (-6, 9),
            (-4, 9),
            (-3, 9),
            (-2, 9),
            (-1, 9),
        ];
        const C44: [(i64, i64); 7] = [(3, 9), (1, 9), (-3, 9), (-5, 9), (-6, 9), (-7, 9), (-8, 9)];
        for variant in [Variant::Chi, Variant::Platt, Variant::Oga] {
            for p in [-1.0, -0.5, -0.1, 0.3, 0.9, 1.5, 2.0] {
                let w14 = variant.edge_weight(1, 4, p);
                let w44 = variant.edge_weight(4, 4, p);
                for (idx, &(i, j)) in REDUCED_PAIRS.iter().enumerate() {
                    let expected = variant.edge_weight(i, j, p)
                        + C14[idx].0 as f64 / C14[idx].1 as f64 * w14
                        + C44[idx].0 as f64 / C44[idx].1 as f64 * w44;
                    close(coefficient(variant, (i, j), p).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn table_matches_scalar() {
        let table = CoefficientTable::new(Variant::Chi, -0.5);
        for pair in REDUCED_PAIRS {
            close(
                table.get(pair),
                coefficient(Variant::Chi, pair, -0.5).unwrap(),
            );
        }
    }

    #[test]
    fn solve_star_and_path() {
        let star5 = star(4);
        let (x14, x44) = solve_x14_x44(5, 4, &star5.edge_census());
        assert_eq!(x14, Rational64::from_integer(4));
        assert_eq!(x44, Rational64::from_integer(0));

        let p5 = path(5);
        let (x14, x44) = solve_x14_x44(5, 4, &p5.edge_census());
        assert_eq!(x14, Rational64::from_integer(0));
        assert_eq!(x44, Rational64::from_integer(0));
    }

    #[test]
    fn residual_values() {
        for alpha in [-1.0, -0.5, 0.5, 1.7] {
            close(residual(&star(4), Variant::Chi, alpha), 0.0);
        }
        close(residual(&path(5), Variant::Chi, 1.0), -6.0);
        close(residual(&cycle(6), Variant::Oga, 1.0), 6.0 * 2.0 / 15.0);
    }

    #[test]
    fn reconstruct_values() {
        close(reconstruct(&path(5), Variant::Chi, 1.0), 14.0);
        close(reconstruct(&star(4), Variant::Chi, -0.5), 4.0 / 5f64.sqrt());
        close(reconstruct(&star(4), Variant::Oga, 1.0), 16.0 / 5.0);
    }

    #[test]
    fn congruence_examples() {
        let p5 = path(5);
        assert_eq!(congruence(5, 4, &p5.degree_census()), (0, true));
        let c6 = cycle(6);
        assert_eq!(congruence(6, 6, &c6.degree_census()), (0, true));
        let k14 = star(4);
        assert_eq!(congruence(5, 4, &k14.degree_census()), (0, true));
    }
}
