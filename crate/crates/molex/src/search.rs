//! Isomorph-free enumeration of molecular graphs, exhaustive bound
//! verification over the enumerated classes, and construction of the
//! equality configurations.
//!
//! Enumeration proceeds by vertex augmentation: each representative on k
//! vertices is extended by one new vertex attached to every admissible
//! neighbor subset, and the candidates are deduplicated per level by
//! canonical key. Completeness follows from vertex deletion: any graph on
//! k+1 vertices minus a (non-cut, in connected mode) vertex is isomorphic
//! to some retained representative. Per-level dedup is simpler than
//! canonical augmentation and memory is a non-issue at n <= 12.

use crate::bounds::{
    classical_bounds, extremal_condition, refined_bound, verdict, BoundCase, BoundError,
    BoundReport, Regime,
};
use crate::canon::canonical_key;
use crate::exec;
use crate::formats::to_graph6;
use crate::graph::{pair_index, DegreeCensus, MolecularGraph, MAX_DEGREE};
use crate::indices::{evaluate, IndexKind, IndexSpec};
use std::collections::{BTreeMap, HashSet};

/// Largest vertex count the enumerator accepts.
pub const MAX_ENUM_N: usize = 12;

/// One representative per isomorphism class of molecular graphs with `n`
/// vertices and `m` edges, in a deterministic order (sorted by graph6
/// encoding). With `connected` set, restricted to connected graphs.
pub fn enumerate(n: usize, m: usize, connected: bool) -> Vec<MolecularGraph> {
    enumerate_impl(n, connected, Some(m))
}

/// All isomorphism classes on `n` vertices regardless of edge count.
pub fn enumerate_all(n: usize, connected: bool) -> Vec<MolecularGraph> {
    enumerate_impl(n, connected, None)
}

fn enumerate_impl(n: usize, connected: bool, target_m: Option<usize>) -> Vec<MolecularGraph> {
    assert!(
        (1..=MAX_ENUM_N).contains(&n),
        "enumeration supports 1 <= n <= {MAX_ENUM_N}"
    );
    if let Some(m) = target_m {
        if m > 2 * n || m > n * (n - 1) / 2 {
            return Vec::new();
        }
    }
    let mut level = vec![MolecularGraph::build(1, &[]).unwrap()];
    for size in 1..n {
        let remaining_after = n - size - 1;
        let expanded: Vec<(Vec<u8>, MolecularGraph)> = exec::flat_map_vec(&level, |g| {
            let mut out = Vec::new();
            let open: Vec<usize> = (0..size).filter(|&v| g.degree(v) < MAX_DEGREE).collect();
            let base_m = g.m();
            for mask in 0u32..(1u32 << open.len()) {
                let added = mask.count_ones() as usize;
                if added > MAX_DEGREE {
                    continue;
                }
                if connected && added == 0 {
                    continue;
                }
                let new_m = base_m + added;
                if let Some(m) = target_m {
                    if new_m > m || new_m + MAX_DEGREE * remaining_after < m {
                        continue;
                    }
                    if connected && new_m + remaining_after > m {
                        continue;
                    }
                }
                // The new vertex has the largest id, so appending it keeps
                // every neighbor list sorted.
                let mut adj: Vec<Vec<usize>> = Vec::with_capacity(size + 1);
                for v in 0..size {
                    adj.push(g.neighbors(v).to_vec());
                }
                adj.push(Vec::with_capacity(added));
                for (idx, &v) in open.iter().enumerate() {
                    if mask >> idx & 1 == 1 {
                        adj[v].push(size);
                        adj[size].push(v);
                    }
                }
                let h = MolecularGraph::from_adj_unchecked(adj);
                out.push((canonical_key(&h), h));
            }
            out
        });
        let mut seen: HashSet<Vec<u8>> = HashSet::with_capacity(expanded.len());
        let mut next = Vec::new();
        for (key, g) in expanded {
            if seen.insert(key) {
                next.push(g);
            }
        }
        level = next;
    }
    let mut result: Vec<MolecularGraph> = match target_m {
        Some(m) => level.into_iter().filter(|g| g.m() == m).collect(),
        None => level,
    };
    result.sort_by_cached_key(to_graph6);
    result
}

/// Aggregated outcome of sweeping one bound case over every enumerated
/// graph at one `(n, m)`.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CaseSummary {
    pub n: usize,
    pub m: usize,
    pub case: BoundCase,
    pub graph_count: usize,
    pub bound: f64,
    pub min_value: f64,
    pub max_value: f64,
    /// graph6 of every graph violating the bound; must stay empty.
    pub violations: Vec<String>,
    /// graph6 of every graph where equality and the census condition
    /// disagree; must stay empty.
    pub mismatches: Vec<String>,
    /// graph6 of every graph attaining the bound.
    pub equality_holders: Vec<String>,
    pub attained: bool,
}

/// Runs [`verdict`] on every connected molecular graph with `n_lo <= n <=
/// n_hi` for every applicable case, and aggregates per `(n, m, case)`.
pub fn exhaustive_verify(
    n_lo: usize,
    n_hi: usize,
    cases: &[BoundCase],
    tol: f64,
) -> Result<Vec<CaseSummary>, BoundError> {
    let mut out = Vec::new();
    for n in n_lo..=n_hi {
        let mut by_m: BTreeMap<usize, Vec<MolecularGraph>> = BTreeMap::new();
        for g in enumerate_all(n, true) {
            by_m.entry(g.m()).or_default().push(g);
        }
        for (m, graphs) in &by_m {
            let m = *m;
            if m + 1 < n || m > 2 * n {
                continue;
            }
            for case in cases {
                if case.residue as usize != (m + n) % 3 {
                    continue;
                }
                let reports = exec::map_vec(graphs, |g| verdict(g, case, tol));
                let mut summary = CaseSummary {
                    n,
                    m,
                    case: *case,
                    graph_count: graphs.len(),
                    bound: refined_bound(case, n, m)?,
                    min_value: f64::INFINITY,
                    max_value: f64::NEG_INFINITY,
                    violations: Vec::new(),
                    mismatches: Vec::new(),
                    equality_holders: Vec::new(),
                    attained: false,
                };
                for report in reports {
                    let r = report?;
                    summary.min_value = summary.min_value.min(r.value);
                    summary.max_value = summary.max_value.max(r.value);
                    if r.gap < -tol {
                        summary.violations.push(r.graph6.clone());
                    }
                    if r.equality != r.condition_met {
                        summary.mismatches.push(r.graph6.clone());
                    }
                    if r.equality {
                        summary.equality_holders.push(r.graph6);
                        summary.attained = true;
                    }
                }
                out.push(summary);
            }
        }
    }
    Ok(out)
}

/// True iff some connected `(n, m)` graph attains the case's refined
/// bound within `tol`.
pub fn bound_attained(n: usize, m: usize, case: &BoundCase, tol: f64) -> Result<bool, BoundError> {
    for g in enumerate(n, m, true) {
        if verdict(&g, case, tol)?.equality {
            return Ok(true);
        }
    }
    Ok(false)
}

/// graph6 of every connected graph with `n >= 5` breaking one of the
/// classical specializations (first Zagreb upper, harmonic lower,
/// sum-connectivity lower).
pub fn classical_violations(n_lo: usize, n_hi: usize, tol: f64) -> Vec<String> {
    let mut out = Vec::new();
    for n in n_lo.max(5)..=n_hi {
        let graphs = enumerate_all(n, true);
        let checks = exec::map_vec(&graphs, |g| {
            let b = classical_bounds(g.n(), g.m());
            let m1 = evaluate(g, &IndexSpec::named(IndexKind::FirstZagreb).unwrap()).unwrap();
            let h = evaluate(g, &IndexSpec::named(IndexKind::Harmonic).unwrap()).unwrap();
            let chi = evaluate(g, &IndexSpec::named(IndexKind::SumConnectivity).unwrap()).unwrap();
            if m1 > b.m1_upper + tol
                || h < b.harmonic_lower - tol
                || chi < b.sum_connectivity_lower - tol
            {
                Some(to_graph6(g))
            } else {
                None
            }
        });
        out.extend(checks.into_iter().flatten());
    }
    out
}

/// One exact edge-census requirement: the pair `(i, j)` must occur
/// `count` times.
pub type EdgeConstraint = ((usize, usize), usize);

/// Searches for a connected graph with the given degree census whose edge
/// census matches each `((i, j), count)` constraint exactly. `None` means
/// no such graph exists — a legitimate answer, not a failure.
///
/// Backtracking over edges incident to the first unsaturated vertex, with
/// neighbors chosen in increasing order and untouched same-degree vertices
/// collapsed to one representative, so each candidate graph is visited
/// once up to that symmetry.
pub fn realize_census(
    census: &DegreeCensus,
    constraints: &[EdgeConstraint],
) -> Option<MolecularGraph> {
    let n = census.total();
    if n == 0 || (census.n0 > 0 && n > 1) {
        return None;
    }
    let degree_sum = census.degree_sum();
    if !degree_sum.is_multiple_of(2) {
        return None;
    }
    for &((i, j), c) in constraints {
        let cap = if i == j {
            census.count(i) * census.count(i).saturating_sub(1) / 2
        } else {
            census.count(i) * census.count(j)
        };
        if c > cap {
            return None;
        }
    }
    if n == 1 {
        return if degree_sum == 0 {
            Some(MolecularGraph::build(1, &[]).unwrap())
        } else {
            None
        };
    }
    let mut targets = Vec::with_capacity(n);
    for d in (1..=MAX_DEGREE).rev() {
        targets.extend(std::iter::repeat_n(d, census.count(d)));
    }
    let mut want = [None; 10];
    for &((i, j), c) in constraints {
        want[pair_index(i, j)] = Some(c);
    }
    let mut state = Realizer {
        targets,
        adj: vec![Vec::new(); n],
        deg: vec![0; n],
        pair_counts: [0; 10],
        want,
    };
    if state.search() {
        Some(MolecularGraph::from_adj_unchecked(state.adj))
    } else {
        None
    }
}

struct Realizer {
    targets: Vec<usize>,
    adj: Vec<Vec<usize>>,
    deg: Vec<usize>,
    pair_counts: [usize; 10],
    want: [Option<usize>; 10],
}

impl Realizer {
    fn search(&mut self) -> bool {
        let n = self.targets.len();
        let u = match (0..n).find(|&v| self.deg[v] < self.targets[v]) {
            Some(u) => u,
            None => return self.accept(),
        };
        // Appends to adj[u] are strictly increasing, so the next neighbor
        // must exceed both u and the last one chosen.
        let start = self.adj[u].last().map(|&w| w + 1).unwrap_or(0).max(u + 1);
        let mut tried_fresh = [false; MAX_DEGREE + 1];
        for v in start..n {
            if self.deg[v] >= self.targets[v] {
                continue;
            }
            if self.deg[v] == 0 {
                let td = self.targets[v];
                if tried_fresh[td] {
                    continue;
                }
                tried_fresh[td] = true;
            }
            let pi = pair_index(self.targets[u], self.targets[v]);
            if let Some(c) = self.want[pi] {
                if self.pair_counts[pi] + 1 > c {
                    continue;
                }
            }
            self.adj[u].push(v);
            self.adj[v].push(u);
            self.deg[u] += 1;
            self.deg[v] += 1;
            self.pair_counts[pi] += 1;
            if self.search() {
                return true;
            }
            self.adj[u].pop();
            self.adj[v].pop();
            self.deg[u] -= 1;
            self.deg[v] -= 1;
            self.pair_counts[pi] -= 1;
        }
        false
    }

    fn accept(&self) -> bool {
        for (pi, want) in self.want.iter().enumerate() {
            if let Some(c) = want {
                if self.pair_counts[pi] != *c {
                    return false;
                }
            }
        }
        MolecularGraph::from_adj_unchecked(self.adj.clone()).is_connected()
    }
}

/// Result of attempting to construct an equality configuration.
#[derive(Debug, Clone)]
pub enum ExtremalOutcome {
    /// A graph meeting the case's census condition, with its verdict.
    Attained {
        graph: MolecularGraph,
        report: BoundReport,
    },
    /// No connected `(n, m)` graph meets the condition.
    Infeasible { reason: String },
}

/// Degree census and edge-census constraints forced by the case's
/// equality condition at `(n, m)`, or the arithmetic reason none exists.
fn extremal_target(
    n: usize,
    m: usize,
    case: &BoundCase,
) -> Result<(DegreeCensus, Vec<EdgeConstraint>), String> {
    let (n2, n3): (usize, usize) = match case.residue {
        0 => (0, 0),
        1 => (0, 1),
        _ => (1, 0),
    };
    let num = 2 * m as i64 - n as i64 - n2 as i64 - 2 * n3 as i64;
    if num < 0 || num % 3 != 0 {
        return Err(format!(
            "census arithmetic: with n2 = {n2}, n3 = {n3} the degree-4 count would be {num}/3"
        ));
    }
    let n4 = (num / 3) as usize;
    if n2 + n3 + n4 > n {
        return Err(format!(
            "census arithmetic: n2 + n3 + n4 = {} exceeds n = {n}",
            n2 + n3 + n4
        ));
    }
    let census = DegreeCensus {
        n0: 0,
        n1: n - n2 - n3 - n4,
        n2,
        n3,
        n4,
    };
    let constraints = match (case.residue, case.regime) {
        (0, _) => vec![],
        (1, Regime::HighAlpha) => vec![((1, 3), 2), ((3, 4), 1)],
        (1, _) => vec![((1, 3), 0), ((3, 4), 3)],
        (2, Regime::HighAlpha) => vec![((1, 2), 1), ((2, 4), 1)],
        (2, _) => vec![((1, 2), 0), ((2, 4), 2)],
        _ => unreachable!("residue validated at construction"),
    };
    Ok((census, constraints))
}

/// Constructs a graph attaining the case's refined bound at `(n, m)`, or
/// reports infeasibility. Preconditions (`n >= 5`, `n - 1 <= m <= 2n`,
/// residue match) are errors; a clean non-existence answer is not.
pub fn build_extremal(
    n: usize,
    m: usize,
    case: &BoundCase,
    tol: f64,
) -> Result<ExtremalOutcome, BoundError> {
    refined_bound(case, n, m)?;
    let (census, constraints) = match extremal_target(n, m, case) {
        Ok(target) => target,
        Err(reason) => return Ok(ExtremalOutcome::Infeasible { reason }),
    };
    match realize_census(&census, &constraints) {
        Some(graph) => {
            debug_assert!(extremal_condition(&graph, case));
            let report = verdict(&graph, case, tol)?;
            Ok(ExtremalOutcome::Attained { graph, report })
        }
        None => Ok(ExtremalOutcome::Infeasible {
            reason: format!(
                "no connected graph realizes degree census (n1={}, n2={}, n3={}, n4={}) \
                 with edge constraints {constraints:?}",
                census.n1, census.n2, census.n3, census.n4
            ),
        }),
    }
}
