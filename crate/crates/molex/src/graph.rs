//! Molecular-graph representation, validation, and the degree/edge censuses.
//!
//! A molecular graph is a simple undirected graph in which every vertex has
//! degree at most 4. The two censuses (vertex counts by degree, edge counts
//! by endpoint-degree pair) are the sufficient statistics for every
//! descriptor computed by this crate.

use thiserror::Error;

/// Maximum vertex degree admitted by [`MolecularGraph`].
pub const MAX_DEGREE: usize = 4;

/// All unordered degree pairs `(i, j)` with `1 <= i <= j <= 4`, in the
/// order used by [`EdgeCensus`] storage.
pub const ALL_PAIRS: [(usize, usize); 10] = [
    (1, 1),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 2),
    (2, 3),
    (2, 4),
    (3, 3),
    (3, 4),
    (4, 4),
];

/// Flat index of an unordered degree pair into [`ALL_PAIRS`] order.
pub fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    debug_assert!((1..=4).contains(&i) && (1..=4).contains(&j));
    match (i, j) {
        (1, 1) => 0,
        (1, 2) => 1,
        (1, 3) => 2,
        (1, 4) => 3,
        (2, 2) => 4,
        (2, 3) => 5,
        (2, 4) => 6,
        (3, 3) => 7,
        (3, 4) => 8,
        (4, 4) => 9,
        _ => unreachable!("degree pair out of range"),
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for n = {1}")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("degree of vertex {0} would exceed {MAX_DEGREE}")]
    DegreeOverflow(usize),
}

/// Simple undirected graph with maximum degree 4.
///
/// Vertex ids are dense integers `0..n`; adjacency is stored as sorted
/// neighbor lists, which is cache-friendly at the small degrees involved.
/// Instances are immutable once built and all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MolecularGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

/// Vertex counts by degree: `n1..n4` count vertices of degrees 1 through 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct DegreeCensus {
    pub n0: usize,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub n4: usize,
}

impl DegreeCensus {
    /// Total vertex count covered by the census.
    pub fn total(&self) -> usize {
        self.n0 + self.n1 + self.n2 + self.n3 + self.n4
    }

    /// Degree sum, i.e. twice the edge count.
    pub fn degree_sum(&self) -> usize {
        self.n1 + 2 * self.n2 + 3 * self.n3 + 4 * self.n4
    }

    pub fn count(&self, degree: usize) -> usize {
        match degree {
            0 => self.n0,
            1 => self.n1,
            2 => self.n2,
            3 => self.n3,
            4 => self.n4,
            _ => 0,
        }
    }
}

/// Edge counts `x_{i,j}` by unordered endpoint-degree pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EdgeCensus {
    counts: [usize; 10],
}

impl EdgeCensus {
    pub fn from_counts(counts: [usize; 10]) -> Self {
        EdgeCensus { counts }
    }

    /// Count of edges joining a degree-`i` vertex to a degree-`j` vertex.
    pub fn x(&self, i: usize, j: usize) -> usize {
        self.counts[pair_index(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: usize) {
        self.counts[pair_index(i, j)] = value;
    }

    /// Total edge count.
    pub fn m(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Sum of `x_{i,j}` over pairs incident to degree `j`, with `x_{j,j}`
    /// counted twice. Equals `j * n_j` on a valid graph.
    pub fn incidence_sum(&self, j: usize) -> usize {
        (1..=4)
            .map(|i| {
                if i == j {
                    2 * self.x(j, j)
                } else {
                    self.x(i, j)
                }
            })
            .sum()
    }
}

impl MolecularGraph {
    /// Builds a validated graph from an edge list.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            if adj[u].len() == MAX_DEGREE {
                return Err(GraphError::DegreeOverflow(u));
            }
            if adj[v].len() == MAX_DEGREE {
                return Err(GraphError::DegreeOverflow(v));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(MolecularGraph { n, adj })
    }

    /// Constructs from adjacency lists already known to be valid
    /// (symmetric, sorted, loop-free, degrees at most 4).
    pub(crate) fn from_adj_unchecked(adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        MolecularGraph { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    pub fn degree_census(&self) -> DegreeCensus {
        let mut counts = [0usize; 5];
        for v in 0..self.n {
            counts[self.degree(v)] += 1;
        }
        DegreeCensus {
            n0: counts[0],
            n1: counts[1],
            n2: counts[2],
            n3: counts[3],
            n4: counts[4],
        }
    }

    pub fn edge_census(&self) -> EdgeCensus {
        let mut census = EdgeCensus::default();
        for (u, v) in self.edges() {
            let idx = pair_index(self.degree(u), self.degree(v));
            census.counts[idx] += 1;
        }
        census
    }

    /// True iff a single traversal reaches every vertex. The one-vertex
    /// graph is connected; the empty graph on `n >= 2` vertices is not.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.n
    }

    /// True iff the graph has an isolated (degree-0) vertex.
    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|l| l.is_empty())
    }
}
