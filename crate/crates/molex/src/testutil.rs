//! Shared constructors for unit tests.

use crate::graph::MolecularGraph;

pub fn path(n: usize) -> MolecularGraph {
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    MolecularGraph::build(n, &edges).unwrap()
}

pub fn star(leaves: usize) -> MolecularGraph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    MolecularGraph::build(leaves + 1, &edges).unwrap()
}

pub fn cycle(n: usize) -> MolecularGraph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    MolecularGraph::build(n, &edges).unwrap()
}

pub fn relabel(g: &MolecularGraph, perm: &[usize]) -> MolecularGraph {
    let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    MolecularGraph::build(g.n(), &edges).unwrap()
}
