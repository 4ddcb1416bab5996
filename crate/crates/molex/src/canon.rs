//! Canonical labeling by iterated refinement with individualization.
//!
//! Two graphs receive equal keys iff they are isomorphic. The search
//! refines a degree-based coloring to an equitable partition, then
//! branches on the vertices of the first non-singleton cell, keeping the
//! lexicographically smallest adjacency bit string over all leaves.
//! Correctness is what matters at the sizes involved (n <= 12 for
//! enumeration); max degree 4 keeps the branching shallow.

use crate::graph::MolecularGraph;

/// Largest vertex count supported by the canonizer (one `u64` bit row per
/// vertex).
pub const MAX_CANON_N: usize = 64;

/// Deterministic byte key identifying the isomorphism class of `g`.
pub fn canonical_key(g: &MolecularGraph) -> Vec<u8> {
    let n = g.n();
    assert!(
        n <= MAX_CANON_N,
        "canonical_key supports n <= {MAX_CANON_N}"
    );
    let mut rows = vec![0u64; n];
    for (u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    canonical_key_masks(n, &rows)
}

/// Same as [`canonical_key`], for adjacency given as bit rows.
pub fn canonical_key_masks(n: usize, rows: &[u64]) -> Vec<u8> {
    if n == 0 {
        return vec![0];
    }
    let words = (n * (n - 1) / 2).div_ceil(64);
    let mut search = Search {
        n,
        rows,
        words,
        best: None,
    };
    let mut colors: Vec<u32> = (0..n).map(|v| rows[v].count_ones()).collect();
    search.refine(&mut colors);
    search.descend(colors);
    let bits = search.best.expect("search always reaches a leaf");
    let mut key = Vec::with_capacity(1 + words * 8);
    key.push(n as u8);
    for w in bits {
        key.extend_from_slice(&w.to_be_bytes());
    }
    key
}

struct Search<'a> {
    n: usize,
    rows: &'a [u64],
    words: usize,
    best: Option<Vec<u64>>,
}

impl Search<'_> {
    /// Refines `colors` to an equitable partition. Color ids are dense and
    /// assigned by sorting signatures, so they are label-independent.
    fn refine(&self, colors: &mut [u32]) {
        loop {
            let mut sigs: Vec<(u32, Vec<u32>)> = Vec::with_capacity(self.n);
            for v in 0..self.n {
                let mut neigh: Vec<u32> = Vec::with_capacity(4);
                let mut bits = self.rows[v];
                while bits != 0 {
                    let u = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    neigh.push(colors[u]);
                }
                neigh.sort_unstable();
                sigs.push((colors[v], neigh));
            }
            let mut distinct: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
            distinct.sort_unstable();
            distinct.dedup();
            let old_count = count_colors(colors);
            for v in 0..self.n {
                colors[v] = distinct.binary_search(&&sigs[v]).unwrap() as u32;
            }
            if count_colors(colors) == old_count {
                return;
            }
        }
    }

    fn descend(&mut self, colors: Vec<u32>) {
        // First non-singleton cell, by color id.
        let mut cell_color = None;
        for c in 0..self.n as u32 {
            let count = colors.iter().filter(|&&x| x == c).count();
            if count == 0 {
                break;
            }
            if count > 1 {
                cell_color = Some(c);
                break;
            }
        }
        match cell_color {
            None => self.leaf(&colors),
            Some(c) => {
                for v in 0..self.n {
                    if colors[v] != c {
                        continue;
                    }
                    // Individualize v: give it color c, shift everything at
                    // or above c (other than v) up by one, then re-refine.
                    let mut child = colors.clone();
                    for (u, col) in child.iter_mut().enumerate() {
                        if u != v && *col >= c {
                            *col += 1;
                        }
                    }
                    self.refine(&mut child);
                    self.descend(child);
                }
            }
        }
    }

    /// All cells singleton: `colors[v]` is the canonical position of `v`.
    fn leaf(&mut self, colors: &[u32]) {
        let mut inv = vec![0usize; self.n];
        for (v, &c) in colors.iter().enumerate() {
            inv[c as usize] = v;
        }
        let mut bits = vec![0u64; self.words];
        let mut pos = 0usize;
        for a in 0..self.n {
            let va = inv[a];
            for &vb in inv.iter().take(a) {
                if self.rows[va] >> vb & 1 == 1 {
                    bits[pos / 64] |= 1 << (63 - pos % 64);
                }
                pos += 1;
            }
        }
        match &self.best {
            Some(b) if *b <= bits => {}
            _ => self.best = Some(bits),
        }
    }
}

fn count_colors(colors: &[u32]) -> usize {
    let mut seen = vec![false; colors.len()];
    let mut count = 0;
    for &c in colors {
        if !seen[c as usize] {
            seen[c as usize] = true;
            count += 1;
        }
    }
    count
}
