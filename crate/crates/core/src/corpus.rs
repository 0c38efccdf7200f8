//! Small-graph corpora: every graph on `n` vertices up to isomorphism, and
//! complete multipartite part-size lists.
//!
//! Isomorphism classes are found by vertex augmentation: each class on
//! `n` vertices arises from one on `n - 1` by adding a vertex with some
//! neighborhood. Duplicates are removed with a canonical code computed by
//! color refinement followed by individualization of the first nontrivial
//! cell, minimizing over all branches.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::closed_forms::PartiteSpec;
use crate::graph::Graph;

/// Largest `n` the 64-bit canonical code supports.
pub const MAX_CANONICAL_VERTICES: usize = 11;

fn pair_bit(i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    b * (b - 1) / 2 + a
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).fold(0u32, |m, w| m | 1 << w))
        .collect()
}

/// Splits each cell by neighbor counts into every cell until stable.
fn refine(adj: &[u32], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let cell_masks: Vec<u32> = cells
            .iter()
            .map(|c| c.iter().fold(0u32, |m, &v| m | 1 << v))
            .collect();
        let mut next = Vec::with_capacity(adj.len());
        for cell in &cells {
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = cell_masks.iter().map(|&m| (adj[v] & m).count_ones()).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for k in 1..=keyed.len() {
                if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                    next.push(keyed[start..k].iter().map(|&(_, v)| v).collect());
                    start = k;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(adj: &[u32], cells: Vec<Vec<usize>>, best: &mut u64) {
    let cells = refine(adj, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let mut pos = vec![0; adj.len()];
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }
        let mut code = 0u64;
        for (u, &row) in adj.iter().enumerate() {
            for w in (u + 1..adj.len()).filter(|&w| row >> w & 1 == 1) {
                code |= 1 << pair_bit(pos[u], pos[w]);
            }
        }
        *best = (*best).min(code);
        return;
    };
    for &v in &cells[target] {
        let mut split = cells.clone();
        let rest: Vec<usize> = split[target].iter().copied().filter(|&w| w != v).collect();
        split[target] = vec![v];
        split.insert(target + 1, rest);
        search(adj, split, best);
    }
}

/// An isomorphism invariant that determines the graph up to isomorphism
/// (for a fixed `n`). Bit `b(b-1)/2 + a` records the edge between
/// canonical positions `a < b`.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= MAX_CANONICAL_VERTICES, "canonical code supports n <= {MAX_CANONICAL_VERTICES}");
    if n == 0 {
        return 0;
    }
    let adj = masks(g);
    let mut best = u64::MAX;
    search(&adj, vec![(0..n).collect()], &mut best);
    best
}

/// Inverse of [`canonical_code`]: the graph on `0..n` with those edges.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut g = Graph::new(n);
    for b in 1..n {
        for a in 0..b {
            if code >> pair_bit(a, b) & 1 == 1 {
                g.add_edge(a, b).expect("a < b < n");
            }
        }
    }
    g
}

/// One canonical representative of every graph on `n` vertices, ordered by
/// canonical code.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_CANONICAL_VERTICES, "enumeration supports n <= {MAX_CANONICAL_VERTICES}");
    let mut codes = vec![0u64];
    for k in 1..n {
        // codes are graphs on k vertices; extend by vertex k
        let next: HashSet<u64> = codes
            .par_iter()
            .flat_map_iter(|&c| {
                let base = graph_from_code(k + 1, c);
                (0u32..1 << k).map(move |nbrs| {
                    let mut g = base.clone();
                    for w in (0..k).filter(|&w| nbrs >> w & 1 == 1) {
                        g.add_edge(k, w).expect("in range");
                    }
                    canonical_code(&g)
                })
            })
            .collect();
        codes = next.into_iter().collect();
    }
    codes.sort_unstable();
    codes.into_iter().map(|c| graph_from_code(n, c)).collect()
}

/// Connected graphs on `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    nonisomorphic_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Connected graphs on `1..=max_n` vertices up to isomorphism, by size.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

/// Part-size lists `n_1 <= .. <= n_t` with `t` in `parts` and total at most
/// `max_total`; one per complete multipartite graph up to isomorphism.
pub fn partite_specs(max_total: usize, parts: std::ops::RangeInclusive<usize>) -> Vec<PartiteSpec> {
    fn extend(
        min_part: usize,
        left: usize,
        slots: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if slots == 0 {
            out.push(current.clone());
            return;
        }
        // remaining slots each take at least `s`
        for s in min_part..=left / slots {
            current.push(s);
            extend(s, left - s, slots - 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    for t in parts.filter(|&t| t >= 2) {
        let mut lists = Vec::new();
        extend(1, max_total, t, &mut Vec::new(), &mut lists);
        out.extend(lists.into_iter().map(|l| PartiteSpec::new(l).expect("t >= 2, parts >= 1")));
    }
    out
}
