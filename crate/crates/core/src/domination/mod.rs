//! Exact p-domination numbers and the deficiency functions built on them.
//!
//! A set `S` p-dominates `G` when every vertex outside `S` has at least `p`
//! neighbors inside `S`. The deficiency of a vertex `x` with respect to a
//! set `X` is how many more `X`-neighbors `x` would need, and is zero for
//! members of `X`.

mod search;

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub(crate) use search::{Search, Status};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DominationError {
    #[error("p must be at least 1")]
    ZeroThreshold,
}

/// The p-domination number together with one minimum p-dominating set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationResult {
    pub gamma_p: usize,
    pub witness: VertexSet,
}

pub fn is_p_dominating(g: &Graph, p: usize, s: &VertexSet) -> Result<bool, DominationError> {
    if p == 0 {
        return Err(DominationError::ZeroThreshold);
    }
    Ok((0..g.n()).all(|x| s.contains(x) || g.neighbors_in(x, s) >= p))
}

/// Vertices of degree at most `p - 1`; every p-dominating set contains them.
pub fn forced_vertices(g: &Graph, p: usize) -> VertexSet {
    VertexSet::from_vertices(g.n(), (0..g.n()).filter(|&v| g.degree(v) < p))
}

/// `η_p(x, X, G)`: `p - |N(x) ∩ X|` for `x ∉ X` short of `p` neighbors in `X`,
/// zero otherwise.
pub fn eta_vertex(g: &Graph, p: usize, x: usize, set: &VertexSet) -> usize {
    if set.contains(x) {
        0
    } else {
        p.saturating_sub(g.neighbors_in(x, set))
    }
}

/// `η_p(S, X, G) = Σ_{x ∈ S} η_p(x, X, G)`.
pub fn eta_set(g: &Graph, p: usize, over: &VertexSet, set: &VertexSet) -> usize {
    over.iter().map(|x| eta_vertex(g, p, x, set)).sum()
}

/// `η_p(V(G), X, G)`, the total deficiency of `X`.
pub fn total_deficiency(g: &Graph, p: usize, set: &VertexSet) -> usize {
    (0..g.n()).map(|x| eta_vertex(g, p, x, set)).sum()
}

/// Smallest `k` not ruled out by counting: at least the forced vertices,
/// at least `min(p, n)`, and the `k` largest degrees must be able to supply
/// `p` edges to each of the `n - k` outside vertices.
fn size_lower_bound(g: &Graph, p: usize, forced: usize) -> usize {
    let n = g.n();
    let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let mut supply = 0;
    let mut k = 0;
    for &d in &degrees {
        if supply >= p * (n - k) {
            break;
        }
        supply += d;
        k += 1;
    }
    k.max(forced).max(p.min(n))
}

fn exists_within(search: &mut Search, budget: usize) -> bool {
    search.run(budget, &mut |_| ControlFlow::Break(())).is_break()
}

fn minimum_size(g: &Graph, p: usize) -> usize {
    let mut search = Search::new(g, p);
    let start = size_lower_bound(g, p, search.forced_count());
    (start..=g.n())
        .find(|&k| exists_within(&mut search, k))
        .expect("V(G) is always p-dominating")
}

/// Exact `γ_p(G)` with the lexicographically smallest minimum witness.
///
/// # Panics
/// If `p == 0`.
pub fn gamma_p(g: &Graph, p: usize) -> DominationResult {
    assert!(p >= 1, "p must be at least 1");
    let gamma = minimum_size(g, p);

    // Fix vertices in index order, preferring membership whenever a
    // completion of size `gamma` still exists.
    let mut search = Search::new(g, p);
    for v in 0..g.n() {
        if search.status(v) != Status::Undecided {
            continue;
        }
        search.set(v, Status::In);
        if exists_within(&mut search, gamma) {
            continue;
        }
        search.unset(v);
        search.set(v, Status::Out);
    }
    let witness =
        VertexSet::from_vertices(g.n(), (0..g.n()).filter(|&v| search.status(v) == Status::In));
    debug_assert_eq!(witness.len(), gamma);
    DominationResult { gamma_p: gamma, witness }
}

/// Calls `visit` once for every minimum p-dominating set, stopping early
/// when it returns `Break`. Returns `γ_p(G)`.
pub fn for_each_min_p_dominating_set<F>(g: &Graph, p: usize, mut visit: F) -> usize
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    assert!(p >= 1, "p must be at least 1");
    let gamma = minimum_size(g, p);
    let mut search = Search::new(g, p);
    let _ = search.run(gamma, &mut |s: &VertexSet| {
        debug_assert_eq!(s.len(), gamma);
        visit(s)
    });
    gamma
}

/// Every γ_p-set of `G`, each exactly once, in no particular order.
pub fn all_min_p_dominating_sets(g: &Graph, p: usize) -> impl Iterator<Item = VertexSet> {
    let mut out = Vec::new();
    for_each_min_p_dominating_set(g, p, |s| {
        out.push(s.clone());
        ControlFlow::Continue(())
    });
    out.into_iter()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::PartiteSpec;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied())
    }

    /// Minimum over all 2^n subsets.
    fn brute_gamma(g: &Graph, p: usize) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&m| {
                let s = VertexSet::from_vertices(n, (0..n).filter(|&v| m >> v & 1 == 1));
                is_p_dominating(g, p, &s).unwrap()
            })
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn is_p_dominating_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(!is_p_dominating(&c5, 2, &set(5, &[0, 2])).unwrap());
        assert!(is_p_dominating(&c5, 2, &VertexSet::full(5)).unwrap());
        let p7 = Graph::path(7).unwrap();
        assert!(is_p_dominating(&p7, 2, &set(7, &[0, 1, 3, 5, 6])).unwrap());
        assert_eq!(
            is_p_dominating(&p7, 0, &VertexSet::new(7)),
            Err(DominationError::ZeroThreshold)
        );
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_p(&Graph::path(7).unwrap(), 2).gamma_p, 4);
        assert_eq!(gamma_p(&Graph::cycle(5).unwrap(), 2).gamma_p, 3);
        assert_eq!(gamma_p(&Graph::path(4).unwrap(), 3).gamma_p, 4);
        for p in 1..4 {
            assert_eq!(gamma_p(&Graph::new(5), p).gamma_p, 5);
        }
        let empty = gamma_p(&Graph::new(0), 3);
        assert_eq!(empty.gamma_p, 0);
        assert!(empty.witness.is_empty());
    }

    #[test]
    fn gamma_of_large_multipartite_example() {
        let g = Graph::complete_multipartite(&PartiteSpec::new(vec![2, 2, 10, 17]).unwrap());
        let r = gamma_p(&g, 11);
        assert_eq!(r.gamma_p, 12);
        assert!(is_p_dominating(&g, 11, &r.witness).unwrap());
        // first 2-part and the 10-part
        assert_eq!(r.witness.to_vec(), [0, 1].into_iter().chain(4..14).collect::<Vec<_>>());
    }

    #[test]
    fn witness_is_lexicographically_smallest() {
        let c6 = Graph::cycle(6).unwrap();
        let r = gamma_p(&c6, 2);
        let smallest = all_min_p_dominating_sets(&c6, 2).min().unwrap();
        assert_eq!(r.witness, smallest);
        assert_eq!(r.witness.to_vec(), vec![0, 2, 4]);
    }

    #[test]
    fn all_min_sets_small_cases() {
        let mut k3: Vec<_> = all_min_p_dominating_sets(&Graph::complete(3), 1).collect();
        k3.sort();
        assert_eq!(k3, vec![set(3, &[0]), set(3, &[1]), set(3, &[2])]);

        let p4: Vec<_> = all_min_p_dominating_sets(&Graph::path(4).unwrap(), 3).collect();
        assert_eq!(p4, vec![VertexSet::full(4)]);

        // C_4, p = 2: brute force over all 2-subsets.
        let c4 = Graph::cycle(4).unwrap();
        let mut expected = Vec::new();
        for a in 0..4 {
            for b in a + 1..4 {
                let s = set(4, &[a, b]);
                if is_p_dominating(&c4, 2, &s).unwrap() {
                    expected.push(s);
                }
            }
        }
        let mut got: Vec<_> = all_min_p_dominating_sets(&c4, 2).collect();
        got.sort();
        assert_eq!(got, expected);
        assert_eq!(got, vec![set(4, &[0, 2]), set(4, &[1, 3])]);
    }

    #[test]
    fn eta_examples() {
        let p5 = Graph::path(5).unwrap();
        let x = set(5, &[1, 3]);
        assert_eq!(eta_vertex(&p5, 2, 0, &x), 1);
        assert_eq!(eta_vertex(&p5, 2, 1, &x), 0);
        assert_eq!(eta_set(&p5, 2, &VertexSet::new(5), &x), 0);
        assert_eq!(eta_set(&p5, 2, &VertexSet::full(5), &x), 2);

        let k5 = Graph::complete(5);
        assert_eq!(eta_vertex(&k5, 2, 4, &set(5, &[0, 3])), 0);

        let c6 = Graph::cycle(6).unwrap();
        let dom = gamma_p(&c6, 2).witness;
        assert_eq!(eta_set(&c6, 2, &VertexSet::full(6), &dom), 0);
    }

    #[test]
    fn small_graphs_match_brute_force() {
        let graphs = [
            Graph::path(6).unwrap(),
            Graph::cycle(7).unwrap(),
            Graph::complete(4),
            Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap(),
            Graph::complete_multipartite(&PartiteSpec::new(vec![1, 2, 3]).unwrap()),
        ];
        for g in &graphs {
            for p in 1..=4 {
                assert_eq!(gamma_p(g, p).gamma_p, brute_gamma(g, p), "{g:?} p={p}");
            }
        }
    }
}
