//! p-reinforcement numbers via the minimum total deficiency `η_p(G)`.
//!
//! When `γ_p(G) > p`, `r_p(G)` equals the least total deficiency of a vertex
//! set of size `γ_p(G) - 1`: joining every deficient vertex to enough
//! members of that set makes it p-dominating, and no cheaper edge set can
//! lower `γ_p`. When `γ_p(G) <= p` the number is 0 by convention.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::domination::{gamma_p, is_p_dominating};
use crate::graph::{Edge, Graph};
use crate::vertex_set::VertexSet;

/// Largest edge budget [`r_p_definition_oracle`] will search.
pub const ORACLE_EDGE_CAP: usize = 6;

/// Largest graph the definition oracle accepts (it works on `u64` masks and
/// enumerates vertex subsets).
pub const ORACLE_MAX_VERTICES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReinforcementError {
    #[error("gamma_p = {gamma_p} <= p = {p}: r_p = 0 by convention")]
    ConventionCase { gamma_p: usize, p: usize },
    #[error("no edge set of size <= {budget} lowers gamma_p")]
    BudgetExhausted { budget: usize },
    #[error("edge budget {0} exceeds the oracle cap of {ORACLE_EDGE_CAP}")]
    BudgetAboveCap(usize),
    #[error("graph has {0} vertices; the oracle handles at most {ORACLE_MAX_VERTICES}")]
    TooLarge(usize),
}

/// `η_p(G)` with the lexicographically smallest set attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaResult {
    pub eta_p: usize,
    #[serde(rename = "witness_X")]
    pub witness_x: VertexSet,
}

/// `r_p(G)` together with an edge set `B` and a set `X` showing that
/// `γ_p(G + B) <= |X| < γ_p(G)`.
///
/// In the convention case (`γ_p(G) <= p`) `B` is empty, `X` is a γ_p-set of
/// `G` and `gamma_after == gamma_before`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReinforcementCertificate {
    pub r_p: usize,
    #[serde(rename = "B")]
    pub edges: Vec<Edge>,
    #[serde(rename = "X")]
    pub witness_x: VertexSet,
    pub gamma_before: usize,
    pub gamma_after: usize,
}

impl ReinforcementCertificate {
    pub fn is_convention(&self) -> bool {
        self.r_p == 0
    }
}

/// Minimum of `η_p(V, X, G)` over `|X| = size`, searched in lexicographic
/// order so ties resolve to the smallest set.
pub(crate) fn min_deficiency_of_size(g: &Graph, p: usize, size: usize) -> EtaResult {
    let n = g.n();
    let mut dfs = DeficiencySearch {
        p,
        size,
        adj: (0..n).map(|v| g.neighbors(v).collect()).collect(),
        member: vec![false; n],
        inside: vec![0; n],
        open: (0..n).map(|v| g.degree(v)).collect(),
        chosen: 0,
        best: usize::MAX,
        best_set: Vec::new(),
    };
    dfs.descend(0);
    EtaResult {
        eta_p: dfs.best,
        witness_x: VertexSet::from_vertices(n, dfs.best_set),
    }
}

struct DeficiencySearch {
    p: usize,
    size: usize,
    adj: Vec<Vec<usize>>,
    member: Vec<bool>,
    inside: Vec<usize>,
    /// undecided neighbors (index >= the current branching vertex)
    open: Vec<usize>,
    chosen: usize,
    best: usize,
    best_set: Vec<usize>,
}

impl DeficiencySearch {
    /// Vertices `0..next` are decided.
    fn descend(&mut self, next: usize) {
        let n = self.member.len();
        let p = self.p;
        let remaining = self.size - self.chosen;
        if remaining > n - next {
            return;
        }
        if remaining == 0 {
            let value: usize = (0..n)
                .filter(|&u| !self.member[u])
                .map(|u| p.saturating_sub(self.inside[u]))
                .sum();
            if value < self.best {
                self.best = value;
                self.best_set = (0..n).filter(|&u| self.member[u]).collect();
            }
            return;
        }
        // Decided outsiders can gain at most min(open, remaining) more.
        let bound: usize = (0..next)
            .filter(|&u| !self.member[u])
            .map(|u| p.saturating_sub(self.inside[u] + self.open[u].min(remaining)))
            .sum();
        if bound >= self.best {
            return;
        }

        let v = next;
        self.member[v] = true;
        self.chosen += 1;
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            self.inside[w] += 1;
            self.open[w] -= 1;
        }
        self.descend(next + 1);
        self.member[v] = false;
        self.chosen -= 1;
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            self.inside[w] -= 1;
        }
        self.descend(next + 1);
        for i in 0..self.adj[v].len() {
            self.open[self.adj[v][i]] += 1;
        }
    }
}

/// `η_p(G) = min { η_p(V, X, G) : |X| < γ_p(G) }`, searched over
/// `|X| = γ_p(G) - 1` only (smaller sets never do better).
pub fn eta_p(g: &Graph, p: usize) -> Result<EtaResult, ReinforcementError> {
    assert!(p >= 1, "p must be at least 1");
    let gamma = gamma_p(g, p).gamma_p;
    if gamma <= p {
        return Err(ReinforcementError::ConventionCase { gamma_p: gamma, p });
    }
    Ok(min_deficiency_of_size(g, p, gamma - 1))
}

/// `η_p(G)` scanning every size `|X| < γ_p(G)`; slow, used to confirm the
/// size restriction of [`eta_p`].
pub fn eta_p_all_sizes(g: &Graph, p: usize) -> Result<usize, ReinforcementError> {
    assert!(p >= 1, "p must be at least 1");
    let gamma = gamma_p(g, p).gamma_p;
    if gamma <= p {
        return Err(ReinforcementError::ConventionCase { gamma_p: gamma, p });
    }
    Ok((0..gamma)
        .map(|k| min_deficiency_of_size(g, p, k).eta_p)
        .min()
        .expect("gamma > p >= 1"))
}

/// Joins each deficient vertex `y ∉ X` to the smallest-index non-neighbors
/// in `X` until it has `p` neighbors there.
pub fn repair_edges(g: &Graph, p: usize, x: &VertexSet) -> Vec<Edge> {
    let mut edges = Vec::new();
    for y in (0..g.n()).filter(|&y| !x.contains(y)) {
        let need = p.saturating_sub(g.neighbors_in(y, x));
        if need == 0 {
            continue;
        }
        let targets: Vec<usize> = x.iter().filter(|&t| !g.has_edge(y, t)).take(need).collect();
        assert_eq!(targets.len(), need, "|X| >= p guarantees enough non-neighbors in X");
        edges.extend(targets.into_iter().map(|t| Edge::new(y, t).expect("y ∉ X")));
    }
    edges.sort_unstable();
    edges
}

/// `r_p(G)` with a certificate. Total: returns the `r_p = 0` certificate
/// when `γ_p(G) <= p`.
pub fn r_p(g: &Graph, p: usize) -> ReinforcementCertificate {
    assert!(p >= 1, "p must be at least 1");
    let dom = gamma_p(g, p);
    if dom.gamma_p <= p {
        return ReinforcementCertificate {
            r_p: 0,
            edges: Vec::new(),
            witness_x: dom.witness,
            gamma_before: dom.gamma_p,
            gamma_after: dom.gamma_p,
        };
    }
    let eta = min_deficiency_of_size(g, p, dom.gamma_p - 1);
    let edges = repair_edges(g, p, &eta.witness_x);
    debug_assert_eq!(edges.len(), eta.eta_p);
    ReinforcementCertificate {
        r_p: eta.eta_p,
        edges,
        gamma_after: eta.witness_x.len(),
        witness_x: eta.witness_x,
        gamma_before: dom.gamma_p,
    }
}

/// Why a certificate was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateFlaw {
    #[error("witness mentions vertices outside the graph")]
    WitnessOutOfRange,
    #[error("edge {0} is not a non-edge of the graph")]
    NotANonEdge(Edge),
    #[error("edge {0} is listed twice")]
    DuplicateEdge(Edge),
    #[error("gamma_before = {claimed} but gamma_p(G) = {actual}")]
    GammaBefore { claimed: usize, actual: usize },
    #[error("|B| = {edges} but r_p = {claimed}")]
    EdgeCount { edges: usize, claimed: usize },
    #[error("|X| = {witness} but gamma_after = {claimed}")]
    WitnessSize { witness: usize, claimed: usize },
    #[error("gamma_after = {after} is not below gamma_before = {before}")]
    NoDrop { before: usize, after: usize },
    #[error("X does not p-dominate G + B")]
    NotDominating,
    #[error("r_p = 0 requires gamma_p <= p, an empty B and unchanged gamma")]
    BadConvention,
}

/// Checks a certificate against the graph, reporting the first flaw found.
pub fn check_certificate(
    g: &Graph,
    p: usize,
    cert: &ReinforcementCertificate,
) -> Result<(), CertificateFlaw> {
    if cert.witness_x.iter().any(|v| v >= g.n()) {
        return Err(CertificateFlaw::WitnessOutOfRange);
    }
    let witness = VertexSet::from_vertices(g.n(), cert.witness_x.iter());
    let mut seen = std::collections::HashSet::new();
    for &e in &cert.edges {
        if e.v() >= g.n() || g.has_edge(e.u(), e.v()) {
            return Err(CertificateFlaw::NotANonEdge(e));
        }
        if !seen.insert(e) {
            return Err(CertificateFlaw::DuplicateEdge(e));
        }
    }
    let actual = gamma_p(g, p).gamma_p;
    if cert.gamma_before != actual {
        return Err(CertificateFlaw::GammaBefore { claimed: cert.gamma_before, actual });
    }
    if cert.edges.len() != cert.r_p {
        return Err(CertificateFlaw::EdgeCount { edges: cert.edges.len(), claimed: cert.r_p });
    }
    if witness.len() != cert.gamma_after {
        return Err(CertificateFlaw::WitnessSize { witness: witness.len(), claimed: cert.gamma_after });
    }
    if cert.r_p == 0 {
        if actual > p || cert.gamma_after != actual {
            return Err(CertificateFlaw::BadConvention);
        }
    } else if cert.gamma_after >= cert.gamma_before {
        return Err(CertificateFlaw::NoDrop { before: cert.gamma_before, after: cert.gamma_after });
    }
    let augmented = g.with_added_edges(&cert.edges).expect("edges checked above");
    if !is_p_dominating(&augmented, p, &witness).expect("p >= 1") {
        return Err(CertificateFlaw::NotDominating);
    }
    Ok(())
}

pub fn validate_certificate(g: &Graph, p: usize, cert: &ReinforcementCertificate) -> bool {
    check_certificate(g, p, cert).is_ok()
}

/// `r_p(G)` straight from the definition: the smallest `|B|`, `B ⊆ E(G^c)`,
/// with `γ_p(G + B) < γ_p(G)`, trying edge sets in increasing size.
///
/// Works on plain bitmasks and exhaustive subset checks, sharing no code
/// with the deficiency search. Requires `γ_p(G) > p`.
pub fn r_p_definition_oracle(g: &Graph, p: usize, max_budget: usize) -> Result<usize, ReinforcementError> {
    assert!(p >= 1, "p must be at least 1");
    let n = g.n();
    if n > ORACLE_MAX_VERTICES {
        return Err(ReinforcementError::TooLarge(n));
    }
    if max_budget > ORACLE_EDGE_CAP {
        return Err(ReinforcementError::BudgetAboveCap(max_budget));
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, w| m | 1 << w))
        .collect();
    let dominates = |adj: &[u64], x: u64| {
        (0..n).all(|v| x >> v & 1 == 1 || (adj[v] & x).count_ones() as usize >= p)
    };
    let all: u64 = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let gamma = (0..=all)
        .filter(|&x| dominates(&adj, x))
        .map(|x| x.count_ones() as usize)
        .min()
        .unwrap_or(0);
    if gamma <= p {
        return Err(ReinforcementError::ConventionCase { gamma_p: gamma, p });
    }
    let targets: Vec<u64> = (0..=all)
        .filter(|x| x.count_ones() as usize == gamma - 1)
        .collect();
    let nonedges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| adj[u] >> v & 1 == 0)
        .collect();

    fn choose(
        adj: &mut Vec<u64>,
        nonedges: &[(usize, usize)],
        from: usize,
        left: usize,
        lowered: &dyn Fn(&[u64]) -> bool,
    ) -> bool {
        if left == 0 {
            return lowered(adj);
        }
        for i in from..nonedges.len() {
            if nonedges.len() - i < left {
                break;
            }
            let (u, v) = nonedges[i];
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            let hit = choose(adj, nonedges, i + 1, left - 1, lowered);
            adj[u] &= !(1 << v);
            adj[v] &= !(1 << u);
            if hit {
                return true;
            }
        }
        false
    }

    let lowered = |adj: &[u64]| targets.iter().any(|&x| dominates(adj, x));
    let mut work = adj.clone();
    for size in 1..=max_budget {
        if choose(&mut work, &nonedges, 0, size, &lowered) {
            return Ok(size);
        }
    }
    Err(ReinforcementError::BudgetExhausted { budget: max_budget })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::total_deficiency;
    use crate::closed_forms::PartiteSpec;

    #[test]
    fn eta_examples() {
        let p5 = Graph::path(5).unwrap();
        let e = eta_p(&p5, 2).unwrap();
        assert_eq!(e.eta_p, 2);
        assert_eq!(e.witness_x.to_vec(), vec![1, 3]);
        assert_eq!(total_deficiency(&p5, 2, &e.witness_x), 2);

        assert_eq!(eta_p(&Graph::cycle(6).unwrap(), 2).unwrap().eta_p, 4);
        assert_eq!(eta_p(&Graph::path(4).unwrap(), 3).unwrap().eta_p, 1);
        assert_eq!(
            eta_p(&Graph::complete(4), 1),
            Err(ReinforcementError::ConventionCase { gamma_p: 1, p: 1 })
        );
    }

    #[test]
    fn r_p_examples() {
        assert_eq!(r_p(&Graph::cycle(7).unwrap(), 2).r_p, 2);
        assert_eq!(r_p(&Graph::path(6).unwrap(), 2).r_p, 1);
        assert_eq!(r_p(&Graph::path(4).unwrap(), 1).r_p, 1);
        let k4 = r_p(&Graph::complete(4), 2);
        assert_eq!((k4.r_p, k4.gamma_before, k4.gamma_after), (0, 2, 2));
        assert!(k4.edges.is_empty());
    }

    #[test]
    fn multipartite_example_is_one() {
        // 31 vertices; the deficiency search is still quick here.
        let g = Graph::complete_multipartite(&PartiteSpec::new(vec![2, 2, 10, 17]).unwrap());
        let cert = r_p(&g, 11);
        assert_eq!(cert.r_p, 1);
        assert!(validate_certificate(&g, 11, &cert));
    }

    #[test]
    fn edgeless_graph_needs_p_edges() {
        let g = Graph::new(4);
        let cert = r_p(&g, 2);
        assert_eq!(cert.r_p, 2);
        assert!(validate_certificate(&g, 2, &cert));
        assert_eq!(r_p(&Graph::new(0), 1).r_p, 0);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(r_p_definition_oracle(&Graph::cycle(6).unwrap(), 2, 4), Ok(4));
        assert_eq!(r_p_definition_oracle(&Graph::path(5).unwrap(), 2, 2), Ok(2));
        assert_eq!(r_p_definition_oracle(&Graph::path(6).unwrap(), 2, 1), Ok(1));
        assert_eq!(
            r_p_definition_oracle(&Graph::cycle(6).unwrap(), 2, 3),
            Err(ReinforcementError::BudgetExhausted { budget: 3 })
        );
        assert_eq!(
            r_p_definition_oracle(&Graph::cycle(6).unwrap(), 2, 7),
            Err(ReinforcementError::BudgetAboveCap(7))
        );
    }

    #[test]
    fn certificate_round_trip_and_tampering() {
        let g = Graph::cycle(6).unwrap();
        let cert = r_p(&g, 2);
        assert_eq!(cert.edges.len(), 4);
        assert_eq!(check_certificate(&g, 2, &cert), Ok(()));

        let json = serde_json::to_string(&cert).unwrap();
        assert!(json.contains("\"B\"") && json.contains("\"X\""));
        let back: ReinforcementCertificate = serde_json::from_str(&json).unwrap();
        assert!(validate_certificate(&g, 2, &back));

        let mut short = cert.clone();
        short.edges.pop();
        assert!(!validate_certificate(&g, 2, &short));
        short.r_p -= 1;
        assert_eq!(check_certificate(&g, 2, &short), Err(CertificateFlaw::NotDominating));

        let mut misstated = cert.clone();
        misstated.gamma_before += 1;
        assert!(matches!(
            check_certificate(&g, 2, &misstated),
            Err(CertificateFlaw::GammaBefore { .. })
        ));

        let mut present = cert.clone();
        present.edges[0] = Edge::new(0, 1).unwrap();
        assert!(matches!(check_certificate(&g, 2, &present), Err(CertificateFlaw::NotANonEdge(_))));
    }

    #[test]
    fn all_sizes_scan_agrees() {
        for g in [Graph::path(7).unwrap(), Graph::cycle(8).unwrap(), Graph::new(4)] {
            for p in 1..=3 {
                if let Ok(e) = eta_p(&g, p) {
                    assert_eq!(eta_p_all_sizes(&g, p), Ok(e.eta_p));
                }
            }
        }
    }
}
