//! Upper bounds on `r_p` from p-private neighborhoods.
//!
//! For `x ∈ X`, a p-private neighbor is an outside neighbor `y` with exactly
//! `p` neighbors in `X`; removing `x` from `X` leaves it short by one. With
//!
//! ```text
//! μ_p(x, X) = |PN_p(x, X)| + max(0, p - |N(x) ∩ X|)
//! μ_p(G)    = min over γ_p-sets X and x ∈ X of μ_p(x, X)
//! ```
//!
//! we have `r_p <= μ_p`, with equality whenever `r_p = 1`.

use std::fmt::{self, Write};
use std::ops::ControlFlow;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::domination::for_each_min_p_dominating_set;
use crate::graph::Graph;
use crate::reinforcement::r_p;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("vertex {0} is not a member of X")]
    NotInSet(usize),
}

/// `PN_p(x, X, G)`
pub fn p_private_neighborhood(
    g: &Graph,
    p: usize,
    x: usize,
    set: &VertexSet,
) -> Result<VertexSet, BoundsError> {
    if !set.contains(x) {
        return Err(BoundsError::NotInSet(x));
    }
    Ok(VertexSet::from_vertices(
        g.n(),
        g.neighbors(x)
            .filter(|&y| !set.contains(y) && g.neighbors_in(y, set) == p),
    ))
}

/// `μ_p(x, X, G)`
pub fn mu_p_vertex(g: &Graph, p: usize, x: usize, set: &VertexSet) -> Result<usize, BoundsError> {
    let private = p_private_neighborhood(g, p, x, set)?.len();
    Ok(private + p.saturating_sub(g.neighbors_in(x, set)))
}

/// `μ_p(X, G)`; `None` for an empty `X`.
pub fn mu_p_set(g: &Graph, p: usize, set: &VertexSet) -> Option<usize> {
    set.iter()
        .map(|x| mu_p_vertex(g, p, x, set).expect("x drawn from X"))
        .min()
}

/// A γ_p-set and member attaining `μ_p(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuWitness {
    pub mu_p: usize,
    pub set: VertexSet,
    pub vertex: usize,
}

/// `μ_p(G)` with the attaining pair, or `None` for the empty graph. Runs
/// over every γ_p-set, so the cost grows with their number.
pub fn mu_p_with_witness(g: &Graph, p: usize) -> Option<MuWitness> {
    let mut best: Option<MuWitness> = None;
    for_each_min_p_dominating_set(g, p, |s| {
        for x in s.iter() {
            let value = mu_p_vertex(g, p, x, s).expect("x drawn from X");
            if best.as_ref().is_none_or(|b| value < b.mu_p) {
                best = Some(MuWitness { mu_p: value, set: s.clone(), vertex: x });
            }
        }
        match &best {
            Some(b) if b.mu_p == 0 => ControlFlow::Break(()),
            _ => ControlFlow::Continue(()),
        }
    });
    best
}

/// `μ_p(G)`; 0 for the empty graph.
pub fn mu_p(g: &Graph, p: usize) -> usize {
    mu_p_with_witness(g, p).map_or(0, |w| w.mu_p)
}

/// Classical private-neighbor bound for ordinary domination:
/// `min over γ-sets X, x ∈ X of |N[x] ∖ N[X ∖ {x}]|`.
///
/// Enumerates every vertex subset by bitmask, independent of the p-domination
/// search; meant as a cross-check for `μ_1` on small graphs (n <= 20).
pub fn classical_mu(g: &Graph) -> Option<usize> {
    let n = g.n();
    assert!(n <= 20, "classical_mu enumerates 2^n subsets");
    if n == 0 {
        return None;
    }
    let closed: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(1u32 << v, |m, w| m | 1 << w))
        .collect();
    let all = (1u32 << n) - 1;
    let cover = |x: u32| {
        (0..n)
            .filter(|&v| x >> v & 1 == 1)
            .fold(0u32, |m, v| m | closed[v])
    };
    let gamma = (0..=all)
        .filter(|&x| cover(x) == all)
        .map(u32::count_ones)
        .min()?;
    (0..=all)
        .filter(|&x| x.count_ones() == gamma && cover(x) == all)
        .flat_map(|x| {
            let closed = &closed;
            (0..n).filter(move |&v| x >> v & 1 == 1).map(move |v| {
                let rest = cover(x & !(1 << v));
                (closed[v] & !rest).count_ones() as usize
            })
        })
        .min()
}

fn or_na<S: Serializer>(v: &Option<usize>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_u64(*x as u64),
        None => s.serialize_str("n/a"),
    }
}

/// Exact `r_p` next to each applicable upper bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub p: usize,
    pub gamma_p: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub r_p_exact: usize,
    pub mu_p: usize,
    /// `δ + p`, only when `δ < p`.
    #[serde(serialize_with = "or_na")]
    pub delta_plus_p: Option<usize>,
    #[serde(rename = "Delta_plus_p")]
    pub max_degree_plus_p: usize,
    /// `p - Δ`, only when `Δ < p` and `γ_p > p`.
    #[serde(rename = "corollary22_value", serialize_with = "or_na")]
    pub low_degree_value: Option<usize>,
    pub all_hold: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundLine {
    pub name: &'static str,
    pub value: usize,
    pub holds: bool,
    pub tight: bool,
}

impl BoundReport {
    /// One entry per applicable relation.
    pub fn lines(&self) -> Vec<BoundLine> {
        let r = self.r_p_exact;
        let upper = |name, value: usize| BoundLine { name, value, holds: r <= value, tight: r == value };
        let mut out = vec![
            upper("mu_p", self.mu_p),
            BoundLine {
                name: "mu_p_equality_when_r_is_1",
                value: self.mu_p,
                holds: r != 1 || self.mu_p == 1,
                tight: r == 1 && self.mu_p == 1,
            },
            upper("Delta_plus_p", self.max_degree_plus_p),
        ];
        if let Some(v) = self.delta_plus_p {
            out.push(upper("delta_plus_p", v));
        }
        if let Some(v) = self.low_degree_value {
            out.push(BoundLine { name: "p_minus_Delta", value: v, holds: r == v, tight: r == v });
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "r_p = {} (p = {}, gamma_p = {})", self.r_p_exact, self.p, self.gamma_p).unwrap();
        for line in self.lines() {
            let state = match (line.holds, line.tight) {
                (false, _) => "VIOLATED",
                (true, true) => "holds (tight)",
                (true, false) => "holds",
            };
            writeln!(s, "{:<26} {:>4}  {}", line.name, line.value, state).unwrap();
        }
        write!(s, "all_hold = {}", self.all_hold).unwrap();
        s
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub fn bound_report(g: &Graph, p: usize) -> BoundReport {
    let cert = r_p(g, p);
    let (min_degree, max_degree) = (g.min_degree(), g.max_degree());
    let mut report = BoundReport {
        p,
        gamma_p: cert.gamma_before,
        min_degree,
        max_degree,
        r_p_exact: cert.r_p,
        mu_p: mu_p(g, p),
        delta_plus_p: (min_degree < p).then_some(min_degree + p),
        max_degree_plus_p: max_degree + p,
        low_degree_value: (max_degree < p && cert.gamma_before > p).then(|| p - max_degree),
        all_hold: false,
    };
    report.all_hold = report.lines().iter().all(|l| l.holds);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::PartiteSpec;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied())
    }

    #[test]
    fn private_neighborhood_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(p_private_neighborhood(&k3, 1, 0, &set(3, &[0])).unwrap().to_vec(), vec![1, 2]);
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            p_private_neighborhood(&c4, 2, 0, &set(4, &[0, 2])).unwrap().to_vec(),
            vec![1, 3]
        );
        let p3 = Graph::path(3).unwrap();
        assert!(p_private_neighborhood(&p3, 1, 0, &set(3, &[0, 1])).unwrap().is_empty());
        assert_eq!(
            p_private_neighborhood(&p3, 1, 2, &set(3, &[0])),
            Err(BoundsError::NotInSet(2))
        );
    }

    #[test]
    fn mu_vertex_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(mu_p_vertex(&k3, 1, 0, &set(3, &[0])), Ok(3));
        let p4 = Graph::path(4).unwrap();
        assert_eq!(mu_p_vertex(&p4, 3, 0, &VertexSet::full(4)), Ok(2));
        // 1 has two neighbors in X and no outside neighbors
        assert_eq!(mu_p_vertex(&k3, 2, 1, &VertexSet::full(3)), Ok(0));
    }

    #[test]
    fn mu_of_worked_multipartite_example() {
        let g = Graph::complete_multipartite(&PartiteSpec::new(vec![2, 2, 10, 17]).unwrap());
        assert_eq!(mu_p(&g, 11), 1);
    }

    #[test]
    fn mu_bounds_path() {
        let p5 = Graph::path(5).unwrap();
        assert!(mu_p(&p5, 2) >= 2);
    }

    #[test]
    fn report_examples() {
        let c6 = bound_report(&Graph::cycle(6).unwrap(), 2);
        assert_eq!((c6.r_p_exact, c6.max_degree_plus_p), (4, 4));
        assert!(c6.all_hold);
        assert!(c6.lines().iter().any(|l| l.name == "Delta_plus_p" && l.tight));

        let p4 = bound_report(&Graph::path(4).unwrap(), 3);
        assert_eq!((p4.r_p_exact, p4.low_degree_value), (1, Some(1)));
        assert!(p4.all_hold);

        let k4 = bound_report(&Graph::complete(4), 1);
        assert_eq!(k4.r_p_exact, 0);
        assert!(k4.all_hold);
        assert_eq!(k4.low_degree_value, None);
    }

    #[test]
    fn classical_mu_small() {
        // P_4: γ = 2, X = {1, 2}: PN(1) = {0}, PN(2) = {3}
        assert_eq!(classical_mu(&Graph::path(4).unwrap()), Some(1));
        assert_eq!(mu_p(&Graph::path(4).unwrap(), 1), 1);
        assert_eq!(classical_mu(&Graph::new(0)), None);
    }
}
