//! Branch-and-bound over p-dominating sets of a fixed size budget.
//!
//! The search keeps, for every vertex, the number of neighbors already in
//! the partial set and the number of still-undecided neighbors. It branches
//! on the deficient vertex with the fewest ways to be repaired: either the
//! vertex itself joins the set, or one of its undecided neighbors does
//! (earlier candidates are excluded in later branches, so every final set is
//! reached along exactly one path).

use std::ops::ControlFlow;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Status {
    Undecided,
    In,
    Out,
}

pub(crate) struct Search {
    p: usize,
    adj: Vec<Vec<usize>>,
    status: Vec<Status>,
    /// `|N(v) ∩ S|`
    inside: Vec<usize>,
    /// number of undecided neighbors of `v`
    open: Vec<usize>,
    chosen: usize,
    gains: Vec<usize>,
    pub(crate) nodes: u64,
}

impl Search {
    pub(crate) fn new(g: &Graph, p: usize) -> Self {
        let n = g.n();
        let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
        let open = adj.iter().map(Vec::len).collect();
        let mut s = Search {
            p,
            adj,
            status: vec![Status::Undecided; n],
            inside: vec![0; n],
            open,
            chosen: 0,
            gains: Vec::with_capacity(n),
            nodes: 0,
        };
        // Vertices of degree < p can never be dominated from outside.
        for v in 0..n {
            if s.adj[v].len() < p {
                s.set(v, Status::In);
            }
        }
        s
    }

    pub(crate) fn forced_count(&self) -> usize {
        self.chosen
    }

    pub(crate) fn status(&self, v: usize) -> Status {
        self.status[v]
    }

    pub(crate) fn set(&mut self, v: usize, st: Status) {
        debug_assert_eq!(self.status[v], Status::Undecided);
        debug_assert_ne!(st, Status::Undecided);
        self.status[v] = st;
        if st == Status::In {
            self.chosen += 1;
        }
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            self.open[w] -= 1;
            if st == Status::In {
                self.inside[w] += 1;
            }
        }
    }

    pub(crate) fn unset(&mut self, v: usize) {
        let st = self.status[v];
        debug_assert_ne!(st, Status::Undecided);
        self.status[v] = Status::Undecided;
        if st == Status::In {
            self.chosen -= 1;
        }
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            self.open[w] += 1;
            if st == Status::In {
                self.inside[w] -= 1;
            }
        }
    }

    fn current_set(&self) -> VertexSet {
        VertexSet::from_vertices(
            self.status.len(),
            (0..self.status.len()).filter(|&v| self.status[v] == Status::In),
        )
    }

    /// Visits every p-dominating set `S` with `|S| <= budget` that is a
    /// leaf of the branching, i.e. each set of size `budget` exactly once
    /// when `budget` is the domination number. Returns `Break` as soon as
    /// the visitor does.
    pub(crate) fn run<F>(&mut self, budget: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&VertexSet) -> ControlFlow<()>,
    {
        self.nodes += 1;
        if self.chosen > budget {
            return ControlFlow::Continue(());
        }
        let remaining = budget - self.chosen;
        let p = self.p;

        let mut total_deficit = 0;
        // (candidate count, vertex) of the most constrained deficient vertex
        let mut pick: Option<(usize, usize)> = None;
        let mut forced_in: Option<usize> = None;
        for u in 0..self.status.len() {
            let st = self.status[u];
            if st == Status::In || self.inside[u] >= p {
                continue;
            }
            let deficit = p - self.inside[u];
            total_deficit += deficit;
            let candidates = match st {
                Status::Out => {
                    if self.open[u] < deficit || deficit > remaining {
                        return ControlFlow::Continue(());
                    }
                    self.open[u]
                }
                _ => {
                    if self.open[u] < deficit {
                        forced_in.get_or_insert(u);
                    }
                    self.open[u] + 1
                }
            };
            if pick.is_none_or(|(c, _)| candidates < c) {
                pick = Some((candidates, u));
            }
        }

        let Some((_, u)) = pick else {
            return visit(&self.current_set());
        };
        if remaining == 0 {
            return ControlFlow::Continue(());
        }

        if let Some(v) = forced_in {
            self.set(v, Status::In);
            let flow = self.run(budget, visit);
            self.unset(v);
            return flow;
        }

        if !self.gain_bound_allows(remaining, total_deficit) {
            return ControlFlow::Continue(());
        }

        let mut candidates = Vec::with_capacity(self.open[u] + 1);
        if self.status[u] == Status::Undecided {
            candidates.push(u);
        }
        candidates.extend(
            self.adj[u]
                .iter()
                .copied()
                .filter(|&w| self.status[w] == Status::Undecided),
        );

        let mut flow = ControlFlow::Continue(());
        let mut excluded = 0;
        for &c in &candidates {
            self.set(c, Status::In);
            flow = self.run(budget, visit);
            self.unset(c);
            if flow.is_break() {
                break;
            }
            self.set(c, Status::Out);
            excluded += 1;
        }
        for &c in candidates[..excluded].iter().rev() {
            self.unset(c);
        }
        flow
    }

    /// Each new member removes its own deficit and lowers each deficient
    /// outside neighbor by one; `remaining` picks must be able to cover
    /// `total_deficit`.
    fn gain_bound_allows(&mut self, remaining: usize, total_deficit: usize) -> bool {
        let p = self.p;
        let mut gains = std::mem::take(&mut self.gains);
        gains.clear();
        for w in 0..self.status.len() {
            if self.status[w] != Status::Undecided {
                continue;
            }
            let own = p.saturating_sub(self.inside[w]);
            let spill = self.adj[w]
                .iter()
                .filter(|&&x| self.status[x] != Status::In && self.inside[x] < p)
                .count();
            gains.push(own + spill);
        }
        let ok = if gains.len() <= remaining {
            gains.iter().sum::<usize>() >= total_deficit
        } else {
            gains.select_nth_unstable_by(remaining - 1, |a, b| b.cmp(a));
            gains[..remaining].iter().sum::<usize>() >= total_deficit
        };
        self.gains = gains;
        ok
    }
}
