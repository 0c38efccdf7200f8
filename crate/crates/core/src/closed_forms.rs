//! Closed-form p-domination and p-reinforcement numbers for paths, cycles
//! and complete multipartite graphs.
//!
//! For `K_{n_1,..,n_t}` the reinforcement number is a minimum over index
//! subsets `X` of the parts whose total size `f(X)` reaches `γ_p`:
//!
//! ```text
//! r_p = min { (p - f*(X)) * (f(X) - γ_p + 1) : f(X) >= γ_p }
//! f*(X) = max { f(Y) : Y ⊂ X, |Y| = |X| - 1, f(Y) < p }
//! ```
//!
//! Subsets are taken over part *positions*, so repeated part sizes are
//! distinct members; they are only collapsed to multisets for display.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest number of parts for which the `2^t` subset enumeration runs.
pub const MAX_PARTS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("a complete multipartite graph needs at least 2 parts, got {0}")]
    TooFewParts(usize),
    #[error("part sizes must be at least 1")]
    EmptyPart,
    #[error("at most {MAX_PARTS} parts are supported, got {0}")]
    TooManyParts(usize),
    #[error("no closed form for p = 1 here; use the exact solver")]
    ThresholdOne,
    #[error("p must be at least 1")]
    ZeroThreshold,
    #[error("a path needs n >= 1")]
    EmptyPath,
    #[error("a cycle needs n >= 3, got {0}")]
    CycleTooSmall(usize),
    #[error("the formula needs n >= 4, got {0}")]
    TooShort(usize),
    #[error("not applicable: gamma_p = {gamma_p} <= p = {p} (r_p = 0 by convention)")]
    NotApplicable { gamma_p: usize, p: usize },
}

/// Part sizes `(n_1, .., n_t)` of a complete t-partite graph, `t >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct PartiteSpec {
    parts: Vec<usize>,
}

impl PartiteSpec {
    pub fn new(parts: Vec<usize>) -> Result<Self, ClosedFormError> {
        if parts.len() < 2 {
            return Err(ClosedFormError::TooFewParts(parts.len()));
        }
        if parts.contains(&0) {
            return Err(ClosedFormError::EmptyPart);
        }
        Ok(PartiteSpec { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    fn check_enumerable(&self) -> Result<(), ClosedFormError> {
        if self.parts.len() > MAX_PARTS {
            Err(ClosedFormError::TooManyParts(self.parts.len()))
        } else {
            Ok(())
        }
    }

    fn f_mask(&self, mask: u32) -> usize {
        self.parts
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &s)| s)
            .sum()
    }
}

impl TryFrom<Vec<usize>> for PartiteSpec {
    type Error = ClosedFormError;
    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        PartiteSpec::new(parts)
    }
}

impl From<PartiteSpec> for Vec<usize> {
    fn from(s: PartiteSpec) -> Self {
        s.parts
    }
}

impl fmt::Display for PartiteSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "K_{{{}}}", parts.join(","))
    }
}

/// A subset of part positions (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSubset {
    mask: u32,
}

impl IndexSubset {
    pub fn from_positions(positions: impl IntoIterator<Item = usize>) -> Self {
        let mut mask = 0;
        for i in positions {
            assert!(i < MAX_PARTS, "part position {i} out of range");
            mask |= 1 << i;
        }
        IndexSubset { mask }
    }

    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_PARTS).filter(move |i| self.mask >> i & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    /// `f(X)`, the total size of the selected parts.
    pub fn f(&self, spec: &PartiteSpec) -> usize {
        spec.f_mask(self.mask)
    }

    /// Selected part sizes, sorted ascending.
    pub fn multiset(&self, spec: &PartiteSpec) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.positions().map(|i| spec.parts[i]).collect();
        sizes.sort_unstable();
        sizes
    }
}

pub fn gamma_p_path(n: usize, p: usize) -> Result<usize, ClosedFormError> {
    match (n, p) {
        (0, _) => Err(ClosedFormError::EmptyPath),
        (_, 0) => Err(ClosedFormError::ZeroThreshold),
        (_, 1) => Err(ClosedFormError::ThresholdOne),
        (_, 2) => Ok(n / 2 + 1),
        _ => Ok(n),
    }
}

pub fn gamma_p_cycle(n: usize, p: usize) -> Result<usize, ClosedFormError> {
    match (n, p) {
        (n, _) if n < 3 => Err(ClosedFormError::CycleTooSmall(n)),
        (_, 0) => Err(ClosedFormError::ZeroThreshold),
        (_, 1) => Err(ClosedFormError::ThresholdOne),
        (_, 2) => Ok(n.div_ceil(2)),
        _ => Ok(n),
    }
}

pub fn r_p_path(n: usize, p: usize) -> Result<usize, ClosedFormError> {
    let gamma = gamma_p_path(n, p)?;
    if gamma <= p {
        return Err(ClosedFormError::NotApplicable { gamma_p: gamma, p });
    }
    Ok(match p {
        2 if n % 2 == 1 => 2,
        2 => 1,
        _ => p - 2,
    })
}

pub fn r_p_cycle(n: usize, p: usize) -> Result<usize, ClosedFormError> {
    let gamma = gamma_p_cycle(n, p)?;
    if gamma <= p {
        return Err(ClosedFormError::NotApplicable { gamma_p: gamma, p });
    }
    Ok(match p {
        2 if n % 2 == 1 => 2,
        2 => 4,
        _ => p - 2,
    })
}

/// Classical (p = 1) reinforcement number of `P_n` and `C_n`: `i` where
/// `n = 3k + i`, `i ∈ {1, 2, 3}`.
pub fn r_1_path_cycle(n: usize) -> Result<usize, ClosedFormError> {
    if n < 4 {
        return Err(ClosedFormError::TooShort(n));
    }
    Ok((n - 1) % 3 + 1)
}

/// Exact `γ_p(K_{n_1..n_t})` from per-part take counts.
///
/// Taking `s_i` vertices from part `i`, an untaken vertex of part `i` sees
/// `Σs - s_i` chosen vertices. So a total `k` is feasible iff some set `F`
/// of fully taken parts has `f(F) <= k` and the remaining `k - f(F)` fits
/// into the other parts at no more than `min(n_i - 1, k - p)` each.
pub fn gamma_p_multipartite(spec: &PartiteSpec, p: usize) -> Result<usize, ClosedFormError> {
    if p == 0 {
        return Err(ClosedFormError::ZeroThreshold);
    }
    spec.check_enumerable()?;
    let t = spec.parts.len();
    let total = spec.total();
    for k in p..total {
        let slack = k - p;
        let feasible = (0u32..1 << t).any(|full| {
            let taken = spec.f_mask(full);
            if taken > k {
                return false;
            }
            let room: usize = (0..t)
                .filter(|i| full >> i & 1 == 0)
                .map(|i| (spec.parts[i] - 1).min(slack))
                .sum();
            k - taken <= room
        });
        if feasible {
            return Ok(k);
        }
    }
    Ok(total)
}

/// All index subsets `X` with `f(X) >= γ_p`, ordered by bitmask.
pub fn script_x(spec: &PartiteSpec, p: usize) -> Result<Vec<IndexSubset>, ClosedFormError> {
    let gamma = gamma_p_multipartite(spec, p)?;
    Ok(subsets_reaching(spec, gamma))
}

fn subsets_reaching(spec: &PartiteSpec, gamma: usize) -> Vec<IndexSubset> {
    (0u32..1 << spec.parts.len())
        .filter(|&m| spec.f_mask(m) >= gamma)
        .map(|mask| IndexSubset { mask })
        .collect()
}

/// `f*(X)`: the largest `f(Y)` over `Y ⊂ X` with one element removed and
/// `f(Y) < p`; `None` when no such `Y` exists. `f*({i}) = 0` via `Y = ∅`.
pub fn f_star(spec: &PartiteSpec, p: usize, x: IndexSubset) -> Option<usize> {
    if x.is_empty() {
        return None;
    }
    x.positions()
        .map(|i| spec.f_mask(x.mask & !(1 << i)))
        .filter(|&fy| fy < p)
        .max()
}

/// One row of the minimization: a member of `𝒳` and its term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaTerm {
    /// Selected part sizes, ascending.
    pub parts: Vec<usize>,
    /// Selected part positions (0-based).
    pub positions: Vec<usize>,
    pub f: usize,
    /// `None` when no qualifying `Y` exists; such rows contribute no term.
    pub f_star: Option<usize>,
    pub term: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultipartiteFormula {
    pub gamma_p: usize,
    pub r_p: usize,
    /// Minimizing member of `𝒳` as a multiset of part sizes.
    pub minimizer: Vec<usize>,
    pub minimizer_positions: Vec<usize>,
    pub terms: Vec<FormulaTerm>,
}

/// `r_p(K_{n_1..n_t})` by the `𝒳` / `f*` minimum. Requires `γ_p > p`.
pub fn r_p_multipartite(spec: &PartiteSpec, p: usize) -> Result<MultipartiteFormula, ClosedFormError> {
    let gamma = gamma_p_multipartite(spec, p)?;
    if gamma <= p {
        return Err(ClosedFormError::NotApplicable { gamma_p: gamma, p });
    }
    let mut terms = Vec::new();
    let mut best: Option<(usize, IndexSubset)> = None;
    for x in subsets_reaching(spec, gamma) {
        let fx = x.f(spec);
        let fs = f_star(spec, p, x);
        let term = fs.map(|fs| (p - fs) * (fx - gamma + 1));
        if let Some(t) = term {
            if best.is_none_or(|(b, _)| t < b) {
                best = Some((t, x));
            }
        }
        terms.push(FormulaTerm {
            parts: x.multiset(spec),
            positions: x.positions().collect(),
            f: fx,
            f_star: fs,
            term,
        });
    }
    // Dropping the smallest part of a member with undefined f* stays in 𝒳,
    // so shrinking ends at a member with f* defined.
    let (r_p, arg) = best.expect("some member of 𝒳 has a defined f*");
    Ok(MultipartiteFormula {
        gamma_p: gamma,
        r_p,
        minimizer: arg.multiset(spec),
        minimizer_positions: arg.positions().collect(),
        terms,
    })
}

/// Exact `r_p(K_{n_1..n_t})` from per-part counts. Requires `γ_p > p`.
///
/// Choosing `k = γ_p - 1` vertices, `s_i` of them from part `i`, leaves each
/// unchosen vertex of part `i` with `k - s_i` chosen neighbors, so the total
/// deficiency is `Σ (n_i - s_i) · max(0, p - k + s_i)`. The minimum over
/// count vectors is found part by part.
///
/// This can be smaller than [`r_p_multipartite`] when the best set splits
/// two or more parts: for `K_{5,5}` and `p = 2`, taking two vertices from
/// one side and one from the other costs 3, while the subset minimum is 4.
pub fn r_p_multipartite_by_counts(spec: &PartiteSpec, p: usize) -> Result<usize, ClosedFormError> {
    let gamma = gamma_p_multipartite(spec, p)?;
    if gamma <= p {
        return Err(ClosedFormError::NotApplicable { gamma_p: gamma, p });
    }
    let k = gamma - 1;
    let mut best = vec![usize::MAX; k + 1];
    best[0] = 0;
    for &n in &spec.parts {
        let mut next = vec![usize::MAX; k + 1];
        for (j, &cost) in best.iter().enumerate().filter(|(_, &c)| c != usize::MAX) {
            for s in 0..=n.min(k - j) {
                let c = cost + (n - s) * (p + s).saturating_sub(k);
                next[j + s] = next[j + s].min(c);
            }
        }
        best = next;
    }
    Ok(best[k])
}
