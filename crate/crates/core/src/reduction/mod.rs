//! The 3SAT to p-reinforcement transformation.
//!
//! For a 3-CNF over variables `u_1..u_n` with clauses `C_1..C_m` and a
//! threshold `p >= 2`, the gadget graph consists of
//!
//! * one block `H_i` per variable: `K_{2p+2}` on `u_i, ū_i, v_{i,1..p},
//!   v̄_{i,1..p}` minus the edges `u_i v̄_{i,j}` and `ū_i v_{i,j}` for
//!   `j < p`;
//! * a vertex `c_j` per clause, adjacent to the literal vertices of `C_j`;
//! * a clique `T` on `p` vertices, every one adjacent to every `c_j`.
//!
//! Then `γ_p = p(n + 1)`, and the formula is satisfiable exactly when one
//! added edge lowers `γ_p`.
//!
//! Vertex numbering: block `i` occupies `i(2p+2)..(i+1)(2p+2)` in the order
//! `u_i, ū_i, v_{i,1}, .., v_{i,p}, v̄_{i,1}, .., v̄_{i,p}`; the clause
//! vertices follow, then `T`.

mod dimacs;

use std::fmt::{self, Write};
use std::ops::{ControlFlow, Range};

use serde::Serialize;
use thiserror::Error;

use crate::domination::{for_each_min_p_dominating_set, total_deficiency};
use crate::graph::{Edge, Graph};
use crate::reinforcement::{r_p, ReinforcementCertificate};
use crate::vertex_set::VertexSet;

pub use dimacs::{parse_dimacs_cnf, write_dimacs_cnf, CnfWarning, DimacsError};

/// Largest number of variables [`sat_bruteforce`] accepts.
pub const SAT_MAX_VARS: usize = 20;

/// Default vertex limit for [`check_reduction`]; the exact `r_p` search is
/// comfortable up to about this size.
pub const GADGET_VERTEX_LIMIT: usize = 30;

/// A possibly negated variable; variables are numbered from 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    var: usize,
    negated: bool,
}

impl Literal {
    pub fn positive(var: usize) -> Self {
        Literal { var, negated: false }
    }

    pub fn negative(var: usize) -> Self {
        Literal { var, negated: true }
    }

    pub fn var(&self) -> usize {
        self.var
    }

    pub fn is_negated(&self) -> bool {
        self.negated
    }

    pub fn negate(self) -> Self {
        Literal { var: self.var, negated: !self.negated }
    }

    /// DIMACS form: `k` for `u_k`, `-k` for `ū_k` (1-based).
    pub fn from_dimacs(lit: i64, num_vars: usize) -> Result<Self, CnfError> {
        if lit == 0 {
            return Err(CnfError::ZeroLiteral);
        }
        let var = lit.unsigned_abs() as usize;
        if var > num_vars {
            return Err(CnfError::VariableOutOfRange { literal: lit, num_vars });
        }
        Ok(Literal { var: var - 1, negated: lit < 0 })
    }

    pub fn to_dimacs(&self) -> i64 {
        let k = self.var as i64 + 1;
        if self.negated {
            -k
        } else {
            k
        }
    }

    pub fn holds(&self, assignment: &[bool]) -> bool {
        assignment[self.var] != self.negated
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "~u_{}", self.var + 1)
        } else {
            write!(f, "u_{}", self.var + 1)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("a formula needs at least one variable")]
    NoVariables,
    #[error("clause has {0} literals, expected 3")]
    ClauseWidth(usize),
    #[error("literal 0 inside a clause")]
    ZeroLiteral,
    #[error("literal {literal} refers past variable {num_vars}")]
    VariableOutOfRange { literal: i64, num_vars: usize },
    #[error("literal {0} repeated in one clause")]
    RepeatedLiteral(i64),
}

/// A CNF whose clauses are sets of exactly three distinct literals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf3 {
    num_vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl Cnf3 {
    pub fn new(num_vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self, CnfError> {
        if num_vars == 0 {
            return Err(CnfError::NoVariables);
        }
        let mut sorted = Vec::with_capacity(clauses.len());
        for mut c in clauses {
            for lit in &c {
                if lit.var >= num_vars {
                    return Err(CnfError::VariableOutOfRange { literal: lit.to_dimacs(), num_vars });
                }
            }
            c.sort_unstable();
            if c[0] == c[1] || c[1] == c[2] {
                return Err(CnfError::RepeatedLiteral(c[1].to_dimacs()));
            }
            sorted.push(c);
        }
        Ok(Cnf3 { num_vars, clauses: sorted })
    }

    /// Builds a formula from DIMACS-style integer clauses.
    pub fn from_dimacs(num_vars: usize, clauses: &[Vec<i64>]) -> Result<Self, CnfError> {
        let parsed = clauses
            .iter()
            .map(|c| Self::clause_from_dimacs(num_vars, c))
            .collect::<Result<_, _>>()?;
        Self::new(num_vars, parsed)
    }

    pub(crate) fn clause_from_dimacs(num_vars: usize, lits: &[i64]) -> Result<[Literal; 3], CnfError> {
        if lits.len() != 3 {
            return Err(CnfError::ClauseWidth(lits.len()));
        }
        let mut c = [Literal::positive(0); 3];
        for (slot, &l) in c.iter_mut().zip(lits) {
            *slot = Literal::from_dimacs(l, num_vars)?;
        }
        if c[0] == c[1] || c[0] == c[2] || c[1] == c[2] {
            let dup = if c[0] == c[1] || c[0] == c[2] { c[0] } else { c[1] };
            return Err(CnfError::RepeatedLiteral(dup.to_dimacs()));
        }
        Ok(c)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        assert_eq!(assignment.len(), self.num_vars, "one value per variable");
        self.clauses.iter().all(|c| c.iter().any(|l| l.holds(assignment)))
    }

    /// Literals (both polarities of every variable) used by no clause.
    pub fn uncovered_literals(&self) -> Vec<Literal> {
        (0..self.num_vars)
            .flat_map(|v| [Literal::positive(v), Literal::negative(v)])
            .filter(|l| !self.clauses.iter().any(|c| c.contains(l)))
            .collect()
    }

    pub fn covers_all_literals(&self) -> bool {
        self.uncovered_literals().is_empty()
    }
}

impl fmt::Display for Cnf3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clauses.is_empty() {
            return f.write_str("(empty)");
        }
        for (k, c) in self.clauses.iter().enumerate() {
            if k > 0 {
                f.write_str(" & ")?;
            }
            write!(f, "({} | {} | {})", c[0], c[1], c[2])?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("the gadget needs p >= 2, got {0}")]
    ThresholdTooSmall(usize),
    #[error("{0} variables exceed the truth-table limit of {SAT_MAX_VARS}")]
    TooManyVariables(usize),
    #[error("gadget has {vertices} vertices, above the limit of {limit}")]
    GadgetTooLarge { vertices: usize, limit: usize },
    #[error("literal {0} occurs in no clause; the equivalence assumes every literal is used")]
    UncoveredLiteral(Literal),
    #[error("invalid witness: {0}")]
    InvalidWitness(GadgetViolation),
}

/// Role of a gadget vertex. Indices are 0-based; labels print them 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    U(usize),
    UBar(usize),
    V(usize, usize),
    VBar(usize, usize),
    Clause(usize),
    T(usize),
}

impl Role {
    pub fn block(&self) -> Option<usize> {
        match *self {
            Role::U(i) | Role::UBar(i) | Role::V(i, _) | Role::VBar(i, _) => Some(i),
            Role::Clause(_) | Role::T(_) => None,
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::U(i) => write!(f, "u_{}", i + 1),
            Role::UBar(i) => write!(f, "~u_{}", i + 1),
            Role::V(i, j) => write!(f, "v_{}_{}", i + 1, j + 1),
            Role::VBar(i, j) => write!(f, "~v_{}_{}", i + 1, j + 1),
            Role::Clause(j) => write!(f, "c_{}", j + 1),
            Role::T(k) => write!(f, "t_{}", k + 1),
        }
    }
}

/// The gadget graph of a formula with its vertex roles.
#[derive(Debug, Clone)]
pub struct GadgetGraph {
    graph: Graph,
    labels: Vec<Role>,
    cnf: Cnf3,
    p: usize,
    insertions: usize,
}

impl GadgetGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cnf(&self) -> &Cnf3 {
        &self.cnf
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn role(&self, v: usize) -> Role {
        self.labels[v]
    }

    pub fn labels(&self) -> &[Role] {
        &self.labels
    }

    /// Number of edge insertions performed while building.
    pub fn insertions(&self) -> usize {
        self.insertions
    }

    fn block_size(&self) -> usize {
        2 * self.p + 2
    }

    pub fn block(&self, i: usize) -> Range<usize> {
        let s = self.block_size();
        i * s..(i + 1) * s
    }

    pub fn u(&self, i: usize) -> usize {
        self.block(i).start
    }

    pub fn u_bar(&self, i: usize) -> usize {
        self.block(i).start + 1
    }

    pub fn v(&self, i: usize, j: usize) -> usize {
        self.block(i).start + 2 + j
    }

    pub fn v_bar(&self, i: usize, j: usize) -> usize {
        self.block(i).start + 2 + self.p + j
    }

    pub fn literal_vertex(&self, lit: Literal) -> usize {
        if lit.is_negated() {
            self.u_bar(lit.var())
        } else {
            self.u(lit.var())
        }
    }

    pub fn clause_vertices(&self) -> Range<usize> {
        let start = self.cnf.num_vars * self.block_size();
        start..start + self.cnf.clauses.len()
    }

    pub fn t_vertices(&self) -> Range<usize> {
        let start = self.clause_vertices().end;
        start..start + self.p
    }

    /// `p(n + 1)`
    pub fn expected_gamma(&self) -> usize {
        self.p * (self.cnf.num_vars + 1)
    }

    /// `vertex_index role` lines.
    pub fn labels_text(&self) -> String {
        let mut s = String::new();
        for (v, role) in self.labels.iter().enumerate() {
            writeln!(s, "{v} {role}").unwrap();
        }
        s
    }
}

pub fn build_gadget(cnf: &Cnf3, p: usize) -> Result<GadgetGraph, ReductionError> {
    if p < 2 {
        return Err(ReductionError::ThresholdTooSmall(p));
    }
    let n = cnf.num_vars;
    let m = cnf.clauses.len();
    let block = 2 * p + 2;
    let mut labels = Vec::with_capacity(n * block + m + p);
    for i in 0..n {
        labels.push(Role::U(i));
        labels.push(Role::UBar(i));
        labels.extend((0..p).map(|j| Role::V(i, j)));
        labels.extend((0..p).map(|j| Role::VBar(i, j)));
    }
    labels.extend((0..m).map(Role::Clause));
    labels.extend((0..p).map(Role::T));

    let mut gadget = GadgetGraph {
        graph: Graph::new(labels.len()),
        labels,
        cnf: cnf.clone(),
        p,
        insertions: 0,
    };
    let mut edges = Vec::new();
    for i in 0..n {
        let r = gadget.block(i);
        let (u, ub) = (gadget.u(i), gadget.u_bar(i));
        let removed: Vec<(usize, usize)> = (0..p - 1)
            .flat_map(|j| [(u, gadget.v_bar(i, j)), (ub, gadget.v(i, j))])
            .collect();
        for a in r.clone() {
            for b in a + 1..r.end {
                if !removed.contains(&(a, b)) {
                    edges.push((a, b));
                }
            }
        }
    }
    for (j, clause) in cnf.clauses.iter().enumerate() {
        let c = gadget.clause_vertices().start + j;
        edges.extend(clause.iter().map(|&l| (gadget.literal_vertex(l), c)));
        edges.extend(gadget.t_vertices().map(|t| (c, t)));
    }
    let t = gadget.t_vertices();
    for a in t.clone() {
        edges.extend((a + 1..t.end).map(|b| (a, b)));
    }
    for &(a, b) in &edges {
        gadget.graph.add_edge(a, b).expect("gadget edges are in range");
    }
    gadget.insertions = edges.len();
    Ok(gadget)
}

/// A satisfying assignment, if any, found by trying all `2^n` assignments
/// (variable `k` is bit `k` of the counter).
pub fn sat_bruteforce(cnf: &Cnf3) -> Result<Option<Vec<bool>>, ReductionError> {
    let n = cnf.num_vars;
    if n > SAT_MAX_VARS {
        return Err(ReductionError::TooManyVariables(n));
    }
    Ok((0u32..1 << n)
        .map(|bits| (0..n).map(|k| bits >> k & 1 == 1).collect::<Vec<_>>())
        .find(|a| cnf.evaluate(a)))
}

/// A property of minimum sets that the construction guarantees but a given
/// set fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetViolation {
    #[error("gamma_p = {actual}, expected p(n+1) = {expected}")]
    Gamma { expected: usize, actual: usize },
    #[error("block H_{} holds {count} members, expected p", .block + 1)]
    BlockCount { block: usize, count: usize },
    #[error("both u_{0} and ~u_{0} are members", .var + 1)]
    BothLiterals { var: usize },
    #[error("clause vertex c_{} is a member", .clause + 1)]
    ClauseVertex { clause: usize },
    #[error("T holds {count} members, expected {expected}")]
    TCount { count: usize, expected: usize },
    #[error("set has {size} vertices, expected {expected}")]
    Size { size: usize, expected: usize },
    #[error("total deficiency {0}; a single added edge needs exactly 1")]
    Deficiency(usize),
    #[error("edge {0} does not join T minus the set to a block member of the set")]
    Endpoints(Edge),
    #[error("assignment read from the set does not satisfy the formula")]
    Unsatisfied,
}

/// Block structure of one γ_p-set `D` of the gadget:
/// `|V(H_i) ∩ D| = p` and `|{u_i, ū_i} ∩ D| <= 1` for every block.
pub fn check_gamma_set_blocks(gadget: &GadgetGraph, d: &VertexSet) -> Result<(), GadgetViolation> {
    for i in 0..gadget.cnf.num_vars {
        let count = gadget.block(i).filter(|&v| d.contains(v)).count();
        if count != gadget.p {
            return Err(GadgetViolation::BlockCount { block: i, count });
        }
        if d.contains(gadget.u(i)) && d.contains(gadget.u_bar(i)) {
            return Err(GadgetViolation::BothLiterals { var: i });
        }
    }
    Ok(())
}

/// Over the whole gadget: `γ_p = p(n + 1)` and every γ_p-set passes
/// [`check_gamma_set_blocks`]. Returns the number of γ_p-sets inspected.
pub fn check_gamma_sets(gadget: &GadgetGraph) -> Result<usize, GadgetViolation> {
    let mut first_flaw = None;
    let mut count = 0;
    let gamma = for_each_min_p_dominating_set(&gadget.graph, gadget.p, |d| {
        count += 1;
        match check_gamma_set_blocks(gadget, d) {
            Ok(()) => ControlFlow::Continue(()),
            Err(e) => {
                first_flaw = Some(e);
                ControlFlow::Break(())
            }
        }
    });
    if gamma != gadget.expected_gamma() {
        return Err(GadgetViolation::Gamma { expected: gadget.expected_gamma(), actual: gamma });
    }
    first_flaw.map_or(Ok(count), Err)
}

/// Shape of an edge `e` with `γ_p(G + e) < γ_p(G)` and a γ_p-set `D_e`
/// of `G + e`: `D_e` avoids the clause vertices, holds `p - 1` vertices of
/// `T`, and `e` joins `T ∖ D_e` to a block vertex in `D_e`.
pub fn check_lowering_edge(gadget: &GadgetGraph, e: Edge, d_e: &VertexSet) -> Result<(), GadgetViolation> {
    if let Some(v) = gadget.clause_vertices().find(|&v| d_e.contains(v)) {
        return Err(GadgetViolation::ClauseVertex { clause: v - gadget.clause_vertices().start });
    }
    let count = gadget.t_vertices().filter(|&v| d_e.contains(v)).count();
    if count != gadget.p - 1 {
        return Err(GadgetViolation::TCount { count, expected: gadget.p - 1 });
    }
    let t = gadget.t_vertices();
    let in_t_out = |v: usize| t.contains(&v) && !d_e.contains(v);
    let in_block = |v: usize| gadget.role(v).block().is_some() && d_e.contains(v);
    let (a, b) = (e.u(), e.v());
    if (in_t_out(a) && in_block(b)) || (in_t_out(b) && in_block(a)) {
        Ok(())
    } else {
        Err(GadgetViolation::Endpoints(e))
    }
}

/// Reads the truth assignment `t(u_i) = [u_i ∈ D_e]` off a set that becomes
/// p-dominating after one added edge.
///
/// `D_e` must avoid the clause vertices, contain at most one of `u_i, ū_i`,
/// have `p(n+1) - 1` members and total deficiency exactly 1; the resulting
/// assignment is checked against the formula.
pub fn extract_assignment(gadget: &GadgetGraph, d_e: &VertexSet) -> Result<Vec<bool>, ReductionError> {
    let flaw = |v| Err(ReductionError::InvalidWitness(v));
    let g = &gadget.graph;
    if let Some(v) = d_e.iter().find(|&v| v >= g.n()) {
        return flaw(GadgetViolation::Size { size: v + 1, expected: g.n() });
    }
    let d_e = VertexSet::from_vertices(g.n(), d_e.iter());
    if let Some(v) = gadget.clause_vertices().find(|&v| d_e.contains(v)) {
        return flaw(GadgetViolation::ClauseVertex { clause: v - gadget.clause_vertices().start });
    }
    let n = gadget.cnf.num_vars;
    if let Some(var) = (0..n).find(|&i| d_e.contains(gadget.u(i)) && d_e.contains(gadget.u_bar(i))) {
        return flaw(GadgetViolation::BothLiterals { var });
    }
    let expected = gadget.expected_gamma() - 1;
    if d_e.len() != expected {
        return flaw(GadgetViolation::Size { size: d_e.len(), expected });
    }
    let deficiency = total_deficiency(g, gadget.p, &d_e);
    if deficiency != 1 {
        return flaw(GadgetViolation::Deficiency(deficiency));
    }
    let assignment: Vec<bool> = (0..n).map(|i| d_e.contains(gadget.u(i))).collect();
    if !gadget.cnf.evaluate(&assignment) {
        return flaw(GadgetViolation::Unsatisfied);
    }
    Ok(assignment)
}

/// Everything [`check_reduction`] computed for one formula.
#[derive(Debug, Clone, Serialize)]
pub struct ReductionCheck {
    pub num_vars: usize,
    pub num_clauses: usize,
    pub p: usize,
    pub vertices: usize,
    pub satisfiable: bool,
    pub sat_assignment: Option<Vec<bool>>,
    pub gamma_p: usize,
    pub expected_gamma_p: usize,
    pub r_p: usize,
    pub certificate: ReinforcementCertificate,
    /// Assignment read off the certificate when `r_p = 1`.
    pub extracted_assignment: Option<Vec<bool>>,
    /// Why the certificate edge has the wrong shape, if it does.
    pub edge_violation: Option<String>,
    pub holds: bool,
}

impl ReductionCheck {
    pub fn summary(&self) -> String {
        format!(
            "equivalence {}: SAT={}, r_p={}",
            if self.holds { "holds" } else { "FAILS" },
            self.satisfiable,
            self.r_p
        )
    }
}

/// Builds the gadget and compares satisfiability with `r_p(G) = 1`, also
/// checking `γ_p = p(n+1)`, the shape of the certificate edge and the extracted
/// assignment. Refuses gadgets above [`GADGET_VERTEX_LIMIT`] vertices.
pub fn check_reduction(cnf: &Cnf3, p: usize) -> Result<ReductionCheck, ReductionError> {
    check_reduction_with_limit(cnf, p, GADGET_VERTEX_LIMIT)
}

pub fn check_reduction_with_limit(
    cnf: &Cnf3,
    p: usize,
    vertex_limit: usize,
) -> Result<ReductionCheck, ReductionError> {
    if let Some(&lit) = cnf.uncovered_literals().first() {
        return Err(ReductionError::UncoveredLiteral(lit));
    }
    let gadget = build_gadget(cnf, p)?;
    let vertices = gadget.graph.n();
    if vertices > vertex_limit {
        return Err(ReductionError::GadgetTooLarge { vertices, limit: vertex_limit });
    }
    let sat_assignment = sat_bruteforce(cnf)?;
    let satisfiable = sat_assignment.is_some();
    let certificate = r_p(&gadget.graph, p);

    let mut extracted_assignment = None;
    let mut edge_violation = None;
    let mut extraction_ok = true;
    if certificate.r_p == 1 {
        if let Err(v) = check_lowering_edge(&gadget, certificate.edges[0], &certificate.witness_x) {
            edge_violation = Some(v.to_string());
        }
        match extract_assignment(&gadget, &certificate.witness_x) {
            Ok(a) => extracted_assignment = Some(a),
            Err(_) => extraction_ok = false,
        }
    }
    let holds = certificate.gamma_before == gadget.expected_gamma()
        && satisfiable == (certificate.r_p == 1)
        && edge_violation.is_none()
        && extraction_ok;
    Ok(ReductionCheck {
        num_vars: cnf.num_vars,
        num_clauses: cnf.clauses.len(),
        p,
        vertices,
        satisfiable,
        sat_assignment,
        gamma_p: certificate.gamma_before,
        expected_gamma_p: gadget.expected_gamma(),
        r_p: certificate.r_p,
        certificate,
        extracted_assignment,
        edge_violation,
        holds,
    })
}

/// `true` iff satisfiability of `cnf` agrees with `r_p(gadget) = 1` (and the
/// side checks of [`check_reduction`] pass).
pub fn verify_reduction(cnf: &Cnf3, p: usize) -> Result<bool, ReductionError> {
    check_reduction(cnf, p).map(|c| c.holds)
}

/// Every ordered list of `m` distinct 3-literal clauses over `n` variables
/// that uses each literal at least once. Clauses may contain a literal and
/// its negation.
pub fn covering_cnfs(n: usize, m: usize) -> Vec<Cnf3> {
    let literals: Vec<Literal> = (0..n)
        .flat_map(|v| [Literal::positive(v), Literal::negative(v)])
        .collect();
    let mut clauses = Vec::new();
    for a in 0..literals.len() {
        for b in a + 1..literals.len() {
            for c in b + 1..literals.len() {
                clauses.push([literals[a], literals[b], literals[c]]);
            }
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(m);

    fn extend(
        n: usize,
        m: usize,
        clauses: &[[Literal; 3]],
        current: &mut Vec<[Literal; 3]>,
        out: &mut Vec<Cnf3>,
    ) {
        if current.len() == m {
            let cnf = Cnf3::new(n, current.clone()).expect("generated clauses are valid");
            if cnf.covers_all_literals() {
                out.push(cnf);
            }
            return;
        }
        for c in clauses {
            if !current.contains(c) {
                current.push(*c);
                extend(n, m, clauses, current, out);
                current.pop();
            }
        }
    }

    if n > 0 {
        extend(n, m, &clauses, &mut current, &mut out);
    }
    out
}

/// The eight sign patterns on three variables; unsatisfiable.
pub fn full_cube_cnf() -> Cnf3 {
    let clauses = (0..8u8)
        .map(|s| {
            let lit = |k: usize| {
                if s >> k & 1 == 1 {
                    Literal::negative(k)
                } else {
                    Literal::positive(k)
                }
            };
            [lit(0), lit(1), lit(2)]
        })
        .collect();
    Cnf3::new(3, clauses).expect("valid clauses")
}
