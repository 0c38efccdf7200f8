//! Exact p-domination and p-reinforcement numbers of small graphs.
//!
//! A vertex set `S` p-dominates a graph when every vertex outside `S` has at
//! least `p` neighbors in `S`; `γ_p` is the least size of such a set. The
//! p-reinforcement number `r_p` is the least number of edges whose addition
//! lowers `γ_p` (0 when `γ_p <= p`).
//!
//! * [`domination`]: exact `γ_p`, witnesses and enumeration of γ_p-sets.
//! * [`reinforcement`]: `r_p` through minimum total deficiency, with
//!   checkable certificates and a definition-level oracle.
//! * [`closed_forms`]: paths, cycles and complete multipartite graphs.
//! * [`bounds`]: private-neighbor bounds on `r_p`.
//! * [`reduction`]: the 3SAT gadget graph and its checks.
//! * [`corpus`]: small graphs up to isomorphism.
//! * [`cli`]: the command-line front end.

pub mod bounds;
pub mod cli;
pub mod closed_forms;
pub mod corpus;
pub mod domination;
pub mod edge_list;
pub mod graph;
pub mod reduction;
pub mod reinforcement;
pub mod vertex_set;

pub use closed_forms::PartiteSpec;
pub use domination::{gamma_p, is_p_dominating, DominationResult};
pub use edge_list::{parse_edge_list, serialize_edge_list};
pub use graph::{Edge, Graph, GraphError};
pub use reinforcement::{eta_p, r_p, validate_certificate, EtaResult, ReinforcementCertificate};
pub use vertex_set::VertexSet;
