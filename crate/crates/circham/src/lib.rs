//! Hamiltonicity of circulant digraphs `Circ(n; 2, 3, c)`.
//!
//! A circulant digraph `Circ(n; S)` has vertex set `Z_n` and an arc from `v`
//! to `v + s` for every `v` and every step `s` in the connection set `S`.
//! For `S = {2, 3, c}` hamiltonicity is completely characterized: the digraph
//! fails to have a hamiltonian cycle exactly when `n = 6m`, `c` is one of
//! `3m + 2` or `3m + 3`, and `c` is even.
//!
//! This crate implements:
//!
//! - [`classify`]: the decision rule, plus Rankin's criterion for
//!   outdegree-2 circulants;
//! - [`construct`]: explicit hamiltonian cycle builders covering every
//!   hamiltonian case (except one family that is delegated to exhaustive
//!   search), dispatched by [`construct::build`];
//! - [`cert`]: the cycle certificate type, its verifier, and a plain-text
//!   serialization;
//! - [`intervals`] and [`gadgets`]: the pseudopath and gadget machinery the
//!   constructions are made of;
//! - [`oracle`]: an independent backtracking search used as ground truth at
//!   small `n`;
//! - [`dot`]: Graphviz export.
//!
//! Every certificate returned by a constructor has already been checked by
//! [`cert::verify_cycle`]; the verifier, not the construction, is the
//! authority.

pub mod cert;
pub mod classify;
pub mod construct;
pub mod dot;
pub mod gadgets;
pub mod instance;
pub mod intervals;
pub mod oracle;
pub mod path;

pub use cert::{decode_cert, encode_cert, verify_cycle, CycleCert, ParseError, Violation};
pub use classify::{classify, rankin_hamiltonian, Classification, NonHamWitness, Verdict};
pub use construct::{build, ConstructionResult, Method, DEFAULT_ORACLE_BUDGET};
pub use instance::{Instance, InvalidReason};
pub use oracle::{solve, FoundCycle, OracleResult};
