//! Constructive side of the instability argument.
//!
//! * [`greedy`]: builds `A` with `A⁻¹A = G \ F` stage by stage,
//! * [`witness`]: the four finite configurations `F` whose `Δ(F)` has
//!   maximal cliques of different sizes,
//! * [`case_analysis`]: picks the right configuration for a catalog group,
//! * [`lemmas`]: mechanical checks of the finite 2-group facts and of the
//!   `Δ(F)` / `Cay(G, ∂A)` bridge.

pub mod case_analysis;
pub mod greedy;
pub mod lemmas;
pub mod witness;

use alloc::string::String;

use crate::cayley::CayleyError;
use crate::clique::EngineError;

pub use case_analysis::{case_analysis, case_analysis_with_retry, CaseBranch, CaseReport};
pub use greedy::{greedy_construct_a, GreedyState};
pub use lemmas::{delta_bridge, verify_exponent2_quotient, verify_order32_lemma, BridgeCheck, Order32Report, QuotientOutcome};
pub use witness::{
    witness_cube, witness_infinite_cyclic, witness_involution, witness_noncube, CaseTag, WitnessF, WitnessParams,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    /// A proven bound did not hold on the computed graph.
    #[error("computed Δ(F) contradicts the expected bound: {0}")]
    ClaimFailed(String),
    #[error("F is not a valid connection set: {0}")]
    FNotValid(CayleyError),
    #[error("no admissible choice at step {step}")]
    StepsExhausted { step: usize },
    #[error("search exhausted within an enumeration prefix of {prefix} elements")]
    SearchExhausted { prefix: usize },
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),
    #[error("not a subgroup")]
    NotASubgroup,
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Cayley(#[from] CayleyError),
}
