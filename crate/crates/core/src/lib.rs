//! Exact kernels for s-factor stability of group subsets.
//!
//! A right s-factor of `G` associated with `A` is a maximal `U` such that the
//! product `AU` is direct. The s-factors of `A` are exactly the maximal
//! independent sets of the Cayley graph `Cay(G, A⁻¹A \ {e})`, so the lower and
//! upper s-indices are the independent domination number and the independence
//! number of that graph. This crate provides:
//!
//! * [`group`]: multiplication-table groups, a catalog of enumerable infinite
//!   groups, and the descriptors that build them,
//! * [`cayley`]: symmetric connection sets, Cayley graphs and the `Δ(F)` graph,
//! * [`clique`]: maximal clique / independent set enumeration with a
//!   brute-force oracle,
//! * [`stability`]: definition-level s-factor checks and stability scans,
//! * [`constructions`]: the greedy `A⁻¹A = G \ F` construction, the witness
//!   configurations that force `ι(Δ) < ω(Δ)`, the per-group case analysis for
//!   infinite groups and the finite 2-group verifications.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod bitset;
pub mod cayley;
pub mod clique;
pub mod constructions;
pub mod group;
pub mod stability;

pub use bitset::VertexSet;
pub use cayley::{Graph, SymSet};
pub use clique::{ExtremalReport, MaximalSetFamily, Mode, SetKind};
pub use group::{
    BuiltGroup, ElementCode, EnumerableGroup, FiniteGroup, Group, GroupDescriptor, Order,
};
