//! Desk-scale constructions for dynamic reachability hardness experiments:
//! Butterfly graphs with XOR edge labels, the reduction from 0-XOR queries to
//! incremental reachability, cell-probe instrumentation with epoch
//! attribution, meta-query bundles, and the one-way communication protocol,
//! each paired with brute-force oracles that verify the constructions exactly
//! on small instances.

#![forbid(unsafe_code)]

pub mod butterfly;
pub mod chronogram;
pub mod machine;
pub mod meta;
pub mod multi;
pub mod protocol;
pub mod reach_ds;
pub mod reduction;
pub mod seed;
pub mod verify;

pub use butterfly::{ButterflyGraph, ButterflyParams, Edge, EdgeLabeling};
pub use machine::{CellProbeMachine, PreinitRule, ProbeKind, ProbeReport};
pub use multi::MultiButterflyInstance;
pub use reduction::{ReachNode, ReachabilityInstance, Workload};
