//! Algorithmic core for graph-resilience experiments.
//!
//! Everything in this crate is deterministic given its inputs: randomized
//! routines take an explicit [`Seed`] and never touch global state. The crate
//! is `no_std`-compatible (with `alloc`); float math goes through `libm` so
//! results do not depend on the `std` feature.
//!
//! Module map:
//! - [`graph`]: immutable simple graphs, vertex sets, set/edge counting
//!   operations and the edge-list text format.
//! - [`generate`]: seeded G(n,p), random regular graphs and random
//!   bipartitions.
//! - [`matching`]: maximum matching (blossom), Hall witnesses, and perfect
//!   matching via a random balanced split.
//! - [`hamilton`]: rotation-extension (Posa) Hamilton cycle search, an exact
//!   small-n oracle, and cycle verification.
//! - [`coloring`]: greedy/DSATUR/exact coloring, degeneracy, a
//!   partition-then-patch pipeline for colorings that survive bounded-degree
//!   edits, and small exact helpers (independence number, cover numbers).
//! - [`spectral`]: adjacency spectra, a power-iteration second-eigenvalue
//!   estimate, mixing discrepancy and sampling probes.
//! - [`adversary`]: bounded-degree edge-edit strategies and their budget
//!   discipline.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod adversary;
pub mod coloring;
mod eigen;
pub mod error;
pub mod fixtures;
mod float;
pub mod generate;
pub mod graph;
pub mod hamilton;
pub mod matching;
pub mod spectral;

pub use error::{Error, Result};
pub use generate::Seed;
pub use graph::{Graph, VertexSet};
