//! Experiment harness around the core graph library: Monte-Carlo budget
//! sweeps, threshold fitting, lemma validators, and the file formats the
//! `reslab` binary speaks.

pub mod engine;
pub mod records;
pub mod stats;
