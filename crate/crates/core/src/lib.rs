//! Reconfiguration of strong k-colourings.
//!
//! A strong k-colouring of a graph is a proper vertex colouring that uses
//! every one of the k colours. The strong colour graph `S_k(G)` has these
//! colourings as vertices, two of them adjacent when they differ on exactly
//! one vertex. This crate enumerates colourings, builds `S_k(G)` and the
//! ordinary colour graph `C_k(G)`, plans recolouring schedules, produces
//! checkable certificates that two colourings cannot be connected, and
//! carries closed-form connectivity oracles for paths, cycles and trees.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod certificate;
pub mod classifier;
pub mod colouring;
mod dsu;
mod error;
pub mod graph;
pub mod reconfig;
pub mod trees;

pub use certificate::{
    certify_separation, cycle_weight, globally_frozen_vertices, swap_certificate, verify_certificate,
    weight_certificate, Certificate, Certifier,
};
pub use classifier::{classify, classify_cycle, classify_path, classify_tree, Reason, Verdict, Witness};
pub use colouring::{
    enumerate_proper, enumerate_strong, first_strong, is_proper, is_strong, parse_colouring, Cap, Colour, Colouring,
};
pub use error::{Error, Result};
pub use graph::{Bipartition, Graph};
pub use reconfig::{
    build, find_path, neighbours, recolourable_vertices, validate_schedule, ComponentSummary, Mode, RecolourStep,
    ReconfigGraph, Schedule, ScheduleError, StepFault,
};
