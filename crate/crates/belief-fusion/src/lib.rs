//! Belief functions over finite frames, Dirichlet evidence bodies, and the
//! cumulative rule of belief fusion.
//!
//! The crate models basic belief assignments ([`Bba`]) over a [`Frame`] of
//! mutually exclusive outcomes, classifies their structure ([`BbaClass`]),
//! and combines them under three rules: [`fuse_cumulative`],
//! [`fuse_dempster`], and [`fuse_conjunctive`]. Beliefs whose focal elements
//! are partition cells plus the whole frame correspond one-to-one with
//! Dirichlet evidence bodies ([`DirichletEvidence`]); [`to_evidence`] and
//! [`to_bba`] move between the two sides, and the cumulative rule is exactly
//! evidence addition carried across that bridge.
//!
//! ```
//! use belief_fusion::{Bba, Frame, fuse_cumulative, fuse_dempster};
//!
//! let frame = Frame::new(["Peter", "Paul", "Mary"])?;
//! let witness_a = Bba::new(
//!     frame.clone(),
//!     [
//!         (frame.subset_of_labels(["Peter"])?, 0.99),
//!         (frame.subset_of_labels(["Paul"])?, 0.01),
//!     ],
//! )?;
//! let witness_b = Bba::new(
//!     frame.clone(),
//!     [
//!         (frame.subset_of_labels(["Paul"])?, 0.01),
//!         (frame.subset_of_labels(["Mary"])?, 0.99),
//!     ],
//! )?;
//!
//! // Two witnesses each almost rule Paul out; the cumulative rule keeps
//! // that balance while Dempster's rule hands Paul everything.
//! let cumulative = fuse_cumulative(&witness_a, &witness_b)?;
//! let dempster = fuse_dempster(&witness_a, &witness_b)?;
//!
//! let paul = frame.subset_of_labels(["Paul"])?;
//! assert!((cumulative.mass(paul) - 0.01).abs() < 1e-12);
//! assert!((dempster.mass(paul) - 1.0).abs() < 1e-12);
//! # Ok::<(), belief_fusion::Error>(())
//! ```
//!
//! Each major capability has a runnable walkthrough under `examples/`:
//!
//! * `cargo run --example bba_basics` — frames, subsets, mass assignment,
//!   belief, pignistic expectation, and classification.
//! * `cargo run --example zadeh` — the three-suspect scenario where
//!   Dempster's rule and the cumulative rule disagree.
//! * `cargo run --example sensor_fusion` — two agreeing sensors, fused under
//!   every rule.
//! * `cargo run --example urn_evidence` — counts to beliefs, coarsening, and
//!   expectations that survive regrouping.
//! * `cargo run --example evidence_mapping` — the belief/evidence bijection,
//!   round trips, and the dogmatic limit.
//! * `cargo run --example density_grid` — Dirichlet densities sampled over
//!   the simplex.

pub mod bba;
pub mod cli;
pub mod dirichlet;
pub mod document;
pub mod error;
pub mod frame;
pub mod fusion;
pub mod mapping;

pub use bba::{Bba, BbaClass};
pub use dirichlet::{DensityGrid, DirichletEvidence, DogmaticProfile, Expectation};
pub use error::{Error, Result};
pub use frame::{BaseRate, Frame, Partition, Subset};
pub use fusion::{
    fuse_conjunctive, fuse_cumulative, fuse_dempster, fuse_evidence, ConjunctiveResult,
};
pub use mapping::{implied_partition, to_bba, to_evidence};
