//! Bias auditing for OWL ontologies.
//!
//! The pipeline is: [`ofn`] parses functional-style syntax into an
//! [`owl::OntologyModel`], [`reasoner`] classifies it structurally,
//! [`detectors`] run the eight bias rule families, [`obda`] simulates
//! class queries over tabular sources, and [`report`] renders the results.

pub mod detectors;
pub mod obda;
pub mod ofn;
pub mod owl;
pub mod reasoner;
pub mod report;
