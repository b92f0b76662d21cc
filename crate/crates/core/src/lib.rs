//! Wiener index and Šoltés hypergraphs: core structures, distance metrics,
//! constructions, file formats, exhaustive searches and census screening.

pub mod families;
pub mod formats;
pub mod hypercore;
pub mod metrics;
pub mod screen;
pub mod search;

pub use hypercore::{Hypergraph, HypergraphError};
pub use metrics::{delta_report, is_soltes, wiener, DeltaReport, Distance};
