//! Hypergraph files, test corpora, parallel drivers, reports and the
//! command-line front end on top of `hgpoly-core`.

pub mod cli;
pub mod corpus;
pub mod engine;
pub mod error;
pub mod io;
pub mod json;
pub mod parallel;
pub mod report;
pub mod text;
pub mod verify;

pub use engine::Engine;
pub use error::{Error, Result};
