//! Long cycles above the maximum average degree.
//!
//! The crate decides whether a 2-connected graph contains a cycle of length
//! at least `mad(G) + k` and returns a verifiable certificate when it does.

pub mod dense_extract;
pub mod dense_routing;
pub mod density;
pub mod error;
pub mod graph;
pub mod instances;
pub mod long_paths;
pub mod oracle;
pub mod rational;
pub mod reduce;
pub(crate) mod search;
pub mod segments;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{CycleCertificate, Graph, PathCertificate, Violation};
pub use rational::Rational;
