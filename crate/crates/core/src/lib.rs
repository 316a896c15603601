//! Signless Laplacian spectra of small graphs: exact interval counts,
//! structured graph families, isomorph-free enumeration and a suite of
//! machine-checked characterization theorems.

pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod linalg;
pub mod spectral;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{CanonicalLabeling, DegreeSequence, Graph, NamedFamily};
