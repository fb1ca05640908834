pub mod certify;
pub mod construct;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod library;
pub mod minor;
pub mod planarity;
pub mod primality;
pub mod survey;

pub use error::{Error, Result};
pub use graph::{DegreeStats, Edge, Graph};
