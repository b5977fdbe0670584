pub mod elimination;
pub mod error;
pub mod exact_ring;
pub mod lemma_engine;
pub mod qpoly;
pub mod ree_data;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
