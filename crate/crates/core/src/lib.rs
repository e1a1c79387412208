pub mod bench;
pub mod cli;
pub mod directed;
pub mod error;
pub mod factorization;
pub mod graph;
pub mod loops;
pub mod oracle;
pub mod partition;
pub mod product;
pub mod shadow_factor;

pub use error::{Error, Result};
