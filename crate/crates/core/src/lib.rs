//! Bundles, cocycles and connections over finite posets with finite
//! structure groups.

pub mod acceptance;
pub mod cochains;
pub mod connections;
pub mod error;
pub mod format;
pub mod gauge;
pub mod groups;
pub mod paths;
pub mod poset;
pub mod search;
pub mod simplicial;
pub mod snf;

pub use error::{Error, Result};
