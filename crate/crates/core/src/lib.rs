pub mod cli;
pub mod coherent;
pub mod document;
pub mod error;
pub mod fincat;
pub mod fixtures;
pub mod fractions;
pub mod hammock;
pub mod lifting;
pub mod quasicat;
pub mod scat;
pub mod sset;
pub mod suite;
pub mod weighted;
