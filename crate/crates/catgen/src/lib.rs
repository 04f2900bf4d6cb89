//! Catalogue generation for the campaign runner.

pub mod canon;
pub mod generate;
