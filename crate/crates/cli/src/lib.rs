//! Catalogue campaigns over the `pmavoid-core` algorithms.

use std::path::PathBuf;

pub mod campaign;
pub mod catalogue;

pub use campaign::{
    replay_violation, run_campaign, three_paths, CampaignConfig, CampaignReport, CampaignSummary, Caps, GraphRecord,
    Instance, Theorem, Violation,
};
pub use catalogue::{filter_catalogue, read_catalogue_file, CatalogueEntry, FilterSummary, Predicate};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}:{line}: {source}")]
    Parse {
        path: PathBuf,
        line: usize,
        source: pmavoid_core::Error,
    },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Core(pmavoid_core::Error),
}
