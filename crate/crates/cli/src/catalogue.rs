//! Reading graph catalogues and filtering them by computed hypotheses.

use std::fs;
use std::path::{Path, PathBuf};

use pmavoid_core::connectivity::cyclic_edge_connectivity;
use pmavoid_core::{io, Multigraph};
use serde::Serialize;

use crate::CliError;

/// One graph of a catalogue file with its 1-based line number.
#[derive(Clone, Debug)]
pub struct CatalogueEntry {
    pub path: PathBuf,
    pub line: usize,
    pub graph: Multigraph,
}

/// Reads every non-blank line of a graph6/sparse6 file.
pub fn read_catalogue_file(path: &Path) -> Result<Vec<CatalogueEntry>, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let graph = io::parse_graph6(line).map_err(|source| CliError::Parse {
            path: path.to_path_buf(),
            line: i + 1,
            source,
        })?;
        out.push(CatalogueEntry {
            path: path.to_path_buf(),
            line: i + 1,
            graph,
        });
    }
    Ok(out)
}

/// Hypotheses a graph must satisfy to pass the filter. Each one is computed
/// from the graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Predicate {
    pub regular: Option<usize>,
    pub even_order: bool,
    pub min_cyclic: Option<usize>,
}

impl Predicate {
    pub fn accepts(&self, g: &Multigraph) -> bool {
        self.regular.is_none_or(|d| g.is_regular(d))
            && (!self.even_order || g.vertex_count().is_multiple_of(2))
            && self
                .min_cyclic
                .is_none_or(|h| cyclic_edge_connectivity(g).value.at_least(h))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FilterSummary {
    pub read: usize,
    pub passed: usize,
    pub rejected: usize,
}

/// Graphs of `input` passing `predicate`, in input order.
pub fn filter_catalogue(input: &Path, predicate: &Predicate) -> Result<(Vec<CatalogueEntry>, FilterSummary), CliError> {
    let all = read_catalogue_file(input)?;
    let read = all.len();
    let passed: Vec<CatalogueEntry> = all.into_iter().filter(|e| predicate.accepts(&e.graph)).collect();
    let summary = FilterSummary {
        read,
        passed: passed.len(),
        rejected: read - passed.len(),
    };
    Ok((passed, summary))
}
