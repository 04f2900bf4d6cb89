//! Perfect matchings avoiding prescribed edge sets in regular graphs, with
//! the supporting machinery: multigraphs and their file formats, maximum
//! matchings and Tutte barriers, cyclic edge-connectivity, leaf-matching
//! reductions, signed-graph switching, and 2-factor extensions of paths.

pub mod connectivity;
pub mod construction;
pub mod error;
mod flow;
pub mod graph;
pub mod independent;
pub mod io;
pub mod lm;
pub mod matching;
pub mod named;
pub mod preclusion;
pub mod signed;
pub mod twofactor;

pub use connectivity::{Connectivity, CyclicConnectivityReport};
pub use error::{Error, ParseErrorKind, Result};
pub use flow::min_edge_cut;
pub use graph::{EdgeSet, Multigraph, Partition, PathSpec, VertexSet};
pub use lm::LmCertificate;
pub use matching::{Barrier, GeDecomposition, Matching};
pub use preclusion::{IndependentWitness, ObstructionVerdict, PreclusionVerdict};
pub use signed::{PartitionCorrespondence, SignedGraph};
pub use twofactor::{FourPathCertificate, P1Witness, PathWitness, TwoFactor};
