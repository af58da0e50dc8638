//! Seidel matrices of uniform hypergraphs: spectra, energies, equitable
//! quotients and the closed forms for complete 3-uniform bipartite
//! hypergraphs under hyperedge and vertex deletion.

pub mod closedform;
pub mod equitable;
pub mod fixtures;
pub mod hypergraph;
pub mod linalg;
pub mod seidel;

pub use closedform::{C3Params, Case, ClosedFormError, ClosedSpectrum};
pub use equitable::{check_equitable, quotient_matrix, PartitionError, VertexPartition, Witness};
pub use hypergraph::{
    classify_edge, gen_complete_bipartite, gen_turan, BipartitionLabels, Edge, EdgeType, Hypergraph, HypergraphError,
    TuranRule, Vertex,
};
pub use linalg::{
    char_poly_exact, eig_symmetric, inertia_of, real_roots, Inertia, IntMatrix, IntPolynomial, LinalgError, Spectrum,
    SymmetricMatrix, DEFAULT_EIG_TOL,
};
pub use seidel::{seidel_energy, seidel_matrix, seidel_spectrum, EnergyChange, SeidelError, SeidelMatrix};
