//! Top of the spectrum of graphon Laplacians, bipartiteness ratios and
//! numerical checks of the dual Cheeger–Buser inequality
//! `β²/2 <= 2 - λ_max <= 2β` on step graphons and weighted graphs.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bipartite;
pub mod cli;
pub mod error;
pub mod graphon;
pub mod grid;
pub mod io;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graphon::{
    associated_graphon, build_graphon, degree, eta_mass, family, graph_is_connected,
    is_bipartite_graphon, is_connected, FractionalBipartition, Graphon, GraphonFamily,
    SignedPartition, WeightedGraph,
};
pub use grid::GridFunction;
pub use spectral::{
    antidirichlet, dirichlet, inner_v, jacobi_symmetric_eigs, lambda_max, lambda_max_graph,
    rayleigh, Method, SpectralResult,
};
