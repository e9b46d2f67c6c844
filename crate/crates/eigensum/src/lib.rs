//! Extremal values of linear combinations of graph adjacency eigenvalues.
//!
//! This crate computes objective functions of the shape
//! `F(G) = sum_i alpha_i mu_i(G) + beta_i mu_{n-i+1}(G) + gamma_i mu_i(G') +
//! delta_i mu_{n-i+1}(G')` (with `G'` the complement and `mu_1 >= ... >=
//! mu_n` the adjacency eigenvalues), searches for their maximizers over
//! graph families, and certifies the spectral inequalities that govern how
//! such maxima scale with the number of vertices.
//!
//! The pieces:
//!
//! * [`graph`]: dense bitset graphs with the operations that matter here —
//!   complement, join, disjoint union, blow-ups, deletion, clique and
//!   coloring predicates.
//! * [`codec`]: graph6 and edge-list text formats.
//! * [`spectrum`]: a deterministic cyclic Jacobi eigensolver with built-in
//!   soundness checks (trace, energy, eigenvalue band).
//! * [`objective`]: the linear forms and the graph families they are
//!   maximized over.
//! * [`verify`]: margin-reporting checks of the blow-up, deletion,
//!   interlacing, and two-eigenvalue inequalities, plus score amplification
//!   from one witness to all larger orders.
//! * [`construction`]: the join construction whose top two eigenvalues sum
//!   to more than the number of vertices, answering whether
//!   `mu_1 + mu_2 <= n` can fail.
//! * [`search`]: exhaustive and seeded stochastic extremal search.
//!
//! # Quick start
//!
//! ```
//! use eigensum::{Family, Graph, LinearForm};
//!
//! // F = mu1 + mu2 on the complete graph K4: 3 + (-1).
//! let form = LinearForm::top_only(vec![1.0, 1.0])?;
//! let value = form.evaluate(&Graph::complete(4))?;
//! assert!((value - 2.0).abs() < 1e-9);
//!
//! // The same form maximized over all 4-vertex graphs: K4 minus an edge
//! // wins with (1 + sqrt 17) / 2.
//! let best = eigensum::search::exhaustive(4, &form, &Family::All, 7)?;
//! assert!((best.value - (1.0 + 17f64.sqrt()) / 2.0).abs() < 1e-9);
//! # Ok::<(), eigensum::Error>(())
//! ```

pub mod codec;
pub mod construction;
pub mod error;
pub mod graph;
pub mod objective;
pub mod search;
pub mod spectrum;
pub mod verify;

pub use construction::GernertCertificate;
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use objective::{Family, LinearForm};
pub use search::ExtremalRecord;
pub use spectrum::{eigenvalues, Spectrum};
pub use verify::{AmplificationReport, CheckReport};

/// Runs every Rust fence in the guide as a doc-test, so the book and the
/// library cannot drift apart silently.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/graphs.md")]
    pub struct Graphs;
    #[doc = include_str!("../../../book/src/spectra.md")]
    pub struct Spectra;
    #[doc = include_str!("../../../book/src/objectives.md")]
    pub struct Objectives;
    #[doc = include_str!("../../../book/src/certificates.md")]
    pub struct Certificates;
    #[doc = include_str!("../../../book/src/counterexample.md")]
    pub struct Counterexample;
    #[doc = include_str!("../../../book/src/search.md")]
    pub struct Search;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
