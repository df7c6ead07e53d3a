//! Separable tensor-product neural networks for high-dimensional PDEs.
//!
//! The solution of a d-dimensional PDE on a hypercube is approximated by a
//! small number `B` of body networks, each owning a disjoint slice of the
//! coordinates. Their r-dimensional embeddings combine multiplicatively,
//!
//! ```text
//! u(x) = sum_j  f_1j(X_1) * f_2j(X_2) * ... * f_Bj(X_B),
//! ```
//!
//! so a batch of `N^B` collocation points is represented by `B` axes of `N`
//! coordinates each. Training sweeps a random subset of `B` "active"
//! dimensions per batch (all dimensions covered once per epoch), penalising
//! the PDE residual along the active dimensions only, plus supervised data
//! on the boundary (and the initial slice for transient problems).
//!
//! Crate layout follows the pipeline: [`bodynet`] (MLP and Kolmogorov-Arnold
//! body networks over a flat parameter vector), [`jets`] (order-2 Taylor jets
//! and a reverse-mode tape for loss gradients), [`ansatz`] (the tensor-product
//! assembly and its partial derivatives), [`sampling`] (dimension partitioning
//! and grid generation), [`pde`] (the four benchmark problems and their
//! residuals), [`train`] (AdamW / L-BFGS loop), [`eval`] (testing-phase
//! metrics, sweeps and reports), plus [`config`] / [`checkpoint`] for the CLI.

pub mod ansatz;
pub mod basis;
pub mod bodynet;
pub mod checkpoint;
pub mod config;
pub mod error;
pub mod eval;
pub mod jets;
pub mod pde;
pub mod sampling;
pub mod train;

pub use ansatz::AnantModel;
pub use error::{AnantError, Result};
