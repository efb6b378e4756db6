//! Exact arithmetic for q-deformed rational numbers and their combinatorial
//! models.
//!
//! For a rational `r/s > 1` with even-length continued fraction expansion
//! `[a_1, ..., a_2m]`, the q-rational `[r/s]_q = R(q)/S(q)` is computed two
//! independent ways (the continued-fraction tower and the q-deformed
//! modular-group action). The numerator `R(q)` is then realized three more
//! times over: as the rank generating function of the lattice paths on a
//! snake graph, of the order ideals of a fence poset, and of a Young-lattice
//! interval `[mu, lambda]` — and finally as a point count over finite fields,
//! where `p^|mu| R(p)` equals the number of points in the union of open
//! Schubert cells indexed by `[mu, lambda]` inside a Grassmannian.
//!
//! The `qrat` binary exposes the pipeline (`compute`, `verify`, `snake`,
//! `sweep`, `selftest`); everything it prints is computed exactly.

pub mod error;
pub mod laurent;
pub mod partition;
pub mod poly;
pub mod poset;
pub mod qrational;
pub mod rational;
pub mod render;
pub mod schubert;
pub mod snake;
pub mod sweep;

pub use error::{Error, Result};
pub use partition::Partition;
pub use poly::{q_binomial, q_factorial, q_integer, IntPolynomial};
pub use qrational::{generator_word, QMatrix, QRationalValue};
pub use rational::{coprime_pairs, EvenContinuedFraction, ReducedRational};
pub use schubert::{
    cell_size, count_flags, count_grassmannian_raw, count_union, count_union_raw,
    enumerate_cell_points, partition_to_pivots, pivots_to_partition, verify_main_theorem,
    EchelonPoint, PivotSet, PrimeField, VerificationReport,
};
pub use snake::{lambda_mu_explicit, SnakeGraph, SnakePath, SnakeWord};
