//! Exact umbral calculus over rational polynomials.
//!
//! An [`Umbra`] is a truncated moment sequence `(1, a_1, ..., a_N)` whose
//! entries are polynomials with rational coefficients. Every operation is
//! carried out exactly, either on moments directly or on truncated
//! exponential generating functions ([`Egf`]).

pub mod coefficients;
pub mod combinatorics;
pub mod error;
pub mod models;
pub mod series;
pub mod transforms;
pub mod umbra;

pub use coefficients::{Monomial, Polynomial, Rational};
pub use combinatorics::{BellTable, Partition};
pub use error::{Result, UmbralError};
pub use models::{Model, ModelSpec};
pub use series::Egf;
pub use transforms::CumulantSeq;
pub use umbra::{Canonical, FactorialMoments, Sign, Umbra};
