//! Exact weighted recurrence matrices.
//!
//! A weighted recurrence matrix `P_{α,β}^{[x,y,z]}` has first column `α`,
//! first row `β` (with `α_0 = β_0`) and interior entries
//! `P[i][j] = x P[i][j-1] + y P[i-1][j-1] + z P[i-1][j]`.
//!
//! The crate builds these matrices over exact rationals, realizes the group of
//! Pascal-like matrices `P_{λ_w,μ}^{[0,v,w]}` and its actions, factors any
//! such matrix as Pascal-like · middle · (Pascal-like)ᵗ, and evaluates the
//! resulting closed-form determinants. Every identity is checked by exact
//! equality; there is no floating point anywhere.

pub mod binomial;
pub mod determinants;
pub mod error;
pub mod factorization;
pub mod group;
pub mod matrix;
pub mod rational;
pub mod sequences;
pub mod wrm;

pub use binomial::binomial;
pub use determinants::DetReport;
pub use error::{Result, WrmError};
pub use factorization::Factorization;
pub use group::GroupElement;
pub use matrix::Matrix;
pub use rational::{rat_pow, Rational};
pub use sequences::{BoundaryPair, Sequence, SequenceSpec};
pub use wrm::{RecurrenceParams, WrmDescriptor, WrmSpec};
