//! Exact Schur algebras `S(n, d)` and their quantized versions, realized on tensor space.
//!
//! Scalars are `BigRational` classically and rational functions in `v` quantumly; there is
//! no floating point anywhere. The main entry points:
//!
//! - [`algebra::SchurAlgebra`] builds the generators on `V^{⊗d}` and evaluates Kostant monomials.
//! - [`basisgen::enumerate_basis`] lists the integral bases and [`basisgen::BasisSolver`] expresses operators in them.
//! - [`straighten::Straightener`] rewrites monomials into a basis using commutation rules only.
//! - [`subalg`] covers the Hecke and Borel subalgebras; [`harness`] the verification suites and reports.

pub mod algebra;
pub mod basisgen;
pub mod error;
pub mod harness;
pub mod ring;
pub mod rootdata;
pub mod scalars;
pub mod straighten;
pub mod subalg;
pub mod tensorrep;
