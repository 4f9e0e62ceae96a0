//! Workbench for finite many-valued algebras given by Cayley tables.
//!
//! The carriers are [`FiniteMVAlgebra`] (a sum table plus a negation table)
//! and [`WajsbergAlgebra`] (an implication table plus a complement table),
//! interconvertible through [`FiniteMVAlgebra::to_wajsberg`] and
//! [`WajsbergAlgebra::to_mv`]. On top of the carriers the crate provides:
//!
//! * exhaustive axiom checking with deterministic violation witnesses,
//! * the derived order, lattice tables and Boolean (idempotent) elements,
//! * totally ordered algebras of any size and recognition of total order,
//! * principal ideals, products, and decomposition into a product of chains
//!   by the atoms of the Boolean skeleton,
//! * enumeration of all algebras of a given order up to isomorphism,
//! * Fibonacci sequences, their stationary limits and closed form, plus the
//!   Pisano period of the integer Fibonacci sequence for contrast,
//! * binary block codes attached to algebras, the square-matrix block
//!   recursion, and reconstruction of a Boolean algebra from such a code.
//!
//! Everything is immutable after construction and all operations are pure,
//! so values can be shared freely between threads. The crate is `no_std`
//! (with `alloc`); IO and file formats live in the companion `mvkit` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod chains;
pub mod codes;
pub mod fibonacci;
pub mod iso;
pub mod order;
pub mod structure;

pub use algebra::{
    AlgebraError, AxiomReport, ElementId, FiniteMVAlgebra, TableError, Violation, WajsbergAlgebra,
};
pub use chains::{chain_indices, make_chain, make_chain_wajsberg, ZeroOrderError};
pub use codes::{
    attach_code, base_boolean, build_boolean, check_matrix_recursion, code_matrix,
    code_to_boolean, double_boolean, min_distance, BinaryBlockCode, CodeError, CodeMatrix,
};
pub use fibonacci::{
    closed_form_term, fib_trace, fib_trace_with_cap, is_two_stationary_everywhere, lambda_map,
    pisano_period, scalar_multiple, FibonacciError, FibonacciTrace,
};
pub use iso::find_isomorphism;
pub use order::{derive_order, OrderStructure};
pub use structure::{
    decompose, enumerate_mv_algebras, factor_shapes, principal_ideal, product,
    proper_idempotent_count, Decomposition, StructureError,
};

#[cfg(test)]
pub(crate) mod testdata;
