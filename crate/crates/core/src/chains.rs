//! Totally ordered algebras on n elements, with canonical names `x0..`.
//!
//! On a fixed total order there is exactly one MV/Wajsberg structure whose
//! induced order matches: x_i ⊕ x_j = x_{min(i+j, n−1)} with
//! ⌐x_i = x_{n−1−i}, and x_i ∗ x_j = top for i ≤ j, x_{(n−1)−i+j} otherwise.
//! The uniqueness is confirmed at small sizes by a table-enumeration oracle
//! in the acceptance suite.

use crate::algebra::{AlgebraError, ElementId, FiniteMVAlgebra, WajsbergAlgebra};
use crate::order::derive_order;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// An algebra was requested with zero elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZeroOrderError;

impl fmt::Display for ZeroOrderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "algebra order must be at least 1")
    }
}

impl core::error::Error for ZeroOrderError {}

fn chain_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

/// The totally ordered MV-algebra on `n` elements.
pub fn make_chain(n: usize) -> Result<FiniteMVAlgebra, ZeroOrderError> {
    if n == 0 {
        return Err(ZeroOrderError);
    }
    let top = n - 1;
    let neg = (0..n).map(|i| top - i).collect();
    let oplus = (0..n)
        .map(|i| (0..n).map(|j| (i + j).min(top)).collect())
        .collect();
    Ok(FiniteMVAlgebra::from_tables(chain_names(n), 0, neg, oplus)
        .expect("chain tables are structurally valid"))
}

/// The totally ordered Wajsberg algebra on `n` elements.
pub fn make_chain_wajsberg(n: usize) -> Result<WajsbergAlgebra, ZeroOrderError> {
    if n == 0 {
        return Err(ZeroOrderError);
    }
    let top = n - 1;
    let comp = (0..n).map(|i| top - i).collect();
    let star = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i <= j { top } else { top - i + j })
                .collect()
        })
        .collect();
    Ok(WajsbergAlgebra::from_tables(chain_names(n), top, comp, star)
        .expect("chain tables are structurally valid"))
}

/// Elements sorted ascending by the derived order when it is total, `None`
/// otherwise.
pub fn chain_indices(a: &FiniteMVAlgebra) -> Result<Option<Vec<ElementId>>, AlgebraError> {
    let ord = derive_order(a)?;
    if !ord.is_total() {
        return Ok(None);
    }
    let mut sorted: Vec<ElementId> = a.elements().collect();
    sorted.sort_by_key(|&x| ord.downset_size(x));
    Ok(Some(sorted))
}
