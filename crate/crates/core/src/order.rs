//! Order, lattice tables and Boolean elements derived from a sum table.
//!
//! The order is x ≤ y ⇔ ⌐x ⊕ y = 1; joins come from (x ⊖ y) ⊕ y and meets
//! from De Morgan. Boolean elements are the idempotents x ⊕ x = x.

use crate::algebra::{AlgebraError, ElementId, FiniteMVAlgebra};
use alloc::vec::Vec;

/// The derived partial order of an MV-algebra with its lattice tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderStructure {
    n: usize,
    zero: usize,
    one: usize,
    leq: Vec<bool>,
    join: Vec<usize>,
    meet: Vec<usize>,
    booleans: Vec<ElementId>,
    is_total: bool,
}

/// Computes the order structure of `a`.
///
/// Rejects algebras that fail the MV axioms: the lattice identities below
/// only hold on genuine MV-algebras.
pub fn derive_order(a: &FiniteMVAlgebra) -> Result<OrderStructure, AlgebraError> {
    let report = a.verify_axioms();
    if !report.passed() {
        return Err(AlgebraError::MvAxioms(report));
    }

    let n = a.order();
    let one = a.one_idx();
    let mut leq = Vec::with_capacity(n * n);
    let mut join = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            leq.push(a.op_idx(a.neg_idx(x), y) == one);
            // x ∨ y = ⌐(⌐x ⊕ y) ⊕ y
            join.push(a.op_idx(a.neg_idx(a.op_idx(a.neg_idx(x), y)), y));
        }
    }
    let mut meet = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            // x ∧ y = ⌐(⌐x ∨ ⌐y)
            meet.push(a.neg_idx(join[a.neg_idx(x) * n + a.neg_idx(y)]));
        }
    }
    let booleans = (0..n)
        .filter(|&x| a.op_idx(x, x) == x)
        .map(ElementId)
        .collect();
    let is_total = (0..n).all(|x| (0..n).all(|y| leq[x * n + y] || leq[y * n + x]));

    Ok(OrderStructure {
        n,
        zero: a.zero_idx(),
        one,
        leq,
        join,
        meet,
        booleans,
        is_total,
    })
}

impl OrderStructure {
    /// Number of elements.
    pub fn order(&self) -> usize {
        self.n
    }

    /// True when x ≤ y.
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.leq[x.0 * self.n + y.0]
    }

    /// The supremum x ∨ y.
    pub fn join(&self, x: ElementId, y: ElementId) -> ElementId {
        ElementId(self.join[x.0 * self.n + y.0])
    }

    /// The infimum x ∧ y.
    pub fn meet(&self, x: ElementId, y: ElementId) -> ElementId {
        ElementId(self.meet[x.0 * self.n + y.0])
    }

    /// The Boolean (idempotent) elements, in element order.
    pub fn booleans(&self) -> &[ElementId] {
        &self.booleans
    }

    /// True when x ⊕ x = x.
    pub fn is_boolean(&self, x: ElementId) -> bool {
        self.booleans.binary_search(&x).is_ok()
    }

    /// True when every pair of elements is comparable.
    pub fn is_total(&self) -> bool {
        self.is_total
    }

    /// Number of elements below or equal to `x`.
    pub fn downset_size(&self, x: ElementId) -> usize {
        (0..self.n).filter(|&z| self.leq[z * self.n + x.0]).count()
    }

    /// Cover pairs (x, y): x < y with nothing strictly between, in index order.
    pub fn covers(&self) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if x == y || !self.leq[x * self.n + y] {
                    continue;
                }
                let gap = (0..self.n).any(|z| {
                    z != x && z != y && self.leq[x * self.n + z] && self.leq[z * self.n + y]
                });
                if !gap {
                    out.push((ElementId(x), ElementId(y)));
                }
            }
        }
        out
    }

    /// Minimal nonzero elements of the Boolean skeleton.
    pub fn boolean_atoms(&self) -> Vec<ElementId> {
        self.booleans
            .iter()
            .copied()
            .filter(|&b| {
                b.0 != self.zero
                    && !self
                        .booleans
                        .iter()
                        .any(|&c| c.0 != self.zero && c != b && self.leq(c, b))
            })
            .collect()
    }
}
