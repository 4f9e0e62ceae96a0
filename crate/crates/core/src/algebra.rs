//! Algebra carriers and exhaustive axiom checking.
//!
//! Constructors only validate structure: distinct printable names and total
//! tables whose entries stay in range. Whether the tables satisfy an axiom
//! system is a separate question answered by [`FiniteMVAlgebra::verify_axioms`]
//! and [`WajsbergAlgebra::verify_axioms`], which sweep every element tuple and
//! report the lexicographically first witness per violated axiom.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Position of an element in the element list of one algebra.
///
/// Ids are only meaningful for the algebra that handed them out; mixing ids
/// across algebras is a caller bug and trips the table bounds checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub(crate) usize);

impl ElementId {
    /// Position in the element list.
    pub fn index(self) -> usize {
        self.0
    }
}

/// Structural defect in an element list or operation table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableError {
    /// The element list is empty.
    EmptyCarrier,
    /// Two elements share a name.
    DuplicateName(String),
    /// A name is empty or contains whitespace or `#`.
    InvalidName(String),
    /// The binary table has the wrong number of rows.
    WrongRowCount { expected: usize, found: usize },
    /// A row of the binary table has the wrong length.
    WrongRowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    /// The unary table has the wrong length.
    WrongUnaryLength { expected: usize, found: usize },
    /// A table entry or designated constant is not a valid element index.
    EntryOutOfRange { value: usize, len: usize },
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::EmptyCarrier => write!(f, "element list is empty"),
            TableError::DuplicateName(name) => write!(f, "duplicate element name `{name}`"),
            TableError::InvalidName(name) => write!(
                f,
                "invalid element name `{name}`: names must be nonempty and free of whitespace and `#`"
            ),
            TableError::WrongRowCount { expected, found } => {
                write!(f, "expected {expected} table rows, found {found}")
            }
            TableError::WrongRowLength {
                row,
                expected,
                found,
            } => write!(f, "table row {row} has {found} entries, expected {expected}"),
            TableError::WrongUnaryLength { expected, found } => {
                write!(f, "unary table has {found} entries, expected {expected}")
            }
            TableError::EntryOutOfRange { value, len } => {
                write!(f, "element index {value} out of range for order {len}")
            }
        }
    }
}

impl core::error::Error for TableError {}

/// An algebra failed the axiom check required by an operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    /// The MV axiom sweep found violations.
    MvAxioms(AxiomReport),
    /// The Wajsberg axiom sweep found violations.
    WajsbergAxioms(AxiomReport),
}

impl AlgebraError {
    /// The failing report, whichever axiom system it came from.
    pub fn report(&self) -> &AxiomReport {
        match self {
            AlgebraError::MvAxioms(r) | AlgebraError::WajsbergAxioms(r) => r,
        }
    }
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (system, report) = match self {
            AlgebraError::MvAxioms(r) => ("MV", r),
            AlgebraError::WajsbergAxioms(r) => ("Wajsberg", r),
        };
        match report.violations().first() {
            Some(v) => write!(
                f,
                "{system} axioms violated ({} axiom(s)), first: {}",
                report.violations().len(),
                v
            ),
            None => write!(f, "{system} axioms violated"),
        }
    }
}

impl core::error::Error for AlgebraError {}

/// A single axiom violation with the first witness found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Stable name of the violated axiom.
    pub axiom: &'static str,
    /// Element names of the witness tuple.
    pub witness: Vec<String>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: (", self.axiom)?;
        for (i, name) in self.witness.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{name}")?;
        }
        write!(f, ")")
    }
}

/// Outcome of an exhaustive axiom sweep.
///
/// At most one witness is kept per axiom — the first in lexicographic
/// element-index order — so reports are deterministic and stable enough
/// for golden tests.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    violations: Vec<Violation>,
}

impl AxiomReport {
    /// True when no axiom was violated.
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Violations in the order the axioms are checked.
    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    fn record(&mut self, axiom: &'static str, witness: Vec<String>) {
        self.violations.push(Violation { axiom, witness });
    }
}

fn validate_names(names: &[String]) -> Result<(), TableError> {
    if names.is_empty() {
        return Err(TableError::EmptyCarrier);
    }
    let mut seen = BTreeSet::new();
    for name in names {
        if name.is_empty() || name.contains(char::is_whitespace) || name.contains('#') {
            return Err(TableError::InvalidName(name.clone()));
        }
        if !seen.insert(name.as_str()) {
            return Err(TableError::DuplicateName(name.clone()));
        }
    }
    Ok(())
}

fn validate_unary(table: &[usize], n: usize) -> Result<(), TableError> {
    if table.len() != n {
        return Err(TableError::WrongUnaryLength {
            expected: n,
            found: table.len(),
        });
    }
    for &v in table {
        if v >= n {
            return Err(TableError::EntryOutOfRange { value: v, len: n });
        }
    }
    Ok(())
}

fn flatten_binary(rows: Vec<Vec<usize>>, n: usize) -> Result<Vec<usize>, TableError> {
    if rows.len() != n {
        return Err(TableError::WrongRowCount {
            expected: n,
            found: rows.len(),
        });
    }
    let mut flat = Vec::with_capacity(n * n);
    for (i, row) in rows.into_iter().enumerate() {
        if row.len() != n {
            return Err(TableError::WrongRowLength {
                row: i,
                expected: n,
                found: row.len(),
            });
        }
        for &v in &row {
            if v >= n {
                return Err(TableError::EntryOutOfRange { value: v, len: n });
            }
        }
        flat.extend(row);
    }
    Ok(flat)
}

/// A finite MV-algebra presented by its sum table and negation table.
///
/// `one` is not stored in input files or passed to the constructor: it is
/// the negation of `zero`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMVAlgebra {
    names: Vec<String>,
    zero: usize,
    one: usize,
    neg: Vec<usize>,
    oplus: Vec<usize>,
}

impl FiniteMVAlgebra {
    /// Builds an algebra from index tables, validating structure only.
    pub fn from_tables(
        names: Vec<String>,
        zero: usize,
        neg: Vec<usize>,
        oplus: Vec<Vec<usize>>,
    ) -> Result<Self, TableError> {
        validate_names(&names)?;
        let n = names.len();
        if zero >= n {
            return Err(TableError::EntryOutOfRange { value: zero, len: n });
        }
        validate_unary(&neg, n)?;
        let oplus = flatten_binary(oplus, n)?;
        let one = neg[zero];
        Ok(FiniteMVAlgebra {
            names,
            zero,
            one,
            neg,
            oplus,
        })
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.names.len()
    }

    /// All element ids in list order.
    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.order()).map(ElementId)
    }

    /// Id of the element at `index`, if in range.
    pub fn element(&self, index: usize) -> Option<ElementId> {
        (index < self.order()).then_some(ElementId(index))
    }

    /// Name of an element.
    pub fn name(&self, x: ElementId) -> &str {
        &self.names[x.0]
    }

    /// Element names in list order.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Looks an element up by its exact name.
    pub fn element_by_name(&self, name: &str) -> Option<ElementId> {
        self.names.iter().position(|n| n == name).map(ElementId)
    }

    /// The constant 0.
    pub fn zero(&self) -> ElementId {
        ElementId(self.zero)
    }

    /// The constant 1, i.e. the negation of 0.
    pub fn one(&self) -> ElementId {
        ElementId(self.one)
    }

    #[inline]
    pub(crate) fn op_idx(&self, x: usize, y: usize) -> usize {
        self.oplus[x * self.names.len() + y]
    }

    #[inline]
    pub(crate) fn neg_idx(&self, x: usize) -> usize {
        self.neg[x]
    }

    #[inline]
    pub(crate) fn zero_idx(&self) -> usize {
        self.zero
    }

    #[inline]
    pub(crate) fn one_idx(&self) -> usize {
        self.one
    }

    /// The sum x ⊕ y.
    pub fn oplus(&self, x: ElementId, y: ElementId) -> ElementId {
        ElementId(self.op_idx(x.0, y.0))
    }

    /// The negation ⌐x.
    pub fn neg(&self, x: ElementId) -> ElementId {
        ElementId(self.neg[x.0])
    }

    /// The product x ⊙ y = ⌐(⌐x ⊕ ⌐y).
    pub fn odot(&self, x: ElementId, y: ElementId) -> ElementId {
        ElementId(self.neg[self.op_idx(self.neg[x.0], self.neg[y.0])])
    }

    /// The difference x ⊖ y = x ⊙ ⌐y.
    pub fn ominus(&self, x: ElementId, y: ElementId) -> ElementId {
        self.odot(x, self.neg(y))
    }

    /// True when x ⊕ x = x.
    pub fn is_idempotent(&self, x: ElementId) -> bool {
        self.op_idx(x.0, x.0) == x.0
    }

    /// Entrywise equality of the index tables, ignoring element names.
    pub fn tables_match(&self, other: &Self) -> bool {
        self.order() == other.order()
            && self.zero == other.zero
            && self.neg == other.neg
            && self.oplus == other.oplus
    }

    fn witness(&self, ids: &[usize]) -> Vec<String> {
        ids.iter().map(|&i| self.names[i].clone()).collect()
    }

    /// Exhaustively checks the commutative-monoid laws and the three MV
    /// axioms over all element tuples.
    ///
    /// Failures are report content, not errors; one witness per axiom.
    pub fn verify_axioms(&self) -> AxiomReport {
        let n = self.order();
        let mut report = AxiomReport::default();

        'comm: for x in 0..n {
            for y in 0..n {
                if self.op_idx(x, y) != self.op_idx(y, x) {
                    report.record("commutativity", self.witness(&[x, y]));
                    break 'comm;
                }
            }
        }

        'assoc: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.op_idx(x, self.op_idx(y, z)) != self.op_idx(self.op_idx(x, y), z) {
                        report.record("associativity", self.witness(&[x, y, z]));
                        break 'assoc;
                    }
                }
            }
        }

        for x in 0..n {
            if self.op_idx(x, self.zero) != x {
                report.record("zero-identity", self.witness(&[x]));
                break;
            }
        }

        for x in 0..n {
            if self.op_idx(x, self.one) != self.one {
                report.record("one-absorption", self.witness(&[x]));
                break;
            }
        }

        for x in 0..n {
            if self.neg[self.neg[x]] != x {
                report.record("double-negation", self.witness(&[x]));
                break;
            }
        }

        // ⌐(⌐x ⊕ y) ⊕ y = ⌐(⌐y ⊕ x) ⊕ x
        'luk: for x in 0..n {
            for y in 0..n {
                let lhs = self.op_idx(self.neg[self.op_idx(self.neg[x], y)], y);
                let rhs = self.op_idx(self.neg[self.op_idx(self.neg[y], x)], x);
                if lhs != rhs {
                    report.record("lukasiewicz", self.witness(&[x, y]));
                    break 'luk;
                }
            }
        }

        report
    }

    /// Checks that the four order characterizations agree on every pair:
    /// x ⊙ ⌐y = 0, ⌐x ⊕ y = 1, y = x ⊕ (y ⊖ x), and ∃w. x ⊕ w = y.
    pub fn check_order_equivalences(&self) -> AxiomReport {
        let n = self.order();
        let mut report = AxiomReport::default();
        'pairs: for x in 0..n {
            for y in 0..n {
                let xi = ElementId(x);
                let yi = ElementId(y);
                let a = self.odot(xi, self.neg(yi)).0 == self.zero;
                let b = self.op_idx(self.neg[x], y) == self.one;
                let c = self.oplus(xi, self.ominus(yi, xi)).0 == y;
                let d = (0..n).any(|w| self.op_idx(x, w) == y);
                if a != b || b != c || c != d {
                    report.record("order-equivalence", self.witness(&[x, y]));
                    break 'pairs;
                }
            }
        }
        report
    }

    /// The Wajsberg presentation of the same algebra: x ∗ y = ⌐x ⊕ y, with
    /// negation as complement and the same unit.
    pub fn to_wajsberg(&self) -> WajsbergAlgebra {
        let n = self.order();
        let mut star = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                star.push(self.op_idx(self.neg[x], y));
            }
        }
        WajsbergAlgebra {
            names: self.names.clone(),
            one: self.one,
            comp: self.neg.clone(),
            star,
        }
    }
}

/// A Wajsberg algebra presented by its implication table and complement table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WajsbergAlgebra {
    names: Vec<String>,
    one: usize,
    comp: Vec<usize>,
    star: Vec<usize>,
}

impl WajsbergAlgebra {
    /// Builds an algebra from index tables, validating structure only.
    pub fn from_tables(
        names: Vec<String>,
        one: usize,
        comp: Vec<usize>,
        star: Vec<Vec<usize>>,
    ) -> Result<Self, TableError> {
        validate_names(&names)?;
        let n = names.len();
        if one >= n {
            return Err(TableError::EntryOutOfRange { value: one, len: n });
        }
        validate_unary(&comp, n)?;
        let star = flatten_binary(star, n)?;
        Ok(WajsbergAlgebra {
            names,
            one,
            comp,
            star,
        })
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.names.len()
    }

    /// All element ids in list order.
    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.order()).map(ElementId)
    }

    /// Name of an element.
    pub fn name(&self, x: ElementId) -> &str {
        &self.names[x.0]
    }

    /// Element names in list order.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Looks an element up by its exact name.
    pub fn element_by_name(&self, name: &str) -> Option<ElementId> {
        self.names.iter().position(|n| n == name).map(ElementId)
    }

    /// The unit 1.
    pub fn one(&self) -> ElementId {
        ElementId(self.one)
    }

    #[inline]
    fn star_idx(&self, x: usize, y: usize) -> usize {
        self.star[x * self.names.len() + y]
    }

    /// The implication x ∗ y.
    pub fn star(&self, x: ElementId, y: ElementId) -> ElementId {
        ElementId(self.star_idx(x.0, y.0))
    }

    /// The complement of x.
    pub fn comp(&self, x: ElementId) -> ElementId {
        ElementId(self.comp[x.0])
    }

    /// Entrywise equality of the index tables, ignoring element names.
    pub fn tables_match(&self, other: &Self) -> bool {
        self.order() == other.order()
            && self.one == other.one
            && self.comp == other.comp
            && self.star == other.star
    }

    fn witness(&self, ids: &[usize]) -> Vec<String> {
        ids.iter().map(|&i| self.names[i].clone()).collect()
    }

    /// Exhaustively checks the four Wajsberg axioms over all element tuples.
    pub fn verify_axioms(&self) -> AxiomReport {
        let n = self.order();
        let mut report = AxiomReport::default();

        // (x ∗ y) ∗ ((y ∗ z) ∗ (x ∗ z)) = 1
        'trans: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let inner = self.star_idx(self.star_idx(y, z), self.star_idx(x, z));
                    if self.star_idx(self.star_idx(x, y), inner) != self.one {
                        report.record("transitivity", self.witness(&[x, y, z]));
                        break 'trans;
                    }
                }
            }
        }

        // (x ∗ y) ∗ y = (y ∗ x) ∗ x
        'ub: for x in 0..n {
            for y in 0..n {
                if self.star_idx(self.star_idx(x, y), y) != self.star_idx(self.star_idx(y, x), x) {
                    report.record("upper-bound-symmetry", self.witness(&[x, y]));
                    break 'ub;
                }
            }
        }

        // (x̄ ∗ ȳ) ∗ (y ∗ x) = 1
        'contra: for x in 0..n {
            for y in 0..n {
                let lhs = self.star_idx(
                    self.star_idx(self.comp[x], self.comp[y]),
                    self.star_idx(y, x),
                );
                if lhs != self.one {
                    report.record("contraposition", self.witness(&[x, y]));
                    break 'contra;
                }
            }
        }

        // 1 ∗ x = x
        for x in 0..n {
            if self.star_idx(self.one, x) != x {
                report.record("one-identity", self.witness(&[x]));
                break;
            }
        }

        report
    }

    /// The MV presentation: x ⊕ y = x̄ ∗ y with 0 = 1̄.
    ///
    /// Rejects algebras that fail the Wajsberg axioms, since the translation
    /// is only meaningful for genuine Wajsberg algebras.
    pub fn to_mv(&self) -> Result<FiniteMVAlgebra, AlgebraError> {
        let report = self.verify_axioms();
        if !report.passed() {
            return Err(AlgebraError::WajsbergAxioms(report));
        }
        let n = self.order();
        let mut oplus = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                oplus.push(self.star_idx(self.comp[x], y));
            }
        }
        let zero = self.comp[self.one];
        Ok(FiniteMVAlgebra {
            names: self.names.clone(),
            zero,
            one: self.comp[zero],
            neg: self.comp.clone(),
            oplus,
        })
    }
}
