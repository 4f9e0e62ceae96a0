//! Principal ideals, products, chain decomposition, and enumeration of all
//! algebras of a given order up to isomorphism.
//!
//! Every finite MV-algebra is a product of chains; the decomposition here is
//! the maximal one, induced by the atoms of the Boolean skeleton, and is
//! re-verified by brute force on every call rather than assumed.

use crate::algebra::{AlgebraError, ElementId, FiniteMVAlgebra};
use crate::chains::{make_chain, ZeroOrderError};
use crate::order::{derive_order, OrderStructure};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Failure of an ideal, product or decomposition operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureError {
    /// The input algebra failed its axiom check.
    Algebra(AlgebraError),
    /// A principal-ideal generator that is not idempotent.
    ///
    /// Relativized negation b ∧ ⌐x only yields an MV-algebra on the downset
    /// of a Boolean element.
    NotIdempotent { element: String },
    /// A structural fact guaranteed by the finite-product theory failed to
    /// verify; inputs that trigger this falsify the theory.
    Internal(&'static str),
}

impl fmt::Display for StructureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureError::Algebra(e) => e.fmt(f),
            StructureError::NotIdempotent { element } => write!(
                f,
                "element `{element}` is not idempotent: principal ideals carry an MV-structure only below Boolean elements"
            ),
            StructureError::Internal(msg) => write!(f, "internal check failed: {msg}"),
        }
    }
}

impl core::error::Error for StructureError {}

impl From<AlgebraError> for StructureError {
    fn from(e: AlgebraError) -> Self {
        StructureError::Algebra(e)
    }
}

fn ideal_carrier(ord: &OrderStructure, b: ElementId) -> Vec<usize> {
    (0..ord.order())
        .filter(|&z| ord.leq(ElementId(z), b))
        .collect()
}

/// The principal ideal (−∞, b] as an MV-algebra, for Boolean b.
///
/// The carrier keeps the source element order and names; negation is
/// relativized to z ↦ b ∧ ⌐z, so b becomes the unit.
pub fn principal_ideal(
    a: &FiniteMVAlgebra,
    b: ElementId,
) -> Result<FiniteMVAlgebra, StructureError> {
    let ord = derive_order(a)?;
    if !ord.is_boolean(b) {
        return Err(StructureError::NotIdempotent {
            element: a.name(b).into(),
        });
    }
    let carrier = ideal_carrier(&ord, b);
    let mut pos = vec![usize::MAX; a.order()];
    for (i, &z) in carrier.iter().enumerate() {
        pos[z] = i;
    }

    let names = carrier.iter().map(|&z| a.names()[z].clone()).collect();
    let zero = pos[a.zero().index()];
    let mut neg = Vec::with_capacity(carrier.len());
    for &z in &carrier {
        let img = ord.meet(b, a.neg(ElementId(z)));
        neg.push(pos[img.index()]);
    }
    let mut rows = Vec::with_capacity(carrier.len());
    for &z in &carrier {
        let mut row = Vec::with_capacity(carrier.len());
        for &w in &carrier {
            let s = a.oplus(ElementId(z), ElementId(w)).index();
            if pos[s] == usize::MAX {
                return Err(StructureError::Internal(
                    "principal ideal is not closed under the sum",
                ));
            }
            row.push(pos[s]);
        }
        rows.push(row);
    }

    let ideal = FiniteMVAlgebra::from_tables(names, zero, neg, rows)
        .expect("ideal tables are structurally valid");
    if !ideal.verify_axioms().passed() {
        return Err(StructureError::Internal(
            "relativized ideal fails the MV axioms",
        ));
    }
    Ok(ideal)
}

/// The direct product with componentwise operations.
///
/// Elements are ordered row-major over (a-index, b-index) and named by
/// joining the factor names with a comma.
pub fn product(a: &FiniteMVAlgebra, b: &FiniteMVAlgebra) -> FiniteMVAlgebra {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut names = Vec::with_capacity(n);
    let mut neg = Vec::with_capacity(n);
    let mut rows = Vec::with_capacity(n);
    for i in 0..na {
        for j in 0..nb {
            names.push(format!("{},{}", a.names()[i], b.names()[j]));
            neg.push(a.neg_idx(i) * nb + b.neg_idx(j));
        }
    }
    for i in 0..na {
        for j in 0..nb {
            let mut row = Vec::with_capacity(n);
            for k in 0..na {
                for l in 0..nb {
                    row.push(a.op_idx(i, k) * nb + b.op_idx(j, l));
                }
            }
            rows.push(row);
        }
    }
    let zero = a.zero_idx() * nb + b.zero_idx();
    FiniteMVAlgebra::from_tables(names, zero, neg, rows)
        .expect("product tables are structurally valid")
}

/// A product-of-chains decomposition along the Boolean atoms.
#[derive(Clone, Debug)]
pub struct Decomposition {
    atoms: Vec<ElementId>,
    factors: Vec<FiniteMVAlgebra>,
    components: Vec<Vec<ElementId>>,
}

impl Decomposition {
    /// The Boolean atoms inducing the factors, sorted by (ideal size,
    /// element index). The trivial decomposition uses the unit.
    pub fn atoms(&self) -> &[ElementId] {
        &self.atoms
    }

    /// The principal-ideal algebras below each atom.
    pub fn factors(&self) -> &[FiniteMVAlgebra] {
        &self.factors
    }

    /// For each source element, its component tuple (x ∧ a_1, …, x ∧ a_k)
    /// as ids into the respective factors.
    pub fn components(&self) -> &[Vec<ElementId>] {
        &self.components
    }

    /// Factor sizes in decomposition order.
    pub fn shape(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.order()).collect()
    }

    /// The factors multiplied back together, folding left.
    pub fn iterated_product(&self) -> FiniteMVAlgebra {
        let mut it = self.factors.iter();
        let first = it.next().expect("at least one factor").clone();
        it.fold(first, |acc, f| product(&acc, f))
    }
}

/// Decomposes `a` into the product of the principal ideals below the atoms
/// of its Boolean skeleton, checking by brute force that x ↦ (x ∧ a_i) is an
/// isomorphism onto the iterated product.
pub fn decompose(a: &FiniteMVAlgebra) -> Result<Decomposition, StructureError> {
    let ord = derive_order(a)?;

    if ord.booleans().len() <= 2 {
        // single chain: only the trivial decomposition below the unit
        if !ord.is_total() {
            return Err(StructureError::Internal(
                "algebra with trivial Boolean skeleton is not totally ordered",
            ));
        }
        return Ok(Decomposition {
            atoms: vec![a.one()],
            factors: vec![a.clone()],
            components: a.elements().map(|x| vec![x]).collect(),
        });
    }

    let mut atoms = ord.boolean_atoms();
    atoms.sort_by_key(|&b| (ideal_carrier(&ord, b).len(), b.index()));

    let mut factors = Vec::with_capacity(atoms.len());
    let mut carriers = Vec::with_capacity(atoms.len());
    for &atom in &atoms {
        factors.push(principal_ideal(a, atom)?);
        carriers.push(ideal_carrier(&ord, atom));
    }
    if factors.iter().map(FiniteMVAlgebra::order).product::<usize>() != a.order() {
        return Err(StructureError::Internal(
            "factor sizes do not multiply to the algebra order",
        ));
    }
    for f in &factors {
        if !derive_order(f).expect("factor passed axioms at construction").is_total() {
            return Err(StructureError::Internal("a factor is not totally ordered"));
        }
    }

    let components: Vec<Vec<ElementId>> = a
        .elements()
        .map(|x| {
            atoms
                .iter()
                .zip(&carriers)
                .map(|(&atom, carrier)| {
                    let m = ord.meet(x, atom).index();
                    let pos = carrier
                        .iter()
                        .position(|&z| z == m)
                        .expect("meet with an atom lies in its ideal");
                    ElementId(pos)
                })
                .collect()
        })
        .collect();

    let dec = Decomposition {
        atoms,
        factors,
        components,
    };

    // brute-force isomorphism check against the iterated product
    let p = dec.iterated_product();
    let sizes: Vec<usize> = dec.factors.iter().map(FiniteMVAlgebra::order).collect();
    let flat = |t: &[ElementId]| -> usize {
        t.iter()
            .zip(&sizes)
            .fold(0, |acc, (c, &s)| acc * s + c.index())
    };
    let f: Vec<usize> = dec.components.iter().map(|t| flat(t)).collect();
    let mut seen = vec![false; p.order()];
    for &img in &f {
        if seen[img] {
            return Err(StructureError::Internal("component map is not injective"));
        }
        seen[img] = true;
    }
    if f[a.zero().index()] != p.zero().index() {
        return Err(StructureError::Internal("component map moves zero"));
    }
    for x in 0..a.order() {
        if f[a.neg_idx(x)] != p.neg_idx(f[x]) {
            return Err(StructureError::Internal(
                "component map does not commute with negation",
            ));
        }
        for y in 0..a.order() {
            if f[a.op_idx(x, y)] != p.op_idx(f[x], f[y]) {
                return Err(StructureError::Internal(
                    "component map does not commute with the sum",
                ));
            }
        }
    }

    Ok(dec)
}

/// Multisets of chain sizes ≥ 2 with the given product (ascending within a
/// shape), sorted by descending largest factor, then descending
/// lexicographically. `n = 1` yields the single shape `[1]`.
pub fn factor_shapes(n: usize) -> Result<Vec<Vec<usize>>, ZeroOrderError> {
    if n == 0 {
        return Err(ZeroOrderError);
    }
    if n == 1 {
        return Ok(vec![vec![1]]);
    }
    fn gen(n: usize, min: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for d in min..n {
            if d * d > n {
                break;
            }
            if n % d == 0 {
                prefix.push(d);
                gen(n / d, d, prefix, out);
                prefix.pop();
            }
        }
        if n >= min {
            prefix.push(n);
            out.push(prefix.clone());
            prefix.pop();
        }
    }
    let mut shapes = Vec::new();
    gen(n, 2, &mut Vec::new(), &mut shapes);
    shapes.sort_by(|a, b| {
        let ra: Vec<usize> = a.iter().rev().copied().collect();
        let rb: Vec<usize> = b.iter().rev().copied().collect();
        rb.cmp(&ra)
    });
    Ok(shapes)
}

/// One representative per isomorphism class of MV-algebras of order `n`:
/// the products of chains over each factor shape.
pub fn enumerate_mv_algebras(n: usize) -> Result<Vec<FiniteMVAlgebra>, ZeroOrderError> {
    let shapes = factor_shapes(n)?;
    Ok(shapes
        .iter()
        .map(|shape| {
            let mut it = shape.iter();
            let first = make_chain(*it.next().expect("shapes are nonempty"))
                .expect("factors are nonzero");
            it.fold(first, |acc, &c| {
                product(&acc, &make_chain(c).expect("factors are nonzero"))
            })
        })
        .collect())
}

/// Number of idempotents other than 0 and 1 (0 for the one-point algebra).
pub fn proper_idempotent_count(a: &FiniteMVAlgebra) -> Result<usize, AlgebraError> {
    let ord = derive_order(a)?;
    if a.order() == 1 {
        return Ok(0);
    }
    Ok(ord.booleans().len() - 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::find_isomorphism;
    use crate::testdata;

    fn by(a: &FiniteMVAlgebra, n: &str) -> ElementId {
        a.element_by_name(n).unwrap()
    }

    #[test]
    fn principal_ideals_of_the_six_element_sample() {
        let a = testdata::demo6();
        let below_b = principal_ideal(&a, by(&a, "b")).unwrap();
        assert_eq!(below_b.names(), ["0", "b"]);
        assert!(below_b.verify_axioms().passed());
        let below_g = principal_ideal(&a, by(&a, "g")).unwrap();
        assert_eq!(below_g.names(), ["0", "a", "g"]);
        assert!(below_g.verify_axioms().passed());
        // the whole algebra below the unit
        let below_e = principal_ideal(&a, a.one()).unwrap();
        assert_eq!(below_e, a);
        // d ⊕ d = e ≠ d, so no ideal algebra below d
        assert_eq!(
            principal_ideal(&a, by(&a, "d")),
            Err(StructureError::NotIdempotent {
                element: "d".into()
            })
        );
    }

    #[test]
    fn products_of_chains_give_the_grid_fixtures() {
        let p23 = product(&make_chain(2).unwrap(), &make_chain(3).unwrap());
        assert!(p23.verify_axioms().passed());
        assert!(find_isomorphism(&p23, &testdata::grid6()).is_some());

        let p22 = product(&make_chain(2).unwrap(), &make_chain(2).unwrap());
        assert!(find_isomorphism(&p22, &testdata::b4()).is_some());

        let unit = product(&testdata::demo6(), &make_chain(1).unwrap());
        assert!(find_isomorphism(&unit, &testdata::demo6()).is_some());
    }

    #[test]
    fn decomposition_shapes_match_the_fixtures() {
        let a = testdata::demo6();
        let dec = decompose(&a).unwrap();
        assert_eq!(dec.shape(), [2, 3]);
        let atom_names: Vec<_> = dec.atoms().iter().map(|&x| a.name(x)).collect();
        assert_eq!(atom_names, ["b", "g"]);

        let g8 = testdata::grid8();
        let dec = decompose(&g8).unwrap();
        assert_eq!(dec.shape(), [2, 4]);
        assert_eq!(dec.factors()[1].names(), ["0", "b", "t", "r"]);

        assert_eq!(decompose(&testdata::b8()).unwrap().shape(), [2, 2, 2]);

        let chain = testdata::chain6();
        let dec = decompose(&chain).unwrap();
        assert_eq!(dec.shape(), [6]);
        assert_eq!(dec.atoms(), [chain.one()]);
        assert_eq!(dec.factors()[0], chain);
    }

    #[test]
    fn one_point_algebra_decomposes_trivially() {
        let one = make_chain(1).unwrap();
        let dec = decompose(&one).unwrap();
        assert_eq!(dec.shape(), [1]);
    }

    #[test]
    fn shapes_are_ordered_by_descending_largest_factor() {
        assert_eq!(factor_shapes(4).unwrap(), [vec![4], vec![2, 2]]);
        assert_eq!(
            factor_shapes(8).unwrap(),
            [vec![8], vec![2, 4], vec![2, 2, 2]]
        );
        assert_eq!(factor_shapes(7).unwrap(), [vec![7]]);
        assert_eq!(
            factor_shapes(12).unwrap(),
            [vec![12], vec![2, 6], vec![3, 4], vec![2, 2, 3]]
        );
        assert_eq!(factor_shapes(1).unwrap(), [vec![1]]);
        assert_eq!(factor_shapes(0), Err(ZeroOrderError));
    }

    #[test]
    fn enumeration_counts_match_multiset_factorizations() {
        let expected = [1, 1, 2, 1, 2, 1, 3, 2, 2];
        for (n, &want) in (2..=10).zip(&expected) {
            assert_eq!(enumerate_mv_algebras(n).unwrap().len(), want, "n={n}");
        }
    }

    #[test]
    fn enumerated_algebras_of_order_twelve_are_pairwise_distinct() {
        let algebras = enumerate_mv_algebras(12).unwrap();
        assert_eq!(algebras.len(), 4);
        for (i, x) in algebras.iter().enumerate() {
            assert!(x.verify_axioms().passed());
            for (j, y) in algebras.iter().enumerate() {
                assert_eq!(find_isomorphism(x, y).is_some(), i == j);
            }
        }
        // decompose recovers each shape
        let shapes: Vec<_> = algebras
            .iter()
            .map(|a| decompose(a).unwrap().shape())
            .collect();
        assert_eq!(
            shapes,
            [vec![12], vec![2, 6], vec![3, 4], vec![2, 2, 3]]
        );
    }

    #[test]
    fn proper_idempotent_counts_of_the_fixtures() {
        let cases: [(FiniteMVAlgebra, usize); 9] = [
            (testdata::demo6(), 2),
            (testdata::chain4(), 0),
            (testdata::b4(), 2),
            (testdata::chain6(), 0),
            (testdata::grid6(), 2),
            (testdata::chain8(), 0),
            (testdata::grid8(), 2),
            (testdata::b8(), 6),
            (testdata::b2(), 0),
        ];
        for (a, want) in cases {
            assert_eq!(proper_idempotent_count(&a).unwrap(), want);
        }
        assert_eq!(
            proper_idempotent_count(&make_chain(1).unwrap()).unwrap(),
            0
        );
    }

    #[test]
    fn decompose_product_recovers_factor_sizes() {
        for p in 2..=5usize {
            for q in 2..=5usize {
                let a = product(&make_chain(p).unwrap(), &make_chain(q).unwrap());
                let mut shape = decompose(&a).unwrap().shape();
                shape.sort_unstable();
                let mut want = vec![p, q];
                want.sort_unstable();
                assert_eq!(shape, want, "p={p} q={q}");
            }
        }
    }
}
