//! Shared Cayley-table fixtures for unit tests.
//!
//! Greek element symbols are transliterated to ASCII tokens:
//! α→a, β→b, γ→g, δ→d, ε→e, τ→t, υ→u, ρ→r.

use crate::algebra::{FiniteMVAlgebra, WajsbergAlgebra};
use alloc::string::ToString;
use alloc::vec::Vec;

fn idx(names: &[&str], token: &str) -> usize {
    names
        .iter()
        .position(|n| *n == token)
        .unwrap_or_else(|| panic!("unknown token `{token}`"))
}

fn unary(names: &[&str], row: &str) -> Vec<usize> {
    row.split_whitespace().map(|t| idx(names, t)).collect()
}

fn binary(names: &[&str], rows: &[&str]) -> Vec<Vec<usize>> {
    rows.iter().map(|r| unary(names, r)).collect()
}

pub(crate) fn mv_from(
    names: &[&str],
    zero: &str,
    neg: &str,
    rows: &[&str],
) -> FiniteMVAlgebra {
    FiniteMVAlgebra::from_tables(
        names.iter().map(|s| s.to_string()).collect(),
        idx(names, zero),
        unary(names, neg),
        binary(names, rows),
    )
    .expect("fixture table is structurally valid")
}

pub(crate) fn wj_from(
    names: &[&str],
    one: &str,
    comp: &str,
    rows: &[&str],
) -> WajsbergAlgebra {
    WajsbergAlgebra::from_tables(
        names.iter().map(|s| s.to_string()).collect(),
        idx(names, one),
        unary(names, comp),
        binary(names, rows),
    )
    .expect("fixture table is structurally valid")
}

const NAMES2: &[&str] = &["b", "e"];
const NAMES4: &[&str] = &["0", "a", "b", "e"];
const NAMES6: &[&str] = &["0", "a", "b", "g", "d", "e"];
const NAMES8: &[&str] = &["0", "a", "b", "g", "t", "u", "r", "e"];

pub(crate) fn one_point() -> FiniteMVAlgebra {
    mv_from(&["0"], "0", "0", &["0"])
}

/// Two-element Boolean algebra on (b, e).
pub(crate) fn b2() -> FiniteMVAlgebra {
    mv_from(NAMES2, "b", "e b", &["b e", "e e"])
}

/// Six-element sample algebra with Boolean skeleton {0, b, g, e}.
pub(crate) fn demo6() -> FiniteMVAlgebra {
    mv_from(
        NAMES6,
        "0",
        "e d g b a 0",
        &[
            "0 a b g d e",
            "a g d g e e",
            "b d b e d e",
            "g g e g e e",
            "d e d e e e",
            "e e e e e e",
        ],
    )
}

/// Four-element chain.
pub(crate) fn chain4() -> FiniteMVAlgebra {
    mv_from(
        NAMES4,
        "0",
        "e b a 0",
        &["0 a b e", "a b e e", "b e e e", "e e e e"],
    )
}

pub(crate) fn names_0abe() -> Vec<alloc::string::String> {
    NAMES4.iter().map(|s| s.to_string()).collect()
}

pub(crate) fn rows_b4() -> Vec<Vec<usize>> {
    binary(NAMES4, &["0 a b e", "a a e e", "b e b e", "e e e e"])
}

/// Four-element Boolean algebra.
pub(crate) fn b4() -> FiniteMVAlgebra {
    mv_from(
        NAMES4,
        "0",
        "e b a 0",
        &["0 a b e", "a a e e", "b e b e", "e e e e"],
    )
}

/// Six-element chain.
pub(crate) fn chain6() -> FiniteMVAlgebra {
    mv_from(
        NAMES6,
        "0",
        "e d g b a 0",
        &[
            "0 a b g d e",
            "a b g d e e",
            "b g d e e e",
            "g d e e e e",
            "d e e e e e",
            "e e e e e e",
        ],
    )
}

/// Six-element product of a 3-chain and a 2-chain.
pub(crate) fn grid6() -> FiniteMVAlgebra {
    mv_from(
        NAMES6,
        "0",
        "e d g b a 0",
        &[
            "0 a b g d e",
            "a b b d e e",
            "b b b e e e",
            "g d e g d e",
            "d e e d e e",
            "e e e e e e",
        ],
    )
}

/// Eight-element chain.
pub(crate) fn chain8() -> FiniteMVAlgebra {
    mv_from(
        NAMES8,
        "0",
        "e r u t g b a 0",
        &[
            "0 a b g t u r e",
            "a b g t u r e e",
            "b g t u r e e e",
            "g t u r e e e e",
            "t u r e e e e e",
            "u r e e e e e e",
            "r e e e e e e e",
            "e e e e e e e e",
        ],
    )
}

/// Eight-element product of a 2-chain and a 4-chain.
pub(crate) fn grid8() -> FiniteMVAlgebra {
    mv_from(
        NAMES8,
        "0",
        "e r u t g b a 0",
        &[
            "0 a b g t u r e",
            "a a g g u u e e",
            "b g t u r e r e",
            "g g u u e e e e",
            "t u r e r e r e",
            "u u e e e e e e",
            "r e r e r e r e",
            "e e e e e e e e",
        ],
    )
}

/// Eight-element Boolean algebra.
pub(crate) fn b8() -> FiniteMVAlgebra {
    mv_from(
        NAMES8,
        "0",
        "e r u t g b a 0",
        &[
            "0 a b g t u r e",
            "a a g g u u e e",
            "b g b g r e r e",
            "g g g g e e e e",
            "t u r e t u r e",
            "u u e e u u e e",
            "r e r e r e r e",
            "e e e e e e e e",
        ],
    )
}

pub(crate) fn rows_chain4_star() -> Vec<Vec<usize>> {
    binary(NAMES4, &["e e e e", "b e e e", "a b e e", "0 a b e"])
}

pub(crate) fn chain4_star() -> WajsbergAlgebra {
    wj_from(
        NAMES4,
        "e",
        "e b a 0",
        &["e e e e", "b e e e", "a b e e", "0 a b e"],
    )
}

pub(crate) fn b4_star() -> WajsbergAlgebra {
    wj_from(
        NAMES4,
        "e",
        "e b a 0",
        &["e e e e", "b e b e", "a a e e", "0 a b e"],
    )
}

pub(crate) fn chain6_star() -> WajsbergAlgebra {
    wj_from(
        NAMES6,
        "e",
        "e d g b a 0",
        &[
            "e e e e e e",
            "d e e e e e",
            "g d e e e e",
            "b g d e e e",
            "a b g d e e",
            "0 a b g d e",
        ],
    )
}

pub(crate) fn grid6_star() -> WajsbergAlgebra {
    wj_from(
        NAMES6,
        "e",
        "e d g b a 0",
        &[
            "e e e e e e",
            "d e e d e e",
            "g d e g d e",
            "b b b e e e",
            "a b b d e e",
            "0 a b g d e",
        ],
    )
}

pub(crate) fn chain8_star() -> WajsbergAlgebra {
    wj_from(
        NAMES8,
        "e",
        "e r u t g b a 0",
        &[
            "e e e e e e e e",
            "r e e e e e e e",
            "u r e e e e e e",
            "t u r e e e e e",
            "g t u r e e e e",
            "b g t u r e e e",
            "a b g t u r e e",
            "0 a b g t u r e",
        ],
    )
}

pub(crate) fn grid8_star() -> WajsbergAlgebra {
    wj_from(
        NAMES8,
        "e",
        "e r u t g b a 0",
        &[
            "e e e e e e e e",
            "r e r e r e r e",
            "u u e e e e e e",
            "t u r e r e r e",
            "g g u u e e e e",
            "b g t u r e r e",
            "a a g g u u e e",
            "0 a b g t u r e",
        ],
    )
}

pub(crate) fn b8_star() -> WajsbergAlgebra {
    wj_from(
        NAMES8,
        "e",
        "e r u t g b a 0",
        &[
            "e e e e e e e e",
            "r e r e r e r e",
            "u u e e u u e e",
            "t u r e t u r e",
            "g g g g e e e e",
            "b g b g r e r e",
            "a a g g u u e e",
            "0 a b g t u r e",
        ],
    )
}

pub(crate) fn all_mv_fixtures() -> Vec<FiniteMVAlgebra> {
    alloc::vec![
        demo6(),
        chain4(),
        b4(),
        chain6(),
        grid6(),
        chain8(),
        grid8(),
        b8(),
        b2(),
    ]
}

pub(crate) fn all_wajsberg_fixtures() -> Vec<WajsbergAlgebra> {
    alloc::vec![
        chain4_star(),
        b4_star(),
        chain6_star(),
        grid6_star(),
        chain8_star(),
        grid8_star(),
        b8_star(),
    ]
}

/// Sum tables paired with their implication-table presentations.
pub(crate) fn paired_fixtures() -> Vec<(FiniteMVAlgebra, WajsbergAlgebra)> {
    alloc::vec![
        (chain4(), chain4_star()),
        (b4(), b4_star()),
        (chain6(), chain6_star()),
        (grid6(), grid6_star()),
        (chain8(), chain8_star()),
        (grid8(), grid8_star()),
        (b8(), b8_star()),
    ]
}
