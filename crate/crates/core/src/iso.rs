//! Backtracking isomorphism search between finite MV-algebras.
//!
//! An isomorphism is a bijection preserving ⊕, ⌐ and 0 (join and meet
//! preservation then follow, since both are ⊕/⌐ terms). The search first
//! refines invariant colors jointly on both algebras, then backtracks over
//! element images, propagating every assignment through the operation
//! tables so conflicts surface early.

use crate::algebra::{ElementId, FiniteMVAlgebra};
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

/// Finds a bijection f with f(0) = 0, f(x ⊕ y) = f(x) ⊕ f(y) and
/// f(⌐x) = ⌐f(x), or `None` when no such bijection exists.
///
/// The returned vector maps each element index of `a` to its image in `b`.
/// Both inputs are assumed to pass the MV axioms. The search is
/// deterministic: candidates are tried in element order.
pub fn find_isomorphism(a: &FiniteMVAlgebra, b: &FiniteMVAlgebra) -> Option<Vec<ElementId>> {
    let n = a.order();
    if n != b.order() {
        return None;
    }
    let (ca, cb) = joint_colors(a, b);

    let mut hist_a = BTreeMap::new();
    let mut hist_b = BTreeMap::new();
    for x in 0..n {
        *hist_a.entry(ca[x]).or_insert(0usize) += 1;
        *hist_b.entry(cb[x]).or_insert(0usize) += 1;
    }
    if hist_a != hist_b {
        return None;
    }

    let mut search = Search {
        a,
        b,
        ca: &ca,
        cb: &cb,
        map: vec![None; n],
        inv: vec![None; n],
        trail: Vec::new(),
    };
    if !search.force(a.zero_idx(), b.zero_idx()) {
        return None;
    }
    if !search.extend() {
        return None;
    }

    let mapping: Vec<ElementId> = search
        .map
        .iter()
        .map(|q| ElementId(q.expect("search completed with a total map")))
        .collect();
    debug_assert!(preserves_operations(a, b, &mapping));
    Some(mapping)
}

fn preserves_operations(a: &FiniteMVAlgebra, b: &FiniteMVAlgebra, f: &[ElementId]) -> bool {
    let n = a.order();
    if f[a.zero_idx()].0 != b.zero_idx() {
        return false;
    }
    for x in 0..n {
        if f[a.neg_idx(x)].0 != b.neg_idx(f[x].0) {
            return false;
        }
        for y in 0..n {
            if f[a.op_idx(x, y)].0 != b.op_idx(f[x].0, f[y].0) {
                return false;
            }
        }
    }
    true
}

/// Color refinement run jointly over both algebras so that equal colors mean
/// equal invariants across the two carriers.
fn joint_colors(a: &FiniteMVAlgebra, b: &FiniteMVAlgebra) -> (Vec<u32>, Vec<u32>) {
    let seed = |alg: &FiniteMVAlgebra, table: &mut BTreeMap<Vec<u32>, u32>| -> Vec<u32> {
        let n = alg.order();
        (0..n)
            .map(|x| {
                let downset = (0..n)
                    .filter(|&z| alg.op_idx(alg.neg_idx(z), x) == alg.one_idx())
                    .count() as u32;
                let key = vec![
                    u32::from(x == alg.zero_idx()),
                    u32::from(x == alg.one_idx()),
                    u32::from(alg.op_idx(x, x) == x),
                    downset,
                ];
                let next = table.len() as u32;
                *table.entry(key).or_insert(next)
            })
            .collect()
    };

    let mut table = BTreeMap::new();
    let mut ca = seed(a, &mut table);
    let mut cb = seed(b, &mut table);
    let mut distinct = table.len();

    loop {
        let mut table: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
        let refine = |alg: &FiniteMVAlgebra, c: &[u32], table: &mut BTreeMap<Vec<u32>, u32>| {
            let n = alg.order();
            (0..n)
                .map(|x| {
                    let mut pairs: Vec<(u32, u32)> =
                        (0..n).map(|y| (c[y], c[alg.op_idx(x, y)])).collect();
                    pairs.sort_unstable();
                    let mut key = Vec::with_capacity(2 + 2 * n);
                    key.push(c[x]);
                    key.push(c[alg.neg_idx(x)]);
                    for (u, v) in pairs {
                        key.push(u);
                        key.push(v);
                    }
                    let next = table.len() as u32;
                    *table.entry(key).or_insert(next)
                })
                .collect::<Vec<u32>>()
        };
        let na = refine(a, &ca, &mut table);
        let nb = refine(b, &cb, &mut table);
        let now = table.len();
        ca = na;
        cb = nb;
        if now <= distinct {
            break;
        }
        distinct = now;
    }
    (ca, cb)
}

struct Search<'s> {
    a: &'s FiniteMVAlgebra,
    b: &'s FiniteMVAlgebra,
    ca: &'s [u32],
    cb: &'s [u32],
    map: Vec<Option<usize>>,
    inv: Vec<Option<usize>>,
    trail: Vec<usize>,
}

impl Search<'_> {
    /// Assigns p ↦ q and closes the assignment under ⊕ and ⌐ with every
    /// element already mapped. Returns false on conflict; the caller rolls
    /// back through the trail either way.
    fn force(&mut self, p: usize, q: usize) -> bool {
        let mut queue = vec![(p, q)];
        while let Some((p, q)) = queue.pop() {
            match self.map[p] {
                Some(existing) => {
                    if existing == q {
                        continue;
                    }
                    return false;
                }
                None => {}
            }
            if self.inv[q].is_some() || self.ca[p] != self.cb[q] {
                return false;
            }
            self.map[p] = Some(q);
            self.inv[q] = Some(p);
            self.trail.push(p);

            queue.push((self.a.neg_idx(p), self.b.neg_idx(q)));
            for r in 0..self.a.order() {
                if let Some(fr) = self.map[r] {
                    queue.push((self.a.op_idx(p, r), self.b.op_idx(q, fr)));
                    queue.push((self.a.op_idx(r, p), self.b.op_idx(fr, q)));
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let p = self.trail.pop().expect("trail is non-empty above mark");
            let q = self.map[p].take().expect("trailed assignment exists");
            self.inv[q] = None;
        }
    }

    fn extend(&mut self) -> bool {
        let n = self.a.order();
        // most constrained unassigned element first
        let mut best: Option<(usize, usize)> = None;
        for p in 0..n {
            if self.map[p].is_some() {
                continue;
            }
            let candidates = (0..n)
                .filter(|&q| self.inv[q].is_none() && self.cb[q] == self.ca[p])
                .count();
            if best.map_or(true, |(c, _)| candidates < c) {
                best = Some((candidates, p));
            }
        }
        let Some((_, p)) = best else {
            return true;
        };

        for q in 0..n {
            if self.inv[q].is_some() || self.cb[q] != self.ca[p] {
                continue;
            }
            let mark = self.trail.len();
            if self.force(p, q) && self.extend() {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}
