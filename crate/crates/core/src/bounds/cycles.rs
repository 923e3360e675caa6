//! Decomposition of two orbits into alternating cycles and the lower bound
//! on the classical bound obtained from it.
//!
//! With `h = g̃₁ g̃₂⁻¹` and a start element `g₀`, the cycle visits
//! `g₀hᵏv ⊗ g₀hᵏg̃₁v` (first orbit) and `g₀hᵏ⁺¹v ⊗ g₀hᵏ⁺¹g̃₂v = g₀hᵏ⁺¹v ⊗ g₀hᵏg̃₁v`
//! (second orbit), alternately sharing the Bob and the Alice factor, and
//! closes after `2·order(h)` vertices.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::permgroup::{CosetCoord, GroupTable, Permutation, GROUP_ORDER, NUM_COSETS};

const K: usize = NUM_COSETS as usize;

/// An orbit element viewed as a vertex of the cycle graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CycleVertex {
    /// 1 or 2.
    pub orbit: u8,
    pub alice: CosetCoord,
    pub bob: CosetCoord,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub gtilde1: Permutation,
    pub gtilde2: Permutation,
    pub cycles: Vec<Vec<CycleVertex>>,
    pub cycle_length: usize,
}

impl Serialize for CycleDecomposition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.cycles.len()))?;
        for c in &self.cycles {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

impl CycleDecomposition {
    /// Alice states of a cycle in visiting order (the A-row of a diagram).
    pub fn alice_row(cycle: &[CycleVertex]) -> Vec<CosetCoord> {
        cycle.iter().step_by(2).map(|v| v.alice).collect()
    }

    /// Bob states of a cycle in visiting order (the B-row of a diagram).
    pub fn bob_row(cycle: &[CycleVertex]) -> Vec<CosetCoord> {
        cycle.iter().step_by(2).map(|v| v.bob).collect()
    }
}

/// Splits the 48 elements of `O(g̃₁)` and `O(g̃₂)` into cycles. Start
/// elements `g₀` are taken in coset-table order.
pub fn cycle_decomposition(
    group: &GroupTable,
    g1: &Permutation,
    g2: &Permutation,
) -> Result<CycleDecomposition> {
    if g1 == g2 {
        return Err(Error::DuplicateOrbit(group.coset_factorize(g1).to_string()));
    }
    let h = g1.compose(&g2.inverse());
    let mut visited = [false; GROUP_ORDER];
    let mut cycles = Vec::new();
    for start in CosetCoord::all() {
        if visited[start.index()] {
            continue;
        }
        let g0 = group.element(start);
        let mut x = g0;
        let mut cycle = Vec::new();
        loop {
            let cx = group.coset_factorize(&x);
            visited[cx.index()] = true;
            let bob = group.coset_factorize(&x.compose(g1));
            cycle.push(CycleVertex {
                orbit: 1,
                alice: cx,
                bob,
            });
            x = x.compose(&h);
            let alice = group.coset_factorize(&x);
            debug_assert_eq!(group.coset_factorize(&x.compose(g2)), bob);
            cycle.push(CycleVertex {
                orbit: 2,
                alice,
                bob,
            });
            if x == g0 {
                break;
            }
        }
        cycles.push(cycle);
    }
    Ok(CycleDecomposition {
        gtilde1: *g1,
        gtilde2: *g2,
        cycle_length: 2 * h.order() as usize,
        cycles,
    })
}

/// Lower bound `B′ ≤ B` from the cycle decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleBound {
    /// `B′`: terms satisfied by the best whole-cycle selection after
    /// extending it through the remaining cycles.
    pub value: u32,
    /// Edge count of the largest consistent selection of whole cycles alone.
    pub whole_cycle_edges: u32,
    /// Cycles selected for `value`, as indices into the decomposition.
    pub selected_cycles: Vec<usize>,
}

/// Partial deterministic assignment of outcomes.
#[derive(Clone, Copy, Default)]
struct Assignment {
    alice: [Option<u8>; K],
    bob: [Option<u8>; K],
}

impl Assignment {
    fn admits(&self, v: &CycleVertex) -> bool {
        let a = self.alice[v.alice.alpha as usize - 1];
        let b = self.bob[v.bob.alpha as usize - 1];
        a.is_none_or(|l| l == v.alice.l) && b.is_none_or(|l| l == v.bob.l)
    }

    fn fix(&mut self, v: &CycleVertex) {
        self.alice[v.alice.alpha as usize - 1] = Some(v.alice.l);
        self.bob[v.bob.alpha as usize - 1] = Some(v.bob.l);
    }

    fn satisfies(&self, v: &CycleVertex) -> bool {
        self.alice[v.alice.alpha as usize - 1] == Some(v.alice.l)
            && self.bob[v.bob.alpha as usize - 1] == Some(v.bob.l)
    }

    /// Adds a whole cycle if every vertex agrees with the assignment.
    fn with_cycle(&self, cycle: &[CycleVertex]) -> Option<Assignment> {
        let mut next = *self;
        for v in cycle {
            if !next.admits(v) {
                return None;
            }
            next.fix(v);
        }
        Some(next)
    }
}

/// Searches all selections of whole cycles whose states use at most one
/// outcome per Alice observable and per Bob observable. Each selection is
/// extended vertex by vertex through the unselected cycles (in cycle order)
/// and scored by the number of orbit terms the resulting assignment
/// satisfies. Every score is attained by a deterministic configuration, so
/// `B′ ≤ B`.
pub fn cycle_lower_bound(
    group: &GroupTable,
    g1: &Permutation,
    g2: &Permutation,
) -> Result<CycleBound> {
    let dec = cycle_decomposition(group, g1, g2)?;
    let all: Vec<CycleVertex> = dec.cycles.iter().flatten().copied().collect();
    let mut best = CycleBound {
        value: 0,
        whole_cycle_edges: 0,
        selected_cycles: Vec::new(),
    };
    let mut chosen = Vec::new();
    select(
        &dec.cycles,
        &all,
        0,
        Assignment::default(),
        &mut chosen,
        &mut best,
    );
    Ok(best)
}

fn select(
    cycles: &[Vec<CycleVertex>],
    all: &[CycleVertex],
    next: usize,
    assignment: Assignment,
    chosen: &mut Vec<usize>,
    best: &mut CycleBound,
) {
    if next == cycles.len() {
        let whole: usize = chosen.iter().map(|&i| cycles[i].len()).sum();
        best.whole_cycle_edges = best.whole_cycle_edges.max(whole as u32);

        let mut extended = assignment;
        for (i, c) in cycles.iter().enumerate() {
            if chosen.contains(&i) {
                continue;
            }
            for v in c {
                if extended.admits(v) {
                    extended.fix(v);
                }
            }
        }
        let value = all.iter().filter(|v| extended.satisfies(v)).count() as u32;
        if value > best.value {
            best.value = value;
            best.selected_cycles = chosen.clone();
        }
        return;
    }
    if let Some(with) = assignment.with_cycle(&cycles[next]) {
        chosen.push(next);
        select(cycles, all, next + 1, with, chosen, best);
        chosen.pop();
    }
    select(cycles, all, next + 1, assignment, chosen, best);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{classical_bound, OrbitSet};
    use std::collections::BTreeSet;

    fn el(a: u8, l: u8) -> Permutation {
        GroupTable::s4().element(CosetCoord::new(a, l).unwrap())
    }

    #[test]
    fn appendix_cycle_shapes() {
        let group = GroupTable::s4();
        let d = cycle_decomposition(group, &el(4, 2), &el(7, 0)).unwrap();
        assert_eq!((d.cycles.len(), d.cycle_length), (8, 6));
        let d = cycle_decomposition(group, &el(6, 2), &el(8, 2)).unwrap();
        assert_eq!((d.cycles.len(), d.cycle_length), (12, 4));
    }

    #[test]
    fn first_hexagon_for_b8_example() {
        let group = GroupTable::s4();
        let d = cycle_decomposition(group, &el(4, 2), &el(7, 0)).unwrap();
        let c = |a, l| CosetCoord::new(a, l).unwrap();
        assert_eq!(
            CycleDecomposition::alice_row(&d.cycles[0]),
            vec![c(1, 0), c(1, 1), c(1, 2)]
        );
        assert_eq!(
            CycleDecomposition::bob_row(&d.cycles[0]),
            vec![c(4, 2), c(3, 0), c(7, 0)]
        );
    }

    #[test]
    fn cycles_partition_both_orbits_and_alternate() {
        let group = GroupTable::s4();
        let (g1, g2) = (el(2, 0), el(3, 2));
        let d = cycle_decomposition(group, &g1, &g2).unwrap();
        let order = g1.compose(&g2.inverse()).order() as usize;
        assert_eq!(d.cycle_length, 2 * order);
        let vertices: BTreeSet<_> = d.cycles.iter().flatten().copied().collect();
        assert_eq!(vertices.len(), 48);
        let set = OrbitSet::new(vec![g1, g2]).unwrap();
        let terms: BTreeSet<_> = set
            .terms(group)
            .into_iter()
            .map(|t| CycleVertex {
                orbit: t.orbit,
                alice: t.alice,
                bob: t.bob,
            })
            .collect();
        assert_eq!(vertices, terms);
        for c in &d.cycles {
            assert_eq!(c.len(), d.cycle_length);
            for i in 0..c.len() {
                let (a, b) = (c[i], c[(i + 1) % c.len()]);
                assert_ne!(a.orbit, b.orbit);
                if i % 2 == 0 {
                    assert_eq!(a.bob, b.bob);
                } else {
                    assert_eq!(a.alice, b.alice);
                }
            }
        }
    }

    #[test]
    fn equal_orbits_are_rejected() {
        let group = GroupTable::s4();
        assert!(cycle_decomposition(group, &el(2, 2), &el(2, 2)).is_err());
        assert!(cycle_lower_bound(group, &el(2, 2), &el(2, 2)).is_err());
    }

    #[test]
    fn lower_bound_examples() {
        let group = GroupTable::s4();
        let b = cycle_lower_bound(group, &el(2, 2), &el(7, 2)).unwrap();
        assert_eq!(b.value, 14);
        assert_eq!(b.whole_cycle_edges, 12);
        let b = cycle_lower_bound(group, &el(4, 2), &el(7, 0)).unwrap();
        assert!(b.value <= 8);
        // each hexagon uses three outcomes of a single Alice observable
        assert_eq!(b.whole_cycle_edges, 0);
        let b = cycle_lower_bound(group, &el(6, 2), &el(8, 2)).unwrap();
        assert_eq!((b.value, b.whole_cycle_edges), (16, 16));
    }

    #[test]
    fn lower_bound_never_exceeds_exact_bound() {
        let group = GroupTable::s4();
        let coords: Vec<_> = CosetCoord::all().collect();
        for (i, a) in coords.iter().enumerate().step_by(5) {
            for b in &coords[i + 1..] {
                let (g1, g2) = (group.element(*a), group.element(*b));
                let lower = cycle_lower_bound(group, &g1, &g2).unwrap().value;
                let exact = classical_bound(group, &OrbitSet::new(vec![g1, g2]).unwrap())
                    .unwrap()
                    .value;
                assert!(lower <= exact, "{a} {b}: {lower} > {exact}");
            }
        }
    }
}
