//! Exact classical bound `B = max_{(a,b)} c(a, b)`.
//!
//! The maximizing joint distribution can be taken deterministic, so `B` is
//! the largest number of orbit terms satisfied by one assignment of outcomes
//! `a: {1..8} → {0,1,2}` (Alice) and `b: {1..8} → {0,1,2}` (Bob). Each term
//! touches Bob through a single observable, so for fixed `a` the best `b`
//! picks, per Bob observable, the outcome matched by the most terms. That
//! leaves `3⁸` Alice assignments to enumerate.

use serde::Serialize;

use super::OrbitSet;
use crate::error::{Error, Result};
use crate::permgroup::{GroupTable, NUM_COSETS, SUBGROUP_ORDER};

const K: usize = NUM_COSETS as usize;
const M: usize = SUBGROUP_ORDER as usize;
/// `3⁸`
const ALICE_ASSIGNMENTS: u32 = 6561;

/// The bound together with one assignment attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicalBound {
    pub value: u32,
    /// Outcome `l` for `A_1..A_8`.
    pub alice: [u8; K],
    /// Outcome `l′` for `B_1..B_8`.
    pub bob: [u8; K],
}

/// `bob_index[α][l]` lists `3(α′−1)+l′` for every term with Alice part `(α,l)`.
struct TermIndex {
    bob_index: [[Vec<u8>; M]; K],
}

impl TermIndex {
    fn new(group: &GroupTable, set: &OrbitSet) -> Self {
        let mut bob_index: [[Vec<u8>; M]; K] = Default::default();
        for t in set.terms(group) {
            bob_index[t.alice.alpha as usize - 1][t.alice.l as usize].push(t.bob.index() as u8);
        }
        TermIndex { bob_index }
    }

    /// Best count for a fixed Alice assignment and the Bob assignment achieving it.
    fn best_response(&self, alice: &[u8; K]) -> (u32, [u8; K]) {
        let mut counts = [0u32; K * M];
        for (alpha, &l) in alice.iter().enumerate() {
            for &b in &self.bob_index[alpha][l as usize] {
                counts[b as usize] += 1;
            }
        }
        let mut bob = [0u8; K];
        let mut total = 0;
        for (beta, slot) in bob.iter_mut().enumerate() {
            let row = &counts[beta * M..beta * M + M];
            let (best_l, best) =
                row.iter()
                    .enumerate()
                    .fold((0, 0), |acc, (l, &c)| if c > acc.1 { (l, c) } else { acc });
            *slot = best_l as u8;
            total += best;
        }
        (total, bob)
    }

    /// Best over the Alice assignments with codes in `range`; ties keep the
    /// smallest code.
    fn search(&self, range: std::ops::Range<u32>) -> Option<(u32, u32, [u8; K])> {
        let mut best: Option<(u32, u32, [u8; K])> = None;
        for code in range {
            let alice = decode(code);
            let (value, bob) = self.best_response(&alice);
            if best.is_none_or(|b| value > b.0) {
                best = Some((value, code, bob));
            }
        }
        best
    }
}

/// Base-3 digits of `code`, least significant digit for `A_1`.
fn decode(mut code: u32) -> [u8; K] {
    let mut out = [0u8; K];
    for d in out.iter_mut() {
        *d = (code % M as u32) as u8;
        code /= M as u32;
    }
    out
}

/// Exact classical bound of a one- or two-orbit set.
pub fn classical_bound(group: &GroupTable, set: &OrbitSet) -> Result<ClassicalBound> {
    classical_bound_with_workers(group, set, 1)
}

/// As [`classical_bound`], with the Alice enumeration split across
/// `workers` threads. The result does not depend on `workers`.
pub fn classical_bound_with_workers(
    group: &GroupTable,
    set: &OrbitSet,
    workers: usize,
) -> Result<ClassicalBound> {
    if !(1..=2).contains(&set.len()) {
        return Err(Error::UnsupportedOrbitCount(set.len()));
    }
    let index = TermIndex::new(group, set);
    let workers = workers.clamp(1, ALICE_ASSIGNMENTS as usize) as u32;
    let chunk = ALICE_ASSIGNMENTS.div_ceil(workers);
    let ranges: Vec<_> = (0..workers)
        .map(|w| (w * chunk).min(ALICE_ASSIGNMENTS)..((w + 1) * chunk).min(ALICE_ASSIGNMENTS))
        .collect();

    let partials: Vec<_> = if workers == 1 {
        vec![index.search(0..ALICE_ASSIGNMENTS)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .into_iter()
                .map(|r| {
                    let index = &index;
                    scope.spawn(move || index.search(r))
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        })
    };

    // chunks are in code order, so a strict comparison keeps the smallest code
    let (value, code, bob) = partials
        .into_iter()
        .flatten()
        .fold(None, |acc: Option<(u32, u32, [u8; K])>, cand| match acc {
            Some(a) if a.0 >= cand.0 => Some(a),
            _ => Some(cand),
        })
        .expect("at least one Alice assignment");
    Ok(ClassicalBound {
        value,
        alice: decode(code),
        bob,
    })
}

/// Number of terms of `set` satisfied by the deterministic assignment `(a, b)`.
pub fn count_satisfied(group: &GroupTable, set: &OrbitSet, alice: &[u8; K], bob: &[u8; K]) -> u32 {
    set.terms(group)
        .iter()
        .filter(|t| {
            alice[t.alice.alpha as usize - 1] == t.alice.l
                && bob[t.bob.alpha as usize - 1] == t.bob.l
        })
        .count() as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{CosetCoord, Permutation};

    fn pair(a: (u8, u8), b: (u8, u8)) -> OrbitSet {
        OrbitSet::from_labels(&[
            CosetCoord::new(a.0, a.1).unwrap(),
            CosetCoord::new(b.0, b.1).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn decode_round_trip() {
        assert_eq!(decode(0), [0; 8]);
        assert_eq!(decode(1), [1, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(decode(6560), [2; 8]);
    }

    #[test]
    fn single_orbits_have_bound_eight() {
        let group = GroupTable::s4();
        for g in group.elements() {
            let set = OrbitSet::new(vec![*g]).unwrap();
            assert_eq!(classical_bound(group, &set).unwrap().value, 8, "{g}");
        }
    }

    #[test]
    fn listed_pairs() {
        let group = GroupTable::s4();
        assert_eq!(
            classical_bound(group, &pair((2, 2), (7, 2))).unwrap().value,
            14
        );
        assert_eq!(
            classical_bound(group, &pair((4, 0), (7, 2))).unwrap().value,
            12
        );
        assert_eq!(
            classical_bound(group, &pair((6, 2), (8, 2))).unwrap().value,
            16
        );
    }

    #[test]
    fn witness_attains_the_bound() {
        let group = GroupTable::s4();
        for set in [
            pair((2, 2), (7, 2)),
            pair((3, 1), (5, 0)),
            pair((4, 2), (7, 0)),
        ] {
            let b = classical_bound(group, &set).unwrap();
            assert_eq!(count_satisfied(group, &set, &b.alice, &b.bob), b.value);
        }
    }

    #[test]
    fn h_coset_pairs_have_bound_eight() {
        let group = GroupTable::s4();
        let g = group.generator();
        for gt in group.elements() {
            for r in 1..3 {
                let set = OrbitSet::new(vec![*gt, gt.compose(&g.pow(r))]).unwrap();
                assert_eq!(classical_bound(group, &set).unwrap().value, 8);
            }
        }
    }

    #[test]
    fn worker_count_does_not_change_result() {
        let group = GroupTable::s4();
        let set = pair((2, 0), (3, 2));
        let one = classical_bound(group, &set).unwrap();
        for w in [2, 3, 7, 16] {
            assert_eq!(classical_bound_with_workers(group, &set, w).unwrap(), one);
        }
    }

    #[test]
    fn rejects_unsupported_sizes() {
        let group = GroupTable::s4();
        let set = OrbitSet::new(Permutation::all()[..3].to_vec()).unwrap();
        assert_eq!(
            classical_bound(group, &set),
            Err(Error::UnsupportedOrbitCount(3))
        );
    }
}
