//! Quantum (Tsirelson-like) and classical (Bell) bounds on orbit probability
//! sums, the cycle construction for two orbits, and the CHSH baseline.

mod chsh;
mod classical;
mod cycles;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use chsh::{
    chsh_classical_bound, chsh_disjoint_form, chsh_expression, chsh_grid_maximum,
    chsh_quantum_value, chsh_value, config, config_index, correlation, disjoint_form_defect,
    random_joint_distribution, singlet_correlation, JointDistribution, CANONICAL_ANGLES,
};
pub use classical::{
    classical_bound, classical_bound_with_workers, count_satisfied, ClassicalBound,
};
pub use cycles::{
    cycle_decomposition, cycle_lower_bound, CycleBound, CycleDecomposition, CycleVertex,
};

use crate::cg::{argmax, tensor, Irrep, Tensor9};
use crate::error::{Error, Result};
use crate::model::Model;
use crate::permgroup::{CosetCoord, GroupTable, Permutation, NUM_COSETS};
use crate::scalar::{lit, Real};

/// Violation threshold on `quantum − classical`.
pub const VIOLATION_TOLERANCE: f64 = 1e-9;

/// A set of distinct orbits `O(g̃, v)`, each identified by `g̃`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSet {
    pub gtildes: Vec<Permutation>,
    pub labels: Vec<CosetCoord>,
}

impl OrbitSet {
    pub fn new(gtildes: Vec<Permutation>) -> Result<Self> {
        if gtildes.is_empty() {
            return Err(Error::EmptyOrbitSet);
        }
        for (i, g) in gtildes.iter().enumerate() {
            if gtildes[..i].contains(g) {
                let c = GroupTable::s4().coset_factorize(g);
                return Err(Error::DuplicateOrbit(c.to_string()));
            }
        }
        let group = GroupTable::s4();
        let labels = gtildes.iter().map(|g| group.coset_factorize(g)).collect();
        Ok(OrbitSet { gtildes, labels })
    }

    pub fn from_labels(labels: &[CosetCoord]) -> Result<Self> {
        let group = GroupTable::s4();
        Self::new(labels.iter().map(|&c| group.element(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.gtildes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gtildes.is_empty()
    }

    /// Every probability term `(α, l; (α, l)_{g̃ₐ})`, orbit by orbit.
    pub fn terms(&self, group: &GroupTable) -> Vec<OrbitTerm> {
        self.gtildes
            .iter()
            .enumerate()
            .flat_map(|(a, g)| {
                CosetCoord::all().map(move |c| OrbitTerm {
                    orbit: a as u8 + 1,
                    alice: c,
                    bob: group.orbit_image(c, g),
                })
            })
            .collect()
    }
}

impl fmt::Display for OrbitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// One term `v_{αl} ⊗ v_{α′l′}` of an orbit: Alice measures `A_α` and gets
/// outcome `l`, Bob measures `B_{α′}` and gets `l′`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitTerm {
    /// 1-based position of the orbit in its set.
    pub orbit: u8,
    pub alice: CosetCoord,
    pub bob: CosetCoord,
}

/// Quantum bound of an orbit set: the per-irrep eigenvalue sums of
/// `Σₐ X(g̃ₐ)`, their maximum and the irrep attaining it.
pub fn quantum_bound<T: Real>(
    model: &Model<T>,
    set: &OrbitSet,
) -> Result<(T, Irrep, BTreeMap<Irrep, T>)> {
    if set.is_empty() {
        return Err(Error::EmptyOrbitSet);
    }
    let mut sums = [T::zero(); 4];
    for g in &set.gtildes {
        let x = model.spectrum(g).x;
        for (s, xi) in sums.iter_mut().zip(x) {
            *s = *s + xi;
        }
    }
    let (max, arg) = argmax(&sums);
    let map = Irrep::ALL.iter().map(|&s| (s, sums[s.index()])).collect();
    Ok((max, arg, map))
}

/// `S = Σₐ Σ_{(α,l)} |(v_{αl} ⊗ v_{(α,l)_{g̃ₐ}}, w)|²` for a unit state `w`.
pub fn sum_probabilities<T: Real>(model: &Model<T>, w: &Tensor9<T>, set: &OrbitSet) -> Result<T> {
    let norm = w.norm();
    let tol = lit::<T>(1e-9).max(T::epsilon() * lit(100.0));
    if (norm - T::one()).abs() > tol {
        return Err(Error::NotNormalized(norm.to_f64().unwrap_or(f64::NAN)));
    }
    let orbit = model.orbit();
    Ok(set
        .terms(model.group())
        .iter()
        .map(|t| {
            let amp = tensor(orbit.vector(t.alice), orbit.vector(t.bob)).dot(w);
            amp * amp
        })
        .sum())
}

/// Classical and quantum bounds for one orbit set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport<T> {
    pub orbit_set: OrbitSet,
    pub per_irrep_sums: BTreeMap<Irrep, T>,
    pub quantum_bound: T,
    pub quantum_arg: Irrep,
    pub classical_bound: u32,
    pub cycle_lower_bound: Option<u32>,
    pub violation: bool,
    pub violation_ratio: T,
}

impl<T: Real> BoundReport<T> {
    /// Requires one or two orbits; the cycle bound is filled in for pairs.
    pub fn compute(model: &Model<T>, set: &OrbitSet) -> Result<Self> {
        let (quantum, arg, sums) = quantum_bound(model, set)?;
        let classical = classical_bound(model.group(), set)?.value;
        let cycle = match set.gtildes.as_slice() {
            [g1, g2] => Some(cycle_lower_bound(model.group(), g1, g2)?.value),
            _ => None,
        };
        let b = lit::<T>(classical as f64);
        Ok(BoundReport {
            orbit_set: set.clone(),
            per_irrep_sums: sums,
            quantum_bound: quantum,
            quantum_arg: arg,
            classical_bound: classical,
            cycle_lower_bound: cycle,
            violation: quantum > b + lit(VIOLATION_TOLERANCE),
            violation_ratio: (quantum - b) / b,
        })
    }

    /// Checks the structural invariants of the report.
    pub fn is_consistent(&self) -> bool {
        let k = NUM_COSETS as u32;
        let n = self.orbit_set.len() as u32;
        let max_sum = self
            .per_irrep_sums
            .values()
            .fold(T::neg_infinity(), |a, &b| a.max(b));
        max_sum == self.quantum_bound
            && (k..=k * n).contains(&self.classical_bound)
            && self
                .cycle_lower_bound
                .is_none_or(|c| c <= self.classical_bound)
    }
}
