//! The standard three-dimensional orthogonal representation `D` of S4 and
//! the regular orbit `v_{αl} = D(g_α) D(g)ˡ v` of `v = (1,1,1)/√3`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Mat3, Vec3};
use crate::permgroup::{CosetCoord, GroupTable, Permutation, GROUP_ORDER};
use crate::scalar::{lit, surd, Real};

/// Transpositions `(ij)` in the order used to grow words.
pub const TRANSPOSITIONS: [(u8, u8); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

/// `D(ij)` in the orthonormal basis of the standard representation.
pub fn transposition_matrix<T: Real>(i: u8, j: u8) -> Result<Mat3<T>> {
    let (z, one, half) = (T::zero(), T::one(), lit::<T>(0.5));
    let third = lit::<T>(1.0 / 3.0);
    let r2_3 = surd::<T>(2.0) / lit(3.0);
    let r6_3 = surd::<T>(6.0) / lit(3.0);
    let r3_2 = surd::<T>(3.0) / lit(2.0);
    let r3_6 = surd::<T>(3.0) / lit(6.0);
    let r8_3 = surd::<T>(8.0) / lit(3.0);
    let five_6 = lit::<T>(5.0 / 6.0);
    let m = match (i, j) {
        (1, 2) => [[one, z, z], [z, one, z], [z, z, -one]],
        (1, 3) => [[one, z, z], [z, -half, -r3_2], [z, -r3_2, half]],
        (1, 4) => [
            [-third, -r2_3, -r6_3],
            [-r2_3, five_6, -r3_6],
            [-r6_3, -r3_6, half],
        ],
        (2, 3) => [[one, z, z], [z, -half, r3_2], [z, r3_2, half]],
        (2, 4) => [
            [-third, -r2_3, r6_3],
            [-r2_3, five_6, r3_6],
            [r6_3, r3_6, half],
        ],
        (3, 4) => [[-third, r8_3, z], [r8_3, third, z], [z, z, one]],
        _ => return Err(Error::InvalidTransposition(i, j)),
    };
    Ok(Mat3(m))
}

/// Order in which a transposition word `p = t₁·t₂·…·t_k` is turned into a
/// matrix product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WordOrder {
    /// `D(p) = D(t₁) D(t₂) ⋯ D(t_k)`
    Forward,
    /// `D(p) = D(t_k) ⋯ D(t₁)`
    Reverse,
}

/// `D(p)` for every element of S4.
#[derive(Clone, Debug)]
pub struct Representation<T> {
    matrices: BTreeMap<Permutation, Mat3<T>>,
    words: BTreeMap<Permutation, Vec<(u8, u8)>>,
    word_order: WordOrder,
    homomorphism_defect: T,
}

impl<T: Real> Representation<T> {
    /// Generates all 24 matrices from transposition words and keeps the word
    /// order under which `D(p·q) = D(p) D(q)` holds.
    pub fn build() -> Result<Self> {
        let words = transposition_words();
        let mut worst = T::zero();
        for order in [WordOrder::Forward, WordOrder::Reverse] {
            let matrices: BTreeMap<_, _> = words
                .iter()
                .map(|(p, w)| Ok((*p, word_matrix::<T>(w, order)?)))
                .collect::<Result<_>>()?;
            let defect = homomorphism_defect(&matrices);
            if defect < T::epsilon().sqrt() {
                return Ok(Representation {
                    matrices,
                    words,
                    word_order: order,
                    homomorphism_defect: defect,
                });
            }
            worst = worst.max(defect);
        }
        Err(Error::NotAHomomorphism(worst.to_f64().unwrap_or(f64::NAN)))
    }

    /// `D(p)`.
    pub fn matrix(&self, p: &Permutation) -> &Mat3<T> {
        &self.matrices[p]
    }

    /// Transposition word used to generate `D(p)`.
    pub fn word(&self, p: &Permutation) -> &[(u8, u8)] {
        &self.words[p]
    }

    pub fn word_order(&self) -> WordOrder {
        self.word_order
    }

    /// `max_{p,q} ‖D(p·q) − D(p)D(q)‖_max` over all 576 pairs.
    pub fn homomorphism_defect(&self) -> T {
        self.homomorphism_defect
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &Mat3<T>)> {
        self.matrices.iter()
    }
}

/// Shortest transposition words, found breadth-first from the identity.
fn transposition_words() -> BTreeMap<Permutation, Vec<(u8, u8)>> {
    let mut words = BTreeMap::new();
    words.insert(Permutation::identity(), Vec::new());
    let mut frontier = vec![Permutation::identity()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            for &(i, j) in &TRANSPOSITIONS {
                let q = p.compose(&Permutation::transposition(i, j).unwrap());
                if !words.contains_key(&q) {
                    let mut w = words[p].clone();
                    w.push((i, j));
                    words.insert(q, w);
                    next.push(q);
                }
            }
        }
        frontier = next;
    }
    words
}

fn word_matrix<T: Real>(word: &[(u8, u8)], order: WordOrder) -> Result<Mat3<T>> {
    let factors: Vec<Mat3<T>> = word
        .iter()
        .map(|&(i, j)| transposition_matrix(i, j))
        .collect::<Result<_>>()?;
    let product = |acc: Mat3<T>, m: &Mat3<T>| acc.mul(m);
    Ok(match order {
        WordOrder::Forward => factors.iter().fold(Mat3::identity(), product),
        WordOrder::Reverse => factors.iter().rev().fold(Mat3::identity(), product),
    })
}

fn homomorphism_defect<T: Real>(matrices: &BTreeMap<Permutation, Mat3<T>>) -> T {
    let mut worst = T::zero();
    for (p, dp) in matrices {
        for (q, dq) in matrices {
            let lhs = &matrices[&p.compose(q)];
            worst = worst.max(lhs.max_abs_diff(&dp.mul(dq)));
        }
    }
    worst
}

/// `v = (1,1,1)/√3`.
pub fn base_vector<T: Real>() -> Vec3<T> {
    let c = T::one() / surd::<T>(3.0);
    Vec3([c, c, c])
}

/// The 24 orbit vectors `v_{αl}`.
#[derive(Clone, Debug)]
pub struct OrbitBasis<T> {
    vectors: [Vec3<T>; GROUP_ORDER],
}

impl<T: Real> OrbitBasis<T> {
    /// `v_{αl} = D(g_α) D(g)ˡ v` for all coordinates.
    pub fn build(group: &GroupTable, rep: &Representation<T>) -> Self {
        let v = base_vector::<T>();
        let dg = rep.matrix(&group.generator());
        let vectors = std::array::from_fn(|i| {
            let c = CosetCoord::from_index(i);
            let mut w = v;
            for _ in 0..c.l {
                w = dg.apply(&w);
            }
            rep.matrix(&group.coset_rep(c.alpha)).apply(&w)
        });
        OrbitBasis { vectors }
    }

    pub fn vector(&self, c: CosetCoord) -> &Vec3<T> {
        &self.vectors[c.index()]
    }

    pub fn vectors(&self) -> &[Vec3<T>; GROUP_ORDER] {
        &self.vectors
    }

    /// Worst `|(v_{αl}, v_{αl′}) − δ_{ll′}|` within a fixed α.
    pub fn block_orthonormality_defect(&self) -> T {
        let mut worst = T::zero();
        for alpha in 1..=8u8 {
            for l in 0..3u8 {
                for m in 0..3u8 {
                    let a = self.vector(CosetCoord { alpha, l });
                    let b = self.vector(CosetCoord { alpha, l: m });
                    let expected = if l == m { T::one() } else { T::zero() };
                    worst = worst.max((a.dot(b) - expected).abs());
                }
            }
        }
        worst
    }

    /// Smallest max-norm distance between two distinct orbit vectors.
    pub fn min_separation(&self) -> T {
        let mut best = T::infinity();
        for i in 0..GROUP_ORDER {
            for j in i + 1..GROUP_ORDER {
                best = best.min(self.vectors[i].max_abs_diff(&self.vectors[j]));
            }
        }
        best
    }
}
