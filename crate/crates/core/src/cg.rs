//! Clebsch-Gordan decomposition `D ⊗ D = D ⊕ D̃ ⊕ D₂ ⊕ D₀` and the
//! per-irrep eigenvalues of the orbit operator
//! `X(g̃) = Σ_{g′} P(D(g′)v ⊗ D(g′)D(g̃)v)`.
//!
//! Because each irrep occurs once, `X(g̃)` is the scalar
//! `x_s = (|G|/d_s) ‖(v ⊗ D(g̃)v)_s‖²` on the block of irrep `s`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::{Mat9, Vec3};
use crate::permgroup::{ConjugacyClass, GroupTable, Permutation, GROUP_ORDER};
use crate::rep3::{base_vector, Representation};
use crate::scalar::{lit, surd, Real};

/// `u ⊗ w` with flat index `3i + j` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Tensor9<T>(pub [T; 9]);

impl<T: Real> Tensor9<T> {
    pub fn norm(&self) -> T {
        self.0.iter().map(|&x| x * x).sum::<T>().sqrt()
    }

    pub fn dot(&self, other: &Self) -> T {
        (0..9).map(|i| self.0[i] * other.0[i]).sum()
    }
}

pub fn tensor<T: Real>(u: &Vec3<T>, w: &Vec3<T>) -> Tensor9<T> {
    Tensor9(std::array::from_fn(|k| u.0[k / 3] * w.0[k % 3]))
}

/// Irreducible components of `D ⊗ D`, in the row-block order of [`CgMatrix`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Irrep {
    D,
    #[serde(rename = "Dtilde")]
    DTilde,
    D2,
    D0,
}

impl Irrep {
    pub const ALL: [Irrep; 4] = [Irrep::D, Irrep::DTilde, Irrep::D2, Irrep::D0];

    /// Preference order when two irreps attain the same eigenvalue.
    pub const TIE_ORDER: [Irrep; 4] = [Irrep::D0, Irrep::D, Irrep::DTilde, Irrep::D2];

    pub fn dim(self) -> usize {
        match self {
            Irrep::D | Irrep::DTilde => 3,
            Irrep::D2 => 2,
            Irrep::D0 => 1,
        }
    }

    /// Rows of the CG matrix spanning this irrep.
    pub fn rows(self) -> std::ops::Range<usize> {
        match self {
            Irrep::D => 0..3,
            Irrep::DTilde => 3..6,
            Irrep::D2 => 6..8,
            Irrep::D0 => 8..9,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Irrep::D => "D",
            Irrep::DTilde => "Dtilde",
            Irrep::D2 => "D2",
            Irrep::D0 => "D0",
        }
    }
}

impl fmt::Display for Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Orthogonal change of basis from product vectors to the block basis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CgMatrix<T>(pub Mat9<T>);

impl<T: Real> CgMatrix<T> {
    /// The Clebsch-Gordan matrix of `D ⊗ D` for the standard basis.
    pub fn standard() -> Self {
        let z = T::zero();
        let r2 = T::one() / surd::<T>(2.0);
        let r3 = T::one() / surd::<T>(3.0);
        let r6 = T::one() / surd::<T>(6.0);
        let r23 = surd::<T>(2.0 / 3.0);
        CgMatrix(Mat9([
            [r23, z, z, z, -r6, z, z, z, -r6],
            [z, -r6, z, -r6, r3, z, z, z, -r3],
            [z, z, -r6, z, z, -r3, -r6, -r3, z],
            [z, r2, z, -r2, z, z, z, z, z],
            [z, z, r2, z, z, z, -r2, z, z],
            [z, z, z, z, z, r2, z, -r2, z],
            [z, r3, z, r3, r6, z, z, z, -r6],
            [z, z, r3, z, z, -r6, r3, -r6, z],
            [r3, z, z, z, r3, z, z, z, r3],
        ]))
    }

    pub fn row(&self, i: usize) -> Tensor9<T> {
        Tensor9(self.0.row(i))
    }

    pub fn orthogonality_defect(&self) -> T {
        self.0.orthogonality_defect()
    }

    /// Components of `t` in the row block of irrep `s`.
    pub fn project(&self, t: &Tensor9<T>, s: Irrep) -> Vec<T> {
        s.rows().map(|i| self.row(i).dot(t)).collect()
    }
}

/// The same projections as [`CgMatrix::project`] for `u ⊗ w`, written as
/// bilinear forms. Components follow the row order of the CG matrix.
pub fn closed_form_projection<T: Real>(u: &Vec3<T>, w: &Vec3<T>, s: Irrep) -> Vec<T> {
    let (a, b) = (&u.0, &w.0);
    let r2 = T::one() / surd::<T>(2.0);
    let r3 = T::one() / surd::<T>(3.0);
    let r6 = T::one() / surd::<T>(6.0);
    let sym = |i: usize, j: usize| a[i] * b[j] + a[j] * b[i];
    match s {
        Irrep::D0 => vec![r3 * u.dot(w)],
        Irrep::DTilde => {
            let c = u.cross(w);
            vec![r2 * c[2], -r2 * c[1], r2 * c[0]]
        }
        Irrep::D2 => vec![
            r3 * sym(0, 1) + r6 * (a[1] * b[1] - a[2] * b[2]),
            r3 * sym(0, 2) - r6 * sym(1, 2),
        ],
        Irrep::D => vec![
            surd::<T>(2.0 / 3.0) * a[0] * b[0] - r6 * (a[1] * b[1] + a[2] * b[2]),
            r3 * (a[1] * b[1] - a[2] * b[2]) - r6 * sym(0, 1),
            -r3 * sym(1, 2) - r6 * sym(0, 2),
        ],
    }
}

/// Eigenvalues of `X(g̃)` on each irrep block.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IrrepSpectrum<T> {
    pub gtilde: Permutation,
    /// Indexed by [`Irrep::index`].
    pub x: [T; 4],
}

impl<T: Real> IrrepSpectrum<T> {
    pub fn get(&self, s: Irrep) -> T {
        self.x[s.index()]
    }

    /// Largest eigenvalue and the irrep attaining it.
    pub fn max(&self) -> (T, Irrep) {
        argmax(&self.x)
    }

    /// `Σ_s d_s x_s`, equal to `|G|` because `X` is a sum of 24 unit projectors.
    pub fn weighted_trace(&self) -> T {
        Irrep::ALL
            .iter()
            .map(|&s| lit::<T>(s.dim() as f64) * self.get(s))
            .sum()
    }
}

/// Maximum over irreps with ties resolved by [`Irrep::TIE_ORDER`].
pub fn argmax<T: Real>(x: &[T; 4]) -> (T, Irrep) {
    let mut best = (x[Irrep::D0.index()], Irrep::D0);
    for s in Irrep::TIE_ORDER {
        if x[s.index()] > best.0 {
            best = (x[s.index()], s);
        }
    }
    best
}

/// `x_s(g̃) = (24/d_s) Σ_{rows of s} (row · (v ⊗ D(g̃)v))²`.
pub fn x_spectrum<T: Real>(
    rep: &Representation<T>,
    cg: &CgMatrix<T>,
    gtilde: &Permutation,
) -> IrrepSpectrum<T> {
    let v = base_vector::<T>();
    let t = tensor(&v, &rep.matrix(gtilde).apply(&v));
    let order = lit::<T>(GROUP_ORDER as f64);
    let x = Irrep::ALL.map(|s| {
        let sq: T = cg.project(&t, s).iter().map(|&c| c * c).sum();
        order / lit(s.dim() as f64) * sq
    });
    IrrepSpectrum { gtilde: *gtilde, x }
}

/// `X(g̃)` assembled as a sum of 24 rank-1 projectors.
pub fn x_operator<T: Real>(rep: &Representation<T>, gtilde: &Permutation) -> Mat9<T> {
    let v = base_vector::<T>();
    let dg = rep.matrix(gtilde);
    let mut x = Mat9::zeros();
    for (_, d) in rep.iter() {
        let t = tensor(&d.apply(&v), &d.apply(&dg.apply(&v)));
        for i in 0..9 {
            for j in 0..9 {
                x.0[i][j] = x.0[i][j] + t.0[i] * t.0[j];
            }
        }
    }
    x
}

/// One row of the eigenvalue table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRecord {
    pub gtilde: Permutation,
    pub alpha: u8,
    pub l: u8,
    pub class: ConjugacyClass,
    #[serde(rename = "x_D")]
    pub x_d: f64,
    #[serde(rename = "x_Dtilde")]
    pub x_dtilde: f64,
    #[serde(rename = "x_D2")]
    pub x_d2: f64,
    #[serde(rename = "x_D0")]
    pub x_d0: f64,
    pub x_max: f64,
}

impl SpectrumRecord {
    pub fn new<T: Real>(group: &GroupTable, spectrum: &IrrepSpectrum<T>) -> Self {
        let c = group.coset_factorize(&spectrum.gtilde);
        let f = |s: Irrep| spectrum.get(s).to_f64().unwrap_or(f64::NAN);
        SpectrumRecord {
            gtilde: spectrum.gtilde,
            alpha: c.alpha,
            l: c.l,
            class: group.class_of(&spectrum.gtilde),
            x_d: f(Irrep::D),
            x_dtilde: f(Irrep::DTilde),
            x_d2: f(Irrep::D2),
            x_d0: f(Irrep::D0),
            x_max: spectrum.max().0.to_f64().unwrap_or(f64::NAN),
        }
    }

    /// `[x_D, x_D̃, x_D₂, x_D₀, x_max]`
    pub fn values(&self) -> [f64; 5] {
        [self.x_d, self.x_dtilde, self.x_d2, self.x_d0, self.x_max]
    }
}
