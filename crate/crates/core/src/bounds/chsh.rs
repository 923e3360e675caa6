//! CHSH baseline: `|⟨A₀B₀⟩ + ⟨A₀B₁⟩ + ⟨A₁B₀⟩ − ⟨A₁B₁⟩|` for dichotomic
//! observables, classically and for the singlet state.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use rand::Rng;

/// Joint distribution `p(A₀=a₀, A₁=a₁; B₀=b₀, B₁=b₁)` indexed by
/// [`config_index`].
pub type JointDistribution = [f64; 16];

/// Measurement angles `(a₀, a₁, b₀, b₁)` attaining `2√2`.
pub const CANONICAL_ANGLES: [f64; 4] = [0.0, FRAC_PI_2, FRAC_PI_4, 7.0 * FRAC_PI_4];

fn sign(bit: usize) -> i32 {
    if bit == 0 {
        1
    } else {
        -1
    }
}

/// Outcomes `(a₀, a₁, b₀, b₁) ∈ {±1}⁴` of configuration `i`; bit `k` set
/// means the `k`-th outcome is −1.
pub fn config(i: usize) -> [i32; 4] {
    [0, 1, 2, 3].map(|k| sign((i >> k) & 1))
}

pub fn config_index(outcomes: [i32; 4]) -> usize {
    outcomes
        .iter()
        .enumerate()
        .map(|(k, &o)| usize::from(o < 0) << k)
        .sum()
}

/// Value of the CHSH expression for a deterministic assignment.
pub fn chsh_value(a: [i32; 2], b: [i32; 2]) -> i32 {
    a[0] * b[0] + a[0] * b[1] + a[1] * b[0] - a[1] * b[1]
}

/// Maximum of `|chsh_value|` over the 16 deterministic assignments.
pub fn chsh_classical_bound() -> f64 {
    (0..16)
        .map(|i| {
            let [a0, a1, b0, b1] = config(i);
            chsh_value([a0, a1], [b0, b1]).abs()
        })
        .max()
        .unwrap() as f64
}

/// `⟨A_α B_β⟩ = p(1,1) + p(−1,−1) − p(1,−1) − p(−1,1)` from marginals.
pub fn correlation(p: &JointDistribution, alpha: usize, beta: usize) -> f64 {
    let mut marg = [[0.0; 2]; 2];
    for (i, &pi) in p.iter().enumerate() {
        let o = config(i);
        let a = usize::from(o[alpha] < 0);
        let b = usize::from(o[2 + beta] < 0);
        marg[a][b] += pi;
    }
    marg[0][0] + marg[1][1] - marg[0][1] - marg[1][0]
}

/// CHSH expression from the correlators.
pub fn chsh_expression(p: &JointDistribution) -> f64 {
    correlation(p, 0, 0) + correlation(p, 0, 1) + correlation(p, 1, 0) - correlation(p, 1, 1)
}

/// `2(Σ′ − Σ″)`: Σ′ collects configurations with `b₀ = b₁ = a₀` or
/// `b₀ ≠ b₁, a₁ = b₀`, Σ″ the rest.
pub fn chsh_disjoint_form(p: &JointDistribution) -> f64 {
    let (mut plus, mut minus) = (0.0, 0.0);
    for (i, &pi) in p.iter().enumerate() {
        let [a0, a1, b0, b1] = config(i);
        let positive = if b0 == b1 { a0 == b0 } else { a1 == b0 };
        if positive {
            plus += pi;
        } else {
            minus += pi;
        }
    }
    2.0 * (plus - minus)
}

/// A random point of the probability simplex over the 16 configurations.
pub fn random_joint_distribution<R: Rng>(rng: &mut R) -> JointDistribution {
    // exponential spacings give the uniform distribution on the simplex
    let mut p = [0.0; 16];
    for x in p.iter_mut() {
        *x = -(1.0 - rng.gen::<f64>()).ln();
    }
    let total: f64 = p.iter().sum();
    p.map(|x| x / total)
}

/// Largest `|chsh_expression − chsh_disjoint_form|` over `samples` random
/// distributions.
pub fn disjoint_form_defect<R: Rng>(rng: &mut R, samples: usize) -> f64 {
    (0..samples)
        .map(|_| {
            let p = random_joint_distribution(rng);
            (chsh_expression(&p) - chsh_disjoint_form(&p)).abs()
        })
        .fold(0.0, f64::max)
}

/// `E(θ_A, θ_B) = −cos(θ_A − θ_B)` for the singlet.
pub fn singlet_correlation(theta_a: f64, theta_b: f64) -> f64 {
    -(theta_a - theta_b).cos()
}

/// `|E(a₀,b₀) + E(a₀,b₁) + E(a₁,b₀) − E(a₁,b₁)|` for angles `(a₀, a₁, b₀, b₁)`.
pub fn chsh_quantum_value(angles: [f64; 4]) -> f64 {
    let [a0, a1, b0, b1] = angles;
    let e = singlet_correlation;
    (e(a0, b0) + e(a0, b1) + e(a1, b0) - e(a1, b1)).abs()
}

/// Maximum of [`chsh_quantum_value`] over the grid `(2π/n)·ℤ⁴`.
///
/// The value depends only on angle differences, so `a₀` is pinned to 0
/// without loss; returns the value and the first maximizing angles.
pub fn chsh_grid_maximum(n: usize) -> (f64, [f64; 4]) {
    let step = 2.0 * PI / n as f64;
    // cos of every grid difference
    let cos: Vec<f64> = (0..n).map(|k| -(k as f64 * step).cos()).collect();
    let e = |i: usize, j: usize| cos[(i + n - j) % n];
    let mut best = (f64::NEG_INFINITY, [0usize; 4]);
    for a1 in 0..n {
        for b0 in 0..n {
            for b1 in 0..n {
                let v = (e(0, b0) + e(0, b1) + e(a1, b0) - e(a1, b1)).abs();
                if v > best.0 {
                    best = (v, [0, a1, b0, b1]);
                }
            }
        }
    }
    (best.0, best.1.map(|k| k as f64 * step))
}
