//! Independent reference implementations used to cross-check the library.
//! Nothing here calls into the crate's group or bound code.

#![allow(dead_code)]

pub type P = [u8; 4];

/// `((α, l), (α′, l′))`: Alice and Bob states of one orbit element.
pub type Term = ((u8, u8), (u8, u8));

pub const IDENTITY: P = [1, 2, 3, 4];
pub const GENERATOR: P = [2, 3, 1, 4];
pub const REPS: [P; 8] = [
    [1, 2, 3, 4],
    [2, 1, 3, 4],
    [4, 2, 3, 1],
    [1, 4, 3, 2],
    [1, 3, 4, 2],
    [1, 4, 2, 3],
    [2, 3, 4, 1],
    [4, 1, 3, 2],
];

/// `p` first, then `q`.
pub fn compose(p: P, q: P) -> P {
    p.map(|x| q[x as usize - 1])
}

pub fn inverse(p: P) -> P {
    let mut out = [0; 4];
    for (i, &x) in p.iter().enumerate() {
        out[x as usize - 1] = i as u8 + 1;
    }
    out
}

pub fn power(p: P, n: u32) -> P {
    (0..n).fold(IDENTITY, |acc, _| compose(acc, p))
}

pub fn order(p: P) -> u32 {
    (1..=24).find(|&n| power(p, n) == IDENTITY).unwrap()
}

pub fn all_perms() -> Vec<P> {
    let mut out = Vec::new();
    for a in 1..=4u8 {
        for b in 1..=4u8 {
            for c in 1..=4u8 {
                for d in 1..=4u8 {
                    let p = [a, b, c, d];
                    let mut s = p;
                    s.sort();
                    if s == IDENTITY {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// `(α, l)` with `x = g_α · g^l`, found by search.
pub fn factor(x: P) -> (u8, u8) {
    for (a, r) in REPS.iter().enumerate() {
        for l in 0..3 {
            if compose(*r, power(GENERATOR, l)) == x {
                return (a as u8 + 1, l as u8);
            }
        }
    }
    panic!("no coset factorization for {x:?}");
}

pub fn element(c: (u8, u8)) -> P {
    compose(REPS[c.0 as usize - 1], power(GENERATOR, c.1 as u32))
}

pub fn in_subgroup(p: P) -> bool {
    (0..3).any(|l| power(GENERATOR, l) == p)
}

/// Terms `(A_α = l, B_α′ = l′)` of the orbits of each `g̃`.
pub fn terms(gtildes: &[P]) -> Vec<Term> {
    let mut out = Vec::new();
    for &g in gtildes {
        for x in all_perms() {
            out.push((factor(x), factor(compose(x, g))));
        }
    }
    out
}

fn digits(code: usize) -> [u8; 8] {
    let mut d = [0u8; 8];
    let mut c = code;
    for x in d.iter_mut() {
        *x = (c % 3) as u8;
        c /= 3;
    }
    d
}

/// Maximum over all `3^8 × 3^8` deterministic assignments of the number of
/// satisfied terms.
pub fn naive_classical_bound(terms: &[Term]) -> u32 {
    assert!(terms.len() <= 64);
    let masks = |side: usize| -> Vec<u64> {
        (0..6561)
            .map(|code| {
                let a = digits(code);
                let mut m = 0u64;
                for (i, t) in terms.iter().enumerate() {
                    let (alpha, l) = if side == 0 { t.0 } else { t.1 };
                    if a[alpha as usize - 1] == l {
                        m |= 1 << i;
                    }
                }
                m
            })
            .collect()
    };
    let (alice, bob) = (masks(0), masks(1));
    let mut best = 0;
    for a in &alice {
        for b in &bob {
            best = best.max((a & b).count_ones());
        }
    }
    best
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
#[allow(clippy::needless_range_loop)]
pub fn symmetric_eigenvalues<const N: usize>(mut a: [[f64; N]; N]) -> [f64; N] {
    for _ in 0..100 {
        let off: f64 = (0..N)
            .flat_map(|i| (0..N).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..N {
            for q in p + 1..N {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (akp, akq) = (row[p], row[q]);
                    row[p] = c * akp - s * akq;
                    row[q] = s * akp + c * akq;
                }
                for k in 0..N {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev = [0.0; N];
    for i in 0..N {
        ev[i] = a[i][i];
    }
    ev.sort_by(|x, y| x.partial_cmp(y).unwrap());
    ev
}
