//! Self-checks of the model: group structure, representation, CG matrix,
//! spectra and agreement with the published eigenvalue table.

use std::fmt::Write;

use serde::Serialize;

use crate::cg::{closed_form_projection, tensor, x_operator, Irrep, SpectrumRecord};
use crate::model::Model;
use crate::permgroup::{
    ConjugacyClass, CosetCoord, GroupTable, Permutation, COSET_REPRESENTATIVES,
};
use crate::reference::{EIGENVALUE_TABLE, TABLE_TOLERANCE};
use crate::rep3::base_vector;

/// Algebraic identities built from exact surds.
pub const EXACT_TOLERANCE: f64 = 1e-12;
/// Identities derived through chains of products.
pub const PRODUCT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    fn below(name: &str, value: f64, tol: f64) -> Self {
        Check::new(name, value < tol, format!("{value:.3e} < {tol:.0e}"))
    }
}

/// Computed spectra in the row order of the published table.
pub fn eigenvalue_table(model: &Model<f64>) -> Vec<SpectrumRecord> {
    EIGENVALUE_TABLE
        .iter()
        .map(|row| {
            let g: Permutation = row.gtilde.parse().expect("valid table entry");
            SpectrumRecord::new(model.group(), model.spectrum(&g))
        })
        .collect()
}

/// Runs every check; the model passes when all of them do.
pub fn run_checks(model: &Model<f64>) -> Vec<Check> {
    let mut out = Vec::new();
    group_checks(model.group(), &mut out);
    representation_checks(model, &mut out);
    cg_checks(model, &mut out);
    table_checks(model, &mut out);
    out
}

fn group_checks(group: &GroupTable, out: &mut Vec<Check>) {
    let els = group.elements();
    out.push(Check::new(
        "group order",
        els.len() == 24,
        format!("{}", els.len()),
    ));

    let mut assoc = true;
    for p in els {
        for q in els {
            let pq = p.compose(q);
            for r in els {
                assoc &= pq.compose(r) == p.compose(&q.compose(r));
            }
        }
    }
    out.push(Check::new("associativity (24^3 triples)", assoc, ""));

    let reps_ok = COSET_REPRESENTATIVES
        .iter()
        .enumerate()
        .all(|(i, r)| group.coset_rep(i as u8 + 1).images() == r);
    out.push(Check::new("coset representatives", reps_ok, ""));

    let mut seen = [false; 24];
    let mut round_trip = true;
    for g in els {
        let c = group.coset_factorize(g);
        round_trip &= group.element(c) == *g && !seen[c.index()];
        seen[c.index()] = true;
    }
    out.push(Check::new(
        "coset factorization is a bijection",
        round_trip,
        "",
    ));

    let sizes: Vec<usize> = group.class_sizes().values().copied().collect();
    out.push(Check::new(
        "conjugacy class sizes",
        sizes == [8, 6, 6, 3, 1],
        format!("{sizes:?}"),
    ));
}

fn representation_checks(model: &Model<f64>, out: &mut Vec<Check>) {
    let rep = model.representation();
    let group = model.group();
    out.push(Check::new(
        "homomorphism D(pq) = D(p)D(q) (576 pairs)",
        rep.homomorphism_defect() < EXACT_TOLERANCE,
        format!(
            "{:.3e}, word order {:?}",
            rep.homomorphism_defect(),
            rep.word_order()
        ),
    ));
    let orth = rep
        .iter()
        .map(|(_, m)| m.orthogonality_defect())
        .fold(0.0, f64::max);
    out.push(Check::below("orthogonality of D(p)", orth, EXACT_TOLERANCE));

    let mats: Vec<_> = rep.iter().map(|(_, m)| *m).collect();
    let mut sep = f64::INFINITY;
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            sep = sep.min(mats[i].max_abs_diff(&mats[j]));
        }
    }
    out.push(Check::new(
        "faithfulness",
        sep > 1e-6,
        format!("min separation {sep:.3}"),
    ));

    let expected = |c: ConjugacyClass| match c {
        ConjugacyClass::I => 0.0,
        ConjugacyClass::II => 1.0,
        ConjugacyClass::III | ConjugacyClass::IV => -1.0,
        ConjugacyClass::V => 3.0,
    };
    let chi = rep
        .iter()
        .map(|(p, m)| (m.trace() - expected(group.class_of(p))).abs())
        .fold(0.0, f64::max);
    out.push(Check::below(
        "character is a class function",
        chi,
        EXACT_TOLERANCE,
    ));

    let v = base_vector::<f64>();
    let g = group.generator();
    let overlap = [g, g.compose(&g)]
        .iter()
        .map(|h| v.dot(&rep.matrix(h).apply(&v)).abs())
        .fold(0.0, f64::max);
    out.push(Check::below("(v, D(g^l) v) = 0", overlap, EXACT_TOLERANCE));

    let orbit = model.orbit();
    out.push(Check::below(
        "orbit blocks orthonormal",
        orbit.block_orthonormality_defect(),
        PRODUCT_TOLERANCE,
    ));
    out.push(Check::new(
        "orbit is regular (24 distinct vectors)",
        orbit.min_separation() > 1e-6,
        format!("min separation {:.3}", orbit.min_separation()),
    ));
}

fn cg_checks(model: &Model<f64>, out: &mut Vec<Check>) {
    let cg = model.cg();
    out.push(Check::below(
        "C orthogonality",
        cg.orthogonality_defect(),
        EXACT_TOLERANCE,
    ));

    let orbit = model.orbit();
    let mut worst = 0.0f64;
    for a in CosetCoord::all() {
        for b in CosetCoord::all() {
            let (u, w) = (orbit.vector(a), orbit.vector(b));
            let t = tensor(u, w);
            for s in Irrep::ALL {
                for (x, y) in cg
                    .project(&t, s)
                    .iter()
                    .zip(closed_form_projection(u, w, s))
                {
                    worst = worst.max((x - y).abs());
                }
            }
        }
    }
    out.push(Check::below(
        "C rows match closed-form projections",
        worst,
        EXACT_TOLERANCE,
    ));

    let trace = model
        .spectra()
        .map(|s| (s.weighted_trace() - 24.0).abs())
        .fold(0.0, f64::max);
    out.push(Check::below(
        "trace rule 3x_D + 3x_Dt + 2x_D2 + x_D0 = 24",
        trace,
        PRODUCT_TOLERANCE,
    ));

    let mut scalar = 0.0f64;
    for g in model.group().elements() {
        let x = x_operator(model.representation(), g);
        let spec = model.spectrum(g);
        for s in Irrep::ALL {
            for r in s.rows() {
                let row = cg.row(r).0;
                let image = x.apply(&row);
                for k in 0..9 {
                    scalar = scalar.max((image[k] - spec.get(s) * row[k]).abs());
                }
            }
        }
    }
    out.push(Check::below(
        "X acts as x_s on each CG block",
        scalar,
        PRODUCT_TOLERANCE,
    ));
}

fn table_checks(model: &Model<f64>, out: &mut Vec<Check>) {
    for (printed, computed) in EIGENVALUE_TABLE.iter().zip(eigenvalue_table(model)) {
        let coord_ok = (computed.alpha, computed.l) == printed.coord;
        let class_ok = computed.class == printed.class;
        let mut detail = String::new();
        let mut values_ok = true;
        let names = ["D", "Dtilde", "D2", "D0", "max"];
        for ((name, want), got) in names.iter().zip(printed.values).zip(computed.values()) {
            if (got - want).abs() > TABLE_TOLERANCE {
                values_ok = false;
                let _ = write!(detail, " {name}: printed {want:.2}, computed {got:.4};");
            }
        }
        if !coord_ok {
            let _ = write!(detail, " (alpha,l) ({},{})", computed.alpha, computed.l);
        }
        if !class_ok {
            let _ = write!(detail, " class {}", computed.class);
        }
        out.push(Check::new(
            format!(
                "table row {} ({},{})",
                printed.gtilde, printed.coord.0, printed.coord.1
            ),
            coord_ok && class_ok && values_ok,
            detail.trim().to_string(),
        ));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cg::CgMatrix;

    #[test]
    fn structural_checks_pass() {
        let model = Model::<f64>::build().unwrap();
        for c in run_checks(&model) {
            if !c.name.starts_with("table row") {
                assert!(c.passed, "{}: {}", c.name, c.detail);
            }
        }
    }

    #[test]
    fn table_coordinates_and_classes_match() {
        let model = Model::<f64>::build().unwrap();
        for (printed, computed) in EIGENVALUE_TABLE.iter().zip(eigenvalue_table(&model)) {
            assert_eq!((computed.alpha, computed.l), printed.coord);
            assert_eq!(computed.class, printed.class);
        }
    }

    #[test]
    fn corrupted_cg_matrix_is_detected() {
        let mut c = CgMatrix::<f64>::standard();
        c.0 .0[4][2] = -c.0 .0[4][2];
        let model = Model::with_cg(c).unwrap();
        let checks = run_checks(&model);
        let orth = checks.iter().find(|c| c.name == "C orthogonality").unwrap();
        assert!(!orth.passed);
    }
}
