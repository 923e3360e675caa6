//! Text, JSON and CSV renderings of each command's result.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use s4bell::bounds::{
    chsh_classical_bound, chsh_grid_maximum, chsh_quantum_value, classical_bound,
    cycle_decomposition, cycle_lower_bound, CANONICAL_ANGLES,
};
use s4bell::scan::reports_to_csv;
use s4bell::{
    Check, CosetCoord, CycleDecomposition, Irrep, OrbitSet, Report, S4Model, SpectrumRecord,
};

use crate::{Failure, Format};

/// Grid resolution for the CHSH angle search.
const CHSH_GRID: usize = 360;

fn to_json<S: Serialize + ?Sized>(value: &S) -> Result<String, Failure> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| Failure::Runtime(e.to_string()))
}

fn to_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf8 fields")
}

pub fn checks(checks: &[Check], fmt: Format) -> Result<String, Failure> {
    let passed = checks.iter().filter(|c| c.passed).count();
    Ok(match fmt {
        Format::Text => {
            let mut s = String::new();
            for c in checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                let _ = write!(s, "[{tag}] {}", c.name);
                if !c.detail.is_empty() {
                    let _ = write!(s, "  {}", c.detail);
                }
                s.push('\n');
            }
            let _ = writeln!(s, "{passed}/{} checks passed", checks.len());
            s
        }
        Format::Json => to_json(&json!({
            "passed": passed == checks.len(),
            "checks": checks,
        }))?,
        Format::Csv => to_csv(
            &["name", "passed", "detail"],
            &checks
                .iter()
                .map(|c| vec![c.name.clone(), c.passed.to_string(), c.detail.clone()])
                .collect::<Vec<_>>(),
        ),
    })
}

pub fn table(rows: &[SpectrumRecord], fmt: Format) -> Result<String, Failure> {
    Ok(match fmt {
        Format::Text => {
            let mut s = String::from("class  g~      (a,l)   x_D   x_Dt  x_D2  x_D0  max\n");
            for r in rows {
                let [d, dt, d2, d0, max] = r.values();
                let _ = writeln!(
                    s,
                    "{:<6} {}  ({},{})  {d:>5.2} {dt:>5.2} {d2:>5.2} {d0:>5.2} {max:>5.2}",
                    r.class.to_string(),
                    r.gtilde,
                    r.alpha,
                    r.l
                );
            }
            s
        }
        Format::Json => to_json(rows)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in rows {
                w.serialize(r)
                    .map_err(|e| Failure::Runtime(e.to_string()))?;
            }
            String::from_utf8(
                w.into_inner()
                    .map_err(|e| Failure::Runtime(e.to_string()))?,
            )
            .map_err(|e| Failure::Runtime(e.to_string()))?
        }
    })
}

pub fn bound(r: &Report, fmt: Format) -> Result<String, Failure> {
    Ok(match fmt {
        Format::Text => {
            let mut s = String::new();
            let gt: Vec<String> = r.orbit_set.gtildes.iter().map(|g| g.to_string()).collect();
            let _ = writeln!(s, "orbits:            {}", r.orbit_set);
            let _ = writeln!(s, "g~:                {}", gt.join(" "));
            let _ = writeln!(s, "classical bound:   {}", r.classical_bound);
            if let Some(c) = r.cycle_lower_bound {
                let _ = writeln!(s, "cycle lower bound: {c}");
            }
            let sums: Vec<String> = Irrep::ALL
                .iter()
                .map(|i| format!("{i} {:.2}", r.per_irrep_sums[i]))
                .collect();
            let _ = writeln!(s, "irrep sums:        {}", sums.join("  "));
            let _ = writeln!(
                s,
                "quantum bound:     {:.2} ({:.6}, {})",
                r.quantum_bound, r.quantum_bound, r.quantum_arg
            );
            let verdict = if r.violation {
                "VIOLATION"
            } else {
                "no violation"
            };
            let _ = writeln!(
                s,
                "verdict:           {verdict}, ratio {:.2}%",
                100.0 * r.violation_ratio
            );
            s
        }
        Format::Json => to_json(r)?,
        Format::Csv => reports_to_csv([r])?,
    })
}

fn compact(c: CosetCoord) -> String {
    format!("{}{}", c.alpha, c.l)
}

pub fn cycles(model: &S4Model, set: &OrbitSet, fmt: Format) -> Result<String, Failure> {
    let group = model.group();
    let [g1, g2] = [set.gtildes[0], set.gtildes[1]];
    let dec = cycle_decomposition(group, &g1, &g2)?;
    let cb = cycle_lower_bound(group, &g1, &g2)?;
    let b = classical_bound(group, set)?.value;
    Ok(match fmt {
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "orbits {}: {} cycles of length {}",
                set,
                dec.cycles.len(),
                dec.cycle_length
            );
            for (i, c) in dec.cycles.iter().enumerate() {
                let row =
                    |v: Vec<CosetCoord>| v.into_iter().map(compact).collect::<Vec<_>>().join(" ");
                let _ = writeln!(s, "cycle {}", i + 1);
                let _ = writeln!(s, "  A: {}", row(CycleDecomposition::alice_row(c)));
                let _ = writeln!(s, "  B: {}", row(CycleDecomposition::bob_row(c)));
            }
            let _ = writeln!(
                s,
                "cycle lower bound: {} (whole cycles only: {}), classical bound: {b}",
                cb.value, cb.whole_cycle_edges
            );
            s
        }
        Format::Json => to_json(&json!({
            "orbits": set.labels,
            "cycle_length": dec.cycle_length,
            "cycles": dec,
            "cycle_lower_bound": cb,
            "classical_bound": b,
        }))?,
        Format::Csv => {
            let mut rows = Vec::new();
            for (i, c) in dec.cycles.iter().enumerate() {
                for (k, v) in c.iter().enumerate() {
                    rows.push(vec![
                        (i + 1).to_string(),
                        k.to_string(),
                        v.orbit.to_string(),
                        v.alice.to_string(),
                        v.bob.to_string(),
                    ]);
                }
            }
            to_csv(&["cycle", "position", "orbit", "alice", "bob"], &rows)
        }
    })
}

pub fn chsh(fmt: Format) -> Result<String, Failure> {
    let classical = chsh_classical_bound();
    let quantum = chsh_quantum_value(CANONICAL_ANGLES);
    let (grid, angles) = chsh_grid_maximum(CHSH_GRID);
    Ok(match fmt {
        Format::Text => format!(
            "classical {classical}, quantum {quantum:.6}\n\
             angles (a0, a1, b0, b1): {:.4} {:.4} {:.4} {:.4}\n\
             grid maximum ({CHSH_GRID} steps): {grid:.6}\n",
            CANONICAL_ANGLES[0], CANONICAL_ANGLES[1], CANONICAL_ANGLES[2], CANONICAL_ANGLES[3]
        ),
        Format::Json => to_json(&json!({
            "classical": classical,
            "quantum": quantum,
            "angles": CANONICAL_ANGLES,
            "grid_steps": CHSH_GRID,
            "grid_maximum": grid,
            "grid_angles": angles,
        }))?,
        Format::Csv => to_csv(
            &["quantity", "value"],
            &[
                vec!["classical".into(), format!("{classical:?}")],
                vec!["quantum".into(), format!("{quantum:?}")],
                vec!["grid_maximum".into(), format!("{grid:?}")],
            ],
        ),
    })
}
