use serde::{Deserialize, Serialize};

use super::{feasibility, AtomCatalog, AtomError, AtomRecord, FeasibilityResult};

/// An atom of the variety with the atoms its decomposition must contain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomUnderTest {
    pub label: String,
    pub atom: AtomRecord,
    #[serde(default)]
    pub forced: Vec<AtomRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum AtomOutcome {
    Unobstructed { witness: Vec<u64> },
    Obstructed { result: FeasibilityResult },
    Inconsistent { component: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionEntry {
    pub label: String,
    pub vector: Vec<i64>,
    pub forced: Vec<i64>,
    pub remainder: Vec<i64>,
    pub outcome: AtomOutcome,
    pub narrative: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub basis: Vec<(String, Vec<i64>)>,
    pub entries: Vec<ObstructionEntry>,
    pub obstructed: bool,
}

fn show(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// For each atom, subtracts the `(ρ, ρ^G)` of its forced atoms and asks
/// whether the remainder is a nonnegative combination of the catalog's
/// point atoms.
pub fn obstruction_report(
    atoms: &[AtomUnderTest],
    catalog: &AtomCatalog,
) -> Result<ObstructionReport, AtomError> {
    let points = catalog.point_atoms();
    let basis: Vec<Vec<i64>> = points.iter().map(|e| e.atom.rho_vector()).collect();
    let names: Vec<String> = points.iter().map(|e| e.name.clone()).collect();
    let terms: Vec<String> = basis
        .iter()
        .zip(["a", "b", "c", "d", "e", "f"].iter().cycle())
        .map(|(v, c)| format!("{c}{}", show(v)))
        .collect();

    let mut entries = Vec::new();
    for t in atoms {
        let vector = t.atom.rho_vector();
        let mut forced = vec![0i64; 2];
        for f in &t.forced {
            for (acc, x) in forced.iter_mut().zip(f.rho_vector()) {
                *acc += x;
            }
        }
        let remainder: Vec<i64> = vector.iter().zip(&forced).map(|(a, b)| a - b).collect();
        let prefix = if t.forced.is_empty() {
            format!("{}: {}", t.label, show(&vector))
        } else {
            format!(
                "{}: {} - {} = {}",
                t.label,
                show(&vector),
                show(&forced),
                show(&remainder)
            )
        };
        let (outcome, narrative) = if let Some(j) = remainder.iter().position(|&x| x < 0) {
            (
                AtomOutcome::Inconsistent { component: j },
                format!("{prefix}; forced atoms exceed the atom, inconsistent input"),
            )
        } else {
            let result = feasibility(&remainder, &basis, &[])?;
            match result.witness.clone() {
                Some(w) => {
                    let used: Vec<String> = w
                        .iter()
                        .zip(&names)
                        .filter(|(k, _)| **k > 0)
                        .map(|(k, n)| format!("{k} x {n}"))
                        .collect();
                    let used = if used.is_empty() {
                        "nothing".to_string()
                    } else {
                        used.join(" + ")
                    };
                    (
                        AtomOutcome::Unobstructed { witness: w },
                        format!("{prefix} = {used}"),
                    )
                }
                None => (
                    AtomOutcome::Obstructed { result },
                    format!(
                        "{prefix}; impossible to write {} = {} with nonnegative integers",
                        show(&remainder),
                        terms.join(" + ")
                    ),
                ),
            }
        };
        entries.push(ObstructionEntry {
            label: t.label.clone(),
            vector,
            forced,
            remainder,
            outcome,
            narrative,
        });
    }
    let obstructed = entries
        .iter()
        .any(|e| matches!(e.outcome, AtomOutcome::Obstructed { .. }));
    Ok(ObstructionReport {
        basis: names.into_iter().zip(basis).collect(),
        entries,
        obstructed,
    })
}
