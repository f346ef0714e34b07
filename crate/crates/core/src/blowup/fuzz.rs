use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::rules::blowup_with;
use super::{admissible_centers, BlowupError, BlowupReport, CaseLabel};
use crate::fixed_locus::{Configuration, PointComponent};
use crate::invariants::{evaluate_value, is_applicable, InvariantKind, InvariantValue};
use crate::symbol_groups::{build_presentation, DualGroup, Presentation, DEFAULT_BUDGET};

#[derive(Clone, Debug)]
pub struct FuzzOptions {
    pub steps: usize,
    /// Seeds a ChaCha8 stream; each step draws one uniform index into the
    /// admissible centers.
    pub seed: u64,
    pub checks: Vec<InvariantKind>,
    /// Generator budget for the `beta` presentation.
    pub budget: usize,
    /// Test hook: after every application of this rule, add a stray fixed
    /// point so that the run must drift.
    pub fault: Option<CaseLabel>,
}

impl FuzzOptions {
    pub fn new(steps: usize, seed: u64, checks: Vec<InvariantKind>) -> Self {
        Self {
            steps,
            seed,
            checks,
            budget: DEFAULT_BUDGET,
            fault: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub step: usize,
    pub case: CaseLabel,
    pub values: BTreeMap<String, InvariantValue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Drift {
    pub step: usize,
    pub kind: InvariantKind,
    pub expected: InvariantValue,
    pub found: InvariantValue,
    pub report: Box<BlowupReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzReport {
    pub format_version: u32,
    pub seed: u64,
    pub steps_requested: usize,
    pub steps_run: usize,
    pub histogram: BTreeMap<String, usize>,
    pub initial: BTreeMap<String, InvariantValue>,
    #[serde(rename = "final")]
    pub final_values: BTreeMap<String, InvariantValue>,
    pub history: Vec<StepRecord>,
    pub drift: Option<Drift>,
}

fn values(
    c: &Configuration,
    checks: &[InvariantKind],
    pres: Option<&Presentation>,
) -> Result<BTreeMap<String, InvariantValue>, BlowupError> {
    let mut out = BTreeMap::new();
    for k in checks {
        out.insert(k.to_string(), evaluate_value(c, k, pres)?);
    }
    Ok(out)
}

/// Applies `steps` random admissible blowups and compares every checked
/// invariant with its initial value after each step. Stops at the first
/// drift.
pub fn fuzz_sequence(c: &Configuration, opts: &FuzzOptions) -> Result<FuzzReport, BlowupError> {
    let violations = c.validate();
    if !violations.is_empty() {
        let text: Vec<String> = violations.iter().map(ToString::to_string).collect();
        return Err(BlowupError::InvalidConfiguration(text.join("; ")));
    }
    for k in &opts.checks {
        if !is_applicable(c, k) {
            return Err(BlowupError::CheckNotApplicable {
                kind: k.to_string(),
                reason: format!("configuration has dim={} and p={}", c.dim, c.group.p),
            });
        }
    }
    let pres = if opts.checks.contains(&InvariantKind::Beta) {
        let group = DualGroup::cyclic(c.p())?;
        Some(build_presentation(&group, usize::from(c.dim), opts.budget)?)
    } else {
        None
    };
    let pres = pres.as_ref();

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut current = c.clone().canonical();
    let initial = values(&current, &opts.checks, pres)?;
    let mut report = FuzzReport {
        format_version: crate::fixed_locus::FORMAT_VERSION,
        seed: opts.seed,
        steps_requested: opts.steps,
        steps_run: 0,
        histogram: BTreeMap::new(),
        initial: initial.clone(),
        final_values: initial.clone(),
        history: Vec::new(),
        drift: None,
    };

    for step in 1..=opts.steps {
        let centers = admissible_centers(&current);
        if centers.is_empty() {
            return Err(BlowupError::NoCenters);
        }
        let center = &centers[rng.gen_range(0..centers.len())];
        let mut applied = blowup_with(&current, center, pres)?;
        if opts.fault == Some(applied.case) {
            let w = if current.dim == 3 {
                vec![1, 1, current.p() - 1]
            } else {
                vec![1, 1]
            };
            applied.after.points.push(PointComponent::new(w));
            applied.after.canonicalize();
        }
        let now = values(&applied.after, &opts.checks, pres)?;
        *report
            .histogram
            .entry(applied.case.to_string())
            .or_insert(0) += 1;
        report.steps_run = step;
        report.history.push(StepRecord {
            step,
            case: applied.case,
            values: now.clone(),
        });
        report.final_values = now.clone();
        let drifted = opts
            .checks
            .iter()
            .find(|k| now[&k.to_string()] != initial[&k.to_string()]);
        if let Some(kind) = drifted {
            let key = kind.to_string();
            report.drift = Some(Drift {
                step,
                kind: kind.clone(),
                expected: initial[&key].clone(),
                found: now[&key].clone(),
                report: Box::new(applied),
            });
            break;
        }
        current = applied.after;
    }
    Ok(report)
}
